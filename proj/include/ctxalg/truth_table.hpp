#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ctxalg/error.hpp"
#include "ctxalg/formula.hpp"

namespace ctxalg {

/// An assignment of truth values to atom names.
using Valuation = std::map<std::string, bool>;

/// Plain recursive evaluation of a formula under one valuation. Every atom
/// of the formula must be assigned. This is the reference semantics; the
/// bitset path below is cross-checked against it in the tests.
inline bool evaluate(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = v.find(f.atom_name());
      if (it == v.end()) throw InputError("unknown atom '" + f.atom_name() + "'");
      return it->second;
    }
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Not: return !evaluate(f.child(), v);
    case Formula::Kind::And: return evaluate(f.lhs(), v) && evaluate(f.rhs(), v);
    case Formula::Kind::Or: return evaluate(f.lhs(), v) || evaluate(f.rhs(), v);
  }
  return false;
}

/// The set of satisfying valuations of a formula over a fixed ordered atom
/// list, stored as a bitset over all 2^n valuations. Valuation index v
/// assigns atom i the bit (v >> i) & 1. Entailment is subset inclusion.
class TruthTable {
public:
  static constexpr std::size_t kMaxAtoms = 20;

  TruthTable(const Formula& f, const std::vector<std::string>& atoms) {
    if (atoms.size() > kMaxAtoms)
      throw InputError("atom limit exceeded: " + std::to_string(atoms.size()) +
                       " atoms, at most " + std::to_string(kMaxAtoms) + " supported");
    atom_count_ = atoms.size();
    const std::size_t rows = std::size_t{1} << atom_count_;
    blocks_.resize((rows + 63) / 64, 0);
    build(f, atoms);
    mask_tail(rows);
  }

  std::size_t atom_count() const { return atom_count_; }

  bool satisfiable() const {
    for (auto b : blocks_)
      if (b) return true;
    return false;
  }

  bool tautology() const {
    const std::size_t rows = std::size_t{1} << atom_count_;
    TruthTable ones = *this;
    for (auto& b : ones.blocks_) b = ~std::uint64_t{0};
    ones.mask_tail(rows);
    return blocks_ == ones.blocks_;
  }

  /// Every satisfying valuation of *this also satisfies `other`.
  bool subset_of(const TruthTable& other) const {
    require_same_atoms(other);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & ~other.blocks_[i]) return false;
    return true;
  }

  bool operator==(const TruthTable& other) const {
    return atom_count_ == other.atom_count_ && blocks_ == other.blocks_;
  }

  bool row(std::size_t valuation_index) const {
    return (blocks_[valuation_index / 64] >> (valuation_index % 64)) & 1u;
  }

private:
  void require_same_atoms(const TruthTable& other) const {
    if (atom_count_ != other.atom_count_)
      throw InputError("truth tables built over different atom lists");
  }

  void build(const Formula& f, const std::vector<std::string>& atoms) {
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        std::size_t index = atoms.size();
        for (std::size_t i = 0; i < atoms.size(); ++i)
          if (atoms[i] == f.atom_name()) {
            index = i;
            break;
          }
        if (index == atoms.size())
          throw InputError("unknown atom '" + f.atom_name() + "'");
        fill_atom(index);
        break;
      }
      case Formula::Kind::Top:
        for (auto& b : blocks_) b = ~std::uint64_t{0};
        break;
      case Formula::Kind::Bot:
        break;  // all zero already
      case Formula::Kind::Not: {
        TruthTable sub(f.child(), atoms);
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] = ~sub.blocks_[i];
        break;
      }
      case Formula::Kind::And: {
        TruthTable l(f.lhs(), atoms), r(f.rhs(), atoms);
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] = l.blocks_[i] & r.blocks_[i];
        break;
      }
      case Formula::Kind::Or: {
        TruthTable l(f.lhs(), atoms), r(f.rhs(), atoms);
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] = l.blocks_[i] | r.blocks_[i];
        break;
      }
    }
  }

  void fill_atom(std::size_t atom_index) {
    if (atom_index >= 6) {
      // Bit patterns repeat in whole 64-bit blocks.
      const std::size_t period = atom_index - 6;
      for (std::size_t b = 0; b < blocks_.size(); ++b)
        blocks_[b] = ((b >> period) & 1u) ? ~std::uint64_t{0} : 0;
      return;
    }
    // Within a block: alternating runs of 2^atom_index bits.
    std::uint64_t pattern = 0;
    const std::size_t run = std::size_t{1} << atom_index;
    for (std::size_t bit = 0; bit < 64; ++bit)
      if ((bit / run) % 2 == 1) pattern |= std::uint64_t{1} << bit;
    for (auto& b : blocks_) b = pattern;
  }

  void mask_tail(std::size_t rows) {
    const std::size_t used = rows % 64;
    if (used != 0) blocks_.back() &= (std::uint64_t{1} << used) - 1;
  }

  std::size_t atom_count_ = 0;
  std::vector<std::uint64_t> blocks_;
};

namespace detail {

inline void require_known_atoms(const Formula& f, const std::vector<std::string>& atoms) {
  for (const auto& a : atoms_of(f)) {
    bool found = false;
    for (const auto& known : atoms)
      if (known == a) {
        found = true;
        break;
      }
    if (!found) throw InputError("unknown atom '" + a + "'");
  }
}

}  // namespace detail

/// Classical consequence by exhaustive truth tables: true iff every
/// valuation of `atoms` satisfying u satisfies v. At most 20 atoms.
inline bool entails(const Formula& u, const Formula& v, const std::vector<std::string>& atoms) {
  detail::require_known_atoms(u, atoms);
  detail::require_known_atoms(v, atoms);
  return TruthTable(u, atoms).subset_of(TruthTable(v, atoms));
}

/// Mutual entailment.
inline bool equivalent(const Formula& u, const Formula& v, const std::vector<std::string>& atoms) {
  detail::require_known_atoms(u, atoms);
  detail::require_known_atoms(v, atoms);
  return TruthTable(u, atoms) == TruthTable(v, atoms);
}

inline bool satisfiable(const Formula& u, const std::vector<std::string>& atoms) {
  detail::require_known_atoms(u, atoms);
  return TruthTable(u, atoms).satisfiable();
}

}  // namespace ctxalg
