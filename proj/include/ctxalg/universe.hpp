#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctxalg/error.hpp"
#include "ctxalg/formula.hpp"
#include "ctxalg/truth_table.hpp"

namespace ctxalg {

struct UniverseOptions {
  /// Require a member equivalent to `true` and one equivalent to `false`.
  /// File loading and closure construction keep this on; tests that study
  /// restricted universes may turn it off.
  bool require_constants = true;
};

/// A finite ordered set of formulas with its entailment relation cached as
/// a boolean matrix. Members must be pairwise distinct as trees; logically
/// equivalent members may coexist under different spellings.
class Universe {
public:
  static std::shared_ptr<const Universe> make(std::vector<Formula> formulas,
                                              std::vector<std::string> atoms,
                                              UniverseOptions options = {}) {
    return std::shared_ptr<const Universe>(
        new Universe(std::move(formulas), std::move(atoms), options));
  }

  std::size_t size() const { return formulas_.size(); }
  const std::vector<Formula>& formulas() const { return formulas_; }
  const Formula& formula(std::size_t i) const { return formulas_.at(i); }
  const std::vector<std::string>& atoms() const { return atoms_; }

  /// Cached ⊢ between members: formulas[i] entails formulas[j].
  bool member_entails(std::size_t i, std::size_t j) const {
    return entail_matrix_[i * formulas_.size() + j];
  }

  bool member_satisfiable(std::size_t i) const { return tables_[i].satisfiable(); }

  const TruthTable& member_table(std::size_t i) const { return tables_[i]; }

  /// Truth table of an arbitrary formula over this universe's atoms.
  TruthTable table_of(const Formula& f) const {
    detail::require_known_atoms(f, atoms_);
    return TruthTable(f, atoms_);
  }

  /// Index of a syntactically identical member, if present.
  std::optional<std::size_t> index_of(const Formula& f) const {
    auto it = index_.find(to_string(f));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Indices of the members that entail u. u's atoms must be known to the
  /// universe; u itself need not be a member.
  std::vector<std::size_t> down_set(const Formula& u) const {
    TruthTable target = table_of(u);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < formulas_.size(); ++i)
      if (tables_[i].subset_of(target)) out.push_back(i);
    return out;
  }

  /// Content hash over atoms and member spellings; stable across runs and
  /// loads. Used to tag serialized operators and to detect mismatches.
  std::uint64_t hash() const { return hash_; }

  std::string hash_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    std::uint64_t h = hash_;
    for (std::size_t i = 16; i-- > 0;) {
      out[i] = digits[h & 0xf];
      h >>= 4;
    }
    return out;
  }

private:
  Universe(std::vector<Formula> formulas, std::vector<std::string> atoms,
           UniverseOptions options)
      : formulas_(std::move(formulas)), atoms_(std::move(atoms)) {
    validate_atoms();
    for (std::size_t i = 0; i < formulas_.size(); ++i) {
      std::string key = to_string(formulas_[i]);
      if (!index_.emplace(key, i).second)
        throw InputError("duplicate universe member '" + key + "'");
      tables_.emplace_back(formulas_[i], atoms_);
    }
    if (options.require_constants) {
      bool has_top = false, has_bot = false;
      for (const auto& t : tables_) {
        if (t.tautology()) has_top = true;
        if (!t.satisfiable()) has_bot = true;
      }
      if (!has_top)
        throw InputError("universe lacks a member equivalent to true");
      if (!has_bot)
        throw InputError("universe lacks a member equivalent to false");
    }
    entail_matrix_.resize(formulas_.size() * formulas_.size());
    for (std::size_t i = 0; i < formulas_.size(); ++i)
      for (std::size_t j = 0; j < formulas_.size(); ++j)
        entail_matrix_[i * formulas_.size() + j] = tables_[i].subset_of(tables_[j]);
    hash_ = compute_hash();
  }

  void validate_atoms() const {
    if (atoms_.size() > TruthTable::kMaxAtoms)
      throw InputError("atom limit exceeded: " + std::to_string(atoms_.size()) +
                       " atoms, at most " + std::to_string(TruthTable::kMaxAtoms) + " supported");
    std::set<std::string> seen;
    for (const auto& a : atoms_) {
      if (!is_valid_atom_name(a)) throw InputError("invalid atom name '" + a + "'");
      if (!seen.insert(a).second) throw InputError("duplicate atom '" + a + "'");
    }
    for (const auto& f : formulas_) detail::require_known_atoms(f, atoms_);
  }

  std::uint64_t compute_hash() const {
    // FNV-1a over atoms and canonical member spellings.
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::string_view s) {
      for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
      }
      h ^= 0x1f;
      h *= 0x100000001b3ull;
    };
    for (const auto& a : atoms_) mix(a);
    mix(";");
    for (const auto& f : formulas_) mix(to_string(f));
    return h;
  }

  std::vector<Formula> formulas_;
  std::vector<std::string> atoms_;
  std::vector<TruthTable> tables_;
  std::vector<bool> entail_matrix_;
  std::map<std::string, std::size_t> index_;
  std::uint64_t hash_ = 0;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// Free-function spelling of Universe::down_set.
inline std::vector<std::size_t> down_set(const Formula& u, const Universe& universe) {
  return universe.down_set(u);
}

/// Builds a universe from seed formulas: true and false first, then the
/// seeds, then every ~ / & / | combination nested up to `depth`, in
/// deterministic order (per level: all negations in operand order, then all
/// ordered operand pairs row-major, & before | for each pair). Duplicates
/// are dropped syntactically. If the deduplicated total exceeds `cap`, the
/// full count is reported in a CapExceededError and nothing is built.
inline UniversePtr close_universe(const std::vector<Formula>& seeds, std::size_t depth,
                                  std::size_t cap) {
  if (cap < seeds.size() + 2)
    throw InputError("cap must be at least the seed count plus 2");

  std::vector<std::string> atoms;
  std::set<std::string> seen_atoms;
  for (const auto& s : seeds) append_atoms(s, atoms, seen_atoms);

  std::vector<Formula> members{Formula::top(), Formula::bot()};
  std::set<std::string> seen{to_string(members[0]), to_string(members[1])};
  auto add = [&members, &seen](const Formula& f) {
    if (seen.insert(to_string(f)).second) members.push_back(f);
  };

  std::vector<Formula> pool;
  std::set<std::string> pool_seen;
  for (const auto& s : seeds) {
    add(s);
    if (pool_seen.insert(to_string(s)).second) pool.push_back(s);
  }

  for (std::size_t level = 0; level < depth; ++level) {
    const std::vector<Formula> base = pool;
    auto extend = [&](const Formula& f) {
      add(f);
      if (pool_seen.insert(to_string(f)).second) pool.push_back(f);
    };
    for (const auto& u : base) extend(Formula::negation(u));
    for (const auto& u : base)
      for (const auto& v : base) {
        extend(Formula::conjunction(u, v));
        extend(Formula::disjunction(u, v));
      }
  }

  if (members.size() > cap) throw CapExceededError(members.size(), cap);
  return Universe::make(std::move(members), std::move(atoms));
}

}  // namespace ctxalg
