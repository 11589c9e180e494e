#pragma once

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctxalg/error.hpp"

namespace ctxalg {

/// True for [A-Za-z_][A-Za-z0-9_]* excluding the reserved literals
/// `true` and `false`.
inline bool is_valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (name == "true" || name == "false") return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && name.front() != '_') return false;
  for (char c : name.substr(1)) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_') return false;
  }
  return true;
}

/// Immutable propositional formula: atoms, the constants true and false,
/// negation, conjunction and disjunction. Copies share structure; equality
/// is structural (no simplification ever happens behind your back).
class Formula {
public:
  enum class Kind { Atom, Top, Bot, Not, And, Or };

  static Formula atom(std::string name) {
    if (!is_valid_atom_name(name))
      throw InputError("invalid atom name '" + name + "'");
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
  }
  static Formula top() {
    return Formula(std::make_shared<const Node>(Node{Kind::Top, {}, nullptr, nullptr}));
  }
  static Formula bot() {
    return Formula(std::make_shared<const Node>(Node{Kind::Bot, {}, nullptr, nullptr}));
  }
  static Formula negation(const Formula& f) {
    return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, f.node_, nullptr}));
  }
  static Formula conjunction(const Formula& lhs, const Formula& rhs) {
    return Formula(std::make_shared<const Node>(Node{Kind::And, {}, lhs.node_, rhs.node_}));
  }
  static Formula disjunction(const Formula& lhs, const Formula& rhs) {
    return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, lhs.node_, rhs.node_}));
  }

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }

  Formula child() const { return Formula(node_->a); }  // Not
  Formula lhs() const { return Formula(node_->a); }    // And / Or
  Formula rhs() const { return Formula(node_->b); }

  std::size_t depth() const { return node_depth(node_.get()); }
  std::size_t node_count() const { return count_nodes(node_.get()); }

  friend bool operator==(const Formula& x, const Formula& y) {
    return equal_nodes(x.node_.get(), y.node_.get());
  }
  friend bool operator!=(const Formula& x, const Formula& y) { return !(x == y); }

private:
  struct Node {
    Kind kind;
    std::string name;                    // Atom only
    std::shared_ptr<const Node> a, b;    // children
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static bool equal_nodes(const Node* x, const Node* y) {
    if (x == y) return true;
    if (x->kind != y->kind) return false;
    switch (x->kind) {
      case Kind::Atom: return x->name == y->name;
      case Kind::Top:
      case Kind::Bot: return true;
      case Kind::Not: return equal_nodes(x->a.get(), y->a.get());
      case Kind::And:
      case Kind::Or:
        return equal_nodes(x->a.get(), y->a.get()) && equal_nodes(x->b.get(), y->b.get());
    }
    return false;
  }

  static std::size_t node_depth(const Node* n) {
    switch (n->kind) {
      case Kind::Atom:
      case Kind::Top:
      case Kind::Bot: return 0;
      case Kind::Not: return 1 + node_depth(n->a.get());
      case Kind::And:
      case Kind::Or: return 1 + std::max(node_depth(n->a.get()), node_depth(n->b.get()));
    }
    return 0;
  }

  static std::size_t count_nodes(const Node* n) {
    switch (n->kind) {
      case Kind::Atom:
      case Kind::Top:
      case Kind::Bot: return 1;
      case Kind::Not: return 1 + count_nodes(n->a.get());
      case Kind::And:
      case Kind::Or: return 1 + count_nodes(n->a.get()) + count_nodes(n->b.get());
    }
    return 1;
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

// Precedence: ~ binds tighter than &, & tighter than |. & and | associate
// to the left, so a right child at the same level needs parentheses to
// survive a print/parse round trip unchanged.
inline int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    default: return 3;
  }
}

inline void print_formula(const Formula& f, int parent_prec, bool right_child, std::string& out) {
  const int prec = precedence(f.kind());
  const bool parens = prec < parent_prec || (right_child && prec == parent_prec && parent_prec <= 2);
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Atom: out += f.atom_name(); break;
    case Formula::Kind::Top: out += "true"; break;
    case Formula::Kind::Bot: out += "false"; break;
    case Formula::Kind::Not:
      out += '~';
      print_formula(f.child(), 3, false, out);
      break;
    case Formula::Kind::And:
      print_formula(f.lhs(), 2, false, out);
      out += " & ";
      print_formula(f.rhs(), 2, true, out);
      break;
    case Formula::Kind::Or:
      print_formula(f.lhs(), 1, false, out);
      out += " | ";
      print_formula(f.rhs(), 1, true, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

/// Renders with the minimal parentheses needed for an exact round trip
/// through parse_formula. Injective on formula trees.
inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print_formula(f, 0, false, out);
  return out;
}

inline void append_atoms(const Formula& f, std::vector<std::string>& out,
                         std::set<std::string>& seen) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      if (seen.insert(f.atom_name()).second) out.push_back(f.atom_name());
      break;
    case Formula::Kind::Top:
    case Formula::Kind::Bot: break;
    case Formula::Kind::Not: append_atoms(f.child(), out, seen); break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      append_atoms(f.lhs(), out, seen);
      append_atoms(f.rhs(), out, seen);
      break;
  }
}

/// Atom names occurring in f, sorted.
inline std::set<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  append_atoms(f, order, seen);
  return seen;
}

}  // namespace ctxalg
