#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace posslog {

enum class Kind : std::uint8_t { Atom, Not, And, Or, Implies };

// Immutable propositional formula. Nodes are interned, so copies are cheap
// and equality is syntactic identity in O(1). There is deliberately no
// normalization of any kind: the paraconsistent backend is not closed under
// replacement of equivalents, so (p & q) and (q & p) stay distinct objects.
class Formula {
 public:
  static Formula atom(std::string_view name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Kind kind() const;
  const std::string& atom_name() const;  // Atom only
  Formula child() const;                 // Not only
  Formula left() const;                  // And/Or/Implies
  Formula right() const;                 // And/Or/Implies

  // Node count; proper subformulas are strictly smaller.
  std::size_t size() const;
  // Deterministic structural hash (stable across runs and platforms).
  std::size_t hash() const;

  friend bool operator==(Formula a, Formula b) { return a.node_ == b.node_; }
  friend bool operator!=(Formula a, Formula b) { return a.node_ != b.node_; }

  struct Node;  // opaque; defined in formula.cpp

 private:
  explicit Formula(const Node* node) : node_(node) {}
  const Node* node_;
  friend class FormulaInterner;
};

struct FormulaHash {
  std::size_t operator()(Formula f) const { return f.hash(); }
};

// Deterministic total order: node count first, then rendered text.
bool structural_less(Formula a, Formula b);

struct FormulaLess {
  bool operator()(Formula a, Formula b) const { return structural_less(a, b); }
};

// !(f & !f), the formula asserting that f behaves classically.
Formula expand_circ(Formula f);

std::set<std::string> atoms(Formula f);
void collect_atoms(Formula f, std::set<std::string>& out);

// ASCII rendering with explicit parentheses around every binary connective;
// parse(render(f)) == f.
std::string render(Formula f);

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  // what() becomes "<file>:<line>:<column>: <message>".
  ParseError(const std::string& file, const std::string& message, std::size_t line,
             std::size_t column);
  std::string message;  // without the position prefix
  std::size_t line;
  std::size_t column;
};

// Grammar: atoms [A-Za-z_][A-Za-z0-9_-]*; ! & | -> <-> postfix ^; parentheses;
// '#' starts a line comment. '<->' and '^' are desugared at parse time, so the
// result uses only the five Kind constructors.
Formula parse_formula(std::string_view text);

// One formula per non-empty line; '#' comments. Line numbers in errors are
// relative to `text` plus `first_line`.
std::vector<Formula> parse_formula_lines(std::string_view text, std::size_t first_line = 1);

}  // namespace posslog
