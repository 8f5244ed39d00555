#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kripkelab {

/// Propositional formula over T, F, atoms, &, | and ->.
///
/// Formulas are immutable and share structure, so copies are cheap and
/// values may be read from several threads at once. Negation is not a
/// node kind: `Not(a)` builds `Imp(a, Bottom)`.
class Formula {
 public:
  enum class Kind : std::uint8_t { kTop, kBottom, kAtom, kAnd, kOr, kImp };

  static Formula Top();
  static Formula Bottom();
  static Formula Atom(std::string name);
  static Formula And(Formula left, Formula right);
  static Formula Or(Formula left, Formula right);
  static Formula Imp(Formula left, Formula right);
  static Formula Not(Formula operand);

  Kind kind() const noexcept;
  bool is_binary() const noexcept;
  /// True for Imp(A, Bottom), which prints as ~A.
  bool is_negation() const noexcept;

  /// Atom name. Empty for every other kind.
  const std::string& name() const noexcept;
  /// Operands of a binary node. Calling these on a leaf is a logic error.
  Formula left() const;
  Formula right() const;

  /// Number of nodes.
  std::size_t size() const noexcept;
  /// Nesting depth; leaves have depth 0.
  std::size_t depth() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

  // Implementation detail, defined in formula.cpp.
  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

using Substitution = std::map<std::string, Formula, std::less<>>;

/// Parses the ASCII syntax
///
///   formula  := imp
///   imp      := or ("->" imp)?
///   or       := and ("|" and)*
///   and      := neg ("&" neg)*
///   neg      := "~" neg | atomexpr
///   atomexpr := "T" | "F" | ident | "(" formula ")"
///
/// Throws SyntaxError with a 1-based position on malformed input.
Formula parse(std::string_view text);

/// Inverse of parse() with minimal parentheses; Imp(A, F) prints as ~A.
std::string render(const Formula& f);

/// Constructor-style dump, e.g. "Imp(Atom(p), Bottom)".
std::string render_ast(const Formula& f);

/// Simultaneous substitution. Atoms without an entry map to themselves.
Formula substitute(const Formula& schema, const Substitution& assignment);

std::set<std::string> atoms(const Formula& f);

/// Distinct subformulas in post-order, keeping the first occurrence of each.
std::vector<Formula> subformulas(const Formula& f);

}  // namespace kripkelab
