#include "kripkelab/formula.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace kripkelab {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  std::size_t size;
  std::size_t depth;
};

namespace {

std::shared_ptr<const Formula::Node> const& top_node() {
  static const auto node =
      std::make_shared<const Formula::Node>(Formula::Node{Formula::Kind::kTop, {}, {}, {}, 1, 0});
  return node;
}

std::shared_ptr<const Formula::Node> const& bottom_node() {
  static const auto node = std::make_shared<const Formula::Node>(
      Formula::Node{Formula::Kind::kBottom, {}, {}, {}, 1, 0});
  return node;
}

}  // namespace

Formula Formula::Top() { return Formula(top_node()); }

Formula Formula::Bottom() { return Formula(bottom_node()); }

Formula Formula::Atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::kAtom, std::move(name), {}, {}, 1, 0}));
}

namespace {

template <typename NodeT>
std::shared_ptr<const NodeT> make_binary(typename Formula::Kind kind,
                                         std::shared_ptr<const NodeT> left,
                                         std::shared_ptr<const NodeT> right) {
  const std::size_t size = 1 + left->size + right->size;
  const std::size_t depth = 1 + std::max(left->depth, right->depth);
  return std::make_shared<const NodeT>(
      NodeT{kind, {}, std::move(left), std::move(right), size, depth});
}

}  // namespace

Formula Formula::And(Formula left, Formula right) {
  return Formula(make_binary(Kind::kAnd, std::move(left.node_), std::move(right.node_)));
}

Formula Formula::Or(Formula left, Formula right) {
  return Formula(make_binary(Kind::kOr, std::move(left.node_), std::move(right.node_)));
}

Formula Formula::Imp(Formula left, Formula right) {
  return Formula(make_binary(Kind::kImp, std::move(left.node_), std::move(right.node_)));
}

Formula Formula::Not(Formula operand) { return Imp(std::move(operand), Bottom()); }

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_binary() const noexcept {
  return node_->kind == Kind::kAnd || node_->kind == Kind::kOr || node_->kind == Kind::kImp;
}

bool Formula::is_negation() const noexcept {
  return node_->kind == Kind::kImp && node_->right->kind == Kind::kBottom;
}

const std::string& Formula::name() const noexcept { return node_->name; }

Formula Formula::left() const {
  assert(is_binary());
  return Formula(node_->left);
}

Formula Formula::right() const {
  assert(is_binary());
  return Formula(node_->right);
}

std::size_t Formula::size() const noexcept { return node_->size; }

std::size_t Formula::depth() const noexcept { return node_->depth; }

namespace {

bool equal_nodes(const Formula::Node* a, const Formula::Node* b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->size != b->size) return false;
  switch (a->kind) {
    case Formula::Kind::kTop:
    case Formula::Kind::kBottom:
      return true;
    case Formula::Kind::kAtom:
      return a->name == b->name;
    default:
      return equal_nodes(a->left.get(), b->left.get()) &&
             equal_nodes(a->right.get(), b->right.get());
  }
}

}  // namespace

bool operator==(const Formula& a, const Formula& b) noexcept {
  return equal_nodes(a.node_.get(), b.node_.get());
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength; higher binds tighter.
enum Level : int { kImpLevel = 1, kOrLevel = 2, kAndLevel = 3, kUnaryLevel = 4 };

int level_of(const Formula& f) {
  if (f.is_negation()) return kUnaryLevel;
  switch (f.kind()) {
    case Formula::Kind::kImp:
      return kImpLevel;
    case Formula::Kind::kOr:
      return kOrLevel;
    case Formula::Kind::kAnd:
      return kAndLevel;
    default:
      return kUnaryLevel;
  }
}

void render_into(const Formula& f, int min_level, std::string& out) {
  const int level = level_of(f);
  const bool parens = level < min_level;
  if (parens) out += '(';

  if (f.is_negation()) {
    out += '~';
    render_into(f.left(), kUnaryLevel, out);
  } else {
    switch (f.kind()) {
      case Formula::Kind::kTop:
        out += 'T';
        break;
      case Formula::Kind::kBottom:
        out += 'F';
        break;
      case Formula::Kind::kAtom:
        out += f.name();
        break;
      case Formula::Kind::kImp:
        // right-associative
        render_into(f.left(), kImpLevel + 1, out);
        out += " -> ";
        render_into(f.right(), kImpLevel, out);
        break;
      case Formula::Kind::kOr:
        render_into(f.left(), kOrLevel, out);
        out += " | ";
        render_into(f.right(), kOrLevel + 1, out);
        break;
      case Formula::Kind::kAnd:
        render_into(f.left(), kAndLevel, out);
        out += " & ";
        render_into(f.right(), kAndLevel + 1, out);
        break;
    }
  }

  if (parens) out += ')';
}

void render_ast_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kTop:
      out += "Top";
      return;
    case Formula::Kind::kBottom:
      out += "Bottom";
      return;
    case Formula::Kind::kAtom:
      out += "Atom(" + f.name() + ")";
      return;
    case Formula::Kind::kAnd:
      out += "And(";
      break;
    case Formula::Kind::kOr:
      out += "Or(";
      break;
    case Formula::Kind::kImp:
      out += "Imp(";
      break;
  }
  render_ast_into(f.left(), out);
  out += ", ";
  render_ast_into(f.right(), out);
  out += ')';
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, kImpLevel, out);
  return out;
}

std::string render_ast(const Formula& f) {
  std::string out;
  render_ast_into(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Structural operations

Formula substitute(const Formula& schema, const Substitution& assignment) {
  switch (schema.kind()) {
    case Formula::Kind::kTop:
    case Formula::Kind::kBottom:
      return schema;
    case Formula::Kind::kAtom: {
      auto it = assignment.find(schema.name());
      return it == assignment.end() ? schema : it->second;
    }
    case Formula::Kind::kAnd:
      return Formula::And(substitute(schema.left(), assignment),
                          substitute(schema.right(), assignment));
    case Formula::Kind::kOr:
      return Formula::Or(substitute(schema.left(), assignment),
                         substitute(schema.right(), assignment));
    case Formula::Kind::kImp:
      return Formula::Imp(substitute(schema.left(), assignment),
                          substitute(schema.right(), assignment));
  }
  return schema;
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Formula::Kind::kAtom) {
    out.insert(f.name());
  } else if (f.is_binary()) {
    collect_atoms(f.left(), out);
    collect_atoms(f.right(), out);
  }
}

void collect_subformulas(const Formula& f, std::vector<Formula>& out) {
  if (f.is_binary()) {
    collect_subformulas(f.left(), out);
    collect_subformulas(f.right(), out);
  }
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
}

}  // namespace

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  collect_subformulas(f, out);
  return out;
}

}  // namespace kripkelab
