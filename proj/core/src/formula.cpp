// Copyright 2026 The latentbr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latentbr/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_set>

namespace latentbr {

struct Formula::Node {
  Op op;
  int atom = -1;
  Formula lhs{NullTag{}};  // also the child of a negation
  Formula rhs{NullTag{}};
  std::size_t hash = 0;
  std::size_t size = 1;
  int depth = 0;
};

namespace {

std::size_t Mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula::Formula() : Formula(Top()) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::Top() {
  static const Formula kTop = [] {
    auto n = std::make_shared<Node>();
    n->op = Op::kTop;
    n->hash = Mix(0, 1);
    return Formula(std::move(n));
  }();
  return kTop;
}

Formula Formula::Bot() {
  static const Formula kBot = [] {
    auto n = std::make_shared<Node>();
    n->op = Op::kBot;
    n->hash = Mix(0, 2);
    return Formula(std::move(n));
  }();
  return kBot;
}

Formula Formula::Atom(int index) {
  if (index < 0) throw std::invalid_argument("negative atom index");
  auto n = std::make_shared<Node>();
  n->op = Op::kAtom;
  n->atom = index;
  n->hash = Mix(Mix(0, 3), static_cast<std::size_t>(index));
  return Formula(std::move(n));
}

Formula Formula::Neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->op = Op::kNeg;
  n->hash = Mix(Mix(0, 4), f.hash());
  n->size = f.size() + 1;
  n->depth = f.depth() + 1;
  n->lhs = std::move(f);
  return Formula(std::move(n));
}

namespace {

template <class NodeT>
std::shared_ptr<NodeT> MakeBinary(Op op, Formula lhs, Formula rhs) {
  auto n = std::make_shared<NodeT>();
  n->op = op;
  n->hash = Mix(Mix(Mix(0, op == Op::kAnd ? 5 : 6), lhs.hash()), rhs.hash());
  n->size = lhs.size() + rhs.size() + 1;
  n->depth = std::max(lhs.depth(), rhs.depth()) + 1;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

}  // namespace

Formula Formula::And(Formula lhs, Formula rhs) {
  return Formula(MakeBinary<Node>(Op::kAnd, std::move(lhs), std::move(rhs)));
}

Formula Formula::Or(Formula lhs, Formula rhs) {
  return Formula(MakeBinary<Node>(Op::kOr, std::move(lhs), std::move(rhs)));
}

Formula Formula::Implies(Formula lhs, Formula rhs) {
  return Or(Neg(std::move(lhs)), std::move(rhs));
}

Op Formula::op() const { return node_->op; }
int Formula::atom() const { return node_->atom; }
const Formula& Formula::child() const { return node_->lhs; }
const Formula& Formula::lhs() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }
int Formula::depth() const { return node_->depth; }

bool Formula::is_literal() const {
  return op() == Op::kAtom || (op() == Op::kNeg && child().op() == Op::kAtom);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.op() != b.op() || a.size() != b.size()) {
    return false;
  }
  switch (a.op()) {
    case Op::kTop:
    case Op::kBot:
      return true;
    case Op::kAtom:
      return a.atom() == b.atom();
    case Op::kNeg:
      return a.child() == b.child();
    case Op::kAnd:
    case Op::kOr:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

int Formula::Compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  switch (a.op()) {
    case Op::kTop:
    case Op::kBot:
      return 0;
    case Op::kAtom:
      return a.atom() == b.atom() ? 0 : (a.atom() < b.atom() ? -1 : 1);
    case Op::kNeg:
      return Compare(a.child(), b.child());
    case Op::kAnd:
    case Op::kOr: {
      const int c = Compare(a.lhs(), b.lhs());
      return c != 0 ? c : Compare(a.rhs(), b.rhs());
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Universe

namespace {

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty() || !IsIdentStart(n[0]) ||
        !std::all_of(n.begin(), n.end(), IsIdentChar)) {
      throw std::invalid_argument("invalid atom name '" + n + "'");
    }
    if (n == "T" || n == "F") {
      throw std::invalid_argument("atom name '" + n + "' is reserved");
    }
    if (!index_.emplace(n, static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate atom name '" + n + "'");
    }
  }
}

std::optional<int> Universe::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(std::string message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Universe& universe)
      : text_(text), universe_(universe) {}

  Formula Run() {
    Formula f = Implication();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) { throw ParseError(what, pos_); }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Accept(std::string_view token) {
    SkipSpace();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula Implication() {
    Formula lhs = Disjunction();
    if (Accept("->")) return Formula::Implies(std::move(lhs), Implication());
    return lhs;
  }

  Formula Disjunction() {
    Formula f = Conjunction();
    while (Accept("|")) f = Formula::Or(std::move(f), Conjunction());
    return f;
  }

  Formula Conjunction() {
    Formula f = Unary();
    while (Accept("&")) f = Formula::And(std::move(f), Unary());
    return f;
  }

  Formula Unary() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return Formula::Neg(Unary());
    }
    if (c == '(') {
      ++pos_;
      Formula f = Implication();
      if (!Accept(")")) Fail("expected ')'");
      return f;
    }
    if (!IsIdentStart(c)) Fail("unexpected '" + std::string(1, c) + "'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && IsIdentChar(text_[pos_])) ++pos_;
    const std::string_view ident = text_.substr(start, pos_ - start);
    if (ident == "T") return Formula::Top();
    if (ident == "F") return Formula::Bot();
    auto index = universe_.find(ident);
    if (!index) {
      throw ParseError("unknown atom '" + std::string(ident) + "'", start);
    }
    return Formula::Atom(*index);
  }

  std::string_view text_;
  const Universe& universe_;
  std::size_t pos_ = 0;
};

int Precedence(Op op) {
  switch (op) {
    case Op::kOr:
      return 1;
    case Op::kAnd:
      return 2;
    default:
      return 3;
  }
}

void PrintTo(const Formula& f, const Universe& u, std::string& out) {
  switch (f.op()) {
    case Op::kTop:
      out += 'T';
      return;
    case Op::kBot:
      out += 'F';
      return;
    case Op::kAtom:
      out += u.name(f.atom());
      return;
    case Op::kNeg: {
      out += '~';
      const bool paren = Precedence(f.child().op()) < 3;
      if (paren) out += '(';
      PrintTo(f.child(), u, out);
      if (paren) out += ')';
      return;
    }
    case Op::kAnd:
    case Op::kOr: {
      const int prec = Precedence(f.op());
      // Left-associative: the left operand may share our precedence, the
      // right one must bind strictly tighter.
      const bool lparen = Precedence(f.lhs().op()) < prec;
      const bool rparen = Precedence(f.rhs().op()) <= prec;
      if (lparen) out += '(';
      PrintTo(f.lhs(), u, out);
      if (lparen) out += ')';
      out += f.op() == Op::kAnd ? " & " : " | ";
      if (rparen) out += '(';
      PrintTo(f.rhs(), u, out);
      if (rparen) out += ')';
      return;
    }
  }
}

}  // namespace

Formula Parse(std::string_view text, const Universe& universe) {
  return Parser(text, universe).Run();
}

std::string Print(const Formula& f, const Universe& universe) {
  std::string out;
  PrintTo(f, universe, out);
  return out;
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

Formula NnfSigned(const Formula& f, bool negated) {
  switch (f.op()) {
    case Op::kTop:
      return negated ? Formula::Bot() : f;
    case Op::kBot:
      return negated ? Formula::Top() : f;
    case Op::kAtom:
      return negated ? Formula::Neg(f) : f;
    case Op::kNeg:
      return NnfSigned(f.child(), !negated);
    case Op::kAnd:
    case Op::kOr: {
      Formula l = NnfSigned(f.lhs(), negated);
      Formula r = NnfSigned(f.rhs(), negated);
      const bool conj = (f.op() == Op::kAnd) != negated;
      return conj ? Formula::And(std::move(l), std::move(r))
                  : Formula::Or(std::move(l), std::move(r));
    }
  }
  return f;
}

void Flatten(const Formula& f, Op op, std::vector<Formula>& out) {
  if (f.op() == op) {
    Flatten(f.lhs(), op, out);
    Flatten(f.rhs(), op, out);
  } else {
    out.push_back(f);
  }
}

Formula CanonicalNnf(const Formula& f) {
  if (f.op() != Op::kAnd && f.op() != Op::kOr) return f;
  std::vector<Formula> items;
  Flatten(f, f.op(), items);
  for (Formula& item : items) item = CanonicalNnf(item);
  // Canonicalizing a child cannot produce the parent's operator at its root
  // because Flatten already consumed every same-operator node.
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  Formula acc = items.back();
  for (auto it = items.rbegin() + 1; it != items.rend(); ++it) {
    acc = f.op() == Op::kAnd ? Formula::And(*it, acc) : Formula::Or(*it, acc);
  }
  return acc;
}

}  // namespace

Formula Nnf(const Formula& f) { return NnfSigned(f, false); }

Formula Negate(const Formula& f) { return NnfSigned(f, true); }

Formula Canonical(const Formula& f) { return CanonicalNnf(Nnf(f)); }

std::vector<Formula> Subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> visit = [&](const Formula& g) {
    switch (g.op()) {
      case Op::kNeg:
        visit(g.child());
        break;
      case Op::kAnd:
      case Op::kOr:
        visit(g.lhs());
        visit(g.rhs());
        break;
      default:
        break;
    }
    if (seen.insert(g).second) out.push_back(g);
  };
  visit(f);
  return out;
}

int AtomSpan(const Formula& f) {
  switch (f.op()) {
    case Op::kAtom:
      return f.atom() + 1;
    case Op::kNeg:
      return AtomSpan(f.child());
    case Op::kAnd:
    case Op::kOr:
      return std::max(AtomSpan(f.lhs()), AtomSpan(f.rhs()));
    default:
      return 0;
  }
}

}  // namespace latentbr
