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

// Propositional formulas over a finite, declared atom universe.
//
// A Formula is an immutable, reference-counted tree built from the
// constructors Top, Bot, Atom, Neg, And and Or.  Material implication is
// sugar and never appears in a tree.  Formulas refer to atoms by index; the
// Universe that owns the names is needed only for parsing and printing.

#ifndef LATENTBR_FORMULA_HPP_
#define LATENTBR_FORMULA_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace latentbr {

enum class Op : std::uint8_t { kTop, kBot, kAtom, kNeg, kAnd, kOr };

class Formula {
 public:
  Formula();  // Top

  static Formula Top();
  static Formula Bot();
  static Formula Atom(int index);
  static Formula Neg(Formula f);
  static Formula And(Formula lhs, Formula rhs);
  static Formula Or(Formula lhs, Formula rhs);
  static Formula Implies(Formula lhs, Formula rhs);  // ~lhs | rhs

  Op op() const;
  int atom() const;  // only for kAtom
  const Formula& child() const;  // only for kNeg
  const Formula& lhs() const;  // only for kAnd / kOr
  const Formula& rhs() const;

  bool is_literal() const;
  std::size_t hash() const;
  std::size_t size() const;  // node count
  int depth() const;

  // Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) {
    return !(a == b);
  }

  // A fixed total order on trees: by operator, then atom index, then children.
  static int Compare(const Formula& a, const Formula& b);
  friend bool operator<(const Formula& a, const Formula& b) {
    return Compare(a, b) < 0;
  }

 private:
  struct Node;
  struct NullTag {};
  explicit Formula(NullTag) {}
  explicit Formula(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Ordered set of atom names.  Names are identifiers and unique; T and F are
// reserved for the constants.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(int index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

// Thrown by Parse.  offset is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar (loosest binding first):
//   impl := disj [ "->" impl ]
//   disj := conj { "|" conj }
//   conj := unary { "&" unary }
//   unary := "~" unary | "(" impl ")" | "T" | "F" | identifier
// Binary connectives are left-associative; "->" is right-associative.
Formula Parse(std::string_view text, const Universe& universe);

// Prints with the fewest parentheses that still re-parse to the same tree.
std::string Print(const Formula& f, const Universe& universe);

// Negation normal form: negations only on atoms, double negations removed,
// ~T -> F and ~F -> T.
Formula Nnf(const Formula& f);

// Negation pushed through with Nnf, i.e. Nnf(~f).
Formula Negate(const Formula& f);

// Nnf with every maximal And / Or chain flattened, sorted, deduplicated and
// rebuilt right-nested.  Two formulas that differ only in the association,
// order or repetition of conjuncts/disjuncts have the same canonical form.
Formula Canonical(const Formula& f);

// All distinct subformulas (structural), children before parents.
std::vector<Formula> Subformulas(const Formula& f);

// Highest atom index + 1 (0 for formulas without atoms).
int AtomSpan(const Formula& f);

}  // namespace latentbr

#endif  // LATENTBR_FORMULA_HPP_
