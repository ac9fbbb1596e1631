// Copyright 2026 The qclogic Authors
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

#ifndef QCL_SYNTAX_H
#define QCL_SYNTAX_H

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace qcl {

/// Immutable formula AST with shared subtrees.
///
/// Text grammar:
///
///     formula := conj ("or" conj)*
///     conj    := unary ("and" unary)*
///     unary   := ("not" | "snot") unary | atom | "(" formula ")"
///     atom    := [a-z][a-z0-9_]*   (other than a keyword)
///
/// Both binary operators are left-associative.
class Formula {
   public:
    enum class Kind { Atom, Neg, SqrtNeg, Conj, Disj };

    static Formula atom(std::string name);
    static Formula neg(Formula sub);
    static Formula sqrt_neg(Formula sub);
    static Formula conj(Formula left, Formula right);
    static Formula disj(Formula left, Formula right);

    Kind kind() const;
    /// Atom name; empty for compound formulas.
    const std::string &name() const;
    /// Operand of Neg / SqrtNeg.
    const Formula &sub() const;
    const Formula &left() const;
    const Formula &right() const;

    bool is_unary() const {
        return kind() == Kind::Neg || kind() == Kind::SqrtNeg;
    }
    bool is_binary() const {
        return kind() == Kind::Conj || kind() == Kind::Disj;
    }

    /// Structural equality.
    bool operator==(const Formula &other) const;

   private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {
    }
    std::shared_ptr<const Node> node_;
};

/// Throws ParseError (carrying the 0-based offset) on lexical errors,
/// unbalanced parentheses, dangling operators, and trailing input.
Formula parse(std::string_view text);

/// Canonical text with the minimum parentheses needed to round-trip.
std::string format(const Formula &f);

/// Width of the register a realization assigns to `f`: one qubit per atom
/// occurrence plus one ancilla per binary connective.
size_t qubit_count(const Formula &f);

/// Rewrites every Disj(a, b) bottom-up into Neg(Conj(Neg a, Neg b)).
Formula expand_disjunction(const Formula &f);

std::set<std::string> atoms_of(const Formula &f);
size_t atom_occurrences(const Formula &f);
size_t binary_connectives(const Formula &f);
bool contains_sqrt_neg(const Formula &f);

}  // namespace qcl

#endif
