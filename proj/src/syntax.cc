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

#include "qcl/syntax.h"

#include <optional>
#include <stdexcept>
#include <vector>

#include "qcl/error.h"

namespace qcl {

struct Formula::Node {
    Kind kind;
    std::string name;
    std::optional<Formula> left;
    std::optional<Formula> right;
};

Formula Formula::atom(std::string name) {
    if (name.empty()) {
        throw std::invalid_argument("atom name must be nonempty");
    }
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), std::nullopt, std::nullopt}));
}

Formula Formula::neg(Formula sub) {
    return Formula(std::make_shared<const Node>(Node{Kind::Neg, {}, std::move(sub), std::nullopt}));
}

Formula Formula::sqrt_neg(Formula sub) {
    return Formula(std::make_shared<const Node>(Node{Kind::SqrtNeg, {}, std::move(sub), std::nullopt}));
}

Formula Formula::conj(Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(Node{Kind::Conj, {}, std::move(left), std::move(right)}));
}

Formula Formula::disj(Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(Node{Kind::Disj, {}, std::move(left), std::move(right)}));
}

Formula::Kind Formula::kind() const {
    return node_->kind;
}

const std::string &Formula::name() const {
    return node_->name;
}

const Formula &Formula::sub() const {
    if (!is_unary()) {
        throw std::logic_error("sub() on a non-unary formula");
    }
    return *node_->left;
}

const Formula &Formula::left() const {
    if (!is_binary()) {
        throw std::logic_error("left() on a non-binary formula");
    }
    return *node_->left;
}

const Formula &Formula::right() const {
    if (!is_binary()) {
        throw std::logic_error("right() on a non-binary formula");
    }
    return *node_->right;
}

bool Formula::operator==(const Formula &other) const {
    if (node_ == other.node_) {
        return true;
    }
    if (kind() != other.kind()) {
        return false;
    }
    switch (kind()) {
        case Kind::Atom:
            return name() == other.name();
        case Kind::Neg:
        case Kind::SqrtNeg:
            return sub() == other.sub();
        case Kind::Conj:
        case Kind::Disj:
            return left() == other.left() && right() == other.right();
    }
    return false;
}

namespace {

constexpr size_t kMaxNesting = 2000;

enum class Tok { Atom, Not, Snot, And, Or, LParen, RParen, End };

struct Token {
    Tok type;
    std::string text;
    size_t pos;
};

bool is_ident_start(char c) {
    return c >= 'a' && c <= 'z';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            i++;
        } else if (c == '(') {
            tokens.push_back({Tok::LParen, "(", i++});
        } else if (c == ')') {
            tokens.push_back({Tok::RParen, ")", i++});
        } else if (is_ident_start(c)) {
            size_t start = i;
            while (i < text.size() && is_ident_char(text[i])) {
                i++;
            }
            std::string word(text.substr(start, i - start));
            Tok type = Tok::Atom;
            if (word == "not") {
                type = Tok::Not;
            } else if (word == "snot") {
                type = Tok::Snot;
            } else if (word == "and") {
                type = Tok::And;
            } else if (word == "or") {
                type = Tok::Or;
            }
            tokens.push_back({type, std::move(word), start});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    tokens.push_back({Tok::End, "", text.size()});
    return tokens;
}

class Parser {
   public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    }

    Formula parse_all() {
        Formula f = parse_disj();
        const Token &t = peek();
        if (t.type == Tok::RParen) {
            throw ParseError("unbalanced ')'", t.pos);
        }
        if (t.type != Tok::End) {
            throw ParseError("unexpected '" + t.text + "' after complete formula", t.pos);
        }
        return f;
    }

   private:
    const Token &peek() const {
        return tokens_[cursor_];
    }
    const Token &take() {
        return tokens_[cursor_++];
    }

    Formula parse_disj() {
        Formula f = parse_conj();
        while (peek().type == Tok::Or) {
            take();
            f = Formula::disj(std::move(f), parse_conj());
        }
        return f;
    }

    Formula parse_conj() {
        Formula f = parse_unary();
        while (peek().type == Tok::And) {
            take();
            f = Formula::conj(std::move(f), parse_unary());
        }
        return f;
    }

    Formula parse_unary() {
        const Token &t = take();
        if (++depth_ > kMaxNesting) {
            throw ParseError("formula nested too deeply", t.pos);
        }
        Formula result = [&] {
            switch (t.type) {
                case Tok::Atom:
                    return Formula::atom(t.text);
                case Tok::Not:
                    return Formula::neg(parse_unary());
                case Tok::Snot:
                    return Formula::sqrt_neg(parse_unary());
                case Tok::LParen: {
                    Formula inner = parse_disj();
                    const Token &close = peek();
                    if (close.type != Tok::RParen) {
                        if (close.type == Tok::End) {
                            throw ParseError("unbalanced '(' opened at position " + std::to_string(t.pos), close.pos);
                        }
                        throw ParseError("expected ')' but found '" + close.text + "'", close.pos);
                    }
                    take();
                    return inner;
                }
                case Tok::End:
                    if (cursor_ >= 2) {
                        const Token &prev = tokens_[cursor_ - 2];
                        if (prev.type == Tok::LParen) {
                            throw ParseError("unbalanced '('", prev.pos);
                        }
                        throw ParseError("dangling operator '" + prev.text + "'", prev.pos);
                    }
                    throw ParseError("empty formula", t.pos);
                case Tok::And:
                case Tok::Or:
                    throw ParseError("operator '" + t.text + "' is missing its left operand", t.pos);
                case Tok::RParen:
                    throw ParseError("expected a formula before ')'", t.pos);
            }
            throw ParseError("unexpected token", t.pos);
        }();
        depth_--;
        return result;
    }

    std::vector<Token> tokens_;
    size_t cursor_ = 0;
    size_t depth_ = 0;
};

// Binding strength: or < and < prefix operators and atoms.
int precedence(const Formula &f) {
    switch (f.kind()) {
        case Formula::Kind::Disj:
            return 1;
        case Formula::Kind::Conj:
            return 2;
        default:
            return 3;
    }
}

void format_into(const Formula &f, std::string &out);

void format_operand(const Formula &f, int min_precedence, std::string &out) {
    if (precedence(f) < min_precedence) {
        out += '(';
        format_into(f, out);
        out += ')';
    } else {
        format_into(f, out);
    }
}

void format_into(const Formula &f, std::string &out) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            out += f.name();
            return;
        case Formula::Kind::Neg:
            out += "not ";
            format_operand(f.sub(), 3, out);
            return;
        case Formula::Kind::SqrtNeg:
            out += "snot ";
            format_operand(f.sub(), 3, out);
            return;
        case Formula::Kind::Conj:
        case Formula::Kind::Disj: {
            int p = precedence(f);
            // Left-associative: the left operand may share our precedence,
            // the right one must bind strictly tighter.
            format_operand(f.left(), p, out);
            out += f.kind() == Formula::Kind::Conj ? " and " : " or ";
            format_operand(f.right(), p + 1, out);
            return;
        }
    }
}

void collect_atoms(const Formula &f, std::set<std::string> &out) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            out.insert(f.name());
            return;
        case Formula::Kind::Neg:
        case Formula::Kind::SqrtNeg:
            collect_atoms(f.sub(), out);
            return;
        default:
            collect_atoms(f.left(), out);
            collect_atoms(f.right(), out);
    }
}

}  // namespace

Formula parse(std::string_view text) {
    return Parser(tokenize(text)).parse_all();
}

std::string format(const Formula &f) {
    std::string out;
    format_into(f, out);
    return out;
}

size_t qubit_count(const Formula &f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return 1;
        case Formula::Kind::Neg:
        case Formula::Kind::SqrtNeg:
            return qubit_count(f.sub());
        default:
            return qubit_count(f.left()) + qubit_count(f.right()) + 1;
    }
}

Formula expand_disjunction(const Formula &f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return f;
        case Formula::Kind::Neg:
            return Formula::neg(expand_disjunction(f.sub()));
        case Formula::Kind::SqrtNeg:
            return Formula::sqrt_neg(expand_disjunction(f.sub()));
        case Formula::Kind::Conj:
            return Formula::conj(expand_disjunction(f.left()), expand_disjunction(f.right()));
        case Formula::Kind::Disj:
            return Formula::neg(Formula::conj(Formula::neg(expand_disjunction(f.left())),
                                              Formula::neg(expand_disjunction(f.right()))));
    }
    return f;
}

std::set<std::string> atoms_of(const Formula &f) {
    std::set<std::string> out;
    collect_atoms(f, out);
    return out;
}

size_t atom_occurrences(const Formula &f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return 1;
        case Formula::Kind::Neg:
        case Formula::Kind::SqrtNeg:
            return atom_occurrences(f.sub());
        default:
            return atom_occurrences(f.left()) + atom_occurrences(f.right());
    }
}

size_t binary_connectives(const Formula &f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return 0;
        case Formula::Kind::Neg:
        case Formula::Kind::SqrtNeg:
            return binary_connectives(f.sub());
        default:
            return 1 + binary_connectives(f.left()) + binary_connectives(f.right());
    }
}

bool contains_sqrt_neg(const Formula &f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return false;
        case Formula::Kind::SqrtNeg:
            return true;
        case Formula::Kind::Neg:
            return contains_sqrt_neg(f.sub());
        default:
            return contains_sqrt_neg(f.left()) || contains_sqrt_neg(f.right());
    }
}

}  // namespace qcl
