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

#include "qcl/semantics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qcl/error.h"
#include "qcl/gates.h"
#include "qcl/random.h"

namespace qcl {

void Realization::assign(const std::string &atom, Quregister qubit) {
    if (qubit.n_qubits() != 1) {
        throw std::invalid_argument("atom '" + atom + "' must be assigned a single qubit");
    }
    require_unit(qubit, "realization");
    assignment_.insert_or_assign(atom, std::move(qubit));
}

const Quregister &Realization::at(const std::string &atom) const {
    auto it = assignment_.find(atom);
    if (it == assignment_.end()) {
        throw MissingAssignment(atom);
    }
    return it->second;
}

Quregister qubit_with_probability(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("probability must lie in [0, 1]");
    }
    return Quregister::qubit(std::sqrt(1 - p), std::sqrt(p));
}

namespace {

Quregister evaluate_expanded(const Formula &f, const Realization &r) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return r.at(f.name());
        case Formula::Kind::Neg:
            return apply_not(evaluate_expanded(f.sub(), r));
        case Formula::Kind::SqrtNeg:
            return apply_sqrt_not(evaluate_expanded(f.sub(), r));
        case Formula::Kind::Conj:
            return and_gate(evaluate_expanded(f.left(), r), evaluate_expanded(f.right(), r));
        case Formula::Kind::Disj:
            break;
    }
    throw std::logic_error("disjunction survived expansion");
}

double lookup_probability(const std::map<std::string, double> &probs, const std::string &atom) {
    auto it = probs.find(atom);
    if (it == probs.end()) {
        throw MissingAssignment(atom);
    }
    if (!(it->second >= 0 && it->second <= 1)) {
        throw std::invalid_argument("probability for atom '" + atom + "' is outside [0, 1]");
    }
    return it->second;
}

double prob_via_atoms_unchecked(const Formula &f, const std::map<std::string, double> &probs) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return lookup_probability(probs, f.name());
        case Formula::Kind::Neg:
            return 1 - prob_via_atoms_unchecked(f.sub(), probs);
        case Formula::Kind::Conj:
            return prob_via_atoms_unchecked(f.left(), probs) * prob_via_atoms_unchecked(f.right(), probs);
        case Formula::Kind::Disj: {
            double p = prob_via_atoms_unchecked(f.left(), probs);
            double q = prob_via_atoms_unchecked(f.right(), probs);
            return p + q - p * q;
        }
        case Formula::Kind::SqrtNeg:
            break;
    }
    throw NotTruthFunctional("snot is not truth-functional");
}

}  // namespace

Quregister evaluate(const Formula &f, const Realization &r) {
    for (const auto &atom : atoms_of(f)) {
        r.at(atom);
    }
    size_t width = qubit_count(f);
    if (width > kMaxQubits) {
        throw ResourceLimit("formula needs " + std::to_string(width) + " qubits, above the limit of " +
                            std::to_string(kMaxQubits));
    }
    return evaluate_expanded(expand_disjunction(f), r);
}

double prob_of(const Formula &f, const Realization &r) {
    return prob(evaluate(f, r));
}

double prob_via_atoms(const Formula &f, const std::map<std::string, double> &probs) {
    if (contains_sqrt_neg(f)) {
        throw NotTruthFunctional("snot is not truth-functional; '" + format(f) + "' has no atomic probability rule");
    }
    return prob_via_atoms_unchecked(f, probs);
}

bool is_true_at(const Formula &f, const Realization &r) {
    return prob_of(f, r) >= 1 - kProbTolerance;
}

ConsequenceVerdict consequence_at(const Formula &a, const Formula &b, const Realization &r) {
    double left = prob_of(a, r);
    double right = prob_of(b, r);
    return {left <= right + kProbTolerance, left, right, left - right};
}

Realization sample_realization(const std::set<std::string> &atoms, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Realization r;
    for (const auto &atom : atoms) {
        double theta = uniform01(rng) * (std::numbers::pi / 2);
        double phi = uniform01(rng) * (2 * std::numbers::pi);
        r.assign(atom, Quregister::qubit(std::cos(theta), std::sin(theta) * std::polar(1.0, phi)));
    }
    return r;
}

std::set<std::string> Claim::atoms() const {
    auto result = atoms_of(right);
    if (left) {
        result.merge(atoms_of(*left));
    }
    return result;
}

std::pair<double, double> Claim::probabilities(const Realization &r) const {
    double l = left ? prob_of(*left, r) : 1.0;
    return {l, prob_of(right, r)};
}

std::string Claim::str() const {
    return (left ? format(*left) + " |= " : std::string("|= ")) + format(right);
}

const char *witness_origin_name(WitnessOrigin origin) {
    switch (origin) {
        case WitnessOrigin::Pinned:
            return "pinned";
        case WitnessOrigin::KnownTable:
            return "known";
        case WitnessOrigin::Sampled:
            return "sampled";
        case WitnessOrigin::Grid:
            return "grid";
    }
    return "?";
}

const std::vector<KnownWitness> &known_witnesses() {
    static const std::vector<KnownWitness> table = [] {
        const double h = std::sqrt(2.0) / 2;
        Realization half;
        half.assign("p", Quregister::qubit(h, h));
        Realization distributive;
        distributive.assign("p", Quregister::qubit(h, h));
        distributive.assign("q", Quregister::qubit(h, h));
        distributive.assign("r", Quregister::qubit(std::sqrt(3.0) / 2, 0.5));
        return std::vector<KnownWitness>{
            {"semiidempotence-2", {parse("p"), parse("p and p")}, half},
            {"excluded-middle", {std::nullopt, parse("p or not p")}, half},
            {"non-contradiction", {std::nullopt, parse("not (p and not p)")}, half},
            {"distributivity-2", {parse("p and q or p and r"), parse("p and (q or r)")}, distributive},
        };
    }();
    return table;
}

namespace {

bool match(const Formula &pattern, const Formula &actual, std::map<std::string, std::string> &renaming,
           std::set<std::string> &used) {
    if (pattern.kind() != actual.kind()) {
        return false;
    }
    switch (pattern.kind()) {
        case Formula::Kind::Atom: {
            auto it = renaming.find(pattern.name());
            if (it != renaming.end()) {
                return it->second == actual.name();
            }
            if (used.contains(actual.name())) {
                return false;
            }
            renaming.emplace(pattern.name(), actual.name());
            used.insert(actual.name());
            return true;
        }
        case Formula::Kind::Neg:
        case Formula::Kind::SqrtNeg:
            return match(pattern.sub(), actual.sub(), renaming, used);
        default:
            return match(pattern.left(), actual.left(), renaming, used) &&
                   match(pattern.right(), actual.right(), renaming, used);
    }
}

}  // namespace

std::optional<Realization> match_known_witness(const Claim &claim) {
    for (const auto &w : known_witnesses()) {
        if (w.pattern.left.has_value() != claim.left.has_value()) {
            continue;
        }
        std::map<std::string, std::string> renaming;
        std::set<std::string> used;
        if (w.pattern.left && !match(*w.pattern.left, *claim.left, renaming, used)) {
            continue;
        }
        if (!match(w.pattern.right, claim.right, renaming, used)) {
            continue;
        }
        Realization translated;
        for (const auto &[from, to] : renaming) {
            translated.assign(to, w.realization.at(from));
        }
        return translated;
    }
    return std::nullopt;
}

namespace {

constexpr size_t kGridSteps = 10;
constexpr size_t kGridMaxAtoms = 6;

class Searcher {
   public:
    Searcher(const Claim &claim, SearchResult &result) : claim_(claim), result_(result) {
    }

    bool try_realization(const Realization &r, WitnessOrigin origin, size_t index) {
        auto [left, right] = claim_.probabilities(r);
        return record(r, left, right, origin, index);
    }

    bool record(const Realization &r, double left, double right, WitnessOrigin origin, size_t index) {
        double margin = left - right;
        result_.evaluated++;
        result_.max_margin = std::max(result_.max_margin, margin);
        if (margin > kCounterexampleThreshold) {
            result_.counterexample = Counterexample{r, left, right, margin, origin, index};
            return true;
        }
        return false;
    }

    bool grid_sweep() {
        auto atom_set = claim_.atoms();
        std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
        if (atoms.size() > kGridMaxAtoms) {
            return false;
        }
        std::vector<size_t> digits(atoms.size(), 0);
        std::map<std::string, double> probs;
        while (true) {
            for (size_t k = 0; k < atoms.size(); k++) {
                probs[atoms[k]] = static_cast<double>(digits[k]) / kGridSteps;
            }
            double left = claim_.left ? prob_via_atoms(*claim_.left, probs) : 1.0;
            double right = prob_via_atoms(claim_.right, probs);
            if (left - right > kCounterexampleThreshold) {
                // Report the margin from the full quantum evaluation.
                Realization r;
                for (const auto &[atom, p] : probs) {
                    r.assign(atom, qubit_with_probability(p));
                }
                return try_realization(r, WitnessOrigin::Grid, 0);
            }
            result_.grid_points++;
            result_.grid_max_margin = std::max(result_.grid_max_margin, left - right);
            size_t k = 0;
            while (k < digits.size() && ++digits[k] > kGridSteps) {
                digits[k++] = 0;
            }
            if (k == digits.size()) {
                return false;
            }
        }
    }

   private:
    const Claim &claim_;
    SearchResult &result_;
};

}  // namespace

SearchResult search(const Claim &claim, const SearchOptions &options) {
    SearchResult result;
    Searcher searcher(claim, result);
    if (options.pinned && searcher.try_realization(*options.pinned, WitnessOrigin::Pinned, 0)) {
        return result;
    }
    if (options.use_known_table) {
        if (auto known = match_known_witness(claim);
            known && searcher.try_realization(*known, WitnessOrigin::KnownTable, 0)) {
            return result;
        }
    }
    auto atoms = claim.atoms();
    for (size_t i = 0; i < options.budget; i++) {
        Realization r = sample_realization(atoms, mix64(options.seed ^ mix64(i)));
        if (searcher.try_realization(r, WitnessOrigin::Sampled, i)) {
            return result;
        }
    }
    bool truth_functional = !contains_sqrt_neg(claim.right) && !(claim.left && contains_sqrt_neg(*claim.left));
    if (options.grid_check && truth_functional) {
        searcher.grid_sweep();
    }
    return result;
}

std::optional<Counterexample> search_counterexample(const Formula &a, const Formula &b, size_t budget,
                                                    uint64_t seed) {
    if (budget == 0) {
        throw std::invalid_argument("search budget must be at least 1");
    }
    SearchOptions options;
    options.budget = budget;
    options.seed = seed;
    return search(Claim{a, b}, options).counterexample;
}

}  // namespace qcl
