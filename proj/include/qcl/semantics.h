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

#ifndef QCL_SEMANTICS_H
#define QCL_SEMANTICS_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcl/quregister.h"
#include "qcl/syntax.h"

namespace qcl {

/// Margin above which a sampled realization counts as a counterexample.
inline constexpr double kCounterexampleThreshold = 1e-6;

/// Assignment of a single-qubit unit register to each atom name.
class Realization {
   public:
    Realization() = default;

    /// Throws std::invalid_argument unless `qubit` is a single qubit and
    /// InvalidState unless it is unit within kUnitTolerance.
    void assign(const std::string &atom, Quregister qubit);
    /// Throws MissingAssignment.
    const Quregister &at(const std::string &atom) const;
    bool contains(const std::string &atom) const {
        return assignment_.contains(atom);
    }
    const std::map<std::string, Quregister> &assignment() const {
        return assignment_;
    }
    size_t size() const {
        return assignment_.size();
    }

    bool operator==(const Realization &) const = default;

   private:
    std::map<std::string, Quregister> assignment_;
};

/// cos(theta)|0> + sin(theta)|1> with sin^2(theta) = p.
Quregister qubit_with_probability(double p);

/// The register a realization assigns to `f`, built bottom-up from the
/// atoms with NOT, SQRT_NOT and AND (disjunctions are expanded first).
/// Throws MissingAssignment for an unassigned atom.
Quregister evaluate(const Formula &f, const Realization &r);

double prob_of(const Formula &f, const Realization &r);

/// Probability computed from atomic probabilities alone:
/// p(not a) = 1 - p(a), p(a and b) = p(a) p(b), p(a or b) = p(a) + p(b) - p(a) p(b).
/// Throws NotTruthFunctional if `f` contains snot.
double prob_via_atoms(const Formula &f, const std::map<std::string, double> &probs);

bool is_true_at(const Formula &f, const Realization &r);

struct ConsequenceVerdict {
    bool holds_at_sample;
    double prob_left;
    double prob_right;
    double margin;  // prob_left - prob_right
};

ConsequenceVerdict consequence_at(const Formula &a, const Formula &b, const Realization &r);

/// Each atom gets cos(theta)|0> + sin(theta) e^{i phi}|1> with theta uniform
/// on [0, pi/2] and phi uniform on [0, 2 pi). Atoms are drawn in sorted order
/// from a generator seeded with `seed`.
Realization sample_realization(const std::set<std::string> &atoms, uint64_t seed);

/// A claim `left |= right`. An empty `left` stands for the constant-true
/// premise (Prob = 1), which turns the claim into "right is a logical truth".
struct Claim {
    std::optional<Formula> left;
    Formula right;

    std::set<std::string> atoms() const;
    /// (Prob(left), Prob(right)) at `r`.
    std::pair<double, double> probabilities(const Realization &r) const;
    std::string str() const;
};

enum class WitnessOrigin { Pinned, KnownTable, Sampled, Grid };

const char *witness_origin_name(WitnessOrigin origin);

struct Counterexample {
    Realization realization;
    double prob_left;
    double prob_right;
    double margin;
    WitnessOrigin origin;
    /// Position among the random samples; 0 for non-sampled witnesses.
    size_t sample_index;
};

struct SearchOptions {
    size_t budget = 10000;
    uint64_t seed = 0;
    /// Tried before anything else.
    std::optional<Realization> pinned;
    bool use_known_table = true;
    /// Deterministic {0, 0.1, ..., 1}^k sweep for snot-free claims.
    bool grid_check = true;
};

struct SearchResult {
    std::optional<Counterexample> counterexample;
    /// Realizations evaluated through the quantum semantics (replayed
    /// witnesses and random samples).
    size_t evaluated = 0;
    /// Largest prob_left - prob_right over those realizations.
    double max_margin = -1.0;
    /// Grid points checked through prob_via_atoms, and their largest margin.
    size_t grid_points = 0;
    double grid_max_margin = -1.0;
};

/// Semi-decision procedure for a claim. Order: pinned witness, known
/// witness table, `budget` random samples, then the grid sweep. Stops at the
/// first realization whose margin exceeds kCounterexampleThreshold. An empty
/// result means "unrefuted", never "valid".
SearchResult search(const Claim &claim, const SearchOptions &options);

std::optional<Counterexample> search_counterexample(const Formula &a, const Formula &b, size_t budget,
                                                    uint64_t seed);

/// Known counterexample vectors, stated over pattern atoms.
struct KnownWitness {
    std::string name;
    Claim pattern;
    Realization realization;
};

const std::vector<KnownWitness> &known_witnesses();

/// If `claim` equals a known witness pattern up to an injective renaming of
/// atoms, returns the witness realization translated to the claim's atoms.
std::optional<Realization> match_known_witness(const Claim &claim);

}  // namespace qcl

#endif
