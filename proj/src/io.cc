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

#include "qcl/io.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "qcl/error.h"

namespace qcl {

using nlohmann::json;

namespace {

json complex_to_json(Amplitude a) {
    return json::array({a.real(), a.imag()});
}

Amplitude complex_from_json(const json &v, const std::string &where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw InputError(where + ": expected [re, im]");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

json quregister_to_json(const Quregister &psi) {
    json amps = json::array();
    for (const auto &a : psi.amplitudes()) {
        amps.push_back(complex_to_json(a));
    }
    return {{"n", psi.n_qubits()}, {"amps", std::move(amps)}};
}

Quregister quregister_from_json(const json &doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("amps")) {
        throw InputError("quregister: expected an object with \"n\" and \"amps\"");
    }
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1 ||
        doc["n"].get<long long>() > static_cast<long long>(kMaxQubits)) {
        throw InputError("quregister: \"n\" must be an integer in [1, " + std::to_string(kMaxQubits) + "]");
    }
    size_t n = doc["n"].get<size_t>();
    const json &amps = doc["amps"];
    if (!amps.is_array() || amps.size() != (size_t{1} << n)) {
        throw InputError("quregister: \"amps\" must hold 2^n entries");
    }
    std::vector<Amplitude> values;
    values.reserve(amps.size());
    for (size_t j = 0; j < amps.size(); j++) {
        values.push_back(complex_from_json(amps[j], "quregister amps[" + std::to_string(j) + "]"));
    }
    return Quregister(n, std::move(values));
}

std::string serialize(const Quregister &psi) {
    return quregister_to_json(psi).dump();
}

Quregister deserialize(std::string_view text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw InputError("quregister: invalid JSON");
    }
    return quregister_from_json(doc);
}

json realization_to_json(const Realization &r) {
    json doc = json::object();
    for (const auto &[atom, qubit] : r.assignment()) {
        doc[atom] = {{"a0", complex_to_json(qubit[0])}, {"a1", complex_to_json(qubit[1])}};
    }
    return doc;
}

Realization realization_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw InputError("realization: expected a JSON object keyed by atom name");
    }
    Realization r;
    for (const auto &[atom, entry] : doc.items()) {
        if (!entry.is_object() || !entry.contains("a0") || !entry.contains("a1")) {
            throw InputError("realization: atom '" + atom + "' needs \"a0\" and \"a1\"");
        }
        Amplitude a0 = complex_from_json(entry["a0"], "realization atom '" + atom + "' a0");
        Amplitude a1 = complex_from_json(entry["a1"], "realization atom '" + atom + "' a1");
        double n2 = std::norm(a0) + std::norm(a1);
        if (!(std::abs(n2 - 1.0) <= kFileUnitTolerance)) {
            std::ostringstream msg;
            msg << "realization: atom '" << atom << "' is not a unit vector (|a0|^2 + |a1|^2 = " << n2 << ")";
            throw InputError(msg.str());
        }
        double scale = 1.0 / std::sqrt(n2);
        r.assign(atom, Quregister::qubit(a0 * scale, a1 * scale));
    }
    return r;
}

Realization load_realization_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open realization file '" + path + "'");
    }
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) {
        throw InputError("realization file '" + path + "' is not valid JSON");
    }
    return realization_from_json(doc);
}

}  // namespace qcl
