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

#include "qcl/dense_oracle.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qcl/error.h"

namespace qcl::dense {

namespace {

// bits[0] is x_1, the leftmost qubit.
std::vector<int> decode(size_t index, size_t width) {
    std::vector<int> bits(width);
    for (size_t k = 0; k < width; k++) {
        bits[width - 1 - k] = static_cast<int>((index >> k) & 1);
    }
    return bits;
}

size_t encode(const std::vector<int> &bits) {
    size_t index = 0;
    for (int b : bits) {
        index = index * 2 + static_cast<size_t>(b);
    }
    return index;
}

}  // namespace

DenseMatrix::DenseMatrix(size_t width, std::vector<Amplitude> entries) : width_(width), entries_(std::move(entries)) {
    if (width_ > 2 * kDefaultMaxWidth) {
        throw ResourceLimit("dense matrix too wide");
    }
    if (entries_.size() != dim() * dim()) {
        throw std::invalid_argument("dense matrix of width " + std::to_string(width_) + " needs " +
                                    std::to_string(dim() * dim()) + " entries");
    }
}

DenseMatrix DenseMatrix::identity(size_t width) {
    size_t d = size_t{1} << width;
    std::vector<Amplitude> entries(d * d);
    for (size_t i = 0; i < d; i++) {
        entries[i * d + i] = 1;
    }
    return DenseMatrix(width, std::move(entries));
}

DenseMatrix matrix_for(const GateSpec &spec, size_t max_width) {
    spec.validate();
    size_t w = spec.width();
    if (w > max_width) {
        throw ResourceLimit("dense matrix for " + spec.str() + " has width " + std::to_string(w) +
                            ", above the cap of " + std::to_string(max_width));
    }
    size_t d = size_t{1} << w;
    DenseMatrix result(w, std::vector<Amplitude>(d * d));
    for (size_t col = 0; col < d; col++) {
        std::vector<int> x = decode(col, w);
        switch (spec.kind) {
            case GateKind::Not: {
                x[w - 1] = 1 - x[w - 1];
                result.at(encode(x), col) = 1;
                break;
            }
            case GateKind::Toffoli: {
                int control = std::min(x[spec.n - 1], x[spec.n + spec.m - 1]);
                x[w - 1] = (x[w - 1] + control) % 2;
                result.at(encode(x), col) = 1;
                break;
            }
            case GateKind::SqrtNot: {
                // |x_1..x_{w-1}> (x) SQRT_NOT^(1)|x_w>.
                const Amplitude diag{0.5, 0.5};
                const Amplitude off{0.5, -0.5};
                int last = x[w - 1];
                x[w - 1] = 0;
                result.at(encode(x), col) = last == 0 ? diag : off;
                x[w - 1] = 1;
                result.at(encode(x), col) = last == 1 ? diag : off;
                break;
            }
        }
    }
    return result;
}

Quregister apply_dense(const DenseMatrix &matrix, const Quregister &psi) {
    if (matrix.dim() != psi.dim()) {
        throw std::invalid_argument("matrix of dimension " + std::to_string(matrix.dim()) +
                                    " cannot act on a register of dimension " + std::to_string(psi.dim()));
    }
    size_t d = matrix.dim();
    std::vector<Amplitude> out(d);
    for (size_t r = 0; r < d; r++) {
        Amplitude total{};
        for (size_t c = 0; c < d; c++) {
            total += matrix.at(r, c) * psi[c];
        }
        out[r] = total;
    }
    return Quregister(psi.n_qubits(), std::move(out));
}

DenseMatrix multiply(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.width() != b.width()) {
        throw std::invalid_argument("matrix width mismatch");
    }
    size_t d = a.dim();
    DenseMatrix out(a.width(), std::vector<Amplitude>(d * d));
    for (size_t i = 0; i < d; i++) {
        for (size_t k = 0; k < d; k++) {
            Amplitude aik = a.at(i, k);
            if (aik == Amplitude{}) {
                continue;
            }
            for (size_t j = 0; j < d; j++) {
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

double check_unitary(const DenseMatrix &matrix) {
    size_t d = matrix.dim();
    double worst = 0;
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            Amplitude total{};
            for (size_t k = 0; k < d; k++) {
                total += matrix.at(i, k) * std::conj(matrix.at(j, k));
            }
            if (i == j) {
                total -= 1.0;
            }
            worst = std::max(worst, std::abs(total));
        }
    }
    return worst;
}

double max_abs_difference(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.width() != b.width()) {
        throw std::invalid_argument("matrix width mismatch");
    }
    double worst = 0;
    for (size_t i = 0; i < a.entries().size(); i++) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

}  // namespace qcl::dense
