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

#ifndef QCL_DENSE_ORACLE_H
#define QCL_DENSE_ORACLE_H

#include <cstddef>
#include <vector>

#include "qcl/gates.h"
#include "qcl/quregister.h"

/// Brute-force reference backend. Gate matrices are assembled one basis
/// column at a time by decoding the column index into its bit string and
/// applying the gate's definition to that string. Nothing here shares code
/// with the structured kernels in gates.cc.
namespace qcl::dense {

inline constexpr size_t kDefaultMaxWidth = 12;

/// Square 2^width x 2^width complex matrix in row-major order.
class DenseMatrix {
   public:
    DenseMatrix(size_t width, std::vector<Amplitude> entries);
    static DenseMatrix identity(size_t width);

    size_t width() const {
        return width_;
    }
    size_t dim() const {
        return size_t{1} << width_;
    }
    const Amplitude &at(size_t row, size_t col) const {
        return entries_[row * dim() + col];
    }
    Amplitude &at(size_t row, size_t col) {
        return entries_[row * dim() + col];
    }
    const std::vector<Amplitude> &entries() const {
        return entries_;
    }

   private:
    size_t width_;
    std::vector<Amplitude> entries_;
};

/// Explicit matrix of the gate. Throws ResourceLimit when the gate is wider
/// than `max_width`.
DenseMatrix matrix_for(const GateSpec &spec, size_t max_width = kDefaultMaxWidth);

/// Plain matrix-vector product. No norm check.
Quregister apply_dense(const DenseMatrix &matrix, const Quregister &psi);

DenseMatrix multiply(const DenseMatrix &a, const DenseMatrix &b);

/// max |(M M^dagger - I)_ij|.
double check_unitary(const DenseMatrix &matrix);

/// max |a_ij - b_ij|.
double max_abs_difference(const DenseMatrix &a, const DenseMatrix &b);

}  // namespace qcl::dense

#endif
