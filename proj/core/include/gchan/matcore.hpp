// Copyright the gchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "gchan/types.hpp"

namespace gchan {

// Relative tolerance for accepting a matrix as Hermitian.
inline constexpr double kHermitianTol = 1e-12;
// Relative tolerance below which negative eigenvalues of a nominally PSD
// matrix are clamped to zero.
inline constexpr double kPsdClampTol = 1e-10;

struct EigResult {
  RealVector eigenvalues;  // ascending; ties in arbitrary order
  ComplexMatrix vectors;   // unitary, column j pairs with eigenvalues[j]
};

bool is_hermitian(const ComplexMatrix& H, double rtol = kHermitianTol);

// Eigendecomposition of a Hermitian matrix. Rejects input whose
// anti-Hermitian part exceeds kHermitianTol relative to its size; the
// reconstruction U diag U* matches H to 1e-10 * (1 + |H|).
EigResult eig_hermitian(const ComplexMatrix& H);

// H^p for PSD Hermitian H and p >= 0: same eigenvectors, eigenvalues
// raised to p. Eigenvalues in [-kPsdClampTol * scale, 0) are clamped to
// zero first; anything more negative is a PSD violation.
ComplexMatrix psd_power(const ComplexMatrix& H, double p);

// Determinant of a PSD Hermitian matrix as the product of eigenvalues.
double det_psd(const ComplexMatrix& H);

// ln det of a PSD Hermitian matrix; -inf if any eigenvalue is zero
// (after clamping).
double log_det_psd(const ComplexMatrix& H);

// Schatten p-norm (sum of p-th powers of singular values)^(1/p) of a
// general complex matrix, p >= 1. Routed through the eigenvalues when
// the input is Hermitian within tolerance — cheaper and slightly more
// accurate than the SVD it falls back to.
double schatten_norm(const ComplexMatrix& X, double p);

// Operator norm (largest singular value); the p -> infinity endpoint
// of the family above.
double operator_norm(const ComplexMatrix& X);

}  // namespace gchan
