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

#include <cstdint>
#include <vector>

#include "gchan/types.hpp"

namespace gchan::interp {

// Positive map on d x d matrices: X -> sum_l A_l (T X) A_l† with T the
// transpose when pre_transpose is set and the identity otherwise. The
// plain variant is completely positive; the transposed one is
// co-positive — positive but generally not CP, which is exactly the
// regime the p->p norm bound must survive.
struct PositiveMapRep {
  Eigen::Index d = 0;
  std::vector<ComplexMatrix> kraus;
  bool pre_transpose = false;
};

ComplexMatrix apply(const PositiveMapRep& map, const ComplexMatrix& X);

// Adjoint with respect to the trace pairing: tr(Y apply(X)) =
// tr(apply_dual(Y) X). For the transposed variant this is
// (sum A†YA)^T.
ComplexMatrix apply_dual(const PositiveMapRep& map, const ComplexMatrix& Y);

// ||N(1)||^(1/p') ||N*(1)||^(1/p) with p' = p/(p-1): the interpolation
// upper bound on the S^p -> S^p norm of any positive map.
double bound_rhs(const PositiveMapRep& map, double p);

// Lower bound on the S^p -> S^p norm by nonlinear power iteration:
// from each random start, alternate X -> N(X) -> p-norm subgradient ->
// N*(·) -> p'-norm subgradient, tracking the best ratio seen. Any
// intermediate ratio is a certified lower bound, converged or not.
// Both Hermitian and general starts are used — the supremum need not
// sit at Hermitian X for maps that do not preserve adjoints.
double norm_lower_bound(const PositiveMapRep& map, double p, int trials,
                        int iters, std::uint64_t seed);

inline constexpr int kDefaultTrials = 20;
inline constexpr int kDefaultIters = 50;

struct SlackRow {
  double p = 0.0;
  double lower = 0.0;  // norm_lower_bound
  double rhs = 0.0;    // bound_rhs
  double slack = 0.0;  // rhs - lower (>= -1e-9 * rhs always)
};

struct VerifyReport {
  bool ok = true;
  std::vector<SlackRow> rows;
};

// Checks lower <= rhs * (1 + 1e-9) on every grid point. A violation
// would falsify the interpolation bound; it must never happen.
VerifyReport verify_bound(const PositiveMapRep& map,
                          const std::vector<double>& p_grid, int trials,
                          int iters, std::uint64_t seed);

// Random map with Kraus count uniform in 1..d^2 and i.i.d. standard
// complex Gaussian entries; co_positive sets pre_transpose. Positivity
// holds by construction for both families.
PositiveMapRep random_map(Eigen::Index d, bool co_positive,
                          std::uint64_t seed);

}  // namespace gchan::interp
