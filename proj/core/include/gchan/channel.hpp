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

#include <Eigen/Dense>

#include "gchan/types.hpp"

namespace gchan {

// Gauge-covariant Gaussian channel on s bosonic modes, determined by an
// s x s complex matrix K and an s x s Hermitian noise matrix mu. The
// channel is completely positive and trace preserving exactly when
// mu - (1 - K*K)/2 and mu + (1 - K*K)/2 are both PSD.
struct ChannelParams {
  Eigen::Index s = 0;
  ComplexMatrix K;
  ComplexMatrix mu;
};

// Convenience constructors for the cases used throughout the tests and
// the oracle: single-mode (k, mu) and diagonal multi-mode channels.
ChannelParams single_mode_channel(Complex k, double mu);
ChannelParams diagonal_channel(const ComplexVector& k, const RealVector& mu);

struct CpReport {
  bool is_cp = false;
  double min_eig_first = 0.0;   // smallest eigenvalue of mu - (1 - K*K)/2
  double min_eig_second = 0.0;  // smallest eigenvalue of mu + (1 - K*K)/2
};

// Gauge-invariant Gaussian state with characteristic function
// exp(-z* Sigma z); physical iff Sigma - I/2 is PSD. Thermal states with
// mean occupation E per mode have Sigma = (E + 1/2) I.
struct GaussianSigma {
  ComplexMatrix sigma;
};

GaussianSigma thermal_sigma(double E, Eigen::Index s);

// Complete-positivity test via the two matrix inequalities on (K*K, mu).
// Eigenvalue minima are reported relative to nothing — callers compare
// against -1e-10 * scale where scale = 1 + max spectral radius of the
// two matrices, which is what is_cp does internally.
CpReport cp_check(const ChannelParams& params);

// S^p -> S^p norm of the channel: (det K*K)^(-1/p') with p' = p/(p-1),
// for p > 1 and invertible K. Singular K (smallest eigenvalue of K*K
// below 1e-12 times its largest) yields +infinity. p = 1 returns 1 --
// trace preservation plus positivity, a regime not covered by the
// determinant formula. p in (0,1) and p <= 0 are rejected, as is
// p in (1, 1 + 1e-6) where the conjugate exponent loses precision.
double schatten_norm_analytic(const ChannelParams& params, double p);

// Covariance-level action on gauge-invariant Gaussian states:
// Sigma -> mu + K* Sigma K. Preserves Sigma - I/2 >= 0 for CP channels.
GaussianSigma transform_sigma(const ChannelParams& params,
                              const GaussianSigma& state);

// Block-diagonal direct sum; the norm of the result factorizes into the
// product of the factors' norms.
ChannelParams tensor(const ChannelParams& a, const ChannelParams& b);

// Greatest lower bound on the entropy gain S(out) - S(in) over all
// states: ln det K*K. Singular K gives -infinity.
double entropy_gain_bound(const ChannelParams& params);

}  // namespace gchan
