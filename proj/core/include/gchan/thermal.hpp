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

#include "gchan/channel.hpp"
#include "gchan/types.hpp"

namespace gchan {

// Per-mode mean occupation numbers of a gauge-invariant Gaussian state
// after diagonalization, ascending.
struct ThermalSpectrum {
  RealVector e;
};

// ln((E+1)^p - E^p), evaluated without cancellation for any E >= 0 and
// p >= 1. The naive difference loses all precision near E ~ 1e8; this
// routes through log1p/expm1 instead.
double log_pow_diff(double E, double p);

// Schatten p-norm of the s-mode thermal state with mean occupation E
// per mode: ((E+1)^p - E^p)^(-s/p). E = 0 (vacuum) gives 1 for every p.
double thermal_schatten_norm(double E, double p, Eigen::Index s);

// Eigenvalues of (E+1/2) K*K + mu - 1/2, ascending: the per-mode
// occupations of the channel output on thermal input. Nonnegative for
// any CP channel; values in [-1e-10, 0) from the quantum-limited
// boundary are clamped to 0, CP-invalid params are rejected.
ThermalSpectrum output_spectrum(const ChannelParams& params, double E);

// Schatten p-norm of the channel output on thermal input, computed two
// ways that must agree: det(S+^p - S-^p)^(-1/p) with S± = (E+1/2)K*K +
// mu ± 1/2, and the per-mode product over output_spectrum. Disagreement
// beyond 1e-10 relative is an internal-consistency failure and throws.
double output_schatten_norm(const ChannelParams& params, double E, double p);

// ||Phi(omega)||_p / ||omega||_p on thermal input: a lower bound for
// the channel's p->p norm at every E, approaching it as E -> infinity.
double norm_ratio(const ChannelParams& params, double E, double p);

// von Neumann entropy of the single-mode thermal state, in nats:
// g(E) = (E+1) ln(E+1) - E ln E, with g(0) = 0.
double thermal_entropy(double E);

// Entropy gain on thermal input: sum_j g(e_j) - s g(E). Bounded below
// by ln det K*K, which it approaches as E -> infinity.
double entropy_gain(const ChannelParams& params, double E);

// Mixed-norm ratio ||Phi(omega)||_q / ||omega||_p for q < p. Grows like
// E^(1/q - 1/p), witnessing that no q < p extension of the channel is
// bounded. q >= p is rejected.
double cross_norm_ratio(const ChannelParams& params, double E, double p,
                        double q);

}  // namespace gchan
