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

#include "gchan/thermal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gchan/matcore.hpp"

namespace gchan {

namespace {

constexpr double kDualPathRelTol = 1e-10;
constexpr double kRatioSlackRelTol = 1e-9;

void require_p_above_one(double p, const char* who) {
  if (!(p > 1.0)) {
    std::ostringstream msg;
    msg << who << ": p must be > 1, got " << p;
    throw std::domain_error(msg.str());
  }
}

// ln(a^p - b^p) for a > b >= 0, from independently computed a and b.
// Direct evaluation where it is exact enough; log-space otherwise
// (large b brings cancellation, large p brings overflow).
double log_pow_diff_pair(double a, double b, double p) {
  if (b <= 0.0) return p * std::log(a);
  if (b < 1e6 && p * std::log(a) < 300.0) {
    return std::log(std::pow(a, p) - std::pow(b, p));
  }
  const double t = p * (std::log(a) - std::log(b));
  if (t > 40.0) return p * std::log(a) + std::log1p(-std::exp(-t));
  return p * std::log(b) + std::log(std::expm1(t));
}

// Spectrum of (E+1/2) K*K + mu + shift, ascending.
RealVector shifted_output_eigenvalues(const ChannelParams& params, double E,
                                      double shift) {
  ComplexMatrix H = (E + 0.5) * (params.K.adjoint() * params.K) + params.mu +
                    shift * ComplexMatrix::Identity(params.s, params.s);
  return eig_hermitian(H).eigenvalues;
}

}  // namespace

double log_pow_diff(double E, double p) {
  if (E < 0.0 || !(p >= 1.0)) {
    throw std::domain_error("log_pow_diff: need E >= 0 and p >= 1");
  }
  if (E == 0.0) return 0.0;
  // (E+1)^p - E^p = E^p (exp(t) - 1) with t = p ln(1 + 1/E).
  const double t = p * std::log1p(1.0 / E);
  if (t > 40.0) {
    // exp(t) dwarfs 1: switch the factorization to (E+1)^p (1 - e^{-t}).
    return p * std::log1p(E) + std::log1p(-std::exp(-t));
  }
  return p * std::log(E) + std::log(std::expm1(t));
}

double thermal_schatten_norm(double E, double p, Eigen::Index s) {
  if (s < 1) throw std::invalid_argument("thermal_schatten_norm: s >= 1");
  return std::exp(-(static_cast<double>(s) / p) * log_pow_diff(E, p));
}

ThermalSpectrum output_spectrum(const ChannelParams& params, double E) {
  if (E < 0.0) throw std::domain_error("output_spectrum: E must be >= 0");
  const CpReport cp = cp_check(params);
  if (!cp.is_cp) {
    std::ostringstream msg;
    msg << "output_spectrum: channel is not CP (min eigenvalues "
        << cp.min_eig_first << ", " << cp.min_eig_second << ")";
    throw std::domain_error(msg.str());
  }
  RealVector e = shifted_output_eigenvalues(params, E, -0.5);
  const double scale = 1.0 + e.cwiseAbs().maxCoeff();
  for (Eigen::Index j = 0; j < e.size(); ++j) {
    if (e(j) < -kPsdClampTol * scale) {
      throw std::logic_error(
          "output_spectrum: negative occupation from a CP channel; "
          "internal invariant violated");
    }
    if (e(j) < 0.0) e(j) = 0.0;
  }
  return ThermalSpectrum{e};
}

double output_schatten_norm(const ChannelParams& params, double E, double p) {
  if (!(p >= 1.0)) {
    throw std::domain_error("output_schatten_norm: p must be >= 1");
  }
  // Primary path: per-mode product over the output occupations.
  const ThermalSpectrum spec = output_spectrum(params, E);
  double log_prod = 0.0;
  for (Eigen::Index j = 0; j < spec.e.size(); ++j) {
    log_prod += log_pow_diff(spec.e(j), p);
  }
  const double from_spectrum = std::exp(-log_prod / p);

  // Cross-check: det(S+^p - S-^p)^(-1/p) with S± = (E+1/2)K*K + mu ± 1/2.
  // S+ and S- commute, so the determinant is the product of paired
  // spectral differences; the spectra come from two independent
  // eigendecompositions and pair up after sorting (S+ = S- + 1).
  const RealVector above = shifted_output_eigenvalues(params, E, 0.5);
  const RealVector below = shifted_output_eigenvalues(params, E, -0.5);
  double log_det = 0.0;
  for (Eigen::Index j = 0; j < above.size(); ++j) {
    log_det += log_pow_diff_pair(above(j), std::max(below(j), 0.0), p);
  }
  const double from_det = std::exp(-log_det / p);

  if (std::abs(from_det - from_spectrum) >
      kDualPathRelTol * std::max(from_det, from_spectrum)) {
    std::ostringstream msg;
    msg << "output_schatten_norm: determinant path " << from_det
        << " and spectrum path " << from_spectrum
        << " disagree beyond 1e-10 relative; internal invariant violated";
    throw std::logic_error(msg.str());
  }
  return from_spectrum;
}

double norm_ratio(const ChannelParams& params, double E, double p) {
  require_p_above_one(p, "norm_ratio");
  const ThermalSpectrum spec = output_spectrum(params, E);
  double log_ratio =
      static_cast<double>(params.s) / p * log_pow_diff(E, p);
  for (Eigen::Index j = 0; j < spec.e.size(); ++j) {
    log_ratio -= log_pow_diff(spec.e(j), p) / p;
  }
  const double ratio = std::exp(log_ratio);
  const double analytic = schatten_norm_analytic(params, p);
  if (ratio > analytic * (1.0 + kRatioSlackRelTol)) {
    std::ostringstream msg;
    msg << "norm_ratio: thermal ratio " << ratio
        << " exceeds the analytic norm " << analytic
        << "; internal invariant violated";
    throw std::logic_error(msg.str());
  }
  return ratio;
}

double thermal_entropy(double E) {
  if (E < 0.0) throw std::domain_error("thermal_entropy: E must be >= 0");
  if (E == 0.0) return 0.0;
  // (E+1) ln(E+1) - E ln E, grouped to stay finite-precision at large E.
  return std::log1p(E) + E * std::log1p(1.0 / E);
}

double entropy_gain(const ChannelParams& params, double E) {
  const ThermalSpectrum spec = output_spectrum(params, E);
  double gain = -static_cast<double>(params.s) * thermal_entropy(E);
  for (Eigen::Index j = 0; j < spec.e.size(); ++j) {
    gain += thermal_entropy(spec.e(j));
  }
  return gain;
}

double cross_norm_ratio(const ChannelParams& params, double E, double p,
                        double q) {
  if (!(q >= 1.0) || !(q < p)) {
    throw std::domain_error("cross_norm_ratio: need 1 <= q < p");
  }
  const ThermalSpectrum spec = output_spectrum(params, E);
  double log_ratio =
      static_cast<double>(params.s) / p * log_pow_diff(E, p);
  for (Eigen::Index j = 0; j < spec.e.size(); ++j) {
    log_ratio -= log_pow_diff(spec.e(j), q) / q;
  }
  return std::exp(log_ratio);
}

}  // namespace gchan
