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

#include "gchan/channel.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gchan/matcore.hpp"

namespace gchan {

namespace {

constexpr double kSingularRelTol = 1e-12;  // K*K rank decision
constexpr double kMinPminus1 = 1e-6;       // conjugate-exponent precision guard

void require_params(const ChannelParams& params, const char* who) {
  if (params.s < 1 || params.K.rows() != params.s ||
      params.K.cols() != params.s || params.mu.rows() != params.s ||
      params.mu.cols() != params.s) {
    std::ostringstream msg;
    msg << who << ": inconsistent dimensions (s=" << params.s << ", K "
        << params.K.rows() << "x" << params.K.cols() << ", mu "
        << params.mu.rows() << "x" << params.mu.cols() << ")";
    throw std::invalid_argument(msg.str());
  }
}

// Ascending eigenvalues of K*K. All analytic outputs depend on K only
// through this product, so complex phases in K drop out here.
RealVector kstark_eigenvalues(const ChannelParams& params) {
  const ComplexMatrix M = params.K.adjoint() * params.K;
  return eig_hermitian(M).eigenvalues;
}

}  // namespace

ChannelParams single_mode_channel(Complex k, double mu) {
  ChannelParams params;
  params.s = 1;
  params.K = ComplexMatrix::Constant(1, 1, k);
  params.mu = ComplexMatrix::Constant(1, 1, Complex(mu, 0.0));
  return params;
}

ChannelParams diagonal_channel(const ComplexVector& k, const RealVector& mu) {
  if (k.size() != mu.size() || k.size() == 0) {
    throw std::invalid_argument(
        "diagonal_channel: k and mu must have equal nonzero length");
  }
  ChannelParams params;
  params.s = k.size();
  params.K = k.asDiagonal();
  params.mu = mu.cast<Complex>().asDiagonal();
  return params;
}

GaussianSigma thermal_sigma(double E, Eigen::Index s) {
  if (E < 0.0 || s < 1) {
    throw std::invalid_argument("thermal_sigma: need E >= 0 and s >= 1");
  }
  return GaussianSigma{(E + 0.5) * ComplexMatrix::Identity(s, s)};
}

CpReport cp_check(const ChannelParams& params) {
  require_params(params, "cp_check");
  const ComplexMatrix M = params.K.adjoint() * params.K;
  const ComplexMatrix half =
      0.5 * (ComplexMatrix::Identity(params.s, params.s) - M);
  const RealVector first = eig_hermitian(params.mu - half).eigenvalues;
  const RealVector second = eig_hermitian(params.mu + half).eigenvalues;

  CpReport report;
  report.min_eig_first = first(0);
  report.min_eig_second = second(0);
  const double scale = 1.0 + std::max(first.cwiseAbs().maxCoeff(),
                                      second.cwiseAbs().maxCoeff());
  const double floor = -kPsdClampTol * scale;
  report.is_cp = first(0) >= floor && second(0) >= floor;
  return report;
}

double schatten_norm_analytic(const ChannelParams& params, double p) {
  require_params(params, "schatten_norm_analytic");
  if (!(p >= 1.0)) {
    throw std::domain_error("schatten_norm_analytic: p must be >= 1");
  }
  if (p == 1.0) return 1.0;  // trace preservation; not the p > 1 formula
  if (p - 1.0 < kMinPminus1) {
    throw std::domain_error(
        "schatten_norm_analytic: p - 1 below 1e-6; conjugate exponent "
        "would lose precision");
  }
  const RealVector lam = kstark_eigenvalues(params);
  if (lam(0) <= kSingularRelTol * lam(lam.size() - 1)) {
    return std::numeric_limits<double>::infinity();
  }
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) log_det += std::log(lam(i));
  return std::exp(-log_det * (p - 1.0) / p);
}

GaussianSigma transform_sigma(const ChannelParams& params,
                              const GaussianSigma& state) {
  require_params(params, "transform_sigma");
  if (state.sigma.rows() != params.s || state.sigma.cols() != params.s) {
    throw std::invalid_argument("transform_sigma: Sigma dimension mismatch");
  }
  const ComplexMatrix I = ComplexMatrix::Identity(params.s, params.s);
  {
    const RealVector in_eig = eig_hermitian(state.sigma - 0.5 * I).eigenvalues;
    const double scale = 1.0 + in_eig.cwiseAbs().maxCoeff();
    if (in_eig(0) < -kPsdClampTol * scale) {
      std::ostringstream msg;
      msg << "transform_sigma: Sigma - I/2 has eigenvalue " << in_eig(0)
          << "; not a valid gauge-invariant state";
      throw std::invalid_argument(msg.str());
    }
  }
  ComplexMatrix out = params.mu + params.K.adjoint() * state.sigma * params.K;
  out = 0.5 * (out + out.adjoint()).eval();
  if (cp_check(params).is_cp) {
    const RealVector out_eig = eig_hermitian(out - 0.5 * I).eigenvalues;
    const double scale = 1.0 + out_eig.cwiseAbs().maxCoeff();
    if (out_eig(0) < -kPsdClampTol * scale) {
      throw std::logic_error(
          "transform_sigma: CP channel produced an unphysical output "
          "covariance; internal invariant violated");
    }
  }
  return GaussianSigma{out};
}

ChannelParams tensor(const ChannelParams& a, const ChannelParams& b) {
  require_params(a, "tensor");
  require_params(b, "tensor");
  ChannelParams out;
  out.s = a.s + b.s;
  out.K = ComplexMatrix::Zero(out.s, out.s);
  out.mu = ComplexMatrix::Zero(out.s, out.s);
  out.K.topLeftCorner(a.s, a.s) = a.K;
  out.K.bottomRightCorner(b.s, b.s) = b.K;
  out.mu.topLeftCorner(a.s, a.s) = a.mu;
  out.mu.bottomRightCorner(b.s, b.s) = b.mu;
  return out;
}

double entropy_gain_bound(const ChannelParams& params) {
  require_params(params, "entropy_gain_bound");
  const RealVector lam = kstark_eigenvalues(params);
  if (lam(0) <= kSingularRelTol * lam(lam.size() - 1)) {
    return -std::numeric_limits<double>::infinity();
  }
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) log_det += std::log(lam(i));
  return log_det;
}

}  // namespace gchan
