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

#include "gchan/fockoracle.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gchan/matcore.hpp"

namespace gchan::fock {

namespace {

// lf[k] = ln k!
std::vector<double> log_factorials(Eigen::Index n_max) {
  std::vector<double> lf(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (Eigen::Index k = 1; k <= n_max; ++k) {
    lf[static_cast<std::size_t>(k)] =
        lf[static_cast<std::size_t>(k - 1)] + std::log(static_cast<double>(k));
  }
  return lf;
}

double lbinom(const std::vector<double>& lf, Eigen::Index n, Eigen::Index k) {
  return lf[static_cast<std::size_t>(n)] - lf[static_cast<std::size_t>(k)] -
         lf[static_cast<std::size_t>(n - k)];
}

double lbinom_direct(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
         std::lgamma(n - k + 1.0);
}

void require_eta(double eta, const char* who) {
  if (!(eta > 0.0) || eta > 1.0) {
    std::ostringstream msg;
    msg << who << ": eta must lie in (0, 1], got " << eta;
    throw std::invalid_argument(msg.str());
  }
}

void require_gain(double G, const char* who) {
  if (!(G >= 1.0)) {
    std::ostringstream msg;
    msg << who << ": gain must be >= 1, got " << G;
    throw std::invalid_argument(msg.str());
  }
}

ComplexMatrix kron(const ComplexMatrix& A, const ComplexMatrix& B) {
  ComplexMatrix out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    }
  }
  return out;
}

}  // namespace

Eigen::Index KrausChannel::dim_in() const {
  return std::accumulate(cutoffs_in.begin(), cutoffs_in.end(),
                         Eigen::Index{1}, std::multiplies<>());
}

Eigen::Index KrausChannel::dim_out() const {
  return std::accumulate(cutoffs_out.begin(), cutoffs_out.end(),
                         Eigen::Index{1}, std::multiplies<>());
}

Eigen::Index thermal_cutoff(double E) {
  if (E < 0.0) throw std::domain_error("thermal_cutoff: E must be >= 0");
  return std::max<Eigen::Index>(
      1, static_cast<Eigen::Index>(std::ceil(28.0 * (E + 1.0))));
}

FockOperator thermal_matrix(double E, Eigen::Index cutoff) {
  if (E < 0.0 || cutoff < 1) {
    throw std::invalid_argument("thermal_matrix: need E >= 0 and cutoff >= 1");
  }
  FockOperator rho;
  rho.mode_cutoffs = {cutoff};
  rho.matrix = ComplexMatrix::Zero(cutoff, cutoff);
  rho.state = true;
  if (E == 0.0) {
    rho.matrix(0, 0) = 1.0;
    return rho;
  }
  const double log_head = -std::log1p(E);        // ln 1/(E+1)
  const double log_step = -std::log1p(1.0 / E);  // ln E/(E+1)
  for (Eigen::Index n = 0; n < cutoff; ++n) {
    rho.matrix(n, n) = std::exp(log_head + static_cast<double>(n) * log_step);
  }
  return rho;
}

KrausChannel attenuator_kraus(double eta, Eigen::Index cutoff) {
  require_eta(eta, "attenuator_kraus");
  if (cutoff < 1) throw std::invalid_argument("attenuator_kraus: cutoff >= 1");
  KrausChannel ch;
  ch.cutoffs_in = {cutoff};
  ch.cutoffs_out = {cutoff};
  if (eta == 1.0) {
    ch.ops = {ComplexMatrix::Identity(cutoff, cutoff)};
    return ch;
  }
  const auto lf = log_factorials(cutoff);
  const double log_eta = std::log(eta);
  const double log_loss = std::log1p(-eta);
  ch.ops.reserve(static_cast<std::size_t>(cutoff));
  for (Eigen::Index l = 0; l < cutoff; ++l) {
    ComplexMatrix A = ComplexMatrix::Zero(cutoff, cutoff);
    for (Eigen::Index n = l; n < cutoff; ++n) {
      A(n - l, n) = std::exp(
          0.5 * (lbinom(lf, n, l) + static_cast<double>(l) * log_loss +
                 static_cast<double>(n - l) * log_eta));
    }
    ch.ops.push_back(std::move(A));
  }
  return ch;
}

KrausChannel amplifier_kraus(double G, Eigen::Index cutoff_in,
                             Eigen::Index cutoff_out) {
  require_gain(G, "amplifier_kraus");
  if (cutoff_in < 1 || cutoff_out < cutoff_in) {
    throw std::invalid_argument(
        "amplifier_kraus: need 1 <= cutoff_in <= cutoff_out");
  }
  KrausChannel ch;
  ch.cutoffs_in = {cutoff_in};
  ch.cutoffs_out = {cutoff_out};
  if (G == 1.0) {
    ComplexMatrix B = ComplexMatrix::Zero(cutoff_out, cutoff_in);
    B.topLeftCorner(cutoff_in, cutoff_in).setIdentity();
    ch.ops = {std::move(B)};
    return ch;
  }
  const Eigen::Index lmax = cutoff_out - cutoff_in;
  const auto lf = log_factorials(cutoff_out);
  const double log_excess = std::log1p(-1.0 / G);  // ln(1 - 1/G)
  const double log_gain = std::log(G);
  ch.ops.reserve(static_cast<std::size_t>(lmax) + 1);
  for (Eigen::Index l = 0; l <= lmax; ++l) {
    ComplexMatrix B = ComplexMatrix::Zero(cutoff_out, cutoff_in);
    for (Eigen::Index n = 0; n < cutoff_in; ++n) {
      B(n + l, n) = std::exp(
          0.5 * (lbinom(lf, n + l, l) + static_cast<double>(l) * log_excess) -
          0.5 * static_cast<double>(n + 1) * log_gain);
    }
    ch.ops.push_back(std::move(B));
  }
  return ch;
}

double amplifier_tail(double G, Eigen::Index n, Eigen::Index lmax) {
  require_gain(G, "amplifier_tail");
  if (n < 0 || lmax < 0) {
    throw std::invalid_argument("amplifier_tail: need n, lmax >= 0");
  }
  if (G == 1.0) return 0.0;
  const double log_excess = std::log1p(-1.0 / G);
  double sum = 0.0;
  for (Eigen::Index l = 0; l <= lmax; ++l) {
    sum += std::exp(lbinom_direct(static_cast<double>(n + l),
                                  static_cast<double>(l)) -
                    static_cast<double>(n + 1) * std::log(G) +
                    static_cast<double>(l) * log_excess);
  }
  return std::max(0.0, 1.0 - sum);
}

Eigen::Index amplifier_lmax(double G, Eigen::Index cutoff_in, double tol) {
  require_gain(G, "amplifier_lmax");
  if (cutoff_in < 1 || !(tol > 0.0)) {
    throw std::invalid_argument("amplifier_lmax: need cutoff_in >= 1, tol > 0");
  }
  if (G == 1.0) return 0;
  const double n = static_cast<double>(cutoff_in - 1);
  const double log_excess = std::log1p(-1.0 / G);
  double sum = 0.0;
  for (Eigen::Index l = 0; l < (Eigen::Index{1} << 23); ++l) {
    sum += std::exp(lbinom_direct(n + static_cast<double>(l),
                                  static_cast<double>(l)) -
                    (n + 1.0) * std::log(G) +
                    static_cast<double>(l) * log_excess);
    if (1.0 - sum < tol) return l;
  }
  throw std::runtime_error("amplifier_lmax: tail sum failed to converge");
}

SingleModeDecomposition single_mode_decompose(double K_abs2, double mu) {
  if (!(K_abs2 > 0.0)) {
    throw std::invalid_argument("single_mode_decompose: need |K|^2 > 0");
  }
  const double half_gap = 0.5 * std::abs(1.0 - K_abs2);
  const double scale = 1.0 + std::abs(mu) + half_gap;
  if (mu - half_gap < -kPsdClampTol * scale) {
    std::ostringstream msg;
    msg << "single_mode_decompose: (|K|^2=" << K_abs2 << ", mu=" << mu
        << ") violates the CP conditions";
    throw std::domain_error(msg.str());
  }
  SingleModeDecomposition dec;
  dec.G = 0.5 * (K_abs2 + 2.0 * mu + 1.0);
  dec.eta = K_abs2 / dec.G;
  // CP guarantees eta <= 1 and G >= 1; rounding may graze the boundary.
  dec.eta = std::min(dec.eta, 1.0);
  dec.G = std::max(dec.G, 1.0);
  return dec;
}

FockOperator apply_channel(const KrausChannel& ch, const FockOperator& rho) {
  if (rho.mode_cutoffs != ch.cutoffs_in || rho.dim() != ch.dim_in()) {
    throw std::invalid_argument("apply_channel: dimension mismatch");
  }
  FockOperator out;
  out.mode_cutoffs = ch.cutoffs_out;
  out.matrix = ComplexMatrix::Zero(ch.dim_out(), ch.dim_out());
  out.state = rho.state;
  for (const ComplexMatrix& A : ch.ops) {
    out.matrix.noalias() += A * rho.matrix * A.adjoint();
  }
  if (rho.state) {
    const double tr_in = rho.matrix.trace().real();
    const double tr_out = out.matrix.trace().real();
    if (tr_out > tr_in + 1e-12 * std::max(1.0, tr_in)) {
      std::ostringstream msg;
      msg << "apply_channel: trace grew from " << tr_in << " to " << tr_out
          << "; internal invariant violated";
      throw std::logic_error(msg.str());
    }
  }
  return out;
}

KrausChannel tensor_channel(const KrausChannel& a, const KrausChannel& b) {
  KrausChannel out;
  out.cutoffs_in = a.cutoffs_in;
  out.cutoffs_in.insert(out.cutoffs_in.end(), b.cutoffs_in.begin(),
                        b.cutoffs_in.end());
  out.cutoffs_out = a.cutoffs_out;
  out.cutoffs_out.insert(out.cutoffs_out.end(), b.cutoffs_out.begin(),
                         b.cutoffs_out.end());
  out.ops.reserve(a.ops.size() * b.ops.size());
  for (const ComplexMatrix& A : a.ops) {
    for (const ComplexMatrix& B : b.ops) {
      out.ops.push_back(kron(A, B));
    }
  }
  return out;
}

FockOperator tensor_op(const FockOperator& a, const FockOperator& b) {
  FockOperator out;
  out.mode_cutoffs = a.mode_cutoffs;
  out.mode_cutoffs.insert(out.mode_cutoffs.end(), b.mode_cutoffs.begin(),
                          b.mode_cutoffs.end());
  out.matrix = kron(a.matrix, b.matrix);
  out.state = a.state && b.state;
  return out;
}

double schatten_norm_numeric(const FockOperator& rho, double p) {
  return schatten_norm(rho.matrix, p);
}

double entropy_numeric(const FockOperator& rho) {
  const RealVector lam = eig_hermitian(rho.matrix).eigenvalues;
  const double scale = 1.0 + lam.cwiseAbs().maxCoeff();
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < -kPsdClampTol * scale) {
      std::ostringstream msg;
      msg << "entropy_numeric: eigenvalue " << lam(i)
          << " negative beyond tolerance";
      throw std::domain_error(msg.str());
    }
    if (lam(i) > 0.0) entropy -= lam(i) * std::log(lam(i));
  }
  return entropy;
}

RealVector phi_of_identity_diag(double eta, Eigen::Index cutoff) {
  require_eta(eta, "phi_of_identity_diag");
  if (cutoff < 1) {
    throw std::invalid_argument("phi_of_identity_diag: cutoff >= 1");
  }
  return attenuator_diag(eta, RealVector::Ones(cutoff));
}

RealVector attenuator_diag(double eta, const RealVector& probs) {
  require_eta(eta, "attenuator_diag");
  if (probs.size() == 0) {
    throw std::invalid_argument("attenuator_diag: empty input");
  }
  if (eta == 1.0) return probs;
  const Eigen::Index N = probs.size();
  const auto lf = log_factorials(N);
  const double log_eta = std::log(eta);
  const double log_loss = std::log1p(-eta);
  RealVector out(N);
  for (Eigen::Index m = 0; m < N; ++m) {
    double sum = 0.0;
    for (Eigen::Index n = m; n < N; ++n) {
      sum += std::exp(lbinom(lf, n, m) + static_cast<double>(m) * log_eta +
                      static_cast<double>(n - m) * log_loss) *
             probs(n);
    }
    out(m) = sum;
  }
  return out;
}

RealVector amplifier_diag(double G, const RealVector& probs,
                          Eigen::Index cutoff_out) {
  require_gain(G, "amplifier_diag");
  const Eigen::Index N_in = probs.size();
  if (N_in == 0 || cutoff_out < N_in) {
    throw std::invalid_argument(
        "amplifier_diag: need nonempty input and cutoff_out >= input size");
  }
  RealVector out = RealVector::Zero(cutoff_out);
  if (G == 1.0) {
    out.head(N_in) = probs;
    return out;
  }
  const auto lf = log_factorials(cutoff_out);
  const double log_excess = std::log1p(-1.0 / G);
  const double log_gain = std::log(G);
  for (Eigen::Index m = 0; m < cutoff_out; ++m) {
    const Eigen::Index l_min = std::max<Eigen::Index>(0, m - (N_in - 1));
    double sum = 0.0;
    for (Eigen::Index l = l_min; l <= m; ++l) {
      sum += std::exp(lbinom(lf, m, l) -
                      static_cast<double>(m - l + 1) * log_gain +
                      static_cast<double>(l) * log_excess) *
             probs(m - l);
    }
    out(m) = sum;
  }
  return out;
}

RealVector channel_diag(const SingleModeDecomposition& dec,
                        const RealVector& probs, Eigen::Index cutoff_out) {
  return amplifier_diag(dec.G, attenuator_diag(dec.eta, probs), cutoff_out);
}

double diag_schatten_norm(const RealVector& diag, double p) {
  if (!(p >= 1.0)) {
    throw std::domain_error("diag_schatten_norm: p must be >= 1");
  }
  if (diag.size() == 0) {
    throw std::invalid_argument("diag_schatten_norm: empty input");
  }
  const double top = diag.cwiseAbs().maxCoeff();
  if (top == 0.0) return 0.0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    sum += std::pow(std::abs(diag(i)) / top, p);
  }
  return top * std::pow(sum, 1.0 / p);
}

}  // namespace gchan::fock
