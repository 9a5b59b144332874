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

#include "gchan/matcore.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gchan {

namespace {

void require_square(const ComplexMatrix& H, const char* who) {
  if (H.rows() != H.cols() || H.rows() == 0) {
    std::ostringstream msg;
    msg << who << ": expected a nonempty square matrix, got " << H.rows()
        << "x" << H.cols();
    throw std::invalid_argument(msg.str());
  }
}

// Eigenvalues of a nominally PSD matrix with small negatives clamped
// away; throws if any eigenvalue is negative beyond tolerance.
RealVector psd_eigenvalues(const ComplexMatrix& H, const char* who) {
  EigResult eig = eig_hermitian(H);
  const double scale =
      std::max(std::abs(eig.eigenvalues(0)),
               std::abs(eig.eigenvalues(eig.eigenvalues.size() - 1)));
  const double floor = -kPsdClampTol * scale;
  RealVector vals = eig.eigenvalues;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < floor) {
      std::ostringstream msg;
      msg << who << ": matrix is not PSD; eigenvalue " << vals(i)
          << " below clamp tolerance " << floor;
      throw std::domain_error(msg.str());
    }
    if (vals(i) < 0.0) vals(i) = 0.0;
  }
  return vals;
}

}  // namespace

bool is_hermitian(const ComplexMatrix& H, double rtol) {
  if (H.rows() != H.cols()) return false;
  if (H.size() == 0) return false;
  const double dev = (H - H.adjoint()).cwiseAbs().maxCoeff();
  return dev <= rtol * (1.0 + H.cwiseAbs().maxCoeff());
}

EigResult eig_hermitian(const ComplexMatrix& H) {
  require_square(H, "eig_hermitian");
  if (!is_hermitian(H)) {
    const double dev = (H - H.adjoint()).cwiseAbs().maxCoeff();
    std::ostringstream msg;
    msg << "eig_hermitian: input is not Hermitian; max |H - H*| = " << dev
        << " exceeds " << kHermitianTol * (1.0 + H.cwiseAbs().maxCoeff());
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      ((H + H.adjoint()) * 0.5).eval());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigensolver failed to converge");
  }
  return EigResult{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix psd_power(const ComplexMatrix& H, double p) {
  if (!(p >= 0.0)) {
    throw std::domain_error("psd_power: exponent must be >= 0");
  }
  EigResult eig = eig_hermitian(H);
  const double scale =
      std::max(std::abs(eig.eigenvalues(0)),
               std::abs(eig.eigenvalues(eig.eigenvalues.size() - 1)));
  const double floor = -kPsdClampTol * scale;
  RealVector powered(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < powered.size(); ++i) {
    double v = eig.eigenvalues(i);
    if (v < floor) {
      std::ostringstream msg;
      msg << "psd_power: matrix is not PSD; eigenvalue " << v
          << " below clamp tolerance " << floor;
      throw std::domain_error(msg.str());
    }
    powered(i) = std::pow(std::max(v, 0.0), p);
  }
  return eig.vectors * powered.asDiagonal() * eig.vectors.adjoint();
}

double det_psd(const ComplexMatrix& H) {
  return psd_eigenvalues(H, "det_psd").prod();
}

double log_det_psd(const ComplexMatrix& H) {
  const RealVector vals = psd_eigenvalues(H, "log_det_psd");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) == 0.0) return -std::numeric_limits<double>::infinity();
    sum += std::log(vals(i));
  }
  return sum;
}

double schatten_norm(const ComplexMatrix& X, double p) {
  if (!(p >= 1.0)) {
    throw std::domain_error("schatten_norm: p must be >= 1");
  }
  if (X.size() == 0) {
    throw std::invalid_argument("schatten_norm: empty matrix");
  }
  RealVector sv;
  if (X.rows() == X.cols() && is_hermitian(X)) {
    sv = eig_hermitian(X).eigenvalues.cwiseAbs();
  } else if (X.rows() <= 32 && X.cols() <= 32) {
    sv = Eigen::JacobiSVD<ComplexMatrix>(X).singularValues();
  } else {
    sv = Eigen::BDCSVD<ComplexMatrix>(X).singularValues();
  }
  const double top = sv.maxCoeff();
  if (top == 0.0) return 0.0;
  // Factor out the largest singular value so large p cannot overflow;
  // the scaled terms underflow harmlessly to 0.
  double sum = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    sum += std::pow(sv(i) / top, p);
  }
  return top * std::pow(sum, 1.0 / p);
}

double operator_norm(const ComplexMatrix& X) {
  if (X.size() == 0) {
    throw std::invalid_argument("operator_norm: empty matrix");
  }
  if (X.rows() == X.cols() && is_hermitian(X)) {
    return eig_hermitian(X).eigenvalues.cwiseAbs().maxCoeff();
  }
  if (X.rows() <= 32 && X.cols() <= 32) {
    return Eigen::JacobiSVD<ComplexMatrix>(X).singularValues().maxCoeff();
  }
  return Eigen::BDCSVD<ComplexMatrix>(X).singularValues().maxCoeff();
}

}  // namespace gchan
