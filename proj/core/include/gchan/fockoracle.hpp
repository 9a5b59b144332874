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

#include <vector>

#include "gchan/types.hpp"

namespace gchan::fock {

// Dense operator on a truncated multi-mode Fock space. Mode m
// contributes a factor of dimension mode_cutoffs[m]; the matrix lives
// on the tensor product, ordered with the last mode fastest.
struct FockOperator {
  std::vector<Eigen::Index> mode_cutoffs;
  ComplexMatrix matrix;
  bool state = false;  // Hermitian, PSD, trace in (0,1] when set

  Eigen::Index dim() const { return matrix.rows(); }
};

// Kraus family {A_l} mapping the truncated space of dimension
// prod(cutoffs_in) into prod(cutoffs_out). sum_l A_l† A_l = I holds
// exactly for the attenuator; the amplifier has a per-level deficit
// from the truncated l-sum, bounded by tail_bound below.
struct KrausChannel {
  std::vector<Eigen::Index> cutoffs_in;
  std::vector<Eigen::Index> cutoffs_out;
  std::vector<ComplexMatrix> ops;

  Eigen::Index dim_in() const;
  Eigen::Index dim_out() const;
};

// Truncation rule: smallest N with (E/(E+1))^N < 1e-12, i.e. about
// 28 (E+1) levels. Controls every downstream norm and entropy error.
Eigen::Index thermal_cutoff(double E);

// Thermal state of mean occupation E on `cutoff` levels: diagonal with
// entries (1/(E+1)) (E/(E+1))^n. Trace deficit is (E/(E+1))^cutoff.
FockOperator thermal_matrix(double E, Eigen::Index cutoff);

// Quantum-limited attenuator of transmissivity eta in (0,1]:
// <n-l| A_l |n> = sqrt(C(n,l) (1-eta)^l eta^(n-l)). The family resolves
// the identity exactly on the whole truncated space.
KrausChannel attenuator_kraus(double eta, Eigen::Index cutoff);

// Quantum-limited amplifier of gain G >= 1:
// <n+l| B_l |n> = sqrt(C(n+l,l)) G^(-(n+1)/2) (1-1/G)^(l/2) for
// l = 0 .. cutoff_out - cutoff_in. Completeness on level n holds up to
// the tail of the truncated l-sum.
KrausChannel amplifier_kraus(double G, Eigen::Index cutoff_in,
                             Eigen::Index cutoff_out);

// Upper bound on the completeness deficit 1 - <n| sum B_l†B_l |n> of
// the truncated amplifier on input level n.
double amplifier_tail(double G, Eigen::Index n, Eigen::Index lmax);

// Smallest extra head-room lmax with amplifier_tail(G, cutoff_in - 1,
// lmax) < tol; cutoff_out = cutoff_in + lmax.
Eigen::Index amplifier_lmax(double G, Eigen::Index cutoff_in, double tol);

struct SingleModeDecomposition {
  double eta = 1.0;
  double G = 1.0;
};

// Every single-mode channel (|K|^2, mu) splits as a quantum-limited
// amplifier after a quantum-limited attenuator: G = (|K|^2 + 2 mu + 1)/2,
// eta = |K|^2 / G. eta in (0,1] and G >= 1 exactly when the channel is
// CP; CP-violating scalars are rejected. The phase of K never matters
// for spectra or norms and is dropped.
SingleModeDecomposition single_mode_decompose(double K_abs2, double mu);

// rho -> sum_l A_l rho A_l†. For inputs flagged as states the output
// keeps the flag; trace never increases beyond 1e-12.
FockOperator apply_channel(const KrausChannel& ch, const FockOperator& rho);

// {A_i} x {B_j} -> {A_i ⊗ B_j}; mode lists concatenate.
KrausChannel tensor_channel(const KrausChannel& a, const KrausChannel& b);

// Kronecker product of operators; mode lists concatenate.
FockOperator tensor_op(const FockOperator& a, const FockOperator& b);

// (sum_i sigma_i^p)^(1/p) over singular values; eigenvalues are used
// when the operator is flagged Hermitian-by-construction via `state`.
double schatten_norm_numeric(const FockOperator& rho, double p);

// -sum lambda ln lambda over the spectrum, 0 ln 0 := 0. Eigenvalues
// below -1e-10 relative are rejected.
double entropy_numeric(const FockOperator& rho);

// Diagonal of the attenuator image of the truncated identity. Interior
// entries approach 1/eta, the inverse determinant of K*K.
RealVector phi_of_identity_diag(double eta, Eigen::Index cutoff);

// Fast path for diagonal states, exact in exact arithmetic: both
// channel families map diagonal to diagonal, so the action reduces to
// a probability-vector transform. Evaluated stably in log space;
// handles cutoffs in the thousands.
RealVector attenuator_diag(double eta, const RealVector& probs);
RealVector amplifier_diag(double G, const RealVector& probs,
                          Eigen::Index cutoff_out);

// amplifier_diag(G) after attenuator_diag(eta): the diagonal action of
// the general single-mode channel under single_mode_decompose.
RealVector channel_diag(const SingleModeDecomposition& dec,
                        const RealVector& probs, Eigen::Index cutoff_out);

// Schatten p-norm of a diagonal operator given as its diagonal:
// (sum |d_m|^p)^(1/p). Closes the fast path without densifying.
double diag_schatten_norm(const RealVector& diag, double p);

}  // namespace gchan::fock
