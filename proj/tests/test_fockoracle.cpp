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

#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "gchan/fockoracle.hpp"
#include "gchan/matcore.hpp"
#include "gchan/thermal.hpp"
#include "support/random_inputs.hpp"

using namespace gchan;
using namespace gchan::fock;

namespace {

// Dense completeness defect sum A*A - I restricted to the truncated space.
double completeness_defect(const KrausChannel& ch) {
  ComplexMatrix sum = ComplexMatrix::Zero(ch.dim_in(), ch.dim_in());
  for (const ComplexMatrix& A : ch.ops) sum += A.adjoint() * A;
  return (sum - ComplexMatrix::Identity(ch.dim_in(), ch.dim_in()))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace

TEST_SUITE("fockoracle") {

TEST_CASE("thermal_cutoff: tail rule") {
  CHECK(thermal_cutoff(0.0) == 28);
  CHECK(thermal_cutoff(100.0) == 2828);
  // The chosen cutoff really does push the geometric tail below 1e-12.
  for (double E : {0.5, 1.0, 10.0, 100.0}) {
    const double tail = std::exp(-std::log1p(1.0 / E) *
                                 static_cast<double>(thermal_cutoff(E)));
    REQUIRE(tail < 1e-12);
  }
}

TEST_CASE("thermal_matrix: vacuum, E=1 ladder, trace deficit") {
  const FockOperator vac = thermal_matrix(0.0, 5);
  CHECK(vac.matrix(0, 0).real() == doctest::Approx(1.0));
  CHECK(vac.matrix.trace().real() == doctest::Approx(1.0));

  const FockOperator one = thermal_matrix(1.0, 3);
  CHECK(one.matrix(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(one.matrix(1, 1).real() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(one.matrix(2, 2).real() == doctest::Approx(0.125).epsilon(1e-14));

  const FockOperator forty = thermal_matrix(1.0, 40);
  CHECK(1.0 - forty.matrix.trace().real() ==
        doctest::Approx(std::pow(2.0, -40.0)).epsilon(1e-3));
}

TEST_CASE("attenuator_kraus: eta=1 is the identity, completeness is exact") {
  const KrausChannel id = attenuator_kraus(1.0, 8);
  CHECK(id.ops.size() == 1);
  CHECK((id.ops[0] - ComplexMatrix::Identity(8, 8)).cwiseAbs().maxCoeff() ==
        0.0);

  for (double eta : {0.3, 0.5, 0.64, 0.99}) {
    REQUIRE(completeness_defect(attenuator_kraus(eta, 40)) < 1e-13);
  }
}

TEST_CASE("attenuator_kraus: vacuum is a fixed point, thermal law holds") {
  const KrausChannel ch = attenuator_kraus(0.37, 30);
  const FockOperator vac_out = apply_channel(ch, thermal_matrix(0.0, 30));
  CHECK((vac_out.matrix - thermal_matrix(0.0, 30).matrix)
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  // eta=0.5 on E=1 lands on the thermal state with e = 0.5.
  const KrausChannel half = attenuator_kraus(0.5, 60);
  const FockOperator out = apply_channel(half, thermal_matrix(1.0, 60));
  const FockOperator expected = thermal_matrix(0.5, 60);
  double worst = 0.0;
  for (Eigen::Index n = 0; n < 20; ++n) {
    worst = std::max(worst,
                     std::abs(out.matrix(n, n) - expected.matrix(n, n)));
  }
  CHECK(worst < 1e-8);
  // Off-diagonals stay zero: the channel preserves diagonal states.
  ComplexMatrix off = out.matrix;
  off.diagonal().setZero();
  CHECK(off.cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("amplifier_kraus: G=1 identity, vacuum heats to e = G-1") {
  const KrausChannel id = amplifier_kraus(1.0, 6, 6);
  CHECK(id.ops.size() == 1);
  CHECK((id.ops[0] - ComplexMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() ==
        0.0);

  const Eigen::Index lmax = amplifier_lmax(2.0, 1, 1e-12);
  const KrausChannel amp = amplifier_kraus(2.0, 1, 1 + lmax);
  const FockOperator out = apply_channel(amp, thermal_matrix(0.0, 1));
  const FockOperator expected = thermal_matrix(1.0, 1 + lmax);
  CHECK((out.matrix - expected.matrix).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("amplifier_kraus: thermal law E -> GE + G - 1 and tail control") {
  const Eigen::Index cin = 40;  // input tail 2^-40, below the tolerance
  const Eigen::Index lmax = amplifier_lmax(2.0, cin, 1e-12);
  const KrausChannel amp = amplifier_kraus(2.0, cin, cin + lmax);
  REQUIRE(amplifier_tail(2.0, cin - 1, lmax) < 1e-12);

  const FockOperator out = apply_channel(amp, thermal_matrix(1.0, cin));
  const FockOperator expected = thermal_matrix(3.0, cin + lmax);
  double worst = 0.0;
  for (Eigen::Index n = 0; n < 25; ++n) {
    worst = std::max(worst,
                     std::abs(out.matrix(n, n) - expected.matrix(n, n)));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("amplifier_tail: decreasing in lmax, zero at G=1") {
  CHECK(amplifier_tail(1.0, 10, 0) == 0.0);
  const double t5 = amplifier_tail(2.0, 10, 5);
  const double t20 = amplifier_tail(2.0, 10, 20);
  const double t80 = amplifier_tail(2.0, 10, 80);
  CHECK(t5 > t20);
  CHECK(t20 > t80);
  CHECK(t80 < 1e-6);
}

TEST_CASE("single_mode_decompose: named channels") {
  const SingleModeDecomposition att = single_mode_decompose(0.64, 0.18);
  CHECK(att.eta == doctest::Approx(0.64).epsilon(1e-14));
  CHECK(att.G == doctest::Approx(1.0).epsilon(1e-14));

  const SingleModeDecomposition amp = single_mode_decompose(2.0, 0.5);
  CHECK(amp.eta == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(amp.G == doctest::Approx(2.0).epsilon(1e-14));

  // Classical-noise channel: K^2 = 1, mu = 1.
  const SingleModeDecomposition noise = single_mode_decompose(1.0, 1.0);
  CHECK(noise.eta == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(noise.G == doctest::Approx(2.0).epsilon(1e-14));

  CHECK_THROWS_AS(single_mode_decompose(0.64, 0.10), std::domain_error);
  CHECK_THROWS_AS(single_mode_decompose(0.0, 0.5), std::invalid_argument);
}

TEST_CASE("single_mode_decompose: amplifier-after-attenuator reproduces the "
          "channel's thermal action") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 25; ++i) {
    const ChannelParams params = testing::random_single_mode(rng);
    const double k2 = std::norm(params.K(0, 0));
    const double mu = params.mu(0, 0).real();
    const SingleModeDecomposition dec = single_mode_decompose(k2, mu);
    for (double E : {0.0, 0.5, 1.0, 10.0}) {
      const double expected = output_spectrum(params, E).e(0);
      const double eta_stage = dec.eta * E;
      const double composed = dec.G * eta_stage + dec.G - 1.0;
      REQUIRE(composed == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("apply_channel: rejects mismatched dimensions, keeps PSD") {
  const KrausChannel ch = attenuator_kraus(0.5, 10);
  CHECK_THROWS_AS(apply_channel(ch, thermal_matrix(1.0, 12)),
                  std::invalid_argument);

  std::mt19937_64 rng(73);
  FockOperator rho;
  rho.mode_cutoffs = {10};
  rho.matrix = testing::random_density(10, rng);
  rho.state = true;
  const FockOperator out = apply_channel(ch, rho);
  const RealVector eig = eig_hermitian(out.matrix).eigenvalues;
  CHECK(eig(0) >= -1e-12);
  CHECK(out.matrix.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tensor_channel: product channels act factor-wise") {
  // A truncated amplifier head-room of 8 keeps output levels <= 8 exact;
  // only the high levels lose the discarded l > 8 terms.
  const KrausChannel a = attenuator_kraus(0.5, 12);
  const KrausChannel b = amplifier_kraus(2.0, 12, 20);
  const KrausChannel joint = tensor_channel(a, b);
  CHECK(joint.dim_in() == 144);
  CHECK(joint.ops.size() == a.ops.size() * b.ops.size());

  const FockOperator in =
      tensor_op(thermal_matrix(1.0, 12), thermal_matrix(1.0, 12));
  const FockOperator out = apply_channel(joint, in);
  const FockOperator split = tensor_op(
      apply_channel(a, thermal_matrix(1.0, 12)),
      apply_channel(b, thermal_matrix(1.0, 12)));
  CHECK((out.matrix - split.matrix).cwiseAbs().maxCoeff() < 1e-13);

  // omega_1 x omega_1 -> omega_0.5 x omega_3 on the low levels; the
  // 12-level input truncation (tail 2^-12) dominates the error.
  const FockOperator law =
      tensor_op(thermal_matrix(0.5, 12), thermal_matrix(3.0, 20));
  double worst = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      const Eigen::Index idx_out = i * 20 + j;
      worst = std::max(worst, std::abs(out.matrix(idx_out, idx_out) -
                                       law.matrix(idx_out, idx_out)));
    }
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("schatten_norm_numeric: projector, thermal, diagonal") {
  FockOperator proj;
  proj.mode_cutoffs = {4};
  proj.matrix = ComplexMatrix::Zero(4, 4);
  proj.matrix(2, 2) = 1.0;
  CHECK(schatten_norm_numeric(proj, 1.7) == doctest::Approx(1.0));

  CHECK(schatten_norm_numeric(thermal_matrix(1.0, 60), 2.0) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

  FockOperator diag;
  diag.mode_cutoffs = {2};
  diag.matrix = ComplexMatrix::Zero(2, 2);
  diag.matrix(0, 0) = 3.0;
  diag.matrix(1, 1) = 4.0;
  CHECK(schatten_norm_numeric(diag, 2.0) == doctest::Approx(5.0));
}

TEST_CASE("entropy_numeric: pure, thermal, maximally mixed") {
  FockOperator pure;
  pure.mode_cutoffs = {3};
  pure.matrix = ComplexMatrix::Zero(3, 3);
  pure.matrix(0, 0) = 1.0;
  CHECK(entropy_numeric(pure) == doctest::Approx(0.0));

  CHECK(entropy_numeric(thermal_matrix(1.0, 60)) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-10));

  FockOperator mixed;
  mixed.mode_cutoffs = {4};
  mixed.matrix = 0.25 * ComplexMatrix::Identity(4, 4);
  CHECK(entropy_numeric(mixed) == doctest::Approx(std::log(4.0)));

  FockOperator bad;
  bad.mode_cutoffs = {2};
  bad.matrix = ComplexMatrix::Zero(2, 2);
  bad.matrix(0, 0) = 1.0;
  bad.matrix(1, 1) = -0.5;
  CHECK_THROWS_AS(entropy_numeric(bad), std::domain_error);
}

TEST_CASE("phi_of_identity_diag: eta=1 passthrough, interior approach to "
          "1/eta") {
  const RealVector ones = phi_of_identity_diag(1.0, 10);
  CHECK((ones - RealVector::Ones(10)).cwiseAbs().maxCoeff() == 0.0);

  const RealVector img64 = phi_of_identity_diag(0.64, 400);
  CHECK(img64(10) == doctest::Approx(1.0 / 0.64).epsilon(1e-6));
  const RealVector img50 = phi_of_identity_diag(0.5, 400);
  CHECK(img50(5) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("diagonal fast path: matches the dense Kraus pipeline") {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const Eigen::Index N = 24;
    RealVector probs(N);
    for (Eigen::Index n = 0; n < N; ++n) probs(n) = uniform(rng);
    probs /= probs.sum();

    FockOperator rho;
    rho.mode_cutoffs = {N};
    rho.matrix = probs.cast<Complex>().asDiagonal();
    rho.state = true;

    const double eta = 0.2 + 0.79 * uniform(rng);
    const FockOperator dense =
        apply_channel(attenuator_kraus(eta, N), rho);
    const RealVector fast = attenuator_diag(eta, probs);
    REQUIRE((dense.matrix.diagonal().real() - fast).cwiseAbs().maxCoeff() <
            1e-13);

    const double G = 1.0 + 2.0 * uniform(rng);
    const Eigen::Index lmax = amplifier_lmax(G, N, 1e-12);
    const FockOperator dense_amp =
        apply_channel(amplifier_kraus(G, N, N + lmax), rho);
    const RealVector fast_amp = amplifier_diag(G, probs, N + lmax);
    REQUIRE((dense_amp.matrix.diagonal().real() - fast_amp)
                .cwiseAbs()
                .maxCoeff() < 1e-13);
  }
}

TEST_CASE("oracle vs analytics: random single-mode channels on thermal "
          "input") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 50; ++i) {
    const ChannelParams params = testing::random_single_mode(rng, 0.1, 4.0);
    const double k2 = std::norm(params.K(0, 0));
    const double mu = params.mu(0, 0).real();
    const SingleModeDecomposition dec = single_mode_decompose(k2, mu);
    for (double E : {0.5, 1.0, 5.0}) {
      const Eigen::Index cin = thermal_cutoff(E);
      const double e_out = output_spectrum(params, E).e(0);
      const Eigen::Index cout =
          std::max(thermal_cutoff(e_out),
                   cin + amplifier_lmax(dec.G, cin, 1e-12));
      const RealVector out_diag =
          channel_diag(dec, thermal_matrix(E, cin).matrix.diagonal().real(),
                       cout);
      for (double p : {1.5, 2.0, 3.0}) {
        const double numeric = diag_schatten_norm(out_diag, p);
        const double analytic = output_schatten_norm(params, E, p);
        REQUIRE(numeric == doctest::Approx(analytic).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("oracle entropy gain: random low-rank states stay above "
          "ln det K*K") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 10; ++trial) {
    const ChannelParams params = testing::random_single_mode(rng);
    const double k2 = std::norm(params.K(0, 0));
    const SingleModeDecomposition dec =
        single_mode_decompose(k2, params.mu(0, 0).real());
    const Eigen::Index n_in = 12;
    const Eigen::Index lmax = amplifier_lmax(dec.G, n_in, 1e-12);

    const KrausChannel att = attenuator_kraus(dec.eta, n_in);
    const KrausChannel amp = amplifier_kraus(dec.G, n_in, n_in + lmax);

    for (int s = 0; s < 5; ++s) {
      FockOperator rho;
      rho.mode_cutoffs = {n_in};
      rho.matrix = testing::random_density(n_in, rng);
      rho.state = true;
      const FockOperator out = apply_channel(amp, apply_channel(att, rho));
      const double gain = entropy_numeric(out) - entropy_numeric(rho);
      REQUIRE(gain >= std::log(k2) - 1e-4);
    }
  }
}

}  // TEST_SUITE
