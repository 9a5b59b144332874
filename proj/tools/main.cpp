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
//
// gchan: batch front end for the channel-norm library. Five subcommands:
//
//   norm      analytic S^p -> S^p norm of a channel file
//   converge  thermal-ratio / entropy sweep over an E grid
//   oracle    truncated-Fock numeric norm vs the closed form
//   interp    randomized verification of the positive-map norm bound
//   entropy   entropy gain table with its determinant lower bound
//
// Machine output (JSON by default, CSV on request) goes to stdout; human
// notes go to stderr. All floating-point output is printed with 17
// significant digits, so identical invocations are byte-identical.
//
// Exit codes: 0 success (including "unbounded" results), 1 unreadable or
// malformed channel file, 2 channel fails the complete-positivity
// inequalities, 3 oracle tolerance exceeded or an entropy row below its
// bound, 4 norm-bound violation (with a counterexample dump), 64 bad
// parameter ranges.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gchan/channel.hpp"
#include "gchan/channel_io.hpp"
#include "gchan/fockoracle.hpp"
#include "gchan/interpbound.hpp"
#include "gchan/matcore.hpp"
#include "gchan/parallel.hpp"
#include "gchan/thermal.hpp"
#include "gchan/types.hpp"

namespace {

using namespace gchan;
namespace ib = gchan::interp;

constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;

// ---------------------------------------------------------------------------
// Deterministic output plumbing.

std::string fmt_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0.0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// Compact JSON with keys emitted in call order. Non-finite numbers have
// no JSON encoding, so they are written as the strings "inf", "-inf",
// "nan" — consumers that care get an unambiguous marker instead of a
// parse error.
class JsonWriter {
 public:
  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(const std::string& k) {
    separate();
    out_ += '"';
    out_ += json_escape(k);
    out_ += "\":";
    have_key_ = true;
    return *this;
  }
  JsonWriter& num(double v) {
    return raw(std::isfinite(v) ? fmt_double(v)
                                : '"' + fmt_double(v) + '"');
  }
  JsonWriter& integer(std::int64_t v) { return raw(std::to_string(v)); }
  JsonWriter& boolean(bool v) { return raw(v ? "true" : "false"); }
  JsonWriter& text(const std::string& s) {
    return raw('"' + json_escape(s) + '"');
  }
  JsonWriter& null() { return raw("null"); }

  const std::string& str() const { return out_; }

 private:
  JsonWriter& open(char c) {
    value_slot();
    out_ += c;
    first_.push_back(true);
    return *this;
  }
  JsonWriter& close(char c) {
    first_.pop_back();
    out_ += c;
    return *this;
  }
  JsonWriter& raw(const std::string& text) {
    value_slot();
    out_ += text;
    return *this;
  }
  void value_slot() {
    if (have_key_) {
      have_key_ = false;
      return;
    }
    separate();
  }
  void separate() {
    if (first_.empty()) return;
    if (first_.back()) {
      first_.back() = false;
    } else {
      out_ += ',';
    }
  }

  std::string out_;
  std::vector<bool> first_;
  bool have_key_ = false;
};

// CSV rows carry exactly the same %.17g-rendered numbers as the JSON.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out += ',';
      out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += row[i];
      }
      out += '\n';
    }
    return out;
  }
};

void print_stdout(const std::string& payload, bool newline = true) {
  std::cout << payload;
  if (newline) std::cout << '\n';
}

// ---------------------------------------------------------------------------
// Shared channel plumbing.

// Emits the defect-eigenvalue report for a channel that fails the two
// positivity inequalities, matching the exit-2 contract.
int report_not_cp(const CpReport& cp) {
  JsonWriter w;
  w.begin_object()
      .key("is_cp").boolean(false)
      .key("min_eig_first").num(cp.min_eig_first)
      .key("min_eig_second").num(cp.min_eig_second)
      .end_object();
  print_stdout(w.str());
  std::cerr << "error: channel is not completely positive "
            << "(defect eigenvalues " << fmt_double(cp.min_eig_first) << ", "
            << fmt_double(cp.min_eig_second) << ")\n";
  return 2;
}

bool is_diagonal_pair(const ChannelParams& params) {
  double off = 0.0;
  double scale = 0.0;
  for (Eigen::Index i = 0; i < params.s; ++i) {
    for (Eigen::Index j = 0; j < params.s; ++j) {
      const double k_ij = std::abs(params.K(i, j));
      const double mu_ij = std::abs(params.mu(i, j));
      scale = std::max({scale, k_ij, mu_ij});
      if (i != j) off = std::max({off, k_ij, mu_ij});
    }
  }
  return off <= 1e-12 * (1.0 + scale);
}

// ---------------------------------------------------------------------------
// norm

int run_norm(const std::string& path, double p, const std::string& format) {
  const ChannelParams params = load_channel(path);
  const CpReport cp = cp_check(params);
  if (!cp.is_cp) return report_not_cp(cp);

  const double norm = schatten_norm_analytic(params, p);
  const bool unbounded = std::isinf(norm);
  const EigResult ks = eig_hermitian(params.K.adjoint() * params.K);
  const double lam_max = ks.eigenvalues(params.s - 1);
  const bool invertible =
      lam_max > 0.0 && ks.eigenvalues(0) > 1e-12 * lam_max;
  // p = 1 sits outside the closed form; the value 1 is forced by trace
  // preservation and positivity alone.
  const std::string regime = p == 1.0 ? "trace-preservation" : "closed-form";

  if (format == "csv") {
    CsvTable t;
    t.header = {"p",          "norm",       "unbounded",
                "invertible", "is_cp",      "min_eig_first",
                "min_eig_second", "regime"};
    t.rows.push_back({fmt_double(p), fmt_double(norm),
                      unbounded ? "true" : "false",
                      invertible ? "true" : "false", "true",
                      fmt_double(cp.min_eig_first),
                      fmt_double(cp.min_eig_second), regime});
    print_stdout(t.str(), false);
  } else {
    JsonWriter w;
    w.begin_object()
        .key("command").text("norm")
        .key("channel").text(path)
        .key("p").num(p)
        .key("is_cp").boolean(true)
        .key("min_eig_first").num(cp.min_eig_first)
        .key("min_eig_second").num(cp.min_eig_second)
        .key("invertible").boolean(invertible)
        .key("unbounded").boolean(unbounded)
        .key("regime").text(regime)
        .key("norm").num(norm)
        .end_object();
    print_stdout(w.str());
  }

  if (unbounded) {
    std::cerr << "p->p norm (p = " << fmt_double(p)
              << "): unbounded (K is singular)\n";
  } else {
    std::cerr << "p->p norm (p = " << fmt_double(p)
              << "): " << fmt_double(norm) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// converge

struct ConvergeRow {
  double E = 0.0;
  double p = 0.0;
  double ratio = 0.0;
  double limit = 0.0;
  double rel_dist = 0.0;
  double gain = 0.0;
  double gain_limit = 0.0;
  double gain_excess = 0.0;
};

struct DivergeRow {
  double E = 0.0;
  double p = 0.0;
  double q = 0.0;
  double cross = 0.0;
  double slope = 0.0;  // log-log slope against the previous grid point
  double slope_target = 0.0;
};

int run_converge(const std::string& path, std::vector<double> E_grid,
                 std::vector<double> p_grid, double q, bool have_q,
                 const std::string& format) {
  const ChannelParams params = load_channel(path);
  const CpReport cp = cp_check(params);
  if (!cp.is_cp) return report_not_cp(cp);

  if (have_q) {
    // Divergence mode: the q < p ratio grows like E^(1/q - 1/p); report
    // the fitted local slope next to that target.
    std::vector<DivergeRow> rows(p_grid.size() * E_grid.size());
    parallel_for(rows.size(), [&](std::size_t idx) {
      const std::size_t pi = idx / E_grid.size();
      const std::size_t ei = idx % E_grid.size();
      DivergeRow& row = rows[idx];
      row.E = E_grid[ei];
      row.p = p_grid[pi];
      row.q = q;
      row.cross = cross_norm_ratio(params, row.E, row.p, row.q);
      row.slope_target = 1.0 / q - 1.0 / row.p;
    });
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
      const bool block_start = idx % E_grid.size() == 0;
      if (block_start) {
        rows[idx].slope = std::nan("");
      } else {
        const DivergeRow& prev = rows[idx - 1];
        rows[idx].slope = (std::log(rows[idx].cross) - std::log(prev.cross)) /
                          (std::log(rows[idx].E) - std::log(prev.E));
      }
    }

    if (format == "csv") {
      CsvTable t;
      t.header = {"E", "p", "q", "cross_ratio", "log_slope", "slope_target"};
      for (const DivergeRow& r : rows) {
        t.rows.push_back({fmt_double(r.E), fmt_double(r.p), fmt_double(r.q),
                          fmt_double(r.cross), fmt_double(r.slope),
                          fmt_double(r.slope_target)});
      }
      print_stdout(t.str(), false);
    } else {
      JsonWriter w;
      w.begin_object()
          .key("command").text("converge")
          .key("channel").text(path)
          .key("mode").text("divergence")
          .key("q").num(q)
          .key("rows").begin_array();
      for (const DivergeRow& r : rows) {
        w.begin_object()
            .key("E").num(r.E)
            .key("p").num(r.p)
            .key("q").num(r.q)
            .key("cross_ratio").num(r.cross)
            .key("log_slope").num(r.slope)
            .key("slope_target").num(r.slope_target)
            .end_object();
      }
      w.end_array().end_object();
      print_stdout(w.str());
    }
    std::cerr << "divergence sweep: " << rows.size() << " rows\n";
    return 0;
  }

  std::vector<ConvergeRow> rows(p_grid.size() * E_grid.size());
  parallel_for(rows.size(), [&](std::size_t idx) {
    const std::size_t pi = idx / E_grid.size();
    const std::size_t ei = idx % E_grid.size();
    ConvergeRow& row = rows[idx];
    row.E = E_grid[ei];
    row.p = p_grid[pi];
    row.ratio = norm_ratio(params, row.E, row.p);
    row.limit = schatten_norm_analytic(params, row.p);
    row.rel_dist = std::abs(row.ratio - row.limit) / row.limit;
    row.gain = entropy_gain(params, row.E);
    row.gain_limit = entropy_gain_bound(params);
    row.gain_excess = row.gain - row.gain_limit;
  });

  if (format == "csv") {
    CsvTable t;
    t.header = {"E",           "p",
                "norm_ratio",  "norm_limit",
                "norm_rel_dist", "entropy_gain",
                "entropy_gain_limit", "entropy_gain_excess"};
    for (const ConvergeRow& r : rows) {
      t.rows.push_back({fmt_double(r.E), fmt_double(r.p),
                        fmt_double(r.ratio), fmt_double(r.limit),
                        fmt_double(r.rel_dist), fmt_double(r.gain),
                        fmt_double(r.gain_limit),
                        fmt_double(r.gain_excess)});
    }
    print_stdout(t.str(), false);
  } else {
    JsonWriter w;
    w.begin_object()
        .key("command").text("converge")
        .key("channel").text(path)
        .key("mode").text("ratio")
        .key("rows").begin_array();
    for (const ConvergeRow& r : rows) {
      w.begin_object()
          .key("E").num(r.E)
          .key("p").num(r.p)
          .key("norm_ratio").num(r.ratio)
          .key("norm_limit").num(r.limit)
          .key("norm_rel_dist").num(r.rel_dist)
          .key("entropy_gain").num(r.gain)
          .key("entropy_gain_limit").num(r.gain_limit)
          .key("entropy_gain_excess").num(r.gain_excess)
          .end_object();
    }
    w.end_array().end_object();
    print_stdout(w.str());
  }
  std::cerr << "ratio sweep: " << rows.size() << " rows\n";
  return 0;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleMode {
  double k2 = 0.0;
  double mu = 0.0;
  double eta = 1.0;
  double G = 1.0;
  double e_out = 0.0;
  Eigen::Index cutoff_in = 0;
  Eigen::Index cutoff_out = 0;
  double norm = 0.0;
};

int run_oracle(const std::string& path, double k_mag, double mu_scalar,
               bool have_scalars, double E, double p, Eigen::Index cutoff,
               double tol, const std::string& format) {
  const ChannelParams params = have_scalars
                                   ? single_mode_channel(k_mag, mu_scalar)
                                   : load_channel(path);
  const CpReport cp = cp_check(params);
  if (!cp.is_cp) return report_not_cp(cp);
  if (!is_diagonal_pair(params)) {
    throw std::invalid_argument(
        "oracle: channel must be a tensor of single-mode channels "
        "(diagonal K and mu)");
  }

  std::vector<OracleMode> modes(static_cast<std::size_t>(params.s));
  parallel_for(modes.size(), [&](std::size_t j) {
    OracleMode& m = modes[j];
    const Eigen::Index jj = static_cast<Eigen::Index>(j);
    m.k2 = std::norm(params.K(jj, jj));
    m.mu = params.mu(jj, jj).real();
    const fock::SingleModeDecomposition dec =
        fock::single_mode_decompose(m.k2, m.mu);
    m.eta = dec.eta;
    m.G = dec.G;
    m.e_out = (E + 0.5) * m.k2 + m.mu - 0.5;
    m.cutoff_in = cutoff > 0 ? cutoff : fock::thermal_cutoff(E);
    const Eigen::Index lmax =
        dec.G > 1.0 ? fock::amplifier_lmax(dec.G, m.cutoff_in, 1e-12) : 0;
    m.cutoff_out = std::max(fock::thermal_cutoff(m.e_out),
                            m.cutoff_in + lmax);
    const RealVector probs =
        fock::thermal_matrix(E, m.cutoff_in).matrix.diagonal().real();
    m.norm = fock::diag_schatten_norm(
        fock::channel_diag(dec, probs, m.cutoff_out), p);
  });

  double numeric = 1.0;
  for (const OracleMode& m : modes) numeric *= m.norm;
  const double analytic = output_schatten_norm(params, E, p);
  const double rel_err = std::abs(numeric - analytic) / analytic;
  const bool pass = rel_err <= tol;

  if (format == "csv") {
    CsvTable t;
    t.header = {"E", "p", "numeric", "analytic", "rel_err", "tol", "pass"};
    t.rows.push_back({fmt_double(E), fmt_double(p), fmt_double(numeric),
                      fmt_double(analytic), fmt_double(rel_err),
                      fmt_double(tol), pass ? "true" : "false"});
    print_stdout(t.str(), false);
  } else {
    JsonWriter w;
    w.begin_object()
        .key("command").text("oracle")
        .key("E").num(E)
        .key("p").num(p)
        .key("modes").begin_array();
    for (const OracleMode& m : modes) {
      w.begin_object()
          .key("k2").num(m.k2)
          .key("mu").num(m.mu)
          .key("eta").num(m.eta)
          .key("G").num(m.G)
          .key("e_out").num(m.e_out)
          .key("cutoff_in").integer(m.cutoff_in)
          .key("cutoff_out").integer(m.cutoff_out)
          .key("norm").num(m.norm)
          .end_object();
    }
    w.end_array()
        .key("numeric").num(numeric)
        .key("analytic").num(analytic)
        .key("rel_err").num(rel_err)
        .key("tol").num(tol)
        .key("pass").boolean(pass)
        .end_object();
    print_stdout(w.str());
  }

  std::cerr << "numeric " << fmt_double(numeric) << " vs analytic "
            << fmt_double(analytic) << " (rel err " << fmt_double(rel_err)
            << ", tol " << fmt_double(tol) << ")\n";
  if (!pass) {
    std::cerr << "error: oracle disagreement exceeds tolerance\n";
    return 3;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// interp

struct InterpMapResult {
  Eigen::Index d = 0;
  std::string family;
  std::size_t kraus_count = 0;
  ib::VerifyReport report;
};

int run_interp(std::uint64_t seed, int d_max, int n_maps,
               const std::vector<double>& p_grid, const std::string& family,
               int trials, int iters, const std::string& format) {
  std::vector<InterpMapResult> results(static_cast<std::size_t>(n_maps));
  parallel_for(results.size(), [&](std::size_t i) {
    const std::uint64_t map_seed = seed + kSeedStride * (i + 1);
    InterpMapResult& r = results[i];
    ib::PositiveMapRep map;
    if (family == "identity") {
      map.d = d_max;
      map.kraus.push_back(ComplexMatrix::Identity(d_max, d_max));
      r.family = "identity";
    } else {
      std::mt19937_64 rng(map_seed);
      std::uniform_int_distribution<Eigen::Index> d_dist(
          2, std::max(2, d_max));
      const Eigen::Index d = d_dist(rng);
      const bool co_positive =
          family == "co" || (family == "both" && i % 2 == 1);
      map = ib::random_map(d, co_positive, map_seed + 1);
      r.family = co_positive ? "co-positive" : "cp";
    }
    r.d = map.d;
    r.kraus_count = map.kraus.size();
    r.report = ib::verify_bound(map, p_grid, trials, iters, map_seed + 2);
  });

  int violations = 0;
  for (const InterpMapResult& r : results) {
    if (!r.report.ok) ++violations;
  }

  if (format == "csv") {
    CsvTable t;
    t.header = {"index", "d", "family", "kraus_count",
                "p",     "lower", "rhs", "slack"};
    for (std::size_t i = 0; i < results.size(); ++i) {
      for (const ib::SlackRow& row : results[i].report.rows) {
        t.rows.push_back({std::to_string(i), std::to_string(results[i].d),
                          results[i].family,
                          std::to_string(results[i].kraus_count),
                          fmt_double(row.p), fmt_double(row.lower),
                          fmt_double(row.rhs), fmt_double(row.slack)});
      }
    }
    print_stdout(t.str(), false);
  } else {
    JsonWriter w;
    w.begin_object()
        .key("command").text("interp")
        .key("seed").integer(static_cast<std::int64_t>(seed))
        .key("n_maps").integer(n_maps)
        .key("d_max").integer(d_max)
        .key("family").text(family)
        .key("trials").integer(trials)
        .key("iters").integer(iters)
        .key("p_grid").begin_array();
    for (double p : p_grid) w.num(p);
    w.end_array()
        .key("violations").integer(violations)
        .key("maps").begin_array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const InterpMapResult& r = results[i];
      double min_slack = std::numeric_limits<double>::infinity();
      double worst_ratio = 0.0;
      double worst_p = 0.0;
      for (const ib::SlackRow& row : r.report.rows) {
        min_slack = std::min(min_slack, row.slack);
        const double ratio = row.rhs > 0.0 ? row.lower / row.rhs : 0.0;
        if (ratio > worst_ratio) {
          worst_ratio = ratio;
          worst_p = row.p;
        }
      }
      w.begin_object()
          .key("index").integer(static_cast<std::int64_t>(i))
          .key("d").integer(r.d)
          .key("family").text(r.family)
          .key("kraus_count").integer(static_cast<std::int64_t>(r.kraus_count))
          .key("ok").boolean(r.report.ok)
          .key("min_slack").num(min_slack)
          .key("max_lower_over_rhs").num(worst_ratio)
          .key("argmax_p").num(worst_p)
          .end_object();
    }
    w.end_array().end_object();
    print_stdout(w.str());
  }

  if (violations > 0) {
    // A violation would falsify the norm bound — dump everything needed
    // to replay it exactly.
    const std::string dump_path = "gchan_interp_counterexamples.json";
    JsonWriter w;
    w.begin_object()
        .key("seed").integer(static_cast<std::int64_t>(seed))
        .key("trials").integer(trials)
        .key("iters").integer(iters)
        .key("maps").begin_array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const InterpMapResult& r = results[i];
      if (r.report.ok) continue;
      const std::uint64_t map_seed = seed + kSeedStride * (i + 1);
      ib::PositiveMapRep map;
      if (family == "identity") {
        map.d = d_max;
        map.kraus.push_back(ComplexMatrix::Identity(d_max, d_max));
      } else {
        std::mt19937_64 rng(map_seed);
        std::uniform_int_distribution<Eigen::Index> d_dist(
            2, std::max(2, d_max));
        const Eigen::Index d = d_dist(rng);
        const bool co_positive =
            family == "co" || (family == "both" && i % 2 == 1);
        map = ib::random_map(d, co_positive, map_seed + 1);
      }
      w.begin_object()
          .key("index").integer(static_cast<std::int64_t>(i))
          .key("d").integer(map.d)
          .key("pre_transpose").boolean(map.pre_transpose)
          .key("verify_seed").integer(static_cast<std::int64_t>(map_seed + 2))
          .key("rows").begin_array();
      for (const ib::SlackRow& row : r.report.rows) {
        w.begin_object()
            .key("p").num(row.p)
            .key("lower").num(row.lower)
            .key("rhs").num(row.rhs)
            .key("slack").num(row.slack)
            .end_object();
      }
      w.end_array().key("kraus").begin_array();
      for (const ComplexMatrix& A : map.kraus) {
        w.begin_array();
        for (Eigen::Index row = 0; row < A.rows(); ++row) {
          w.begin_array();
          for (Eigen::Index col = 0; col < A.cols(); ++col) {
            w.begin_array()
                .num(A(row, col).real())
                .num(A(row, col).imag())
                .end_array();
          }
          w.end_array();
        }
        w.end_array();
      }
      w.end_array().end_object();
    }
    w.end_array().end_object();
    std::ofstream dump(dump_path);
    dump << w.str() << "\n";
    std::cerr << "error: " << violations
              << " norm-bound violation(s); counterexamples written to "
              << dump_path << "\n";
    return 4;
  }

  std::cerr << "verified " << n_maps << " map(s) x " << p_grid.size()
            << " p value(s): no violations\n";
  return 0;
}

// ---------------------------------------------------------------------------
// entropy

int run_entropy(const std::string& path, const std::vector<double>& E_grid,
                const std::string& format) {
  const ChannelParams params = load_channel(path);
  const CpReport cp = cp_check(params);
  if (!cp.is_cp) return report_not_cp(cp);

  const double bound = entropy_gain_bound(params);
  std::vector<double> gains(E_grid.size());
  parallel_for(E_grid.size(), [&](std::size_t i) {
    gains[i] = entropy_gain(params, E_grid[i]);
  });

  int violations = 0;
  for (std::size_t i = 0; i < E_grid.size(); ++i) {
    if (gains[i] < bound - 1e-9 * std::max(1.0, std::abs(bound))) {
      ++violations;
    }
  }

  if (format == "csv") {
    CsvTable t;
    t.header = {"E", "entropy_gain", "bound", "excess"};
    for (std::size_t i = 0; i < E_grid.size(); ++i) {
      t.rows.push_back({fmt_double(E_grid[i]), fmt_double(gains[i]),
                        fmt_double(bound), fmt_double(gains[i] - bound)});
    }
    print_stdout(t.str(), false);
  } else {
    JsonWriter w;
    w.begin_object()
        .key("command").text("entropy")
        .key("channel").text(path)
        .key("bound").num(bound)
        .key("violations").integer(violations)
        .key("rows").begin_array();
    for (std::size_t i = 0; i < E_grid.size(); ++i) {
      w.begin_object()
          .key("E").num(E_grid[i])
          .key("entropy_gain").num(gains[i])
          .key("bound").num(bound)
          .key("excess").num(gains[i] - bound)
          .end_object();
    }
    w.end_array().end_object();
    print_stdout(w.str());
  }

  if (violations > 0) {
    std::cerr << "error: " << violations
              << " row(s) fell below the entropy-gain bound\n";
    return 3;
  }
  std::cerr << "entropy sweep: " << E_grid.size() << " rows, bound "
            << fmt_double(bound) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gauge-covariant bosonic channel norms: analytics, truncated-"
               "Fock oracles, and positive-map norm-bound verification"};
  app.require_subcommand(1);

  const std::vector<double> kSweepPGrid{1.1, 1.5, 2.0, 3.0, 5.0, 10.0};
  const std::vector<double> kSweepEGrid{1.0, 10.0, 100.0, 10000.0};

  std::string format = "json";

  // norm ---------------------------------------------------------------
  std::string norm_file;
  double norm_p = 2.0;
  CLI::App* norm_cmd =
      app.add_subcommand("norm", "analytic p->p norm of a channel file");
  norm_cmd->add_option("channel", norm_file, "channel JSON file")->required();
  norm_cmd->add_option("--p", norm_p, "Schatten exponent (>= 1)")
      ->check(CLI::Range(1.0, 1e9))
      ->capture_default_str();

  // converge -----------------------------------------------------------
  std::string conv_file;
  std::vector<double> conv_E = kSweepEGrid;
  std::vector<double> conv_p_grid;
  double conv_p = 0.0;
  double conv_q = 0.0;
  CLI::App* conv_cmd = app.add_subcommand(
      "converge", "thermal-ratio and entropy sweep over an E grid");
  conv_cmd->add_option("channel", conv_file, "channel JSON file")->required();
  conv_cmd->add_option("--E-grid", conv_E, "mean occupations, a,b,c")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1e18));
  conv_cmd->add_option("--p-grid", conv_p_grid, "Schatten exponents, a,b,c")
      ->delimiter(',')
      ->check(CLI::Range(1.0, 1e9));
  CLI::Option* conv_p_opt =
      conv_cmd->add_option("--p", conv_p, "single Schatten exponent")
          ->check(CLI::Range(1.0, 1e9));
  CLI::Option* conv_q_opt = conv_cmd->add_option(
      "--q", conv_q, "divergence mode: q < p cross-norm exponent");

  // oracle -------------------------------------------------------------
  std::string oracle_file;
  double oracle_K = 0.0;
  double oracle_mu = 0.0;
  double oracle_E = 1.0;
  double oracle_p = 2.0;
  std::int64_t oracle_cutoff = 0;
  double oracle_tol = 1e-8;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "truncated-Fock numeric norm vs the closed form");
  CLI::Option* oracle_file_opt =
      oracle_cmd->add_option("channel", oracle_file, "channel JSON file");
  CLI::Option* oracle_K_opt = oracle_cmd->add_option(
      "--K", oracle_K, "single-mode |K| (with --mu, replaces the file)");
  CLI::Option* oracle_mu_opt =
      oracle_cmd->add_option("--mu", oracle_mu, "single-mode noise");
  oracle_cmd->add_option("--E", oracle_E, "input mean occupation")
      ->check(CLI::Range(0.0, 1e18))
      ->capture_default_str();
  oracle_cmd->add_option("--p", oracle_p, "Schatten exponent (> 1)")
      ->check(CLI::Range(1.0, 1e9))
      ->capture_default_str();
  oracle_cmd->add_option("--cutoff", oracle_cutoff,
                         "input truncation override (0 = 28(E+1) rule)")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 22))
      ->capture_default_str();
  oracle_cmd->add_option("--tol", oracle_tol, "relative tolerance")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  oracle_K_opt->needs(oracle_mu_opt);
  oracle_mu_opt->needs(oracle_K_opt);
  oracle_file_opt->excludes(oracle_K_opt);

  // interp -------------------------------------------------------------
  std::uint64_t interp_seed = 1;
  int interp_d_max = 8;
  int interp_n_maps = 500;
  std::vector<double> interp_p_grid = kSweepPGrid;
  std::string interp_family = "both";
  int interp_trials = ib::kDefaultTrials;
  int interp_iters = ib::kDefaultIters;
  CLI::App* interp_cmd = app.add_subcommand(
      "interp", "randomized verification of the positive-map norm bound");
  interp_cmd->add_option("--seed", interp_seed, "root seed")
      ->capture_default_str();
  interp_cmd->add_option("--d-max", interp_d_max, "largest matrix dimension")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  interp_cmd->add_option("--n-maps", interp_n_maps, "number of maps")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  interp_cmd->add_option("--p-grid", interp_p_grid, "Schatten exponents")
      ->delimiter(',')
      ->check(CLI::Range(1.0 + 1e-9, 1e9));
  interp_cmd
      ->add_option("--family", interp_family,
                   "map family: cp, co, both, identity")
      ->check(CLI::IsMember({"cp", "co", "both", "identity"}))
      ->capture_default_str();
  interp_cmd->add_option("--trials", interp_trials, "ascent restarts per p")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  interp_cmd->add_option("--iters", interp_iters, "ascent steps per restart")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();

  // entropy ------------------------------------------------------------
  std::string entropy_file;
  std::vector<double> entropy_E{0.0, 1.0, 10.0, 100.0, 10000.0};
  CLI::App* entropy_cmd = app.add_subcommand(
      "entropy", "entropy gain table with its determinant lower bound");
  entropy_cmd->add_option("channel", entropy_file, "channel JSON file")
      ->required();
  entropy_cmd->add_option("--E-grid", entropy_E, "mean occupations, a,b,c")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1e18));

  for (CLI::App* sub :
       {norm_cmd, conv_cmd, oracle_cmd, interp_cmd, entropy_cmd}) {
    sub->add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (norm_cmd->parsed()) return run_norm(norm_file, norm_p, format);
    if (conv_cmd->parsed()) {
      std::vector<double> p_grid = conv_p_grid;
      if (*conv_p_opt) p_grid.push_back(conv_p);
      if (p_grid.empty()) p_grid = kSweepPGrid;
      return run_converge(conv_file, conv_E, p_grid, conv_q,
                          static_cast<bool>(*conv_q_opt), format);
    }
    if (oracle_cmd->parsed()) {
      const bool have_scalars = static_cast<bool>(*oracle_K_opt);
      if (!have_scalars && oracle_file.empty()) {
        std::cerr << "error: oracle needs a channel file or --K/--mu\n";
        return 64;
      }
      return run_oracle(oracle_file, oracle_K, oracle_mu, have_scalars,
                        oracle_E, oracle_p,
                        static_cast<Eigen::Index>(oracle_cutoff), oracle_tol,
                        format);
    }
    if (interp_cmd->parsed()) {
      return run_interp(interp_seed, interp_d_max, interp_n_maps,
                        interp_p_grid, interp_family, interp_trials,
                        interp_iters, format);
    }
    if (entropy_cmd->parsed()) {
      return run_entropy(entropy_file, entropy_E, format);
    }
  } catch (const ChannelParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 64;
  }
  return 0;
}
