// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "oracles.hpp"
#include "signed_index/balance.hpp"
#include "signed_index/canonical.hpp"
#include "signed_index/enumerate.hpp"
#include "signed_index/perturb.hpp"
#include "signed_index/random.hpp"
#include "signed_index/search.hpp"
#include "signed_index/spectra.hpp"

using namespace signed_index;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

SignedCompleteGraph random_signature(Rng& rng, int n) {
  std::vector<Edge> neg;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform_below(rng, 2)) neg.emplace_back(u, v);
    }
  }
  return SignedCompleteGraph(n, neg);
}

RotationMove random_move(Rng& rng, const SignedCompleteGraph& g) {
  const int n = g.order();
  while (true) {
    auto p = random_permutation(rng, n);
    if (uniform_below(rng, 2)) {
      if (g.sign(p[0], p[1]) > 0 && g.sign(p[2], p[3]) < 0) return RotationMove::type_ii(p[0], p[1], p[2], p[3]);
    } else if (g.sign(p[0], p[1]) > 0 && g.sign(p[0], p[2]) < 0) {
      return RotationMove::type_i(p[0], p[1], p[2]);
    }
  }
}

// Theorem-range verification over n = 6..9.
Outcome broom_maximises() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double min_gap = std::numeric_limits<double>::infinity();
  int cases = 0;
  for (int n = 6; n <= 9; ++n) {
    for (int k = 3; k <= n - 3; ++k) {
      const auto r = verify_theorem1(n, k);
      ++cases;
      if (!r.matches_broom) o.fail(fmt::format("n={} k={} argmax {} is not the broom", n, k, r.argmax_code.code));
      if (!r.runner_up_gap || *r.runner_up_gap <= 1e-8) o.fail(fmt::format("n={} k={} gap too small", n, k));
      if (r.runner_up_gap) min_gap = std::min(min_gap, *r.runner_up_gap);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 60.0) o.fail(fmt::format("sweep took {:.1f} s", secs));
  if (o.pass) o.detail = fmt::format("{} cases, smallest gap {:.6g}, {:.2f} s", cases, min_gap, secs);
  return o;
}

Outcome double_star_chain_increases() {
  Outcome o;
  double min_step = std::numeric_limits<double>::infinity();
  for (int n = 6; n <= 12; ++n) {
    const auto chain = double_star_chain(n);
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const double step = chain[i].lambda1 - chain[i - 1].lambda1;
      min_step = std::min(min_step, step);
      if (step <= 1e-9) o.fail(fmt::format("n={} step {} -> {} is {}", n, i - 1, i, step));
    }
  }
  if (o.pass) o.detail = fmt::format("smallest step {:.6g}", min_step);
  return o;
}

Outcome balanced_star_spectrum() {
  Outcome o;
  double worst = 0.0;
  for (int n = 3; n <= 50; ++n) {
    const auto s = spectrum(signed_complete_from_tree(build_star(n)));
    worst = std::max(worst, std::abs(s.values[0] - (n - 1)));
    for (int i = 1; i < n; ++i) worst = std::max(worst, std::abs(s.values[i] + 1.0));
  }
  if (worst > 1e-9) o.fail(fmt::format("max deviation {}", worst));
  if (o.pass) o.detail = fmt::format("max deviation {:.3g}", worst);
  return o;
}

Outcome switching_invariance() {
  Outcome o;
  Rng rng(1001);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 11));
    // Half the graphs are tree signatures, half arbitrary.
    const auto g = i % 2 ? random_signature(rng, n) : signed_complete_from_tree(random_tree(rng, n));
    std::vector<Vertex> members;
    for (int v = 0; v < n; ++v) {
      if (uniform_below(rng, 2)) members.push_back(v);
    }
    const auto h = apply_switching(g, SwitchSet(n, members));
    const auto a = spectrum(g);
    const auto b = spectrum(h);
    for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(a.values[j] - b.values[j]));
    if (is_balanced(g) != is_balanced(h)) o.fail(fmt::format("pair {} changed the balance flag", i));
  }
  if (worst > 1e-9) o.fail(fmt::format("max spectral deviation {}", worst));
  if (o.pass) o.detail = fmt::format("max spectral deviation {:.3g}", worst);
  return o;
}

Outcome relabeling_invariance() {
  Outcome o;
  Rng rng(1002);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 29));
    const Tree t = random_tree(rng, n);
    const double a = index(signed_complete_from_tree(t));
    const double b = index(signed_complete_from_tree(relabel(t, random_permutation(rng, n))));
    worst = std::max(worst, std::abs(a - b));
  }
  if (worst > 1e-9) o.fail(fmt::format("max deviation {}", worst));
  if (o.pass) o.detail = fmt::format("max deviation {:.3g}", worst);
  return o;
}

Outcome rotation_monotonicity() {
  Outcome o;
  Rng rng(1003);
  int satisfied = 0;
  int strict_checked = 0;
  int attempts = 0;
  double worst_drop = 0.0;
  while (satisfied < 1000) {
    if (++attempts > 200000) {
      o.fail("could not sample 1000 satisfied rotations");
      break;
    }
    const int n = 4 + static_cast<int>(uniform_below(rng, 9));
    SignedCompleteGraph g = uniform_below(rng, 2) ? signed_complete_from_tree(random_tree(rng, n))
                                                   : random_signature(rng, n);
    if (g.negative_edge_count() == 0 || g.negative_edge_count() == n * (n - 1) / 2) continue;
    const auto top = top_eigenvector(g);
    const auto m = random_move(rng, g);
    const auto report = check_precondition(g, m, top.vector);
    if (!report.satisfied) continue;
    ++satisfied;
    const double after = index(apply_rotation(g, m));
    worst_drop = std::max(worst_drop, top.lambda1 - after);
    if (after < top.lambda1 - 1e-10) o.fail(fmt::format("lambda1 dropped by {}", top.lambda1 - after));
    if (report.strict && !top.multiple && top.gap > 1e-6) {
      ++strict_checked;
      if (after <= top.lambda1 + 1e-10) {
        o.fail(fmt::format("strict case did not increase: {} -> {}", top.lambda1, after));
      }
    }
  }
  if (o.pass) {
    o.detail = fmt::format("{} satisfied, {} strict with simple top eigenvalue, max drop {:.3g}", satisfied,
                           strict_checked, worst_drop);
  }
  return o;
}

Outcome eigensolver_quality() {
  Outcome o;
  Rng rng(1004);
  double worst_residual = 0.0;
  double worst_recon = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 30));
    const auto a = oracle::random_signed_adjacency(rng, n);
    const auto s = eigen_decompose(a, true);
    for (int i = 0; i < n; ++i) worst_residual = std::max(worst_residual, residual_norm(a, s.values[i], (*s.vectors)[i]));
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int l = 0; l < n; ++l) acc += (*s.vectors)[l][i] * s.values[l] * (*s.vectors)[l][j];
        sum += (acc - a(i, j)) * (acc - a(i, j));
      }
    }
    const double rel = std::sqrt(sum) / std::max(1.0, a.frobenius_norm());
    worst_recon = std::max(worst_recon, rel);
  }
  if (worst_residual > 1e-8) o.fail(fmt::format("residual {}", worst_residual));
  if (worst_recon > 1e-9) o.fail(fmt::format("relative reconstruction error {}", worst_recon));

  double worst_trace = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 29));
    const auto s = spectrum(signed_complete_from_tree(random_tree(rng, n)));
    double sum = 0.0;
    double sq = 0.0;
    for (double v : s.values) {
      sum += v;
      sq += v * v;
    }
    worst_trace = std::max({worst_trace, std::abs(sum), std::abs(sq - n * (n - 1.0))});
  }
  if (worst_trace > 1e-8) o.fail(fmt::format("trace identity deviation {}", worst_trace));
  if (o.pass) {
    o.detail = fmt::format("residual {:.3g}, reconstruction {:.3g}, trace {:.3g}", worst_residual, worst_recon,
                           worst_trace);
  }
  return o;
}

Outcome enumeration_cross_check() {
  Outcome o;
  const std::map<int, std::size_t> golden = {{2, 1},  {3, 1},  {4, 2},   {5, 3},    {6, 6},   {7, 11},
                                             {8, 23}, {9, 47}, {10, 106}, {11, 235}, {12, 551}};
  for (int n = 2; n <= 9; ++n) {
    const auto a = enumerate_tree_classes_prufer(n);
    const auto b = enumerate_tree_classes(n);
    if (a.size() != b.size()) o.fail(fmt::format("n={}: {} vs {}", n, a.size(), b.size()));
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      if (a[i].code != b[i].code) o.fail(fmt::format("n={}: class sets differ", n));
    }
  }
  for (const auto& [n, count] : golden) {
    const auto got = enumerate_tree_classes(n).size();
    if (got != count) o.fail(fmt::format("n={}: {} classes, golden {}", n, got, count));
  }
  if (o.pass) o.detail = "n<=9 methods agree; n<=12 match goldens";
  return o;
}

Outcome climb_reaches_maximum() {
  Outcome o;
  Rng rng(1005);
  int total = 0;
  int hits = 0;
  double worst_rate = 1.0;
  for (int n = 3; n <= 8; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      const double best = oracle::max_lambda1_labelled(n, k);
      int local_hits = 0;
      for (int i = 0; i < 50; ++i) {
        const auto result = hill_climb(n, k, random_tree_with_leaves(rng, n, k), 100000);
        if (std::abs(result.final_lambda1 - best) <= 1e-8) ++local_hits;
      }
      total += 50;
      hits += local_hits;
      const double rate = local_hits / 50.0;
      worst_rate = std::min(worst_rate, rate);
      if (rate < 0.95) o.fail(fmt::format("n={} k={}: {}/50 climbs reached the maximum", n, k, local_hits));

      const auto fixed = hill_climb(n, k, build_broom(n, k), 100000);
      if (!fixed.trace.empty()) o.fail(fmt::format("broom({},{}) is not a fixed point", n, k));
    }
  }
  if (o.pass) o.detail = fmt::format("{}/{} climbs optimal, worst (n,k) rate {:.2f}", hits, total, worst_rate);
  return o;
}

Outcome proof_step_checks() {
  Outcome o;
  double min_unbalanced = std::numeric_limits<double>::infinity();
  int audited = 0;
  for (int n = 3; n <= 9; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      const auto r = verify_theorem1(n, k);
      if (r.min_unbalanced_lambda1) {
        min_unbalanced = std::min(min_unbalanced, *r.min_unbalanced_lambda1);
        if (*r.min_unbalanced_lambda1 <= 1.0) o.fail(fmt::format("n={} k={}: unbalanced lambda1 <= 1", n, k));
      }
      if (r.audit.applicable) {
        ++audited;
        if (!r.audit.passed()) o.fail(fmt::format("n={} k={}: argmax fails the structural audit", n, k));
      }
    }
  }
  // Larger orders for the audit alone.
  for (int n = 10; n <= 12; ++n) {
    for (int k = 3; k <= n - 3; ++k) {
      const auto r = verify_theorem1(n, k);
      ++audited;
      if (!r.audit.passed()) o.fail(fmt::format("n={} k={}: argmax fails the structural audit", n, k));
    }
  }
  if (o.pass) o.detail = fmt::format("min unbalanced lambda1 {:.6g}, {} argmax trees audited", min_unbalanced, audited);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 broom maximises lambda1 for n=6..9, 3<=k<=n-3", broom_maximises},
      {"2 double-star chain strictly increasing, n=6..12", double_star_chain_increases},
      {"3 balanced star spectrum, n=3..50", balanced_star_spectrum},
      {"4 switching invariance, 1000 pairs", switching_invariance},
      {"5 relabeling invariance, 1000 pairs", relabeling_invariance},
      {"6 rotation monotonicity, 1000 satisfied rotations", rotation_monotonicity},
      {"7 eigensolver quality, 500 matrices", eigensolver_quality},
      {"8 enumeration cross-check and goldens", enumeration_cross_check},
      {"9 hill climb reaches the exhaustive maximum", climb_reaches_maximum},
      {"10 unbalanced lambda1 > 1 and structural audit", proof_step_checks},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    fmt::print("[{}] {} ({})\n", o.pass ? "PASS" : "FAIL", name, o.detail);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
