#include "signed_index/search.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "signed_index/balance.hpp"
#include "signed_index/errors.hpp"
#include "signed_index/signed_graph.hpp"
#include "signed_index/spectra.hpp"

namespace signed_index {

std::string to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::Theorem:
      return "theorem";
    case VerifyMode::Path:
      return "path";
    case VerifyMode::DoubleStar:
      return "double_star";
    case VerifyMode::BalancedStar:
      return "balanced_star";
  }
  return "unknown";
}

std::string format_double(double x) { return fmt::format("{}", x); }

StructuralAudit structural_audit(const Tree& t, int k) {
  StructuralAudit audit;
  const int n = t.order();
  if (k <= 2 || k >= n - 1) return audit;
  audit.applicable = true;

  const auto degree = t.degrees();
  const int max_deg = *std::max_element(degree.begin(), degree.end());
  const auto hubs = std::count(degree.begin(), degree.end(), max_deg);
  audit.unique_hub_of_degree_k = max_deg == k && hubs == 1;

  // With no unique hub the remaining properties have nothing to anchor to.
  if (hubs != 1) return audit;
  const Vertex hub = static_cast<Vertex>(std::find(degree.begin(), degree.end(), max_deg) - degree.begin());
  const auto& nbrs = t.neighbors(hub);
  const auto pendants = std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return degree[w] == 1; });
  audit.hub_has_k_minus_1_pendants = pendants == k - 1;
  audit.others_degree_at_most_2 = true;
  for (Vertex v = 0; v < n; ++v) {
    if (v != hub && degree[v] > 2) audit.others_degree_at_most_2 = false;
  }
  return audit;
}

SearchReport verify_theorem1(int n, int k) {
  if (n < 3 || n > kMaxEnumerationOrder) {
    throw DomainError("verification supports 3 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                      ", got n=" + std::to_string(n));
  }
  if (k < 2 || k > n - 1) {
    throw DomainError("leaf count must satisfy 2 <= k <= n-1, got k=" + std::to_string(k));
  }

  SearchReport r;
  r.n = n;
  r.k = k;
  if (k == n - 1) {
    r.mode = VerifyMode::BalancedStar;
  } else if (k == 2) {
    r.mode = VerifyMode::Path;
  } else if (k == n - 2) {
    r.mode = VerifyMode::DoubleStar;
  } else {
    r.mode = VerifyMode::Theorem;
  }

  auto classes = enumerate_with_leaves(n, k);
  r.classes.reserve(classes.size());
  std::vector<Tree> trees;
  trees.reserve(classes.size());
  for (auto& c : classes) {
    const auto g = signed_complete_from_tree(c.representative);
    ClassEntry e{c.code, prufer_encode(c.representative), leaf_count(c.representative), index(g),
                 is_balanced(g)};
    r.classes.push_back(std::move(e));
    trees.push_back(std::move(c.representative));
  }

  // Classes arrive sorted by code; the first maximum wins so the choice is
  // schedule-independent.
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    if (r.classes[i].lambda1 > best) {
      best = r.classes[i].lambda1;
      r.argmax = i;
    }
  }
  r.argmax_code = r.classes[r.argmax].code;

  double second = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    if (i != r.argmax) second = std::max(second, r.classes[i].lambda1);
    if (best - r.classes[i].lambda1 <= kTieTolerance) r.tied_codes.push_back(r.classes[i].code);
    if (!r.classes[i].balanced) {
      r.min_unbalanced_lambda1 = std::min(r.min_unbalanced_lambda1.value_or(r.classes[i].lambda1),
                                          r.classes[i].lambda1);
    }
  }
  if (r.classes.size() > 1) r.runner_up_gap = best - second;

  r.broom_code = canonical_code(build_broom(n, k));
  r.matches_broom = r.argmax_code == r.broom_code && !r.tie();
  if (r.mode == VerifyMode::DoubleStar) {
    r.argmax_is_double_star_1 = r.argmax_code == canonical_code(build_double_star(1, n - 3));
  }
  r.audit = structural_audit(trees[r.argmax], k);
  return r;
}

std::vector<SearchReport> sweep(int n_min, int n_max) {
  if (n_min > n_max) throw DomainError("sweep needs n_min <= n_max");
  std::vector<SearchReport> out;
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = 2; k <= n - 1; ++k) out.push_back(verify_theorem1(n, k));
  }
  return out;
}

std::vector<ChainEntry> double_star_chain(int n) {
  if (n < 6) throw DomainError("double-star chain needs n >= 6, got n=" + std::to_string(n));
  std::vector<ChainEntry> chain;
  for (int s = (n - 2) / 2; s >= 1; --s) {
    const int t = n - 2 - s;
    chain.push_back({s, t, index(signed_complete_from_tree(build_double_star(s, t)))});
  }
  return chain;
}

bool chain_strictly_increasing(const std::vector<ChainEntry>& chain) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!(chain[i].lambda1 - chain[i - 1].lambda1 > kChainMinimumStep)) return false;
  }
  return true;
}

std::string report_to_csv(const SearchReport& r, bool header) {
  std::string out;
  if (header) out += "n,k,canonical_code,prufer,leaf_count,lambda1,is_argmax\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    out += fmt::format("{},{},{},\"{}\",{},{},{}\n", r.n, r.k, c.code.code, format_prufer(c.prufer),
                       c.leaf_count, format_double(c.lambda1), i == r.argmax ? "true" : "false");
  }
  return out;
}

nlohmann::json report_to_json(const SearchReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["mode"] = to_string(r.mode);
  j["classes"] = nlohmann::json::array();
  for (const auto& c : r.classes) {
    j["classes"].push_back({{"canonical_code", c.code.code},
                            {"prufer", c.prufer.symbols},
                            {"leaf_count", c.leaf_count},
                            {"lambda1", c.lambda1},
                            {"balanced", c.balanced}});
  }
  j["argmax_code"] = r.argmax_code.code;
  j["argmax_lambda1"] = r.classes[r.argmax].lambda1;
  j["runner_up_gap"] = r.runner_up_gap ? nlohmann::json(*r.runner_up_gap) : nlohmann::json(nullptr);
  j["tie"] = r.tie();
  j["tied_codes"] = nlohmann::json::array();
  for (const auto& c : r.tied_codes) j["tied_codes"].push_back(c.code);
  j["broom_code"] = r.broom_code.code;
  j["matches_broom"] = r.matches_broom;
  if (r.argmax_is_double_star_1) j["argmax_is_double_star_1"] = *r.argmax_is_double_star_1;
  j["structural_audit"] = {{"applicable", r.audit.applicable},
                           {"unique_hub_of_degree_k", r.audit.unique_hub_of_degree_k},
                           {"hub_has_k_minus_1_pendants", r.audit.hub_has_k_minus_1_pendants},
                           {"others_degree_at_most_2", r.audit.others_degree_at_most_2},
                           {"passed", r.audit.passed()}};
  j["min_unbalanced_lambda1"] =
      r.min_unbalanced_lambda1 ? nlohmann::json(*r.min_unbalanced_lambda1) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json chain_to_json(int n, const std::vector<ChainEntry>& chain) {
  nlohmann::json j;
  j["n"] = n;
  j["chain"] = nlohmann::json::array();
  for (const auto& e : chain) j["chain"].push_back({{"s", e.s}, {"t", e.t}, {"lambda1", e.lambda1}});
  j["strictly_increasing"] = chain_strictly_increasing(chain);
  return j;
}

}  // namespace signed_index
