#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "signed_index/canonical.hpp"
#include "signed_index/enumerate.hpp"
#include "signed_index/tree.hpp"

namespace signed_index {

/// How the (n, k) pair relates to the extremal statement being checked.
enum class VerifyMode {
  Theorem,       // n >= 6 and 3 <= k <= n-3
  Path,          // k = 2: the only class is P_n
  DoubleStar,    // k = n-2: classes are the double stars T_{s,t}
  BalancedStar,  // k = n-1: the only class is the balanced star
};

std::string to_string(VerifyMode mode);

struct ClassEntry {
  CanonicalTreeCode code;
  PruferSequence prufer;
  int leaf_count = 0;
  double lambda1 = 0.0;
  bool balanced = false;
};

struct StructuralAudit {
  bool applicable = false;
  /// Exactly one vertex has the maximum degree, and that degree is k.
  bool unique_hub_of_degree_k = false;
  /// The hub has k-1 pendant neighbours.
  bool hub_has_k_minus_1_pendants = false;
  /// Every vertex other than the hub has degree at most 2.
  bool others_degree_at_most_2 = false;

  bool passed() const {
    return applicable && unique_hub_of_degree_k && hub_has_k_minus_1_pendants &&
           others_degree_at_most_2;
  }
};

/// Checks the hub structure an index maximiser must have. Not applicable for
/// k = 2 and k = n-1.
StructuralAudit structural_audit(const Tree& t, int k);

inline constexpr double kTieTolerance = 1e-9;

struct SearchReport {
  int n = 0;
  int k = 0;
  VerifyMode mode = VerifyMode::Theorem;
  /// Sorted by canonical code.
  std::vector<ClassEntry> classes;
  std::size_t argmax = 0;
  CanonicalTreeCode argmax_code;
  /// lambda1(argmax) - lambda1(runner-up); empty with a single class.
  std::optional<double> runner_up_gap;
  /// Codes within kTieTolerance of the maximum, including the argmax.
  std::vector<CanonicalTreeCode> tied_codes;
  CanonicalTreeCode broom_code;
  bool matches_broom = false;
  /// For k = n-2: whether the argmax is T_{1,n-3}.
  std::optional<bool> argmax_is_double_star_1;
  StructuralAudit audit;
  /// Smallest lambda1 over unbalanced classes, when there is one.
  std::optional<double> min_unbalanced_lambda1;

  bool tie() const { return tied_codes.size() > 1; }
};

/// Computes lambda1 of (K_n, T^-) for every class with k leaves and compares
/// the maximiser with build_broom(n, k). Requires 3 <= n <= 12, 2 <= k <= n-1.
SearchReport verify_theorem1(int n, int k);

/// Every valid k for each n in [n_min, n_max].
std::vector<SearchReport> sweep(int n_min, int n_max);

struct ChainEntry {
  int s = 0;
  int t = 0;
  double lambda1 = 0.0;
};

inline constexpr double kChainMinimumStep = 1e-9;

/// lambda1 of (K_n, T_{s,t}^-) for s from floor((n-2)/2) down to 1, t = n-2-s.
/// Requires n >= 6.
std::vector<ChainEntry> double_star_chain(int n);

/// True when every step of the chain rises by more than kChainMinimumStep.
bool chain_strictly_increasing(const std::vector<ChainEntry>& chain);

/// Columns n,k,canonical_code,prufer,leaf_count,lambda1,is_argmax.
std::string report_to_csv(const SearchReport& r, bool header = true);
nlohmann::json report_to_json(const SearchReport& r);
nlohmann::json chain_to_json(int n, const std::vector<ChainEntry>& chain);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double x);

}  // namespace signed_index
