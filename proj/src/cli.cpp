#include "signed_index/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "signed_index/balance.hpp"
#include "signed_index/errors.hpp"
#include "signed_index/perturb.hpp"
#include "signed_index/random.hpp"
#include "signed_index/search.hpp"
#include "signed_index/signed_graph.hpp"
#include "signed_index/spectra.hpp"

namespace signed_index::cli {

namespace {

constexpr int kMaxInputOrder = 200;
constexpr int kMaxChainOrder = 200;
constexpr int kMaxClimbOrder = 20;

struct Options {
  std::string format = "json";
  std::string out_path;
  std::optional<std::string> prufer;
  std::optional<std::string> edges_path;
  int n = 0;
  int k = 0;
  bool k_given = false;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t seed = 0;
  int max_steps = 1000;
};

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--out", o.out_path, "Write output to PATH instead of standard output");
}

void add_tree_input(CLI::App* sub, Options& o) {
  auto* pr = sub->add_option("--prufer", o.prufer, "Comma-separated Prüfer sequence");
  auto* ed = sub->add_option("--edges", o.edges_path, "Edge-list file: n, then one \"u v\" per line");
  pr->excludes(ed);
}

Tree read_tree(const Options& o) {
  if (o.prufer.has_value() == o.edges_path.has_value()) {
    throw DomainError("give exactly one of --prufer or --edges");
  }
  if (o.prufer) {
    auto seq = parse_prufer(*o.prufer);
    if (seq.n > kMaxInputOrder) throw DomainError("tree order above " + std::to_string(kMaxInputOrder));
    return prufer_decode(seq);
  }
  std::ifstream in(*o.edges_path);
  if (!in) throw MalformedInputError("cannot open edge list " + *o.edges_path);
  Tree t = parse_edge_list(in);
  if (t.order() > kMaxInputOrder) throw DomainError("tree order above " + std::to_string(kMaxInputOrder));
  return t;
}

void check_range(const char* name, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw DomainError(fmt::format("{} must be in [{}, {}], got {}", name, lo, hi, value));
  }
}

std::string join(const std::vector<int>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string cmd_spectrum(const Options& o) {
  const Tree t = read_tree(o);
  const auto s = spectrum(signed_complete_from_tree(t));
  if (o.format == "json") return spectrum_to_json(s).dump() + "\n";
  std::string out;
  if (o.format == "csv") {
    out = "i,lambda\n";
    for (std::size_t i = 0; i < s.values.size(); ++i) out += fmt::format("{},{}\n", i + 1, format_double(s.values[i]));
    return out;
  }
  out += fmt::format("n        {}\n", t.order());
  out += fmt::format("lambda1  {}\n", format_double(s.values.front()));
  out += fmt::format("lambdan  {}\n", format_double(s.values.back()));
  out += fmt::format("radius   {}\n", format_double(std::max(s.values.front(), -s.values.back())));
  for (std::size_t i = 0; i < s.values.size(); ++i) out += fmt::format("  {:>3}  {}\n", i + 1, format_double(s.values[i]));
  return out;
}

std::string cmd_balance(const Options& o) {
  const Tree t = read_tree(o);
  const auto w = balance_witness(signed_complete_from_tree(t));
  std::vector<int> minus;
  for (int v = 0; v < t.order(); ++v) {
    if (w.side[v] < 0) minus.push_back(v);
  }
  std::vector<int> triangle;
  if (w.negative_triangle) triangle.assign(w.negative_triangle->begin(), w.negative_triangle->end());

  if (o.format == "json") {
    nlohmann::json j;
    j["n"] = t.order();
    j["balanced"] = w.balanced;
    if (w.balanced) {
      j["minus_side"] = minus;
    } else {
      j["negative_triangle"] = triangle;
    }
    return j.dump() + "\n";
  }
  if (o.format == "csv") {
    return fmt::format("n,balanced,witness\n{},{},\"{}\"\n", t.order(), w.balanced ? "true" : "false",
                       join(w.balanced ? minus : triangle, ","));
  }
  if (w.balanced) return fmt::format("balanced; minus side: {}\n", join(minus, " "));
  return fmt::format("unbalanced; negative triangle: {}\n", join(triangle, " "));
}

bool report_is_discovery(const SearchReport& r) {
  if (r.mode == VerifyMode::Theorem && !r.matches_broom) return true;
  if (r.argmax_is_double_star_1.has_value() && !*r.argmax_is_double_star_1) return true;
  return false;
}

std::string report_text(const SearchReport& r) {
  std::string out = fmt::format("n={} k={} mode={} classes={}\n", r.n, r.k, to_string(r.mode), r.classes.size());
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    out += fmt::format("{} {:<22} {:<28} {}\n", i == r.argmax ? '*' : ' ', format_double(c.lambda1), c.code.code,
                       format_prufer(c.prufer));
  }
  out += fmt::format("argmax matches broom: {}\n", r.matches_broom ? "yes" : "no");
  out += fmt::format("runner-up gap: {}\n", r.runner_up_gap ? format_double(*r.runner_up_gap) : "n/a");
  if (r.tie()) out += fmt::format("TIE among {} classes\n", r.tied_codes.size());
  out += fmt::format("structural audit: {}\n",
                     r.audit.applicable ? (r.audit.passed() ? "pass" : "fail") : "not applicable");
  return out;
}

int cmd_verify(const Options& o, std::string& out) {
  check_range("--n", o.n, 3, kMaxEnumerationOrder);
  check_range("--k", o.k, 2, o.n - 1);
  const auto r = verify_theorem1(o.n, o.k);
  if (o.format == "json") {
    out = report_to_json(r).dump() + "\n";
  } else if (o.format == "csv") {
    out = report_to_csv(r);
  } else {
    out = report_text(r);
  }
  return report_is_discovery(r) ? kExitDiscovery : kExitOk;
}

int cmd_sweep(const Options& o, std::string& out) {
  check_range("--n-min", o.n_min, 3, kMaxEnumerationOrder);
  check_range("--n-max", o.n_max, o.n_min, kMaxEnumerationOrder);
  const auto reports = sweep(o.n_min, o.n_max);
  bool discovery = false;
  nlohmann::json rows = nlohmann::json::array();
  std::string csv = "n,k,mode,classes,argmax_code,lambda1_max,runner_up_gap,matches_broom,audit\n";
  std::string text = fmt::format("{:>3} {:>3} {:<13} {:>7} {:<22} {:<24} {:<6} {}\n", "n", "k", "mode", "classes",
                                 "lambda1_max", "runner_up_gap", "broom", "audit");
  for (const auto& r : reports) {
    discovery = discovery || report_is_discovery(r);
    const double top = r.classes[r.argmax].lambda1;
    const std::string gap = r.runner_up_gap ? format_double(*r.runner_up_gap) : "";
    const std::string audit = r.audit.applicable ? (r.audit.passed() ? "pass" : "fail") : "n/a";
    rows.push_back({{"n", r.n},
                    {"k", r.k},
                    {"mode", to_string(r.mode)},
                    {"classes", r.classes.size()},
                    {"argmax_code", r.argmax_code.code},
                    {"lambda1_max", top},
                    {"runner_up_gap", r.runner_up_gap ? nlohmann::json(*r.runner_up_gap) : nlohmann::json(nullptr)},
                    {"matches_broom", r.matches_broom},
                    {"audit", audit}});
    csv += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.n, r.k, to_string(r.mode), r.classes.size(), r.argmax_code.code,
                       format_double(top), gap, r.matches_broom ? "true" : "false", audit);
    text += fmt::format("{:>3} {:>3} {:<13} {:>7} {:<22} {:<24} {:<6} {}\n", r.n, r.k, to_string(r.mode),
                        r.classes.size(), format_double(top), gap.empty() ? "-" : gap,
                        r.matches_broom ? "yes" : "no", audit);
  }
  if (o.format == "json") {
    out = nlohmann::json{{"n_min", o.n_min}, {"n_max", o.n_max}, {"rows", rows}}.dump() + "\n";
  } else if (o.format == "csv") {
    out = csv;
  } else {
    out = text;
  }
  return discovery ? kExitDiscovery : kExitOk;
}

int cmd_chain(const Options& o, std::string& out) {
  check_range("--n", o.n, 6, kMaxChainOrder);
  const auto chain = double_star_chain(o.n);
  const bool increasing = chain_strictly_increasing(chain);
  if (o.format == "json") {
    out = chain_to_json(o.n, chain).dump() + "\n";
  } else {
    out = o.format == "csv" ? "s,t,lambda1\n" : "";
    for (const auto& e : chain) {
      out += o.format == "csv" ? fmt::format("{},{},{}\n", e.s, e.t, format_double(e.lambda1))
                               : fmt::format("T_{{{},{}}}  {}\n", e.s, e.t, format_double(e.lambda1));
    }
  }
  return increasing ? kExitOk : kExitDiscovery;
}

int cmd_climb(const Options& o, std::string& out) {
  check_range("--n", o.n, 3, kMaxClimbOrder);
  check_range("--k", o.k, 2, o.n - 1);
  check_range("--max-steps", o.max_steps, 0, 1000000);
  Rng rng(o.seed);
  const Tree start = random_tree_with_leaves(rng, o.n, o.k);
  const auto result = hill_climb(o.n, o.k, start, o.max_steps);
  if (o.format == "json") {
    out = trace_to_jsonl(result.trace);
  } else if (o.format == "csv") {
    out = "step,kind,vertices,lambda1\n";
    for (const auto& s : result.trace) {
      out += fmt::format("{},{},\"{}\",{}\n", s.step, to_string(s.move.kind()), join(s.move.vertices(), ","),
                         format_double(s.lambda1));
    }
  } else {
    out = fmt::format("start  prufer {}  lambda1 {}\n", format_prufer(prufer_encode(start)),
                      format_double(result.start_lambda1));
    for (const auto& s : result.trace) {
      out += fmt::format("step {:>3}  {:<7} ({})  lambda1 {}\n", s.step, to_string(s.move.kind()),
                         join(s.move.vertices(), ","), format_double(s.lambda1));
    }
    out += fmt::format("final  prufer {}  lambda1 {}  {}\n", format_prufer(prufer_encode(result.tree)),
                       format_double(result.final_lambda1),
                       result.local_maximum ? "local maximum" : "step limit reached");
    out += fmt::format("final is broom: {}\n",
                       canonical_code(result.tree) == canonical_code(build_broom(o.n, o.k)) ? "yes" : "no");
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::string& out) {
  check_range("--n", o.n, 2, kMaxEnumerationOrder);
  if (o.k_given) check_range("--k", o.k, 2, std::max(2, o.n - 1));
  const auto classes = o.k_given ? enumerate_with_leaves(o.n, o.k) : enumerate_tree_classes(o.n);
  nlohmann::json rows = nlohmann::json::array();
  std::string csv = "n,canonical_code,prufer,leaf_count,lambda1\n";
  std::string text;
  for (const auto& c : classes) {
    const auto prufer = prufer_encode(c.representative);
    const int leaves = leaf_count(c.representative);
    const double lambda1 = index(signed_complete_from_tree(c.representative));
    rows.push_back({{"canonical_code", c.code.code},
                    {"prufer", prufer.symbols},
                    {"leaf_count", leaves},
                    {"lambda1", lambda1}});
    csv += fmt::format("{},{},\"{}\",{},{}\n", o.n, c.code.code, format_prufer(prufer), leaves, format_double(lambda1));
    text += fmt::format("{:<28} k={:<3} lambda1={:<22} prufer={}\n", c.code.code, leaves, format_double(lambda1),
                        format_prufer(prufer));
  }
  if (o.format == "json") {
    nlohmann::json j{{"n", o.n}, {"count", classes.size()}, {"classes", rows}};
    if (o.k_given) j["k"] = o.k;
    out = j.dump() + "\n";
  } else if (o.format == "csv") {
    out = csv;
  } else {
    out = text + fmt::format("{} classes\n", classes.size());
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index of signed complete graphs whose negative edges form a spanning tree", "signed-index"};
  app.require_subcommand(1);
  Options o;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Adjacency spectrum of (K_n, T^-)");
  add_tree_input(spectrum_cmd, o);
  add_output_options(spectrum_cmd, o);

  auto* balance_cmd = app.add_subcommand("balance", "Balance flag with a bipartition or negative triangle");
  add_tree_input(balance_cmd, o);
  add_output_options(balance_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive index maximiser among trees with k leaves");
  verify_cmd->add_option("--n", o.n, "Order")->required();
  verify_cmd->add_option("--k", o.k, "Leaf count")->required();
  add_output_options(verify_cmd, o);

  auto* sweep_cmd = app.add_subcommand("sweep", "verify for every valid k over a range of n");
  sweep_cmd->add_option("--n-min", o.n_min, "Smallest order")->required();
  sweep_cmd->add_option("--n-max", o.n_max, "Largest order")->required();
  add_output_options(sweep_cmd, o);

  auto* chain_cmd = app.add_subcommand("chain", "Index along the double stars T_{s,t}");
  chain_cmd->add_option("--n", o.n, "Order")->required();
  add_output_options(chain_cmd, o);

  auto* climb_cmd = app.add_subcommand("climb", "Hill climb from a random tree with k leaves");
  climb_cmd->add_option("--n", o.n, "Order")->required();
  climb_cmd->add_option("--k", o.k, "Leaf count")->required();
  climb_cmd->add_option("--seed", o.seed, "Seed for the random start")->capture_default_str();
  climb_cmd->add_option("--max-steps", o.max_steps, "Step limit")->capture_default_str();
  add_output_options(climb_cmd, o);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "One tree per isomorphism class");
  enumerate_cmd->add_option("--n", o.n, "Order")->required();
  auto* k_opt = enumerate_cmd->add_option("--k", o.k, "Only classes with this many leaves");
  add_output_options(enumerate_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    err << "error: " << (msg.empty() ? e.get_name() : msg) << "\n";
    return kExitError;
  }
  o.k_given = k_opt->count() > 0;

  try {
    std::string text;
    int code = kExitOk;
    if (*spectrum_cmd) {
      text = cmd_spectrum(o);
    } else if (*balance_cmd) {
      text = cmd_balance(o);
    } else if (*verify_cmd) {
      code = cmd_verify(o, text);
    } else if (*sweep_cmd) {
      code = cmd_sweep(o, text);
    } else if (*chain_cmd) {
      code = cmd_chain(o, text);
    } else if (*climb_cmd) {
      code = cmd_climb(o, text);
    } else if (*enumerate_cmd) {
      code = cmd_enumerate(o, text);
    }

    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) throw MalformedInputError("cannot write " + o.out_path);
      file << text;
    }
    if (code == kExitDiscovery) err << "verification did not confirm the expected extremal structure\n";
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace signed_index::cli
