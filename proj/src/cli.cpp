#include "factorcover/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "factorcover/extremal.hpp"
#include "factorcover/factors.hpp"
#include "factorcover/graph6.hpp"
#include "factorcover/isomorphism.hpp"
#include "factorcover/report.hpp"
#include "factorcover/spectra.hpp"
#include "factorcover/verify.hpp"

namespace fcover::cli {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct GraphInput {
  std::string graph6;
  std::string file;
};

struct FamilyInput {
  std::string family;
  int n = 0;
  int k = 0;
  int s = 0;
};

void add_graph_options(CLI::App* cmd, GraphInput& g) {
  cmd->add_option("--graph6", g.graph6, "Graph in graph6 format");
  cmd->add_option("--input", g.file, "File with one graph6 string per line (default: standard input)");
}

void add_family_options(CLI::App* cmd, FamilyInput& f, bool required) {
  auto* fam = cmd->add_option("--family", f.family, "H, G-empty or G-nonempty");
  if (required) fam->required();
  cmd->add_option("--n", f.n, "Order");
  cmd->add_option("--k", f.k, "Family parameter k");
  cmd->add_option("--s", f.s, "Family parameter s");
}

struct NamedGraph {
  Graph graph;
  Json input;
};

std::vector<NamedGraph> load_graphs(const GraphInput& g, std::istream& in) {
  std::vector<NamedGraph> out;
  if (!g.graph6.empty()) {
    Graph decoded = graph6_decode(g.graph6);
    out.push_back({decoded, Json{{"graph6", graph6_encode(decoded)}}});
    return out;
  }
  std::vector<Graph> graphs;
  if (!g.file.empty()) {
    std::ifstream file(g.file);
    if (!file) throw std::invalid_argument("cannot open " + g.file);
    graphs = read_graph6_stream(file);
  } else {
    graphs = read_graph6_stream(in);
  }
  if (graphs.empty()) throw std::invalid_argument("no graphs on input");
  for (auto& graph : graphs) out.push_back({graph, Json{{"graph6", graph6_encode(graph)}}});
  return out;
}

void emit(std::ostream& out, const Json& record) { out << record.dump() << '\n'; }

std::string render_set(VertexSet s) {
  std::string text = "{";
  bool first = true;
  for (int v : s.members()) {
    text += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return text + "}";
}

int cmd_spectrum(const GraphInput& gi, const FamilyInput& fi, std::optional<int> alpha,
                 const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<NamedGraph> graphs;
  std::optional<FamilyParams> params;
  if (!fi.family.empty()) {
    params = FamilyParams{fi.n, fi.k, fi.s, parse_family(fi.family)};
    validate(*params);
    graphs.push_back({build_family(*params), Json{{"family", to_json(*params)}}});
    graphs.back().input["graph6"] = graph6_encode(graphs.back().graph);
  } else {
    graphs = load_graphs(gi, in);
  }
  bool residuals_ok = true;
  for (const auto& [g, input] : graphs) {
    const auto start = Clock::now();
    Json results;
    const auto rho = spectral_radius(g);
    const auto q = q_radius(g);
    residuals_ok = residuals_ok && residual_ok(adjacency(g), rho) && residual_ok(signless_laplacian(g), q);
    results["rho"] = measure(rho);
    results["q"] = measure(q);
    if (alpha) {
      const auto la = lambda_alpha(g, *alpha);
      residuals_ok = residuals_ok && residual_ok(alpha_matrix(g, *alpha), la);
      results["lambda_alpha"] = measure(la);
      results["alpha"] = *alpha;
    }
    err << input["graph6"].get<std::string>() << ": rho=" << rho.value << " q=" << q.value;
    if (alpha) err << " lambda_" << *alpha << "=" << results["lambda_alpha"]["value"].get<double>();
    if (params) {
      const double qa = quotient_poly(*params, MatrixKind::Adjacency).largest_root();
      const double qq = quotient_poly(*params, MatrixKind::SignlessLaplacian).largest_root();
      results["quotient"] = Json{{"A", measure(qa, SpectralMethod::Quotient, std::nullopt)},
                                 {"Q", measure(qq, SpectralMethod::Quotient, std::nullopt)}};
      err << " (quotient: rho=" << qa << " q=" << qq << ")";
    }
    err << '\n';
    emit(out, make_record("spectrum", args, input, results, ms_since(start)));
  }
  if (!residuals_ok) err << "residual contract violated\n";
  return residuals_ok ? kExitPass : kExitFail;
}

int cmd_check(const GraphInput& gi, const std::string& property, int k, const std::string& criterion,
              const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const bool matching = property == "matching-cover";
  const bool want_direct = criterion != "lemma";
  const bool want_lemma = criterion != "direct";
  bool all_hold = true;
  for (const auto& [g, input] : load_graphs(gi, in)) {
    const auto start = Clock::now();
    const int n = g.order();
    if (matching && (k < 0 || k > n || (n - k) % 2 != 0))
      throw std::invalid_argument("matching-cover needs 0 <= k <= n and k = n (mod 2); got n=" + std::to_string(n) +
                                  ", k=" + std::to_string(k));
    if (!matching && k < 2) throw std::invalid_argument("star-cover needs k >= 2");
    Json verdicts = Json::array();
    std::optional<bool> direct_holds, lemma_holds;
    const std::string name = input["graph6"].get<std::string>();
    auto record = [&](const char* label, const Verdict& v) {
      Json j{{"criterion", label}};
      j.update(to_json(v));
      verdicts.push_back(j);
      err << name << " " << property << " k=" << k << " [" << label << "]: " << (v.holds ? "holds" : "fails");
      if (v.witness_edge) err << ", edge {" << v.witness_edge->u << "," << v.witness_edge->v << "}";
      if (v.witness_set) err << ", S=" << render_set(*v.witness_set);
      if (!v.detail.empty()) err << " - " << v.detail;
      err << '\n';
    };
    if (want_direct) {
      const auto v = matching ? is_matching_covered(g, k) : is_star_covered(g, k);
      direct_holds = v.holds;
      record("direct", v);
    }
    if (want_lemma) {
      const auto v = matching ? lemma_matching_criterion(g, k) : cek_criterion(g, k);
      lemma_holds = v.holds;
      record("lemma", v);
    }
    const bool holds = direct_holds.value_or(true) && lemma_holds.value_or(true);
    Json results{{"property", property}, {"k", k}, {"holds", holds}, {"verdicts", verdicts}};
    if (direct_holds && lemma_holds) {
      results["agree"] = *direct_holds == *lemma_holds;
      if (*direct_holds != *lemma_holds) err << name << ": criteria disagree\n";
    }
    all_hold = all_hold && holds;
    emit(out, make_record("check", args, input, results, ms_since(start)));
  }
  return all_hold ? kExitPass : kExitFail;
}

int cmd_sweep(SweepConfig config, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const auto report = run_sweep(config);
  Json inputs{{"target", target_tag(config)},
              {"n", config.n},
              {"k", config.k},
              {"mode", to_string(config.mode)},
              {"samples", config.sample_count},
              {"seed", config.seed},
              {"trials", config.trials},
              {"n_max", config.n_max},
              {"k_set", report.config.k_set},
              {"tolerance", config.tolerance},
              {"jobs", config.jobs}};
  emit(out, make_record("sweep", args, inputs, to_json(report), ms_since(start)));
  err << summarize(report);
  return report.passed() ? kExitPass : kExitFail;
}

int cmd_build(const FamilyInput& fi, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const FamilyParams p{fi.n, fi.k, fi.s, parse_family(fi.family)};
  const Graph g = build_family(p);
  const auto sizes = part_sizes(p);
  Json results{{"graph6", graph6_encode(g)},
               {"n", g.order()},
               {"m", g.size()},
               {"degrees", g.degrees()},
               {"parts", Json{{"outer", sizes.outer},
                              {"independent", sizes.independent},
                              {"clique", sizes.clique},
                              {"outer_is_clique", sizes.outer_is_clique}}}};
  err << describe(p) << ": " << graph6_encode(g) << " (" << g.size() << " edges)\n";
  emit(out, make_record("build", args, Json{{"family", to_json(p)}}, results, ms_since(start)));
  return kExitPass;
}

int cmd_enumerate(int n, bool plain, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto graphs = enumerate_graphs(n);
  for (const auto& g : graphs) {
    if (plain) {
      out << graph6_encode(g) << '\n';
      continue;
    }
    emit(out, make_record("graph", args, Json{{"n", n}},
                          Json{{"graph6", graph6_encode(g)}, {"n", g.order()}, {"m", g.size()}}, 0.0));
  }
  err << graphs.size() << " isomorphism classes on " << n << " vertices\n";
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral conditions for factor-covered graphs: spectra, deciders and sweeps", "factorcover"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  GraphInput spectrum_graph;
  FamilyInput spectrum_family;
  std::optional<int> alpha;
  auto* spectrum = app.add_subcommand("spectrum", "Spectral radius rho, q and lambda_alpha");
  add_graph_options(spectrum, spectrum_graph);
  add_family_options(spectrum, spectrum_family, false);
  spectrum->add_option("--alpha", alpha, "Also report lambda_alpha for alpha in {0,1}")
      ->check(CLI::IsMember({0, 1}));

  GraphInput check_graph;
  std::string property;
  int check_k = 0;
  std::string criterion = "both";
  auto* check = app.add_subcommand("check", "Decide matching or star-factor covering");
  add_graph_options(check, check_graph);
  check->add_option("--property", property, "matching-cover or star-cover")
      ->required()
      ->check(CLI::IsMember({"matching-cover", "star-cover"}));
  check->add_option("--k", check_k, "Property parameter k")->required();
  check->add_option("--criterion", criterion, "direct, lemma or both")
      ->check(CLI::IsMember({"direct", "lemma", "both"}));

  SweepConfig config;
  config.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string target, mode = "exhaustive";
  auto* sweep = app.add_subcommand("sweep", "Run a verification sweep");
  sweep->add_option("--target", target, "thm1..thm4, lemma-SP|GE|equit|inequit, equivalence-A|B, audit-hN, scan-hN")
      ->required();
  sweep->add_option("--n", config.n, "Order for theorem sweeps");
  sweep->add_option("--k", config.k, "Parameter k for theorem sweeps");
  sweep->add_option("--mode", mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  sweep->add_option("--samples", config.sample_count, "Random samples in sampled mode")->capture_default_str();
  sweep->add_option("--seed", config.seed, "Seed of the sample stream")->capture_default_str();
  sweep->add_option("--trials", config.trials, "Trials for lemma property suites")->capture_default_str();
  sweep->add_option("--n-max", config.n_max, "Largest order for equivalence sweeps")->capture_default_str();
  sweep->add_option("--k-set", config.k_set, "k values for equivalence sweeps");
  sweep->add_option("--tolerance", config.tolerance, "Threshold slack")->capture_default_str();
  sweep->add_option("--jobs", config.jobs, "Worker threads (default: available parallelism)")
      ->check(CLI::PositiveNumber);

  FamilyInput build_family_in;
  auto* build = app.add_subcommand("build", "Construct a family graph");
  add_family_options(build, build_family_in, true);

  int enum_n = 0;
  bool plain = false;
  auto* enumerate = app.add_subcommand("enumerate", "List isomorphism classes of order n (n <= 8)");
  enumerate->add_option("--n", enum_n, "Order")->required();
  enumerate->add_flag("--plain", plain, "Print bare graph6 lines instead of records");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(spectrum_graph, spectrum_family, alpha, args, in, out, err);
    if (*check) return cmd_check(check_graph, property, check_k, criterion, args, in, out, err);
    if (*sweep) {
      auto parsed = parse_target(target);
      config.target = parsed.target;
      config.lemma = parsed.lemma;
      config.mode = mode == "sampled" ? SweepMode::Sampled : SweepMode::Exhaustive;
      return cmd_sweep(config, args, out, err);
    }
    if (*build) return cmd_build(build_family_in, args, out, err);
    if (*enumerate) return cmd_enumerate(enum_n, plain, args, out, err);
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error and out_of_range are input problems;
    // other logic errors indicate a broken internal invariant.
    const bool input = dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e) ||
                       dynamic_cast<const std::out_of_range*>(&e);
    err << (input ? "error: " : "internal error: ") << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fcover::cli
