#include "commands.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "abeldim/chi_opt.hpp"
#include "abeldim/error.hpp"
#include "abeldim/generic_invariants.hpp"
#include "abeldim/pattern_engine.hpp"
#include "abeldim/superisolated.hpp"
#include "abeldim/version.hpp"

namespace abeldim::cli {

namespace {

StarBranch parse_branch(const std::string& name) {
  if (name == "Gamma" || name == "gamma") return StarBranch::Gamma;
  if (name == "E237" || name == "e237") return StarBranch::E237;
  fail(ErrorCode::InvalidArgument, "unknown branch '" + name + "' (expected Gamma or E237)");
}

ordered_json header(const std::string& command) { return {{"command", command}, {"version", kVersion}}; }

bool is_cap_error(ErrorCode c) {
  return c == ErrorCode::BoxTooLarge || c == ErrorCode::GridTooLarge || c == ErrorCode::SupportEnumerationTooLarge;
}

ordered_json skipped(const Error& e) { return {{"skipped", to_string(e.code())}, {"reason", e.what()}}; }

struct Inputs {
  ResolvedGraph g;
  Cycle Z;
  EStarCombination lp;
  bool auto_cap = false;
};

Inputs read_inputs(const DimOptions& opt) {
  Inputs in{resolve(opt.source), {}, {}, false};
  const auto& G = in.g.graph;
  if (!opt.Z.empty() && opt.Z_auto) fail(ErrorCode::InvalidArgument, "--Z and --Z-auto are exclusive");
  if (opt.Z.empty()) {
    in.Z = default_cap(G);
    in.auto_cap = true;
  } else {
    in.Z = parse_cycle(G, load_json(opt.Z));
  }
  require_at_least_reduced(G, in.Z);
  if (!opt.lprime.empty()) {
    in.lp = parse_lprime(G, load_json(opt.lprime));
  } else if (in.g.example) {
    in.lp = in.g.example->lprime;
  } else {
    fail(ErrorCode::InvalidArgument, "--lprime is required for non-builtin graphs");
  }
  return in;
}

ordered_json echo(const Inputs& in) {
  const auto& G = in.g.graph;
  ordered_json j;
  if (in.g.example) j["example"] = in.g.example->name;
  j["vertices"] = G.size();
  j["Z"] = cycle_to_json(G, in.Z);
  j["Z_source"] = in.auto_cap ? "auto" : "given";
  j["lprime"] = lprime_to_json(G, in.lp);
  return j;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

ResolvedGraph resolve(const GraphSource& src) {
  if (!src.graph.empty() && !src.example.empty()) fail(ErrorCode::InvalidArgument, "--graph and --example are exclusive");
  if (!src.graph.empty()) return {build_graph(parse_graph_spec(load_json(src.graph))), std::nullopt};
  if (src.example == "twin_gamma") {
    auto ex = twin_gamma(src.b == 0 ? 30 : src.b);
    auto G = ex.graph;
    return {std::move(G), std::move(ex)};
  }
  if (src.example == "star") {
    std::vector<StarBranch> branches;
    for (const auto& name : src.branches) branches.push_back(parse_branch(name));
    if (branches.empty()) branches = {StarBranch::Gamma, StarBranch::Gamma};
    auto ex = star(branches, src.b, src.n);
    auto G = ex.graph;
    return {std::move(G), std::move(ex)};
  }
  if (src.example.empty()) fail(ErrorCode::InvalidArgument, "a graph is required (--graph or --example)");
  fail(ErrorCode::InvalidArgument, "unknown example '" + src.example + "' (expected twin_gamma or star)");
}

ordered_json cmd_check(const GraphSource& src) {
  const auto r = resolve(src);
  const auto& G = r.graph;
  auto j = header("check");
  j["valid"] = true;
  j["vertices"] = G.size();
  j["edges"] = G.edges().size();
  j["determinant"] = determinant_abs(G).str();
  j["Z_K"] = qcycle_to_json(G, canonical_cycle(G));
  const auto zmin = laufer_fundamental_cycle(G);
  j["Z_min"] = cycle_to_json(G, zmin);
  j["chi_Z_min"] = chi(G, zmin);
  return j;
}

ordered_json cmd_dim(const DimOptions& opt) {
  static const std::vector<std::string> kMethods{"direct", "support", "first", "second"};
  if (opt.method != "all" && std::find(kMethods.begin(), kMethods.end(), opt.method) == kMethods.end())
    fail(ErrorCode::InvalidArgument, "unknown method '" + opt.method + "'");
  const auto in = read_inputs(opt);
  const auto& G = in.g.graph;
  const auto limits = default_limits();

  auto j = header("dim");
  j["input"] = echo(in);
  ordered_json timing = ordered_json::object();

  Stopwatch sw;
  const auto h1 = h1_generic(G, in.Z);
  const auto cg = codim_generic(G, in.Z, in.lp, limits);
  timing["codim"] = sw.seconds();
  const auto d = h1 - cg.codim;
  j["h1"] = h1;
  j["d"] = d;
  j["codim"] = cg.codim;
  j["codim_witness"] = cycle_to_json(G, cg.witness);
  j["constant"] = d == 0;
  j["dominant"] = is_dominant(G, in.Z, in.lp);
  j["e_Z"] = e_Z(G, in.Z, in.lp);

  const std::map<std::string, std::function<std::int64_t()>> runners{
      {"direct", [&] { return d_generic(G, in.Z, in.lp, DMethod::Direct, limits); }},
      {"support", [&] { return d_generic(G, in.Z, in.lp, DMethod::PerSupport, limits); }},
      {"first",
       [&] {
         const auto tau = test_first(G, in.Z, in.lp);
         return run_pattern_induction(tau, limits).at(tau.shape(), MultiIndex(tau.shape().entries(), 0));
       }},
      {"second",
       [&] {
         const auto tau = test_second(G, in.Z, in.lp);
         return run_pattern_induction(tau, limits).at(tau.shape(), MultiIndex(tau.shape().entries(), 0));
       }},
  };
  ordered_json methods = ordered_json::object();
  std::vector<std::string> disagree;
  for (const auto& name : kMethods) {
    if (opt.method != "all" && opt.method != name) continue;
    Stopwatch msw;
    try {
      const auto v = runners.at(name)();
      methods[name] = {{"d", v}};
      if (v != d) disagree.push_back(name + "=" + std::to_string(v));
    } catch (const Error& e) {
      if (!is_cap_error(e.code())) throw;
      methods[name] = skipped(e);
    }
    timing[name] = msw.seconds();
  }
  j["methods"] = methods;

  try {
    const auto s = structure_cycles(G, in.Z, in.lp, limits);
    j["structure"] = {{"C_min", cycle_to_json(G, s.c_min)},
                      {"C_max", cycle_to_json(G, s.c_max)},
                      {"minimizers", s.minimizer_count},
                      {"closed", s.closed}};
    if (s.value != d) disagree.push_back("structure=" + std::to_string(s.value));
    if (!s.closed || !leq(s.c_min, s.c_max)) disagree.push_back("structure: minimizer set not a lattice");
  } catch (const Error& e) {
    if (!is_cap_error(e.code())) throw;
    j["structure"] = skipped(e);
  }
  if (opt.timing) j["timing"] = timing;

  if (!disagree.empty()) {
    std::string msg = "methods disagree with h1 - codim = " + std::to_string(d) + ":";
    for (const auto& s : disagree) msg += " " + s;
    fail(ErrorCode::CrossCheckFailed, msg);
  }
  return j;
}

ordered_json cmd_bounds(const DimOptions& opt) {
  const auto in = read_inputs(opt);
  const auto& G = in.g.graph;
  const auto limits = default_limits();
  auto j = header("bounds");
  j["input"] = echo(in);
  ordered_json timing = ordered_json::object();

  Stopwatch sw;
  const auto r = bound_report(G, in.Z, in.lp, limits);
  timing["report"] = sw.seconds();
  j["h1"] = r.h1;
  j["d"] = r.d;
  j["codim"] = r.codim;
  j["T"] = r.T;
  j["t"] = r.t;
  j["t_Z"] = r.t_Z;
  j["dominant"] = r.dominant;
  j["constant"] = r.constant;
  try {
    const auto tb = bound_t_brute(G, in.Z, in.lp, limits);
    j["t_brute"] = tb;
    if (tb != r.t) fail(ErrorCode::CrossCheckFailed, "t by enumeration differs from t by component weights");
  } catch (const Error& e) {
    if (!is_cap_error(e.code())) throw;
    j["t_brute"] = skipped(e);
  }

  Stopwatch rsw;
  const auto rc = check_recipe(G, in.Z, in.lp, limits);
  timing["recipe"] = rsw.seconds();
  ordered_json recipe{{"a", rc.a},
                      {"b", rc.b},
                      {"chi_minus_lprime", rational_to_json(rc.chi_minus_lprime)},
                      {"min_shifted", rational_to_json(rc.min_shifted)},
                      {"min_chi_positive", rc.min_chi}};
  if (rc.max_M) recipe["max_minimizer"] = cycle_to_json(G, *rc.max_M);
  j["recipe"] = recipe;

  try {
    j["twisted_h1_lower_bound_self"] = twisted_h1_lower_bound_self(G, in.Z, in.lp, limits);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonIntegralShift && !is_cap_error(e.code())) throw;
    j["twisted_h1_lower_bound_self"] = skipped(e);
  }
  if (opt.timing) j["timing"] = timing;
  return j;
}

ordered_json cmd_superisolated(const SiOptions& opt) {
  auto j = header("superisolated");
  j["input"] = {{"d", opt.d}, {"k", opt.k}};
  if (opt.k0) j["input"]["k0"] = *opt.k0;
  j["p_g"] = si::pg(opt.d);
  ordered_json gs = ordered_json::array();
  for (std::int64_t s = 0; s <= opt.d - 2; ++s) gs.push_back(si::gs(opt.d, s));
  j["g_s"] = gs;

  const auto a = si::dim_min_form(opt.d, opt.k);
  const auto b = si::dim_sum_form(opt.d, opt.k);
  const auto c = si::engine_dim(opt.d, opt.k);
  j["dim"] = {{"min_form", a}, {"sum_form", b}, {"engine", c}};
  if (a != b || a != c) fail(ErrorCode::CrossCheckFailed, "superisolated closed forms disagree");
  j["d"] = a;
  if (opt.k0) {
    const auto t = si::twisted_dim(opt.d, opt.k, *opt.k0);
    const auto te = si::engine_dim(opt.d, opt.k, *opt.k0);
    j["twisted"] = {{"closed_form", t}, {"engine", te}};
    if (t != te) fail(ErrorCode::CrossCheckFailed, "twisted closed form disagrees with the engine");
    j["d_twisted"] = t;
  }
  return j;
}

ordered_json cmd_examples(const GraphSource& src) {
  auto j = header("examples");
  if (src.example.empty()) {
    j["examples"] = ordered_json::array(
        {{{"name", "twin_gamma"},
          {"parameters", {"b"}},
          {"description", "two 7-vertex non-rational branches joined by a -b vertex; -l' = (b-2) E_v0^*"}},
         {{"name", "star"},
          {"parameters", {"branches", "b", "n"}},
          {"description", "central -b vertex with Gamma / E237 branches; -l' = n E_v0^*"}}});
    return j;
  }
  const auto r = resolve(src);
  const auto& ex = *r.example;
  const auto& G = r.graph;
  j["name"] = ex.name;
  j["graph"] = graph_to_json(G);
  j["center"] = G.id(ex.center);
  ordered_json branches = ordered_json::array();
  for (const auto& set : ex.branches) {
    ordered_json ids = ordered_json::array();
    for (auto v : set) ids.push_back(G.id(v));
    branches.push_back(ids);
  }
  j["branches"] = branches;
  j["lprime"] = lprime_to_json(G, ex.lprime);
  j["Z_min"] = cycle_to_json(G, laufer_fundamental_cycle(G));
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"abeldim: Abel map dimensions for plumbed surface singularities"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indented JSON");

  auto add_source = [](CLI::App* sub, GraphSource& src) {
    sub->add_option("--graph", src.graph, "graph JSON file or inline JSON");
    sub->add_option("--example", src.example, "builtin example: twin_gamma or star");
    sub->add_option("--b", src.b, "weight of the central vertex is -b");
    sub->add_option("--branches", src.branches, "star branches (Gamma, E237)")->delimiter(',');
    sub->add_option("--n", src.n, "star: -l' = n E_v0^*");
  };
  auto add_dim = [&](CLI::App* sub, DimOptions& opt) {
    add_source(sub, opt.source);
    sub->add_option("--Z", opt.Z, "cycle JSON file or inline JSON");
    sub->add_flag("--Z-auto", opt.Z_auto, "use the automatic cap cycle (default)");
    sub->add_option("--lprime", opt.lprime, "-l' as E*-coefficients, JSON file or inline");
    sub->add_flag("--timing", opt.timing, "include wall-clock timings");
  };

  GraphSource check_src, examples_src;
  DimOptions dim_opt, bounds_opt;
  SiOptions si_opt;
  std::int64_t k0 = -1;

  auto* check = app.add_subcommand("check", "validate a graph and print basic invariants");
  add_source(check, check_src);
  auto* dim = app.add_subcommand("dim", "dimension of the Abel map image by every method");
  add_dim(dim, dim_opt);
  dim->add_option("--method", dim_opt.method, "direct|support|first|second|all");
  auto* bounds = app.add_subcommand("bounds", "T, t, t_Z, recipe conditions and twisted bounds");
  add_dim(bounds, bounds_opt);
  auto* si_cmd = app.add_subcommand("superisolated", "closed forms for superisolated singularities");
  si_cmd->add_option("--d", si_opt.d, "degree")->required();
  si_cmd->add_option("--k", si_opt.k, "-l' = k E_0^*")->required();
  si_cmd->add_option("--k0", k0, "twist -l'_0 = k0 E_0^*");
  auto* examples = app.add_subcommand("examples", "list or print builtin example graphs");
  add_source(examples, examples_src);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto emit = [&](const ordered_json& j) { out << (pretty ? j.dump(2) : j.dump()) << "\n"; };
  try {
    ordered_json report;
    if (*check) {
      report = cmd_check(check_src);
    } else if (*dim) {
      report = cmd_dim(dim_opt);
    } else if (*bounds) {
      report = cmd_bounds(bounds_opt);
    } else if (*si_cmd) {
      if (k0 >= 0) si_opt.k0 = k0;
      else if (si_cmd->count("--k0") > 0) fail(ErrorCode::InvalidArgument, "k0 must be nonnegative");
      report = cmd_superisolated(si_opt);
    } else {
      report = cmd_examples(examples_src);
    }
    emit(report);
    return 0;
  } catch (const Error& e) {
    ordered_json j{{"error", to_string(e.code())}, {"message", e.what()}};
    if (*check) j["valid"] = false;
    emit(j);
    err << "abeldim: " << e.what() << "\n";
    return e.code() == ErrorCode::CrossCheckFailed ? 2 : 1;
  }
}

}  // namespace abeldim::cli
