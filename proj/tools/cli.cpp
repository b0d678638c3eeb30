#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qcva/checks.hpp"
#include "qcva/dims.hpp"
#include "qcva/fock.hpp"
#include "qcva/parallel.hpp"
#include "qcva/repcat.hpp"
#include "qcva/serialize.hpp"
#include "qcva/vertex_ops.hpp"

namespace qcva::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  long lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const long v = std::stol(s);
      return {v, v};
    }
    Range r{std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
    if (r.lo > r.hi) throw UsageError("empty range '" + s + "'");
    return r;
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + s + "', expected a..b");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

RatVector parse_vector(const std::string& s) {
  RatVector v;
  for (const auto& p : split(s, ',')) v.push_back(Rational::parse(p));
  return v;
}

json parse_json_arg(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\n");
  if (first != std::string::npos && (s[first] == '{' || s[first] == '[')) return json::parse(s);
  std::ifstream in(s);
  if (!in) throw UsageError("cannot read '" + s + "'");
  return json::parse(in);
}

// A single matrix ([[...]]) or a list of matrices ([[[...]]]).
std::vector<RatMatrix> parse_h(const std::string& s) {
  const json j = parse_json_arg(s);
  if (!j.is_array() || j.empty()) throw UsageError("--H must be a matrix or a list of matrices");
  const bool single = j[0].is_array() && (j[0].empty() || !j[0][0].is_array());
  std::vector<RatMatrix> hs;
  if (single) hs.push_back(matrix_from_json(j));
  else
    for (const auto& m : j) hs.push_back(matrix_from_json(m));
  return hs;
}

RatVector traces_over_dim(const std::vector<RatMatrix>& hs) {
  RatVector lambda;
  for (const auto& h : hs) {
    if (!h.is_square() || h.rows() == 0) throw UsageError("H matrices must be square and nonempty");
    Rational tr(0);
    for (std::size_t k = 0; k < h.rows(); ++k) tr += h(k, k);
    lambda.push_back(tr / Rational(static_cast<long>(h.rows())));
  }
  return lambda;
}

struct SpecArgs {
  std::string kind;
  int d = 0;
  std::string l = "1";
  std::string c = "0";
  std::string lambda;
  std::string h;
  std::string spec_json;

  void add_to(CLI::App* app) {
    app->add_option("--kind", kind, "adjoint or evaluation")->check(CLI::IsMember({"adjoint", "evaluation"}));
    app->add_option("--d", d, "number of colors");
    app->add_option("--l", l, "level, num/den");
    app->add_option("--c", c, "evaluation point, num/den");
    app->add_option("--lambda", lambda, "comma separated weights");
    app->add_option("--H", h, "top-space matrix or list of matrices as JSON");
    app->add_option("--spec-json", spec_json, "module spec as JSON or a path to it");
  }

  ModuleSpec build() const {
    if (!spec_json.empty()) return module_spec_from_json(parse_json_arg(spec_json));
    const Rational level = Rational::parse(l);
    const std::string k = kind.empty() ? (lambda.empty() && h.empty() ? "adjoint" : "evaluation") : kind;
    if (k == "adjoint") {
      if (!lambda.empty() || !h.empty()) throw UsageError("--lambda/--H need --kind evaluation");
      return ModuleSpec::adjoint(d == 0 ? 1 : d, level);
    }
    const Rational cc = Rational::parse(c);
    std::vector<RatMatrix> hs;
    if (!h.empty()) hs = parse_h(h);
    RatVector lam = lambda.empty() ? (hs.empty() ? RatVector{} : traces_over_dim(hs)) : parse_vector(lambda);
    if (lam.empty()) lam.assign(static_cast<std::size_t>(d == 0 ? 1 : d), Rational(0));
    if (d != 0 && static_cast<std::size_t>(d) != lam.size()) throw UsageError("--d does not match --lambda");
    if (hs.empty()) return ModuleSpec::evaluation(level, cc, lam);
    return ModuleSpec::generalized(level, cc, lam, std::move(hs));
  }
};

// r<dim>:<blocks joined by +>@<lambda list>, e.g. r2:2@1 or r3:2+1@1,0.
TopSpace parse_top(const std::string& s) {
  const auto colon = s.find(':'), at = s.find('@');
  if (s.empty() || s[0] != 'r' || colon == std::string::npos || at == std::string::npos || at < colon)
    throw UsageError("bad top '" + s + "', expected r<dim>:<blocks>@<lambda>");
  std::size_t r = 0;
  std::vector<std::size_t> blocks;
  try {
    r = std::stoul(s.substr(1, colon - 1));
    for (const auto& b : split(s.substr(colon + 1, at - colon - 1), '+')) blocks.push_back(std::stoul(b));
  } catch (const std::logic_error&) {
    throw UsageError("bad top '" + s + "'");
  }
  std::size_t total = 0;
  for (auto b : blocks) total += b;
  if (r == 0 || total != r || std::find(blocks.begin(), blocks.end(), 0u) != blocks.end())
    throw UsageError("block sizes of '" + s + "' must be positive and sum to r");
  const RatVector lambda = parse_vector(s.substr(at + 1));
  RatMatrix nil(r, r);
  std::size_t start = 0;
  for (auto b : blocks) {
    for (std::size_t k = start; k + 1 < start + b; ++k) nil(k, k + 1) = Rational(1);
    start += b;
  }
  std::vector<RatMatrix> hs;
  for (const auto& x : lambda) hs.push_back(RatMatrix::scalar(r, x) + nil);
  return TopSpace(lambda, std::move(hs));
}

TopSpace top_from_json(const json& j) {
  RatVector lambda;
  for (const auto& x : j.at("lambda")) lambda.push_back(rational_from_json(x));
  std::vector<RatMatrix> hs;
  if (j.contains("H"))
    for (const auto& m : j.at("H")) hs.push_back(matrix_from_json(m));
  else
    for (const auto& x : lambda) hs.push_back(RatMatrix::scalar(1, x));
  return TopSpace(lambda, std::move(hs));
}

std::string count_str(const BigCount& c) { return c.get_str(); }

json count_json(const BigCount& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

struct Output {
  std::string format = "json";
  std::string path;
};

void emit(const Output& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.path);
  if (!f) throw UsageError("cannot write '" + o.path + "'");
  f << text;
}

// ---- verify ----

struct VerifyArgs {
  std::string identity;
  SpecArgs spec;
  int max_wt = 4, max_nwt = 2;
  std::optional<int> j_max;
  std::string m_range, n_range, k_range;
  std::optional<long> n, k;
  std::string gen;
  std::string a_json;
  int max_a_wt = 2, max_a_nwt = 1;
  std::size_t samples = 0;
};

std::vector<long> values(const std::string& range, std::optional<long> single, Range dflt) {
  Range r = dflt;
  if (single) r = {*single, *single};
  else if (!range.empty()) r = parse_range(range);
  std::vector<long> v;
  for (long x = r.lo; x <= r.hi; ++x) v.push_back(x);
  return v;
}

std::vector<GenIndex> generators(const VerifyArgs& a, int d) {
  if (!a.gen.empty()) {
    const auto parts = split(a.gen, ',');
    if (parts.size() != 2) throw UsageError("--gen expects i,j");
    try {
      GenIndex g{std::stoi(parts[0]), std::stoi(parts[1])};
      if (g.color < 1 || g.color > d || g.tpow < 0) throw UsageError("--gen out of range");
      return {g};
    } catch (const std::logic_error&) {
      throw UsageError("--gen expects i,j");
    }
  }
  std::vector<GenIndex> gens;
  for (int i = 1; i <= d; ++i)
    for (int j = 0; j <= a.max_nwt; ++j) gens.push_back({i, j});
  return gens;
}

std::vector<FockState> homogeneous_monomials(int d, int max_wt, int max_nwt) {
  std::vector<FockState> out;
  for (int wt = 0; wt <= max_wt; ++wt)
    for (int nwt = 0; nwt <= max_nwt; ++nwt)
      for (const auto& m : enumerate_basis(d, nwt, wt)) out.emplace_back(m, Rational(1));
  return out;
}

void check_lower(const std::vector<long>& v, const char* what) {
  for (long x : v)
    if (x < -1) throw UsageError(std::string(what) + " must be >= -1");
}

int run_verify(const VerifyArgs& a, const Output& o, unsigned threads, std::uint64_t seed, std::ostream& out) {
  const ModuleSpec spec = a.spec.build();
  if (a.max_wt < 0 || a.max_nwt < 0 || a.max_a_wt < 0 || a.max_a_nwt < 0 || (a.j_max && *a.j_max < 0))
    throw UsageError("truncation bounds must be >= 0");
  const Truncation tr{a.max_wt, a.max_nwt, a.j_max.value_or(0)};
  const bool allow = a.j_max.has_value();

  json params = {{"spec", to_json(spec)}, {"max_wt", a.max_wt}, {"max_nwt", a.max_nwt}};
  if (a.j_max) params["j_max"] = *a.j_max;

  std::vector<std::function<CheckReport()>> jobs;
  if (a.identity == "e1") {
    const auto ns = values(a.n_range, a.n, {-1, 3});
    const auto ks = values(a.k_range, a.k, {-4, 4});
    check_lower(ns, "n");
    const auto gens = generators(a, spec.d());
    for (const auto& g : gens)
      for (long n : ns)
        for (long k : ks) jobs.push_back([=, &spec] { return check_l_mode_commutator(n, g, k, spec, tr, allow); });
    params["n"] = {ns.front(), ns.back()};
    params["k"] = {ks.front(), ks.back()};
  } else if (a.identity == "virasoro") {
    const auto ms = values(a.m_range, std::nullopt, {-1, 3});
    const auto ns = values(a.n_range, a.n, {-1, 3});
    check_lower(ms, "m");
    check_lower(ns, "n");
    for (long m : ms)
      for (long n : ns) jobs.push_back([=, &spec] { return check_virasoro(m, n, spec, tr, allow); });
    params["m"] = {ms.front(), ms.back()};
    params["n"] = {ns.front(), ns.back()};
  } else if (a.identity == "field-commutator") {
    const auto ns = values(a.n_range, a.n, {-1, 2});
    const auto ks = values(a.k_range, a.k, {-3, 3});
    check_lower(ns, "n");
    std::vector<FockState> as;
    if (!a.a_json.empty()) as.push_back(fock_state_from_json(parse_json_arg(a.a_json)));
    else as = homogeneous_monomials(spec.d(), a.max_a_wt, a.max_a_nwt);
    for (const auto& A : as)
      for (long n : ns)
        for (long k : ks) jobs.push_back([=, &spec] { return check_field_commutator(n, A, k, spec, tr, allow); });
    params["n"] = {ns.front(), ns.back()};
    params["k"] = {ks.front(), ks.back()};
    params["fields"] = as.size();
  } else if (a.identity == "strong-grading") {
    const auto ks = values(a.k_range, a.k, {-3, 3});
    std::vector<std::pair<FockState, long>> samples;
    for (const auto& v : homogeneous_monomials(spec.d(), a.max_a_wt, a.max_a_nwt))
      for (long k : ks) samples.emplace_back(v, k);
    if (a.samples > 0 && a.samples < samples.size()) {
      std::mt19937_64 rng(seed);
      std::shuffle(samples.begin(), samples.end(), rng);
      samples.resize(a.samples);
    }
    for (const auto& s : samples) jobs.push_back([=, &spec] { return check_strong_grading(spec, tr, {s}); });
    params["samples"] = samples.size();
    params["seed"] = seed;
  } else if (a.identity == "l0-grading") {
    jobs.push_back([&] { return check_l0_grading(spec, tr); });
  } else if (a.identity == "d-equals-lminus1") {
    if (spec.kind() != ModuleKind::Adjoint) throw UsageError("d-equals-lminus1 runs on the adjoint module only");
    jobs.push_back([&] { return check_d_equals_lminus1(spec, tr); });
  } else {
    throw UsageError("unknown identity '" + a.identity + "'");
  }

  const auto reports = parallel_map(jobs.size(), threads, [&](std::size_t i) { return jobs[i](); });
  CheckReport total;
  total.identity = a.identity;
  total.params = params;
  for (const auto& r : reports) total.merge(r);

  std::ostringstream s;
  if (o.format == "json") {
    s << to_json(total).dump(2) << "\n";
  } else if (o.format == "csv") {
    s << "identity,configs_checked,configs_skipped,states_checked,truncated,defect_zero,max_abs_defect\n"
      << total.identity << ',' << total.configs_checked << ',' << total.configs_skipped << ','
      << total.states_checked << ',' << (total.truncated ? "true" : "false") << ','
      << (total.defect_zero ? "true" : "false") << ',' << total.max_abs_defect << "\n";
  } else {
    s << total.identity << ": " << (total.defect_zero ? "PASS" : "FAIL") << "\n"
      << "  configs checked " << total.configs_checked << ", skipped " << total.configs_skipped
      << ", states " << total.states_checked << (total.truncated ? ", truncated" : "") << "\n";
    if (total.counterexample)
      s << "  counterexample input " << to_json(total.counterexample->input).dump() << "\n"
        << "  defect " << to_json(total.counterexample->defect).dump() << "\n"
        << "  config " << total.counterexample->config.dump() << "\n";
  }
  emit(o, s.str(), out);
  return total.defect_zero ? 0 : 1;
}

// ---- dims ----

int run_dims(int d, int max_p, int max_q, const Output& o, std::ostream& out) {
  if (d < 1 || max_p < 0 || max_q < 0) throw UsageError("need d >= 1 and max-p, max-q >= 0");
  const DimCrossCheck x = cross_check_dims(d, max_p, max_q);
  auto opt = [](const std::optional<BigCount>& c) { return c ? count_str(*c) : std::string(); };
  std::ostringstream s;
  if (o.format == "csv") {
    s << "# d=" << d << ",max_p=" << max_p << ",max_q=" << max_q << "\n"
      << "m,n,enum,dp,gf_product,gf_paper_ct,diff\n";
    for (const auto& r : x.rows)
      s << r.m << ',' << r.n << ',' << count_str(r.enumerated) << ',' << count_str(r.dp) << ','
        << count_str(r.product) << ',' << opt(r.constant_term) << ',' << opt(r.diff) << "\n";
  } else if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : x.rows)
      rows.push_back({{"m", r.m},
                      {"n", r.n},
                      {"enum", count_json(r.enumerated)},
                      {"dp", count_json(r.dp)},
                      {"gf_product", count_json(r.product)},
                      {"gf_paper_ct", r.constant_term ? count_json(*r.constant_term) : json(nullptr)},
                      {"diff", r.diff ? count_json(*r.diff) : json(nullptr)}});
    s << json{{"d", d}, {"max_p", max_p}, {"max_q", max_q}, {"consistent", x.consistent}, {"rows", rows}}.dump(2)
      << "\n";
  } else {
    s << "d=" << d << " max_p=" << max_p << " max_q=" << max_q << (x.consistent ? " consistent" : " INCONSISTENT")
      << "\n";
    const char* head[] = {"m", "n", "enum", "dp", "gf_product", "gf_paper_ct", "diff"};
    for (const char* h : head) s << std::setw(12) << h;
    s << "\n";
    for (const auto& r : x.rows) {
      s << std::setw(12) << r.m << std::setw(12) << r.n << std::setw(12) << count_str(r.enumerated) << std::setw(12)
        << count_str(r.dp) << std::setw(12) << count_str(r.product) << std::setw(12) << opt(r.constant_term)
        << std::setw(12) << opt(r.diff) << "\n";
    }
  }
  emit(o, s.str(), out);
  return x.consistent ? 0 : 1;
}

// ---- module ----

struct ModuleArgs {
  std::string action;
  SpecArgs spec;
  int max_wt = 4, max_nwt = 3;
  std::vector<std::string> tops;
  std::string problem;
};

int run_module(const ModuleArgs& a, const Output& o, std::ostream& out) {
  json result;
  std::string text;
  if (a.action == "casimir") {
    if (a.spec.lambda.empty()) throw UsageError("casimir needs --lambda");
    const Rational v = casimir_scalar(parse_vector(a.spec.lambda), Rational::parse(a.spec.c));
    result = to_json(v);
    text = v.str();
  } else if (a.action == "vacuum") {
    const ModuleSpec spec = a.spec.build();
    if (a.max_wt < 0 || a.max_nwt < 0) throw UsageError("truncation bounds must be >= 0");
    const VacuumSpace v = vacuum_space(spec, {a.max_wt, a.max_nwt, 0});
    json basis = json::array(), scanned = json::array();
    for (const auto& b : v.basis) basis.push_back(to_json(b));
    for (const auto& g : v.bigrades_scanned) scanned.push_back({g.wt, g.nwt});
    result = {{"dim", v.basis.size()}, {"basis", basis}, {"bigrades_scanned", scanned}};
    text = "vacuum space dimension " + std::to_string(v.basis.size());
  } else if (a.action == "logcheck") {
    ModuleSpec spec = a.spec.build();
    if (spec.kind() != ModuleKind::Evaluation) throw UsageError("logcheck needs an evaluation-type top (--H or --lambda)");
    const LogCheck r = is_genuine_logarithmic(spec);
    result = {{"genuine", r.genuine}, {"blocks", r.blocks}};
    std::ostringstream s;
    s << (r.genuine ? "genuine" : "not genuine") << ", L(0) eigenvalue " << r.eigenvalue << ", blocks";
    for (auto b : r.blocks) s << ' ' << b;
    text = s.str();
  } else if (a.action == "homdim") {
    std::optional<HomProblem> p;
    if (!a.problem.empty()) {
      const json j = parse_json_arg(a.problem);
      p = HomProblem{top_from_json(j.at("source")), top_from_json(j.at("middle")), top_from_json(j.at("target"))};
    } else if (a.tops.size() == 3) {
      p = HomProblem{parse_top(a.tops[0]), parse_top(a.tops[1]), parse_top(a.tops[2])};
    } else {
      throw UsageError("homdim needs --tops SRC MID TGT or --problem JSON");
    }
    const std::size_t dim = intertwiner_dim(*p);
    result = dim;
    text = std::to_string(dim);
  } else {
    throw UsageError("unknown action '" + a.action + "'");
  }
  emit(o, (o.format == "text" ? text : result.dump()) + "\n", out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for the vertex algebra of an abelian current algebra"};
  app.require_subcommand(1);
  Output o;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", o.path, "write output to this file");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for sampled sweeps");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "sweep an identity over basis states");
  verify->fallthrough();
  verify->add_option("identity", va.identity, "e1, virasoro, field-commutator, strong-grading, l0-grading, d-equals-lminus1")
      ->required();
  va.spec.add_to(verify);
  verify->add_option("--max-wt", va.max_wt, "largest weight above the top");
  verify->add_option("--max-nwt", va.max_nwt, "largest N-weight");
  verify->add_option("--j-max", va.j_max, "cut inexact L(-1) tails at this t-power and tag the report truncated");
  verify->add_option("--m-range", va.m_range, "a..b");
  verify->add_option("--n-range", va.n_range, "a..b");
  verify->add_option("--k-range", va.k_range, "a..b");
  verify->add_option("--n", va.n, "single n");
  verify->add_option("--k", va.k, "single k");
  verify->add_option("--gen", va.gen, "generator i,j (default: all with j <= max-nwt)");
  verify->add_option("--A", va.a_json, "field state as JSON (field-commutator)");
  verify->add_option("--max-a-wt", va.max_a_wt, "largest weight of swept fields");
  verify->add_option("--max-a-nwt", va.max_a_nwt, "largest N-weight of swept fields");
  verify->add_option("--samples", va.samples, "number of (v, j) samples, 0 for all (strong-grading)");

  int dd = 1, max_p = 10, max_q = 8;
  auto* dims = app.add_subcommand("dims", "bigraded dimension table with cross-checks");
  dims->fallthrough();
  dims->add_option("--d", dd, "number of colors");
  dims->add_option("--max-p", max_p, "largest weight n");
  dims->add_option("--max-q", max_q, "largest N-weight m");

  ModuleArgs ma;
  auto* module = app.add_subcommand("module", "representation-theoretic quantities");
  module->fallthrough();
  module->add_option("action", ma.action, "casimir, vacuum, logcheck, homdim")->required();
  ma.spec.add_to(module);
  module->add_option("--max-wt", ma.max_wt, "largest weight above the top (vacuum)");
  module->add_option("--max-nwt", ma.max_nwt, "largest N-weight (vacuum)");
  module->add_option("--tops", ma.tops, "source, middle, target as r<dim>:<blocks>@<lambda>")->expected(3);
  module->add_option("--problem", ma.problem, "hom problem as JSON or a path to it");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(va, o, threads, seed, out);
    if (*dims) return run_dims(dd, max_p, max_q, o, out);
    return run_module(ma, o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace qcva::cli
