#include "schurhr_cli/cli.hpp"

#include "schurhr_cli/config.hpp"
#include "schurhr_cli/suite.hpp"

#include "schurhr/bundle.hpp"
#include "schurhr/lorentzian.hpp"
#include "schurhr/polya.hpp"
#include "schurhr/quadform.hpp"
#include "schurhr/schur.hpp"
#include "schurhr/sequences.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

namespace schurhr::cli {

namespace {

struct Report {
  Json body = Json::object();
  bool violation = false;
  // Set by commands whose output flattens to CSV.
  std::vector<Sequence> sequences;
  // Plain rendering for --format text.
  std::optional<std::string> text;
};

struct Common {
  std::string config_path;
  std::string output_path;
  std::string format;
  std::string space;
};

RunConfig prepare(const Common& common) {
  RunConfig config = common.config_path.empty() ? RunConfig{} : load_config(common.config_path);
  if (!common.space.empty()) config.space = Space(parse_ints_arg(common.space, "--space"));
  return config;
}

const Space& need_space(const RunConfig& config) {
  if (!config.space) throw ConfigError("space", "no space given (use --space or a config file)");
  return *config.space;
}

std::vector<Rational> resolve_h(const std::string& flag, const RunConfig& config) {
  const Space& space = need_space(config);
  std::vector<Rational> h;
  if (!flag.empty())
    h = parse_rationals_arg(flag, "--hclass");
  else if (config.h)
    h = *config.h;
  else
    h.assign(space.factor_count(), Rational(1));
  if (h.size() != space.factor_count())
    throw ConfigError("--hclass", "expected " + std::to_string(space.factor_count()) + " coordinates");
  return h;
}

bool all_nonnegative(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q >= 0; });
}

Json class_json(const CohClass& u) {
  Json j = to_json(u);
  j["text"] = u.to_string();
  return j;
}

// --- subcommands ---------------------------------------------------------

struct SchurArgs {
  std::string lambda;
  int vars = 0;
  std::optional<int> order;
  std::string basis = "x";
};

Report cmd_schur(const SchurArgs& a, const RunConfig& config) {
  const Partition lambda = parse_partition_arg(a.lambda, config, "--lambda");
  const auto e = static_cast<std::size_t>(a.vars);
  Polynomial p = a.order ? derived_schur(lambda, *a.order, e) : schur_jt(lambda, e);
  std::vector<std::string> names = variable_names("x", e);
  if (a.basis == "c") {
    p = a.order ? to_elementary_basis(p) : schur_elementary_form(lambda, e);
    names = variable_names("c", e);
  }
  Report r;
  r.text = p.to_string(names);
  r.body = {{"command", "schur"}, {"lambda", to_json(lambda)}, {"e", e}};
  if (a.order) r.body["order"] = *a.order;
  r.body["basis"] = a.basis;
  r.body["polynomial"] = *r.text;
  r.body["terms"] = to_json(p);
  return r;
}

struct ChernArgs {
  std::string bundle;
  std::optional<int> p;
};

Report cmd_chern(const ChernArgs& a, const RunConfig& config) {
  const SplitBundle bundle = resolve_bundle(a.bundle, config, "--bundle");
  Report r;
  r.body = {{"command", "chern"}, {"bundle", to_json(bundle)}, {"classes", Json::array()}};
  const int lo = a.p ? *a.p : 0;
  const int hi = a.p ? *a.p : static_cast<int>(bundle.rank());
  std::string text;
  for (int p = lo; p <= hi; ++p) {
    const CohClass c = chern(bundle, p);
    r.body["classes"].push_back({{"p", p}, {"class", class_json(c)}});
    text += (p > lo ? "\n" : "") + std::string("c") + std::to_string(p) + " = " + c.to_string();
  }
  r.text = text;
  return r;
}

struct ClassArgs {
  std::string bundle;
  std::string lambda;
  int order = 0;
};

Report cmd_class(const ClassArgs& a, const RunConfig& config) {
  const SplitBundle bundle = resolve_bundle(a.bundle, config, "--bundle");
  const Partition lambda = parse_partition_arg(a.lambda, config, "--lambda");
  const CohClass u = derived_schur_class(lambda, a.order, bundle);
  Report r;
  r.text = u.to_string();
  r.body = {{"command", "class"}, {"bundle", to_json(bundle)}, {"lambda", to_json(lambda)}, {"order", a.order},
            {"class", class_json(u)}};
  if (u.degree() == bundle.space().dimension()) r.body["integral"] = to_json(integrate(u));
  return r;
}

struct FormArgs {
  std::string bundle;
  std::string lambda;
  std::string t;
};

Json form_json(const Matrix& m) {
  const Inertia s = inertia(m);
  return {{"matrix", to_json(m)}, {"inertia", to_json(s)}, {"hr", is_hr(s)}, {"weak_hr", is_weak_hr(s)}};
}

Report cmd_form(const FormArgs& a, const RunConfig& config) {
  const Space& space = need_space(config);
  Report r;
  r.body = {{"command", "form"}, {"space", to_json(space)}};
  CohClass omega(space);
  if (!a.lambda.empty() || !a.bundle.empty()) {
    if (a.lambda.empty() || a.bundle.empty()) throw ConfigError("form", "--bundle and --lambda go together");
    const SplitBundle bundle = resolve_bundle(a.bundle, config, "--bundle");
    const Partition lambda = parse_partition_arg(a.lambda, config, "--lambda");
    omega = schur_class(lambda, bundle);
    r.body["lambda"] = to_json(lambda);
  } else {
    if (config.omega.empty()) throw ConfigError("omega", "no class given (config \"omega\" or --bundle/--lambda)");
    const Rational t = !a.t.empty() ? parse_rational_arg(a.t, "--t") : config.t.value_or(Rational(0));
    omega = assemble_omega(config, t);
    r.body["t"] = to_json(t);
  }
  r.body["omega"] = class_json(omega);
  r.body.update(form_json(intersection_form(omega, space)));
  return r;
}

struct ScanArgs {
  std::string bundle;
  std::string lambda;
  std::string h;
  std::string t_values;
  int steps = 10;
};

Report cmd_hr_scan(const ScanArgs& a, const RunConfig& config) {
  const Space& space = need_space(config);
  const SplitBundle bundle = resolve_bundle(a.bundle, config, "--bundle");
  const Partition lambda = parse_partition_arg(a.lambda, config, "--lambda");
  const std::vector<Rational> h = resolve_h(a.h, config);
  if (lambda.weight() != space.dimension() - 2)
    throw ConfigError("--lambda", "need |lambda| = dim X - 2 = " + std::to_string(space.dimension() - 2));

  std::vector<Rational> ts;
  if (!a.t_values.empty()) {
    ts = parse_rationals_arg(a.t_values, "--t-values");
  } else {
    if (a.steps < 1) throw ConfigError("--steps", "must be positive");
    for (int k = 0; k <= a.steps; ++k) ts.push_back(Rational(k) / a.steps);
  }
  const bool nef_setup = is_nef(bundle) && all_nonnegative(h);
  const bool ample_h = std::all_of(h.begin(), h.end(), [](const Rational& q) { return q > 0; });

  Report r;
  r.body = {{"command", "hr-scan"}, {"bundle", to_json(bundle)}, {"lambda", to_json(lambda)}, {"h", to_json(h)},
            {"nef", nef_setup}, {"scan", Json::array()}};
  Json exceptional = Json::array();
  for (const auto& t : ts) {
    std::vector<Rational> shift;
    for (const auto& c : h) shift.push_back(t * c);
    Json row{{"t", to_json(t)}};
    row.update(form_json(intersection_form(schur_class(lambda, bundle.twisted(shift)), space)));
    if (nef_setup && t >= 0 && !row["weak_hr"].get<bool>()) r.violation = true;
    if (nef_setup && ample_h && t > 0 && !row["hr"].get<bool>()) exceptional.push_back(to_json(t));
    r.body["scan"].push_back(std::move(row));
  }
  // Finitely many t > 0 may fail strict HR; they are listed, not flagged.
  r.body["exceptional_t"] = exceptional;
  r.body["ok"] = !r.violation;
  return r;
}

struct KtArgs {
  std::string e_bundle, f_bundle, lambda, mu;
};

Report cmd_kt(const KtArgs& a, const RunConfig& config) {
  const SplitBundle e_bundle = resolve_bundle(a.e_bundle, config, "--E");
  const SplitBundle f_bundle = resolve_bundle(a.f_bundle, config, "--F");
  const Partition lambda = parse_partition_arg(a.lambda, config, "--lambda");
  const Partition mu = parse_partition_arg(a.mu, config, "--mu");
  const Sequence s = kt_sequence(e_bundle, f_bundle, lambda, mu);
  std::string why;
  const bool lc = is_log_concave(s, &why);
  const bool nef = is_nef(e_bundle) && is_nef(f_bundle);
  Report r;
  r.body = {{"command", "kt"}, {"E", to_json(e_bundle)}, {"F", to_json(f_bundle)}, {"lambda", to_json(lambda)},
            {"mu", to_json(mu)}, {"nef", nef}, {"sequence", to_json(s)}, {"log_concave", lc}};
  if (!lc) r.body["diagnostic"] = why;
  r.violation = nef && !lc;
  r.sequences.push_back(s);
  return r;
}

struct SeqArgs {
  std::string lambda, x, mu, y;
  std::optional<int> d;
};

Report cmd_seq(const SeqArgs& a, const RunConfig& config) {
  const Partition lambda = parse_partition_arg(a.lambda, config, "--lambda");
  const auto x = parse_rationals_arg(a.x, "--x");
  Report r;
  Sequence s;
  bool nonneg = all_nonnegative(x);
  r.body = {{"command", "seq"}, {"lambda", to_json(lambda)}, {"x", to_json(x)}};
  if (a.mu.empty()) {
    s = derived_value_sequence(lambda, x);
  } else {
    if (!a.d) throw ConfigError("--d", "required together with --mu");
    const Partition mu = parse_partition_arg(a.mu, config, "--mu");
    const auto y = parse_rationals_arg(a.y, "--y");
    nonneg = nonneg && all_nonnegative(y);
    s = pair_value_sequence(lambda, mu, *a.d, x, y);
    r.body["mu"] = to_json(mu);
    r.body["y"] = to_json(y);
    r.body["d"] = *a.d;
  }
  const bool lc = is_log_concave(s);
  r.body["sequence"] = to_json(s);
  r.body["log_concave"] = lc;
  r.violation = nonneg && !lc;
  r.sequences.push_back(s);
  return r;
}

struct PolyaArgs {
  std::string mu;
  int rows = 0;
  std::string bundle, lambda, h;
};

Report cmd_polya(const PolyaArgs& a, const RunConfig& config) {
  const auto mu = parse_rationals_arg(a.mu, "--mu");
  if (mu.empty()) throw ConfigError("--mu", "empty sequence");
  if (!all_nonnegative(mu)) throw ConfigError("--mu", "entries must be nonnegative");
  Report r;
  const bool roots = polya_check_roots(mu);
  r.body = {{"command", "polya"}, {"mu", to_json(mu)}, {"roots_test", roots}};
  bool pf = roots;
  if (mu.size() <= kPolyaMinorLengthCap) {
    const bool minors = polya_check_minors(mu, a.rows);
    r.body["minors_test"] = minors;
    r.body["rows"] = a.rows > 0 ? a.rows : polya_default_rows(mu.size());
    r.body["agree"] = minors == roots;
    if (minors != roots) r.violation = true;
  }
  r.body["pf"] = pf;
  if (!a.bundle.empty() || !a.lambda.empty()) {
    const Space& space = need_space(config);
    const SplitBundle bundle = resolve_bundle(a.bundle, config, "--bundle");
    const Partition lambda = parse_partition_arg(a.lambda, config, "--lambda");
    const auto h = resolve_h(a.h, config);
    const CohClass h_class = CohClass::linear(space, h);
    const CohClass omega = polya_combination_class(lambda, bundle, h_class, mu);
    Json comb{{"lambda", to_json(lambda)}, {"bundle", to_json(bundle)}, {"h", to_json(h)}, {"omega", class_json(omega)}};
    comb.update(form_json(intersection_form(omega, space)));
    if (pf && is_nef(bundle) && all_nonnegative(h) && !comb["weak_hr"].get<bool>()) r.violation = true;
    r.body["combination"] = std::move(comb);
  }
  r.body["ok"] = !r.violation;
  return r;
}

struct LorentzianArgs {
  std::string lambda;
  int vars = 0;
  std::string mode = "perturbed";
  std::string epsilon = "1/100";
  bool no_retry = false;
};

Report cmd_lorentzian(const LorentzianArgs& a, const RunConfig& config) {
  const Partition lambda = parse_partition_arg(a.lambda, config, "--lambda");
  LorentzianOptions opts;
  opts.mode = a.mode == "strict" ? LorentzianMode::strict : LorentzianMode::perturbed;
  opts.epsilon = parse_rational_arg(a.epsilon, "--epsilon");
  opts.retry = !a.no_retry;
  const Polynomial s = schur_jt(lambda, static_cast<std::size_t>(a.vars));
  if (s.is_zero()) throw ConfigError("--lambda", "s_lambda vanishes in this many variables");
  const LorentzianReport rep = lorentzian_check(normalize(s), opts);
  Report r;
  r.body = {{"command", "lorentzian"}, {"lambda", to_json(lambda)}, {"e", a.vars}, {"mode", a.mode},
            {"ok", rep.ok},          {"positive_coefficients", rep.positive_coefficients},
            {"hessians_checked", rep.hessians_checked}};
  if (opts.mode == LorentzianMode::perturbed) r.body["epsilon"] = to_json(rep.epsilon);
  if (rep.failing_alpha) {
    r.body["failing_alpha"] = *rep.failing_alpha;
    r.body["failing_inertia"] = to_json(rep.failing_inertia);
  }
  // Strict failures are expected when coefficients vanish; only the
  // perturbed certificate is backed by the theorem.
  r.violation = opts.mode == LorentzianMode::perturbed && !rep.ok;
  return r;
}

struct BridgeArgs {
  std::string lambda;
  int vars = 0;
  bool lemma = false;
  int box = 0;
  int n = 0;
  std::string alpha;
  std::string epsilon = "0";
};

Report cmd_bridge(const BridgeArgs& a, const RunConfig& config) {
  const Partition lambda = parse_partition_arg(a.lambda, config, "--lambda");
  const Exponents alpha = parse_ints_arg(a.alpha, "--alpha");
  Report r;
  BridgeReport rep;
  if (a.lemma) {
    rep = lemma_bridge_check(schur_jt(lambda, static_cast<std::size_t>(a.vars)), a.box, alpha);
    r.body = {{"command", "bridge"}, {"kind", "lemma"}, {"lambda", to_json(lambda)}, {"e", a.vars},
              {"box", a.box}, {"alpha", alpha}};
  } else {
    const Rational eps = parse_rational_arg(a.epsilon, "--epsilon");
    rep = hessian_vs_intersection(lambda, a.vars, a.n, alpha, eps);
    r.body = {{"command", "bridge"}, {"kind", "intersection"}, {"lambda", to_json(lambda)}, {"e", a.vars},
              {"N", a.n}, {"alpha", alpha}, {"epsilon", to_json(eps)}};
  }
  r.body["hessian"] = to_json(rep.hessian);
  r.body["other"] = to_json(rep.other);
  r.body["ok"] = rep.ok;
  r.violation = !rep.ok;
  return r;
}

struct VerifyArgs {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  bool paper_only = false;
  bool all_records = false;
};

template <class T>
std::optional<T> env_number(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0' || v[0] == '-') throw ConfigError(name, std::string("expected a nonnegative integer, got \"") + v + "\"");
  return static_cast<T>(x);
}

Report cmd_verify(const VerifyArgs& a, const RunConfig& config) {
  SuiteOptions opts;
  if (a.seed)
    opts.seed = *a.seed;
  else if (auto s = env_number<std::uint64_t>("SCHURHR_SEED"))
    opts.seed = *s;
  else if (config.seed)
    opts.seed = *config.seed;
  if (a.workers)
    opts.workers = *a.workers;
  else if (auto w = env_number<unsigned>("SCHURHR_WORKERS"))
    opts.workers = *w;
  else if (config.workers)
    opts.workers = *config.workers;
  else
    opts.workers = std::max(1u, std::thread::hardware_concurrency());
  if (opts.workers == 0) throw ConfigError("workers", "must be positive");
  opts.all_records = a.all_records;
  Report r;
  r.body = run_verify(opts, a.paper_only);
  r.violation = !r.body["ok"].get<bool>();
  return r;
}

// --- output --------------------------------------------------------------

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.body.dump(2) << '\n';
  } else if (format == "text") {
    if (!r.text) throw ConfigError("--format", "text output is available for schur, chern and class only");
    out << *r.text << '\n';
  } else {
    if (r.sequences.empty()) throw ConfigError("--format", "csv output is available for sequence reports only");
    out << "label,index,value\n";
    for (const auto& s : r.sequences)
      for (std::size_t k = 0; k < s.values.size(); ++k)
        out << s.label << ',' << s.start + static_cast<int>(k) << ',' << to_string(s.values[k]) << '\n';
  }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for Schur classes, Hodge-Riemann forms and log-concavity", "schurhr"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--config", common.config_path, "JSON run configuration");
  app.add_option("--output", common.output_path, "Write the report to this file");
  app.add_option("--format", common.format, "json (default), csv for sequences, text for expressions")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--space", common.space, "Projective factor dimensions, e.g. 2,3");

  std::function<Report(const RunConfig&)> action;

  SchurArgs schur_args;
  auto* schur = app.add_subcommand("schur", "Schur or derived Schur polynomial");
  schur->add_option("--lambda", schur_args.lambda, "Partition, e.g. 2,1")->required();
  schur->add_option("--vars", schur_args.vars, "Number of variables e")->required()->check(CLI::PositiveNumber);
  schur->add_option("--order", schur_args.order, "Derivative order i")->check(CLI::NonNegativeNumber);
  schur->add_option("--basis", schur_args.basis, "x (monomials) or c (elementary classes)")
      ->check(CLI::IsMember({"x", "c"}));
  schur->callback([&] { action = [&](const RunConfig& c) { return cmd_schur(schur_args, c); }; });

  ChernArgs chern_args;
  auto* chern_cmd = app.add_subcommand("chern", "Chern classes of a split bundle");
  chern_cmd->add_option("--bundle", chern_args.bundle, "Config name or inline lines \"1,0;0,1\"")->required();
  chern_cmd->add_option("--p", chern_args.p, "Only c_p");
  chern_cmd->callback([&] { action = [&](const RunConfig& c) { return cmd_chern(chern_args, c); }; });

  ClassArgs class_args;
  auto* class_cmd = app.add_subcommand("class", "Derived Schur class s_lambda^(i)(E)");
  class_cmd->add_option("--bundle", class_args.bundle)->required();
  class_cmd->add_option("--lambda", class_args.lambda)->required();
  class_cmd->add_option("--order", class_args.order)->check(CLI::NonNegativeNumber);
  class_cmd->callback([&] { action = [&](const RunConfig& c) { return cmd_class(class_args, c); }; });

  FormArgs form_args;
  auto* form = app.add_subcommand("form", "Intersection form, inertia and HR verdict");
  form->add_option("--bundle", form_args.bundle);
  form->add_option("--lambda", form_args.lambda);
  form->add_option("--t", form_args.t, "Value of t in the configured omega");
  form->callback([&] { action = [&](const RunConfig& c) { return cmd_form(form_args, c); }; });

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("hr-scan", "HR verdicts of s_lambda(E<th>) over a range of t");
  scan->add_option("--bundle", scan_args.bundle)->required();
  scan->add_option("--lambda", scan_args.lambda)->required();
  scan->add_option("--hclass", scan_args.h, "Twist direction (default: config h or all ones)");
  scan->add_option("--t-values", scan_args.t_values, "Explicit t list, e.g. 0,1/4,1");
  scan->add_option("--steps", scan_args.steps, "Use t = k/steps, k = 0..steps");
  scan->callback([&] { action = [&](const RunConfig& c) { return cmd_hr_scan(scan_args, c); }; });

  KtArgs kt_args;
  auto* kt = app.add_subcommand("kt", "Generalized Khovanskii-Teissier sequence");
  kt->add_option("--E", kt_args.e_bundle)->required();
  kt->add_option("--F", kt_args.f_bundle)->required();
  kt->add_option("--lambda", kt_args.lambda)->required();
  kt->add_option("--mu", kt_args.mu)->required();
  kt->callback([&] { action = [&](const RunConfig& c) { return cmd_kt(kt_args, c); }; });

  SeqArgs seq_args;
  auto* seq = app.add_subcommand("seq", "Derived Schur value sequences at a point");
  seq->add_option("--lambda", seq_args.lambda)->required();
  seq->add_option("--x", seq_args.x, "Point, e.g. 1,2,1/2")->required();
  seq->add_option("--mu", seq_args.mu);
  seq->add_option("--y", seq_args.y);
  seq->add_option("--d", seq_args.d);
  seq->callback([&] { action = [&](const RunConfig& c) { return cmd_seq(seq_args, c); }; });

  PolyaArgs polya_args;
  auto* polya = app.add_subcommand("polya", "Polya frequency tests and combination classes");
  polya->add_option("--mu", polya_args.mu, "Sequence, e.g. 1,3,3,1")->required();
  polya->add_option("--rows", polya_args.rows, "Row bound for the minor test (default: automatic)");
  polya->add_option("--bundle", polya_args.bundle);
  polya->add_option("--lambda", polya_args.lambda);
  polya->add_option("--hclass", polya_args.h);
  polya->callback([&] { action = [&](const RunConfig& c) { return cmd_polya(polya_args, c); }; });

  LorentzianArgs lor_args;
  auto* lor = app.add_subcommand("lorentzian", "Lorentzian certification of N(s_lambda)");
  lor->add_option("--lambda", lor_args.lambda)->required();
  lor->add_option("--vars", lor_args.vars)->required()->check(CLI::PositiveNumber);
  lor->add_option("--mode", lor_args.mode)->check(CLI::IsMember({"strict", "perturbed"}));
  lor->add_option("--epsilon", lor_args.epsilon);
  lor->add_flag("--no-retry", lor_args.no_retry);
  lor->callback([&] { action = [&](const RunConfig& c) { return cmd_lorentzian(lor_args, c); }; });

  BridgeArgs bridge_args;
  auto* bridge = app.add_subcommand("bridge", "Hessian identities linking Lorentzian and HR checks");
  bridge->add_option("--lambda", bridge_args.lambda)->required();
  bridge->add_option("--vars", bridge_args.vars)->required()->check(CLI::PositiveNumber);
  bridge->add_option("--alpha", bridge_args.alpha, "Exponent vector, e.g. 1,0")->required();
  bridge->add_flag("--lemma", bridge_args.lemma, "Check the polynomial identity on s_lambda itself");
  bridge->add_option("--box", bridge_args.box);
  bridge->add_option("--n", bridge_args.n, "Box height N");
  bridge->add_option("--epsilon", bridge_args.epsilon);
  bridge->callback([&] { action = [&](const RunConfig& c) { return cmd_bridge(bridge_args, c); }; });

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--seed", verify_args.seed, "Master seed (env SCHURHR_SEED)");
  verify->add_option("--workers", verify_args.workers, "Worker threads (env SCHURHR_WORKERS)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--paper-examples", verify_args.paper_only, "Only the hard-coded reproductions");
  verify->add_flag("--all-records", verify_args.all_records, "Keep passing records too");
  verify->callback([&] { action = [&](const RunConfig& c) { return cmd_verify(verify_args, c); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const RunConfig config = prepare(common);
    const Report report = action(config);
    std::string format = !common.format.empty() ? common.format : config.format.value_or("json");
    const std::string path = !common.output_path.empty() ? common.output_path : config.output_path.value_or("");
    if (path.empty()) {
      emit(report, format, out);
    } else {
      std::ofstream file(path);
      if (!file) throw ConfigError("--output", "cannot write " + path);
      emit(report, format, file);
    }
    return report.violation ? kExitViolation : kExitOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

} // namespace schurhr::cli
