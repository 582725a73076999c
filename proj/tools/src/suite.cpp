#include "schurhr_cli/suite.hpp"

#include "schurhr/bundle.hpp"
#include "schurhr/lorentzian.hpp"
#include "schurhr/polya.hpp"
#include "schurhr/positivity.hpp"
#include "schurhr/quadform.hpp"
#include "schurhr/random_instances.hpp"
#include "schurhr/schur.hpp"
#include "schurhr/sequences.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace schurhr::cli {

namespace {

struct Outcome {
  bool ok = true;
  Json record = Json::object();
};

Outcome outcome(bool ok, Json record) {
  record["ok"] = ok;
  return {ok, std::move(record)};
}

// Runs body(index, rng) for every instance, spread over the worker pool.
// Results are collected by index, so the report is independent of the
// number of workers.
template <class Body>
void run_instances(const SuiteOptions& options, CriterionResult& result, std::size_t count, Body body) {
  std::vector<Outcome> outcomes(count);
  const std::uint64_t master = instance_seed(options.seed, static_cast<std::uint64_t>(result.id));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const std::uint64_t seed = instance_seed(master, i);
      Rng rng(seed);
      try {
        outcomes[i] = body(i, rng);
      } catch (const std::exception& err) {
        outcomes[i] = outcome(false, {{"error", err.what()}});
      }
      Json rec{{"instance", i}, {"seed", seed}};
      rec.update(outcomes[i].record);
      outcomes[i].record = std::move(rec);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < n; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (auto& o : outcomes) {
    ++result.instances;
    if (!o.ok) ++result.violations;
    if (!o.ok || options.all_records) result.records.push_back(std::move(o.record));
  }
}

Rational open_unit_sample(Rng& rng, const Rational& hi, int max_den) {
  for (;;) {
    Rational t = random_rational(rng, 0, hi, max_den);
    if (t > 0 && t < hi) return t;
  }
}

// A degree-1 class with every coordinate in (0, 2].
CohClass random_ample_class(Rng& rng, const Space& space) {
  std::vector<Rational> c;
  for (std::size_t j = 0; j < space.factor_count(); ++j) c.push_back(open_unit_sample(rng, 3, 4));
  return CohClass::linear(space, c);
}

Partition random_partition_fitting(Rng& rng, int weight, int max_part) {
  return random_partition(rng, weight, std::max(weight, 1), std::max(max_part, weight == 0 ? 0 : 1));
}

// The rank-3 bundle O(1,0) + O(1,0) + O(0,1) on P^2 x P^3.
SplitBundle counterexample_bundle() { return SplitBundle(Space({2, 3}), {{1, 0}, {1, 0}, {0, 1}}); }

CohClass counterexample_class(const Rational& t) {
  const SplitBundle bundle = counterexample_bundle();
  return (1 - t) * chern(bundle, 3) + t * schur_class(Partition{1, 1, 1}, bundle);
}

std::vector<Rational> product_sequence(Rng& rng, int factors) {
  std::vector<Rational> seq{Rational(1)};
  for (int f = 0; f < factors; ++f) {
    const Rational t = open_unit_sample(rng, 5, 4);
    std::vector<Rational> next(seq.size() + 1);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      next[i] += seq[i];
      next[i + 1] += t * seq[i];
    }
    seq = std::move(next);
  }
  return seq;
}

Json sequence_json(std::span<const Rational> v) { return to_json(std::vector<Rational>(v.begin(), v.end())); }

} // namespace

Json CriterionResult::to_json() const {
  return {{"id", id},           {"name", name},   {"instances", instances}, {"violations", violations},
          {"ok", ok()},         {"notes", notes}, {"records", records}};
}

CriterionResult check_paper_example(const SuiteOptions& options) {
  CriterionResult r{1, "two-factor counterexample form"};
  const Space space({2, 3});
  const std::vector<Rational> fixed{Rational(1, 10), Rational(1, 4), Rational(1, 3)};
  run_instances(options, r, fixed.size() + 20, [&](std::size_t i, Rng& rng) {
    const Rational t = i < fixed.size() ? fixed[i] : open_unit_sample(rng, Rational(1, 2), 40);
    const Matrix got = intersection_form(counterexample_class(t), space);
    const Matrix want{{t, 2 * t}, {2 * t, 1 + 2 * t}};
    const Inertia s = inertia(got);
    const bool ok = got == want && s == Inertia{2, 0, 0};
    return outcome(ok, {{"t", to_string(t)}, {"lhs", got.to_string()}, {"rhs", want.to_string()},
                        {"inertia", s.to_string()}});
  });
  return r;
}

CriterionResult check_derived_table(const SuiteOptions& options) {
  CriterionResult r{2, "derived Schur closed forms"};
  std::vector<IdentityCheck> all;
  for (std::size_t e = 3; e <= 5; ++e)
    for (auto& c : derived_schur_table_check(e)) all.push_back(std::move(c));
  for (std::size_t e = 1; e <= 5; ++e)
    for (auto& c : derived_chern_check(e)) all.push_back(std::move(c));
  run_instances(options, r, all.size(), [&](std::size_t i, Rng&) { return outcome(all[i].ok, {{"identity", all[i].label}}); });
  return r;
}

CriterionResult check_schur_routes(const SuiteOptions& options) {
  CriterionResult r{3, "Jacobi-Trudi equals tableau expansion"};
  std::vector<std::pair<Partition, std::size_t>> cases;
  for (int w = 0; w <= 8; ++w)
    for (const auto& lambda : partitions_of(w))
      for (std::size_t e = 1; e <= 4; ++e) cases.emplace_back(lambda, e);
  run_instances(options, r, cases.size(), [&](std::size_t i, Rng&) {
    const auto& [lambda, e] = cases[i];
    const bool ok = schur_jt(lambda, e) == schur_ssyt(lambda, e);
    return outcome(ok, {{"lambda", to_json(lambda)}, {"e", e}});
  });
  return r;
}

CriterionResult check_dual_reversal(const SuiteOptions& options) {
  CriterionResult r{4, "dual partition reversal identity"};
  run_instances(options, r, 100, [](std::size_t, Rng& rng) {
    const int e = uniform_int(rng, 1, 4);
    const int n = uniform_int(rng, 1, 5);
    const Partition lambda = random_partition(rng, uniform_int(rng, 0, n * e), n, e);
    const bool ok = dual_reversal_check(lambda, static_cast<std::size_t>(e), n);
    return outcome(ok, {{"lambda", to_json(lambda)}, {"e", e}, {"N", n},
                        {"dual", to_json(dual_in_box(lambda, e, n))}});
  });
  return r;
}

CriterionResult check_twist_rule(const SuiteOptions& options) {
  CriterionResult r{5, "twist rule equals root expansion"};
  run_instances(options, r, 200, [](std::size_t, Rng& rng) {
    const Space space = random_space(rng, 1, 6, 3);
    const SplitBundle bundle = random_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 4)));
    const CohClass total = total_chern(bundle);
    bool ok = true;
    int bad = -1;
    for (int p = 0; p <= static_cast<int>(bundle.rank()) + 1 && ok; ++p) {
      const CohClass by_roots = p <= static_cast<int>(bundle.rank()) ? total.homogeneous_part(p) : CohClass(space);
      ok = by_roots == chern_by_twist_rule(bundle, p);
      if (!ok) bad = p;
    }
    return outcome(ok, {{"space", to_json(space)}, {"bundle", to_json(bundle)}, {"first_bad_p", bad}});
  });
  return r;
}

CriterionResult check_fl_positivity(const SuiteOptions& options) {
  CriterionResult r{6, "Fulton-Lazarsfeld positivity"};
  run_instances(options, r, 700, [](std::size_t i, Rng& rng) {
    const Space space = random_space(rng, 1, 6, 3);
    const int d = space.dimension();
    if (i < 500) {
      const SplitBundle bundle = random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 4)));
      const int order = uniform_int(rng, 0, 8 - d);
      const int bump = uniform_int(rng, 0, 9) == 0 ? 1 : 0;
      const Partition lambda = random_partition_fitting(rng, d + order, static_cast<int>(bundle.rank()) + bump);
      const Rational v = fl_positivity(bundle, lambda, order);
      return outcome(v >= 0, {{"kind", "single"}, {"space", to_json(space)}, {"bundle", to_json(bundle)},
                              {"lambda", to_json(lambda)}, {"i", order}, {"lhs", to_string(v)}, {"rhs", "0"}});
    }
    // Monomial variant: split d among up to three bundles.
    const int m = uniform_int(rng, 1, 3);
    std::vector<int> share(static_cast<std::size_t>(m), 0);
    for (int k = 0; k < d; ++k) ++share[static_cast<std::size_t>(uniform_int(rng, 0, m - 1))];
    std::vector<SplitBundle> bundles;
    std::vector<Partition> lambdas;
    std::vector<int> orders;
    Json parts = Json::array();
    for (int j = 0; j < m; ++j) {
      bundles.push_back(random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 3))));
      const int order = uniform_int(rng, 0, 2);
      lambdas.push_back(random_partition_fitting(rng, share[static_cast<std::size_t>(j)] + order,
                                                 static_cast<int>(bundles.back().rank())));
      orders.push_back(order);
      parts.push_back({{"bundle", to_json(bundles.back())}, {"lambda", to_json(lambdas.back())}, {"i", order}});
    }
    const Rational v = monomial_positivity(bundles, lambdas, orders);
    return outcome(v >= 0, {{"kind", "monomial"}, {"space", to_json(space)}, {"factors", parts},
                            {"lhs", to_string(v)}, {"rhs", "0"}});
  });
  r.notes = {{"single", 500}, {"monomial", 200}};
  return r;
}

CriterionResult check_hr_suite(const SuiteOptions& options) {
  CriterionResult r{7, "Hodge-Riemann property of Schur classes"};
  std::atomic<int> resamples{0};
  run_instances(options, r, 300, [&](std::size_t i, Rng& rng) {
    const Space space = random_space(rng, 2, 6, 3);
    const int d = space.dimension();
    if (i < 200) {
      const SplitBundle bundle = random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 4)));
      const Partition lambda = random_partition_fitting(rng, d - 2, static_cast<int>(bundle.rank()));
      const CohClass h = random_ample_class(rng, space);
      const auto h_coeffs = h.linear_coefficients();
      auto form_at = [&](const Rational& t) {
        std::vector<Rational> shift;
        for (const auto& c : h_coeffs) shift.push_back(t * c);
        return intersection_form(schur_class(lambda, bundle.twisted(shift)), space);
      };
      Rational t = open_unit_sample(rng, 1, 12);
      if (t == 0) t = 1;
      Inertia s = inertia(form_at(t));
      bool resampled = false;
      if (!is_hr(s)) {
        // Finitely many exceptional t are allowed; draw once more.
        resampled = true;
        ++resamples;
        t = open_unit_sample(rng, 1, 97);
        s = inertia(form_at(t));
      }
      const Inertia at_zero = inertia(form_at(0));
      const bool ok = is_hr(s) && is_weak_hr(at_zero);
      return outcome(ok, {{"kind", "twisted"}, {"space", to_json(space)}, {"bundle", to_json(bundle)},
                          {"lambda", to_json(lambda)}, {"h", to_json(h.linear_coefficients())}, {"t", to_string(t)},
                          {"inertia", s.to_string()}, {"inertia_t0", at_zero.to_string()}, {"resampled", resampled}});
    }
    // Products of Schur classes of several nef bundles.
    const int m = uniform_int(rng, 1, 3);
    std::vector<int> share(static_cast<std::size_t>(m), 0);
    for (int k = 0; k < d - 2; ++k) ++share[static_cast<std::size_t>(uniform_int(rng, 0, m - 1))];
    CohClass omega = CohClass::unit(space);
    Json parts = Json::array();
    for (int j = 0; j < m; ++j) {
      const SplitBundle bundle = random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 3)));
      const Partition lambda = random_partition_fitting(rng, share[static_cast<std::size_t>(j)], static_cast<int>(bundle.rank()));
      omega = omega * schur_class(lambda, bundle);
      parts.push_back({{"bundle", to_json(bundle)}, {"lambda", to_json(lambda)}});
    }
    const Inertia s = inertia(intersection_form(omega, space));
    return outcome(is_weak_hr(s), {{"kind", "monomial"}, {"space", to_json(space)}, {"factors", parts},
                                   {"inertia", s.to_string()}});
  });
  r.notes = {{"twisted", 200}, {"monomial", 100}, {"resamples", resamples.load()}};
  return r;
}

CriterionResult check_kt_suite(const SuiteOptions& options) {
  CriterionResult r{8, "log-concavity of KT and value sequences"};
  const std::size_t kt = 200, derived = 1000, pair = 1000;
  std::vector<std::pair<std::size_t, Rational>> newton_points;
  run_instances(options, r, kt + derived + pair + 100, [&](std::size_t i, Rng& rng) {
    auto point = [&rng](std::size_t n) {
      auto v = random_rational_vector(rng, n, 0, 10, 6);
      for (auto& x : v)
        if (uniform_int(rng, 0, 7) == 0) x = 0;
      return v;
    };
    if (i < kt) {
      const Space space = random_space(rng, 1, 5, 3);
      const int d = space.dimension();
      const SplitBundle e_bundle = random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 3)));
      const SplitBundle f_bundle = random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 3)));
      int l = 0, m = 0;
      do {
        l = uniform_int(rng, 0, std::min(6, d + 1));
        m = uniform_int(rng, 0, std::min(6, d + 1));
      } while (l + m < d);
      const Partition lambda = random_partition_fitting(rng, l, static_cast<int>(e_bundle.rank()));
      const Partition mu = random_partition_fitting(rng, m, static_cast<int>(f_bundle.rank()));
      const Sequence s = kt_sequence(e_bundle, f_bundle, lambda, mu);
      return outcome(is_log_concave(s), {{"kind", "kt"}, {"space", to_json(space)}, {"E", to_json(e_bundle)},
                                         {"F", to_json(f_bundle)}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)},
                                         {"sequence", to_json(s)}});
    }
    if (i < kt + derived) {
      const auto e = static_cast<std::size_t>(uniform_int(rng, 1, 4));
      const Partition lambda = random_partition_fitting(rng, uniform_int(rng, 1, 6), static_cast<int>(e));
      const auto x = point(e);
      const Sequence s = derived_value_sequence(lambda, x);
      return outcome(is_log_concave(s), {{"kind", "derived"}, {"lambda", to_json(lambda)}, {"x", to_json(x)},
                                         {"sequence", to_json(s)}});
    }
    if (i < kt + derived + pair) {
      const auto e = static_cast<std::size_t>(uniform_int(rng, 1, 3));
      const auto f = static_cast<std::size_t>(uniform_int(rng, 1, 3));
      const Partition lambda = random_partition_fitting(rng, uniform_int(rng, 0, 4), static_cast<int>(e));
      const Partition mu = random_partition_fitting(rng, uniform_int(rng, 0, 4), static_cast<int>(f));
      const int d = uniform_int(rng, 0, lambda.weight() + mu.weight());
      const auto x = point(e);
      const auto y = point(f);
      const Sequence s = pair_value_sequence(lambda, mu, d, x, y);
      return outcome(is_log_concave(s), {{"kind", "pair"}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)},
                                         {"d", d}, {"x", to_json(x)}, {"y", to_json(y)}, {"sequence", to_json(s)}});
    }
    // i -> c_{e-i}(x): Newton's inequalities.
    const int e = 1 + static_cast<int>((i - kt - derived - pair) % 5);
    const auto x = point(static_cast<std::size_t>(e));
    const Sequence s = derived_value_sequence(Partition{e}, x);
    return outcome(is_ultra_log_concave(s.values),
                   {{"kind", "newton"}, {"e", e}, {"x", to_json(x)}, {"sequence", to_json(s)}});
  });
  r.notes = {{"kt", kt}, {"derived", derived}, {"pair", pair}, {"newton", 100}};
  return r;
}

CriterionResult check_hodge_suite(const SuiteOptions& options) {
  CriterionResult r{9, "Hodge index and the improved inequality"};
  run_instances(options, r, 600, [](std::size_t i, Rng& rng) {
    if (i < 300) {
      const Space space = random_space(rng, 2, 6, 3);
      const SplitBundle bundle = random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 4)));
      const Partition lambda = random_partition_fitting(rng, space.dimension() - 2, static_cast<int>(bundle.rank()));
      const CohClass omega = schur_class(lambda, bundle);
      const CohClass a = random_degree1_class(rng, space, -3, 3);
      const CohClass b = random_degree1_class(rng, space, 0, 2);
      const InequalityReport rep = hodge_index_check(omega, a, b, space);
      return outcome(rep.ok && rep.precondition,
                     {{"kind", "hodge-index"}, {"space", to_json(space)}, {"bundle", to_json(bundle)},
                      {"lambda", to_json(lambda)}, {"alpha", to_json(a.linear_coefficients())},
                      {"beta", to_json(b.linear_coefficients())}, {"lhs", to_string(rep.lhs)},
                      {"rhs", to_string(rep.rhs)}, {"note", rep.note}});
    }
    const Space space = random_space(rng, 3, 6, 3);
    const SplitBundle bundle = random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 4)));
    const Partition lambda = random_partition_fitting(rng, space.dimension() - 1, static_cast<int>(bundle.rank()));
    const CohClass h = random_nef_class(rng, space);
    const CohClass a = random_degree1_class(rng, space, -3, 3);
    const InequalityReport rep = schur_hodge_improved_check(bundle, h, lambda, a);
    return outcome(rep.ok && rep.precondition,
                   {{"kind", "improved"}, {"space", to_json(space)}, {"bundle", to_json(bundle)},
                    {"lambda", to_json(lambda)}, {"h", to_json(h.linear_coefficients())},
                    {"alpha", to_json(a.linear_coefficients())}, {"lhs", to_string(rep.lhs)},
                    {"rhs", to_string(rep.rhs)}, {"note", rep.note}});
  });
  r.notes = {{"hodge_index", 300}, {"improved", 300}};
  return r;
}

namespace {

// 200 sequences of length <= 6: binomial rows, products of (1 + t z), and
// sequences built to fail.
std::vector<Rational> polya_corpus_entry(std::size_t i, Rng& rng) {
  if (i < 6) {
    std::vector<Rational> row;
    for (long k = 0; k <= static_cast<long>(i); ++k) row.emplace_back(binomial(static_cast<long>(i), k));
    return row;
  }
  static const std::vector<std::vector<int>> fixed{{1, 1, 1}, {1, 0, 1}, {1, 4, 5},    {5, 4, 1},    {2, 5, 4},
                                                   {1, 2, 2}, {0, 1, 0, 1}, {1, 3, 3, 2}, {1, 1, 1, 1}, {1, 0, 0, 1}};
  if (i < 16) {
    const auto& f = fixed[i - 6];
    return std::vector<Rational>(f.begin(), f.end());
  }
  if (i < 90) return product_sequence(rng, uniform_int(rng, 1, 5));
  if (i < 150) {
    std::vector<Rational> v(static_cast<std::size_t>(uniform_int(rng, 2, 6)));
    for (auto& x : v) x = uniform_int(rng, 0, 9);
    return v;
  }
  // A real-rooted sequence with one interior coefficient pulled down.
  auto v = product_sequence(rng, uniform_int(rng, 2, 5));
  const auto k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(v.size()) - 2));
  v[k] *= random_rational(rng, Rational(1, 10), Rational(3, 4), 8);
  return v;
}

} // namespace

CriterionResult check_polya_suite(const SuiteOptions& options) {
  CriterionResult r{10, "Polya frequency sequences and combinations"};
  const std::size_t corpus = 200, combos = 100;
  const std::vector<Rational> bad_t{Rational(1, 10), Rational(1, 4), Rational(2, 5)};
  std::atomic<int> pf_count{0};
  run_instances(options, r, corpus + combos + bad_t.size(), [&](std::size_t i, Rng& rng) {
    if (i < corpus) {
      const auto mu = polya_corpus_entry(i, rng);
      const bool minors = polya_check_minors(mu);
      const bool roots = polya_check_roots(mu);
      if (roots) ++pf_count;
      return outcome(minors == roots,
                     {{"kind", "corpus"}, {"mu", sequence_json(mu)}, {"minors", minors}, {"roots", roots}});
    }
    if (i < corpus + combos) {
      const Space space = random_space(rng, 4, 6, 3);
      const int d = space.dimension();
      const SplitBundle bundle = random_nef_bundle(rng, space, static_cast<std::size_t>(uniform_int(rng, 1, 4)));
      const Partition lambda = random_partition_fitting(rng, d - 2, static_cast<int>(bundle.rank()));
      const CohClass h = random_nef_class(rng, space);
      auto mu = product_sequence(rng, uniform_int(rng, 0, d - 2));
      mu.resize(static_cast<std::size_t>(d - 1));
      const Inertia s = inertia(intersection_form(polya_combination_class(lambda, bundle, h, mu), space));
      return outcome(is_weak_hr(s) && polya_check_roots(mu),
                     {{"kind", "combination"}, {"space", to_json(space)}, {"bundle", to_json(bundle)},
                      {"lambda", to_json(lambda)}, {"h", to_json(h.linear_coefficients())}, {"mu", sequence_json(mu)},
                      {"inertia", s.to_string()}});
    }
    const Rational t = bad_t[i - corpus - combos];
    const Inertia s = inertia(intersection_form(counterexample_class(t), Space({2, 3})));
    return outcome(!is_weak_hr(s), {{"kind", "non-pf-example"}, {"t", to_string(t)}, {"inertia", s.to_string()}});
  });
  r.notes = {{"corpus", corpus}, {"corpus_pf", pf_count.load()}, {"combinations", combos}, {"non_pf_t", bad_t.size()}};
  return r;
}

CriterionResult check_lorentzian_suite(const SuiteOptions& options) {
  CriterionResult r{11, "Lorentzian certification and the Hessian bridge"};
  std::vector<std::pair<Partition, std::size_t>> schur_cases;
  for (int w = 0; w <= 6; ++w)
    for (const auto& lambda : partitions_of(w))
      for (std::size_t e = 1; e <= 3; ++e)
        if (static_cast<std::size_t>(lambda.largest()) <= e) schur_cases.emplace_back(lambda, e);
  const std::size_t bridges = 100;
  run_instances(options, r, schur_cases.size() + bridges, [&](std::size_t i, Rng& rng) {
    if (i < schur_cases.size()) {
      const auto& [lambda, e] = schur_cases[i];
      const LorentzianReport rep =
          lorentzian_check(normalize(schur_jt(lambda, e)), {LorentzianMode::perturbed, Rational(1, 100), true});
      Json rec{{"kind", "perturbed"}, {"lambda", to_json(lambda)}, {"e", e}, {"epsilon", to_string(rep.epsilon)}};
      if (rep.failing_alpha) rec["failing_alpha"] = *rep.failing_alpha;
      return outcome(rep.ok, std::move(rec));
    }
    const auto e = uniform_int(rng, 1, 3);
    if (i % 2 == 0) {
      // Lemma bridge on a random homogeneous polynomial.
      const int d = uniform_int(rng, 2, 6);
      Polynomial p(static_cast<std::size_t>(e));
      for (const auto& mono : compositions_of(d, static_cast<std::size_t>(e)))
        if (uniform_int(rng, 0, 2) != 0) p.add_term(mono, random_rational(rng, -5, 5, 4));
      if (p.is_zero()) p.add_term(compositions_of(d, static_cast<std::size_t>(e)).front(), 1);
      const int box = p.max_variable_degree() + uniform_int(rng, 0, 2);
      std::vector<Exponents> alphas;
      for (auto& a : compositions_of(d - 2, static_cast<std::size_t>(e)))
        if (std::all_of(a.begin(), a.end(), [box](int x) { return x <= box; })) alphas.push_back(a);
      const Exponents alpha = alphas[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(alphas.size()) - 1))];
      const BridgeReport rep = lemma_bridge_check(p, box, alpha);
      return outcome(rep.ok, {{"kind", "lemma"}, {"p", to_json(p)}, {"box", box}, {"alpha", alpha},
                              {"lhs", rep.hessian.to_string()}, {"rhs", rep.other.to_string()}});
    }
    const int n = uniform_int(rng, std::max(e, 2), 4);
    Partition lambda;
    do {
      lambda = random_partition(rng, uniform_int(rng, 2, n * e), n, e);
    } while (lambda.weight() < 2);
    std::vector<Exponents> alphas;
    for (auto& a : compositions_of(lambda.weight() - 2, static_cast<std::size_t>(e)))
      if (std::all_of(a.begin(), a.end(), [n](int x) { return x <= n; })) alphas.push_back(a);
    const Exponents alpha = alphas[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(alphas.size()) - 1))];
    const Rational eps = uniform_int(rng, 0, 4) == 0 ? Rational(0) : random_rational(rng, 0, Rational(1, 2), 100);
    const BridgeReport rep = hessian_vs_intersection(lambda, e, n, alpha, eps);
    return outcome(rep.ok, {{"kind", "intersection"}, {"lambda", to_json(lambda)}, {"e", e}, {"N", n},
                            {"alpha", alpha}, {"epsilon", to_string(eps)}, {"lhs", rep.hessian.to_string()},
                            {"rhs", rep.other.to_string()}});
  });
  r.notes = {{"schur_polynomials", schur_cases.size()}, {"bridge_instances", bridges}};
  return r;
}

const std::vector<NamedCriterion>& criteria() {
  static const std::vector<NamedCriterion> list{
      {1, "paper-example", check_paper_example},   {2, "derived-table", check_derived_table},
      {3, "schur-routes", check_schur_routes},     {4, "dual-reversal", check_dual_reversal},
      {5, "twist-rule", check_twist_rule},         {6, "fl-positivity", check_fl_positivity},
      {7, "hr", check_hr_suite},                   {8, "log-concavity", check_kt_suite},
      {9, "hodge", check_hodge_suite},             {10, "polya", check_polya_suite},
      {11, "lorentzian", check_lorentzian_suite},
  };
  return list;
}

Json run_verify(const SuiteOptions& options, bool paper_only) {
  Json out{{"seed", options.seed}, {"criteria", Json::array()}};
  std::size_t violations = 0;
  for (const auto& c : criteria()) {
    if (paper_only && c.id > 2) continue;
    CriterionResult res = c.run(options);
    violations += res.violations;
    out["criteria"].push_back(res.to_json());
  }
  out["violations"] = violations;
  out["ok"] = violations == 0;
  return out;
}

} // namespace schurhr::cli
