// Copyright 2026 The twzeta Authors
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


#include "report/pipeline.hpp"

#include <cstdint>
#include <cstdio>
#include <future>

#include "exact/errors.hpp"
#include "models/oracles.hpp"
#include "positivity/positivity.hpp"
#include "spectral/spectral.hpp"
#include "zeta/zeta.hpp"

namespace twz {

using nlohmann::json;

namespace {

constexpr std::size_t kTracePrefix = 16;
constexpr unsigned kBruteForceExtBound = 12;

std::string approx(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json poly_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_json(c));
  return a;
}

json rf_json(const RationalFunction& f) {
  return {{"numerator", poly_json(f.numerator())}, {"denominator", poly_json(f.denominator())}};
}

json interval_json(const ModulusInterval& m) {
  return {{"lo", rational_json(m.lo)}, {"hi", rational_json(m.hi)}, {"approx", approx(m.lo.get_d())}};
}

json opt_json(const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); }

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

json radius_json(const TruncatedSeries& s) {
  std::size_t window = std::max<std::size_t>(4, s.order() / 4);
  if (s.order() < 2 * window) return nullptr;
  RadiusEstimate r = radius_estimate(s, window);
  if (r.unbounded) return "unbounded";
  return approx(r.radius);
}

}  // namespace

std::string canonical_dump(const json& j) { return j.dump(); }

void stamp(json& j) {
  j.erase("run_hash");
  j["tool_version"] = kToolVersion;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical_dump(j))));
  j["run_hash"] = buf;
}

std::string Report::canonical() const { return canonical_dump(body); }

Report run_pipeline(const ModelConfig& cfg, const RunOptions& opts) {
  if (opts.tol <= 0) throw PreconditionError("tolerance must be positive");
  Report rep;
  json& j = rep.body;
  j["config"] = config_to_json(cfg);
  j["tol"] = rational_json(opts.tol);

  GradedAction a = build_action(cfg);
  json pieces = json::array();
  for (const auto& p : a.pieces) pieces.push_back({{"degree", p.degree}, {"weight", p.weight}, {"size", p.size()}});
  j["model"] = {{"q", integer_json(a.q)},
                {"proper", a.proper},
                {"dim", a.dim},
                {"pieces", pieces},
                {"betti", {{"odd", a.betti(true)}, {"even", a.betti(false)}}}};
  json flags = json::array();
  if (auto t = torus_model(cfg); t && t->m.det() != 1)
    flags.push_back("f acts on H^2_c by sign(det M) = " + std::to_string(sgn(t->m.det())) +
                    " and on H^4_c by |det M| = " + Integer(abs(t->m.det())).get_str());

  // Zeta three ways.
  std::size_t n = opts.terms ? *opts.terms : (cfg.terms ? *cfg.terms : default_terms(a));
  ZetaResult z = zeta(a, n);
  j["terms"] = n;
  json prefix = json::array();
  for (std::size_t i = 0; i < std::min(kTracePrefix, z.traces.size()); ++i) prefix.push_back(rational_json(z.traces[i]));
  j["trace_prefix"] = prefix;
  j["zeta"] = {{"reconstructed", rf_json(z.reconstructed)},
               {"product_form", rf_json(z.product_form)},
               {"agreement", z.agreement},
               {"odd_betti", z.odd_betti},
               {"even_betti", z.even_betti},
               {"cancelled_factor", poly_json(z.cancelled)},
               {"odd_degree_drop", z.odd_degree_drop},
               {"even_degree_drop", z.even_degree_drop}};
  if (!z.agreement) rep.contradictions.push_back("series reconstruction and product formula disagree");

  // Positivity of log Z.
  TruncatedSeries g = series_log(z.series);
  std::optional<std::size_t> violation = nonneg_check(g);
  bool positivity_ok = !violation;
  json pos = {{"verdict", positivity_ok ? "holds" : "fails"},
              {"first_violation", violation ? json(*violation) : json(nullptr)},
              {"radius_log_zeta", radius_json(g)},
              {"radius_zeta", radius_json(z.series)}};
  if (positivity_ok) {
    auto d = derivative_domination_check(g);
    pos["derivative_domination"] = d ? "fails" : "holds";
    if (d) rep.contradictions.push_back("derivative domination fails at n = " + std::to_string(*d));
  } else {
    pos["derivative_domination"] = "not-applicable";
  }
  j["positivity"] = pos;

  SpectralReport s = spectral_report(a, opts.tol);
  j["spectral"] = {{"lambda_even", interval_json(s.lambda_even)},
                   {"lambda_odd", interval_json(s.lambda_odd)},
                   {"k_even", opt_json(s.k_even)},
                   {"k_odd", opt_json(s.k_odd)},
                   {"ineq1", verdict_name(s.ineq1)},
                   {"ineq2", verdict_name(s.ineq2)},
                   {"equality_certified", s.equality_certified},
                   {"final_tol", rational_json(s.final_tol)}};
  if (a.proper && s.ineq1 == Verdict::fails) rep.contradictions.push_back("ineq1 fails on a proper model");

  DiscLemmaResult d = disc_lemma_check(z, positivity_ok, opts.tol);
  j["disc_lemma"] = {
      {"verdict", verdict_name(d.verdict)},
      {"numerator_min", d.numerator_min ? interval_json(*d.numerator_min) : json(nullptr)},
      {"denominator_min", d.denominator_min ? interval_json(*d.denominator_min) : json(nullptr)},
      {"contradiction", d.contradiction}};
  if (d.contradiction) rep.contradictions.push_back("disc lemma fails although positivity holds");

  json wv = json::array();
  for (const auto& v : weight_bound_check(a, opts.tol))
    wv.push_back({{"degree", v.degree}, {"weight", v.weight}, {"kind", v.kind}, {"detail", v.detail}});
  j["weight_bound_violations"] = wv;

  json n0 = nullptr;
  if (auto t = torus_model(cfg))
    n0 = {{"value", opt_json(n0_estimate(*t, opts.n0_max))}, {"max_m", opts.n0_max}};
  else if (auto ab = abelian_model(cfg))
    n0 = {{"value", opt_json(n0_estimate(*ab, opts.n0_max))}, {"max_m", opts.n0_max}};
  j["n0"] = n0;
  j["flags"] = flags;
  j["contradictions"] = rep.contradictions;
  stamp(j);

  std::string csv = "n,trace,abs_zeta_coeff\n";
  for (std::size_t i = 1; i <= n; ++i)
    csv += std::to_string(i) + "," + to_string(z.traces[i - 1]) + "," + to_string(Rational(abs(z.series[i]))) + "\n";
  rep.csv = std::move(csv);
  return rep;
}

std::vector<Report> scan_iterates(const ModelConfig& cfg, unsigned r_max, const RunOptions& opts) {
  if (r_max < 1) throw PreconditionError("r_max must be >= 1");
  std::vector<std::future<Report>> jobs;
  for (unsigned r = 1; r <= r_max; ++r) {
    ModelConfig c = cfg;
    c.iterate = r;
    jobs.push_back(std::async(std::launch::async, [c, opts] { return run_pipeline(c, opts); }));
  }
  std::vector<Report> out;
  for (auto& f : jobs) out.push_back(f.get());
  return out;
}

json oracle_table(const ModelConfig& cfg, unsigned max_twist) {
  if (max_twist < 1) throw PreconditionError("max_twist must be >= 1");
  GradedAction a = build_action(cfg);
  auto t = torus_model(cfg);
  auto ab = abelian_model(cfg);
  json rows = json::array();
  for (unsigned n = 1; n <= max_twist; ++n) {
    json row = {{"n", n}, {"trace", rational_json(twisted_trace(a, n))}};
    if (t) {
      row["fixed_count_formula"] = integer_json(torus_fixed_count_formula(*t, n));
      try {
        row["fixed_count_bruteforce"] = integer_json(torus_fixed_count_bruteforce(*t, n, kBruteForceExtBound));
      } catch (const Error& e) {
        if (e.code() != Errc::insufficient_extension && e.code() != Errc::precondition) throw;
        row["fixed_count_bruteforce"] = nullptr;
        row["bruteforce_note"] = e.what();
      }
    } else if (ab) {
      row["fixed_count_formula"] = integer_json(abelian_fixed_count(*ab, n));
    }
    rows.push_back(row);
  }
  json j = {{"config", config_to_json(cfg)}, {"twists", rows}};
  if (t)
    j["n0"] = opt_json(n0_estimate(*t, max_twist));
  else if (ab)
    j["n0"] = opt_json(n0_estimate(*ab, max_twist));
  else
    j["n0"] = nullptr;
  stamp(j);
  return j;
}

json bell_table(unsigned n) {
  json polys = json::array();
  unsigned k = 1;
  for (const auto& p : bell_polynomials(n)) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", integer_json(c)}});
    polys.push_back({{"n", k},
                     {"text", p.to_string()},
                     {"terms", terms},
                     {"value_at_ones", rational_json(p.evaluate(std::vector<Rational>(k, 1)))}});
    ++k;
  }
  json j = {{"n", n}, {"polynomials", polys}};
  stamp(j);
  return j;
}

}  // namespace twz
