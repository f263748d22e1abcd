#include "hardy/tools/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <tuple>

#include "hardy/blocks.hpp"
#include "hardy/bridge.hpp"
#include "hardy/charformulas.hpp"
#include "hardy/error.hpp"
#include "hardy/json_io.hpp"

namespace hardy::tools {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
  for (const auto& [key, _] : j.items())
    if (!allowed.contains(key)) throw InvalidInput(std::string("unknown key '") + key + "' in " + what);
}

template <class T>
T get_as(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad value for '") + key + "': " + e.what());
  }
}

double exponent_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return kInf;
  if (!j.is_number()) throw InvalidInput("exponent must be a number or \"inf\"");
  return j.get<double>();
}

json exponent_to_json(double x) { return x == kInf ? json("inf") : json(x); }

std::mt19937_64 member_rng(std::uint64_t seed, std::size_t suite, std::size_t regime,
                           std::size_t member) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(regime),
                    static_cast<std::uint32_t>(member)};
  return std::mt19937_64(seq);
}

class Draw {
 public:
  Draw(std::mt19937_64& rng, double exponent, double zero_rate)
      : rng_(rng), exponent_(exponent), zero_rate_(zero_rate) {}

  Window weights(std::size_t n, double zero_rate) {
    std::uniform_real_distribution<double> e(-exponent_, exponent_);
    std::bernoulli_distribution zero(zero_rate);
    std::vector<double> v(n);
    for (double& x : v) x = zero(rng_) ? 0.0 : std::exp2(e(rng_));
    return Window(0, std::move(v));
  }
  Window weights(std::size_t n) { return weights(n, zero_rate_); }

  RationalWindow rationals(std::size_t n) {
    std::uniform_int_distribution<int> num(0, 9), den(1, 6);
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(num(rng_), den(rng_));
    return RationalWindow(0, std::move(v));
  }

  std::uint64_t seed() { return rng_(); }
  Index index(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng_); }

 private:
  std::mt19937_64& rng_;
  double exponent_;
  double zero_rate_;
};

bool is_nan(double x) { return std::isnan(x); }

InstanceOutcome eval_chain(const json& in) {
  const double p = in.at("p").get<double>(), q = exponent_from_json(in.at("q"));
  const Window u = window_from_json(in.at("u")), v = window_from_json(in.at("v")),
               w = window_from_json(in.at("w")), a = window_from_json(in.at("a"));
  const auto family = parse_chain_family(in.at("family").get<std::string>());
  const auto cfg = oracle_config_from_json(in.at("oracle"));
  const auto rep = chain_equivalence_sweep(u, v, w, p, q, cfg, family);
  const auto elm = elementary_chain_check(a, p, in.at("n").get<Index>());
  const bool elm_ok = elm.sup <= elm.sum && elm.sum <= elm.power_sum;
  json d{{"a1", rep.a1.value()},         {"a2", rep.a2.value()},
         {"a3", rep.a3.value()},         {"ordered", rep.ordered},
         {"ratio31", exponent_to_json(rep.ratio31)},
         {"pool_size", rep.pool_size},
         {"elementary", {{"sup", elm.sup}, {"sum", elm.sum}, {"power_sum", elm.power_sum}}}};
  return {rep.ordered && rep.ratio31 < kInf && elm_ok, d};
}

InstanceOutcome eval_bridge(const json& in) {
  const auto form = in.at("form").get<std::string>() == "gop" ? BridgeForm::Gop : BridgeForm::Antigop;
  const double p = in.at("p").get<double>(), q = in.at("q").get<double>();
  const auto r = bridge_check(rational_window_from_json(in.at("u")), rational_window_from_json(in.at("v")),
                              rational_window_from_json(in.at("w")), rational_window_from_json(in.at("a")),
                              p, q, form);
  json d{{"discrete_lhs", r.discrete_lhs},
         {"continuous_lhs", r.continuous_lhs},
         {"discrete_rhs", r.discrete_rhs},
         {"continuous_rhs", r.continuous_rhs},
         {"exact", r.exact}};
  bool ok;
  if (r.exact) {
    const bool rhs_eq = *r.discrete_rhs_pow == *r.continuous_rhs_pow;
    ok = rhs_eq && (form == BridgeForm::Gop ? *r.discrete_lhs_pow == *r.continuous_lhs_pow
                                            : *r.continuous_lhs_pow <= *r.discrete_lhs_pow);
  } else {
    const double tol = 1e-12;
    ok = std::abs(r.discrete_rhs - r.continuous_rhs) <= tol * r.discrete_rhs &&
         (form == BridgeForm::Gop ? std::abs(r.discrete_lhs - r.continuous_lhs) <= tol * r.discrete_lhs
                                  : r.continuous_lhs <= r.discrete_lhs * (1 + tol));
  }
  return {ok, d};
}

InstanceOutcome eval_partition(const json& in) {
  const Window w = window_from_json(in.at("w"));
  const auto bp = block_partition(w, in.at("n0").get<Index>());
  const auto rep = verify_partition_invariants(w, bp);
  json ns = json::array();
  for (auto b : bp.ns) ns.push_back(b.is_infinite() ? json("inf") : json(b.value()));
  json failed = json::array();
  for (const auto& c : rep.checks)
    if (!c.ok) failed.push_back({{"check", c.name}, {"k", c.k}});
  return {rep.ok(),
          {{"ns", ns},
           {"K", bp.K},
           {"kset", bp.kset},
           {"status", to_string(rep.status)},
           {"failed_checks", failed},
           {"predecessor_bound_failures", rep.predecessor_bound_failures}}};
}

InstanceOutcome eval_sup_exactness(const json& in) {
  const double p = in.at("p").get<double>();
  const Window u = window_from_json(in.at("u")), v = window_from_json(in.at("v"));
  const RatioProblem pr(u, v, constant_window(u.start(), u.size(), 1.0), p, kInf, forms::ag1);
  const double exact = char_linft_exact(u, v, p).value();
  const double spike = spike_oracle(pr).constant.value();
  const double brute = brute_force_constant(pr, oracle_config_from_json(in.at("oracle"))).constant.value();
  const bool ok = relative_difference(spike, exact) <= 1e-9 && relative_difference(brute, exact) <= 1e-6;
  return {ok, {{"exact", exponent_to_json(exact)}, {"spike", exponent_to_json(spike)},
               {"brute_force", exponent_to_json(brute)}}};
}

json ratio_json(const EquivalenceRatio& e) {
  return {{"F", ext_to_json(e.formula)},
          {"B", ext_to_json(e.oracle)},
          {"ratio", exponent_to_json(e.ratio)},
          {"sentinel", e.sentinel}};
}

InstanceOutcome eval_equivalence(const json& in) {
  const double p = in.at("p").get<double>(), q = in.at("q").get<double>();
  const Window u = window_from_json(in.at("u")), v = window_from_json(in.at("v")),
               w = window_from_json(in.at("w"));
  const std::string form = in.at("form").get<std::string>();
  const RatioProblem pr(u, v, w, p, q, parse_form(form));
  const auto B = brute_force_constant(pr, oracle_config_from_json(in.at("oracle"))).constant;
  json d;
  bool ok = true;
  if (form == "gop") {
    const auto e = make_equivalence_ratio(char_gop(u, v, w, p, q).value, B);
    d["as-printed"] = ratio_json(e);
    ok = !is_nan(e.ratio);
  } else {
    for (auto var : {AntigopVariant::AsPrinted, AntigopVariant::RangeFlipped}) {
      const auto e = make_equivalence_ratio(char_antigop(u, v, w, p, q, var).value, B);
      d[to_string(var)] = ratio_json(e);
      ok = ok && !is_nan(e.ratio);
    }
  }
  return {ok, d};
}

double quantile_sorted(const std::vector<double>& x, double t) {
  const double pos = t * static_cast<double>(x.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, x.size() - 1);
  return x[lo] + (pos - static_cast<double>(lo)) * (x[hi] - x[lo]);
}

json summarize(std::vector<double> x, std::size_t sentinels) {
  json s{{"count", x.size()}, {"sentinels", sentinels}};
  if (x.empty()) return s;
  std::sort(x.begin(), x.end());
  s["min"] = exponent_to_json(x.front());
  s["median"] = exponent_to_json(quantile_sorted(x, 0.5));
  s["max"] = exponent_to_json(x.back());
  return s;
}

std::vector<json> generate(const SweepSpec& spec) {
  std::vector<json> out;
  const json cfg_base = oracle_config_to_json(spec.oracle);
  auto with_seed = [&](std::uint64_t s) {
    json c = cfg_base;
    c["seed"] = s;
    return c;
  };
  for (std::size_t s = 0; s < kSuites.size(); ++s) {
    const std::string& suite = kSuites[s];
    if (std::find(spec.suites.begin(), spec.suites.end(), suite) == spec.suites.end()) continue;
    const bool per_regime = suite == "chain" || suite == "lemma-3.5-exactness" || suite == "equivalence-ratio";
    std::set<double> seen_p;
    for (std::size_t r = 0; r < (per_regime ? spec.regimes.size() : 1); ++r) {
      const auto [p, q] = spec.regimes[r];
      if ((suite == "chain" || suite == "lemma-3.5-exactness") && p > 1.0) continue;
      if (suite == "lemma-3.5-exactness" && !seen_p.insert(p).second) continue;
      for (std::size_t m = 0; m < spec.ensemble; ++m) {
        auto rng = member_rng(spec.seed, s, r, m);
        Draw draw(rng, spec.weight_exponent, spec.zero_rate);
        const std::size_t N = spec.window_sizes[m % spec.window_sizes.size()];
        json in{{"suite", suite}, {"member", m}};
        if (suite == "chain") {
          static const char* fam[] = {"simple", "antigop", "gop"};
          in.update({{"family", fam[m % 3]}, {"p", p}, {"q", exponent_to_json(q)},
                     {"u", window_to_json(draw.weights(N))}, {"v", window_to_json(draw.weights(N))},
                     {"w", window_to_json(draw.weights(N))},
                     {"a", window_to_json(draw.weights(N, 0.2))}, {"n", draw.index(0, static_cast<Index>(N) - 1)},
                     {"oracle", with_seed(draw.seed())}});
        } else if (suite == "bridge") {
          in.update({{"form", m % 2 ? "antigop" : "gop"}, {"p", 1}, {"q", 1 + m % 3},
                     {"u", rational_window_to_json(draw.rationals(N))},
                     {"v", rational_window_to_json(draw.rationals(N))},
                     {"w", rational_window_to_json(draw.rationals(N))},
                     {"a", rational_window_to_json(draw.rationals(N))}});
        } else if (suite == "partition") {
          in.update({{"w", window_to_json(draw.weights(N))}, {"n0", 0}});
        } else if (suite == "lemma-3.5-exactness") {
          in.update({{"p", p}, {"u", window_to_json(draw.weights(N))},
                     {"v", window_to_json(draw.weights(N))}, {"oracle", with_seed(draw.seed())}});
        } else {
          const json u = window_to_json(draw.weights(N)), v = window_to_json(draw.weights(N)),
                     w = window_to_json(draw.weights(N));
          const json cfg = with_seed(draw.seed());
          for (const char* form : {"gop", "antigop"}) {
            json e = in;
            e.update({{"form", form}, {"p", p}, {"q", q}, {"u", u}, {"v", v}, {"w", w}, {"oracle", cfg}});
            out.push_back(std::move(e));
          }
          continue;
        }
        out.push_back(std::move(in));
      }
    }
  }
  return out;
}

json aggregate(const std::vector<json>& instances, const std::vector<InstanceOutcome>& results) {
  json suites = json::object();
  std::map<std::tuple<std::string, std::string, double, double>, std::pair<std::vector<double>, std::size_t>>
      ratios;
  std::map<std::tuple<std::string, double, double>, std::vector<double>> chain_ratios;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const json& in = instances[i];
    const std::string suite = in.at("suite").get<std::string>();
    json& s = suites[suite];
    if (s.is_null()) s = {{"instances", 0}, {"failures", 0}};
    s["instances"] = s["instances"].get<std::size_t>() + 1;
    if (!results[i].ok) s["failures"] = s["failures"].get<std::size_t>() + 1;
    if (suite == "equivalence-ratio") {
      for (const auto& [variant, e] : results[i].detail.items()) {
        auto& slot = ratios[{in.at("form").get<std::string>(), variant, in.at("p").get<double>(),
                             in.at("q").get<double>()}];
        if (e.at("sentinel").get<bool>())
          ++slot.second;
        else
          slot.first.push_back(exponent_from_json(e.at("ratio")));
      }
    } else if (suite == "chain") {
      chain_ratios[{in.at("family").get<std::string>(), in.at("p").get<double>(),
                    exponent_from_json(in.at("q"))}]
          .push_back(exponent_from_json(results[i].detail.at("ratio31")));
    }
  }
  json stats = json::array();
  for (const auto& [key, val] : ratios) {
    const auto& [form, variant, p, q] = key;
    json row{{"form", form}, {"variant", variant}, {"p", p}, {"q", q},
             {"regime", to_string(classify_regime(p, q).case_id)}};
    row.update(summarize(val.first, val.second));
    stats.push_back(row);
  }
  json chain = json::array();
  for (const auto& [key, val] : chain_ratios) {
    const auto& [family, p, q] = key;
    json row{{"family", family}, {"p", p}, {"q", exponent_to_json(q)}};
    row.update(summarize(val, 0));
    chain.push_back(row);
  }
  return {{"suites", suites}, {"ratio_statistics", stats}, {"chain_ratio_statistics", chain}};
}

std::vector<InstanceOutcome> evaluate_all(const std::vector<json>& instances, std::size_t threads) {
  std::vector<InstanceOutcome> results(instances.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < instances.size(); i += stride) results[i] = evaluate_instance(instances[i]);
  };
  const std::size_t T = std::max<std::size_t>(1, std::min(threads, instances.size()));
  if (T == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < T; ++t) pool.emplace_back(work, t, T);
  }
  return results;
}

}  // namespace

OracleConfig SweepSpec::default_oracle() {
  OracleConfig cfg;
  cfg.restarts = 8;
  cfg.iterations = 150;
  cfg.random_candidates = 16;
  return cfg;
}

json oracle_config_to_json(const OracleConfig& c) {
  return {{"restarts", c.restarts},          {"iterations", c.iterations},
          {"initial_step", c.initial_step},  {"step_decay", c.step_decay},
          {"min_step", c.min_step},          {"seed", c.seed},
          {"families", c.families},          {"random_candidates", c.random_candidates}};
}

OracleConfig oracle_config_from_json(const json& j, OracleConfig c) {
  if (!j.is_object()) throw InvalidInput("oracle config must be an object");
  reject_unknown_keys(j, {"restarts", "iterations", "initial_step", "step_decay", "min_step", "seed",
                          "families", "random_candidates", "threads"},
                      "oracle config");
  c.restarts = get_as(j, "restarts", c.restarts);
  c.iterations = get_as(j, "iterations", c.iterations);
  c.initial_step = get_as(j, "initial_step", c.initial_step);
  c.step_decay = get_as(j, "step_decay", c.step_decay);
  c.min_step = get_as(j, "min_step", c.min_step);
  c.seed = get_as(j, "seed", c.seed);
  c.families = get_as(j, "families", c.families);
  c.random_candidates = get_as(j, "random_candidates", c.random_candidates);
  c.threads = get_as(j, "threads", c.threads);
  try {
    c.validate();
  } catch (const InvalidParameter& e) {
    throw InvalidInput(std::string("oracle config: ") + e.what());
  }
  return c;
}

SweepSpec parse_sweep_spec(const json& j) {
  if (!j.is_object()) throw InvalidInput("sweep spec must be a JSON object");
  reject_unknown_keys(j, {"schema_version", "suites", "regimes", "window_sizes", "ensemble",
                          "weight_exponent", "zero_rate", "seed", "out", "threads", "oracle", "replay"},
                      "sweep spec");
  if (get_as(j, "schema_version", kSchemaVersion) != kSchemaVersion)
    throw InvalidInput("unsupported schema_version");
  SweepSpec s;
  s.suites = get_as(j, "suites", s.suites);
  for (const auto& name : s.suites)
    if (std::find(kSuites.begin(), kSuites.end(), name) == kSuites.end())
      throw InvalidInput("unknown suite '" + name + "'");
  if (j.contains("regimes")) {
    if (!j["regimes"].is_array()) throw InvalidInput("'regimes' must be an array");
    s.regimes.clear();
    for (const auto& r : j["regimes"]) {
      if (!r.is_object() || !r.contains("p") || !r.contains("q"))
        throw InvalidInput("each regime needs p and q");
      ExponentPair e{get_as(r, "p", 0.0), get_as(r, "q", 0.0)};
      try {
        classify_regime(e.p, e.q);
      } catch (const InvalidParameter& err) {
        throw InvalidInput(std::string("regime: ") + err.what());
      }
      s.regimes.push_back(e);
    }
  }
  if (s.regimes.empty()) throw InvalidInput("regime list is empty");
  s.window_sizes = get_as(j, "window_sizes", s.window_sizes);
  if (s.window_sizes.empty() ||
      std::any_of(s.window_sizes.begin(), s.window_sizes.end(), [](std::size_t n) { return n == 0; }))
    throw InvalidInput("window sizes must be a nonempty list of positive integers");
  s.ensemble = get_as(j, "ensemble", s.ensemble);
  if (s.ensemble == 0) throw InvalidInput("ensemble must be positive");
  s.weight_exponent = get_as(j, "weight_exponent", s.weight_exponent);
  if (!(s.weight_exponent >= 0.0) || s.weight_exponent > 500) throw InvalidInput("bad weight_exponent");
  s.zero_rate = get_as(j, "zero_rate", s.zero_rate);
  if (!(s.zero_rate >= 0.0 && s.zero_rate < 1.0)) throw InvalidInput("zero_rate must lie in [0, 1)");
  s.seed = get_as(j, "seed", s.seed);
  if (j.contains("out")) s.out = get_as<std::string>(j, "out", "");
  s.threads = std::max<std::size_t>(1, get_as(j, "threads", s.threads));
  if (j.contains("oracle")) s.oracle = oracle_config_from_json(j["oracle"], s.oracle);
  if (j.contains("replay")) {
    const json& r = j["replay"];
    if (!r.is_array()) throw InvalidInput("'replay' must be an array of instances");
    for (const auto& in : r) {
      if (!in.is_object() || !in.contains("suite")) throw InvalidInput("replay entries need a suite");
      s.replay.push_back(in);
    }
  }
  return s;
}

json to_json(const SweepSpec& s) {
  json regimes = json::array();
  for (auto [p, q] : s.regimes) regimes.push_back({{"p", p}, {"q", q}});
  json j{{"schema_version", kSchemaVersion},
         {"suites", s.suites},
         {"regimes", regimes},
         {"window_sizes", s.window_sizes},
         {"ensemble", s.ensemble},
         {"weight_exponent", s.weight_exponent},
         {"zero_rate", s.zero_rate},
         {"seed", s.seed},
         {"threads", s.threads},
         {"oracle", oracle_config_to_json(s.oracle)}};
  if (s.out) j["out"] = *s.out;
  if (!s.replay.empty()) j["replay"] = s.replay;
  return j;
}

InstanceOutcome evaluate_instance(const json& in) {
  try {
    const std::string suite = in.at("suite").get<std::string>();
    if (suite == "chain") return eval_chain(in);
    if (suite == "bridge") return eval_bridge(in);
    if (suite == "partition") return eval_partition(in);
    if (suite == "lemma-3.5-exactness") return eval_sup_exactness(in);
    if (suite == "equivalence-ratio") return eval_equivalence(in);
    throw InvalidInput("unknown suite '" + suite + "'");
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed instance: ") + e.what());
  }
}

SweepOutcome run_sweep(const SweepSpec& spec) {
  const std::vector<json> instances = spec.replay.empty() ? generate(spec) : spec.replay;
  const auto results = evaluate_all(instances, spec.threads);
  json report = aggregate(instances, results);
  json failures = json::array();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (results[i].ok) continue;
    json f = instances[i];
    f["observed"] = results[i].detail;
    failures.push_back(std::move(f));
  }
  report["schema_version"] = kSchemaVersion;
  report["spec"] = to_json(spec);
  report["failures"] = failures;
  report["passed"] = failures.empty();
  if (!spec.replay.empty()) {
    json replayed = json::array();
    for (std::size_t i = 0; i < instances.size(); ++i)
      replayed.push_back({{"ok", results[i].ok}, {"observed", results[i].detail}});
    report["replayed"] = replayed;
  }
  return {report, failures.empty()};
}

}  // namespace hardy::tools
