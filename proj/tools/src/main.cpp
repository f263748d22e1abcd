#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hardy/blocks.hpp"
#include "hardy/bridge.hpp"
#include "hardy/charformulas.hpp"
#include "hardy/error.hpp"
#include "hardy/json_io.hpp"
#include "hardy/oracle.hpp"
#include "hardy/tools/sweep.hpp"

using nlohmann::json;
using namespace hardy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), os);
  } else {
    std::string cell = j.is_string() ? j.get<std::string>() : j.dump();
    if (cell.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      cell = quoted + "\"";
    }
    os << prefix << ',' << cell << '\n';
  }
}

void emit(const Common& c, const json& j) {
  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) throw InvalidInput("cannot write '" + c.out + "'");
  }
  std::ostream& os = c.out.empty() ? std::cout : file;
  if (c.format == "csv") {
    os << "key,value\n";
    flatten(j, "", os);
  } else {
    os << j.dump(2) << '\n';
  }
}

double parse_exponent(const std::string& s, bool allow_inf) {
  if (s == "inf") {
    if (!allow_inf) throw InvalidParameter("q = inf is not supported here");
    return kInf;
  }
  std::size_t pos = 0;
  double x = 0;
  try {
    x = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw InvalidParameter("cannot parse exponent '" + s + "'");
  }
  if (pos != s.size()) throw InvalidParameter("cannot parse exponent '" + s + "'");
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidParameter("exponents must be positive, got " + s);
  return x;
}

json exponent_json(double x) { return x == kInf ? json("inf") : json(x); }

json terms_json(const CharacterizationResult& r) {
  json t = json::object();
  for (const auto& term : r.terms) t[term.name] = ext_to_json(term.value);
  return t;
}

json run_char(const std::string& path, double p, double q, const std::string& form_name,
              const std::string& variant_name) {
  const auto wf = weights_from_json(read_json_file(path));
  const OperatorForm form = parse_form(form_name);
  const auto variant =
      variant_name == "range-flipped" ? AntigopVariant::RangeFlipped : AntigopVariant::AsPrinted;
  CharacterizationResult r;
  if (form == forms::gop)
    r = char_gop(wf.u, wf.v, wf.w, p, q);
  else if (form == forms::antigop)
    r = char_antigop(wf.u, wf.v, wf.w, p, q, variant);
  else if (form == forms::dual_gop)
    r = char_gop(reversed(wf.u), reversed(wf.v), reversed(wf.w), p, q);
  else if (form == forms::dual_antigop)
    r = char_antigop(reversed(wf.u), reversed(wf.v), reversed(wf.w), p, q, variant);
  else
    throw UnsupportedForm("no closed-form estimate for form " + form_name);
  json j{{"form", to_string(form)},
         {"p", p},
         {"q", q},
         {"regime", to_string(r.regime.case_id)},
         {"formula", to_string(r.formula_id)},
         {"value", ext_to_json(r.value)},
         {"terms", terms_json(r)}};
  if (form == forms::antigop || form == forms::dual_antigop) j["variant"] = to_string(variant);
  return j;
}

json run_oracle(const std::string& path, double p, double q, const std::string& form_name,
                OracleConfig cfg, bool spike) {
  const auto wf = weights_from_json(read_json_file(path));
  const RatioProblem pr(wf.u, wf.v, wf.w, p, q, parse_form(form_name));
  const OracleResult r = spike ? spike_oracle(pr) : brute_force_constant(pr, cfg);
  json j{{"form", to_string(pr.form)},
         {"p", p},
         {"q", exponent_json(q)},
         {"constant", ext_to_json(r.constant)},
         {"argmax", window_to_json(r.argmax)},
         {"certificate", to_string(r.certificate)},
         {"evaluations", r.evaluations},
         {"method", spike ? "spike" : "brute-force"}};
  if (!spike) j["oracle"] = tools::oracle_config_to_json(cfg);
  return j;
}

json run_bridge(const std::string& path, double p, double q, const std::string& form_name) {
  const json in = read_json_file(path);
  if (!in.contains("a")) throw InvalidInput("bridge needs a test sequence 'a' in the weights file");
  BridgeForm form;
  if (form_name == "gop")
    form = BridgeForm::Gop;
  else if (form_name == "antigop")
    form = BridgeForm::Antigop;
  else
    throw UnsupportedForm("bridge supports gop and antigop, got " + form_name);
  const auto r = bridge_check(rational_window_from_json(in.at("u")), rational_window_from_json(in.at("v")),
                              rational_window_from_json(in.at("w")), rational_window_from_json(in.at("a")),
                              p, q, form);
  json j{{"form", form_name},
         {"p", p},
         {"q", q},
         {"discrete_lhs", r.discrete_lhs},
         {"continuous_lhs", r.continuous_lhs},
         {"discrete_rhs", r.discrete_rhs},
         {"continuous_rhs", r.continuous_rhs},
         {"exact", r.exact}};
  if (r.exact) {
    j["powers"] = {{"discrete_lhs", r.discrete_lhs_pow->str()},
                   {"continuous_lhs", r.continuous_lhs_pow->str()},
                   {"discrete_rhs", r.discrete_rhs_pow->str()},
                   {"continuous_rhs", r.continuous_rhs_pow->str()}};
    j["lhs_equal"] = *r.discrete_lhs_pow == *r.continuous_lhs_pow;
    j["rhs_equal"] = *r.discrete_rhs_pow == *r.continuous_rhs_pow;
  }
  return j;
}

json run_partition(const std::string& path, std::optional<Index> n0) {
  const json in = read_json_file(path);
  if (!in.contains("w")) throw InvalidInput("partition needs a weight 'w'");
  const Window w = window_from_json(in.at("w"));
  const auto bp = block_partition(w, n0.value_or(w.start()));
  const auto rep = verify_partition_invariants(w, bp);
  json ns = json::array();
  for (auto b : bp.ns) ns.push_back(b.is_infinite() ? json("inf") : json(b.value()));
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back({{"check", c.name}, {"k", c.k}, {"ok", c.ok}});
  return {{"n0", bp.n0},
          {"ns", ns},
          {"K", bp.K},
          {"kset", bp.kset},
          {"status", to_string(rep.status)},
          {"predecessor_bound_failures", rep.predecessor_bound_failures},
          {"checks", checks}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted iterated Hardy inequalities on sequence spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "Random seed");
  app.add_option("--out", common.out, "Write output to a file instead of stdout");
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::string weights, p_str, q_str, form = "gop", variant = "as-printed";
  auto add_problem = [&](CLI::App* sub, const std::string& default_form) {
    sub->add_option("weights", weights, "Weights JSON file")->required();
    sub->add_option("--p", p_str, "Exponent p")->required();
    sub->add_option("--q", q_str, "Exponent q")->required();
    sub->add_option("--form", form, "Operator form")->default_val(default_form);
  };

  auto* cmd_char = app.add_subcommand("char", "Closed-form estimate of the optimal constant");
  add_problem(cmd_char, "gop");
  cmd_char->add_option("--variant", variant, "antigop formula variant")
      ->check(CLI::IsMember({"as-printed", "range-flipped"}));

  OracleConfig cfg = tools::SweepSpec::default_oracle();
  bool spike = false;
  auto* cmd_oracle = app.add_subcommand("oracle", "Brute-force lower bound on the optimal constant");
  add_problem(cmd_oracle, "gop");
  cmd_oracle->add_option("--restarts", cfg.restarts);
  cmd_oracle->add_option("--iterations", cfg.iterations);
  cmd_oracle->add_option("--random-candidates", cfg.random_candidates);
  cmd_oracle->add_option("--threads", cfg.threads);
  cmd_oracle->add_flag("--spike", spike, "Evaluate spikes only");

  auto* cmd_bridge = app.add_subcommand("bridge", "Exact discrete/continuous comparison");
  add_problem(cmd_bridge, "gop");

  std::optional<Index> n0;
  auto* cmd_partition = app.add_subcommand("partition", "Block partition of a weight");
  cmd_partition->add_option("weights", weights, "JSON file with a weight 'w'")->required();
  cmd_partition->add_option("--n0", n0, "Start index");

  std::string spec_path;
  auto* cmd_verify = app.add_subcommand("verify", "Run property suites from a sweep spec");
  cmd_verify->add_option("spec", spec_path, "Sweep spec JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (cmd_char->parsed()) {
      emit(common, run_char(weights, parse_exponent(p_str, false), parse_exponent(q_str, false), form, variant));
    } else if (cmd_oracle->parsed()) {
      cfg.seed = common.seed;
      emit(common, run_oracle(weights, parse_exponent(p_str, false), parse_exponent(q_str, true), form, cfg, spike));
    } else if (cmd_bridge->parsed()) {
      emit(common, run_bridge(weights, parse_exponent(p_str, false), parse_exponent(q_str, false), form));
    } else if (cmd_partition->parsed()) {
      emit(common, run_partition(weights, n0));
    } else if (cmd_verify->parsed()) {
      tools::SweepSpec spec;
      if (!spec_path.empty()) spec = tools::parse_sweep_spec(read_json_file(spec_path));
      if (app.get_option("--seed")->count() > 0) spec.seed = common.seed;
      if (common.out.empty() && spec.out) common.out = *spec.out;
      const auto outcome = tools::run_sweep(spec);
      emit(common, outcome.report);
      if (!outcome.passed) {
        std::cerr << "verify: " << outcome.report["failures"].size() << " failing instance(s)\n";
        return kExitAssertion;
      }
    }
  } catch (const hardy::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
