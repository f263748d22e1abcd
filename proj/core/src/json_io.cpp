#include "hardy/json_io.hpp"

#include <fstream>

#include "hardy/error.hpp"

namespace hardy {

using nlohmann::json;

namespace {

const json& require_key(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("missing key '") + key + "'");
  return j.at(key);
}

Index start_from_json(const json& j) {
  const json& s = require_key(j, "start");
  if (!s.is_number_integer()) throw InvalidInput("'start' must be an integer");
  return s.get<Index>();
}

const json& values_from_json(const json& j) {
  const json& vals = require_key(j, "values");
  if (!vals.is_array()) throw InvalidInput("'values' must be an array");
  return vals;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Rational parse_rational_string(const std::string& s) {
  using cpp_int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw InvalidInput("bad fraction '" + s + "'");
    const cpp_int d(den);
    if (d == 0) throw InvalidInput("zero denominator in '" + s + "'");
    return Rational(cpp_int(num), d);
  }
  const auto dot = s.find('.');
  const std::string whole = s.substr(0, dot);
  const std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
  if (!(all_digits(whole) || (whole.empty() && !frac.empty())) || (!frac.empty() && !all_digits(frac)))
    throw InvalidInput("bad rational '" + s + "'");
  cpp_int scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  return Rational(cpp_int(whole.empty() ? "0" : whole) * scale + cpp_int(frac.empty() ? "0" : frac),
                  scale);
}

}  // namespace

json ext_to_json(ExtNonneg x) {
  if (x.is_inf()) return "inf";
  return x.value();
}

ExtNonneg ext_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtNonneg::infinity();
    throw InvalidInput("unexpected string '" + j.get<std::string>() + "' for a number");
  }
  if (!j.is_number()) throw InvalidInput("expected a number or \"inf\"");
  return ExtNonneg(j.get<double>());
}

json window_to_json(const Window& w) {
  json vals = json::array();
  for (double v : w.values()) vals.push_back(ext_to_json(ExtNonneg(v)));
  return {{"start", w.start()}, {"values", vals}};
}

Window window_from_json(const json& j) {
  const Index start = start_from_json(j);
  std::vector<double> vals;
  for (const json& v : values_from_json(j)) vals.push_back(ext_from_json(v).value());
  return Window(start, std::move(vals));
}

Rational rational_from_json(const json& j) {
  if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) return to_rational(j.get<double>());
  if (j.is_string()) return parse_rational_string(j.get<std::string>());
  throw InvalidInput("expected a rational number");
}

json rational_window_to_json(const RationalWindow& w) {
  json vals = json::array();
  for (const auto& v : w.values()) vals.push_back(v.str());
  return {{"start", w.start()}, {"values", vals}};
}

RationalWindow rational_window_from_json(const json& j) {
  const Index start = start_from_json(j);
  std::vector<Rational> vals;
  for (const json& v : values_from_json(j)) vals.push_back(rational_from_json(v));
  return RationalWindow(start, std::move(vals));
}

WeightsFile weights_from_json(const json& j) {
  WeightsFile wf{window_from_json(require_key(j, "u")), window_from_json(require_key(j, "v")),
                 window_from_json(require_key(j, "w")), std::nullopt};
  if (j.contains("a")) wf.a = window_from_json(j.at("a"));
  return wf;
}

json weights_to_json(const WeightsFile& wf) {
  json j{{"u", window_to_json(wf.u)}, {"v", window_to_json(wf.v)}, {"w", window_to_json(wf.w)}};
  if (wf.a) j["a"] = window_to_json(*wf.a);
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("cannot parse '" + path + "': " + e.what());
  }
}

}  // namespace hardy
