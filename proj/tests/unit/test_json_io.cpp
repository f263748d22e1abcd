#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "hardy/error.hpp"
#include "hardy/json_io.hpp"

using namespace hardy;
using nlohmann::json;

TEST_CASE("window json round trip") {
  Window w(-3, {1.5, kInf, 0});
  json j = window_to_json(w);
  CHECK(j["start"] == -3);
  CHECK(j["values"][1] == "inf");
  CHECK(window_from_json(j) == w);
}

TEST_CASE("window json errors") {
  CHECK_THROWS_AS(window_from_json(json{{"values", {1}}}), InvalidInput);
  CHECK_THROWS_AS(window_from_json(json{{"start", 0}, {"values", 3}}), InvalidInput);
  CHECK_THROWS_AS(window_from_json(json{{"start", 0}, {"values", {-1}}}), InvalidInput);
  CHECK_THROWS_AS(window_from_json(json{{"start", 0}, {"values", {"nan"}}}), InvalidInput);
  CHECK_THROWS_AS(window_from_json(json{{"start", 0.5}, {"values", {1}}}), InvalidInput);
}

TEST_CASE("rational parsing") {
  CHECK(rational_from_json(json(3)) == 3);
  CHECK(rational_from_json(json("3/4")) == Rational(3, 4));
  CHECK(rational_from_json(json("0.25")) == Rational(1, 4));
  CHECK(rational_from_json(json(".5")) == Rational(1, 2));
  CHECK(rational_from_json(json(0.5)) == Rational(1, 2));
  CHECK_THROWS_AS(rational_from_json(json("1/0")), InvalidInput);
  CHECK_THROWS_AS(rational_from_json(json("abc")), InvalidInput);
  auto rw = rational_window_from_json(json{{"start", 1}, {"values", {"1/3", 2}}});
  CHECK(rational_window_from_json(rational_window_to_json(rw)) == rw);
}

TEST_CASE("weights file") {
  WeightsFile wf{Window(0, {1, 2}), Window(0, {3, 4}), Window(0, {5, 6}), std::nullopt};
  json j = weights_to_json(wf);
  CHECK_FALSE(j.contains("a"));
  auto back = weights_from_json(j);
  CHECK(back.v == wf.v);
  CHECK_FALSE(back.a.has_value());
  CHECK_THROWS_AS(weights_from_json(json{{"u", j["u"]}}), InvalidInput);
}

TEST_CASE("reading files") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InvalidInput);
  const std::string path = "hardy_test_bad.json";
  { std::ofstream(path) << "{not json"; }
  CHECK_THROWS_AS(read_json_file(path), InvalidInput);
  std::remove(path.c_str());
  CHECK(ext_from_json(json("inf")).is_inf());
  CHECK_THROWS_AS(ext_from_json(json("x")), InvalidInput);
}
