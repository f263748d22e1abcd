#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "hardy/bridge.hpp"
#include "hardy/ext.hpp"
#include "hardy/window.hpp"

namespace hardy {

/// {"start": int, "values": [number | "inf"]}
nlohmann::json window_to_json(const Window& w);
Window window_from_json(const nlohmann::json& j);

/// Rational values accept integers, decimal strings ("0.25"), fractions
/// ("3/4") and JSON floating numbers (converted exactly).
nlohmann::json rational_window_to_json(const RationalWindow& w);
RationalWindow rational_window_from_json(const nlohmann::json& j);
Rational rational_from_json(const nlohmann::json& j);

/// inf is written as the string "inf".
nlohmann::json ext_to_json(ExtNonneg x);
ExtNonneg ext_from_json(const nlohmann::json& j);

/// {"u": Window, "v": Window, "w": Window, "a"?: Window}
struct WeightsFile {
  Window u;
  Window v;
  Window w;
  std::optional<Window> a;
};

WeightsFile weights_from_json(const nlohmann::json& j);
nlohmann::json weights_to_json(const WeightsFile& wf);
/// Throws InvalidInput with a diagnostic if the file cannot be read or parsed.
nlohmann::json read_json_file(const std::string& path);

}  // namespace hardy
