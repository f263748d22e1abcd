#include "hardy/window.hpp"

#include <algorithm>

#include "hardy/ext.hpp"

namespace hardy {

void require_same_range(const Window& a, const Window& b, const char* what) {
  if (!a.same_range(b))
    throw ShapeError(std::string(what) + ": windows do not share start and length");
}

Window reversed(const Window& x) {
  std::vector<double> vals(x.values().rbegin(), x.values().rend());
  return Window(-x.last(), std::move(vals));
}

Window scaled(const Window& x, double t) {
  std::vector<double> vals(x.values().begin(), x.values().end());
  for (double& v : vals) v = ext::mul(v, t);
  return Window(x.start(), std::move(vals));
}

Window powered(const Window& x, double alpha) {
  std::vector<double> vals(x.values().begin(), x.values().end());
  for (double& v : vals) v = ext::pow(v, alpha);
  return Window(x.start(), std::move(vals));
}

Window constant_window(Index start, std::size_t size, double value) {
  return Window(start, std::vector<double>(size, value));
}

bool all_zero(const Window& x) {
  return std::all_of(x.values().begin(), x.values().end(), [](double v) { return v == 0.0; });
}

}  // namespace hardy
