#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hardy/error.hpp"

namespace hardy {

using Index = std::int64_t;

/// A finite contiguous slice of Z carrying nonnegative entries.
///
/// Entries are addressed by their absolute index n in [start, start + size).
/// Sums and suprema "over Z" elsewhere in the library run over this index set
/// only.
template <class T>
class BasicWindow {
 public:
  BasicWindow(Index start, std::vector<T> values) : start_(start), values_(std::move(values)) {
    if (values_.empty()) throw InvalidInput("window must contain at least one entry");
    for (const T& v : values_) {
      if (!(v >= T(0))) throw InvalidInput("window entries must be nonnegative");
    }
  }

  Index start() const { return start_; }
  Index last() const { return start_ + static_cast<Index>(values_.size()) - 1; }
  std::size_t size() const { return values_.size(); }
  bool contains(Index n) const { return n >= start_ && n <= last(); }
  bool same_range(const BasicWindow& o) const { return start_ == o.start_ && size() == o.size(); }

  /// Value at absolute index n; throws RangeError outside the window.
  const T& at(Index n) const {
    if (!contains(n)) throw RangeError("index " + std::to_string(n) + " outside window");
    return values_[static_cast<std::size_t>(n - start_)];
  }
  /// Value at offset k from start (no bounds check).
  const T& operator[](std::size_t k) const { return values_[k]; }

  std::span<const T> values() const { return values_; }

  /// Sub-window on [lo, hi].
  BasicWindow slice(Index lo, Index hi) const {
    if (lo > hi || !contains(lo) || !contains(hi))
      throw RangeError("slice [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "] outside window");
    auto first = values_.begin() + (lo - start_);
    return BasicWindow(lo, std::vector<T>(first, first + (hi - lo + 1)));
  }

  friend bool operator==(const BasicWindow&, const BasicWindow&) = default;

 private:
  Index start_;
  std::vector<T> values_;
};

using Window = BasicWindow<double>;

/// Throws ShapeError unless all windows share start and length.
void require_same_range(const Window& a, const Window& b, const char* what);

/// Index reversal x_n -> x_{-n}.
Window reversed(const Window& x);
Window scaled(const Window& x, double t);
/// Entrywise x_n^alpha with ExtNonneg conventions.
Window powered(const Window& x, double alpha);
Window constant_window(Index start, std::size_t size, double value);
bool all_zero(const Window& x);

}  // namespace hardy
