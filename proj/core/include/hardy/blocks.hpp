#pragma once

#include <limits>
#include <string>
#include <vector>

#include "hardy/window.hpp"

namespace hardy {

/// A partition index n_k, or the terminal value inf (inf of the empty set).
class BlockIndex {
 public:
  constexpr explicit BlockIndex(Index value) : value_(value), infinite_(false) {}
  static constexpr BlockIndex infinity() { return BlockIndex(); }

  constexpr bool is_infinite() const { return infinite_; }
  /// Throws InvalidInput for the infinite index.
  Index value() const;

  friend constexpr bool operator==(BlockIndex, BlockIndex) = default;

 private:
  constexpr BlockIndex() : value_(0), infinite_(true) {}

  Index value_;
  bool infinite_;
};

/// Block partition of a window with respect to w, started at n0:
///   n_1 = n_0 + 1,
///   n_k = inf { j > n_{k-1} : sum_{i>=j} w_i >= 2 sum_{i=n_{k-1}}^{j-1} w_i }   (k >= 2),
/// sums running over the window.  A tail of zero mass never passes the test,
/// and indices past the window are reported as inf.
struct BlockPartition {
  Index n0;
  std::vector<BlockIndex> ns;  ///< n_0, ..., n_K; the last entry is infinite
  std::size_t K;               ///< ns.size() - 1
  std::vector<std::size_t> kset;  ///< { k in 1..K-1 : n_k < n_{k+1} - 1 }
};

BlockPartition block_partition(const Window& w, Index n0);

/// The doubling test used by the construction at candidate j for a block starting at lo.
bool doubling_test(const Window& w, Index block_start, Index j);

enum class PartitionStatus { Pass, Vacuous, Fail };

struct PartitionCheck {
  std::string name;
  std::size_t k;
  bool ok;
};

struct PartitionReport {
  PartitionStatus status;
  std::vector<PartitionCheck> checks;
  /// Informational: count of k in the index set where
  /// sum_{i=n_k}^{n_{k+1}-2} w_i < 2 sum_{i=n_{k-1}}^{n_k-1} w_i fails.
  /// This bound is not implied by the construction and is not part of status.
  std::size_t predecessor_bound_failures = 0;

  bool ok() const { return status != PartitionStatus::Fail; }
};

/// Checks start, strict monotonicity, the doubling property at every finite
/// n_k (k >= 2), minimality of every n_k, the index set, and the failing
/// test at n_{k+1} - 1 for k in the index set.  K < 3 without failures
/// reports Vacuous.
PartitionReport verify_partition_invariants(const Window& w, const BlockPartition& bp);

std::string to_string(PartitionStatus s);

/// Hypothesis on b for the doubling lemma.
enum class DoublingHypothesis {
  /// b_{k+1} >= 2 b_k for kmin <= k <= kmax - 1.
  Full,
  /// b_{k+1} >= 2 b_k for kmin <= k <= kmax - 2 (last gap unconstrained).
  LastGapExempt,
};

struct DoublingSums {
  double lhs_sum;  ///< sum_k (sum_{m=k}^{kmax} c_m)^alpha b_k
  double lhs_sup;  ///< sum_k sup_{k<=m<=kmax} c_m b_k
  double rhs_sum;  ///< sum_k c_k^alpha b_k
  double rhs_sup;  ///< sum_k c_k b_k
};

/// Evaluates both sides of the doubling-lemma inequalities on [kmin, kmax].
/// Throws InvalidInput when the doubling hypothesis is violated or kmin > kmax - 2.
DoublingSums doubling_lemma_check(const Window& b, const Window& c, double alpha, Index kmin,
                                  Index kmax,
                                  DoublingHypothesis hypothesis = DoublingHypothesis::Full);

/// Proven constant for alpha <= 1 under the full hypothesis.
inline constexpr double kDoublingConstantSubunit = 2.0;

}  // namespace hardy
