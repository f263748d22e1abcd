#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hardy/charformulas.hpp"
#include "hardy/ext.hpp"
#include "hardy/hardyops.hpp"

namespace hardy {

enum CandidateFamily : unsigned {
  kSpikes = 1u << 0,
  kBlocks = 1u << 1,
  kRandomDirichlet = 1u << 2,
  kGradientPolished = 1u << 3,
  kAllFamilies = kSpikes | kBlocks | kRandomDirichlet | kGradientPolished,
};

struct OracleConfig {
  std::size_t restarts = 32;
  std::size_t iterations = 500;
  double initial_step = 1.0;
  double step_decay = 0.9;
  double min_step = 1e-9;
  std::uint64_t seed = 0;
  unsigned families = kAllFamilies;
  /// Dirichlet points drawn on the constraint surface before polishing.
  std::size_t random_candidates = 64;
  /// Worker threads for polishing restarts; the result does not depend on it.
  std::size_t threads = 1;

  void validate() const;
};

enum class Certificate { ExactSpike, Heuristic };
std::string to_string(Certificate c);

struct OracleResult {
  ExtNonneg constant;
  Window argmax;
  Certificate certificate;
  std::size_t evaluations;
};

/// Best single-spike sequence a = e_m.  Exact (certificate ExactSpike) when
/// p <= 1 <= q, since the objective is then convex and the spikes generate
/// the convex hull of the unit ball of l^p_v.  Throws UnsupportedForm unless
/// the inner aggregation is a supremum, InvalidParameter unless p <= 1.
OracleResult spike_oracle(const RatioProblem& problem);

/// Lower bound on sup_a ratio(problem, a) from spikes, indicator blocks,
/// Dirichlet points on {sum a^p v = 1} and multiplicative pattern-search
/// polishing.  Deterministic given cfg.seed.
OracleResult brute_force_constant(const RatioProblem& problem, const OracleConfig& cfg);

struct EquivalenceRatio {
  ExtNonneg formula;  ///< F
  ExtNonneg oracle;   ///< B
  double ratio;       ///< F / B, or 1 when both vanish or both are infinite
  bool sentinel;      ///< ratio was not computed from finite nonzero F and B
};

/// Combines F and B the way equivalence_ratio reports them.
EquivalenceRatio make_equivalence_ratio(ExtNonneg formula, ExtNonneg oracle);

/// F from the closed-form estimate matching problem.form (gop, antigop or their
/// duals), B from brute_force_constant.
EquivalenceRatio equivalence_ratio(const RatioProblem& problem, const OracleConfig& cfg,
                                   AntigopVariant variant = AntigopVariant::AsPrinted);

enum class ChainFamily {
  Simple,   ///< sup_{j>=n} a_j, sum_{j>=n} a_j, (sum_{j>=n} a_j^p)^{1/p}
  Antigop,  ///< ag1, ag2, ag3
  Gop,      ///< g1, g2, g3
};
std::string to_string(ChainFamily f);
ChainFamily parse_chain_family(const std::string& name);

struct ChainReport {
  ChainFamily family;
  ExtNonneg a1, a2, a3;
  bool ordered;     ///< a1 <= a2 <= a3
  double ratio31;   ///< a3 / a1 (1 when both vanish)
  std::size_t pool_size;
};

/// Brute-force values of the three chained constants on one shared candidate
/// pool, so that the pointwise chain sup <= sum <= power sum carries over to
/// the maxima exactly.  Throws InvalidParameter for p outside (0, 1].
ChainReport chain_equivalence_sweep(const Window& u, const Window& v, const Window& w, double p,
                                    double q, const OracleConfig& cfg, ChainFamily family);

}  // namespace hardy
