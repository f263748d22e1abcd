#pragma once

#include <string>
#include <vector>

#include "hardy/ext.hpp"
#include "hardy/regime.hpp"
#include "hardy/window.hpp"

namespace hardy {

enum class FormulaId {
  GopI, GopII, GopIII, GopIV,
  AntigopI, AntigopII, AntigopIII, AntigopIV,
  LinftExact,
};

std::string to_string(FormulaId id);

struct NamedTerm {
  std::string name;
  ExtNonneg value;
};

struct CharacterizationResult {
  ExtNonneg value;
  Regime regime;
  std::vector<NamedTerm> terms;
  FormulaId formula_id;
};

/// Closed-form estimate of the least constant for
///   (sum_n (sup_{i>=n} u_i sum_{k<=i} a_k)^q w_n)^{1/q} <= C (sum_n a_n^p v_n)^{1/p}.
/// The expressions depend on u only through its decreasing upper envelope.
CharacterizationResult char_gop(const Window& u, const Window& v, const Window& w, double p,
                                double q);

/// Which transcription of the antigop estimates to evaluate.
enum class AntigopVariant {
  /// Exactly as published.
  AsPrinted,
  /// Summation/supremum ranges and exponents changed where the published
  /// expressions are not homogeneous or aggregate v on the wrong side:
  ///   II  first term:  (sum_{i<=n} w_i)^{q/(p-q)} w_n sup_{k>=n} u_k^{pq/(p-q)}
  ///                    (sum_{m>=k} v_m^{1/(1-p)})^{(p-1)q/(p-q)}
  ///   III:             sup_{j>=n} v_j^{-1/p} in place of sup_{j<=n}
  ///   IV  first term:  u_k^{pq/(p-q)} in place of u_k^{q/(p-q)}
  /// Regime I is unchanged.
  RangeFlipped,
};

std::string to_string(AntigopVariant v);

/// Closed-form estimate of the least constant for
///   (sum_n (sup_{i>=n} u_i sum_{k>=i} a_k)^q w_n)^{1/q} <= C (sum_n a_n^p v_n)^{1/p}.
CharacterizationResult char_antigop(const Window& u, const Window& v, const Window& w, double p,
                                    double q,
                                    AntigopVariant variant = AntigopVariant::AsPrinted);

/// sup_n u_n sup_{j>=n} v_j^{-1/p}: the exact least constant of
/// sup_n u_n sup_{j>=n} a_j <= C (sum a^p v)^{1/p} for p in (0, 1].
ExtNonneg char_linft_exact(const Window& u, const Window& v, double p);

}  // namespace hardy
