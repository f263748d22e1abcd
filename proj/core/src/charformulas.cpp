#include "hardy/charformulas.hpp"

#include <algorithm>
#include <vector>

#include "hardy/envelopes.hpp"
#include "hardy/error.hpp"

namespace hardy {

namespace {

using Vec = std::vector<double>;

Vec to_vec(const Window& x) { return Vec(x.values().begin(), x.values().end()); }

Vec pow_vec(const Vec& x, double alpha) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ext::pow(x[i], alpha);
  return out;
}

Vec mul_vec(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ext::mul(a[i], b[i]);
  return out;
}

/// sum_{k<=n}
Vec head_sum(const Vec& x) {
  Vec out(x.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = acc += x[i];
  return out;
}

/// sum_{k>=n}
Vec tail_sum(const Vec& x) {
  Vec out(x.size());
  double acc = 0.0;
  for (std::size_t i = x.size(); i-- > 0;) out[i] = acc = x[i] + acc;
  return out;
}

/// sup_{k<=n}
Vec head_max(const Vec& x) {
  Vec out(x.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = acc = std::max(acc, x[i]);
  return out;
}

/// sup_{k>=n}
Vec tail_max(const Vec& x) {
  Vec out(x.size());
  double acc = 0.0;
  for (std::size_t i = x.size(); i-- > 0;) out[i] = acc = std::max(acc, x[i]);
  return out;
}

double sup_of(const Vec& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, v);
  return m;
}

/// Z_n = sum_{i<=n} w_i sup_{i<=j<=n} u_j^q
Vec iterated_head_weight(const Vec& w, const Vec& uq) {
  const std::size_t N = w.size();
  Vec out(N);
  for (std::size_t n = 0; n < N; ++n) {
    double s = 0.0, m = 0.0;
    for (std::size_t i = n + 1; i-- > 0;) {
      m = std::max(m, uq[i]);
      s += ext::mul(w[i], m);
    }
    out[n] = s;
  }
  return out;
}

/// sup_n A_n^{1/q} * B_n together with the two summands of A_n as separate sups.
CharacterizationResult sup_type(const Vec& head, const Vec& tail, const Vec& factor, double q,
                                Regime regime, FormulaId id) {
  Vec all(head.size()), hs(head.size()), ts(head.size());
  for (std::size_t n = 0; n < head.size(); ++n) {
    all[n] = ext::mul(ext::pow(head[n] + tail[n], 1.0 / q), factor[n]);
    hs[n] = ext::mul(ext::pow(head[n], 1.0 / q), factor[n]);
    ts[n] = ext::mul(ext::pow(tail[n], 1.0 / q), factor[n]);
  }
  return {ExtNonneg(sup_of(all)), regime, {{"head", sup_of(hs)}, {"tail", sup_of(ts)}}, id};
}

void require_common(const Window& u, const Window& v, const Window& w) {
  require_same_range(u, v, "characterization");
  require_same_range(u, w, "characterization");
}

}  // namespace

std::string to_string(FormulaId id) {
  switch (id) {
    case FormulaId::GopI: return "gop-i";
    case FormulaId::GopII: return "gop-ii";
    case FormulaId::GopIII: return "gop-iii";
    case FormulaId::GopIV: return "gop-iv";
    case FormulaId::AntigopI: return "antigop-i";
    case FormulaId::AntigopII: return "antigop-ii";
    case FormulaId::AntigopIII: return "antigop-iii";
    case FormulaId::AntigopIV: return "antigop-iv";
    case FormulaId::LinftExact: return "linft-exact";
  }
  return "?";
}

std::string to_string(AntigopVariant v) {
  return v == AntigopVariant::AsPrinted ? "as-printed" : "range-flipped";
}

CharacterizationResult char_gop(const Window& u_in, const Window& v_in, const Window& w_in,
                                double p, double q) {
  require_common(u_in, v_in, w_in);
  const Regime regime = classify_regime(p, q);
  const Vec U = to_vec(envelope(u_in, kDecreasingUpper));
  const Vec v = to_vec(v_in), w = to_vec(w_in);
  const std::size_t N = U.size();

  const Vec Uq = pow_vec(U, q);
  const Vec W_head = head_sum(w);               // sum_{i<=n} w_i
  const Vec Uqw_tail = tail_sum(mul_vec(Uq, w));  // sum_{i>=n} U_i^q w_i
  const Vec head = mul_vec(Uq, W_head);

  switch (regime.case_id) {
    case RegimeCase::I: {
      const Vec V = head_sum(pow_vec(v, 1.0 / (1.0 - p)));
      return sup_type(head, Uqw_tail, pow_vec(V, (p - 1.0) / p), q, regime, FormulaId::GopI);
    }
    case RegimeCase::III: {
      const Vec vsup = head_max(pow_vec(v, -1.0 / p));  // sup_{j<=n} v_j^{-1/p}
      return sup_type(head, Uqw_tail, vsup, q, regime, FormulaId::GopIII);
    }
    case RegimeCase::II: {
      const double r = q / (p - q), s = (p - 1.0) * q / (p - q), outer = (p - q) / (p * q);
      const Vec Vs = pow_vec(head_sum(pow_vec(v, 1.0 / (1.0 - p))), s);
      const Vec Upq = pow_vec(U, p * q / (p - q));
      const Vec inner_sup = tail_max(mul_vec(Upq, Vs));  // sup_{k>=n} U_k^{pq/(p-q)} V_k^s
      double s1 = 0.0, s2 = 0.0;
      for (std::size_t n = 0; n < N; ++n) {
        s1 += ext::mul(ext::mul(ext::mul(ext::pow(Uqw_tail[n], r), Uq[n]), w[n]), Vs[n]);
        s2 += ext::mul(ext::mul(ext::pow(W_head[n], r), w[n]), inner_sup[n]);
      }
      const double t1 = ext::pow(s1, outer), t2 = ext::pow(s2, outer);
      return {ExtNonneg(t1 + t2), regime, {{"T1", t1}, {"T2", t2}}, FormulaId::GopII};
    }
    case RegimeCase::IV: {
      const double r = q / (p - q), g = q / (q - p), outer = (p - q) / (p * q);
      const Vec vg = pow_vec(v, g);
      const Vec vg_head = head_max(vg);  // sup_{k<=n} v_k^{q/(q-p)}
      const Vec inner_sup = tail_max(mul_vec(pow_vec(U, p * q / (p - q)), vg));
      double b1 = 0.0, b2 = 0.0;
      for (std::size_t n = 0; n < N; ++n) {
        b1 += ext::mul(ext::mul(ext::mul(ext::pow(Uqw_tail[n], r), Uq[n]), w[n]), vg_head[n]);
        b2 += ext::mul(ext::mul(ext::pow(W_head[n], r), w[n]), inner_sup[n]);
      }
      return {ExtNonneg(ext::pow(b1 + b2, outer)), regime, {{"B1", b1}, {"B2", b2}},
              FormulaId::GopIV};
    }
  }
  throw InvalidParameter("unreachable regime");
}

CharacterizationResult char_antigop(const Window& u_in, const Window& v_in, const Window& w_in,
                                    double p, double q, AntigopVariant variant) {
  require_common(u_in, v_in, w_in);
  const Regime regime = classify_regime(p, q);
  const bool flipped = variant == AntigopVariant::RangeFlipped;
  const Vec u = to_vec(u_in), v = to_vec(v_in), w = to_vec(w_in);
  const std::size_t N = u.size();

  const Vec uq = pow_vec(u, q);
  const Vec W_head = head_sum(w);
  const Vec Z = iterated_head_weight(w, uq);

  switch (regime.case_id) {
    case RegimeCase::I: {
      const Vec Vt = pow_vec(tail_sum(pow_vec(v, 1.0 / (1.0 - p))), (p - 1.0) / p);
      Vec all(N);
      for (std::size_t n = 0; n < N; ++n) all[n] = ext::mul(ext::pow(Z[n], 1.0 / q), Vt[n]);
      return {ExtNonneg(sup_of(all)), regime, {}, FormulaId::AntigopI};
    }
    case RegimeCase::III: {
      const Vec vp = pow_vec(v, -1.0 / p);
      const Vec vsup = flipped ? tail_max(vp) : head_max(vp);
      const Vec tail = tail_sum(mul_vec(uq, w));
      return sup_type(mul_vec(uq, W_head), tail, vsup, q, regime, FormulaId::AntigopIII);
    }
    case RegimeCase::II: {
      const double r = q / (p - q), s = (p - 1.0) * q / (p - q), outer = (p - q) / (p * q);
      const Vec vp = pow_vec(v, 1.0 / (1.0 - p));
      const Vec V_head_s = pow_vec(head_sum(vp), s);  // (sum_{m<=k} ...)^s
      const Vec V_tail_s = pow_vec(tail_sum(vp), s);  // (sum_{m>=k} ...)^s
      const Vec upq = pow_vec(u, p * q / (p - q));
      const Vec sup1 = tail_max(mul_vec(upq, flipped ? V_tail_s : V_head_s));
      const Vec sup2 = tail_max(mul_vec(uq, V_tail_s));
      const Vec W_tail = tail_sum(w);
      double s1 = 0.0, s2 = 0.0;
      for (std::size_t n = 0; n < N; ++n) {
        const double lead = flipped ? ext::mul(ext::pow(W_head[n], r), w[n])
                                    : ext::mul(ext::pow(W_tail[n], r), ext::pow(w[n], r));
        s1 += ext::mul(lead, sup1[n]);
        s2 += ext::mul(ext::mul(ext::pow(Z[n], r), w[n]), sup2[n]);
      }
      const double t1 = ext::pow(s1, outer), t2 = ext::pow(s2, outer);
      return {ExtNonneg(t1 + t2), regime, {{"T1", t1}, {"T2", t2}}, FormulaId::AntigopII};
    }
    case RegimeCase::IV: {
      const double r = q / (p - q), g = q / (q - p), outer = (p - q) / (p * q);
      const Vec vg_tail = tail_max(pow_vec(v, g));  // sup_{m>=k} v_m^{q/(q-p)}
      const Vec u1 = pow_vec(u, flipped ? p * q / (p - q) : q / (p - q));
      const Vec sup1 = tail_max(mul_vec(u1, vg_tail));
      const Vec sup2 = tail_max(mul_vec(uq, vg_tail));
      double s1 = 0.0, s2 = 0.0;
      for (std::size_t n = 0; n < N; ++n) {
        s1 += ext::mul(ext::mul(ext::pow(W_head[n], r), w[n]), sup1[n]);
        s2 += ext::mul(ext::mul(ext::pow(Z[n], r), w[n]), sup2[n]);
      }
      const double t1 = ext::pow(s1, outer), t2 = ext::pow(s2, outer);
      return {ExtNonneg(t1 + t2), regime, {{"T1", t1}, {"T2", t2}}, FormulaId::AntigopIV};
    }
  }
  throw InvalidParameter("unreachable regime");
}

ExtNonneg char_linft_exact(const Window& u, const Window& v, double p) {
  require_same_range(u, v, "char_linft_exact");
  if (!(p > 0.0) || p > 1.0) throw InvalidParameter("exact sup formula requires p in (0, 1]");
  const Vec vsup = tail_max(pow_vec(to_vec(v), -1.0 / p));
  double best = 0.0;
  for (std::size_t n = 0; n < u.size(); ++n) best = std::max(best, ext::mul(u[n], vsup[n]));
  return ExtNonneg(best);
}

}  // namespace hardy
