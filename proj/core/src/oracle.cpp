#include "hardy/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "hardy/error.hpp"

namespace hardy {

namespace {

using Vec = std::vector<double>;

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x68617264u};
  return std::mt19937_64(seq);
}

constexpr std::uint64_t kCandidateStream = ~std::uint64_t{0};

/// Point on {sum a^p v = 1} with a^p v distributed Dirichlet(1,...,1) over `support`.
Vec dirichlet_point(const RatioProblem& pr, const std::vector<std::size_t>& support,
                    std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  Vec g(pr.size(), 0.0);
  double total = 0.0;
  for (std::size_t k : support) total += g[k] = expo(rng);
  Vec a(pr.size(), 0.0);
  for (std::size_t k : support) {
    const double vk = pr.v[k];
    const double share = g[k] / total;
    a[k] = (vk > 0.0 && vk < kInf) ? std::pow(share / vk, 1.0 / pr.p) : share;
  }
  return a;
}

Vec random_dirichlet(const RatioProblem& pr, std::mt19937_64& rng, bool sparse) {
  const std::size_t N = pr.size();
  std::vector<std::size_t> idx(N);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (sparse) {
    std::shuffle(idx.begin(), idx.end(), rng);
    std::uniform_int_distribution<std::size_t> len(1, N);
    idx.resize(len(rng));
  }
  return dirichlet_point(pr, idx, rng);
}

std::vector<Vec> initial_candidates(const RatioProblem& pr, const OracleConfig& cfg) {
  const std::size_t N = pr.size();
  std::vector<Vec> out;
  if (cfg.families & kSpikes) {
    for (std::size_t m = 0; m < N; ++m) {
      Vec a(N, 0.0);
      a[m] = 1.0;
      out.push_back(std::move(a));
    }
  }
  if (cfg.families & kBlocks) {
    for (std::size_t lo = 0; lo < N; ++lo) {
      for (std::size_t hi = lo + 1; hi < N; ++hi) {
        Vec a(N, 0.0);
        std::fill(a.begin() + lo, a.begin() + hi + 1, 1.0);
        out.push_back(std::move(a));
        if (pr.p > 1.0) {
          // Hoelder extremal of sum_{k in block} a_k against (sum a^p v)^{1/p}.
          Vec h(N, 0.0);
          bool finite = true;
          for (std::size_t k = lo; k <= hi; ++k) {
            h[k] = ext::pow(pr.v[k], 1.0 / (1.0 - pr.p));
            finite = finite && h[k] < kInf;
          }
          if (finite) out.push_back(std::move(h));
        }
      }
    }
  }
  if (cfg.families & kRandomDirichlet) {
    auto rng = make_stream(cfg.seed, kCandidateStream);
    for (std::size_t r = 0; r < cfg.random_candidates; ++r)
      out.push_back(random_dirichlet(pr, rng, r % 2 == 1));
  }
  return out;
}

struct Polished {
  Vec a;
  double value;
  std::size_t evaluations;
};

/// Multiplicative pattern search: coordinate probes a_m * exp(+-step),
/// activation of zero coordinates, one random direction per sweep, and
/// zeroing probes once no move improves.  Only strict improvements are taken.
Polished polish(detail::RatioEvaluator& ev, Vec x, const OracleConfig& cfg, std::mt19937_64& rng) {
  const RatioProblem& pr = ev.problem();
  const std::size_t N = x.size();
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::size_t evals = 0;
  auto f = [&](const Vec& y) {
    ++evals;
    return ev.ratio(y);
  };
  auto renormalize = [&](Vec& y) {
    const double r = ev.rhs(y);
    if (r > 0.0 && r < kInf)
      for (double& t : y) t /= r;
  };
  renormalize(x);
  double fx = f(x);
  double step = cfg.initial_step;
  Vec y(N);
  for (std::size_t it = 0; it < cfg.iterations && fx < kInf; ++it) {
    bool improved = false;
    const double mass = std::pow(ev.rhs(x), pr.p);
    const double top = *std::max_element(x.begin(), x.end());
    for (std::size_t m = 0; m < N; ++m) {
      if (x[m] > 0.0) {
        for (double sgn : {1.0, -1.0}) {
          y = x;
          y[m] = x[m] * std::exp(sgn * step);
          const double fy = f(y);
          if (fy > fx) {
            x.swap(y);
            fx = fy;
            improved = true;
            break;
          }
        }
      } else {
        y = x;
        const double vm = pr.v[m];
        y[m] = (vm > 0.0 && vm < kInf && mass > 0.0) ? std::pow(step * mass / vm, 1.0 / pr.p)
                                                      : step * std::max(top, 1.0);
        const double fy = f(y);
        if (fy > fx) {
          x.swap(y);
          fx = fy;
          improved = true;
        }
      }
    }
    for (std::size_t k = 0; k < N; ++k) y[k] = x[k] * std::exp(step * gauss(rng));
    if (const double fy = f(y); fy > fx) {
      x.swap(y);
      fx = fy;
      improved = true;
    }
    if (!improved) {
      const auto nnz = std::count_if(x.begin(), x.end(), [](double t) { return t > 0.0; });
      for (std::size_t m = 0; m < N && nnz > 1; ++m) {
        if (x[m] == 0.0) continue;
        y = x;
        y[m] = 0.0;
        if (const double fy = f(y); fy > fx) {
          x.swap(y);
          fx = fy;
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      step *= cfg.step_decay;
      if (step < cfg.min_step) break;
    }
    renormalize(x);
  }
  return {std::move(x), fx, evals};
}

struct SearchOutcome {
  double best = 0.0;
  Vec argmax;
  std::size_t evaluations = 0;
  std::vector<Vec> finals;
};

SearchOutcome run_search(const RatioProblem& pr, const OracleConfig& cfg,
                         const std::vector<Vec>& initial) {
  SearchOutcome out;
  detail::RatioEvaluator ev(pr);
  std::vector<std::pair<double, std::size_t>> ranked;
  for (std::size_t i = 0; i < initial.size(); ++i) {
    const double val = ev.ratio(initial[i]);
    ++out.evaluations;
    ranked.emplace_back(val, i);
    if (out.argmax.empty() || val > out.best) {
      out.best = val;
      out.argmax = initial[i];
    }
  }
  if (!(cfg.families & kGradientPolished) || out.best == kInf) return out;

  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  const std::size_t R = cfg.restarts;
  const std::size_t seeded = std::min<std::size_t>((R + 1) / 2, ranked.size());
  std::vector<Polished> results(R);

  auto work = [&](std::size_t first, std::size_t stride) {
    detail::RatioEvaluator local(pr);
    for (std::size_t r = first; r < R; r += stride) {
      auto rng = make_stream(cfg.seed, r);
      Vec start = r < seeded ? initial[ranked[r].second] : random_dirichlet(pr, rng, r % 2 == 1);
      results[r] = polish(local, std::move(start), cfg, rng);
    }
  };
  const std::size_t T = std::max<std::size_t>(1, std::min(cfg.threads, R));
  if (T == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < T; ++t) pool.emplace_back(work, t, T);
  }
  for (auto& res : results) {
    out.evaluations += res.evaluations;
    if (res.value > out.best) {
      out.best = res.value;
      out.argmax = res.a;
    }
    out.finals.push_back(std::move(res.a));
  }
  return out;
}

Window normalized_argmax(const RatioProblem& pr, Vec a) {
  detail::RatioEvaluator ev(pr);
  const double r = ev.rhs(a);
  if (r > 0.0 && r < kInf)
    for (double& t : a) t /= r;
  return Window(pr.u.start(), std::move(a));
}

bool convex_objective(const RatioProblem& pr) {
  return pr.p <= 1.0 && pr.q >= 1.0 && !is_power_inner(pr.form.inner);
}

}  // namespace

void OracleConfig::validate() const {
  if (restarts < 1) throw InvalidParameter("oracle needs at least one restart");
  if (!(step_decay > 0.0 && step_decay < 1.0)) throw InvalidParameter("step_decay must lie in (0,1)");
  if (!(initial_step > 0.0) || !(min_step > 0.0)) throw InvalidParameter("steps must be positive");
  if ((families & kAllFamilies) == 0) throw InvalidParameter("no candidate family selected");
}

std::string to_string(Certificate c) {
  return c == Certificate::ExactSpike ? "exact-spike" : "heuristic";
}

OracleResult spike_oracle(const RatioProblem& pr) {
  if (!is_sup_inner(pr.form.inner))
    throw UnsupportedForm("spike oracle needs a supremum inner form, got " + to_string(pr.form));
  if (pr.p > 1.0) throw InvalidParameter("spike oracle requires p in (0, 1]");
  OracleConfig cfg;
  cfg.families = kSpikes;
  auto s = run_search(pr, cfg, initial_candidates(pr, cfg));
  return {ExtNonneg(s.best), normalized_argmax(pr, std::move(s.argmax)),
          pr.q >= 1.0 ? Certificate::ExactSpike : Certificate::Heuristic, s.evaluations};
}

OracleResult brute_force_constant(const RatioProblem& pr, const OracleConfig& cfg) {
  cfg.validate();
  if (pr.size() == 1) {
    detail::RatioEvaluator ev(pr);
    const Vec a{1.0};
    return {ExtNonneg(ev.ratio(a)), normalized_argmax(pr, a), Certificate::ExactSpike, 1};
  }
  auto s = run_search(pr, cfg, initial_candidates(pr, cfg));
  const bool exact = (cfg.families & kSpikes) && convex_objective(pr);
  return {ExtNonneg(s.best), normalized_argmax(pr, std::move(s.argmax)),
          exact ? Certificate::ExactSpike : Certificate::Heuristic, s.evaluations};
}

EquivalenceRatio make_equivalence_ratio(ExtNonneg F, ExtNonneg B) {
  if ((F.is_zero() && B.is_zero()) || (F.is_inf() && B.is_inf())) return {F, B, 1.0, true};
  if (B.is_zero() || F.is_inf()) return {F, B, kInf, false};
  if (B.is_inf()) return {F, B, 0.0, false};
  return {F, B, F.value() / B.value(), false};
}

EquivalenceRatio equivalence_ratio(const RatioProblem& pr, const OracleConfig& cfg,
                                   AntigopVariant variant) {
  ExtNonneg F;
  if (pr.form == forms::gop)
    F = char_gop(pr.u, pr.v, pr.w, pr.p, pr.q).value;
  else if (pr.form == forms::antigop)
    F = char_antigop(pr.u, pr.v, pr.w, pr.p, pr.q, variant).value;
  else if (pr.form == forms::dual_gop)
    F = char_gop(reversed(pr.u), reversed(pr.v), reversed(pr.w), pr.p, pr.q).value;
  else if (pr.form == forms::dual_antigop)
    F = char_antigop(reversed(pr.u), reversed(pr.v), reversed(pr.w), pr.p, pr.q, variant).value;
  else
    throw UnsupportedForm("no closed-form estimate for form " + to_string(pr.form));
  return make_equivalence_ratio(F, brute_force_constant(pr, cfg).constant);
}

std::string to_string(ChainFamily f) {
  switch (f) {
    case ChainFamily::Simple: return "simple";
    case ChainFamily::Antigop: return "antigop";
    case ChainFamily::Gop: return "gop";
  }
  return "?";
}

ChainFamily parse_chain_family(const std::string& name) {
  if (name == "simple") return ChainFamily::Simple;
  if (name == "antigop") return ChainFamily::Antigop;
  if (name == "gop") return ChainFamily::Gop;
  throw InvalidInput("unknown chain family '" + name + "'");
}

ChainReport chain_equivalence_sweep(const Window& u, const Window& v, const Window& w, double p,
                                    double q, const OracleConfig& cfg, ChainFamily family) {
  if (!(p > 0.0) || p > 1.0) throw InvalidParameter("chain equivalence requires p in (0, 1]");
  cfg.validate();
  const Window weight = family == ChainFamily::Simple ? constant_window(u.start(), u.size(), 1.0) : u;
  std::array<OperatorForm, 3> chain;
  if (family == ChainFamily::Gop)
    chain = {forms::g1, forms::g2, forms::g3};
  else
    chain = {forms::ag1, forms::ag2, forms::ag3};

  std::vector<RatioProblem> problems;
  for (OperatorForm f : chain) problems.emplace_back(weight, v, w, p, q, f);

  std::vector<Vec> pool = initial_candidates(problems[1], cfg);
  const std::size_t initial_count = pool.size();
  for (const auto& pr : problems) {
    auto s = run_search(pr, cfg, std::vector<Vec>(pool.begin(), pool.begin() + initial_count));
    for (auto& a : s.finals) pool.push_back(std::move(a));
  }
  std::array<double, 3> best{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < 3; ++i) {
    detail::RatioEvaluator ev(problems[i]);
    for (const auto& a : pool) best[i] = std::max(best[i], ev.ratio(a));
  }
  ChainReport rep{family,
                  ExtNonneg(best[0]),
                  ExtNonneg(best[1]),
                  ExtNonneg(best[2]),
                  best[0] <= best[1] && best[1] <= best[2],
                  0.0,
                  pool.size()};
  rep.ratio31 = make_equivalence_ratio(rep.a3, rep.a1).ratio;
  return rep;
}

}  // namespace hardy
