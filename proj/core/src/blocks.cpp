#include "hardy/blocks.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/ext.hpp"

namespace hardy {

Index BlockIndex::value() const {
  if (infinite_) throw InvalidInput("infinite block index has no value");
  return value_;
}

namespace {

double range_sum(const Window& w, Index lo, Index hi) {
  double s = 0.0;
  for (Index i = std::max(lo, w.start()); i <= std::min(hi, w.last()); ++i) s += w.at(i);
  return s;
}

double tail_sum(const Window& w, Index j) { return range_sum(w, j, w.last()); }

bool less(BlockIndex a, BlockIndex b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value();
}

}  // namespace

bool doubling_test(const Window& w, Index block_start, Index j) {
  if (j > w.last()) return false;
  double tail = tail_sum(w, j);
  return tail > 0.0 && tail >= 2.0 * range_sum(w, block_start, j - 1);
}

BlockPartition block_partition(const Window& w, Index n0) {
  if (!w.contains(n0)) throw RangeError("partition start " + std::to_string(n0) + " outside window");
  BlockPartition bp{n0, {BlockIndex(n0)}, 0, {}};
  if (n0 + 1 > w.last()) {
    bp.ns.push_back(BlockIndex::infinity());
  } else {
    bp.ns.emplace_back(n0 + 1);
    while (true) {
      Index prev = bp.ns.back().value();
      Index found = -1;
      bool have = false;
      for (Index j = prev + 1; j <= w.last(); ++j) {
        if (doubling_test(w, prev, j)) {
          found = j;
          have = true;
          break;
        }
      }
      if (!have) {
        bp.ns.push_back(BlockIndex::infinity());
        break;
      }
      bp.ns.emplace_back(found);
    }
  }
  bp.K = bp.ns.size() - 1;
  for (std::size_t k = 1; k + 1 <= bp.K; ++k) {
    const BlockIndex next = bp.ns[k + 1];
    if (next.is_infinite() || bp.ns[k].value() < next.value() - 1) bp.kset.push_back(k);
  }
  return bp;
}

PartitionReport verify_partition_invariants(const Window& w, const BlockPartition& bp) {
  PartitionReport rep{PartitionStatus::Pass, {}, 0};
  auto check = [&](const char* name, std::size_t k, bool ok) { rep.checks.push_back({name, k, ok}); };

  const auto& ns = bp.ns;
  const bool shape_ok = ns.size() >= 2 && bp.K == ns.size() - 1 && ns.back().is_infinite() &&
                        std::none_of(ns.begin(), ns.end() - 1,
                                     [](BlockIndex b) { return b.is_infinite(); });
  check("shape", 0, shape_ok);
  if (!shape_ok) {
    rep.status = PartitionStatus::Fail;
    return rep;
  }
  const BlockIndex expected_n1 = bp.n0 + 1 <= w.last() ? BlockIndex(bp.n0 + 1) : BlockIndex::infinity();
  check("start", 0, w.contains(bp.n0) && ns[0] == BlockIndex(bp.n0) && ns[1] == expected_n1);

  for (std::size_t k = 1; k < ns.size(); ++k) check("increasing", k, less(ns[k - 1], ns[k]));

  auto upper = [&](BlockIndex b) { return b.is_infinite() ? w.last() + 1 : b.value(); };

  for (std::size_t k = 2; k < ns.size(); ++k) {
    const Index prev = ns[k - 1].value();
    if (!ns[k].is_infinite()) check("doubling", k, doubling_test(w, prev, ns[k].value()));
    bool minimal = true;
    for (Index j = prev + 1; j < upper(ns[k]); ++j) minimal = minimal && !doubling_test(w, prev, j);
    check("minimality", k, minimal);
  }

  std::vector<std::size_t> kset;
  for (std::size_t k = 1; k + 1 < ns.size(); ++k)
    if (ns[k + 1].is_infinite() || ns[k].value() < ns[k + 1].value() - 1) kset.push_back(k);
  check("kset", 0, kset == bp.kset);

  for (std::size_t k : kset) {
    const Index nk = ns[k].value();
    const Index j = upper(ns[k + 1]) - 1;
    if (j > nk) check("kset_gap", k, !doubling_test(w, nk, j));
    // Informational predecessor comparison.
    const Index hi = ns[k + 1].is_infinite() ? w.last() : ns[k + 1].value() - 2;
    const double block = range_sum(w, nk, hi);
    const double previous = range_sum(w, ns[k - 1].value(), nk - 1);
    if (!(block < 2.0 * previous)) ++rep.predecessor_bound_failures;
  }

  for (std::size_t k = 1; k + 2 <= bp.K; ++k) {
    const Index nk = ns[k].value(), nk1 = ns[k + 1].value();
    check("block_doubling", k, tail_sum(w, nk1) >= 2.0 * range_sum(w, nk, nk1 - 1));
  }

  const bool all_ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                                  [](const PartitionCheck& c) { return c.ok; });
  if (!all_ok)
    rep.status = PartitionStatus::Fail;
  else if (bp.K < 3)
    rep.status = PartitionStatus::Vacuous;
  return rep;
}

std::string to_string(PartitionStatus s) {
  switch (s) {
    case PartitionStatus::Pass: return "pass";
    case PartitionStatus::Vacuous: return "vacuous";
    case PartitionStatus::Fail: return "fail";
  }
  return "?";
}

DoublingSums doubling_lemma_check(const Window& b, const Window& c, double alpha, Index kmin,
                                  Index kmax, DoublingHypothesis hypothesis) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidParameter("alpha must be positive");
  if (kmin > kmax - 2) throw InvalidInput("doubling lemma needs kmin <= kmax - 2");
  if (!b.contains(kmin) || !b.contains(kmax) || !c.contains(kmin) || !c.contains(kmax))
    throw RangeError("[kmin, kmax] must lie inside both windows");
  const Index last_gap = hypothesis == DoublingHypothesis::Full ? kmax - 1 : kmax - 2;
  for (Index k = kmin; k <= last_gap; ++k) {
    if (!(b.at(k + 1) >= 2.0 * b.at(k)))
      throw InvalidInput("doubling hypothesis b_{k+1} >= 2 b_k fails at k = " + std::to_string(k));
  }
  DoublingSums s{0.0, 0.0, 0.0, 0.0};
  double tail = 0.0, tail_max = 0.0;
  for (Index k = kmax; k >= kmin; --k) {
    const double ck = c.at(k), bk = b.at(k);
    tail += ck;
    tail_max = std::max(tail_max, ck);
    s.lhs_sum += ext::mul(ext::pow(tail, alpha), bk);
    s.lhs_sup += ext::mul(tail_max, bk);
    s.rhs_sum += ext::mul(ext::pow(ck, alpha), bk);
    s.rhs_sup += ext::mul(ck, bk);
  }
  return s;
}

}  // namespace hardy
