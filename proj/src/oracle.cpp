#include "mopiso/oracle.hpp"

#include <bit>
#include <functional>

namespace mopiso {

namespace {

struct Masks {
  int n = 0;
  std::vector<std::uint64_t> open;    // neighbors
  std::vector<std::uint64_t> closed;  // neighbors plus self
  std::uint64_t all = 0;
};

Masks build_masks(const Mop& g, int limit) {
  int n = g.order();
  require(n <= limit && n <= 64, Errc::LimitExceeded,
          "order " + std::to_string(n) + " above limit " + std::to_string(limit));
  Masks m;
  m.n = n;
  m.open.assign(static_cast<size_t>(n), 0);
  m.closed.assign(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    std::uint64_t bits = 0;
    for (int u : g.neighbors(v)) bits |= 1ULL << u;
    m.open[static_cast<size_t>(v)] = bits;
    m.closed[static_cast<size_t>(v)] = bits | (1ULL << v);
  }
  m.all = n == 64 ? ~0ULL : (1ULL << n) - 1;
  return m;
}

// Enumerates size-s subsets of 0..n-1 in lexicographic order of their sorted
// vertex lists and stops at the first one accepted by ok().
bool first_subset(int n, int s, const std::function<bool(const std::vector<int>&)>& ok,
                  std::vector<int>& out) {
  std::vector<int> idx(static_cast<size_t>(s));
  for (int i = 0; i < s; ++i) idx[static_cast<size_t>(i)] = i;
  if (s == 0) {
    if (ok(idx)) {
      out = idx;
      return true;
    }
    return false;
  }
  for (;;) {
    if (ok(idx)) {
      out = idx;
      return true;
    }
    int i = s - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - s + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < s; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

ExactResult search(const Masks& m, std::uint64_t must_hit,
                   const std::function<bool(std::uint64_t)>& good) {
  ExactResult res;
  for (int s = 0; s <= m.n; ++s) {
    std::vector<int> found;
    auto ok = [&](const std::vector<int>& idx) {
      std::uint64_t mask = 0;
      for (int v : idx) mask |= 1ULL << v;
      // Any workable set intersects must_hit; skipping the rest loses no
      // witness and keeps the enumeration order intact.
      if (s > 0 && (mask & must_hit) == 0) return false;
      ++res.explored;
      return good(mask);
    };
    if (first_subset(m.n, s, ok, found)) {
      res.value = s;
      res.witness = found;
      return res;
    }
  }
  internal_fail("exhausted all subsets");
}

}  // namespace

ExactResult exact_isolation_number(const Mop& g, int k, int limit) {
  require(k >= 0, Errc::BadParams, "k = " + std::to_string(k));
  Masks m = build_masks(g, limit);

  auto isolating = [&](std::uint64_t set) {
    std::uint64_t removed = 0;
    std::uint64_t rest = set;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      removed |= m.closed[static_cast<size_t>(v)];
    }
    std::uint64_t alive = m.all & ~removed;
    std::uint64_t scan = alive;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      if (std::popcount(m.open[static_cast<size_t>(v)] & alive) > k) return false;
    }
    return true;
  };

  // A nonempty set must reach within distance 2 of a maximum-degree vertex,
  // else that vertex keeps its whole star.
  int worst = 0;
  for (int v = 1; v < m.n; ++v)
    if (g.degree(v) > g.degree(worst)) worst = v;
  std::uint64_t ball = m.closed[static_cast<size_t>(worst)];
  for (int u : g.neighbors(worst)) ball |= m.closed[static_cast<size_t>(u)];
  if (g.degree(worst) <= k) ball = m.all;

  return search(m, ball, isolating);
}

ExactResult exact_domination_number(const Mop& g, int limit) {
  Masks m = build_masks(g, limit);

  auto dominating = [&](std::uint64_t set) {
    std::uint64_t covered = 0;
    std::uint64_t rest = set;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      covered |= m.closed[static_cast<size_t>(v)];
    }
    return covered == m.all;
  };

  // Whoever dominates vertex 0 must sit in its closed neighborhood.
  return search(m, m.closed[0], dominating);
}

}  // namespace mopiso
