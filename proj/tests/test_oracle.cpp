#include <doctest.h>

#include <algorithm>
#include <vector>

#include "mopiso/error.hpp"
#include "mopiso/families.hpp"
#include "mopiso/isolation.hpp"
#include "mopiso/mop.hpp"
#include "mopiso/oracle.hpp"

using namespace mopiso;

namespace {

// Prune-free reference: sizes ascending, lexicographic within a size, first
// hit wins. Mirrors the oracle's documented witness order.
template <typename Pred>
std::pair<int, std::vector<int>> reference_minimum(int n, Pred&& pred) {
  for (int s = 0; s <= n; ++s) {
    std::vector<int> pick(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) pick[static_cast<size_t>(i)] = i;
    while (true) {
      if (pred(pick)) return {s, pick};
      int i = s - 1;
      while (i >= 0 && pick[static_cast<size_t>(i)] == n - s + i) --i;
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int j = i + 1; j < s; ++j)
        pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return {-1, {}};
}

}  // namespace

TEST_CASE("exact isolation fixtures") {
  CHECK(exact_isolation_number(Mop(3, {}), 0).value == 1);
  CHECK(exact_isolation_number(family_T(2, 2), 2).value == 2);
  CHECK(exact_isolation_number(family_S(2, 2), 2).value == 2);
  CHECK(exact_isolation_number(family_R(2), 2).value == 1);
  // zero iff the whole graph already has no big star
  CHECK(exact_isolation_number(fan(5), 4).value == 0);
  CHECK(exact_isolation_number(fan(5), 3).value == 1);
}

TEST_CASE("exact domination fixtures") {
  CHECK(exact_domination_number(Mop(3, {})).value == 1);
  CHECK(exact_domination_number(family_M(3)).value == 3);
  CHECK(exact_domination_number(family_M(2)).value == 2);
  for (int n = 3; n <= 24; n += 7) {
    ExactResult r = exact_domination_number(fan(n));
    CHECK(r.value == 1);
    CHECK(r.witness == std::vector<int>{0});
  }
}

TEST_CASE("oracle refuses oversized instances") {
  try {
    exact_isolation_number(fan(25), 1);
    FAIL("expected LimitExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LimitExceeded);
  }
  CHECK(exact_isolation_number(fan(25), 1, 30).value == 1);
}

TEST_CASE("pruned search matches the prune-free reference exactly") {
  for (int n = 3; n <= 14; ++n) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      Mop g = random_mop(n, 53 * n + seed);
      for (int k = 0; k <= 3; ++k) {
        ExactResult fast = exact_isolation_number(g, k);
        auto [value, witness] = reference_minimum(
            n, [&](const std::vector<int>& s) { return is_isolating(g, s, k).isolating; });
        CHECK(fast.value == value);
        CHECK(fast.witness == witness);
        CHECK(fast.explored <= static_cast<std::uint64_t>(1) << n);
      }
      ExactResult dom = exact_domination_number(g);
      auto [dvalue, dwitness] = reference_minimum(
          n, [&](const std::vector<int>& s) { return is_dominating(g, s); });
      CHECK(dom.value == dvalue);
      CHECK(dom.witness == dwitness);
    }
  }
}

TEST_CASE("exact value is monotone in the relaxation") {
  for (int n = 4; n <= 14; ++n) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      Mop g = random_mop(n, 59 * n + seed);
      int previous = exact_domination_number(g).value;  // k = -1 in spirit
      for (int k = 0; k <= 4; ++k) {
        int value = exact_isolation_number(g, k).value;
        CHECK(value <= previous);
        previous = value;
      }
    }
  }
}

TEST_CASE("witness actually achieves the value, and nothing smaller does") {
  for (int n = 6; n <= 12; n += 3) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      Mop g = random_mop(n, 61 * n + seed);
      ExactResult r = exact_isolation_number(g, 1);
      CHECK(static_cast<int>(r.witness.size()) == r.value);
      CHECK(is_isolating(g, r.witness, 1).isolating);
      if (r.value > 0) {
        auto [smaller, w] = reference_minimum(n, [&](const std::vector<int>& s) {
          return static_cast<int>(s.size()) < r.value &&
                 is_isolating(g, s, 1).isolating;
        });
        CHECK(smaller == -1);
      }
    }
  }
}

TEST_CASE("small orders never need more than one vertex") {
  for (int k = 0; k <= 4; ++k) {
    for (int n = 3; n <= std::min(2 * k + 7, 15); ++n) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Mop g = random_mop(n, 67 * n + 5 * k + seed);
        CHECK(exact_isolation_number(g, k).value <= 1);
      }
    }
  }
}

TEST_CASE("algorithms never beat the oracle") {
  for (int n = 4; n <= 14; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Mop g = random_mop(n, 71 * n + seed);
      for (int k = 0; k <= 2; ++k) {
        int exact = exact_isolation_number(g, k).value;
        CHECK(exact <= isolate_order(g, k).size());
        CHECK(exact <= isolate_order_plus_n2(g, k).size());
        CHECK(exact <= isolate_best(g, k).size());
        if (k >= 1 && n >= 2 * k + 3)
          CHECK(exact <= isolate_order_minus_n2(g, k).size());
      }
      int gamma = exact_domination_number(g).value;
      CHECK(gamma <= dominate_third(g).size());
      CHECK(gamma <= dominate_half_minus(g).size());
    }
  }
}
