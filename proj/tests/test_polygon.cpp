#include <doctest.h>

#include <utility>
#include <vector>

#include "mopiso/error.hpp"
#include "mopiso/isolation.hpp"
#include "mopiso/mop.hpp"
#include "mopiso/oracle.hpp"
#include "mopiso/polygon.hpp"

using namespace mopiso;

namespace {

template <typename F>
Errc catch_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::ParseError;
}

SimplePolygon square() {
  return SimplePolygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
}

// Exact even-odd test; coordinates here are small enough for long long.
bool point_inside(const std::vector<Point>& poly, Point p) {
  bool inside = false;
  int n = static_cast<int>(poly.size());
  for (int i = 0; i < n; ++i) {
    Point a = poly[static_cast<size_t>(i)];
    Point b = poly[static_cast<size_t>((i + 1) % n)];
    if ((a.y > p.y) != (b.y > p.y)) {
      long long lhs = (p.x - a.x) * (b.y - a.y);
      long long rhs = (p.y - a.y) * (b.x - a.x);
      if (b.y - a.y > 0 ? lhs < rhs : lhs > rhs) inside = !inside;
    }
  }
  return inside;
}

bool properly_cross(Point a, Point b, Point c, Point d) {
  int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

// Every diagonal stays strictly inside: no proper crossing with boundary
// edges, midpoint interior.
void check_diagonals_interior(const SimplePolygon& poly, const Mop& tri) {
  int n = poly.size();
  std::vector<Point> doubled;
  for (const Point& p : poly.corners()) doubled.push_back({2 * p.x, 2 * p.y});
  for (const Edge& d : tri.diagonals()) {
    Point pa = poly.corner(d.a), pb = poly.corner(d.b);
    for (int i = 0; i < n; ++i) {
      int j = (i + 1) % n;
      if (i == d.a || i == d.b || j == d.a || j == d.b) continue;
      CHECK_FALSE(properly_cross(pa, pb, poly.corner(i), poly.corner(j)));
    }
    Point mid{pa.x + pb.x, pa.y + pb.y};
    CHECK(point_inside(doubled, mid));
  }
}

}  // namespace

TEST_CASE("orientation is exact on large coordinates") {
  long long big = 1LL << 40;
  CHECK(orientation({0, 0}, {big, 1}, {2 * big, 2}) == 0);
  CHECK(orientation({0, 0}, {big, 1}, {2 * big + 1, 2}) < 0);
  CHECK(orientation({0, 0}, {big, 1}, {2 * big - 1, 2}) > 0);
  CHECK(orientation({0, 0}, {1, 0}, {1, 1}) > 0);
}

TEST_CASE("polygon validation names the failure") {
  CHECK(catch_code([] { SimplePolygon({{0, 0}, {1, 0}}); }) == Errc::Degenerate);
  CHECK(catch_code([] {
          SimplePolygon({{0, 0}, {1, 0}, {1, 1}, {0, 0}});
        }) == Errc::Degenerate);  // repeated corner
  CHECK(catch_code([] {
          SimplePolygon({{0, 0}, {1, 0}, {2, 0}, {1, 2}});
        }) == Errc::Degenerate);  // collinear run
  CHECK(catch_code([] {
          SimplePolygon({{0, 0}, {0, 2}, {2, 2}, {2, 0}});
        }) == Errc::Degenerate);  // clockwise
  CHECK(catch_code([] {
          SimplePolygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
        }) == Errc::Degenerate);  // symmetric bowtie: lobes cancel to zero area
  CHECK(catch_code([] {
          SimplePolygon({{0, 0}, {2, -2}, {4, 2}, {4, 0}});
        }) == Errc::NotSimple);  // bowtie with unequal lobes survives the area check
  CHECK(square().size() == 4);
}

TEST_CASE("ear clipping fixtures") {
  Mop sq = triangulate(square());
  CHECK(sq.diagonals() == std::vector<Edge>{Edge(0, 2)});

  SimplePolygon hex({{2, 0}, {4, 1}, {4, 3}, {2, 4}, {0, 3}, {0, 1}});
  Mop h = triangulate(hex);
  CHECK(h.order() == 6);
  CHECK(h.diagonals().size() == 3);
  check_diagonals_interior(hex, h);

  // L-shape: one reflex corner
  SimplePolygon ell({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  CHECK(reflex_chain_count(ell) == 1);
  Mop l = triangulate(ell);
  CHECK(l.order() == 6);
  check_diagonals_interior(ell, l);

  CHECK(reflex_chain_count(hex) == 0);
}

TEST_CASE("spiral gallery shape") {
  SimplePolygon p43 = spiral_gallery(4, 3);
  CHECK(p43.size() == 28);
  CHECK(reflex_chain_count(p43) == 4);

  SimplePolygon p10 = spiral_gallery(1, 0);
  CHECK(p10.size() == 4);
  CHECK(reflex_chain_count(p10) == 0);

  for (int t = 1; t <= 4; ++t)
    for (int k = 0; k <= 4; ++k)
      CHECK(spiral_gallery(t, k).size() == t * (k + 4));

  CHECK(catch_code([] { spiral_gallery(0, 2); }) == Errc::BadParams);
  CHECK(catch_code([] { spiral_gallery(2, -1); }) == Errc::BadParams);
}

TEST_CASE("spiral gallery triangulates unit by unit") {
  SimplePolygon p22 = spiral_gallery(2, 2);
  Mop tri = triangulate(p22);
  CHECK(tri.order() == 12);
  CHECK(tri.diagonals() == std::vector<Edge>{{0, 4},
                                             {0, 5},
                                             {0, 6},
                                             {1, 4},
                                             {2, 4},
                                             {6, 10},
                                             {6, 11},
                                             {7, 10},
                                             {8, 10}});
  check_diagonals_interior(p22, tri);

  for (int t = 1; t <= 4; ++t)
    for (int k = 0; k <= 4; ++k) {
      SimplePolygon p = spiral_gallery(t, k);
      check_diagonals_interior(p, triangulate(p));
    }
}

TEST_CASE("window coverage") {
  Mop f6(6, {{0, 2}, {0, 3}, {0, 4}});
  auto [ok1, w1] = verify_window_coverage(f6, {0}, 0);
  CHECK(ok1);
  CHECK(w1 == -1);
  auto [ok2, w2] = verify_window_coverage(f6, {}, 0);
  CHECK_FALSE(ok2);
  CHECK(w2 == 0);

  // monotone: more guards never lose a window
  for (int t = 1; t <= 3; ++t) {
    SimplePolygon p = spiral_gallery(t, 2);
    Mop tri = triangulate(p);
    GuardCertificate cert = place_guards(p, 2);
    CHECK(verify_window_coverage(tri, cert.guards, 2).first);
    std::vector<int> more = cert.guards;
    more.push_back((cert.guards.back() + 1) % tri.order());
    CHECK(verify_window_coverage(tri, more, 2).first);
  }
}

TEST_CASE("guard placement on spirals needs exactly one guard per unit") {
  GuardCertificate g32 = place_guards(spiral_gallery(3, 2), 2);
  CHECK(g32.guards.size() == 3);
  CHECK(g32.augmentations == 0);

  GuardCertificate g23 = place_guards(spiral_gallery(2, 3), 3);
  CHECK(g23.guards.size() == 2);

  for (int t = 1; t <= 4; ++t)
    for (int k = 0; k <= 4; ++k) {
      SimplePolygon p = spiral_gallery(t, k);
      GuardCertificate cert = place_guards(p, k);
      CHECK(static_cast<int>(cert.guards.size()) == t);
      CHECK(cert.base_size == t);
      CHECK(cert.augmentations == 0);
      Mop tri = triangulate(p);
      CHECK(verify_window_coverage(tri, cert.guards, k).first);
      for (size_t w = 0; w < cert.windows.size(); ++w) {
        int covered = cert.windows[w];
        int offset = (covered - static_cast<int>(w) + tri.order()) % tri.order();
        CHECK(offset <= k + 1);  // recorded corner lies in its window
      }
      if (tri.order() <= 24)
        CHECK(exact_isolation_number(tri, k).value == t);
    }
}

TEST_CASE("one guard suffices for a small convex room") {
  GuardCertificate cert = place_guards(square(), 0);
  CHECK(cert.guards.size() == 1);
  CHECK(cert.augmentations == 0);

  SimplePolygon hex({{2, 0}, {4, 1}, {4, 3}, {2, 4}, {0, 3}, {0, 1}});
  GuardCertificate c2 = place_guards(hex, 2);
  CHECK(c2.guards.size() == 1);

  CHECK(catch_code([] { place_guards(square(), 2); }) == Errc::TooSmall);
}
