#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "mopiso/error.hpp"
#include "mopiso/families.hpp"
#include "mopiso/mop.hpp"

using namespace mopiso;

namespace {

// Every edge of g, as normalized pairs.
std::set<Edge> edge_set(const Mop& g) {
  std::set<Edge> edges;
  int n = g.order();
  for (int v = 0; v < n; ++v) edges.insert(Edge(v, (v + 1) % n));
  for (const Edge& d : g.diagonals()) edges.insert(d);
  return edges;
}

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

std::vector<Mop> small_corpus() {
  std::vector<Mop> out;
  for (int n = 4; n <= 16; ++n)
    for (std::uint64_t seed = 0; seed < 8; ++seed)
      out.push_back(random_mop(n, 1000 * n + seed));
  return out;
}

}  // namespace

TEST_CASE("construction accepts the basic shapes") {
  Mop triangle(3, {});
  CHECK(triangle.order() == 3);
  Mop f6(6, {{0, 2}, {0, 3}, {0, 4}});
  CHECK(f6.order() == 6);
  CHECK(f6.diagonals().size() == 3);
}

TEST_CASE("construction rejects invalid input with the specific error") {
  CHECK(catch_code([] { Mop(2, {}); }) == Errc::TooFewVertices);
  CHECK(catch_code([] { Mop(6, {{0, 2}}); }) == Errc::WrongDiagonalCount);
  CHECK(catch_code([] { Mop(6, {{0, 2}, {0, 3}, {0, 6}}); }) == Errc::InvalidIndex);
  CHECK(catch_code([] { Mop(6, {{0, 2}, {0, 3}, {3, 3}}); }) == Errc::InvalidIndex);
  // {0,2} and {1,3} interleave
  CHECK(catch_code([] { Mop(6, {{0, 2}, {1, 3}, {0, 4}}); }) ==
        Errc::CrossingDiagonals);
  // boundary pairs and duplicates are not diagonals
  CHECK(catch_code([] { Mop(6, {{0, 1}, {0, 3}, {0, 4}}); }) ==
        Errc::CrossingDiagonals);
  CHECK(catch_code([] { Mop(6, {{0, 5}, {0, 3}, {0, 4}}); }) ==
        Errc::CrossingDiagonals);
  CHECK(catch_code([] { Mop(6, {{0, 2}, {0, 2}, {0, 4}}); }) ==
        Errc::CrossingDiagonals);
}

TEST_CASE("edge and face counts match the closed forms") {
  for (const Mop& g : small_corpus()) {
    int n = g.order();
    CHECK(static_cast<int>(edge_set(g).size()) == 2 * n - 3);
    auto faces = g.faces();
    CHECK(static_cast<int>(faces.size()) == n - 2);
    for (const auto& f : faces) {
      CHECK(g.has_edge(f[0], f[1]));
      CHECK(g.has_edge(f[1], f[2]));
      CHECK(g.has_edge(f[0], f[2]));
    }
  }
}

TEST_CASE("degree and neighborhood basics on the fan") {
  Mop f6 = fan(6);
  CHECK(f6.degree(0) == 5);
  CHECK(f6.degree(1) == 2);
  CHECK(f6.degree(2) == 3);
  CHECK(f6.neighbors(0) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(f6.neighbors(1) == std::vector<int>{0, 2});
  CHECK(catch_code([&] { f6.degree(6); }) == Errc::InvalidIndex);

  CHECK(closed_neighborhood(f6, {0}) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(closed_neighborhood(f6, {}).empty());
  CHECK(closed_neighborhood(f6, {1}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("isolation and domination predicates") {
  Mop f6 = fan(6);
  auto r1 = is_isolating(f6, {0}, 0);
  CHECK(r1.isolating);
  CHECK(r1.residual_max_degree == -1);
  auto r2 = is_isolating(f6, {}, 2);
  CHECK_FALSE(r2.isolating);
  CHECK(r2.residual_max_degree == 5);
  Mop t22 = family_T(2, 2);
  auto r3 = is_isolating(t22, {0}, 2);  // one fan copy keeps its center star
  CHECK_FALSE(r3.isolating);
  CHECK(r3.residual_max_degree >= 3);

  CHECK(is_dominating(f6, {0}));
  CHECK_FALSE(is_dominating(f6, {1}));
  CHECK(is_dominating(Mop(3, {}), {2}));
}

TEST_CASE("degree-2 vertices form a small independent set") {
  CHECK(degree2_vertices(fan(6)) == std::vector<int>{1, 5});
  CHECK(degree2_vertices(Mop(3, {})) == std::vector<int>{0, 1, 2});
  CHECK(degree2_vertices(family_T(2, 2)).size() == 2);

  for (const Mop& g : small_corpus()) {
    int n = g.order();
    auto v2 = degree2_vertices(g);
    int n2 = static_cast<int>(v2.size());
    CHECK(2 <= n2);
    CHECK(2 * n2 <= n);
    for (size_t i = 0; i < v2.size(); ++i)
      for (size_t j = i + 1; j < v2.size(); ++j)
        CHECK_FALSE(g.has_edge(v2[i], v2[j]));
    for (int v = 0; v < n; ++v) {
      CHECK(g.degree(v) >= 2);
      int low_neighbors = 0;
      for (int u : g.neighbors(v))
        if (g.degree(u) == 2) ++low_neighbors;
      CHECK(low_neighbors <= 2);
    }
  }
}

TEST_CASE("apex returns the third corner of incident triangles") {
  Mop f6 = fan(6);
  CHECK(apex(f6, Edge(0, 5)) == std::vector<int>{4});
  CHECK(apex(f6, Edge(0, 3)) == std::vector<int>{2, 4});
  CHECK(apex(Mop(3, {}), Edge(0, 1)) == std::vector<int>{2});
  CHECK(catch_code([&] { apex(f6, Edge(1, 3)); }) == Errc::NotAnEdge);
}

TEST_CASE("diagonal partition splits a fan into two fans") {
  Mop f6 = fan(6);
  DiagonalSplit s = diagonal_partition(f6, Edge(0, 3));
  CHECK(s.g1.order() == 4);
  CHECK(s.g2.order() == 4);
  CHECK(s.g1.diagonals() == std::vector<Edge>{Edge(0, 2)});
  CHECK(s.g2.diagonals() == std::vector<Edge>{Edge(1, 3)});
  // child labels walk the parent boundary
  CHECK(s.map1.to_parent == std::vector<int>{0, 1, 2, 3});
  CHECK(s.map2.to_parent == std::vector<int>{3, 4, 5, 0});

  DiagonalSplit s2 = diagonal_partition(f6, Edge(0, 2));
  CHECK(s2.g1.order() == 3);
  CHECK(s2.g2.order() == 5);
  CHECK(catch_code([&] { diagonal_partition(f6, Edge(0, 1)); }) ==
        Errc::NotADiagonal);
}

TEST_CASE("diagonal partition reassembles the parent exactly") {
  for (const Mop& g : small_corpus()) {
    for (const Edge& d : g.diagonals()) {
      DiagonalSplit s = diagonal_partition(g, d);
      CHECK(s.g1.order() + s.g2.order() == g.order() + 2);
      std::set<Edge> reassembled;
      auto lift = [](const Mop& child, const VertexMap& map, std::set<Edge>& out) {
        std::set<Edge> child_edges;
        int m = child.order();
        for (int v = 0; v < m; ++v) child_edges.insert(Edge(v, (v + 1) % m));
        for (const Edge& e : child.diagonals()) child_edges.insert(e);
        for (const Edge& e : child_edges)
          out.insert(Edge(map.to_parent[e.a], map.to_parent[e.b]));
      };
      lift(s.g1, s.map1, reassembled);
      lift(s.g2, s.map2, reassembled);
      CHECK(reassembled == edge_set(g));
    }
  }
}

TEST_CASE("splitting diagonal fixtures on fans") {
  auto [d1, l1] = splitting_diagonal(fan(10), 2);
  CHECK(d1 == Edge(0, 4));
  CHECK(l1 == 4);
  auto [d2, l2] = splitting_diagonal(fan(10), 3);
  CHECK(d2 == Edge(0, 5));
  CHECK(l2 == 5);
  CHECK(catch_code([&] { splitting_diagonal(fan(7), 2); }) == Errc::TooSmall);
}

TEST_CASE("splitting diagonal lands in the guaranteed range") {
  for (int r = 0; r <= 5; ++r) {
    for (int n = 2 * r + 4; n <= 2 * r + 20; ++n) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Mop g = random_mop(n, 77 * n + seed);
        auto [d, l] = splitting_diagonal(g, r);
        CHECK(r + 2 <= l);
        CHECK(l <= 2 * r + 2);
        // the cut really carries l boundary edges on one side
        int span = (d.b - d.a + n) % n;
        CHECK((span == l || n - span == l));
        if (span != 1 && n - span != 1) CHECK(g.is_diagonal(d.a, d.b));
      }
    }
  }
}

TEST_CASE("hamiltonian edge contraction shrinks by one") {
  Mop f6 = fan(6);
  auto [c1, m1] = contract_hamiltonian_edge(f6, Edge(4, 5));
  CHECK(c1.order() == 5);
  CHECK(c1.diagonals() == fan(5).diagonals());
  CHECK(m1.merged_parents == Edge(4, 5));

  Mop square(4, {{0, 2}});
  auto [c2, m2] = contract_hamiltonian_edge(square, Edge(2, 3));
  CHECK(c2.order() == 3);

  CHECK(catch_code([&] { contract_hamiltonian_edge(f6, Edge(0, 2)); }) ==
        Errc::NotABoundaryEdge);
  CHECK(catch_code([&] {
          contract_hamiltonian_edge(Mop(3, {}), Edge(0, 1));
        }) == Errc::TooSmall);

  for (const Mop& g : small_corpus()) {
    int n = g.order();
    for (int v = 0; v < n; ++v) {
      auto [c, m] = contract_hamiltonian_edge(g, Edge(v, (v + 1) % n));
      CHECK(c.order() == n - 1);  // construction validates the rest
      CHECK(m.merged_child >= 0);
      CHECK(m.parent_of(m.merged_child) >= 0);
    }
  }
}

TEST_CASE("degree-2 deletion and its preconditions") {
  Mop f6 = fan(6);
  auto [d1, m1] = delete_degree2_vertex(f6, 1);
  CHECK(d1.diagonals() == fan(5).diagonals());
  auto [d2, m2] = delete_degree2_vertex(f6, 5);
  CHECK(d2.diagonals() == fan(5).diagonals());
  CHECK(catch_code([&] { delete_degree2_vertex(f6, 0); }) == Errc::NotDegree2);
  CHECK(catch_code([&] { delete_degree2_vertex(Mop(3, {}), 0); }) ==
        Errc::TooSmall);

  for (const Mop& g : small_corpus()) {
    for (int v : degree2_vertices(g)) {
      auto [d, m] = delete_degree2_vertex(g, v);
      CHECK(d.order() == g.order() - 1);
      auto nb = g.neighbors(v);
      // the two neighbors stay adjacent after the removal
      int a = -1, b = -1;
      for (int c = 0; c < d.order(); ++c) {
        if (m.to_parent[c] == nb[0]) a = c;
        if (m.to_parent[c] == nb[1]) b = c;
      }
      REQUIRE(a >= 0);
      REQUIRE(b >= 0);
      CHECK(d.has_edge(a, b));
    }
  }
}

TEST_CASE("deleting every degree-2 vertex at once") {
  auto [g1, m1] = delete_all_degree2(fan(6));
  CHECK(g1.order() == 4);
  CHECK(m1.to_parent == std::vector<int>{0, 2, 3, 4});

  auto [g2, m2] = delete_all_degree2(family_M(3));
  CHECK(g2.order() == 6);

  // a single fan block has two free path ends, both degree 2
  auto [g3, m3] = delete_all_degree2(family_T(2, 1));
  CHECK(g3.order() == 4);

  CHECK(catch_code([] { delete_all_degree2(Mop(4, {{0, 2}})); }) ==
        Errc::TooSmall);
}

TEST_CASE("ear insertion round-trips with deletion") {
  auto [square, square_map] = add_ear(Mop(3, {}), Edge(0, 1));
  CHECK(square.order() == 4);
  CHECK(square.diagonals() == std::vector<Edge>{Edge(0, 2)});
  CHECK(catch_code([&s = square] { add_ear(s, Edge(0, 2)); }) ==
        Errc::NotABoundaryEdge);

  for (const Mop& g : small_corpus()) {
    int n = g.order();
    for (int v = 0; v < n; ++v) {
      Edge e(v, (v + 1) % n);
      auto [bigger, grow_map] = add_ear(g, e);
      CHECK(bigger.order() == n + 1);
      int inserted = (e.a == 0 && e.b == n - 1) ? n : e.a + 1;
      CHECK(bigger.degree(inserted) == 2);
      auto [back, m] = delete_degree2_vertex(bigger, inserted);
      CHECK(back.order() == n);
      CHECK(back.diagonals() == g.diagonals());
    }
  }
}

TEST_CASE("three-coloring is proper and trichromatic on faces") {
  CHECK(three_coloring(Mop(3, {})) == std::vector<int>{0, 1, 2});
  CHECK(three_coloring(fan(6)) == std::vector<int>{0, 2, 1, 2, 1, 2});

  for (const Mop& g : small_corpus()) {
    auto col = three_coloring(g);
    int n = g.order();
    for (int v = 0; v < n; ++v) {
      CHECK(0 <= col[v]);
      CHECK(col[v] <= 2);
      for (int u : g.neighbors(v)) CHECK(col[u] != col[v]);
    }
    for (const auto& f : g.faces())
      CHECK(col[f[0]] + col[f[1]] + col[f[2]] == 3);
  }
}

TEST_CASE("rotation and reflection relabel the boundary cycle") {
  Mop f6 = fan(6);
  auto [r, rm] = rotate_mop(f6, 2);  // old vertex 2 becomes vertex 0, center lands at 4
  CHECK(r.degree(4) == 5);
  CHECK(rm.to_parent[4] == 0);
  CHECK(r.order() == 6);
  auto [back, bm] = rotate_mop(r, 4);
  CHECK(back.diagonals() == f6.diagonals());

  auto [refl, fm] = reflect_mop(f6, 0);  // fixes vertex 0, the center
  CHECK(refl.diagonals() == f6.diagonals());

  for (const Mop& g : small_corpus()) {
    int n = g.order();
    Mop spun = g;
    for (int i = 0; i < n; ++i) spun = rotate_mop(spun, 1).first;
    CHECK(spun.diagonals() == g.diagonals());
    Mop once = reflect_mop(g, 3).first;
    Mop twice = reflect_mop(once, 3).first;
    CHECK(twice.diagonals() == g.diagonals());
  }
}
