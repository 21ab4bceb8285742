#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mopiso/error.hpp"

namespace mopiso {

// Diagonal/edge as an unordered vertex pair, stored with first < second.
struct Edge {
  int a = 0;
  int b = 0;
  Edge() = default;
  Edge(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}
  friend bool operator==(const Edge& l, const Edge& r) { return l.a == r.a && l.b == r.b; }
  friend bool operator!=(const Edge& l, const Edge& r) { return !(l == r); }
  friend bool operator<(const Edge& l, const Edge& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  }
};

// Triangulation of a convex polygon: Hamiltonian cycle 0..n-1 plus n-3
// pairwise non-crossing diagonals. Immutable after construction.
class Mop {
 public:
  Mop(int n, std::vector<Edge> diagonals);

  int order() const { return n_; }
  const std::vector<Edge>& diagonals() const { return diagonals_; }

  // Sorted neighbor list.
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;

  bool has_edge(int u, int v) const;
  bool is_boundary_edge(int u, int v) const;
  bool is_diagonal(int u, int v) const;

  // The n-2 triangular faces, each sorted ascending, listed in a
  // deterministic order (recursive split from the edge {0, n-1}).
  std::vector<std::array<int, 3>> faces() const;

  // Unique common neighbor of a and b strictly inside the arc a+1..b-1.
  // Requires {a,b} to be an edge with b-a >= 2, or the wrap edge {0,n-1}
  // (whose inside is 1..n-2).
  int apex_between(int a, int b) const;

  void check_vertex(int v) const;

 private:
  int n_;
  std::vector<Edge> diagonals_;
  std::vector<int> adj_offsets_;
  std::vector<int> adj_flat_;
  std::vector<std::vector<int>> adj_;
};

// Child-to-parent relabeling produced by the surgery operations.
// merged_child >= 0 marks a contraction: that child stands for both
// merged_parents endpoints; to_parent keeps the smaller of the two there.
struct VertexMap {
  std::vector<int> to_parent;
  int merged_child = -1;
  Edge merged_parents{0, 0};

  int parent_of(int child) const { return to_parent.at(static_cast<size_t>(child)); }
};

struct DiagonalSplit {
  Mop g1;         // side a..b, child c = parent a+c
  Mop g2;         // side b..a (wrapping), child c = parent (b+c) mod n
  VertexMap map1;
  VertexMap map2;
  Edge cut;
};

struct IsolationCheck {
  bool isolating = false;
  int residual_max_degree = -1;  // -1 when nothing survives
};

std::vector<int> degree2_vertices(const Mop& g);
std::vector<int> closed_neighborhood(const Mop& g, const std::vector<int>& set);
IsolationCheck is_isolating(const Mop& g, const std::vector<int>& set, int k);
bool is_dominating(const Mop& g, const std::vector<int>& set);

// Apex vertices of the triangle(s) leaning on an edge: one for a boundary
// edge, two for a diagonal. Sorted ascending.
std::vector<int> apex(const Mop& g, Edge e);

DiagonalSplit diagonal_partition(const Mop& g, Edge d);

// Smallest arc length p >= r+2 such that some chord {i, (i+p) mod n} is an
// edge; ties broken by smallest i. Returns the chord and p. Requires
// n >= 2r+4; the result satisfies p <= 2r+2.
std::pair<Edge, int> splitting_diagonal(const Mop& g, int r);

std::pair<Mop, VertexMap> contract_hamiltonian_edge(const Mop& g, Edge e);
std::pair<Mop, VertexMap> delete_degree2_vertex(const Mop& g, int v);
std::pair<Mop, VertexMap> delete_all_degree2(const Mop& g);
std::pair<Mop, VertexMap> add_ear(const Mop& g, Edge e);

// Proper 3-coloring; unique up to permuting colors. Normalized so that
// color(0) = 0 and color(n-1) = 2.
std::vector<int> three_coloring(const Mop& g);

// Relabelings: child c corresponds to parent (c+s) mod n, respectively
// parent (s-c) mod n. Both return valid mops on the same vertex count.
std::pair<Mop, VertexMap> rotate_mop(const Mop& g, int s);
std::pair<Mop, VertexMap> reflect_mop(const Mop& g, int s);

}  // namespace mopiso
