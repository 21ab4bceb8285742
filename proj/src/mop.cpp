#include "mopiso/mop.hpp"

#include <algorithm>
#include <string>

namespace mopiso {

namespace {

std::string edge_str(Edge e) {
  return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

// Chords of a convex polygon are non-crossing iff, with endpoints sorted and
// the list ordered by (a asc, b desc), every chord nests inside the open
// chord on top of the stack. Sharing an endpoint never counts as a crossing.
void check_noncrossing(const std::vector<Edge>& sorted_desc) {
  std::vector<Edge> stack;
  for (const Edge& d : sorted_desc) {
    while (!stack.empty() && stack.back().b <= d.a) stack.pop_back();
    if (!stack.empty() && stack.back().b < d.b)
      throw Error(Errc::CrossingDiagonals,
                  edge_str(stack.back()) + " crosses " + edge_str(d));
    stack.push_back(d);
  }
}

}  // namespace

Mop::Mop(int n, std::vector<Edge> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
  require(n_ >= 3, Errc::TooFewVertices, "order " + std::to_string(n_));
  require(static_cast<int>(diagonals_.size()) == n_ - 3, Errc::WrongDiagonalCount,
          std::to_string(diagonals_.size()) + " diagonals for order " + std::to_string(n_));
  for (const Edge& d : diagonals_) {
    require(d.a >= 0 && d.b < n_, Errc::InvalidIndex, edge_str(d));
    require(d.a != d.b, Errc::InvalidIndex, edge_str(d));
    // A chord along the boundary cannot belong to a diagonal set.
    require(d.b - d.a >= 2 && !(d.a == 0 && d.b == n_ - 1), Errc::CrossingDiagonals,
            edge_str(d) + " is a boundary chord");
  }
  std::sort(diagonals_.begin(), diagonals_.end(), [](const Edge& l, const Edge& r) {
    return l.a != r.a ? l.a < r.a : l.b > r.b;
  });
  for (size_t i = 1; i < diagonals_.size(); ++i)
    require(diagonals_[i] != diagonals_[i - 1], Errc::CrossingDiagonals,
            "duplicate " + edge_str(diagonals_[i]));
  check_noncrossing(diagonals_);
  std::sort(diagonals_.begin(), diagonals_.end());

  adj_.assign(static_cast<size_t>(n_), {});
  for (int v = 0; v < n_; ++v) {
    adj_[static_cast<size_t>(v)].push_back((v + 1) % n_);
    adj_[static_cast<size_t>(v)].push_back((v + n_ - 1) % n_);
  }
  for (const Edge& d : diagonals_) {
    adj_[static_cast<size_t>(d.a)].push_back(d.b);
    adj_[static_cast<size_t>(d.b)].push_back(d.a);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

void Mop::check_vertex(int v) const {
  require(v >= 0 && v < n_, Errc::InvalidIndex, "vertex " + std::to_string(v));
}

const std::vector<int>& Mop::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<size_t>(v)];
}

int Mop::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Mop::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& row = adj_[static_cast<size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

bool Mop::is_boundary_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Edge e(u, v);
  return e.b - e.a == 1 || (e.a == 0 && e.b == n_ - 1);
}

bool Mop::is_diagonal(int u, int v) const { return has_edge(u, v) && !is_boundary_edge(u, v); }

int Mop::apex_between(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  Edge e(a, b);
  require(has_edge(a, b), Errc::NotAnEdge, edge_str(e));
  int lo = e.a, hi = e.b;
  if (e.a == 0 && e.b == n_ - 1) {
    lo = 0;
    hi = n_ - 1;
  } else {
    require(e.b - e.a >= 2, Errc::NotAnEdge, edge_str(e) + " has empty inside");
  }
  const auto& ra = adj_[static_cast<size_t>(lo)];
  const auto& rb = adj_[static_cast<size_t>(hi)];
  int found = -1;
  size_t i = 0, j = 0;
  while (i < ra.size() && j < rb.size()) {
    if (ra[i] < rb[j]) {
      ++i;
    } else if (ra[i] > rb[j]) {
      ++j;
    } else {
      int c = ra[i];
      if (c > lo && c < hi) {
        if (found != -1) internal_fail("two apexes inside " + edge_str(e));
        found = c;
      }
      ++i;
      ++j;
    }
  }
  if (found == -1) internal_fail("no apex inside " + edge_str(e));
  return found;
}

std::vector<std::array<int, 3>> Mop::faces() const {
  std::vector<std::array<int, 3>> out;
  out.reserve(static_cast<size_t>(n_ - 2));
  std::vector<std::pair<int, int>> todo;
  todo.emplace_back(0, n_ - 1);
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    int c = apex_between(a, b);
    out.push_back({a, c, b});
    if (b - c >= 2) todo.emplace_back(c, b);
    if (c - a >= 2) todo.emplace_back(a, c);
  }
  if (static_cast<int>(out.size()) != n_ - 2) internal_fail("face count mismatch");
  return out;
}

std::vector<int> degree2_vertices(const Mop& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 2) out.push_back(v);
  return out;
}

std::vector<int> closed_neighborhood(const Mop& g, const std::vector<int>& set) {
  std::vector<char> in(static_cast<size_t>(g.order()), 0);
  for (int v : set) {
    g.check_vertex(v);
    in[static_cast<size_t>(v)] = 1;
    for (int u : g.neighbors(v)) in[static_cast<size_t>(u)] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (in[static_cast<size_t>(v)]) out.push_back(v);
  return out;
}

IsolationCheck is_isolating(const Mop& g, const std::vector<int>& set, int k) {
  require(k >= 0, Errc::BadParams, "k = " + std::to_string(k));
  std::vector<char> removed(static_cast<size_t>(g.order()), 0);
  for (int v : set) {
    g.check_vertex(v);
    removed[static_cast<size_t>(v)] = 1;
    for (int u : g.neighbors(v)) removed[static_cast<size_t>(u)] = 1;
  }
  int max_deg = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (removed[static_cast<size_t>(v)]) continue;
    int d = 0;
    for (int u : g.neighbors(v))
      if (!removed[static_cast<size_t>(u)]) ++d;
    max_deg = std::max(max_deg, d);
  }
  return {max_deg <= k, max_deg};
}

bool is_dominating(const Mop& g, const std::vector<int>& set) {
  return static_cast<int>(closed_neighborhood(g, set).size()) == g.order();
}

std::vector<int> apex(const Mop& g, Edge e) {
  g.check_vertex(e.a);
  g.check_vertex(e.b);
  require(g.has_edge(e.a, e.b), Errc::NotAnEdge, edge_str(e));
  std::vector<int> out;
  const auto& ra = g.neighbors(e.a);
  for (int c : ra)
    if (c != e.b && g.has_edge(c, e.b)) out.push_back(c);
  // A boundary edge borders one triangle, a diagonal two.
  size_t expect = g.is_boundary_edge(e.a, e.b) ? 1 : 2;
  if (out.size() != expect) internal_fail("apex count on " + edge_str(e));
  return out;
}

DiagonalSplit diagonal_partition(const Mop& g, Edge d) {
  g.check_vertex(d.a);
  g.check_vertex(d.b);
  require(g.is_diagonal(d.a, d.b), Errc::NotADiagonal, edge_str(d));
  int n = g.order();
  int m1 = d.b - d.a + 1;
  int m2 = n - (d.b - d.a) + 1;

  std::vector<Edge> d1, d2;
  for (const Edge& e : g.diagonals()) {
    if (e == d) continue;  // becomes the wrap boundary edge of both sides
    if (e.a >= d.a && e.b <= d.b) {
      d1.emplace_back(e.a - d.a, e.b - d.a);
    } else {
      // No diagonal crosses d, so both endpoints lie on the other side.
      auto relabel = [&](int v) { return v >= d.b ? v - d.b : v + (n - d.b); };
      d2.emplace_back(relabel(e.a), relabel(e.b));
    }
  }

  VertexMap map1, map2;
  map1.to_parent.resize(static_cast<size_t>(m1));
  for (int c = 0; c < m1; ++c) map1.to_parent[static_cast<size_t>(c)] = d.a + c;
  map2.to_parent.resize(static_cast<size_t>(m2));
  for (int c = 0; c < m2; ++c) map2.to_parent[static_cast<size_t>(c)] = (d.b + c) % n;

  return DiagonalSplit{Mop(m1, std::move(d1)), Mop(m2, std::move(d2)),
                       std::move(map1), std::move(map2), d};
}

std::pair<Edge, int> splitting_diagonal(const Mop& g, int r) {
  int n = g.order();
  require(r >= 0, Errc::BadParams, "r = " + std::to_string(r));
  require(n >= 2 * r + 4, Errc::TooSmall,
          "order " + std::to_string(n) + " below 2r+4 for r = " + std::to_string(r));
  for (int p = r + 2; p <= 2 * r + 2; ++p) {
    for (int i = 0; i < n; ++i) {
      if (g.has_edge(i, (i + p) % n)) return {Edge(i, (i + p) % n), p};
    }
  }
  internal_fail("no splitting chord with arc in [r+2, 2r+2]");
}

namespace {

// Shared tail of the contraction/deletion surgeries: relabel the surviving
// diagonals, drop those that turned into boundary edges, dedupe merged pairs.
Mop rebuild(int m, std::vector<Edge> diags) {
  std::vector<Edge> keep;
  std::sort(diags.begin(), diags.end());
  for (const Edge& e : diags) {
    if (e.a == e.b) continue;
    if (e.b - e.a == 1 || (e.a == 0 && e.b == m - 1)) continue;
    if (!keep.empty() && keep.back() == e) continue;
    keep.push_back(e);
  }
  return Mop(m, std::move(keep));
}

}  // namespace

std::pair<Mop, VertexMap> contract_hamiltonian_edge(const Mop& g, Edge e) {
  int n = g.order();
  require(n >= 4, Errc::TooSmall, "order " + std::to_string(n));
  require(g.is_boundary_edge(e.a, e.b), Errc::NotABoundaryEdge, edge_str(e));

  int m = n - 1;
  VertexMap vm;
  vm.merged_parents = e;
  std::vector<int> parent_to_child(static_cast<size_t>(n));
  if (e.a == 0 && e.b == n - 1) {
    vm.merged_child = 0;
    for (int v = 0; v < n - 1; ++v) parent_to_child[static_cast<size_t>(v)] = v;
    parent_to_child[static_cast<size_t>(n - 1)] = 0;
  } else {
    vm.merged_child = e.a;
    for (int v = 0; v < n; ++v)
      parent_to_child[static_cast<size_t>(v)] = v <= e.a ? v : v - 1;
  }
  vm.to_parent.resize(static_cast<size_t>(m));
  for (int v = n - 1; v >= 0; --v)
    vm.to_parent[static_cast<size_t>(parent_to_child[static_cast<size_t>(v)])] = v;
  vm.to_parent[static_cast<size_t>(vm.merged_child)] = e.a;

  std::vector<Edge> diags;
  for (const Edge& d : g.diagonals())
    diags.emplace_back(parent_to_child[static_cast<size_t>(d.a)],
                       parent_to_child[static_cast<size_t>(d.b)]);
  return {rebuild(m, std::move(diags)), std::move(vm)};
}

std::pair<Mop, VertexMap> delete_degree2_vertex(const Mop& g, int v) {
  int n = g.order();
  g.check_vertex(v);
  require(n >= 4, Errc::TooSmall, "order " + std::to_string(n));
  require(g.degree(v) == 2, Errc::NotDegree2,
          "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));

  VertexMap vm;
  vm.to_parent.resize(static_cast<size_t>(n - 1));
  for (int p = 0; p < n; ++p) {
    if (p == v) continue;
    vm.to_parent[static_cast<size_t>(p < v ? p : p - 1)] = p;
  }
  std::vector<Edge> diags;
  for (const Edge& d : g.diagonals())
    diags.emplace_back(d.a < v ? d.a : d.a - 1, d.b < v ? d.b : d.b - 1);
  return {rebuild(n - 1, std::move(diags)), std::move(vm)};
}

std::pair<Mop, VertexMap> delete_all_degree2(const Mop& g) {
  int n = g.order();
  std::vector<int> v2 = degree2_vertices(g);
  int m = n - static_cast<int>(v2.size());
  require(m >= 3, Errc::TooSmall,
          "only " + std::to_string(m) + " vertices would remain");

  std::vector<int> new_index(static_cast<size_t>(n), -1);
  VertexMap vm;
  int next = 0;
  for (int p = 0; p < n; ++p) {
    if (g.degree(p) == 2) continue;
    new_index[static_cast<size_t>(p)] = next++;
    vm.to_parent.push_back(p);
  }
  // Degree-2 vertices are pairwise non-adjacent, so no diagonal touches one.
  std::vector<Edge> diags;
  for (const Edge& d : g.diagonals())
    diags.emplace_back(new_index[static_cast<size_t>(d.a)],
                       new_index[static_cast<size_t>(d.b)]);
  return {rebuild(m, std::move(diags)), std::move(vm)};
}

std::pair<Mop, VertexMap> add_ear(const Mop& g, Edge e) {
  int n = g.order();
  require(g.is_boundary_edge(e.a, e.b), Errc::NotABoundaryEdge, edge_str(e));

  VertexMap vm;
  std::vector<Edge> diags;
  if (e.a == 0 && e.b == n - 1) {
    // New vertex goes at the end; the old wrap edge becomes a diagonal.
    vm.to_parent.resize(static_cast<size_t>(n + 1));
    for (int v = 0; v < n; ++v) vm.to_parent[static_cast<size_t>(v)] = v;
    vm.to_parent[static_cast<size_t>(n)] = -1;
    diags = g.diagonals();
    diags.emplace_back(0, n - 1);
  } else {
    // New vertex takes index e.a+1; everything at or above shifts up.
    vm.to_parent.resize(static_cast<size_t>(n + 1));
    for (int v = 0; v <= e.a; ++v) vm.to_parent[static_cast<size_t>(v)] = v;
    vm.to_parent[static_cast<size_t>(e.a + 1)] = -1;
    for (int v = e.a + 1; v < n; ++v) vm.to_parent[static_cast<size_t>(v + 1)] = v;
    auto shift = [&](int v) { return v <= e.a ? v : v + 1; };
    for (const Edge& d : g.diagonals()) diags.emplace_back(shift(d.a), shift(d.b));
    diags.emplace_back(e.a, e.a + 2);
  }
  return {Mop(n + 1, std::move(diags)), std::move(vm)};
}

std::vector<int> three_coloring(const Mop& g) {
  int n = g.order();
  std::vector<int> col(static_cast<size_t>(n), -1);
  col[0] = 0;
  col[static_cast<size_t>(n - 1)] = 2;
  std::vector<std::pair<int, int>> todo;
  todo.emplace_back(0, n - 1);
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    int c = g.apex_between(a, b);
    col[static_cast<size_t>(c)] =
        3 - col[static_cast<size_t>(a)] - col[static_cast<size_t>(b)];
    if (c - a >= 2) todo.emplace_back(a, c);
    if (b - c >= 2) todo.emplace_back(c, b);
  }
  for (int v = 0; v < n; ++v)
    if (col[static_cast<size_t>(v)] < 0) internal_fail("uncolored vertex");
  return col;
}

std::pair<Mop, VertexMap> rotate_mop(const Mop& g, int s) {
  int n = g.order();
  s = ((s % n) + n) % n;
  VertexMap vm;
  vm.to_parent.resize(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) vm.to_parent[static_cast<size_t>(c)] = (c + s) % n;
  std::vector<Edge> diags;
  for (const Edge& d : g.diagonals())
    diags.emplace_back((d.a - s + n) % n, (d.b - s + n) % n);
  return {Mop(n, std::move(diags)), std::move(vm)};
}

std::pair<Mop, VertexMap> reflect_mop(const Mop& g, int s) {
  int n = g.order();
  s = ((s % n) + n) % n;
  VertexMap vm;
  vm.to_parent.resize(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) vm.to_parent[static_cast<size_t>(c)] = (s - c + n) % n;
  std::vector<Edge> diags;
  for (const Edge& d : g.diagonals())
    diags.emplace_back((s - d.a + n) % n, (s - d.b + n) % n);
  return {Mop(n, std::move(diags)), std::move(vm)};
}

}  // namespace mopiso
