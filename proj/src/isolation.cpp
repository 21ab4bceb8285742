#include "mopiso/isolation.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace mopiso {

const char* bound_name_str(BoundName b) {
  switch (b) {
    case BoundName::ORDER: return "ORDER";
    case BoundName::ORDER_PLUS_N2: return "ORDER_PLUS_N2";
    case BoundName::ORDER_MINUS_N2: return "ORDER_MINUS_N2";
    case BoundName::BEST: return "BEST";
    case BoundName::DOM_THIRD: return "DOM_THIRD";
    case BoundName::DOM_HALF: return "DOM_HALF";
  }
  return "?";
}

std::vector<int> isolate_small(const Mop& g, int k) {
  require(k >= 0, Errc::BadParams, "k = " + std::to_string(k));
  int n = g.order();
  require(n <= 2 * k + 7, Errc::TooLarge,
          "order " + std::to_string(n) + " above 2k+7 for k = " + std::to_string(k));
  if (is_isolating(g, {}, k).isolating) return {};
  for (int v = 0; v < n; ++v)
    if (is_isolating(g, {v}, k).isolating) return {v};
  internal_fail("no single vertex isolates an order-" + std::to_string(n) + " mop");
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// State of the splitting phase: the working mop, its vertex translation back
// to the caller's coordinates, the cut {0, ell}, and the apex j0 of the
// triangle leaning on the cut from inside.
struct CutState {
  Mop g;
  std::vector<int> to_caller;
  int ell = 0;
  int j0 = 0;
};

void trace_put(std::vector<TraceStep>& tr, int depth, const std::string& tag, int a = -1,
               int b = -1, int apexv = -1) {
  tr.push_back(TraceStep{depth, tag, a, b, apexv});
}

// Finds a short splitting chord and refines it until either ell == k+4 or
// the inside apex j0 lands in [ell-k-3, k+3]. Rotations are folded into
// to_caller. Used identically by the order and plus recursions.
CutState prepare_cut(const Mop& g0, int k, int depth, std::vector<TraceStep>& tr) {
  int n = g0.order();
  auto [chord, p] = splitting_diagonal(g0, k + 2);
  int start = (chord.b - chord.a == p) ? chord.a : chord.b;
  trace_put(tr, depth, "split", chord.a, chord.b, -1);

  CutState st{rotate_mop(g0, start).first, {}, p, 0};
  st.to_caller.resize(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) st.to_caller[static_cast<size_t>(c)] = (c + start) % n;

  for (;;) {
    // Invariant: k+4 <= ell <= 2k+6 and {0, ell} is an edge.
    st.j0 = st.g.apex_between(0, st.ell);
    if (st.ell == k + 4) break;
    int t = st.ell - (k + 4);
    if (st.j0 >= k + 4) {
      // Shrink from the right: the cut becomes {0, j0}.
      trace_put(tr, depth, "refine-left", 0, st.ell, st.j0);
      st.ell = st.j0;
      continue;
    }
    if (st.j0 <= t) {
      // Shrink from the left: the cut becomes {j0, ell}; rotate it to 0.
      trace_put(tr, depth, "refine-right", 0, st.ell, st.j0);
      auto [gr, vr] = rotate_mop(st.g, st.j0);
      std::vector<int> comp(st.to_caller.size());
      for (size_t c = 0; c < comp.size(); ++c)
        comp[c] = st.to_caller[static_cast<size_t>(vr.to_parent[c])];
      st.g = std::move(gr);
      st.to_caller = std::move(comp);
      st.ell -= st.j0;
      continue;
    }
    break;  // j0 in [t+1, k+3] with ell >= k+5
  }
  return st;
}

std::vector<int> lift(const std::vector<int>& set, const VertexMap& vm) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int s : set) out.push_back(vm.parent_of(s));
  return out;
}

std::vector<int> lift(const std::vector<int>& set, const std::vector<int>& to_caller) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int s : set) out.push_back(to_caller[static_cast<size_t>(s)]);
  return out;
}

std::vector<int> order_rec(const Mop& g, int k, int depth, std::vector<TraceStep>& tr) {
  int n = g.order();
  if (n <= 2 * k + 7) {
    trace_put(tr, depth, "small", -1, -1, -1);
    return isolate_small(g, k);
  }

  CutState st = prepare_cut(g, k, depth, tr);
  const Mop& h = st.g;
  int ell = st.ell, j0 = st.j0;

  if (ell >= k + 5) {
    // The guard j0 clears the whole inside of the cut; recurse outside.
    DiagonalSplit sp = diagonal_partition(h, Edge(0, ell));
    trace_put(tr, depth, "tail", 0, ell, j0);
    if (sp.g2.order() <= k + 3) {
      trace_put(tr, depth, "tail-leaf", 0, ell, j0);
      return lift({j0}, st.to_caller);
    }
    std::vector<int> sub = order_rec(sp.g2, k, depth + 1, tr);
    std::vector<int> res = lift(sub, sp.map2);
    res.push_back(j0);
    return lift(sorted_unique(std::move(res)), st.to_caller);
  }

  // ell == k+4: glue the cut endpoints together and recurse on the outside.
  DiagonalSplit sp = diagonal_partition(h, Edge(0, k + 4));
  int m2 = sp.g2.order();
  auto [gc, vc] = contract_hamiltonian_edge(sp.g2, Edge(0, m2 - 1));
  trace_put(tr, depth, "contract", 0, k + 4, j0);
  std::vector<int> sub = order_rec(gc, k, depth + 1, tr);

  std::vector<int> res;
  bool has_merged = false;
  for (int s : sub) {
    if (s == vc.merged_child) {
      has_merged = true;
      continue;
    }
    res.push_back(sp.map2.parent_of(vc.parent_of(s)));
  }
  if (has_merged) {
    // The merged vertex stands for both cut endpoints; take them both and
    // drop the inside guard, which they cover between them.
    res.push_back(0);
    res.push_back(k + 4);
  } else {
    res.push_back(j0);
  }
  return lift(sorted_unique(std::move(res)), st.to_caller);
}

std::vector<int> plus_rec(const Mop& g, int k, int depth, std::vector<TraceStep>& tr) {
  int n = g.order();
  if (n <= 2 * k + 7) {
    trace_put(tr, depth, "small", -1, -1, -1);
    return isolate_small(g, k);
  }

  CutState st = prepare_cut(g, k, depth, tr);
  int ell = st.ell, j0 = st.j0;

  if (ell >= k + 5) {
    DiagonalSplit sp = diagonal_partition(st.g, Edge(0, ell));
    trace_put(tr, depth, "tail", 0, ell, j0);
    if (sp.g2.order() <= k + 3) {
      trace_put(tr, depth, "tail-leaf", 0, ell, j0);
      return lift({j0}, st.to_caller);
    }
    std::vector<int> sub = plus_rec(sp.g2, k, depth + 1, tr);
    std::vector<int> res = lift(sub, sp.map2);
    res.push_back(j0);
    return lift(sorted_unique(std::move(res)), st.to_caller);
  }

  // ell == k+4. How the outside is shrunk depends on the degrees of the two
  // cut endpoints within the outside part.
  DiagonalSplit sp = diagonal_partition(st.g, Edge(0, k + 4));
  int m2 = sp.g2.order();
  int deg_low = sp.g2.degree(m2 - 1);  // endpoint 0 of the cut
  int deg_high = sp.g2.degree(0);      // endpoint k+4 of the cut
  if (deg_low + deg_high < 5) internal_fail("cut endpoint degree sum below 5");

  if (deg_low + deg_high == 5) {
    // One endpoint is a leaf of the outside part; deleting it makes the
    // other one a leaf too. Remove both and recurse.
    int first = deg_high == 2 ? 0 : m2 - 1;
    int second = deg_high == 2 ? m2 - 1 : 0;
    auto [h1, d1] = delete_degree2_vertex(sp.g2, first);
    int second1 = second - (second > first ? 1 : 0);
    if (h1.degree(second1) != 2) internal_fail("second cut endpoint kept degree > 2");
    auto [h2, d2] = delete_degree2_vertex(h1, second1);
    trace_put(tr, depth, "plus-delete-pair", 0, k + 4, j0);
    std::vector<int> sub = plus_rec(h2, k, depth + 1, tr);
    std::vector<int> res;
    for (int s : sub) res.push_back(sp.map2.parent_of(d1.parent_of(d2.parent_of(s))));
    res.push_back(j0);
    return lift(sorted_unique(std::move(res)), st.to_caller);
  }

  // Degree sum >= 6: contraction keeps the merged vertex at degree >= 3.
  auto [gc, vc] = contract_hamiltonian_edge(sp.g2, Edge(0, m2 - 1));
  if (gc.degree(vc.merged_child) < 3) internal_fail("merged vertex degree below 3");

  // A vertex that drops to degree 2 only through the contraction would spoil
  // the degree-2 count of the subproblem.
  std::vector<int> fresh;
  for (int c = 0; c < gc.order(); ++c) {
    if (c == vc.merged_child || gc.degree(c) != 2) continue;
    int parent = sp.map2.parent_of(vc.parent_of(c));
    if (st.g.degree(parent) != 2) fresh.push_back(parent);
  }

  if (fresh.empty()) {
    trace_put(tr, depth, "plus-contract", 0, k + 4, j0);
    std::vector<int> sub = plus_rec(gc, k, depth + 1, tr);
    std::vector<int> res;
    bool has_merged = false;
    for (int s : sub) {
      if (s == vc.merged_child) {
        has_merged = true;
        continue;
      }
      res.push_back(sp.map2.parent_of(vc.parent_of(s)));
    }
    if (has_merged) {
      res.push_back(0);
      res.push_back(k + 4);
    } else {
      res.push_back(j0);
    }
    return lift(sorted_unique(std::move(res)), st.to_caller);
  }

  // The fresh degree-2 vertex sits next to the cut, on one of its two sides.
  for (int parent : fresh)
    if (parent != k + 5 && parent != n - 1)
      internal_fail("fresh degree-2 vertex away from the cut");
  bool at_low_side = std::find(fresh.begin(), fresh.end(), k + 5) != fresh.end();
  if (!at_low_side) {
    // Mirror the mop across the cut so the fresh vertex lands on k+5.
    trace_put(tr, depth, "plus-reflect", 0, k + 4, j0);
    auto [gm, vm] = reflect_mop(st.g, k + 4);
    std::vector<int> comp(st.to_caller.size());
    for (size_t c = 0; c < comp.size(); ++c)
      comp[c] = st.to_caller[static_cast<size_t>(vm.to_parent[c])];
    st.g = std::move(gm);
    st.to_caller = std::move(comp);
    j0 = k + 4 - j0;
  }

  // Cut one vertex deeper instead: {0, k+6} is always an edge here, and the
  // far side drops k+5 vertices at once.
  if (!st.g.is_diagonal(0, k + 6)) internal_fail("expected chord {0, k+6}");
  DiagonalSplit sp2 = diagonal_partition(st.g, Edge(0, k + 6));
  trace_put(tr, depth, "plus-resplit", 0, k + 6, j0);
  std::vector<int> sub = plus_rec(sp2.g2, k, depth + 1, tr);
  std::vector<int> res = lift(sub, sp2.map2);
  res.push_back(j0 == 1 ? k + 4 : 0);
  return lift(sorted_unique(std::move(res)), st.to_caller);
}

BoundedSolution finish_isolating(const Mop& g, int k, BoundName name, Rational bound,
                                 bool applicable, std::vector<int> set,
                                 std::vector<TraceStep> tr) {
  BoundedSolution sol;
  sol.set = sorted_unique(std::move(set));
  sol.k = k;
  sol.bound_name = name;
  sol.bound_value = bound;
  sol.bound_applicable = applicable;
  sol.bound_respected = !applicable || sol.size() <= bound.floor();
  sol.trace = std::move(tr);
  IsolationCheck chk = is_isolating(g, sol.set, k);
  if (!chk.isolating)
    internal_fail("computed set is not isolating, residual max degree " +
                  std::to_string(chk.residual_max_degree));
  return sol;
}

}  // namespace

BoundedSolution isolate_order(const Mop& g, int k) {
  require(k >= 0, Errc::BadParams, "k = " + std::to_string(k));
  int n = g.order();
  std::vector<TraceStep> tr;
  std::vector<int> set = order_rec(g, k, 0, tr);
  return finish_isolating(g, k, BoundName::ORDER, Rational(n, k + 4), n >= k + 4,
                          std::move(set), std::move(tr));
}

BoundedSolution isolate_order_plus_n2(const Mop& g, int k) {
  require(k >= 0, Errc::BadParams, "k = " + std::to_string(k));
  int n = g.order();
  int n2 = static_cast<int>(degree2_vertices(g).size());
  std::vector<TraceStep> tr;
  std::vector<int> set = plus_rec(g, k, 0, tr);
  return finish_isolating(g, k, BoundName::ORDER_PLUS_N2, Rational(n + n2, k + 5),
                          n >= k + 3, std::move(set), std::move(tr));
}

BoundedSolution isolate_order_minus_n2(const Mop& g, int k) {
  require(k >= 1, Errc::KTooSmall, "k = " + std::to_string(k));
  int n = g.order();
  require(n >= 2 * k + 3, Errc::TooSmall,
          "order " + std::to_string(n) + " below 2k+3 for k = " + std::to_string(k));
  int n2 = static_cast<int>(degree2_vertices(g).size());

  std::vector<TraceStep> tr;
  auto [core, vm] = delete_all_degree2(g);
  std::vector<int> sub;
  if (k == 1) {
    // Dominating the core isolates stars in the full mop.
    trace_put(tr, 0, "minus-dominate", -1, -1, -1);
    sub = dominate_third(core).set;
  } else {
    trace_put(tr, 0, "minus-recurse", -1, -1, -1);
    std::vector<TraceStep> sub_tr;
    sub = order_rec(core, k - 2, 1, sub_tr);
    for (TraceStep& s : sub_tr) tr.push_back(std::move(s));
  }
  std::vector<int> set = lift(sub, vm);
  return finish_isolating(g, k, BoundName::ORDER_MINUS_N2, Rational(n - n2, k + 2), true,
                          std::move(set), std::move(tr));
}

BoundedSolution isolate_best(const Mop& g, int k) {
  require(k >= 0, Errc::BadParams, "k = " + std::to_string(k));
  int n = g.order();

  std::vector<BoundedSolution> runs;
  runs.push_back(isolate_order(g, k));
  runs.push_back(isolate_order_plus_n2(g, k));
  if (k >= 1 && n >= 2 * k + 3) runs.push_back(isolate_order_minus_n2(g, k));

  size_t win = 0;
  for (size_t i = 1; i < runs.size(); ++i)
    if (runs[i].size() < runs[win].size()) win = i;

  BoundedSolution sol = runs[win];
  sol.bound_name = BoundName::BEST;
  bool any = false;
  Rational best_bound;
  for (const BoundedSolution& r : runs) {
    if (!r.bound_applicable) continue;
    if (!any || r.bound_value < best_bound) best_bound = r.bound_value;
    any = true;
  }
  sol.bound_applicable = any;
  sol.bound_value = any ? best_bound : Rational(n, k + 4);
  sol.bound_respected = !any || sol.size() <= best_bound.floor();
  return sol;
}

BoundedSolution dominate_third(const Mop& g) {
  int n = g.order();
  std::vector<int> col = three_coloring(g);
  std::array<std::vector<int>, 3> classes;
  for (int v = 0; v < n; ++v) classes[static_cast<size_t>(col[static_cast<size_t>(v)])].push_back(v);
  size_t win = 0;
  for (size_t c = 1; c < 3; ++c)
    if (classes[c].size() < classes[win].size()) win = c;

  BoundedSolution sol;
  sol.set = classes[win];
  sol.k = -1;
  sol.bound_name = BoundName::DOM_THIRD;
  sol.bound_value = Rational(n, 3);
  sol.bound_applicable = true;
  sol.bound_respected = sol.size() <= sol.bound_value.floor();
  if (!is_dominating(g, sol.set)) internal_fail("color class fails to dominate");
  return sol;
}

BoundedSolution dominate_half_minus(const Mop& g) {
  int n = g.order();
  require(n >= 4, Errc::TooSmall, "order " + std::to_string(n));

  std::vector<int> surv;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 3) surv.push_back(v);
  int m = static_cast<int>(surv.size());
  int n2 = n - m;

  // Consecutive survivors are always adjacent: the gap between them is at
  // most one degree-2 vertex, whose chord bridges them.
  std::vector<int> gap(static_cast<size_t>(m));
  for (int q = 0; q < m; ++q) {
    int d = (surv[static_cast<size_t>((q + 1) % m)] - surv[static_cast<size_t>(q)] + n) % n;
    if (d < 1 || d > 2) internal_fail("survivor gap of width " + std::to_string(d));
    gap[static_cast<size_t>(q)] = d;
  }

  std::vector<int> set;
  bool respected = true;
  if (m % 2 == 0) {
    for (int q = 1; q < m; q += 2) set.push_back(surv[static_cast<size_t>(q)]);
  } else {
    int free_gap = -1;
    for (int q = 0; q < m; ++q)
      if (gap[static_cast<size_t>(q)] == 1) {
        free_gap = q;
        break;
      }
    if (free_gap >= 0) {
      // Leave exactly the pendant-free survivor pair unpicked.
      for (int i = 1; i <= (m - 1) / 2; ++i)
        set.push_back(surv[static_cast<size_t>((free_gap + 2 * i) % m)]);
    } else {
      // Every survivor pair guards a pendant, so the pairs need a full
      // vertex cover of the survivor cycle: one vertex more than the target.
      for (int q = 1; q < m - 1; q += 2) set.push_back(surv[static_cast<size_t>(q)]);
      set.push_back(surv[static_cast<size_t>(m - 1)]);
      respected = false;
    }
  }

  BoundedSolution sol;
  sol.set = sorted_unique(std::move(set));
  sol.k = -1;
  sol.bound_name = BoundName::DOM_HALF;
  sol.bound_value = Rational(n - n2, 2);
  sol.bound_applicable = true;
  sol.bound_respected = respected && sol.size() <= sol.bound_value.floor();
  if (!is_dominating(g, sol.set)) internal_fail("survivor selection fails to dominate");
  return sol;
}

}  // namespace mopiso
