#include "mopiso/polygon.hpp"

#include <algorithm>
#include <string>

namespace mopiso {

namespace {

using int128 = __int128;

int128 cross(const Point& o, const Point& a, const Point& b) {
  return static_cast<int128>(a.x - o.x) * (b.y - o.y) -
         static_cast<int128>(a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

int sign(int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Proper or improper intersection of closed segments.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  int d1 = sign(cross(c, d, a));
  int d2 = sign(cross(c, d, b));
  int d3 = sign(cross(a, b, c));
  int d4 = sign(cross(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return on_segment(c, d, a) || on_segment(c, d, b) || on_segment(a, b, c) ||
         on_segment(a, b, d);
}

// Closed triangle membership for a counterclockwise triangle.
bool in_triangle_closed(const Point& a, const Point& b, const Point& c, const Point& p) {
  return cross(a, b, p) >= 0 && cross(b, c, p) >= 0 && cross(c, a, p) >= 0;
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) { return sign(cross(a, b, c)); }

SimplePolygon::SimplePolygon(std::vector<Point> corners) : corners_(std::move(corners)) {
  int n = static_cast<int>(corners_.size());
  require(n >= 3, Errc::Degenerate, "polygon with " + std::to_string(n) + " corners");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      require(!(corners_[static_cast<size_t>(i)] == corners_[static_cast<size_t>(j)]),
              Errc::Degenerate,
              "corners " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  for (int i = 0; i < n; ++i) {
    const Point& a = corners_[static_cast<size_t>(i)];
    const Point& b = corners_[static_cast<size_t>((i + 1) % n)];
    const Point& c = corners_[static_cast<size_t>((i + 2) % n)];
    require(orientation(a, b, c) != 0, Errc::Degenerate,
            "corners " + std::to_string(i) + ".." + std::to_string((i + 2) % n) +
                " are collinear");
  }
  int128 area2 = 0;
  for (int i = 0; i < n; ++i) {
    const Point& a = corners_[static_cast<size_t>(i)];
    const Point& b = corners_[static_cast<size_t>((i + 1) % n)];
    area2 += static_cast<int128>(a.x) * b.y - static_cast<int128>(a.y) * b.x;
  }
  require(area2 > 0, Errc::Degenerate, "not counterclockwise");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // Adjacent edges share exactly their endpoint; skip those pairs.
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      const Point& a = corners_[static_cast<size_t>(i)];
      const Point& b = corners_[static_cast<size_t>((i + 1) % n)];
      const Point& c = corners_[static_cast<size_t>(j)];
      const Point& d = corners_[static_cast<size_t>((j + 1) % n)];
      require(!segments_intersect(a, b, c, d), Errc::NotSimple,
              "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
    }
  }
}

std::vector<bool> reflex_corners(const SimplePolygon& poly) {
  int n = poly.size();
  std::vector<bool> out(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    const Point& a = poly.corner((i + n - 1) % n);
    const Point& b = poly.corner(i);
    const Point& c = poly.corner((i + 1) % n);
    out[static_cast<size_t>(i)] = orientation(a, b, c) < 0;
  }
  return out;
}

int reflex_chain_count(const SimplePolygon& poly) {
  std::vector<bool> r = reflex_corners(poly);
  int n = poly.size();
  int chains = 0;
  bool any = false, all = true;
  for (int i = 0; i < n; ++i) {
    any = any || r[static_cast<size_t>(i)];
    all = all && r[static_cast<size_t>(i)];
    if (r[static_cast<size_t>(i)] && !r[static_cast<size_t>((i + n - 1) % n)]) ++chains;
  }
  if (!any) return 0;
  if (all) return 1;  // unreachable for a simple polygon, kept for safety
  return chains;
}

Mop triangulate(const SimplePolygon& poly) {
  int n = poly.size();
  std::vector<int> next(static_cast<size_t>(n)), prev(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    next[static_cast<size_t>(i)] = (i + 1) % n;
    prev[static_cast<size_t>(i)] = (i + n - 1) % n;
  }
  std::vector<bool> alive(static_cast<size_t>(n), true);

  auto clippable = [&](int s) {
    int tip = next[static_cast<size_t>(s)];
    int u = next[static_cast<size_t>(tip)];
    const Point& a = poly.corner(s);
    const Point& b = poly.corner(tip);
    const Point& c = poly.corner(u);
    if (orientation(a, b, c) <= 0) return false;
    for (int w = next[static_cast<size_t>(u)]; w != s; w = next[static_cast<size_t>(w)])
      if (in_triangle_closed(a, b, c, poly.corner(w))) return false;
    return true;
  };

  std::vector<Edge> diags;
  int remaining = n;
  while (remaining > 3) {
    int chosen = -1;
    for (int s = 0; s < n; ++s) {
      if (!alive[static_cast<size_t>(s)]) continue;
      if (clippable(s)) {
        chosen = s;
        break;
      }
    }
    if (chosen < 0) internal_fail("no clippable ear among " + std::to_string(remaining));
    int tip = next[static_cast<size_t>(chosen)];
    int u = next[static_cast<size_t>(tip)];
    diags.emplace_back(chosen, u);
    alive[static_cast<size_t>(tip)] = false;
    next[static_cast<size_t>(chosen)] = u;
    prev[static_cast<size_t>(u)] = chosen;
    --remaining;
  }
  return Mop(n, std::move(diags));
}

SimplePolygon spiral_gallery(int t, int k) {
  require(t >= 1 && k >= 0, Errc::BadParams,
          "t = " + std::to_string(t) + ", k = " + std::to_string(k));
  long long stride = k + 6;
  long long peak = static_cast<long long>(k) * (k + 1) / 2 + k + 2;

  // Counterclockwise, starting at the bottom-right closing corner. Each unit
  // contributes its wing staircase, peak, eye, and mouth corner; the floor
  // corners in between stitch the units together.
  std::vector<Point> pts;
  long long wall = static_cast<long long>(t - 1) * stride + k + 3;
  pts.push_back({wall, -1});
  for (int u = t - 1; u >= 0; --u) {
    long long x0 = static_cast<long long>(u) * stride;
    for (int j = k; j >= 1; --j)
      pts.push_back({x0 + 1 + j, 1 + static_cast<long long>(k - j + 1) * (k - j + 2) / 2});
    pts.push_back({x0 + 1, peak});
    pts.push_back({x0, 1});
    pts.push_back({x0, u == 0 ? -1 : 0});
    if (u > 0) pts.push_back({x0 - 3, 0});
  }
  SimplePolygon poly(std::move(pts));

  // Units must stay independent: interior corners of one unit may only be
  // adjacent to corners of the same unit. unit(corner) maps the stitch
  // corner after a unit's mouth to the next unit down.
  Mop g = triangulate(poly);
  int per = k + 4;
  auto unit_of = [&](int idx) {
    if (idx == 0) return t - 1;
    int u = t - 1 - (idx - 1) / per;
    int rel = (idx - 1) % per + 1;
    return rel == per ? u - 1 : u;  // stitch corner sits in the next unit
  };
  for (int idx = 0; idx < g.order(); ++idx) {
    int rel = idx == 0 ? per : (idx - 1) % per + 1;
    bool interior = rel >= 1 && rel <= k + 2;  // wings, peak, eye
    if (!interior) continue;
    for (int nb : g.neighbors(idx))
      if (unit_of(nb) != unit_of(idx))
        internal_fail("triangulation links units " + std::to_string(unit_of(idx)) +
                      " and " + std::to_string(unit_of(nb)));
  }
  return poly;
}

std::pair<bool, int> verify_window_coverage(const Mop& g, const std::vector<int>& guards,
                                            int k) {
  require(k >= 0, Errc::BadParams, "k = " + std::to_string(k));
  int n = g.order();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : closed_neighborhood(g, guards)) seen[static_cast<size_t>(v)] = 1;
  for (int w = 0; w < n; ++w) {
    bool ok = false;
    for (int d = 0; d < k + 2 && !ok; ++d) ok = seen[static_cast<size_t>((w + d) % n)];
    if (!ok) return {false, w};
  }
  return {true, -1};
}

GuardCertificate place_guards(const SimplePolygon& poly, int k) {
  int n = poly.size();
  require(k >= 0, Errc::BadParams, "k = " + std::to_string(k));
  require(n >= k + 4, Errc::TooSmall,
          "polygon with " + std::to_string(n) + " corners for k = " + std::to_string(k));

  Mop g = triangulate(poly);
  GuardCertificate cert;
  cert.k = k;
  cert.guards = isolate_order(g, k).set;
  cert.base_size = static_cast<int>(cert.guards.size());

  for (;;) {
    auto [ok, bad] = verify_window_coverage(g, cert.guards, k);
    if (ok) break;
    cert.guards.push_back((bad + (k + 2) / 2) % n);
    ++cert.augmentations;
  }
  std::sort(cert.guards.begin(), cert.guards.end());
  cert.guards.erase(std::unique(cert.guards.begin(), cert.guards.end()), cert.guards.end());

  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : closed_neighborhood(g, cert.guards)) seen[static_cast<size_t>(v)] = 1;
  cert.windows.resize(static_cast<size_t>(n), -1);
  for (int w = 0; w < n; ++w) {
    for (int d = 0; d < k + 2; ++d) {
      int c = (w + d) % n;
      if (seen[static_cast<size_t>(c)]) {
        cert.windows[static_cast<size_t>(w)] = c;
        break;
      }
    }
    if (cert.windows[static_cast<size_t>(w)] < 0) internal_fail("window left uncovered");
  }
  return cert;
}

}  // namespace mopiso
