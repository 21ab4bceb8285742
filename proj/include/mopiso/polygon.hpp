#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mopiso/isolation.hpp"
#include "mopiso/mop.hpp"

namespace mopiso {

struct Point {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

// > 0 left turn, < 0 right turn, 0 collinear. Exact.
int orientation(const Point& a, const Point& b, const Point& c);

// Corners in counterclockwise order; validated: at least 3 corners, no two
// coincide, no three consecutive collinear, edges only meet at shared
// endpoints, positive signed area.
class SimplePolygon {
 public:
  explicit SimplePolygon(std::vector<Point> corners);
  int size() const { return static_cast<int>(corners_.size()); }
  const std::vector<Point>& corners() const { return corners_; }
  const Point& corner(int i) const { return corners_[static_cast<size_t>(i)]; }

 private:
  std::vector<Point> corners_;
};

// True at corners whose interior angle exceeds pi.
std::vector<bool> reflex_corners(const SimplePolygon& poly);

// Maximal cyclic runs of reflex corners.
int reflex_chain_count(const SimplePolygon& poly);

// Ear clipping with a fixed scan order: repeatedly take the lowest-index
// remaining corner whose following corner is a clippable ear tip (convex,
// and no other remaining corner inside or on the candidate triangle).
Mop triangulate(const SimplePolygon& poly);

// Comb-shaped gallery of t units, each a (k+4)-corner pocket whose deep
// corners force one guard per unit; order t(k+4).
SimplePolygon spiral_gallery(int t, int k);

struct GuardCertificate {
  std::vector<int> guards;
  int k = 0;
  // For each window start w, some guarded-or-adjacent corner inside the
  // window [w, w+k+1].
  std::vector<int> windows;
  int base_size = 0;
  int augmentations = 0;
};

// (all windows covered, first failing window start or -1).
std::pair<bool, int> verify_window_coverage(const Mop& g, const std::vector<int>& guards,
                                            int k);

// Triangulates, isolates with the order recursion, then patches any window
// of k+2 consecutive corners that ended up unseen by adding its middle
// corner. Requires n >= k+4.
GuardCertificate place_guards(const SimplePolygon& poly, int k);

}  // namespace mopiso
