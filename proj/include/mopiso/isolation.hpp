#pragma once

#include <string>
#include <vector>

#include "mopiso/mop.hpp"
#include "mopiso/rational.hpp"

namespace mopiso {

enum class BoundName {
  ORDER,          // n / (k+4)
  ORDER_PLUS_N2,  // (n + n2) / (k+5)
  ORDER_MINUS_N2, // (n - n2) / (k+2)
  BEST,
  DOM_THIRD,      // n / 3
  DOM_HALF,       // (n - n2) / 2
};

const char* bound_name_str(BoundName b);

// One recursion event, in the coordinates of the subproblem at that depth.
struct TraceStep {
  int depth = 0;
  std::string tag;
  int a = -1;
  int b = -1;
  int apex = -1;
};

struct BoundedSolution {
  std::vector<int> set;
  int k = 0;  // -1 for domination solutions, which take no k
  BoundName bound_name = BoundName::ORDER;
  Rational bound_value;
  bool bound_applicable = false;
  bool bound_respected = true;
  std::vector<TraceStep> trace;

  int size() const { return static_cast<int>(set.size()); }
};

// Isolating set of size <= 1; valid for every mop on at most 2k+7 vertices.
std::vector<int> isolate_small(const Mop& g, int k);

BoundedSolution isolate_order(const Mop& g, int k);
BoundedSolution isolate_order_plus_n2(const Mop& g, int k);
BoundedSolution isolate_order_minus_n2(const Mop& g, int k);

// Runs all variants whose preconditions hold and keeps the smallest set;
// ties prefer order, then plus, then minus.
BoundedSolution isolate_best(const Mop& g, int k);

BoundedSolution dominate_third(const Mop& g);

// Dominating set built on the non-degree-2 vertices. Aims for
// floor((n - n2)/2); on the rare mops where every consecutive survivor
// pair holds a pendant the construction needs one extra vertex and
// bound_respected comes back false.
BoundedSolution dominate_half_minus(const Mop& g);

}  // namespace mopiso
