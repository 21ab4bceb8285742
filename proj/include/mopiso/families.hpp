#pragma once

#include <cstdint>

#include "mopiso/mop.hpp"

namespace mopiso {

// Fan: vertex 0 sees everyone.
Mop fan(int n);

// Chains of fan blocks joined along a base polygon. Orders and degree-2
// counts: T -> (k+4)t and t (2 when t = 1: a lone fan keeps both path
// ends); A -> 2(k+4)(k+5)p and 3(k+5)p (except k = 0, where the
// second-half attachment pair must include a path end, leaving 2(k+5)p);
// H -> (2k+10)t and t; R -> 2k+3 and k+1; S -> (2k+3)t and (k+1)t;
// M -> 3p and p.
Mop family_T(int k, int t);   // k >= 0, t >= 1; t = 1 gives the plain fan
Mop family_A(int k, int p);   // k >= 0, p >= 1
Mop family_H(int k, int t);   // k >= 0, ceil((k+4)/2) <= t <= k+4
Mop family_R(int k);          // k >= 1
Mop family_S(int k, int t);   // k >= 1, t >= 1; t = 1 equals family_R
Mop family_M(int p);          // p >= 2

// Uniformly random triangulation on n vertices, deterministic in the seed:
// a random binary tree with n-1 leaves (leaf-insertion at a uniform node)
// mapped to the chords of its leaf spans.
Mop random_mop(int n, std::uint64_t seed);

}  // namespace mopiso
