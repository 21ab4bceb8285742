#include "mopiso/families.hpp"

#include <numeric>
#include <string>

#include "mopiso/rng.hpp"

namespace mopiso {

namespace {

// One block of a joined family: a boundary arc of `len` vertices whose two
// ends carry the attachment chord, plus the block's own chords in arc-local
// coordinates.
struct Block {
  int len;
  std::vector<Edge> diags;
};

// Lays the blocks around the cycle in order and triangulates the base
// polygon spanned by the attachment chords with a fan from vertex 0.
Mop join_blocks(const std::vector<Block>& blocks) {
  int t = static_cast<int>(blocks.size());
  if (t == 1) return Mop(blocks[0].len, blocks[0].diags);

  std::vector<int> base(static_cast<size_t>(t), 0);
  for (int i = 1; i < t; ++i)
    base[static_cast<size_t>(i)] = base[static_cast<size_t>(i - 1)] + blocks[static_cast<size_t>(i - 1)].len;
  int n = base[static_cast<size_t>(t - 1)] + blocks[static_cast<size_t>(t - 1)].len;

  std::vector<Edge> diags;
  for (int i = 0; i < t; ++i) {
    int b = base[static_cast<size_t>(i)];
    for (const Edge& d : blocks[static_cast<size_t>(i)].diags)
      diags.emplace_back(b + d.a, b + d.b);
    diags.emplace_back(b, b + blocks[static_cast<size_t>(i)].len - 1);
  }
  for (int i = 1; i < t; ++i) diags.emplace_back(0, base[static_cast<size_t>(i)]);
  for (int i = 1; i < t - 1; ++i)
    diags.emplace_back(0, base[static_cast<size_t>(i)] + blocks[static_cast<size_t>(i)].len - 1);
  return Mop(n, std::move(diags));
}

// Fan block entered and left through the two path ends next to the center:
// arc order is x1, center, x(k+3), x(k+2), ..., x2.
Block fan_block_low(int k) {
  Block b;
  b.len = k + 4;
  for (int q = 3; q <= k + 3; ++q) b.diags.emplace_back(1, q);
  return b;
}

// Fan block entered one step further along the path: arc order is
// x2, x1, center, x(k+3), ..., x3.
Block fan_block_high(int k) {
  Block b;
  b.len = k + 4;
  b.diags.emplace_back(0, 2);
  for (int q = 4; q <= k + 3; ++q) b.diags.emplace_back(2, q);
  return b;
}

// Two bridged fans forming one block of 2k+10 vertices; the smaller fan's
// far path end is the block's only degree-2 vertex.
Block double_fan_block(int k) {
  Block b;
  b.len = 2 * k + 10;
  for (int q = k + 7; q <= 2 * k + 9; ++q) b.diags.emplace_back(1, q);
  b.diags.emplace_back(2, k + 7);
  b.diags.emplace_back(3, k + 6);
  for (int q = 3; q <= k + 3; ++q) b.diags.emplace_back(k + 5, q);
  b.diags.emplace_back(3, k + 7);
  return b;
}

// Fan on k+2 vertices with an ear on every boundary edge except one, walked
// from one end of the bare edge to the other. The bare edge needs both ends
// of degree 3 when such an edge exists (k >= 3); smaller k leaves the two
// path ends bare instead.
Block eared_fan_block(int k) {
  Block b;
  b.len = 2 * k + 3;
  if (k >= 3) {
    // Arc: w2, ear, w1, ear, center, ear, w(k+1), ear, wk, ..., ear, w3.
    b.diags.emplace_back(0, 2);
    b.diags.emplace_back(2, 4);
    b.diags.emplace_back(4, 6);
    for (int j = 3; j <= k; ++j)
      b.diags.emplace_back(6 + 2 * (k - j), 8 + 2 * (k - j));
    b.diags.emplace_back(0, 4);
    for (int j = 3; j <= k; ++j) b.diags.emplace_back(4, 8 + 2 * (k - j));
  } else if (k == 2) {
    // Arc: w1, ear, center, ear, w3, ear, w2.
    b.diags.emplace_back(0, 2);
    b.diags.emplace_back(2, 4);
    b.diags.emplace_back(4, 6);
    b.diags.emplace_back(2, 6);
  } else {
    // Arc: w1, ear, center, ear, w2.
    b.diags.emplace_back(0, 2);
    b.diags.emplace_back(2, 4);
  }
  return b;
}

}  // namespace

Mop fan(int n) {
  require(n >= 3, Errc::TooSmall, "fan order " + std::to_string(n));
  std::vector<Edge> diags;
  for (int q = 2; q <= n - 2; ++q) diags.emplace_back(0, q);
  return Mop(n, std::move(diags));
}

Mop family_T(int k, int t) {
  require(k >= 0 && t >= 1, Errc::BadParams,
          "k = " + std::to_string(k) + ", t = " + std::to_string(t));
  if (t == 1) return fan(k + 4);
  return join_blocks(std::vector<Block>(static_cast<size_t>(t), fan_block_low(k)));
}

Mop family_A(int k, int p) {
  require(k >= 0 && p >= 1, Errc::BadParams,
          "k = " + std::to_string(k) + ", p = " + std::to_string(p));
  int t = p * (k + 5);
  std::vector<Block> blocks;
  blocks.reserve(static_cast<size_t>(2 * t));
  for (int i = 0; i < t; ++i) blocks.push_back(fan_block_low(k));
  for (int i = 0; i < t; ++i) blocks.push_back(fan_block_high(k));
  return join_blocks(blocks);
}

Mop family_H(int k, int t) {
  require(k >= 0, Errc::BadParams, "k = " + std::to_string(k));
  require(2 * t >= k + 4 && t <= k + 4, Errc::BadParams,
          "t = " + std::to_string(t) + " outside [ceil((k+4)/2), k+4] for k = " +
              std::to_string(k));
  return join_blocks(std::vector<Block>(static_cast<size_t>(t), double_fan_block(k)));
}

Mop family_R(int k) {
  require(k >= 1, Errc::BadParams, "k = " + std::to_string(k));
  Block b = eared_fan_block(k);
  return Mop(b.len, std::move(b.diags));
}

Mop family_S(int k, int t) {
  require(k >= 1 && t >= 1, Errc::BadParams,
          "k = " + std::to_string(k) + ", t = " + std::to_string(t));
  return join_blocks(std::vector<Block>(static_cast<size_t>(t), eared_fan_block(k)));
}

Mop family_M(int p) {
  require(p >= 2, Errc::BadParams, "p = " + std::to_string(p));
  return join_blocks(std::vector<Block>(static_cast<size_t>(p), Block{3, {}}));
}

Mop random_mop(int n, std::uint64_t seed) {
  require(n >= 3, Errc::TooFewVertices, "order " + std::to_string(n));
  SplitMix64 rng(seed);

  // Grow a uniform binary tree with n-1 leaves: each step splices a fresh
  // internal node above a uniformly chosen existing node, hanging the new
  // leaf on a uniformly chosen side.
  int leaves_target = n - 1;
  std::vector<int> left{-1}, right{-1}, parent{-1};
  int root = 0;
  for (int m = 1; m < leaves_target; ++m) {
    int node_count = 2 * m - 1;
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(node_count)));
    int side = static_cast<int>(rng.below(2));
    int inner = node_count;      // new internal node
    int leaf = node_count + 1;   // new leaf
    left.resize(static_cast<size_t>(leaf + 1), -1);
    right.resize(static_cast<size_t>(leaf + 1), -1);
    parent.resize(static_cast<size_t>(leaf + 1), -1);
    int p = parent[static_cast<size_t>(v)];
    parent[static_cast<size_t>(inner)] = p;
    if (p == -1) {
      root = inner;
    } else if (left[static_cast<size_t>(p)] == v) {
      left[static_cast<size_t>(p)] = inner;
    } else {
      right[static_cast<size_t>(p)] = inner;
    }
    if (side == 0) {
      left[static_cast<size_t>(inner)] = leaf;
      right[static_cast<size_t>(inner)] = v;
    } else {
      left[static_cast<size_t>(inner)] = v;
      right[static_cast<size_t>(inner)] = leaf;
    }
    parent[static_cast<size_t>(v)] = inner;
    parent[static_cast<size_t>(leaf)] = inner;
  }

  // Leaf spans in in-order give the chords: a node covering leaf ranks
  // [lo, hi] maps to the chord {lo, hi+1}; the root maps to the boundary
  // edge {0, n-1} and is skipped.
  std::vector<Edge> diags;
  struct Frame {
    int node;
    int stage;
  };
  std::vector<Frame> stack{{root, 0}};
  std::vector<std::pair<int, int>> span(left.size(), {0, 0});
  int next_rank = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    int v = f.node;
    if (left[static_cast<size_t>(v)] == -1) {
      span[static_cast<size_t>(v)] = {next_rank, next_rank};
      ++next_rank;
      stack.pop_back();
      continue;
    }
    if (f.stage == 0) {
      f.stage = 1;
      stack.push_back({left[static_cast<size_t>(v)], 0});
    } else if (f.stage == 1) {
      f.stage = 2;
      stack.push_back({right[static_cast<size_t>(v)], 0});
    } else {
      auto [lo, l_hi] = span[static_cast<size_t>(left[static_cast<size_t>(v)])];
      auto [r_lo, hi] = span[static_cast<size_t>(right[static_cast<size_t>(v)])];
      (void)l_hi;
      (void)r_lo;
      span[static_cast<size_t>(v)] = {lo, hi};
      if (v != root) diags.emplace_back(lo, hi + 1);
      stack.pop_back();
    }
  }
  return Mop(n, std::move(diags));
}

}  // namespace mopiso
