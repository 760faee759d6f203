#pragma once

#include <string>
#include <vector>

#include "qnet/network.hpp"

namespace qnet {

// A swapping tree over the consecutive links of a simple path. Each leaf is
// a network link; an internal vertex with children spanning (i, k) and
// (k, j) spans (i, j) and stands for the entanglement swap at k. Vertices
// live in an arena so trees are plain values.
struct SwapTree {
  struct Vertex {
    int node_a = -1;
    int node_b = -1;
    int left = -1;   // child indices into verts, -1 for a leaf
    int right = -1;
  };

  std::vector<Vertex> verts;
  int root = -1;

  bool empty() const { return root < 0; }
  bool is_leaf(int v) const { return verts[v].left < 0; }
  int height() const;
  int leaf_count() const;
  // Appends a subtree of another arena, returns the new index of its root.
  int graft(const SwapTree& other, int other_vertex);
  static SwapTree leaf(int a, int b);
  static SwapTree combine(const SwapTree& left, const SwapTree& right);
};

// Node sequence s, ..., d read off the leaves left to right.
std::vector<int> extract_path(const SwapTree& tree);

// Throws if the tree violates the swapping-tree invariants over this
// network: leaves must be consecutive links of a simple path, and every
// internal vertex's children must share exactly the pivot node.
void validate_tree(const SwapTree& tree, const QuantumNetwork& net);

// Expected latency of running the tree bottom-up: a leaf costs the link's
// expected generation latency, an internal vertex (1.5 * slower child + b_t)
// / b_p.
double tree_expected_latency(const SwapTree& tree, const QuantumNetwork& net);

// Shared combination rule, also used by the DP fills so that table values
// and tree evaluations agree bit for bit.
inline double combine_latency(double slower_child, const PhysicalParams& p) {
  return (1.5 * slower_child + p.atomic_bsm_latency_bt) / p.atomic_bsm_bp;
}

// Nested-parenthesis text form, e.g. ((1 2)(2 3)) for the one-swap tree
// over links (1,2) and (2,3).
std::string tree_to_parens(const SwapTree& tree);
SwapTree tree_from_parens(const std::string& text);

}  // namespace qnet
