#pragma once

#include <utility>
#include <vector>

#include "onion/geometry.hpp"

namespace onion {

// One monotone hull chain (upper-hull semantics) maintained over a complete
// binary tree of lex-sorted leaves. Every internal node whose two subtrees
// both hold alive points stores the bridge of their chains: the common
// tangent edge, with the left endpoint pushed lex-max and the right endpoint
// lex-min along collinear stretches so the merged chain stays
// boundary-inclusive. Deleting a leaf recomputes bridges along its leaf-to-
// root path, bottom up; nothing off that path changes.
//
// The lower chain of a point set is the upper chain of the set mirrored
// through the origin, so HullGraph instantiates this class twice.
class ChainGraph {
 public:
  ChainGraph(const std::vector<Point>& points, bool mirrored);

  int leaf_count() const { return static_cast<int>(pts_.size()); }
  int alive_count() const { return nodes_[root_].alive; }
  bool leaf_alive(int leaf) const { return alive_[leaf] != 0; }
  int leaf_of_id(int id) const { return leaf_of_id_[id]; }
  int id_of_leaf(int leaf) const { return pts_[leaf].id; }

  // chain of the whole alive set, as leaf indices in leaf order
  std::vector<int> root_chain() const;
  bool on_root_chain(int leaf) const { return on_chain(root_, leaf); }
  void erase_leaf(int leaf);

  // --- structural introspection (tests, invariants) ---
  struct NodeView {
    int lo, hi;            // leaf span [lo, hi)
    int left, right;       // child node ids, -1 for leaves
    int alive;             // alive leaves in the span
    int bridge_a, bridge_b;  // bridge leaf indices, -1 when absent
    int depth;
  };
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int root() const { return root_; }
  NodeView node(int v) const;
  // bridges incident to a leaf, as node ids ordered deepest node first; the
  // last entry ("top") is the bridge closest to the root
  const std::vector<int>& left_bridges(int leaf) const { return lb_[leaf]; }
  const std::vector<int>& right_bridges(int leaf) const { return rb_[leaf]; }

 private:
  struct Node {
    int lo, hi;
    int left = -1, right = -1;
    int alive = 0;
    int bridge_a = -1, bridge_b = -1;
    int depth = 0;
  };

  int build_node(int lo, int hi, int depth);
  void rebuild_bridge(int v);
  int first_alive(int v) const;
  int last_alive(int v) const;
  std::pair<int, int> chain_neighbors(int v, int leaf) const;
  bool on_chain(int v, int leaf) const;
  void append_chain(int v, int lo_leaf, int hi_leaf,
                    std::vector<int>& out) const;
  Orientation orient(int i, int j, int k) const {
    return orientation(pts_[i], pts_[j], pts_[k]);
  }
  void list_insert(std::vector<int>& list, int v) const;
  void list_remove(std::vector<int>& list, int v, bool expect_front) const;

  std::vector<Point> pts_;  // mirrored if requested, lex-sorted
  std::vector<int> leaf_of_id_;
  std::vector<Node> nodes_;
  int root_ = -1;
  std::vector<char> alive_;
  std::vector<std::vector<int>> lb_, rb_;  // per-leaf incident bridge lists
};

// Deletion-only convex-hull structure: an upper and a lower chain graph over
// the same point set. Supports peeling the outer hull repeatedly.
class HullGraph {
 public:
  // Requires unique ids and pairwise distinct coordinates.
  explicit HullGraph(const std::vector<Point>& points);

  int alive_count() const { return alive_count_; }
  bool is_alive(int id) const;

  // Current outer hull, normalized to the convex_hull convention (CCW from
  // the lex-min point; fully collinear sets in lex order).
  HullCycle extract_outer() const;

  // Removes a vertex of the current outer hull; throws
  // InputError("not on current layer") otherwise.
  void delete_vertex(int id);

  const ChainGraph& upper_graph() const { return upper_; }
  const ChainGraph& lower_graph() const { return lower_; }

 private:
  ChainGraph upper_, lower_;
  std::vector<char> alive_;  // by id
  int alive_count_ = 0;
};

// Onion peeling via HullGraph; agrees with convex_layers_naive.
ConvexLayers convex_layers_fast(const std::vector<Point>& points);

}  // namespace onion
