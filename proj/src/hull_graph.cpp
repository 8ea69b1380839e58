#include "onion/hull_graph.hpp"

#include <algorithm>
#include <cassert>

#include "onion/errors.hpp"

namespace onion {

// ---------------------------------------------------------------------------
// ChainGraph
// ---------------------------------------------------------------------------

ChainGraph::ChainGraph(const std::vector<Point>& points, bool mirrored) {
  pts_ = points;
  if (mirrored)
    for (Point& p : pts_) {
      p.x = -p.x;
      p.y = -p.y;
    }
  std::sort(pts_.begin(), pts_.end(), lex_less);

  int max_id = 0;
  for (const Point& p : pts_) max_id = std::max(max_id, p.id);
  leaf_of_id_.assign(max_id + 1, -1);
  for (int leaf = 0; leaf < leaf_count(); ++leaf)
    leaf_of_id_[pts_[leaf].id] = leaf;

  alive_.assign(pts_.size(), 1);
  lb_.assign(pts_.size(), {});
  rb_.assign(pts_.size(), {});
  nodes_.reserve(2 * pts_.size());
  root_ = build_node(0, leaf_count(), 0);
}

int ChainGraph::build_node(int lo, int hi, int depth) {
  int v = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{lo, hi, -1, -1, hi - lo, -1, -1, depth});
  if (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    int l = build_node(lo, mid, depth + 1);
    int r = build_node(mid, hi, depth + 1);
    nodes_[v].left = l;
    nodes_[v].right = r;
    rebuild_bridge(v);
  }
  return v;
}

int ChainGraph::first_alive(int v) const {
  const Node& n = nodes_[v];
  assert(n.alive > 0);
  if (n.left < 0) return n.lo;
  return nodes_[n.left].alive > 0 ? first_alive(n.left) : first_alive(n.right);
}

int ChainGraph::last_alive(int v) const {
  const Node& n = nodes_[v];
  assert(n.alive > 0);
  if (n.left < 0) return n.lo;
  return nodes_[n.right].alive > 0 ? last_alive(n.right) : last_alive(n.left);
}

std::pair<int, int> ChainGraph::chain_neighbors(int v, int leaf) const {
  const Node& n = nodes_[v];
  if (n.left < 0) return {-1, -1};
  if (n.bridge_a >= 0) {
    if (leaf <= n.bridge_a) {
      auto pr = chain_neighbors(n.left, leaf);
      if (leaf == n.bridge_a) pr.second = n.bridge_b;
      return pr;
    }
    assert(leaf >= n.bridge_b);
    auto pr = chain_neighbors(n.right, leaf);
    if (leaf == n.bridge_b) pr.first = n.bridge_a;
    return pr;
  }
  // one child empty: the chain is the other child's chain
  return chain_neighbors(nodes_[n.left].alive > 0 ? n.left : n.right, leaf);
}

bool ChainGraph::on_chain(int v, int leaf) const {
  const Node& n = nodes_[v];
  if (n.alive == 0 || leaf < n.lo || leaf >= n.hi || !alive_[leaf])
    return false;
  if (n.left < 0) return true;
  if (n.bridge_a >= 0) {
    if (leaf <= n.bridge_a) return on_chain(n.left, leaf);
    if (leaf >= n.bridge_b) return on_chain(n.right, leaf);
    return false;
  }
  return on_chain(nodes_[n.left].alive > 0 ? n.left : n.right, leaf);
}

void ChainGraph::append_chain(int v, int lo_leaf, int hi_leaf,
                              std::vector<int>& out) const {
  const Node& n = nodes_[v];
  if (n.alive == 0 || lo_leaf > hi_leaf) return;
  if (n.left < 0) {
    if (n.lo >= lo_leaf && n.lo <= hi_leaf) out.push_back(n.lo);
    return;
  }
  if (n.bridge_a >= 0) {
    if (lo_leaf <= n.bridge_a)
      append_chain(n.left, lo_leaf, std::min(hi_leaf, n.bridge_a), out);
    if (hi_leaf >= n.bridge_b)
      append_chain(n.right, std::max(lo_leaf, n.bridge_b), hi_leaf, out);
    return;
  }
  append_chain(nodes_[n.left].alive > 0 ? n.left : n.right, lo_leaf, hi_leaf,
               out);
}

std::vector<int> ChainGraph::root_chain() const {
  std::vector<int> out;
  if (nodes_[root_].alive > 0)
    append_chain(root_, 0, leaf_count() - 1, out);
  return out;
}

void ChainGraph::list_insert(std::vector<int>& list, int v) const {
  // keep deepest node first so the root-most bridge sits on top (back)
  auto it = list.begin();
  while (it != list.end() && nodes_[*it].depth > nodes_[v].depth) ++it;
  list.insert(it, v);
}

void ChainGraph::list_remove(std::vector<int>& list, int v,
                             bool expect_front) const {
  auto it = std::find(list.begin(), list.end(), v);
  assert(it != list.end());
  // bridges of a vertex being deleted come off bottom-up: always the
  // deepest remaining entry, so the top edge is removed last
  assert(!expect_front || it == list.begin());
  (void)expect_front;
  list.erase(it);
}

void ChainGraph::rebuild_bridge(int v) {
  Node& n = nodes_[v];
  int na = -1, nb = -1;
  if (nodes_[n.left].alive > 0 && nodes_[n.right].alive > 0) {
    // tangent walk: start at the innermost alive pair and move each end
    // outward while its outer neighbor lies strictly above the current line
    na = last_alive(n.left);
    nb = first_alive(n.right);
    bool moved = true;
    while (moved) {
      moved = false;
      for (;;) {
        int p = chain_neighbors(n.left, na).first;
        if (p >= 0 && orient(na, nb, p) == Orientation::Left) {
          na = p;
          moved = true;
        } else {
          break;
        }
      }
      for (;;) {
        int s = chain_neighbors(n.right, nb).second;
        if (s >= 0 && orient(na, nb, s) == Orientation::Left) {
          nb = s;
          moved = true;
        } else {
          break;
        }
      }
    }
  }
  if (n.bridge_a == na && n.bridge_b == nb) return;
  if (n.bridge_a >= 0) {
    bool deleting_a = !alive_[n.bridge_a];
    bool deleting_b = !alive_[n.bridge_b];
    list_remove(rb_[n.bridge_a], v, deleting_a);
    list_remove(lb_[n.bridge_b], v, deleting_b);
  }
  n.bridge_a = na;
  n.bridge_b = nb;
  if (na >= 0) {
    list_insert(rb_[na], v);
    list_insert(lb_[nb], v);
  }
}

void ChainGraph::erase_leaf(int leaf) {
  assert(alive_[leaf]);
  std::vector<int> path;  // root down to the leaf's node
  int v = root_;
  for (;;) {
    path.push_back(v);
    const Node& n = nodes_[v];
    if (n.left < 0) break;
    v = leaf < nodes_[n.left].hi ? n.left : n.right;
  }

  // chain membership per path node before any mutation; once the leaf is
  // interior to some subtree's chain it is interior above it as well
  std::vector<char> was(path.size());
  for (std::size_t i = 0; i < path.size(); ++i)
    was[i] = on_chain(path[i], leaf) ? 1 : 0;

  alive_[leaf] = 0;
  for (int u : path) --nodes_[u].alive;

  for (int i = static_cast<int>(path.size()) - 2; i >= 0; --i) {
    if (!was[i + 1]) break;  // child chain unchanged, bridges above stand
    rebuild_bridge(path[i]);
  }
  assert(lb_[leaf].empty() && rb_[leaf].empty());
}

ChainGraph::NodeView ChainGraph::node(int v) const {
  const Node& n = nodes_[v];
  return {n.lo, n.hi, n.left, n.right, n.alive, n.bridge_a, n.bridge_b,
          n.depth};
}

// ---------------------------------------------------------------------------
// HullGraph
// ---------------------------------------------------------------------------

namespace {

std::vector<Point> checked(const std::vector<Point>& points) {
  if (points.empty()) throw InputError("empty point set");
  std::vector<Point> s(points);
  std::sort(s.begin(), s.end(), lex_less);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1].x == s[i].x && s[i - 1].y == s[i].y)
      throw InputError("duplicate coordinates");
  return points;
}

}  // namespace

HullGraph::HullGraph(const std::vector<Point>& points)
    : upper_(checked(points), false), lower_(points, true) {
  int max_id = 0;
  for (const Point& p : points) max_id = std::max(max_id, p.id);
  alive_.assign(max_id + 1, 0);
  for (const Point& p : points) {
    if (alive_[p.id]) throw InputError("duplicate id");
    alive_[p.id] = 1;
  }
  alive_count_ = static_cast<int>(points.size());
}

bool HullGraph::is_alive(int id) const {
  return id >= 0 && id < static_cast<int>(alive_.size()) && alive_[id];
}

HullCycle HullGraph::extract_outer() const {
  if (alive_count_ == 0) throw InputError("empty point set");

  std::vector<int> up_leaves = upper_.root_chain();
  std::vector<int> lo_leaves = lower_.root_chain();

  HullCycle upper_ids, lower_ids;
  upper_ids.reserve(up_leaves.size());
  for (int leaf : up_leaves) upper_ids.push_back(upper_.id_of_leaf(leaf));
  lower_ids.reserve(lo_leaves.size());
  // the mirrored chain runs lex-descending in original coordinates
  for (auto it = lo_leaves.rbegin(); it != lo_leaves.rend(); ++it)
    lower_ids.push_back(lower_.id_of_leaf(*it));

  // both chains hold every alive point only when the set is collinear (or
  // has fewer than three points); emit the lex-ordered degenerate cycle
  if (static_cast<int>(upper_ids.size()) == alive_count_ &&
      static_cast<int>(lower_ids.size()) == alive_count_)
    return upper_ids;

  HullCycle cycle = std::move(lower_ids);
  for (std::size_t k = upper_ids.size() - 1; k-- > 1;)
    cycle.push_back(upper_ids[k]);
  return cycle;
}

void HullGraph::delete_vertex(int id) {
  if (!is_alive(id)) throw InputError("not on current layer");
  int up_leaf = upper_.leaf_of_id(id);
  int lo_leaf = lower_.leaf_of_id(id);
  if (!upper_.on_root_chain(up_leaf) && !lower_.on_root_chain(lo_leaf))
    throw InputError("not on current layer");
  upper_.erase_leaf(up_leaf);
  lower_.erase_leaf(lo_leaf);
  alive_[id] = 0;
  --alive_count_;
}

ConvexLayers convex_layers_fast(const std::vector<Point>& points) {
  HullGraph graph(points);

  int max_id = 0;
  for (const Point& p : points) max_id = std::max(max_id, p.id);
  ConvexLayers result;
  result.depth.assign(max_id + 1, -1);

  while (graph.alive_count() > 0) {
    HullCycle cycle = graph.extract_outer();
    int layer = static_cast<int>(result.layers.size());
    for (int id : cycle) {
      result.depth[id] = layer;
      graph.delete_vertex(id);
    }
    result.layers.push_back(std::move(cycle));
  }
  return result;
}

}  // namespace onion
