#include "onion/construct.hpp"

#include <cassert>
#include <limits>

#include "onion/errors.hpp"

namespace onion {

Tour nearest_neighbor(const Instance& inst, int start) {
  int n = (int)inst.points.size();
  if (n < 1) throw InputError("empty point set");
  if (start < 0 || start >= n) throw InputError("invalid start id");

  std::vector<char> visited(n, 0);
  std::vector<int> order;
  order.reserve(n);
  int current = start;
  visited[current] = 1;
  order.push_back(current);

  while ((int)order.size() < n) {
    int pick = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int id = 0; id < n; ++id) {
      if (visited[id]) continue;
      double d = distance(inst.points[current], inst.points[id], inst.metric);
      if (d < best) {  // scanning ids upward makes ties keep the smaller id
        best = d;
        pick = id;
      }
    }
    visited[pick] = 1;
    order.push_back(pick);
    current = pick;
  }
  return make_tour(std::move(order), inst);
}

namespace {

// appends the whole guest cycle starting after edge (guest[j], guest[j+1]),
// forward from j+1 or backward from j
void append_guest(std::vector<int>& out, const std::vector<int>& guest,
                  std::size_t j, bool reversed) {
  std::size_t g = guest.size();
  for (std::size_t step = 0; step < g; ++step) {
    std::size_t idx = reversed ? (j + g - step) % g : (j + 1 + step) % g;
    out.push_back(guest[idx]);
  }
}

}  // namespace

std::vector<int> splice(const std::vector<int>& host,
                        const std::vector<int>& guest, const Instance& inst) {
  int n = (int)inst.points.size();
  std::vector<char> seen(n, 0);
  for (int id : host) {
    assert(id >= 0 && id < n && !seen[id]);
    seen[id] = 1;
  }
  for (int id : guest) {
    assert(id >= 0 && id < n);
    if (seen[id]) throw InputError("overlapping id sets");
    seen[id] = 2;
  }
  if (host.empty() || guest.empty()) throw InputError("empty point set");

  // the enumeration needs a host with real edges; a 1- or 2-cycle host with
  // a big guest plays the guest role instead
  if (host.size() < 3 && guest.size() >= 3) return splice(guest, host, inst);

  auto dist = [&](int a, int b) {
    return distance(inst.points[a], inst.points[b], inst.metric);
  };

  if (host.size() == 1) {  // guest has at most 2 ids here
    std::vector<int> out = {host[0]};
    out.insert(out.end(), guest.begin(), guest.end());
    return out;
  }

  std::size_t h = host.size();
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0, best_j = 0;
  bool best_rev = false;

  if (guest.size() <= 2) {
    // cheapest insertion of the point or 2-chain; the chain's internal
    // edge is spent either way, so only the detour matters
    int front = guest[0], back = guest.size() == 2 ? guest[1] : guest[0];
    for (std::size_t i = 0; i < h; ++i) {
      int a1 = host[i], a2 = host[(i + 1) % h];
      double base = dist(a1, a2);
      for (int o = 0; o < (guest.size() == 2 ? 2 : 1); ++o) {
        int f = o ? back : front, s = o ? front : back;
        double delta = dist(a1, f) + dist(s, a2) - base;
        if (delta < best) {
          best = delta;
          best_i = i;
          best_rev = o == 1;
        }
      }
    }
    std::vector<int> out(host.begin(), host.begin() + best_i + 1);
    if (best_rev)
      out.insert(out.end(), guest.rbegin(), guest.rend());
    else
      out.insert(out.end(), guest.begin(), guest.end());
    out.insert(out.end(), host.begin() + best_i + 1, host.end());
    return out;
  }

  std::size_t g = guest.size();
  for (std::size_t i = 0; i < h; ++i) {
    int a1 = host[i], a2 = host[(i + 1) % h];
    for (std::size_t j = 0; j < g; ++j) {
      int b1 = guest[j], b2 = guest[(j + 1) % g];
      double removed = dist(a1, a2) + dist(b1, b2);
      // forward keeps the guest direction (a1->b2 ... b1->a2);
      // reversed walks it backward (a1->b1 ... b2->a2)
      double forward = dist(a1, b2) + dist(b1, a2) - removed;
      double backward = dist(a1, b1) + dist(a2, b2) - removed;
      if (forward < best) {
        best = forward;
        best_i = i;
        best_j = j;
        best_rev = false;
      }
      if (backward < best) {
        best = backward;
        best_i = i;
        best_j = j;
        best_rev = true;
      }
    }
  }

  std::vector<int> out(host.begin(), host.begin() + best_i + 1);
  append_guest(out, guest, best_j, best_rev);
  out.insert(out.end(), host.begin() + best_i + 1, host.end());
  return out;
}

Tour layer_merge(const Instance& inst, const ConvexLayers& layers,
                 MergeOrder order, const CycleHook& improve_between) {
  int n = (int)inst.points.size();
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (const HullCycle& layer : layers.layers) {
    for (int id : layer) {
      if (id < 0 || id >= n || seen[id])
        throw InputError("layers do not match instance");
      seen[id] = 1;
      ++covered;
    }
  }
  if (covered != n || n == 0)
    throw InputError("layers do not match instance");

  std::size_t k = layers.layers.size();
  bool outer_first = order == MergeOrder::OutermostFirst;
  std::vector<int> cycle = outer_first ? layers.layers[0] : layers.layers[k - 1];
  for (std::size_t step = 1; step < k; ++step) {
    const HullCycle& next =
        outer_first ? layers.layers[step] : layers.layers[k - 1 - step];
    cycle = splice(cycle, next, inst);
    if (improve_between) cycle = improve_between(std::move(cycle));
  }
  return make_tour(std::move(cycle), inst);
}

}  // namespace onion
