#include "onion/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "onion/errors.hpp"

namespace onion {

Tour brute_force(const Instance& inst) {
  int n = (int)inst.points.size();
  if (n < 1) throw InputError("empty point set");
  if (n > 10) throw CapError("brute force capped at 10");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (n <= 3) return make_tour(order, inst);  // a single cyclic tour

  auto dist = [&](int a, int b) {
    return distance(inst.points[a], inst.points[b], inst.metric);
  };

  std::vector<int> best;
  double best_len = std::numeric_limits<double>::infinity();
  // city 0 stays fixed; skipping order[1] > order[n-1] drops each tour's
  // mirror image, leaving exactly (n-1)!/2 candidates in lex order
  do {
    if (order[1] > order[n - 1]) continue;
    double len = 0.0;
    for (int i = 0; i < n; ++i) len += dist(order[i], order[(i + 1) % n]);
    if (len < best_len) {
      best_len = len;
      best = order;
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));

  return make_tour(best, inst);
}

Tour held_karp(const Instance& inst) {
  int n = (int)inst.points.size();
  if (n < 1) throw InputError("empty point set");
  if (n > 18) throw CapError("Held-Karp capped at 18");
  if (n == 1) return make_tour({0}, inst);

  auto dist = [&](int a, int b) {
    return distance(inst.points[a], inst.points[b], inst.metric);
  };

  // dp[mask][j]: cheapest path 0 -> city j+1 visiting exactly the cities
  // {i+1 : bit i of mask}, accumulated left to right like tour_length
  int m = n - 1;
  std::size_t full = std::size_t(1) << m;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dp(full * m, inf);
  std::vector<int8_t> parent(full * m, -1);

  for (int j = 0; j < m; ++j)
    dp[(std::size_t(1) << j) * m + j] = dist(0, j + 1);

  for (std::size_t mask = 1; mask < full; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask >> j & 1)) continue;
      std::size_t rest = mask ^ (std::size_t(1) << j);
      if (!rest) continue;
      double& cell = dp[mask * m + j];
      for (int k = 0; k < m; ++k) {
        if (!(rest >> k & 1)) continue;
        double cand = dp[rest * m + k] + dist(k + 1, j + 1);
        if (cand < cell) {
          cell = cand;
          parent[mask * m + j] = (int8_t)k;
        }
      }
    }
  }

  int last = 0;
  double best = inf;
  for (int j = 0; j < m; ++j) {
    double cand = dp[(full - 1) * m + j] + dist(j + 1, 0);
    if (cand < best) {
      best = cand;
      last = j;
    }
  }

  std::vector<int> order(n);
  std::size_t mask = full - 1;
  for (int i = n - 1; i >= 1; --i) {
    order[i] = last + 1;
    int prev = parent[mask * m + last];
    mask ^= std::size_t(1) << last;
    last = prev;
  }
  order[0] = 0;
  return make_tour(order, inst);
}

}  // namespace onion
