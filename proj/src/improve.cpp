#include "onion/improve.hpp"

#include <algorithm>

#include "onion/errors.hpp"

namespace onion {

namespace {

struct Move {
  double gain = 0.0;
  int i = -1, j = -1, k = -1;
  int pattern = 0;
};

}  // namespace

Tour two_opt(const Tour& t, const Instance& inst, const ImproveConfig& cfg) {
  if (cfg.epsilon <= 0.0) throw InputError("epsilon must be positive");
  double len = tour_length(t, inst);  // also validates the permutation
  std::vector<int> order = t.order;
  int n = (int)order.size();

  auto dist = [&](int a, int b) {
    return distance(inst.points[a], inst.points[b], inst.metric);
  };

  int passes = 0;
  while (n >= 4 && (cfg.max_passes < 0 || passes < cfg.max_passes)) {
    Move best;
    for (int i = 0; i < n - 1; ++i) {
      double d_i = dist(order[i], order[i + 1]);
      for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;  // shares the closing edge
        double gain = d_i + dist(order[j], order[(j + 1) % n]) -
                      dist(order[i], order[j]) -
                      dist(order[i + 1], order[(j + 1) % n]);
        if (gain > best.gain) best = {gain, i, j, -1, 0};
      }
    }
    if (best.i < 0 || best.gain <= cfg.epsilon * len) break;
    std::reverse(order.begin() + best.i + 1, order.begin() + best.j + 1);
    len -= best.gain;
    ++passes;
  }
  return make_tour(std::move(order), inst);
}

Tour three_opt(const Tour& t, const Instance& inst, const ImproveConfig& cfg) {
  if (cfg.epsilon <= 0.0) throw InputError("epsilon must be positive");
  double len = tour_length(t, inst);
  std::vector<int> order = t.order;
  int n = (int)order.size();

  auto dist = [&](int a, int b) {
    return distance(inst.points[a], inst.points[b], inst.metric);
  };

  int passes = 0;
  while (n >= 4 && (cfg.max_passes < 0 || passes < cfg.max_passes)) {
    Move best;
    for (int i = 0; i < n - 2; ++i) {
      int a = order[i], b = order[i + 1];
      double d_ab = dist(a, b);
      for (int j = i + 1; j < n - 1; ++j) {
        int c = order[j], d = order[j + 1];
        double d_cd = dist(c, d);
        double d_ac = dist(a, c);
        double d_ad = dist(a, d);
        for (int k = j + 1; k < n; ++k) {
          int e = order[k], f = order[(k + 1) % n];
          double removed = d_ab + d_cd + dist(e, f);
          // segments: S2 = order[i+1..j], S3 = order[j+1..k]; each pattern
          // reorders/reverses them between the fixed outer pieces
          double added[8] = {
              0.0,
              d_ac + dist(b, d) + dist(e, f),       // S2 reversed
              d_ab + dist(c, e) + dist(d, f),       // S3 reversed
              d_ac + dist(b, e) + dist(d, f),       // both reversed
              d_ad + dist(e, b) + dist(c, f),       // swapped
              d_ad + dist(e, c) + dist(b, f),       // swapped, S2 reversed
              dist(a, e) + dist(d, b) + dist(c, f), // swapped, S3 reversed
              dist(a, e) + dist(d, c) + dist(b, f), // swapped, both reversed
          };
          for (int m = 1; m <= 7; ++m) {
            double gain = removed - added[m];
            if (gain > best.gain) best = {gain, i, j, k, m};
          }
        }
      }
    }
    if (best.i < 0 || best.gain <= cfg.epsilon * len) break;

    std::vector<int> s2(order.begin() + best.i + 1, order.begin() + best.j + 1);
    std::vector<int> s3(order.begin() + best.j + 1, order.begin() + best.k + 1);
    bool swap_blocks = best.pattern >= 4;
    bool rev2 = best.pattern == 1 || best.pattern == 3 ||
                best.pattern == 5 || best.pattern == 7;
    bool rev3 = best.pattern == 2 || best.pattern == 3 ||
                best.pattern == 6 || best.pattern == 7;
    if (rev2) std::reverse(s2.begin(), s2.end());
    if (rev3) std::reverse(s3.begin(), s3.end());
    if (swap_blocks) std::swap(s2, s3);
    std::copy(s2.begin(), s2.end(), order.begin() + best.i + 1);
    std::copy(s3.begin(), s3.end(),
              order.begin() + best.i + 1 + (int)s2.size());
    len -= best.gain;
    ++passes;
  }
  return make_tour(std::move(order), inst);
}

bool has_crossings(const Tour& t, const Instance& inst) {
  double unused = tour_length(t, inst);  // validation only
  (void)unused;
  const std::vector<int>& o = t.order;
  int n = (int)o.size();
  if (n < 4) return false;
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent around the wrap
      if (segments_properly_cross(inst.points[o[i]], inst.points[o[i + 1]],
                                  inst.points[o[j]],
                                  inst.points[o[(j + 1) % n]]))
        return true;
    }
  }
  return false;
}

}  // namespace onion
