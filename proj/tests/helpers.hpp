#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "onion/geometry.hpp"

namespace test_helpers {

inline std::vector<onion::Point> pts(
    std::initializer_list<std::pair<double, double>> coords) {
  std::vector<onion::Point> out;
  int id = 0;
  for (auto [x, y] : coords) out.push_back({id++, x, y});
  return out;
}

// cycles compare equal when one is a rotation of the other
inline bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto rotate_to_min = [](std::vector<int> c) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    return c;
  };
  return rotate_to_min(a) == rotate_to_min(b);
}

// duplicate-free random points on an integer grid (stays exactly
// representable, exercises collinear cases)
inline std::vector<onion::Point> random_grid_points(int n, unsigned seed,
                                                    int extent = 1000) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> dist(0, extent);
  std::set<std::pair<int, int>> used;
  std::vector<onion::Point> out;
  while (static_cast<int>(out.size()) < n) {
    int x = dist(gen), y = dist(gen);
    if (used.insert({x, y}).second)
      out.push_back({static_cast<int>(out.size()), static_cast<double>(x),
                     static_cast<double>(y)});
  }
  return out;
}

inline std::vector<onion::Point> random_real_points(int n, unsigned seed,
                                                    double extent = 1000.0) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(0.0, extent);
  std::vector<onion::Point> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back({i, dist(gen), dist(gen)});
  return out;
}

}  // namespace test_helpers
