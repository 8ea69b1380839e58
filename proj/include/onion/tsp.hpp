#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onion/geometry.hpp"

namespace onion {

enum class Metric {
  Euc2d,  // plain Euclidean distance as a double
  Att,    // pseudo-Euclidean integer distance (the classic 48-city rounding)
};

struct Instance {
  std::string name;
  std::vector<Point> points;  // ids dense 0..n-1, point i at index i
  Metric metric = Metric::Euc2d;
};

// A cyclic tour in canonical form: starts at the smallest id and runs in
// whichever direction compares lexicographically smaller, so equal cyclic
// tours are equal vectors. The length of the closed cycle is cached.
struct Tour {
  std::vector<int> order;
  double length = 0.0;
};

double distance(const Point& a, const Point& b, Metric metric);

// Rotates/reflects a cyclic order into canonical form.
std::vector<int> canonical_order(std::vector<int> order);

// Validates, canonicalizes, and computes the cached length.
// Throws InputError("invalid tour") when order is not a permutation.
Tour make_tour(std::vector<int> order, const Instance& inst);

// Sum of consecutive distances including the closing edge.
// Throws InputError("invalid tour") when order is not a permutation.
double tour_length(const Tour& t, const Instance& inst);

// std::nullopt when the tour is well-formed; otherwise a short description
// of the first violation found ("id visited twice", "length mismatch", ...).
std::optional<std::string> validate_tour(const Tour& t, const Instance& inst);

}  // namespace onion
