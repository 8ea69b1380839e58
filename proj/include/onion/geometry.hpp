#pragma once

#include <vector>

namespace onion {

struct Point {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
};

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

// Sign of the cross product (q - p) x (r - p). A floating-point filter
// decides the easy cases; integral coordinates fall back to 128-bit integer
// arithmetic and everything else to exact expansion arithmetic, so the
// returned sign is never wrong.
Orientation orientation(const Point& p, const Point& q, const Point& r);

// (x, then y) order used for hull scans and for the hull-graph leaf order.
inline bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// True iff segments (a,b) and (c,d) cross in a single point interior to
// both. Touching endpoints and collinear overlap do not count.
bool segments_properly_cross(const Point& a, const Point& b, const Point& c,
                             const Point& d);

// True iff p is strictly inside the convex CCW polygon (strictly left of
// every directed edge). Degenerate polygons contain nothing.
bool strictly_inside_convex(const std::vector<Point>& ccw_polygon,
                            const Point& p);

// Inclusive monotone chains over lex-sorted input; returned values are
// indices into `sorted`. Collinear boundary points are kept. The upper chain
// owns the vertical wall at minimum x, the lower chain the wall at maximum
// x, and the two share exactly their first and last vertex. For fully
// collinear input both chains contain every point.
std::vector<int> upper_chain(const std::vector<Point>& sorted);
std::vector<int> lower_chain(const std::vector<Point>& sorted);

// A convex-hull cycle: point ids in CCW order starting at the lex-min
// point. Fully collinear inputs yield the points in (x, y) order instead.
using HullCycle = std::vector<int>;

struct ConvexLayers {
  std::vector<HullCycle> layers;  // index 0 = outermost
  std::vector<int> depth;         // depth[id] = layer index; -1 for unused ids
};

// Boundary-inclusive convex hull: points interior to hull edges are part of
// the cycle. Throws InputError("empty point set") on empty input.
HullCycle convex_hull(const std::vector<Point>& points);

// Onion peeling by repeated convex_hull + removal.
ConvexLayers convex_layers_naive(const std::vector<Point>& points);

}  // namespace onion
