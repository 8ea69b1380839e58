#include "onion/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "onion/errors.hpp"

namespace onion {

namespace {

// ---------------------------------------------------------------------------
// Exact sign of the 2x2 difference determinant.
//
// The fast path is the standard floating-point evaluation with an error
// bound; when the bound cannot certify the sign we recompute the determinant
// exactly, either in 128-bit integers (integral inputs) or as a
// floating-point expansion built from error-free sums and products.
// ---------------------------------------------------------------------------

// x + y == a + b exactly, |y| <= ulp(x)/2.
inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  double bvirt = x - a;
  double avirt = x - bvirt;
  double bround = b - bvirt;
  double around = a - avirt;
  y = around + bround;
}

// x + y == a * b exactly.
inline void two_prod(double a, double b, double& x, double& y) {
  x = a * b;
  y = std::fma(a, b, -x);
}

// e[0..n) is a nonoverlapping expansion, components in increasing magnitude.
// Adds the single double b in place; returns the new component count.
inline int grow_expansion(double* e, int n, double b) {
  double q = b;
  for (int i = 0; i < n; ++i) {
    double s, err;
    two_sum(q, e[i], s, err);
    e[i] = err;
    q = s;
  }
  e[n] = q;
  return n + 1;
}

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// det = qx*ry - qx*py - px*ry - qy*rx + qy*px + py*rx, summed exactly.
int exact_orientation(double px, double py, double qx, double qy, double rx,
                      double ry) {
  double e[16];
  int n = 0;
  auto add = [&](double a, double b, bool negate) {
    double hi, lo;
    two_prod(a, b, hi, lo);
    if (negate) {
      hi = -hi;
      lo = -lo;
    }
    n = grow_expansion(e, n, lo);
    n = grow_expansion(e, n, hi);
  };
  add(qx, ry, false);
  add(qx, py, true);
  add(px, ry, true);
  add(qy, rx, true);
  add(qy, px, false);
  add(py, rx, false);
  for (int i = n - 1; i >= 0; --i)
    if (e[i] != 0.0) return sign_of(e[i]);
  return 0;
}

constexpr double kIntLimit = 1073741824.0;  // 2^30

inline bool small_integer(double v) {
  return v == std::floor(v) && v <= kIntLimit && v >= -kIntLimit;
}

// (3 + 16*eps)*eps with eps = 2^-53; certifies the filtered sign.
const double kCcwErrBound = [] {
  double eps = std::numeric_limits<double>::epsilon() * 0.5;
  return (3.0 + 16.0 * eps) * eps;
}();

}  // namespace

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  double detleft = (q.x - p.x) * (r.y - p.y);
  double detright = (q.y - p.y) * (r.x - p.x);
  double det = detleft - detright;

  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return static_cast<Orientation>(sign_of(det));
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return static_cast<Orientation>(sign_of(det));
    detsum = -detleft - detright;
  } else {
    return static_cast<Orientation>(sign_of(det));
  }
  if (det >= kCcwErrBound * detsum || -det >= kCcwErrBound * detsum)
    return static_cast<Orientation>(sign_of(det));

  if (small_integer(p.x) && small_integer(p.y) && small_integer(q.x) &&
      small_integer(q.y) && small_integer(r.x) && small_integer(r.y)) {
    auto dx1 = static_cast<long long>(q.x - p.x);
    auto dy1 = static_cast<long long>(q.y - p.y);
    auto dx2 = static_cast<long long>(r.x - p.x);
    auto dy2 = static_cast<long long>(r.y - p.y);
    __int128 cross = static_cast<__int128>(dx1) * dy2 -
                     static_cast<__int128>(dy1) * dx2;
    return static_cast<Orientation>((cross > 0) - (cross < 0));
  }
  return static_cast<Orientation>(
      exact_orientation(p.x, p.y, q.x, q.y, r.x, r.y));
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c,
                             const Point& d) {
  int o1 = static_cast<int>(orientation(a, b, c));
  int o2 = static_cast<int>(orientation(a, b, d));
  int o3 = static_cast<int>(orientation(c, d, a));
  int o4 = static_cast<int>(orientation(c, d, b));
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool strictly_inside_convex(const std::vector<Point>& ccw_polygon,
                            const Point& p) {
  std::size_t n = ccw_polygon.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ccw_polygon[i];
    const Point& b = ccw_polygon[(i + 1) % n];
    if (orientation(a, b, p) != Orientation::Left) return false;
  }
  return true;
}

std::vector<int> upper_chain(const std::vector<Point>& sorted) {
  std::vector<int> ch;
  ch.reserve(sorted.size());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    // pop only on strict left turns so collinear boundary points survive
    while (ch.size() >= 2 &&
           orientation(sorted[ch[ch.size() - 2]], sorted[ch.back()],
                       sorted[i]) == Orientation::Left)
      ch.pop_back();
    ch.push_back(i);
  }
  return ch;
}

std::vector<int> lower_chain(const std::vector<Point>& sorted) {
  std::vector<int> ch;
  ch.reserve(sorted.size());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    while (ch.size() >= 2 &&
           orientation(sorted[ch[ch.size() - 2]], sorted[ch.back()],
                       sorted[i]) == Orientation::Right)
      ch.pop_back();
    ch.push_back(i);
  }
  return ch;
}

namespace {

bool same_coords(const Point& a, const Point& b) {
  return a.x == b.x && a.y == b.y;
}

}  // namespace

HullCycle convex_hull(const std::vector<Point>& points) {
  if (points.empty()) throw InputError("empty point set");

  std::vector<Point> s(points);
  std::sort(s.begin(), s.end(), [](const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.id < b.id;
  });

  // Coincident points share their boundary status, so the chains run over
  // unique coordinates and each output slot expands to its whole group.
  std::vector<Point> uniq;
  std::vector<std::vector<int>> group;
  for (const Point& p : s) {
    if (!uniq.empty() && same_coords(uniq.back(), p)) {
      group.back().push_back(p.id);
    } else {
      uniq.push_back(p);
      group.push_back({p.id});
    }
  }

  auto expand = [&](const std::vector<int>& idxs) {
    HullCycle out;
    for (int i : idxs)
      for (int id : group[i]) out.push_back(id);
    return out;
  };
  auto all_indices = [&] {
    std::vector<int> idxs(uniq.size());
    for (std::size_t i = 0; i < uniq.size(); ++i) idxs[i] = static_cast<int>(i);
    return idxs;
  };

  if (uniq.size() <= 2) return expand(all_indices());

  std::vector<int> up = upper_chain(uniq);
  std::vector<int> lo = lower_chain(uniq);
  if (up.size() == uniq.size() && lo.size() == uniq.size())
    return expand(all_indices());  // fully collinear: degenerate cycle

  // CCW: lower chain left-to-right, then upper chain right-to-left without
  // the shared endpoints.
  std::vector<int> cycle = lo;
  for (std::size_t k = up.size() - 1; k-- > 1;) cycle.push_back(up[k]);
  return expand(cycle);
}

ConvexLayers convex_layers_naive(const std::vector<Point>& points) {
  if (points.empty()) throw InputError("empty point set");

  int max_id = 0;
  for (const Point& p : points) max_id = std::max(max_id, p.id);

  ConvexLayers result;
  result.depth.assign(max_id + 1, -1);

  std::vector<Point> remaining(points);
  std::vector<char> taken(max_id + 1, 0);
  while (!remaining.empty()) {
    HullCycle cycle = convex_hull(remaining);
    int layer = static_cast<int>(result.layers.size());
    for (int id : cycle) {
      result.depth[id] = layer;
      taken[id] = 1;
    }
    result.layers.push_back(std::move(cycle));
    std::vector<Point> next;
    next.reserve(remaining.size());
    for (const Point& p : remaining)
      if (!taken[p.id]) next.push_back(p);
    remaining.swap(next);
  }
  return result;
}

}  // namespace onion
