#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "lam/chord.hpp"

namespace lam {

/// Convex hull of a finite set of circle points, kept as the strictly
/// increasing list of its vertices in [0,1). A 1-vertex polygon is a point,
/// a 2-vertex polygon is a chord.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Angle> vertices);

  static Polygon parse(std::string_view text);

  const std::vector<Angle>& vertices() const { return vs_; }
  size_t size() const { return vs_.size(); }
  bool empty() const { return vs_.empty(); }
  bool has_vertex(const Angle& x) const;

  /// Consecutive vertex pairs, wrapping; empty for points.
  std::vector<Chord> edges() const;

  /// Complementary open arcs between consecutive vertices; their lengths
  /// sum to 1. A point has the single hole of length 1.
  std::vector<Arc> holes() const;

  /// True iff {u,v} are circularly adjacent vertices (an edge of the hull).
  bool is_edge(const Chord& c) const;

  bool operator==(const Polygon& o) const = default;
  std::strong_ordering operator<=>(const Polygon& o) const;

  std::string str() const;

 private:
  std::vector<Angle> vs_;
};

/// Convex hull of the sigma-images of the vertices; cardinality may drop.
Polygon polygon_image(int degree, const Polygon& p);

/// Rotate every vertex by the given angle.
Polygon polygon_rotate(const Polygon& p, const Angle& by);

/// True iff the convex hulls meet in the CLOSED disk (shared boundary
/// points count). Exact: the hulls are disjoint iff all vertices of q lie
/// strictly inside a single open hole of p.
bool polygons_intersect(const Polygon& p, const Polygon& q);

}  // namespace lam
