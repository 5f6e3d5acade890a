#pragma once

#include <array>
#include <vector>

namespace obkit {

/// 2-D point (or vector) in pixel coordinates.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 p);

/// Canonical (center, size, angle) parameterization. theta rotates the
/// w-axis away from +x, in radians. w and h must be positive.
struct BoxParams {
  double cx = 0.0;
  double cy = 0.0;
  double w = 1.0;
  double h = 1.0;
  double theta = 0.0;
};

/// Convex quadrilateral stored with vertices in counter-clockwise order
/// (positive shoelace orientation). Clockwise input is silently reversed at
/// construction; non-convex, non-finite, or zero-area input throws
/// std::invalid_argument.
class OrientedBox {
 public:
  explicit OrientedBox(const std::array<Point2, 4>& vertices);
  static OrientedBox from_params(const BoxParams& params);

  const std::array<Point2, 4>& vertices() const { return verts_; }
  double area() const { return area_; }
  Point2 center() const;

  /// Largest center-to-vertex distance.
  double circumradius() const;
  /// Longest vertex-to-vertex distance.
  double diagonal() const;

 private:
  std::array<Point2, 4> verts_;
  double area_ = 0.0;
};

OrientedBox make_box(double cx, double cy, double w, double h,
                     double theta = 0.0);

/// |cross(b-a, c-a)| / 2; zero for collinear input.
double triangle_area(Point2 a, Point2 b, Point2 c);

/// Unsigned shoelace area of a simple polygon.
double polygon_area(const std::vector<Point2>& poly);

/// Areas of the four triangles formed by p and each box edge, in edge order
/// (edge i runs from vertex i to vertex i+1).
std::array<double, 4> edge_triangle_areas(Point2 p, const OrientedBox& box);

/// True iff the edge triangles around p partition the box, i.e. their area
/// sum does not exceed the box area. Boundary points count as inside; the
/// comparison carries a 1e-9 relative tolerance to absorb roundoff there.
bool contains_exact(Point2 p, const OrientedBox& box);

/// a ∩ b as a convex polygon in counter-clockwise order; empty when the
/// boxes are disjoint or touch in fewer than three points.
std::vector<Point2> convex_intersection(const OrientedBox& a,
                                        const OrientedBox& b);

/// Intersection area over union area, in [0, 1].
double rotated_iou(const OrientedBox& a, const OrientedBox& b);

}  // namespace obkit
