// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#include "fp/polygon.hpp"

#include <algorithm>
#include <cmath>

#include "fp/error.hpp"

namespace fp {

namespace {

using std::int64_t;

int64_t cross(Point o, Point a, Point b) {
  return int64_t(a.x - o.x) * (b.y - o.y) - int64_t(a.y - o.y) * (b.x - o.x);
}

bool on_segment(Point a, Point b, Point p) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// True when segments [p1,p2] and [p3,p4] share at least one point.
bool segments_touch(Point p1, Point p2, Point p3, Point p4) {
  const int64_t d1 = cross(p3, p4, p1);
  const int64_t d2 = cross(p3, p4, p2);
  const int64_t d3 = cross(p1, p2, p3);
  const int64_t d4 = cross(p1, p2, p4);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && on_segment(p3, p4, p1)) return true;
  if (d2 == 0 && on_segment(p3, p4, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, p3)) return true;
  if (d4 == 0 && on_segment(p1, p2, p4)) return true;
  return false;
}

}  // namespace

int64_t shoelace2(const std::vector<Point>& vertices) {
  int64_t sum = 0;
  const size_t n = vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % n];
    sum += int64_t(a.x) * b.y - int64_t(b.x) * a.y;
  }
  return sum;
}

bool is_rectilinear(const Polygon& poly) {
  const int n = poly.size();
  if (n < kMinPolygonVertices) return false;
  for (int i = 0; i < n; ++i) {
    const Point& a = poly.vertices[static_cast<size_t>(i)];
    const Point& b = poly.vertices[static_cast<size_t>((i + 1) % n)];
    if (a.x != b.x && a.y != b.y) return false;
  }
  return true;
}

bool is_simple(const Polygon& poly) {
  const int n = poly.size();
  if (n < kMinPolygonVertices) return false;
  const auto& v = poly.vertices;
  auto at = [&](int i) { return v[static_cast<size_t>(((i % n) + n) % n)]; };

  // No zero-length edges, no 180-degree reversal at any vertex.
  for (int i = 0; i < n; ++i) {
    if (at(i) == at(i + 1)) return false;
    const Point in{at(i).x - at(i - 1).x, at(i).y - at(i - 1).y};
    const Point out{at(i + 1).x - at(i).x, at(i + 1).y - at(i).y};
    const int64_t cr = int64_t(in.x) * out.y - int64_t(in.y) * out.x;
    const int64_t dot = int64_t(in.x) * out.x + int64_t(in.y) * out.y;
    if (cr == 0 && dot < 0) return false;
  }

  // Non-adjacent edges must not share any point.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(at(i), at(i + 1), at(j), at(j + 1))) return false;
    }
  }
  return true;
}

int64_t polygon_area(const Polygon& poly) {
  if (!is_simple(poly)) {
    throw GeometryError("polygon_area: polygon is not simple");
  }
  return std::abs(shoelace2(poly.vertices)) / 2;
}

Polygon orient_clockwise(const Polygon& poly) {
  if (!is_simple(poly)) {
    throw GeometryError("orient_clockwise: polygon is not simple");
  }
  const int64_t s2 = shoelace2(poly.vertices);
  if (s2 == 0) {
    throw GeometryError("orient_clockwise: polygon has zero area");
  }
  if (s2 < 0) return poly;  // already clockwise

  Polygon out = poly;
  const size_t n = poly.vertices.size();
  out.vertices[0] = poly.vertices[0];
  for (size_t i = 1; i < n; ++i) {
    out.vertices[i] = poly.vertices[n - i];
  }
  return out;
}

BoundingBox bounding_box(const Polygon& poly) {
  if (poly.vertices.empty()) {
    throw GeometryError("bounding_box: empty polygon");
  }
  BoundingBox bb{poly.vertices[0].x, poly.vertices[0].y, poly.vertices[0].x,
                 poly.vertices[0].y};
  for (const Point& p : poly.vertices) {
    bb.min_x = std::min(bb.min_x, p.x);
    bb.min_y = std::min(bb.min_y, p.y);
    bb.max_x = std::max(bb.max_x, p.x);
    bb.max_y = std::max(bb.max_y, p.y);
  }
  return bb;
}

std::pair<double, double> centroid(const Polygon& poly) {
  const auto& v = poly.vertices;
  const size_t n = v.size();
  const int64_t a2 = shoelace2(v);
  if (a2 == 0) {
    double sx = 0, sy = 0;
    for (const Point& p : v) {
      sx += p.x;
      sy += p.y;
    }
    return {sx / double(n), sy / double(n)};
  }
  double cx = 0, cy = 0;
  for (size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    const double w = double(int64_t(a.x) * b.y - int64_t(b.x) * a.y);
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  const double inv = 1.0 / (3.0 * double(a2));
  return {cx * inv, cy * inv};
}

bool point_inside(const Polygon& poly, int64_t num_x, int64_t num_y,
                  int64_t den) {
  const auto& v = poly.vertices;
  const size_t n = v.size();
  bool inside = false;
  for (size_t i = 0; i < n; ++i) {
    const int64_t ax = int64_t(v[i].x) * den;
    const int64_t ay = int64_t(v[i].y) * den;
    const int64_t bx = int64_t(v[(i + 1) % n].x) * den;
    const int64_t by = int64_t(v[(i + 1) % n].y) * den;
    if ((ay > num_y) == (by > num_y)) continue;
    // Horizontal ray to +x: crossing iff the edge's x at height num_y
    // exceeds num_x. Scaled by (by - ay) to stay in integers.
    const int64_t num = (ax - num_x) * (by - ay) + (bx - ax) * (num_y - ay);
    if (num != 0 && (num > 0) == (by > ay)) inside = !inside;
  }
  return inside;
}

bool cell_inside(const Polygon& poly, int px, int py) {
  return point_inside(poly, 2 * int64_t(px) + 1, 2 * int64_t(py) + 1, 2);
}

}  // namespace fp
