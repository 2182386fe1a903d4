// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef FPGEN_CORE_POLYGON_HPP_
#define FPGEN_CORE_POLYGON_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace fp {

struct Point {
  int x = 0;
  int y = 0;

  bool operator==(const Point&) const = default;
};

constexpr int kMaxPolygonVertices = 40;
constexpr int kMinPolygonVertices = 3;

/// A closed polygon on the integer grid, stored as an ordered vertex list
/// (the last vertex connects back to the first). Room polygons and the
/// boundary are kept clockwise under the y-up convention, i.e. their signed
/// shoelace area is negative. When door_encoded is set, vertices[0] and
/// vertices[1] are the two front-door endpoints.
struct Polygon {
  std::vector<Point> vertices;
  bool door_encoded = false;

  int size() const { return static_cast<int>(vertices.size()); }

  bool operator==(const Polygon&) const = default;
};

/// Twice the signed area (the raw shoelace sum). Positive for
/// counter-clockwise vertex order with y-up axes.
std::int64_t shoelace2(const std::vector<Point>& vertices);

/// Exact integer area |shoelace|/2. Grid-rectilinear polygons always have an
/// even shoelace sum; for other integer polygons the result truncates the
/// half cell. Throws GeometryError on self-intersecting input.
std::int64_t polygon_area(const Polygon& poly);

/// True when every edge is axis-aligned.
bool is_rectilinear(const Polygon& poly);

/// True when the closed vertex chain has no self-intersection, no repeated
/// consecutive vertex, and no 180-degree reversal spike. Collinear
/// consecutive edges going the same way are allowed (door endpoints are
/// materialized exactly like that).
bool is_simple(const Polygon& poly);

/// Reorders the vertex cycle to clockwise (negative shoelace area) while
/// preserving the starting vertex. Throws GeometryError for zero-area or
/// self-intersecting input.
Polygon orient_clockwise(const Polygon& poly);

struct BoundingBox {
  int min_x = 0;
  int min_y = 0;
  int max_x = 0;
  int max_y = 0;

  int width() const { return max_x - min_x; }
  int height() const { return max_y - min_y; }

  bool operator==(const BoundingBox&) const = default;
};

BoundingBox bounding_box(const Polygon& poly);

/// Area centroid (shoelace moments). Falls back to the vertex mean for
/// zero-area input.
std::pair<double, double> centroid(const Polygon& poly);

/// True when the point (px + 0.5, py + 0.5), i.e. the midpoint of grid cell
/// (px, py), lies inside the polygon under even-odd parity. Exact integer
/// arithmetic (doubled coordinates), valid for arbitrary integer polygons.
bool cell_inside(const Polygon& poly, int px, int py);

/// Even-odd parity test for the point (num_x/den, num_y/den) given as exact
/// rationals with den > 0. The point must not lie on an edge for the result
/// to be meaningful; callers pick off-lattice sample points.
bool point_inside(const Polygon& poly, std::int64_t num_x, std::int64_t num_y,
                  std::int64_t den);

}  // namespace fp

#endif  // FPGEN_CORE_POLYGON_HPP_
