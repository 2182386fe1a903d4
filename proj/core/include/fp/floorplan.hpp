// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef FPGEN_CORE_FLOORPLAN_HPP_
#define FPGEN_CORE_FLOORPLAN_HPP_

#include <string>
#include <vector>

#include "fp/grid.hpp"
#include "fp/polygon.hpp"

namespace fp {

constexpr int kMaxRooms = 20;

/// Axis-aligned room descriptor (x, y, w, h, c): bottom-left corner, extents
/// in grid units, and semantic type. Derived data -- always the bounding box
/// of the room polygon.
struct RoomBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;
  int type = 0;

  bool operator==(const RoomBox&) const = default;
};

struct Room {
  RoomBox box;
  Polygon polygon;

  bool operator==(const Room&) const = default;
};

RoomBox box_from_polygon(const Polygon& poly, int type);

/// A boundary polygon (door encoded: vertices 0 and 1 are the front-door
/// endpoints) plus the ordered rooms. The unit of data, supervision and
/// generator output.
struct Floorplan {
  int grid_bits = kDefaultGridBits;
  RoomTypeTable types;
  Polygon boundary;
  std::vector<Room> rooms;

  int room_count() const { return static_cast<int>(rooms.size()); }

  bool operator==(const Floorplan&) const = default;
};

/// Canonical room order: the living room (if any) first, the rest sorted by
/// increasing box x, ties by increasing y, remaining ties stable by original
/// index. Throws DomainError if two living rooms are present.
std::vector<Room> order_rooms(const std::vector<Room>& rooms);

/// Cyclically rotates a clockwise boundary so the two door endpoints occupy
/// positions 0 and 1 in clockwise order, and sets door_encoded. The two
/// indices must name adjacent vertices (in either order). Door endpoints
/// interior to an edge have to be materialized as vertices beforehand (see
/// insert_vertex_on_edge). Throws DomainError for non-adjacent indices.
Polygon encode_front_door(const Polygon& boundary, int vertex_a, int vertex_b);

/// Inserts a vertex at point p on edge (edge_index, edge_index+1) unless it
/// already coincides with an existing endpoint; returns the index of the
/// vertex at p. Throws GeometryError if p is not on that edge.
int insert_vertex_on_edge(Polygon& poly, int edge_index, Point p);

enum class Violation {
  kRoomCountRange,      // M outside [1, 20]
  kVertexCountRange,    // polygon with < 3 or > 40 vertices
  kCoordinateRange,     // coordinate outside [0, 2^bits - 1]
  kNotClockwise,        // signed area not negative
  kNotSimple,           // self-intersection / repeated vertex / spike
  kBoxMismatch,         // RoomBox != bounding box of polygon
  kNotCanonicalOrder,   // rooms not in order_rooms() order
  kDoorNotEncoded,      // boundary lacks the door flag
  kUnknownRoomType,     // type id outside the taxonomy
  kLivingRoomMissing,   // no living room (soft; dataset-level expectation)
  kLivingRoomDuplicate, // more than one living room
  kDegenerateExtent,    // box width or height < 1
};

struct ValidationIssue {
  Violation code;
  std::string detail;
  bool hard = true;  // soft issues are reported but do not reject a plan
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool valid() const { return issues.empty(); }
  bool has(Violation code) const;
  int hard_count() const;
};

/// Checks every structural invariant and returns the full list of
/// violations. Never throws; an empty report means the plan is valid.
ValidationReport validate(const Floorplan& fp);

std::string violation_name(Violation code);

}  // namespace fp

#endif  // FPGEN_CORE_FLOORPLAN_HPP_
