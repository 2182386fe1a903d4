// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#include "fp/floorplan.hpp"

#include <algorithm>
#include <numeric>

#include "fp/error.hpp"

namespace fp {

RoomBox box_from_polygon(const Polygon& poly, int type) {
  const BoundingBox bb = bounding_box(poly);
  return RoomBox{bb.min_x, bb.min_y, bb.width(), bb.height(), type};
}

std::vector<Room> order_rooms(const std::vector<Room>& rooms) {
  int living = -1;
  for (size_t i = 0; i < rooms.size(); ++i) {
    if (rooms[i].box.type == kLivingRoomId) {
      if (living >= 0) {
        throw DomainError("order_rooms: more than one living room");
      }
      living = static_cast<int>(i);
    }
  }

  std::vector<int> idx(rooms.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    const bool la = a == living;
    const bool lb = b == living;
    if (la != lb) return la;  // living room first
    const RoomBox& ra = rooms[static_cast<size_t>(a)].box;
    const RoomBox& rb = rooms[static_cast<size_t>(b)].box;
    if (ra.x != rb.x) return ra.x < rb.x;
    return ra.y < rb.y;  // stable keeps original index for full ties
  });

  std::vector<Room> out;
  out.reserve(rooms.size());
  for (int i : idx) out.push_back(rooms[static_cast<size_t>(i)]);
  return out;
}

Polygon encode_front_door(const Polygon& boundary, int vertex_a, int vertex_b) {
  const int n = boundary.size();
  if (n < kMinPolygonVertices) {
    throw DomainError("encode_front_door: boundary has too few vertices");
  }
  if (vertex_a < 0 || vertex_a >= n || vertex_b < 0 || vertex_b >= n ||
      vertex_a == vertex_b) {
    throw DomainError("encode_front_door: bad vertex indices");
  }

  // Normalize so that `first` is followed by `second` in the stored order.
  int first;
  if ((vertex_a + 1) % n == vertex_b) {
    first = vertex_a;
  } else if ((vertex_b + 1) % n == vertex_a) {
    first = vertex_b;
  } else {
    throw DomainError("encode_front_door: door endpoints are not adjacent");
  }

  Polygon out = boundary;
  out.door_encoded = true;
  if (first == 0) return out;
  std::rotate(out.vertices.begin(), out.vertices.begin() + first,
              out.vertices.end());
  return out;
}

int insert_vertex_on_edge(Polygon& poly, int edge_index, Point p) {
  const int n = poly.size();
  if (edge_index < 0 || edge_index >= n) {
    throw DomainError("insert_vertex_on_edge: edge index out of range");
  }
  const Point a = poly.vertices[static_cast<size_t>(edge_index)];
  const Point b = poly.vertices[static_cast<size_t>((edge_index + 1) % n)];
  if (p == a) return edge_index;
  if (p == b) return (edge_index + 1) % n;

  const std::int64_t cr =
      std::int64_t(b.x - a.x) * (p.y - a.y) - std::int64_t(b.y - a.y) * (p.x - a.x);
  const bool within = std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                      std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
  if (cr != 0 || !within) {
    throw GeometryError("insert_vertex_on_edge: point not on edge");
  }
  poly.vertices.insert(poly.vertices.begin() + edge_index + 1, p);
  return edge_index + 1;
}

bool ValidationReport::has(Violation code) const {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const ValidationIssue& v) { return v.code == code; });
}

int ValidationReport::hard_count() const {
  return static_cast<int>(
      std::count_if(issues.begin(), issues.end(),
                    [](const ValidationIssue& v) { return v.hard; }));
}

std::string violation_name(Violation code) {
  switch (code) {
    case Violation::kRoomCountRange: return "room_count_range";
    case Violation::kVertexCountRange: return "vertex_count_range";
    case Violation::kCoordinateRange: return "coordinate_range";
    case Violation::kNotClockwise: return "not_clockwise";
    case Violation::kNotSimple: return "not_simple";
    case Violation::kBoxMismatch: return "box_mismatch";
    case Violation::kNotCanonicalOrder: return "not_canonical_order";
    case Violation::kDoorNotEncoded: return "door_not_encoded";
    case Violation::kUnknownRoomType: return "unknown_room_type";
    case Violation::kLivingRoomMissing: return "living_room_missing";
    case Violation::kLivingRoomDuplicate: return "living_room_duplicate";
    case Violation::kDegenerateExtent: return "degenerate_extent";
  }
  return "unknown";
}

namespace {

void check_polygon(const Polygon& poly, const std::string& what, int bits,
                   ValidationReport& report) {
  const int n = poly.size();
  if (n < kMinPolygonVertices || n > kMaxPolygonVertices) {
    report.issues.push_back({Violation::kVertexCountRange,
                             what + " has " + std::to_string(n) + " vertices",
                             true});
    if (n < kMinPolygonVertices) return;  // nothing else is meaningful
  }
  const int hi = grid_max(bits);
  for (const Point& p : poly.vertices) {
    if (p.x < 0 || p.x > hi || p.y < 0 || p.y > hi) {
      report.issues.push_back(
          {Violation::kCoordinateRange,
           what + " vertex (" + std::to_string(p.x) + "," + std::to_string(p.y) +
               ") outside [0," + std::to_string(hi) + "]",
           true});
      break;
    }
  }
  if (!is_simple(poly)) {
    report.issues.push_back({Violation::kNotSimple, what + " is not simple", true});
    return;
  }
  if (shoelace2(poly.vertices) >= 0) {
    report.issues.push_back(
        {Violation::kNotClockwise, what + " is not clockwise", true});
  }
}

}  // namespace

ValidationReport validate(const Floorplan& fp) {
  ValidationReport report;

  const int m = fp.room_count();
  if (m < 1 || m > kMaxRooms) {
    report.issues.push_back({Violation::kRoomCountRange,
                             "plan has " + std::to_string(m) + " rooms", true});
  }

  check_polygon(fp.boundary, "boundary", fp.grid_bits, report);
  if (!fp.boundary.door_encoded) {
    report.issues.push_back(
        {Violation::kDoorNotEncoded, "boundary has no front door", true});
  }

  int living = 0;
  for (int i = 0; i < m; ++i) {
    const Room& room = fp.rooms[static_cast<size_t>(i)];
    const std::string what = "room " + std::to_string(i);
    check_polygon(room.polygon, what, fp.grid_bits, report);

    if (room.box.type < 0 || room.box.type >= fp.types.size()) {
      report.issues.push_back({Violation::kUnknownRoomType,
                               what + " type " + std::to_string(room.box.type),
                               true});
    } else if (room.box.type == kLivingRoomId) {
      ++living;
    }
    if (room.box.w < 1 || room.box.h < 1) {
      report.issues.push_back(
          {Violation::kDegenerateExtent, what + " box extent < 1", true});
    }
    if (room.polygon.size() >= kMinPolygonVertices) {
      const RoomBox derived = box_from_polygon(room.polygon, room.box.type);
      if (!(derived == room.box)) {
        report.issues.push_back(
            {Violation::kBoxMismatch,
             what + " box differs from its polygon bounding box", true});
      }
    }
  }

  if (living > 1) {
    report.issues.push_back({Violation::kLivingRoomDuplicate,
                             std::to_string(living) + " living rooms", true});
  } else if (living == 0 && m >= 1) {
    // Dataset-level expectation: reported, but external data is not rejected
    // for it.
    report.issues.push_back(
        {Violation::kLivingRoomMissing, "no living room", false});
  }

  if (living <= 1 && m >= 1) {
    const std::vector<Room> ordered = order_rooms(fp.rooms);
    if (!(ordered == fp.rooms)) {
      report.issues.push_back({Violation::kNotCanonicalOrder,
                               "rooms are not in canonical order", true});
    }
  }

  return report;
}

}  // namespace fp
