// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#include "fp/data/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "fp/error.hpp"

namespace fp::data {

namespace {

void append_staircase(std::vector<Point>& out, Point start, int dx1, int dy1,
                      int dx2, int dy2, const std::vector<int>& first,
                      const std::vector<int>& second) {
  // Alternates a move along (dx1, dy1) scaled by first[i] with a move along
  // (dx2, dy2) scaled by second[i]. Pushes every intermediate corner,
  // including the start.
  Point cur = start;
  out.push_back(cur);
  for (size_t i = 0; i < first.size(); ++i) {
    cur.x += dx1 * first[i];
    cur.y += dy1 * first[i];
    out.push_back(cur);
    cur.x += dx2 * second[i];
    cur.y += dy2 * second[i];
    out.push_back(cur);
  }
}

std::vector<int> staircase_extents(Rng& rng, int steps, int max_total) {
  std::vector<int> parts(static_cast<size_t>(steps), 2);
  int extra = uniform_int(rng, 0, std::max(0, max_total - 2 * steps));
  for (int i = 0; i < steps; ++i) {
    const int take = (i + 1 == steps) ? extra : uniform_int(rng, 0, extra);
    parts[static_cast<size_t>(i)] += take;
    extra -= take;
  }
  return parts;
}

}  // namespace

void SynthParams::check() const {
  if (room_count_min < 1 || room_count_min > room_count_max ||
      room_count_max > kMaxRooms) {
    throw DomainError("SynthParams: room count range must satisfy 1 <= min <= max <= 20");
  }
  if (min_room_extent < 2) {
    throw DomainError("SynthParams: min_room_extent must be >= 2");
  }
  if (boundary_notches < 0) {
    throw DomainError("SynthParams: boundary_notches must be >= 0");
  }
  if (!valid_grid_bits(grid_bits)) {
    throw DomainError("SynthParams: unsupported grid_bits");
  }
}

Polygon synth_boundary(Rng& rng, int notches, int grid_bits) {
  if (notches < 0) throw DomainError("synth_boundary: notches must be >= 0");
  const int n = grid_size(grid_bits);
  const int w = uniform_int(rng, n / 2, n - 1);
  const int h = uniform_int(rng, n / 2, n - 1);
  const int x0 = uniform_int(rng, 0, (n - 1) - w);
  const int y0 = uniform_int(rng, 0, (n - 1) - h);

  // Per-corner notch budget: extents stay inside the corner's quadrant so
  // opposite notches never meet, and every edge keeps length >= 2.
  const int a_max = w / 2 - 1;
  const int b_max = h / 2 - 1;
  const int steps_per_corner = std::min(a_max, b_max) / 2;
  const int cap = std::min(4 * steps_per_corner, (kMaxPolygonVertices - 6) / 2);
  const int effective = std::min(notches, cap);

  std::array<int, 4> corner_steps{0, 0, 0, 0};
  for (int i = 0; i < effective; ++i) ++corner_steps[static_cast<size_t>(i % 4)];

  std::vector<Point> v;
  // Clockwise (y-up): bottom-left, top-left, top-right, bottom-right.
  {  // bottom-left: enter along the bottom edge, leave up the left edge
    const int c = corner_steps[0];
    if (c == 0) {
      v.push_back({x0, y0});
    } else {
      const auto a = staircase_extents(rng, c, a_max);
      const auto b = staircase_extents(rng, c, b_max);
      int total_a = 0;
      for (int e : a) total_a += e;
      append_staircase(v, {x0 + total_a, y0}, 0, 1, -1, 0, b, a);
    }
  }
  {  // top-left
    const int c = corner_steps[1];
    if (c == 0) {
      v.push_back({x0, y0 + h});
    } else {
      const auto a = staircase_extents(rng, c, a_max);
      const auto b = staircase_extents(rng, c, b_max);
      int total_b = 0;
      for (int e : b) total_b += e;
      append_staircase(v, {x0, y0 + h - total_b}, 1, 0, 0, 1, a, b);
    }
  }
  {  // top-right
    const int c = corner_steps[2];
    if (c == 0) {
      v.push_back({x0 + w, y0 + h});
    } else {
      const auto a = staircase_extents(rng, c, a_max);
      const auto b = staircase_extents(rng, c, b_max);
      int total_a = 0;
      for (int e : a) total_a += e;
      append_staircase(v, {x0 + w - total_a, y0 + h}, 0, -1, 1, 0, b, a);
    }
  }
  {  // bottom-right
    const int c = corner_steps[3];
    if (c == 0) {
      v.push_back({x0 + w, y0});
    } else {
      const auto a = staircase_extents(rng, c, a_max);
      const auto b = staircase_extents(rng, c, b_max);
      int total_b = 0;
      for (int e : b) total_b += e;
      append_staircase(v, {x0 + w, y0 + total_b}, -1, 0, 0, -1, a, b);
    }
  }

  Polygon out;
  out.vertices = std::move(v);
  return out;
}

namespace {

struct CellSet {
  std::vector<Point> cells;

  BoundingBox bbox() const {
    BoundingBox bb{cells[0].x, cells[0].y, cells[0].x, cells[0].y};
    for (const Point& c : cells) {
      bb.min_x = std::min(bb.min_x, c.x);
      bb.min_y = std::min(bb.min_y, c.y);
      bb.max_x = std::max(bb.max_x, c.x + 1);
      bb.max_y = std::max(bb.max_y, c.y + 1);
    }
    return bb;
  }
};

int cell_key(int x, int y) { return x * 4096 + y; }

bool is_connected(const std::vector<Point>& cells) {
  if (cells.empty()) return false;
  std::unordered_set<int> all;
  all.reserve(cells.size() * 2);
  for (const Point& c : cells) all.insert(cell_key(c.x, c.y));
  std::unordered_set<int> seen;
  std::deque<Point> queue{cells[0]};
  seen.insert(cell_key(cells[0].x, cells[0].y));
  while (!queue.empty()) {
    const Point c = queue.front();
    queue.pop_front();
    const std::array<Point, 4> nbrs{Point{c.x + 1, c.y}, Point{c.x - 1, c.y},
                                    Point{c.x, c.y + 1}, Point{c.x, c.y - 1}};
    for (const Point& nb : nbrs) {
      const int k = cell_key(nb.x, nb.y);
      if (all.count(k) && !seen.count(k)) {
        seen.insert(k);
        queue.push_back(nb);
      }
    }
  }
  return seen.size() == all.size();
}

// Traces the clockwise outline of a connected, hole-free, pinch-free cell
// set and collapses collinear runs.
Polygon trace_cells(const std::vector<Point>& cells) {
  std::unordered_set<int> inside;
  inside.reserve(cells.size() * 2);
  for (const Point& c : cells) inside.insert(cell_key(c.x, c.y));
  auto in = [&](int x, int y) { return inside.count(cell_key(x, y)) != 0; };

  // Directed unit edges along the outline, oriented with the interior on
  // the right (clockwise under y-up axes).
  std::unordered_map<int, int> next_corner;
  int start_key = std::numeric_limits<int>::max();
  auto corner_key = [](int x, int y) { return x * 4096 + y; };
  auto add_edge = [&](int ax, int ay, int bx, int by) {
    next_corner[corner_key(ax, ay)] = corner_key(bx, by);
    start_key = std::min(start_key, corner_key(ax, ay));
  };
  for (const Point& c : cells) {
    if (!in(c.x, c.y - 1)) add_edge(c.x + 1, c.y, c.x, c.y);          // bottom
    if (!in(c.x, c.y + 1)) add_edge(c.x, c.y + 1, c.x + 1, c.y + 1);  // top
    if (!in(c.x - 1, c.y)) add_edge(c.x, c.y, c.x, c.y + 1);          // left
    if (!in(c.x + 1, c.y)) add_edge(c.x + 1, c.y + 1, c.x + 1, c.y);  // right
  }

  std::vector<Point> path;
  int cur = start_key;
  do {
    path.push_back({cur / 4096, cur % 4096});
    auto it = next_corner.find(cur);
    if (it == next_corner.end()) {
      throw GeometryError("trace_cells: open outline (pinched region?)");
    }
    cur = it->second;
  } while (cur != start_key);
  if (path.size() != next_corner.size()) {
    throw GeometryError("trace_cells: outline does not visit every edge");
  }

  std::vector<Point> merged;
  const size_t n = path.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& prev = path[(i + n - 1) % n];
    const Point& cur_p = path[i];
    const Point& next = path[(i + 1) % n];
    const std::int64_t cr = std::int64_t(cur_p.x - prev.x) * (next.y - cur_p.y) -
                            std::int64_t(cur_p.y - prev.y) * (next.x - cur_p.x);
    if (cr != 0) merged.push_back(cur_p);
  }
  Polygon out;
  out.vertices = std::move(merged);
  return out;
}

std::vector<Point> rasterize_cells(const Polygon& poly, int grid_bits) {
  const int n = grid_size(grid_bits);
  std::vector<Point> cells;
  const BoundingBox bb = bounding_box(poly);
  for (int x = std::max(0, bb.min_x); x < std::min(n - 1, bb.max_x); ++x) {
    for (int y = std::max(0, bb.min_y); y < std::min(n - 1, bb.max_y); ++y) {
      if (cell_inside(poly, x, y)) cells.push_back({x, y});
    }
  }
  return cells;
}

// Recursive guillotine split of `cells` into k connected pieces with both
// bbox extents >= min_ext. Returns false when no cut works.
bool guillotine(Rng& rng, const std::vector<Point>& cells, int k, int min_ext,
                std::vector<std::vector<Point>>& out) {
  if (k == 1) {
    out.push_back(cells);
    return true;
  }
  const CellSet region{cells};
  const BoundingBox bb = region.bbox();

  struct Cut {
    bool vertical;
    int coord;
  };
  std::vector<Cut> cuts;
  for (int c = bb.min_x + min_ext; c <= bb.max_x - min_ext; ++c) {
    cuts.push_back({true, c});
  }
  for (int c = bb.min_y + min_ext; c <= bb.max_y - min_ext; ++c) {
    cuts.push_back({false, c});
  }
  // Deterministic shuffle.
  for (size_t i = cuts.size(); i > 1; --i) {
    std::swap(cuts[i - 1], cuts[uniform_int(rng, 0, static_cast<int>(i) - 1)]);
  }

  const int min_area = min_ext * min_ext;
  int tried = 0;
  for (const Cut& cut : cuts) {
    if (tried >= 12) break;
    std::vector<Point> lo, hi;
    for (const Point& c : cells) {
      const int v = cut.vertical ? c.x : c.y;
      (v < cut.coord ? lo : hi).push_back(c);
    }
    if (lo.empty() || hi.empty()) continue;
    ++tried;

    const CellSet ls{lo}, hs{hi};
    const BoundingBox lb = ls.bbox(), hb = hs.bbox();
    if (lb.width() < min_ext || lb.height() < min_ext) continue;
    if (hb.width() < min_ext || hb.height() < min_ext) continue;
    if (!is_connected(lo) || !is_connected(hi)) continue;

    // Allocate room counts proportionally to area, keeping both sides
    // feasible.
    const double share = double(lo.size()) / double(cells.size());
    int k_lo = std::clamp(static_cast<int>(std::llround(share * k)), 1, k - 1);
    bool ok = false;
    for (int delta = 0; delta < k && !ok; ++delta) {
      for (const int cand : {k_lo - delta, k_lo + delta}) {
        if (cand < 1 || cand > k - 1) continue;
        if (static_cast<int>(lo.size()) >= cand * min_area &&
            static_cast<int>(hi.size()) >= (k - cand) * min_area) {
          k_lo = cand;
          ok = true;
          break;
        }
      }
    }
    if (!ok) continue;

    std::vector<std::vector<Point>> sub;
    if (guillotine(rng, lo, k_lo, min_ext, sub) &&
        guillotine(rng, hi, k - k_lo, min_ext, sub)) {
      out.insert(out.end(), sub.begin(), sub.end());
      return true;
    }
  }
  return false;
}

// Integer collinear overlap of two axis-aligned segments; 0 when they are
// on different lines.
struct EdgeOverlap {
  int lo = 0, hi = 0;   // overlap interval along the shared axis
  bool valid = false;
};

EdgeOverlap axis_overlap(Point a, Point b, Point c, Point d) {
  EdgeOverlap r;
  if (a.x == b.x && c.x == d.x && a.x == c.x) {  // both vertical, same line
    r.lo = std::max(std::min(a.y, b.y), std::min(c.y, d.y));
    r.hi = std::min(std::max(a.y, b.y), std::max(c.y, d.y));
    r.valid = r.hi > r.lo;
  } else if (a.y == b.y && c.y == d.y && a.y == c.y) {  // both horizontal
    r.lo = std::max(std::min(a.x, b.x), std::min(c.x, d.x));
    r.hi = std::min(std::max(a.x, b.x), std::max(c.x, d.x));
    r.valid = r.hi > r.lo;
  }
  return r;
}

}  // namespace

Floorplan synth_floorplan(Rng& rng, const SynthParams& params) {
  params.check();

  for (int attempt = 0; attempt < 64; ++attempt) {
    Polygon boundary = synth_boundary(rng, params.boundary_notches, params.grid_bits);
    const int m = uniform_int(rng, params.room_count_min, params.room_count_max);
    const std::vector<Point> cells = rasterize_cells(boundary, params.grid_bits);
    const int min_area = params.min_room_extent * params.min_room_extent;
    if (static_cast<int>(cells.size()) < m * min_area) continue;

    std::vector<std::vector<Point>> pieces;
    if (!guillotine(rng, cells, m, params.min_room_extent, pieces)) continue;

    std::vector<Room> rooms;
    rooms.reserve(pieces.size());
    bool bad = false;
    size_t largest = 0;
    for (size_t i = 0; i < pieces.size(); ++i) {
      Polygon poly = trace_cells(pieces[i]);
      if (poly.size() > kMaxPolygonVertices) {
        bad = true;
        break;
      }
      if (pieces[i].size() > pieces[largest].size()) largest = i;
      Room room;
      room.polygon = std::move(poly);
      rooms.push_back(std::move(room));
    }
    if (bad) continue;

    for (size_t i = 0; i < rooms.size(); ++i) {
      const int type = (i == largest)
                           ? kLivingRoomId
                           : uniform_int(rng, 1, RoomTypeTable().size() - 1);
      rooms[i].box = box_from_polygon(rooms[i].polygon, type);
    }
    const Polygon living_poly = rooms[largest].polygon;
    rooms = order_rooms(rooms);

    // Front door: a 2-unit grid-aligned slot on a boundary edge shared with
    // the living room.
    struct DoorSpot {
      int edge;
      bool vertical;
      int lo, hi;
    };
    std::vector<DoorSpot> spots;
    const int nb = boundary.size();
    for (int e = 0; e < nb; ++e) {
      const Point a = boundary.vertices[static_cast<size_t>(e)];
      const Point b = boundary.vertices[static_cast<size_t>((e + 1) % nb)];
      const int nl = living_poly.size();
      for (int f = 0; f < nl; ++f) {
        const Point c = living_poly.vertices[static_cast<size_t>(f)];
        const Point d = living_poly.vertices[static_cast<size_t>((f + 1) % nl)];
        const EdgeOverlap ov = axis_overlap(a, b, c, d);
        if (ov.valid && ov.hi - ov.lo >= 2) {
          spots.push_back({e, a.x == b.x, ov.lo, ov.hi});
        }
      }
    }
    if (spots.empty()) continue;  // living room does not reach the boundary

    const DoorSpot spot = spots[static_cast<size_t>(
        uniform_int(rng, 0, static_cast<int>(spots.size()) - 1))];
    const int start = uniform_int(rng, spot.lo, spot.hi - 2);
    const Point a = boundary.vertices[static_cast<size_t>(spot.edge)];
    Point p0, p1;
    if (spot.vertical) {
      p0 = {a.x, start};
      p1 = {a.x, start + 2};
    } else {
      p0 = {start, a.y};
      p1 = {start + 2, a.y};
    }
    // Door endpoints ordered along the edge direction so they stay adjacent
    // after insertion.
    const Point b = boundary.vertices[static_cast<size_t>((spot.edge + 1) % nb)];
    const bool forward = (spot.vertical ? (b.y > a.y ? p0.y < p1.y : p0.y > p1.y)
                                        : (b.x > a.x ? p0.x < p1.x : p0.x > p1.x));
    if (!forward) std::swap(p0, p1);
    const int i0 = insert_vertex_on_edge(boundary, spot.edge, p0);
    int edge1 = i0;  // p1 lies on the sub-edge starting at p0
    const int i1 = insert_vertex_on_edge(boundary, edge1, p1);
    boundary = encode_front_door(boundary, i0 < i1 ? i0 : i1, i0 < i1 ? i1 : i0);

    Floorplan fp;
    fp.grid_bits = params.grid_bits;
    fp.boundary = std::move(boundary);
    fp.rooms = std::move(rooms);
    return fp;
  }
  throw DomainError("synth_floorplan: parameters infeasible (no valid partition found)");
}

Floorplan synth_sample(const SynthParams& params, std::uint64_t index) {
  Rng rng = make_rng(params.seed, index);
  return synth_floorplan(rng, params);
}

}  // namespace fp::data
