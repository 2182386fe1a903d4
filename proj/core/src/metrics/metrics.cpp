// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#include "fp/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "fp/error.hpp"

namespace fp::metrics {

namespace {

using std::int64_t;

double ratio(int64_t num, int64_t den) {
  return den == 0 ? 0.0 : double(num) / double(den);
}

// One vertical edge of a rectilinear polygon: toggles interior parity for
// slabs strictly to its right.
struct VEdge {
  int x;
  int y_lo;
  int y_hi;
  int poly;  // index; rooms are 0..R-1, boundary is R
};

std::vector<VEdge> vertical_edges(const Polygon& poly, int id) {
  std::vector<VEdge> out;
  const int n = poly.size();
  for (int i = 0; i < n; ++i) {
    const Point& a = poly.vertices[static_cast<size_t>(i)];
    const Point& b = poly.vertices[static_cast<size_t>((i + 1) % n)];
    if (a.x == b.x && a.y != b.y) {
      out.push_back({a.x, std::min(a.y, b.y), std::max(a.y, b.y), id});
    }
  }
  return out;
}

bool exact_path_ok(const std::vector<Polygon>& rooms, const Polygon& boundary) {
  auto ok = [](const Polygon& p) { return is_rectilinear(p) && is_simple(p); };
  if (!ok(boundary)) return false;
  return std::all_of(rooms.begin(), rooms.end(), ok);
}

int64_t abs_shoelace_area2(const Polygon& p) {
  return std::abs(shoelace2(p.vertices));
}

AreaReport boolean_areas_exact(const std::vector<Polygon>& rooms,
                               const Polygon& boundary) {
  const int n_rooms = static_cast<int>(rooms.size());
  const int boundary_id = n_rooms;

  std::vector<VEdge> edges = vertical_edges(boundary, boundary_id);
  std::vector<int> xs;
  for (const Point& p : boundary.vertices) xs.push_back(p.x);
  for (int i = 0; i < n_rooms; ++i) {
    auto e = vertical_edges(rooms[static_cast<size_t>(i)], i);
    edges.insert(edges.end(), e.begin(), e.end());
    for (const Point& p : rooms[static_cast<size_t>(i)].vertices) {
      xs.push_back(p.x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  AreaReport rep;
  rep.boundary_area = abs_shoelace_area2(boundary) / 2;
  rep.room_areas.reserve(static_cast<size_t>(n_rooms));
  for (const Polygon& r : rooms) {
    rep.room_areas.push_back(abs_shoelace_area2(r) / 2);
  }

  int64_t covered = 0;      // union of rooms, inside boundary
  int64_t union_rooms = 0;  // union of rooms, anywhere
  int64_t overlap = 0;      // multiplicity above 1, inside boundary

  struct Toggle {
    int y;
    int poly;
  };
  for (size_t k = 0; k + 1 < xs.size(); ++k) {
    const int xa = xs[k];
    const int64_t width = xs[k + 1] - xa;

    std::vector<Toggle> toggles;
    for (const VEdge& e : edges) {
      if (e.x <= xa) {
        toggles.push_back({e.y_lo, e.poly});
        toggles.push_back({e.y_hi, e.poly});
      }
    }
    if (toggles.empty()) continue;
    std::sort(toggles.begin(), toggles.end(), [](const Toggle& a, const Toggle& b) {
      return a.y < b.y;
    });

    std::vector<char> parity(static_cast<size_t>(n_rooms + 1), 0);
    int rooms_inside = 0;
    bool in_boundary = false;
    size_t t = 0;
    while (t < toggles.size()) {
      const int y = toggles[t].y;
      while (t < toggles.size() && toggles[t].y == y) {
        const int id = toggles[t].poly;
        char& par = parity[static_cast<size_t>(id)];
        par ^= 1;
        if (id == boundary_id) {
          in_boundary = par;
        } else {
          rooms_inside += par ? 1 : -1;
        }
        ++t;
      }
      if (t == toggles.size()) break;
      const int64_t h = toggles[t].y - y;
      if (h <= 0) continue;
      const int64_t cell = h * width;
      if (rooms_inside > 0) {
        union_rooms += cell;
        if (in_boundary) {
          covered += cell;
          overlap += int64_t(rooms_inside - 1) * cell;
        }
      }
    }
  }

  rep.gap_area = rep.boundary_area - covered;
  rep.overlap_area = overlap;
  rep.exceed_area = union_rooms - covered;
  return rep;
}

}  // namespace

double AreaReport::gap_ratio() const { return ratio(gap_area, boundary_area); }
double AreaReport::overlap_ratio() const {
  return ratio(overlap_area, boundary_area);
}
double AreaReport::exceed_ratio() const {
  return ratio(exceed_area, exceed_area + boundary_area);
}

AreaReport boolean_areas_rasterized(const std::vector<Polygon>& rooms,
                                    const Polygon& boundary, int bits,
                                    int subdivision) {
  const int n = grid_size(bits) * subdivision;
  const int64_t den = 2 * subdivision;
  AreaReport rep;
  rep.unit = int64_t(subdivision) * subdivision;
  rep.approximate = subdivision > 1;
  rep.room_areas.assign(rooms.size(), 0);

  int64_t covered = 0, union_rooms = 0, overlap = 0, boundary_area = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Subcell midpoint ((i + 0.5) / s, (j + 0.5) / s) in grid units.
      const int64_t px = 2 * int64_t(i) + 1;
      const int64_t py = 2 * int64_t(j) + 1;
      const bool in_b = point_inside(boundary, px, py, den);
      int count = 0;
      for (size_t r = 0; r < rooms.size(); ++r) {
        if (point_inside(rooms[r], px, py, den)) {
          ++count;
          ++rep.room_areas[r];
        }
      }
      if (in_b) ++boundary_area;
      if (count > 0) {
        ++union_rooms;
        if (in_b) {
          ++covered;
          overlap += count - 1;
        }
      }
    }
  }
  rep.boundary_area = boundary_area;
  rep.gap_area = boundary_area - covered;
  rep.overlap_area = overlap;
  rep.exceed_area = union_rooms - covered;
  return rep;
}

AreaReport boolean_areas(const std::vector<Polygon>& rooms,
                         const Polygon& boundary) {
  if (exact_path_ok(rooms, boundary)) {
    return boolean_areas_exact(rooms, boundary);
  }
  // Non-rectilinear or non-simple input: measure by 4x subcell counting.
  int max_c = 1;
  for (const Point& p : boundary.vertices) max_c = std::max({max_c, p.x, p.y});
  for (const Polygon& r : rooms) {
    for (const Point& p : r.vertices) max_c = std::max({max_c, p.x, p.y});
  }
  int bits = kMinGridBits;
  while (grid_max(bits) < max_c && bits < kMaxGridBits) ++bits;
  return boolean_areas_rasterized(rooms, boundary, bits, 4);
}

AreaReport area_report(const Floorplan& fp) {
  std::vector<Polygon> rooms;
  rooms.reserve(fp.rooms.size());
  for (const Room& r : fp.rooms) rooms.push_back(r.polygon);
  return boolean_areas(rooms, fp.boundary);
}

namespace {

double mean_ratio(const std::vector<AreaReport>& reports,
                  double (AreaReport::*f)() const, const char* what) {
  if (reports.empty()) {
    throw DomainError(std::string(what) + ": empty report list");
  }
  double sum = 0;
  for (const AreaReport& r : reports) {
    if (r.boundary_area <= 0) {
      throw DomainError(std::string(what) + ": boundary area must be positive");
    }
    sum += (r.*f)();
  }
  return sum / double(reports.size());
}

}  // namespace

double mrg(const std::vector<AreaReport>& reports) {
  return mean_ratio(reports, &AreaReport::gap_ratio, "mrg");
}
double mro(const std::vector<AreaReport>& reports) {
  return mean_ratio(reports, &AreaReport::overlap_ratio, "mro");
}
double mre(const std::vector<AreaReport>& reports) {
  return mean_ratio(reports, &AreaReport::exceed_ratio, "mre");
}

namespace {

struct Segment {
  Point a, b;
};

std::vector<Segment> polygon_edges(const Polygon& poly) {
  std::vector<Segment> out;
  const int n = poly.size();
  for (int i = 0; i < n; ++i) {
    out.push_back({poly.vertices[static_cast<size_t>(i)],
                   poly.vertices[static_cast<size_t>((i + 1) % n)]});
  }
  return out;
}

// Length of the collinear overlap of two segments; 0 when they are not on
// one line.
double collinear_overlap(const Segment& e, const Segment& f) {
  const int64_t dx = e.b.x - e.a.x;
  const int64_t dy = e.b.y - e.a.y;
  const int64_t fx = f.b.x - f.a.x;
  const int64_t fy = f.b.y - f.a.y;
  if (dx * fy - dy * fx != 0) return 0.0;  // not parallel
  const int64_t ox = f.a.x - e.a.x;
  const int64_t oy = f.a.y - e.a.y;
  if (dx * oy - dy * ox != 0) return 0.0;  // parallel but different lines

  const double len = std::sqrt(double(dx * dx + dy * dy));
  if (len == 0) return 0.0;
  // Project everything onto e's direction, in length units.
  auto proj = [&](Point p) {
    return (double(p.x - e.a.x) * double(dx) + double(p.y - e.a.y) * double(dy)) / len;
  };
  const double e_lo = 0.0, e_hi = len;
  double f1 = proj(f.a), f2 = proj(f.b);
  if (f1 > f2) std::swap(f1, f2);
  return std::max(0.0, std::min(e_hi, f2) - std::max(e_lo, f1));
}

}  // namespace

std::vector<std::vector<bool>> adjacency_matrix(const Floorplan& fp,
                                                int min_shared) {
  const size_t m = fp.rooms.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  std::vector<std::vector<Segment>> edges;
  edges.reserve(m);
  for (const Room& r : fp.rooms) edges.push_back(polygon_edges(r.polygon));

  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      double shared = 0;
      for (const Segment& e : edges[i]) {
        for (const Segment& f : edges[j]) {
          shared += collinear_overlap(e, f);
        }
      }
      if (shared >= double(min_shared) - 1e-9) {
        adj[i][j] = adj[j][i] = true;
      }
    }
  }
  return adj;
}

namespace {

std::vector<int> type_counts(const Floorplan& fp) {
  std::vector<int> counts(static_cast<size_t>(fp.types.size()), 0);
  for (const Room& r : fp.rooms) {
    if (r.box.type >= 0 && r.box.type < fp.types.size()) {
      ++counts[static_cast<size_t>(r.box.type)];
    }
  }
  return counts;
}

void require_paired(const std::vector<Floorplan>& a,
                    const std::vector<Floorplan>& b, const char* what) {
  if (a.size() != b.size() || a.empty()) {
    throw DomainError(std::string(what) + ": sets must be nonempty and paired");
  }
}

double pair_mse_t(const Floorplan& g, const Floorplan& r) {
  const std::vector<int> cg = type_counts(g);
  const std::vector<int> cr = type_counts(r);
  const size_t k = std::max(cg.size(), cr.size());
  double sum = 0;
  for (size_t i = 0; i < k; ++i) {
    const int a = i < cg.size() ? cg[i] : 0;
    const int b = i < cr.size() ? cr[i] : 0;
    sum += double(a - b) * double(a - b);
  }
  return sum;
}

std::vector<std::vector<int>> type_pair_adjacency(const Floorplan& fp,
                                                  int min_shared, int k) {
  std::vector<std::vector<int>> counts(static_cast<size_t>(k),
                                       std::vector<int>(static_cast<size_t>(k), 0));
  const auto adj = adjacency_matrix(fp, min_shared);
  for (size_t i = 0; i < adj.size(); ++i) {
    for (size_t j = i + 1; j < adj.size(); ++j) {
      if (!adj[i][j]) continue;
      int a = fp.rooms[i].box.type;
      int b = fp.rooms[j].box.type;
      if (a < 0 || a >= k || b < 0 || b >= k) continue;
      if (a > b) std::swap(a, b);
      ++counts[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }
  }
  return counts;
}

double pair_mse_a(const Floorplan& g, const Floorplan& r, const MseConfig& cfg) {
  const int k = std::max(g.types.size(), r.types.size());
  const auto cg = type_pair_adjacency(g, cfg.min_shared, k);
  const auto cr = type_pair_adjacency(r, cfg.min_shared, k);
  double sum = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      const double d = cg[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                       cr[static_cast<size_t>(i)][static_cast<size_t>(j)];
      sum += d * d;
    }
  }
  return sum;
}

double room_area(const Room& r) {
  return double(std::abs(shoelace2(r.polygon.vertices))) / 2.0;
}

double pair_mse_s(const Floorplan& g, const Floorplan& r, const MseConfig& cfg) {
  const double scale = cfg.area_scale;
  std::vector<bool> used(r.rooms.size(), false);
  double sum = 0;
  for (const Room& gr : g.rooms) {
    const auto gc = centroid(gr.polygon);
    int best = -1;
    double best_d = std::numeric_limits<double>::max();
    for (size_t j = 0; j < r.rooms.size(); ++j) {
      if (used[j] || r.rooms[j].box.type != gr.box.type) continue;
      const auto rc = centroid(r.rooms[j].polygon);
      const double d = (gc.first - rc.first) * (gc.first - rc.first) +
                       (gc.second - rc.second) * (gc.second - rc.second);
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(j);
      }
    }
    if (best >= 0) {
      used[static_cast<size_t>(best)] = true;
      const double d = (room_area(gr) - room_area(r.rooms[static_cast<size_t>(best)])) / scale;
      sum += d * d;
    } else {
      const double a = room_area(gr) / scale;
      sum += a * a;
    }
  }
  for (size_t j = 0; j < r.rooms.size(); ++j) {
    if (!used[j]) {
      const double a = room_area(r.rooms[j]) / scale;
      sum += a * a;
    }
  }
  return sum;
}

}  // namespace

double mse_t(const std::vector<Floorplan>& generated,
             const std::vector<Floorplan>& reference) {
  require_paired(generated, reference, "mse_t");
  double sum = 0;
  for (size_t i = 0; i < generated.size(); ++i) {
    sum += pair_mse_t(generated[i], reference[i]);
  }
  return sum / double(generated.size());
}

double mse_a(const std::vector<Floorplan>& generated,
             const std::vector<Floorplan>& reference, const MseConfig& cfg) {
  require_paired(generated, reference, "mse_a");
  double sum = 0;
  for (size_t i = 0; i < generated.size(); ++i) {
    sum += pair_mse_a(generated[i], reference[i], cfg);
  }
  return sum / double(generated.size());
}

double mse_s(const std::vector<Floorplan>& generated,
             const std::vector<Floorplan>& reference, const MseConfig& cfg) {
  require_paired(generated, reference, "mse_s");
  double sum = 0;
  for (size_t i = 0; i < generated.size(); ++i) {
    sum += pair_mse_s(generated[i], reference[i], cfg);
  }
  return sum / double(generated.size());
}

EvalSummary evaluate(const std::vector<Floorplan>& generated,
                     const std::vector<Floorplan>& reference,
                     const MseConfig& cfg) {
  require_paired(generated, reference, "evaluate");
  EvalSummary s;
  s.n_samples = static_cast<int>(generated.size());
  std::vector<AreaReport> reports;
  reports.reserve(generated.size());
  for (size_t i = 0; i < generated.size(); ++i) {
    AreaReport rep = area_report(generated[i]);
    EvalSummary::SampleRow row;
    row.gap_ratio = rep.gap_ratio();
    row.overlap_ratio = rep.overlap_ratio();
    row.exceed_ratio = rep.exceed_ratio();
    row.mse_t = pair_mse_t(generated[i], reference[i]);
    row.mse_a = pair_mse_a(generated[i], reference[i], cfg);
    row.mse_s = pair_mse_s(generated[i], reference[i], cfg);
    s.rows.push_back(row);
    reports.push_back(std::move(rep));
  }
  s.mrg = mrg(reports);
  s.mro = mro(reports);
  s.mre = mre(reports);
  s.mse_t = mse_t(generated, reference);
  s.mse_a = mse_a(generated, reference, cfg);
  s.mse_s = mse_s(generated, reference, cfg);
  return s;
}

std::string summary_to_csv(const EvalSummary& summary, const MseConfig& cfg) {
  std::ostringstream out;
  out.precision(9);
  out << "# fpgen evaluate,n=" << summary.n_samples
      << ",min_shared=" << cfg.min_shared << ",area_scale=" << cfg.area_scale
      << "\n";
  out << "id,gap_ratio,overlap_ratio,exceed_ratio,mse_t,mse_a,mse_s\n";
  for (size_t i = 0; i < summary.rows.size(); ++i) {
    const auto& r = summary.rows[i];
    out << i << ',' << r.gap_ratio << ',' << r.overlap_ratio << ','
        << r.exceed_ratio << ',' << r.mse_t << ',' << r.mse_a << ',' << r.mse_s
        << "\n";
  }
  out << "aggregate,MRG=" << summary.mrg << ",MRO=" << summary.mro
      << ",MRE=" << summary.mre << ",MSE_T=" << summary.mse_t
      << ",MSE_A=" << summary.mse_a << ",MSE_S=" << summary.mse_s
      << ",N=" << summary.n_samples << "\n";
  return out.str();
}

}  // namespace fp::metrics
