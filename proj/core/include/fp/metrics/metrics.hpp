// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef FPGEN_CORE_METRICS_METRICS_HPP_
#define FPGEN_CORE_METRICS_METRICS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fp/floorplan.hpp"

namespace fp::metrics {

/// Areas of one sample in grid-cell^2 units, scaled by `unit`: a stored
/// value v means v / unit cells^2. unit == 1 on the exact integer path;
/// the rasterization fallback for non-rectilinear or non-simple input uses
/// unit == 16 (4x4 subcells) and sets `approximate`.
struct AreaReport {
  std::int64_t boundary_area = 0;
  std::int64_t gap_area = 0;
  std::int64_t overlap_area = 0;
  std::int64_t exceed_area = 0;
  std::vector<std::int64_t> room_areas;
  std::int64_t unit = 1;
  bool approximate = false;

  double gap_ratio() const;
  double overlap_ratio() const;
  double exceed_ratio() const;  // exceed / (exceed + boundary)
};

/// Gap / overlap / exceed decomposition:
///   covered  = area(union of rooms, clipped to the boundary)
///   gap      = area(boundary) - covered
///   overlap  = sum over cells inside the boundary of max(0, cover_count - 1)
///   exceed   = area(union of rooms) - covered-union part inside the boundary
/// Exact integer scanline when all polygons are rectilinear and simple;
/// otherwise falls back to 4x resolution cell counting (approximate flag).
AreaReport boolean_areas(const std::vector<Polygon>& rooms,
                         const Polygon& boundary);

AreaReport area_report(const Floorplan& fp);

/// Independent unit-cell oracle: per-cell cover counting over the
/// 2^bits x 2^bits grid. Used to cross-check the scanline path.
AreaReport boolean_areas_rasterized(const std::vector<Polygon>& rooms,
                                    const Polygon& boundary, int bits,
                                    int subdivision = 1);

double mrg(const std::vector<AreaReport>& reports);
double mro(const std::vector<AreaReport>& reports);
double mre(const std::vector<AreaReport>& reports);

/// Rooms i and j are adjacent iff their polygons share collinear boundary
/// segments totalling at least min_shared grid units. Corner contact does
/// not count. Symmetric, false diagonal.
std::vector<std::vector<bool>> adjacency_matrix(const Floorplan& fp,
                                                int min_shared = 2);

struct MseConfig {
  int min_shared = 2;     // adjacency threshold, grid units
  double area_scale = 100.0;  // MSE_S areas are measured in cells/area_scale
};

/// Squared L2 between per-type room-count vectors, averaged over pairs.
double mse_t(const std::vector<Floorplan>& generated,
             const std::vector<Floorplan>& reference);

/// Squared L2 between per-type-pair adjacency-count matrices (upper
/// triangle), averaged over pairs.
double mse_a(const std::vector<Floorplan>& generated,
             const std::vector<Floorplan>& reference,
             const MseConfig& cfg = {});

/// Rooms matched greedily by (type, nearest centroid); squared area
/// differences in (cells/area_scale)^2 over matched rooms, unmatched rooms
/// contribute their full squared area; averaged over pairs.
double mse_s(const std::vector<Floorplan>& generated,
             const std::vector<Floorplan>& reference,
             const MseConfig& cfg = {});

struct EvalSummary {
  double mrg = 0;
  double mro = 0;
  double mre = 0;
  double mse_t = 0;
  double mse_a = 0;
  double mse_s = 0;
  int n_samples = 0;

  struct SampleRow {
    double gap_ratio = 0;
    double overlap_ratio = 0;
    double exceed_ratio = 0;
    double mse_t = 0;
    double mse_a = 0;
    double mse_s = 0;
  };
  std::vector<SampleRow> rows;
};

/// Runs the full metric suite on aligned generated/reference sets. The
/// ratio metrics are per-generated-sample geometric consistency; the MSE
/// metrics compare each generated plan to its reference partner.
EvalSummary evaluate(const std::vector<Floorplan>& generated,
                     const std::vector<Floorplan>& reference,
                     const MseConfig& cfg = {});

/// Comma-separated text: one header record, per-sample rows, and an
/// aggregate block at the end.
std::string summary_to_csv(const EvalSummary& summary, const MseConfig& cfg);

}  // namespace fp::metrics

#endif  // FPGEN_CORE_METRICS_METRICS_HPP_
