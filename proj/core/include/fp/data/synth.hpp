// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef FPGEN_CORE_DATA_SYNTH_HPP_
#define FPGEN_CORE_DATA_SYNTH_HPP_

#include "fp/floorplan.hpp"
#include "fp/rng.hpp"

namespace fp::data {

/// Parameters for the synthetic floorplan generator. Plans are exact
/// partitions of the boundary interior, so ground truth scores
/// MRG = MRO = MRE = 0 by construction.
struct SynthParams {
  int room_count_min = 3;
  int room_count_max = 8;
  int boundary_notches = 2;
  int min_room_extent = 4;  // grid units, >= 2
  int grid_bits = kDefaultGridBits;
  std::uint64_t seed = 0;

  void check() const;  // throws DomainError on bad ranges
};

/// Simple clockwise rectilinear polygon with 4 + 2*notches vertices: a
/// random rectangle spanning at least half the grid with axis-aligned
/// notches carved at its corners. All edges have length >= 2. Notch counts
/// beyond what the vertex cap (40) and the grid can host are clamped.
Polygon synth_boundary(Rng& rng, int notches, int grid_bits = kDefaultGridBits);

/// One synthetic plan: rooms exactly partition the boundary interior via
/// recursive axis-aligned guillotine cuts on the cell grid. The largest room
/// is the living room and the front door sits on a boundary edge adjacent to
/// it. Output always passes validate() with an empty report.
/// Throws DomainError when the parameters are infeasible.
Floorplan synth_floorplan(Rng& rng, const SynthParams& params);

/// Deterministic per-index sample: synth_floorplan over an rng derived from
/// (params.seed, index).
Floorplan synth_sample(const SynthParams& params, std::uint64_t index);

}  // namespace fp::data

#endif  // FPGEN_CORE_DATA_SYNTH_HPP_
