// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef FPGEN_CORE_IO_HPP_
#define FPGEN_CORE_IO_HPP_

#include <filesystem>
#include <string>

#include "fp/floorplan.hpp"

namespace fp {

// Floorplan document format (JSON). Top-level keys, in order:
//   grid_bits   int
//   room_types  ordered label list
//   boundary    { "vertices": [[x,y], ...], "door": [i0, i1] }
//   rooms       [ { "type": label, "vertices": [[x,y], ...] }, ... ]
// All coordinates are integers on the grid. Room boxes are derived data and
// are recomputed on load, never stored.

/// Serializes to the document format. Output is deterministic
/// (deserialize(serialize(fp)) == fp field-for-field).
std::string serialize(const Floorplan& fp);

/// Parses a document. Throws ParseError with field context on malformed
/// input, including grid-range violations.
Floorplan deserialize(const std::string& text);

Floorplan load_floorplan(const std::filesystem::path& path);
void save_floorplan(const Floorplan& fp, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace fp

#endif  // FPGEN_CORE_IO_HPP_
