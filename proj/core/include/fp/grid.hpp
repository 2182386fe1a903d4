// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef FPGEN_CORE_GRID_HPP_
#define FPGEN_CORE_GRID_HPP_

#include <string>
#include <vector>

namespace fp {

// Coordinates live on an integer grid of 2^bits bins covering the normalized
// unit extent. The default is 6 bits (values 0..63); 5 and 7 bits are
// supported for the quantization ablations.
constexpr int kDefaultGridBits = 6;
constexpr int kMinGridBits = 5;
constexpr int kMaxGridBits = 7;

inline int grid_size(int bits) { return 1 << bits; }
inline int grid_max(int bits) { return (1 << bits) - 1; }

bool valid_grid_bits(int bits);

/// Quantizes v in [0,1] to a bin index: clamp(floor(v * 2^bits), 0, 2^bits-1).
/// Throws DomainError if v is outside [0,1] or bits is unsupported.
int quantize_coord(double v, int bits);

/// Inverse mapping for rendering: returns the bin midpoint (g + 0.5) / 2^bits.
double dequantize_coord(int g, int bits);

/// Semantic room type: a small id plus a display label. Id 0 is always the
/// living room in the default taxonomy.
struct RoomType {
  int id = 0;
  std::string name;

  bool operator==(const RoomType&) const = default;
};

constexpr int kLivingRoomId = 0;

/// Ordered label set defining the room taxonomy. The default has six
/// classes; LIFULL-style taxonomies use twelve.
class RoomTypeTable {
 public:
  RoomTypeTable() : RoomTypeTable(default_labels()) {}
  explicit RoomTypeTable(std::vector<std::string> labels);

  static const std::vector<std::string>& default_labels();

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int id) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Returns the id for a label, or -1 if unknown.
  int find(const std::string& label) const;

  bool operator==(const RoomTypeTable&) const = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace fp

#endif  // FPGEN_CORE_GRID_HPP_
