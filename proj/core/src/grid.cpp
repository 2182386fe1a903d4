// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#include "fp/grid.hpp"

#include <algorithm>
#include <cmath>

#include "fp/error.hpp"

namespace fp {

bool valid_grid_bits(int bits) {
  return bits >= kMinGridBits && bits <= kMaxGridBits;
}

int quantize_coord(double v, int bits) {
  if (!valid_grid_bits(bits)) {
    throw DomainError("quantize_coord: unsupported bit width " + std::to_string(bits));
  }
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError("quantize_coord: value " + std::to_string(v) + " outside [0,1]");
  }
  const int n = grid_size(bits);
  const int g = static_cast<int>(std::floor(v * n));
  return std::clamp(g, 0, n - 1);
}

double dequantize_coord(int g, int bits) {
  if (!valid_grid_bits(bits)) {
    throw DomainError("dequantize_coord: unsupported bit width " + std::to_string(bits));
  }
  if (g < 0 || g > grid_max(bits)) {
    throw DomainError("dequantize_coord: bin " + std::to_string(g) + " outside grid");
  }
  return (g + 0.5) / grid_size(bits);
}

const std::vector<std::string>& RoomTypeTable::default_labels() {
  static const std::vector<std::string> kLabels = {
      "living", "bedroom", "bathroom", "kitchen", "balcony", "storage"};
  return kLabels;
}

RoomTypeTable::RoomTypeTable(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw DomainError("RoomTypeTable: label set must be nonempty");
  }
  for (size_t i = 0; i < labels_.size(); ++i) {
    for (size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) {
        throw DomainError("RoomTypeTable: duplicate label '" + labels_[i] + "'");
      }
    }
  }
}

const std::string& RoomTypeTable::label(int id) const {
  if (id < 0 || id >= size()) {
    throw DomainError("RoomTypeTable: id " + std::to_string(id) + " out of range");
  }
  return labels_[static_cast<size_t>(id)];
}

int RoomTypeTable::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[static_cast<size_t>(i)] == label) return i;
  }
  return -1;
}

}  // namespace fp
