// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef FPGEN_CORE_RNG_HPP_
#define FPGEN_CORE_RNG_HPP_

#include <cstdint>
#include <random>

namespace fp {

// All randomness in the project flows through explicitly seeded engines so
// that runs are reproducible bit-for-bit on one machine. Never seed from
// std::random_device.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Derives an independent stream from (seed, stream index), e.g. one per
/// sample or per epoch.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{seed, stream};
  return Rng(seq);
}

/// Uniform integer in [lo, hi], inclusive.
inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Uniform real in [lo, hi).
inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double normal(Rng& rng, double mean, double stddev) {
  return std::normal_distribution<double>(mean, stddev)(rng);
}

}  // namespace fp

#endif  // FPGEN_CORE_RNG_HPP_
