// Copyright (c) 2026 fpgen contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef FPGEN_CORE_ERROR_HPP_
#define FPGEN_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input value outside its documented domain (bad coordinate, bad ratio, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Degenerate or self-intersecting geometry.
class GeometryError : public Error {
 public:
  explicit GeometryError(const std::string& what) : Error(what) {}
};

/// Malformed floorplan document; carries field/line context in the message.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Filesystem-level failure (unreadable file, unwritable directory).
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

/// Bad run configuration (unknown key, invalid preset, missing input).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Training diverged or produced non-finite values.
class TrainingError : public Error {
 public:
  explicit TrainingError(const std::string& what) : Error(what) {}
};

}  // namespace fp

#endif  // FPGEN_CORE_ERROR_HPP_
