#pragma once

#include <stdexcept>
#include <string>

namespace biphoton {

/// Invalid configuration, parameters, or grid/bin layout (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Physics-domain failure: non-finite response, degenerate model,
/// unreconstructable measurement set (CLI exit code 3).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem / data-file failure (CLI exit code 4).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace biphoton
