#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "zetasphere/types.hpp"

namespace zetasphere::cli {

/// Settings read from a key=value file. Blank lines and '#' comments are skipped.
struct Config {
  int workers = 1;
  double scan_step = 0.25;
  double flow_a = 0.1;
  double flow_t = 1.0;

  /// Canonical "key=value" lines in sorted key order.
  std::string canonical() const;
  /// FNV-1a 64 of canonical(), as 16 hex digits.
  std::string digest() const;
};

/// Parses config text. Throws DomainError on malformed lines or unknown keys.
Config parse_config(std::string_view text, Config base = {});

/// Loads $ZETASPHERE_CONFIG if set (missing file is an error), otherwise
/// ./zetasphere.conf when present, otherwise defaults.
Config load_config();

std::uint64_t fnv1a64(std::string_view bytes);

/// Parses "a", "bi", "a+bi", "a-bi" (also 'j'). Throws DomainError.
Complex parse_complex(std::string_view text);

/// Parses "start:stop:step" with step > 0 and stop >= start.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  /// Points start + k·step for k = 0..round((stop - start)/step).
  std::size_t count() const;
  double at(std::size_t k) const { return start + static_cast<double>(k) * step; }
};

Range parse_range(std::string_view text);

}  // namespace zetasphere::cli
