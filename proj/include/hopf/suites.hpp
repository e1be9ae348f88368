#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/hopf.hpp"
#include "hopf/iterated.hpp"

namespace hopf {

struct SuiteConfig {
  /// Field requested by the user. When empty, large main-theorem and
  /// corollary runs move to F_101.
  std::optional<Field> field;
  /// Window for the gamma suite (default [-1, 3]) and an extra sampled window
  /// for window-oracle.
  std::optional<Window> window;
  std::uint64_t seed = 1;
  /// Random pairs per sampled window, random triples, random maps.
  std::size_t samples = 100;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;  // residual location, rank, or error message
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::string algebra;
  std::string field;
  std::string window;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool ok() const;
  std::string text(bool timing = true) const;
  std::string json(bool timing = true) const;
};

/// The suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite. Failures inside a check,
/// including exceptions, are reported as failed checks.
SuiteReport run_suite(std::string_view suite, const HopfData& h, const SuiteConfig& cfg = {});

/// A builtin spec, or a path to an algebra file (loaded without verification
/// so that broken files reach the axiom suite). `field` moves the algebra.
HopfData resolve_algebra(std::string_view spec, std::optional<Field> field = std::nullopt);

}  // namespace hopf
