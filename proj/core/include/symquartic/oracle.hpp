#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "symquartic/forms.hpp"

namespace symquartic {

enum class Hint { LikelyHolds, LikelyFails };

std::string_view to_string(Hint hint);

struct OracleOptions {
  /// Number of stratified samples before local descent.
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
};

struct OracleReport {
  double min_estimate = 0.0;
  /// Scaled so that max(|x|, |y|, |z|) = 1.
  std::array<double, 3> argmin{};
  std::size_t samples = 0;
  Hint hint = Hint::LikelyHolds;
};

/// Values above -tolerance(form) count as nonnegative.
double tolerance(const QuarticForm& form);

/// Floating-point minimum of f over the cube surface max|.| = 1 (reals) or the
/// simplex x + y + z = 1 (orthant): stratified jittered sampling followed by
/// pattern search from the best 32 samples. Deterministic in (budget, seed).
OracleReport numeric_min(const QuarticForm& form, const OracleOptions& options = {});

/// A rational point with exactly negative f, found by rounding the numeric
/// argmin with denominators 1, 10, ..., 10^6; std::nullopt otherwise.
std::optional<std::array<Rational, 3>> find_counterexample(const QuarticForm& form,
                                                           const OracleOptions& options = {});

}  // namespace symquartic
