#pragma once

#include <filesystem>
#include <string>

#include "stylo/vectors.hpp"

namespace stylo {

inline constexpr int kBaselineFormatVersion = 1;

/// Max |column mean - 100| over the active dimensions of the unweighted
/// normalized vectors.
double normalization_residual(const BaselineProfile& b);

/// Serializes to versioned JSON. Doubles round-trip exactly; NaN is null.
/// Throws ValidationError if the normalization self-test fails (residual > 1e-9).
std::string baseline_to_json(const BaselineProfile& b);
BaselineProfile baseline_from_json(const std::string& text);

void save_baseline(const BaselineProfile& b, const std::filesystem::path& path);
BaselineProfile load_baseline(const std::filesystem::path& path);

}  // namespace stylo
