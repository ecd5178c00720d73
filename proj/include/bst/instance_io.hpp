#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "bst/instance.hpp"

namespace bst {

/// Instance text format: one point per line, "x y color", separated by
/// whitespace and/or commas. Blank lines and lines starting with '#' are
/// skipped. Errors (ErrorCode::Parse) name the offending line; color and
/// point-count problems surface as the ColoredInstance errors.
ColoredInstance parse_instance(std::istream& in, std::string_view source = "input");
ColoredInstance read_instance(const std::string& path);

/// Writes coordinates with 17 significant digits, so parsing it back gives
/// the same instance.
void write_instance(std::ostream& out, const ColoredInstance& instance);

enum class Distribution { Uniform, Clustered };

std::string_view to_string(Distribution distribution);
std::optional<Distribution> parse_distribution(std::string_view name);

/// Deterministic instance of n distinct points in the unit square, colors
/// assigned round-robin (point i gets color i % k). Requires n >= 2 and
/// 2 <= k <= n (InvalidArgument otherwise).
ColoredInstance generate_instance(std::size_t n, std::size_t k, std::uint64_t seed,
                                  Distribution distribution = Distribution::Uniform);

}  // namespace bst
