#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bst/boruvka.hpp"
#include "bst/instance.hpp"

namespace bst {

/// Identifies one canonical set: the points whose component label has bit
/// `component_bit` equal to `component_value` and whose dense color has bit
/// `color_bit` equal to `color_value`. With two colors the single color bit
/// is the color itself.
struct CanonicalIndex {
  int component_bit = 0;
  int component_value = 0;
  int color_bit = 0;
  int color_value = 0;

  friend bool operator==(const CanonicalIndex&, const CanonicalIndex&) = default;
};

/// The canonical sets whose union is the set of points unrelated to `p`
/// (different color, different component): one per (component bit, color
/// bit) pair, with both bit values complemented. Sets may be empty and may
/// overlap. Labels are renumbered densely first. Throws InvalidLabels.
std::vector<std::vector<Index>> canonical_decomposition(const ColoredInstance& instance,
                                                        std::span<const Index> labels, Index p);

/// Index of every set returned by canonical_decomposition, in the same order.
std::vector<CanonicalIndex> canonical_indices(const ColoredInstance& instance, std::span<const Index> labels,
                                              Index p);

/// All nearest (Min) or farthest (Max) unrelated points. Builds one nearest
/// or farthest structure per nonempty canonical set and answers every point
/// with the best of its complementary sets' query results, under EdgeOrder.
/// `structures_built`, if given, receives the number of structures built.
/// Throws InvalidLabels.
std::vector<std::optional<Partner>> all_extreme_unrelated(const ColoredInstance& instance,
                                                          std::span<const Index> labels, Objective objective,
                                                          std::size_t* structures_built = nullptr);

/// Stage solver backed by all_extreme_unrelated.
StageSolver canonical_stage_solver(const ColoredInstance& instance, Objective objective,
                                   std::size_t* structures_built = nullptr);

}  // namespace bst
