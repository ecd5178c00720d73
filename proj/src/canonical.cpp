#include "bst/canonical.hpp"

#include <string>

#include "bst/error.hpp"
#include "bst/triangulation.hpp"
#include "spatial.hpp"

namespace bst {
namespace {

struct Layout {
  std::vector<Index> labels;  // dense component labels
  std::size_t component_bits = 0;
  std::size_t color_bits = 0;

  std::size_t pairs() const { return component_bits * color_bits; }

  std::size_t set_id(std::size_t i, std::size_t j, int b, int bc) const {
    return (((i * color_bits + j) * 2) + static_cast<std::size_t>(b)) * 2 + static_cast<std::size_t>(bc);
  }
};

int bit(Index value, std::size_t i) { return static_cast<int>((value >> i) & 1); }

Layout make_layout(const ColoredInstance& instance, std::span<const Index> labels) {
  const std::size_t n = instance.size();
  if (labels.size() != n) {
    throw Error(ErrorCode::InvalidLabels, "expected " + std::to_string(n) + " component labels, got " +
                                              std::to_string(labels.size()));
  }
  Layout layout;
  layout.labels.resize(n);
  std::vector<Index> dense(n, kNoIndex);
  Index next = 0;
  for (std::size_t p = 0; p < n; ++p) {
    const Index l = labels[p];
    if (l < 0 || static_cast<std::size_t>(l) >= n) {
      throw Error(ErrorCode::InvalidLabels, "component label " + std::to_string(l) + " out of range");
    }
    if (dense[static_cast<std::size_t>(l)] == kNoIndex) dense[static_cast<std::size_t>(l)] = next++;
    layout.labels[p] = dense[static_cast<std::size_t>(l)];
  }
  layout.component_bits = ceil_log2(static_cast<std::size_t>(next));
  layout.color_bits = ceil_log2(instance.num_colors());
  return layout;
}

// Nearest or farthest structure over one canonical set.
class CanonicalStructure {
 public:
  CanonicalStructure(std::span<const Point> points, std::span<const Index> members, Objective objective)
      : objective_(objective) {
    if (members.size() == 1) {
      single_ = members[0];
    } else if (objective == Objective::Min) {
      dt_ = build_delaunay(points, members);
    } else {
      fs_ = build_farthest(points, members);
    }
  }

  Index query(const Point& q) {
    if (single_ != kNoIndex) return single_;
    if (objective_ == Objective::Max) return fs_.farthest_site(q);
    hint_ = dt_.nearest_site(q, hint_);
    return dt_.id(hint_);
  }

 private:
  Objective objective_;
  Index single_ = kNoIndex;
  Index hint_ = 0;
  DelaunayGraph dt_;
  FarthestStructure fs_;
};

}  // namespace

std::vector<CanonicalIndex> canonical_indices(const ColoredInstance& instance, std::span<const Index> labels,
                                              Index p) {
  const Layout layout = make_layout(instance, labels);
  const Index lp = layout.labels[static_cast<std::size_t>(p)];
  const Index cp = instance.rank(p);
  std::vector<CanonicalIndex> out;
  for (std::size_t i = 0; i < layout.component_bits; ++i) {
    for (std::size_t j = 0; j < layout.color_bits; ++j) {
      out.push_back({static_cast<int>(i), 1 - bit(lp, i), static_cast<int>(j), 1 - bit(cp, j)});
    }
  }
  return out;
}

std::vector<std::vector<Index>> canonical_decomposition(const ColoredInstance& instance,
                                                        std::span<const Index> labels, Index p) {
  const Layout layout = make_layout(instance, labels);
  std::vector<std::vector<Index>> sets;
  for (const CanonicalIndex& ci : canonical_indices(instance, labels, p)) {
    std::vector<Index> members;
    for (std::size_t q = 0; q < instance.size(); ++q) {
      if (bit(layout.labels[q], static_cast<std::size_t>(ci.component_bit)) == ci.component_value &&
          bit(instance.rank(static_cast<Index>(q)), static_cast<std::size_t>(ci.color_bit)) == ci.color_value) {
        members.push_back(static_cast<Index>(q));
      }
    }
    sets.push_back(std::move(members));
  }
  return sets;
}

std::vector<std::optional<Partner>> all_extreme_unrelated(const ColoredInstance& instance,
                                                          std::span<const Index> labels, Objective objective,
                                                          std::size_t* structures_built) {
  const Layout layout = make_layout(instance, labels);
  const std::size_t n = instance.size();
  const auto points = instance.points();

  std::vector<std::vector<Index>> members(4 * layout.pairs());
  for (std::size_t q = 0; q < n; ++q) {
    const Index lq = layout.labels[q];
    const Index cq = instance.rank(static_cast<Index>(q));
    for (std::size_t i = 0; i < layout.component_bits; ++i) {
      for (std::size_t j = 0; j < layout.color_bits; ++j) {
        members[layout.set_id(i, j, bit(lq, i), bit(cq, j))].push_back(static_cast<Index>(q));
      }
    }
  }

  std::vector<std::optional<CanonicalStructure>> structures(members.size());
  std::size_t built = 0;
  for (std::size_t s = 0; s < members.size(); ++s) {
    if (members[s].empty()) continue;
    structures[s].emplace(points, members[s], objective);
    ++built;
  }
  if (structures_built) *structures_built = built;

  const EdgeOrder order(points, objective);
  std::vector<std::optional<Partner>> out(n);
  for (Index p : detail::spatial_order(points)) {
    const Index lp = layout.labels[static_cast<std::size_t>(p)];
    const Index cp = instance.rank(p);
    std::optional<Edge> best;
    for (std::size_t i = 0; i < layout.component_bits; ++i) {
      for (std::size_t j = 0; j < layout.color_bits; ++j) {
        auto& structure = structures[layout.set_id(i, j, 1 - bit(lp, i), 1 - bit(cp, j))];
        if (!structure) continue;
        const Edge cand = order.make(p, structure->query(instance.point(p)));
        if (!best || order.better(cand, *best)) best = cand;
      }
    }
    if (best) out[static_cast<std::size_t>(p)] = Partner{best->v, best->sq_length};
  }
  return out;
}

StageSolver canonical_stage_solver(const ColoredInstance& instance, Objective objective,
                                   std::size_t* structures_built) {
  return [&instance, objective, structures_built](const StageView& view) {
    std::size_t built = 0;
    const auto partners = all_extreme_unrelated(instance, view.labels, objective, &built);
    if (structures_built) *structures_built += built;
    const EdgeOrder order(instance.points(), objective);
    std::vector<std::optional<Edge>> answers(view.components);
    for (std::size_t p = 0; p < partners.size(); ++p) {
      if (!partners[p]) continue;
      const Edge cand{static_cast<Index>(p), partners[p]->index, partners[p]->sq_length};
      auto& slot = answers[static_cast<std::size_t>(view.labels[p])];
      if (!slot || order.better(cand, *slot)) slot = cand;
    }
    return answers;
  };
}

}  // namespace bst
