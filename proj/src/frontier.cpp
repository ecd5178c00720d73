#include "bst/frontier.hpp"

#include <algorithm>
#include <string>

#include "bst/error.hpp"

namespace bst {
namespace {

void normalize(FrontierSets& fs, std::size_t components) {
  if (fs.sets.size() < components) fs.sets.resize(components);
  for (auto& s : fs.sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

void add_pair(FrontierSets& fs, Index la, Index b) {
  const auto slot = static_cast<std::size_t>(la);
  if (fs.sets.size() <= slot) fs.sets.resize(slot + 1);
  fs.sets[slot].push_back(b);
}

// Blue members and red counts per component.
struct Split {
  std::vector<std::vector<Index>> blue;
  std::vector<std::size_t> red_count;
  std::size_t red_total = 0;
};

Split split_components(const ColoredInstance& instance, std::span<const Index> labels, std::size_t components,
                       int blue_rank, std::span<const Index> red) {
  if (labels.size() != instance.size()) {
    throw Error(ErrorCode::LabelMismatch, "expected " + std::to_string(instance.size()) + " labels, got " +
                                              std::to_string(labels.size()));
  }
  Split s;
  s.blue.resize(components);
  s.red_count.assign(components, 0);
  for (std::size_t p = 0; p < instance.size(); ++p) {
    const Index l = labels[p];
    if (l < 0 || static_cast<std::size_t>(l) >= components) {
      throw Error(ErrorCode::LabelMismatch, "component label " + std::to_string(l) + " out of range");
    }
    if (instance.rank(static_cast<Index>(p)) == blue_rank) s.blue[static_cast<std::size_t>(l)].push_back(static_cast<Index>(p));
  }
  for (Index r : red) ++s.red_count[static_cast<std::size_t>(labels[static_cast<std::size_t>(r)])];
  s.red_total = red.size();
  return s;
}

// Below this many candidate pairs a direct scan beats building DT(B_i u T_i).
constexpr std::size_t kDirectPairs = 256;

}  // namespace

FrontierSets frontier_nearest(const DelaunayGraph& dt_red, std::span<const Index> labels) {
  if (labels.size() != dt_red.size()) {
    throw Error(ErrorCode::LabelMismatch, "expected " + std::to_string(dt_red.size()) + " labels, got " +
                                              std::to_string(labels.size()));
  }
  FrontierSets fs;
  dt_red.for_each_edge([&](Index s, Index t) {
    const Index ls = labels[static_cast<std::size_t>(s)];
    const Index lt = labels[static_cast<std::size_t>(t)];
    if (ls == lt) return;
    add_pair(fs, ls, dt_red.id(t));
    add_pair(fs, lt, dt_red.id(s));
  });
  Index top = -1;
  for (Index l : labels) top = std::max(top, l);
  normalize(fs, static_cast<std::size_t>(top + 1));
  return fs;
}

FrontierSets frontier_farthest(const FarthestStructure& fs_red, std::span<const Index> labels) {
  auto label_of = [&](Index site) {
    if (site < 0 || static_cast<std::size_t>(site) >= labels.size()) {
      throw Error(ErrorCode::LabelMismatch, "no label for site " + std::to_string(site));
    }
    return labels[static_cast<std::size_t>(site)];
  };
  FrontierSets fs;
  Index top = -1;
  for (Index h : fs_red.hull()) top = std::max(top, label_of(h));
  for (const auto& [a, b] : fs_red.adjacency()) {
    const Index la = label_of(a), lb = label_of(b);
    if (la == lb) continue;
    add_pair(fs, la, b);
    add_pair(fs, lb, a);
  }
  normalize(fs, static_cast<std::size_t>(top + 1));
  return fs;
}

RoleAnswers all_blue_bcp(const ColoredInstance& instance, std::span<const Index> labels, std::size_t components,
                         const DelaunayGraph& dt_red, int blue_rank) {
  const auto points = instance.points();
  const Split split = split_components(instance, labels, components, blue_rank, dt_red.ids());

  std::vector<Index> red_labels(dt_red.size());
  for (std::size_t s = 0; s < dt_red.size(); ++s) {
    red_labels[s] = labels[static_cast<std::size_t>(dt_red.id(static_cast<Index>(s)))];
  }
  FrontierSets frontier = frontier_nearest(dt_red, red_labels);
  normalize(frontier, components);

  const EdgeOrder order(points, Objective::Min);
  RoleAnswers out;
  out.pairs.resize(components);
  out.frontier_total = frontier.total();
  std::vector<Index> subset;
  for (std::size_t c = 0; c < components; ++c) {
    const auto& blue = split.blue[c];
    const auto& t = frontier.sets[c];
    if (blue.empty() || split.red_count[c] == split.red_total || t.empty()) continue;

    std::optional<Edge> best;
    auto offer = [&](Index b, Index r) {
      const Edge cand = order.make(b, r);
      if (!best || order.better(cand, *best)) best = cand;
    };
    if (blue.size() * t.size() <= kDirectPairs) {
      for (Index b : blue) {
        for (Index r : t) offer(b, r);
      }
    } else {
      subset.assign(blue.begin(), blue.end());
      subset.insert(subset.end(), t.begin(), t.end());
      // Blue sites come first in the subset.
      for (const auto& [s, u] : delaunay_edges(points, subset)) {
        const bool s_blue = static_cast<std::size_t>(s) < blue.size();
        const bool u_blue = static_cast<std::size_t>(u) < blue.size();
        if (s_blue != u_blue) offer(subset[static_cast<std::size_t>(s)], subset[static_cast<std::size_t>(u)]);
      }
    }
    out.pairs[c] = best;
  }
  return out;
}

RoleAnswers all_blue_bfp(const ColoredInstance& instance, std::span<const Index> labels, std::size_t components,
                         const FarthestStructure& fs_red, std::span<const Index> red, int blue_rank) {
  const auto points = instance.points();
  const Split split = split_components(instance, labels, components, blue_rank, red);

  FrontierSets frontier;
  if (red.size() == 1) {
    frontier.sets.resize(components);
    const auto home = static_cast<std::size_t>(labels[static_cast<std::size_t>(red[0])]);
    for (std::size_t c = 0; c < components; ++c) {
      if (c != home) frontier.sets[c].push_back(red[0]);
    }
  } else {
    frontier = frontier_farthest(fs_red, labels);
    normalize(frontier, components);
  }

  RoleAnswers out;
  out.pairs.resize(components);
  out.frontier_total = frontier.total();
  for (std::size_t c = 0; c < components; ++c) {
    const auto& blue = split.blue[c];
    const auto& t = frontier.sets[c];
    if (blue.empty() || split.red_count[c] == split.red_total || t.empty()) continue;
    const std::vector<Index> hull_b = convex_hull(points, blue);
    const std::vector<Index> hull_t = t.size() <= 2 ? t : convex_hull(points, t);
    const HullPair hp = max_dist_hulls(points, hull_b, hull_t);
    out.pairs[c] = Edge{hp.p, hp.q, hp.sq_length};
  }
  return out;
}

RoleAnswers hull_vertex_bfp(const ColoredInstance& instance, std::span<const Index> labels, std::size_t components,
                            std::span<const Index> hull_blue, std::span<const Index> red) {
  if (labels.size() != instance.size()) {
    throw Error(ErrorCode::LabelMismatch, "expected " + std::to_string(instance.size()) + " labels, got " +
                                              std::to_string(labels.size()));
  }
  const EdgeOrder order(instance.points(), Objective::Max);
  RoleAnswers out;
  out.pairs.resize(components);
  for (Index b : hull_blue) {
    const Index lb = labels[static_cast<std::size_t>(b)];
    auto& slot = out.pairs[static_cast<std::size_t>(lb)];
    for (Index r : red) {
      if (labels[static_cast<std::size_t>(r)] == lb) continue;
      const Edge cand = order.make(b, r);
      if (!slot || order.better(cand, *slot)) slot = cand;
    }
  }
  return out;
}

HullPair max_dist_hulls(std::span<const Point> points, std::span<const Index> hull_p,
                        std::span<const Index> hull_q) {
  if (hull_p.empty() || hull_q.empty()) throw Error(ErrorCode::EmptyHull, "max_dist_hulls needs two nonempty hulls");
  const EdgeOrder order(points, Objective::Max);
  std::optional<Edge> best;
  for (Index p : hull_p) {
    for (Index q : hull_q) {
      const Edge cand = order.make(p, q);
      if (!best || order.better(cand, *best)) best = cand;
    }
  }
  return {best->u, best->v, best->sq_length};
}

}  // namespace bst
