#pragma once

// Exhaustive enumeration of numerical semigroups by genus.
//
// Every semigroup S != N has a unique parent S + {f(S)}, and the children of
// S are the semigroups S - {g} for the minimal generators g > f(S). Walking
// this tree depth first visits each semigroup exactly once.
//
// The walker keeps, per depth, the decomposition counts
//     dec[x] = #{ (a, b) : a <= b, a + b = x, a, b in S }
// over a window [0, 3 * max_genus]. x is in S iff dec[x] > 0 and x > 0 is a
// minimal generator iff dec[x] == 1. Removing a generator g decrements
// dec[y] for every y >= g with y - g in S. Every generator of a semigroup of
// genus g lies in [1, 3g] (f <= 2g - 1 and m <= g + 1), so the window is
// exact for everything the walk can reach.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nsg/conditions.hpp"
#include "nsg/error.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

inline constexpr int kMaxGenusBound = 40;

struct TreeNode {
  NumericalSemigroup semigroup;
  std::vector<Int> removable;  // minimal generators greater than f, ascending
};

enum class CoverageFilter { Any, CoveredOnly, UncoveredOnly };

struct EnumerationConfig {
  int max_genus = 0;
  std::optional<Int> multiplicity{};
  std::optional<Int> m_minus_nu{};
  CoverageFilter coverage = CoverageFilter::Any;

  [[nodiscard]] bool has_filters() const noexcept {
    return multiplicity || m_minus_nu || coverage != CoverageFilter::Any;
  }

  [[nodiscard]] bool matches(const NumericalSemigroup& s) const {
    if (multiplicity && s.multiplicity() != *multiplicity) return false;
    if (m_minus_nu && s.multiplicity() - s.embedding_dimension() != *m_minus_nu) return false;
    if (coverage != CoverageFilter::Any) {
      const bool covered = evaluate_conditions(s).covered;
      if (covered != (coverage == CoverageFilter::CoveredOnly)) return false;
    }
    return true;
  }
};

/// Visited counts indexed by genus. Merging is elementwise addition.
struct EnumerationSummary {
  std::vector<std::uint64_t> per_genus;

  [[nodiscard]] std::uint64_t total() const noexcept {
    std::uint64_t t = 0;
    for (auto c : per_genus) t += c;
    return t;
  }

  void merge(const EnumerationSummary& other) {
    if (other.per_genus.size() > per_genus.size()) per_genus.resize(other.per_genus.size(), 0);
    for (std::size_t i = 0; i < other.per_genus.size(); ++i) per_genus[i] += other.per_genus[i];
  }

  friend bool operator==(const EnumerationSummary&, const EnumerationSummary&) = default;
};

namespace detail {

inline void validate_genus_bound(int max_genus) {
  if (max_genus < 0) throw Error(Errc::InvalidArgument, "genus bound must be nonnegative");
  if (max_genus > kMaxGenusBound)
    throw Error(Errc::GenusBoundTooLarge,
                "genus bound " + std::to_string(max_genus) + " exceeds " + std::to_string(kMaxGenusBound));
}

inline std::vector<Int> removable_generators(const NumericalSemigroup& s) {
  std::vector<Int> out;
  for (Int g : s.minimal_generators())
    if (g > s.frobenius()) out.push_back(g);
  return out;
}

class TreeWalker {
 public:
  TreeWalker(const NumericalSemigroup& root, int max_genus)
      : max_genus_(max_genus),
        root_genus_(static_cast<int>(root.genus())),
        window_(static_cast<std::size_t>(3 * std::max(max_genus, 1) + 2)) {
    const int levels = std::max(0, max_genus_ - root_genus_) + 1;
    dec_.assign(static_cast<std::size_t>(levels), std::vector<std::uint16_t>(window_, 0));
    auto& dec = dec_.front();
    for (std::size_t a = 0; a < window_; ++a) {
      if (!root.contains(static_cast<Int>(a))) continue;
      for (std::size_t b = a; a + b < window_; ++b)
        if (root.contains(static_cast<Int>(b))) ++dec[a + b];
    }
    root_f_ = root.frobenius();
    root_m_ = root.multiplicity();
  }

  /// `on_node(depth_index, f, m)` runs for every node of genus <= max_genus
  /// below and including the root, in ascending-removed-generator DFS order.
  template <class OnNode>
  void walk(OnNode&& on_node) {
    if (root_genus_ > max_genus_) return;
    walk_from(0, root_f_, root_m_, on_node);
  }

  [[nodiscard]] int genus_at(std::size_t level) const noexcept { return root_genus_ + static_cast<int>(level); }

  [[nodiscard]] NumericalSemigroup materialize(std::size_t level, Int f, Int m) const {
    const auto& dec = dec_[level];
    const auto size = static_cast<std::size_t>(f + m + 1);
    std::vector<std::uint8_t> table(size);
    std::vector<Int> gens;
    for (std::size_t x = 0; x < size; ++x) {
      table[x] = dec[x] > 0;
      if (x > 0 && dec[x] == 1) gens.push_back(static_cast<Int>(x));
    }
    if (f < 0) gens.assign(1, 1);
    return assemble(std::move(table), std::move(gens));
  }

  [[nodiscard]] std::vector<Int> removable_at(std::size_t level, Int f, Int m) const {
    const auto& dec = dec_[level];
    std::vector<Int> out;
    const Int hi = std::max(f + m, m);
    for (Int g = std::max<Int>(f + 1, 1); g <= hi; ++g)
      if (dec[static_cast<std::size_t>(g)] == 1) out.push_back(g);
    return out;
  }

 private:
  template <class OnNode>
  void walk_from(std::size_t level, Int f, Int m, OnNode& on_node) {
    on_node(level, f, m);
    if (genus_at(level) >= max_genus_) return;
    const auto& dec = dec_[level];
    auto& child = dec_[level + 1];
    const Int hi = std::max(f + m, m);
    for (Int g = std::max<Int>(f + 1, 1); g <= hi; ++g) {
      if (dec[static_cast<std::size_t>(g)] != 1) continue;
      child = dec;
      const auto gz = static_cast<std::size_t>(g);
      for (std::size_t y = gz; y < window_; ++y)
        if (dec[y - gz] > 0) --child[y];
      walk_from(level + 1, g, g == m ? m + 1 : m, on_node);
    }
  }

  int max_genus_;
  int root_genus_;
  std::size_t window_;
  Int root_f_ = -1;
  Int root_m_ = 1;
  std::vector<std::vector<std::uint16_t>> dec_;
};

template <class Visit>
EnumerationSummary run_walk(const NumericalSemigroup& root, const EnumerationConfig& config, Visit& visit) {
  EnumerationSummary summary;
  summary.per_genus.assign(static_cast<std::size_t>(config.max_genus) + 1, 0);
  TreeWalker walker(root, config.max_genus);
  walker.walk([&](std::size_t level, Int f, Int m) {
    if (config.multiplicity && m != *config.multiplicity) return;
    NumericalSemigroup s = walker.materialize(level, f, m);
    if (config.has_filters() && !config.matches(s)) return;
    ++summary.per_genus[static_cast<std::size_t>(walker.genus_at(level))];
    visit(s);
  });
  return summary;
}

}  // namespace detail

[[nodiscard]] inline TreeNode tree_root() { return {NumericalSemigroup::naturals(), {1}}; }

[[nodiscard]] inline TreeNode make_tree_node(NumericalSemigroup s) {
  auto removable = detail::removable_generators(s);
  return {std::move(s), std::move(removable)};
}

/// One child per removable generator g, in ascending order of g: S - {g}.
[[nodiscard]] inline std::vector<TreeNode> children(const TreeNode& node) {
  std::vector<TreeNode> out;
  const auto& s = node.semigroup;
  for (Int g : node.removable) {
    std::vector<Int> gaps = s.gaps();
    gaps.push_back(g);
    out.push_back(make_tree_node(NumericalSemigroup::from_gaps(gaps)));
  }
  return out;
}

/// Visits every semigroup of genus <= max_genus that passes the filters,
/// calling `visit(const NumericalSemigroup&)` in deterministic DFS order.
template <class Visit>
EnumerationSummary enumerate(const EnumerationConfig& config, Visit&& visit) {
  detail::validate_genus_bound(config.max_genus);
  return detail::run_walk(NumericalSemigroup::naturals(), config, visit);
}

/// Same as enumerate() but restricted to the subtree rooted at `root`
/// (root included), still bounded by config.max_genus.
template <class Visit>
EnumerationSummary enumerate_subtree(const TreeNode& root, const EnumerationConfig& config, Visit&& visit) {
  detail::validate_genus_bound(config.max_genus);
  return detail::run_walk(root.semigroup, config, visit);
}

/// All tree nodes of genus exactly `split_depth`, in DFS order. Their
/// subtrees are pairwise disjoint and, together with the nodes of smaller
/// genus, cover the whole tree.
[[nodiscard]] inline std::vector<TreeNode> partition(const EnumerationConfig& config, int split_depth) {
  detail::validate_genus_bound(config.max_genus);
  detail::validate_genus_bound(split_depth);
  if (split_depth > config.max_genus)
    throw Error(Errc::InvalidArgument, "split depth " + std::to_string(split_depth) + " exceeds the genus bound " +
                                           std::to_string(config.max_genus));
  std::vector<TreeNode> out;
  detail::TreeWalker walker(NumericalSemigroup::naturals(), split_depth);
  walker.walk([&](std::size_t level, Int f, Int m) {
    if (walker.genus_at(level) != split_depth) return;
    out.push_back({walker.materialize(level, f, m), walker.removable_at(level, f, m)});
  });
  return out;
}

}  // namespace nsg
