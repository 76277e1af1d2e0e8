#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "nsg/enumeration.hpp"

namespace nsg {

/// Folds `accumulate(Summary&, const NumericalSemigroup&)` over every
/// semigroup of genus <= max_genus.
///
/// With split_depth < 0 the tree is walked in one pass. Otherwise the nodes
/// of genus < split_depth are folded first, then each genus-split_depth
/// subtree is folded into its own Summary by a pool of `jobs` workers, and the
/// per-subtree results are merged in partition order. Summary::merge must be
/// associative for the two modes to agree.
template <class Summary, class Accumulate>
Summary reduce_tree(int max_genus, Accumulate accumulate, int split_depth = -1, int jobs = 1) {
  EnumerationConfig config;
  config.max_genus = max_genus;
  Summary total{};
  if (split_depth < 0) {
    enumerate(config, [&](const NumericalSemigroup& s) { accumulate(total, s); });
    return total;
  }
  split_depth = std::min(split_depth, max_genus);
  if (split_depth > 0) {
    EnumerationConfig low = config;
    low.max_genus = split_depth - 1;
    enumerate(low, [&](const NumericalSemigroup& s) { accumulate(total, s); });
  }
  const std::vector<TreeNode> roots = partition(config, split_depth);
  std::vector<Summary> parts(roots.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    try {
      for (std::size_t i = next++; i < roots.size(); i = next++)
        enumerate_subtree(roots[i], config, [&](const NumericalSemigroup& s) { accumulate(parts[i], s); });
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    const int workers = std::max(1, jobs);
    for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  for (const auto& part : parts) total.merge(part);
  return total;
}

}  // namespace nsg
