#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "nsg/conditions.hpp"
#include "nsg/intervals.hpp"
#include "nsg/parallel.hpp"

namespace nsg {

enum class Condition : std::size_t {
  ThmA,
  ThmB,
  CorA,
  CorB,
  TwoNu,
  TwoNuQ,
  SmallGap,
  Gap6Q,
  SmallM,
  SmallNu,
  SmallQ,
  kCount,
};

inline constexpr std::size_t kConditionCount = static_cast<std::size_t>(Condition::kCount);

inline constexpr std::array<std::string_view, kConditionCount> kConditionNames = {
    "thm_a", "thm_b", "cor_a", "cor_b", "two_nu", "two_nu_q", "small_gap", "gap6_q", "small_m", "small_nu", "small_q",
};

/// Per-condition counts over a set of semigroups. Conditions overlap, so the
/// counts do not sum to the total.
struct CoverageSummary {
  std::uint64_t semigroups = 0;
  std::array<std::uint64_t, kConditionCount> satisfied{};
  std::uint64_t covered = 0;
  std::uint64_t uncovered = 0;
  std::uint64_t uncovered_wilf_ok = 0;
  std::uint64_t wilf_failures = 0;

  void merge(const CoverageSummary& other) {
    semigroups += other.semigroups;
    for (std::size_t i = 0; i < kConditionCount; ++i) satisfied[i] += other.satisfied[i];
    covered += other.covered;
    uncovered += other.uncovered;
    uncovered_wilf_ok += other.uncovered_wilf_ok;
    wilf_failures += other.wilf_failures;
  }

  [[nodiscard]] std::uint64_t count(Condition c) const noexcept { return satisfied[static_cast<std::size_t>(c)]; }

  friend bool operator==(const CoverageSummary&, const CoverageSummary&) = default;
};

inline void tally_coverage(const NumericalSemigroup& s, CoverageSummary& summary) {
  const AperyDecomposition ap = apery_set(s, s.multiplicity());
  const ConditionReport r = evaluate_conditions(s, ap);
  const Int surplus = wilf_surplus(s);
  const auto bump = [&](Condition c, bool on) { summary.satisfied[static_cast<std::size_t>(c)] += on ? 1 : 0; };
  bump(Condition::ThmA, r.thm_a.has_value());
  bump(Condition::ThmB, r.thm_b.has_value());
  bump(Condition::CorA, !r.cor_a_alphas.empty());
  bump(Condition::CorB, !r.cor_b_alphas.empty());
  bump(Condition::TwoNu, r.two_nu);
  bump(Condition::TwoNuQ, r.two_nu_q);
  bump(Condition::SmallGap, r.small_gap);
  bump(Condition::Gap6Q, r.gap6_q);
  bump(Condition::SmallM, r.small_m);
  bump(Condition::SmallNu, r.small_nu);
  bump(Condition::SmallQ, r.small_q);
  ++summary.semigroups;
  if (r.covered) {
    ++summary.covered;
  } else {
    ++summary.uncovered;
    if (surplus >= 0) ++summary.uncovered_wilf_ok;
  }
  if (surplus < 0) ++summary.wilf_failures;
}

[[nodiscard]] inline CoverageSummary coverage_tree(int max_genus, int split_depth = -1, int jobs = 1) {
  return reduce_tree<CoverageSummary>(
      max_genus, [](CoverageSummary& acc, const NumericalSemigroup& s) { tally_coverage(s, acc); }, split_depth,
      jobs);
}

}  // namespace nsg
