#pragma once

// Invariant suite run over enumerated semigroups. Each check is evaluated
// once per semigroup; the summary records how many semigroups passed and
// failed each check and keeps the first counterexample seen.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/conditions.hpp"
#include "nsg/intervals.hpp"
#include "nsg/parallel.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

enum class Check : std::size_t {
  AperyShape,
  GenusIdentity,
  MinimalApery,
  MaximalApery,
  Regeneration,
  TreeBounds,
  IntervalCounts,
  EtaAgreement,
  EtaSums,
  WilfForms,
  ShiftedFloors,
  FloorDefect,
  GapImpliesSum,
  GapDisjunction,
  CorollaryReduction,
  CoveredImpliesWilf,
  Wilf,
  kCount,
};

inline constexpr std::size_t kCheckCount = static_cast<std::size_t>(Check::kCount);

inline constexpr std::array<std::string_view, kCheckCount> kCheckNames = {
    "apery_shape",       "genus_identity",      "min_apery",        "max_apery",       "regeneration",
    "tree_bounds",       "interval_counts",     "eta_agreement",    "eta_sums",        "wilf_forms",
    "shifted_floors",    "floor_defect",        "gap_implies_sum",  "gap_disjunction", "corollary_reduction",
    "covered_implies_wilf", "wilf",
};

struct Counterexample {
  Check check = Check::Wilf;
  std::vector<Int> gens;
  Int genus = 0;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationSummary {
  std::uint64_t semigroups = 0;
  std::array<std::uint64_t, kCheckCount> passed{};
  std::array<std::uint64_t, kCheckCount> failed{};
  std::optional<Counterexample> first_failure;

  [[nodiscard]] std::uint64_t violations() const noexcept {
    std::uint64_t v = 0;
    for (auto f : failed) v += f;
    return v;
  }
  [[nodiscard]] bool ok() const noexcept { return violations() == 0; }

  void merge(const VerificationSummary& other) {
    semigroups += other.semigroups;
    for (std::size_t i = 0; i < kCheckCount; ++i) {
      passed[i] += other.passed[i];
      failed[i] += other.failed[i];
    }
    if (!first_failure && other.first_failure) first_failure = other.first_failure;
  }

  /// Counts only; the first counterexample depends on traversal order.
  [[nodiscard]] bool same_counts(const VerificationSummary& other) const noexcept {
    return semigroups == other.semigroups && passed == other.passed && failed == other.failed;
  }
};

namespace detail {

inline bool check_apery_shape(const NumericalSemigroup& s, const AperyDecomposition& ap) {
  const Int m = s.multiplicity();
  if (static_cast<Int>(ap.size()) != m || ap[0] != 0) return false;
  if (ap.sorted_w.back() != s.frobenius() + m) return false;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(m), 0);
  for (Int w : ap.sorted_w) {
    auto& slot = seen[static_cast<std::size_t>(w % m)];
    if (slot != 0) return false;
    slot = 1;
  }
  return std::is_sorted(ap.sorted_w.begin(), ap.sorted_w.end());
}

inline bool check_genus_identity(const NumericalSemigroup& s, const AperyDecomposition& ap) {
  Int total = 0;
  for (Int w : ap.sorted_w) total += w / s.multiplicity();
  return total == s.genus();
}

inline bool check_minimal_apery(const NumericalSemigroup& s, const AperyDecomposition& ap) {
  const Int m = s.multiplicity();
  const Int nu = s.embedding_dimension();
  if (static_cast<Int>(ap.min_ap.size()) != nu) return false;
  if (m - nu != static_cast<Int>(ap.size() - ap.min_ap.size())) return false;
  std::vector<Int> lhs(ap.min_ap.begin() + 1, ap.min_ap.end());
  std::vector<Int> rhs;
  for (Int g : s.minimal_generators())
    if (g != m) rhs.push_back(g);
  return s.is_naturals() ? ap.min_ap == std::vector<Int>{0} : lhs == rhs;
}

inline bool check_maximal_apery(const NumericalSemigroup& s, const AperyDecomposition& ap) {
  if (s.is_naturals()) return ap.max_ap == std::vector<Int>{0};
  const auto pf = pseudo_frobenius(s);
  const Int t = static_cast<Int>(pf.size());
  if (static_cast<Int>(ap.max_ap.size()) != t) return false;
  if (t < 1 || t > s.multiplicity() - 1) return false;
  if (std::find(pf.begin(), pf.end(), s.frobenius()) == pf.end()) return false;
  for (std::size_t i = 0; i < pf.size(); ++i)
    if (ap.max_ap[i] - s.multiplicity() != pf[i]) return false;
  return true;
}

inline bool check_regeneration(const NumericalSemigroup& s) {
  const auto& gens = s.minimal_generators();
  if (NumericalSemigroup::from_generators(std::vector<Int>(gens.begin(), gens.end())) != s) return false;
  for (Int g : gens)
    for (Int a = 1; a < g; ++a)
      if (s.contains(a) && s.contains(g - a)) return false;
  return static_cast<Int>(gens.size()) <= s.multiplicity();
}

inline bool check_tree_bounds(const NumericalSemigroup& s) {
  const Int g = s.genus();
  return s.frobenius() <= 2 * g - 1 && s.multiplicity() <= g + 1;
}

inline bool check_interval_counts(const NumericalSemigroup& s, const IntervalProfile& p) {
  const Int m = s.multiplicity();
  Int total = 0;
  for (Int nk : p.n_k) {
    if (nk < 1 || nk > m - 1) return false;
    total += nk;
  }
  if (total != s.sporadic_count()) return false;
  return interval_count(s, p.q) == m && interval_count(s, p.q + 1) == m;
}

inline bool check_eta_sums(const NumericalSemigroup& s, const IntervalProfile& p) {
  Int sum = 0;
  Int weighted = 0;
  for (std::size_t j = 0; j < p.eta_apery.size(); ++j) {
    sum += p.eta_apery[j];
    weighted += static_cast<Int>(j + 1) * p.eta_apery[j];
  }
  return sum == p.q && weighted == s.sporadic_count();
}

inline bool check_shifted_floors(const NumericalSemigroup& s, const AperyDecomposition& ap, const IntervalProfile& p) {
  if (s.is_naturals()) return true;
  const Int m = s.multiplicity();
  if (shifted_floor(ap[0], p.rho, m) != 0) return false;
  if (shifted_floor(ap.sorted_w.back(), p.rho, m) != p.q) return false;
  Int prev = 0;
  for (std::size_t i = 1; i < ap.size(); ++i) {
    const Int fl = shifted_floor(ap[i], p.rho, m);
    const Int plain = ap[i] / m;
    if (fl < 1 || fl < prev) return false;
    if (fl != plain && fl != plain + 1) return false;
    if (fl == plain + 1 && (fl < 2 || p.rho < 1)) return false;
    prev = fl;
  }
  return true;
}

inline bool check_floor_defect(const NumericalSemigroup& s, const AperyDecomposition& ap, const IntervalProfile& p) {
  const Int m = s.multiplicity();
  const std::size_t size = ap.size();
  std::vector<Int> fl(size);
  for (std::size_t i = 0; i < size; ++i) fl[i] = shifted_floor(ap[i], p.rho, m);
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t k = j; k < size; ++k) {
      const Int need = ap[j] + ap[k];
      for (std::size_t i = size; i-- > 0 && ap[i] >= need;) {
        const Int defect = fl[i] - fl[j] - fl[k];
        if (defect < -1) return false;
        if (defect == -1 && (p.rho < 1 || fl[j] < 2 || fl[k] < 2)) return false;
      }
    }
  }
  return true;
}

inline bool check_gap_implies_sum(const NumericalSemigroup& s, const AperyDecomposition& ap) {
  for (Int alpha = 1; alpha <= s.multiplicity() - 2; ++alpha)
    if (!lemma_gap_implies_sum(s, ap, alpha)) return false;
  return true;
}

inline bool check_gap_disjunction(const NumericalSemigroup& s, const AperyDecomposition& ap) {
  for (Int alpha = 3; alpha <= s.multiplicity() - 2; ++alpha)
    if (!lemma_gap_disjunction(s, ap, alpha)) return false;
  return true;
}

// The m <= 8 + 4(alpha-3)/q and m <= 4(alpha+3)/3 corollaries reduce to the
// theorem at the same alpha unless nu <= 3.
inline bool check_corollary_reduction(const ConditionReport& r) {
  const auto has = [](const std::vector<Int>& v, Int a) { return std::find(v.begin(), v.end(), a) != v.end(); };
  for (Int a : r.cor_a_alphas)
    if (!r.small_nu && !has(r.thm_a_alphas, a)) return false;
  for (Int a : r.cor_b_alphas)
    if (!r.small_nu && !has(r.thm_b_alphas, a)) return false;
  return true;
}

}  // namespace detail

inline void verify_semigroup(const NumericalSemigroup& s, VerificationSummary& summary) {
  const AperyDecomposition ap = apery_set(s, s.multiplicity());
  const IntervalProfile p = interval_profile(s, ap);
  const ConditionReport r = evaluate_conditions(s, ap);

  std::array<bool, kCheckCount> ok{};
  ok[static_cast<std::size_t>(Check::AperyShape)] = detail::check_apery_shape(s, ap);
  ok[static_cast<std::size_t>(Check::GenusIdentity)] = detail::check_genus_identity(s, ap);
  ok[static_cast<std::size_t>(Check::MinimalApery)] = detail::check_minimal_apery(s, ap);
  ok[static_cast<std::size_t>(Check::MaximalApery)] = detail::check_maximal_apery(s, ap);
  ok[static_cast<std::size_t>(Check::Regeneration)] = detail::check_regeneration(s);
  ok[static_cast<std::size_t>(Check::TreeBounds)] = s.is_naturals() || detail::check_tree_bounds(s);
  ok[static_cast<std::size_t>(Check::IntervalCounts)] = detail::check_interval_counts(s, p);
  ok[static_cast<std::size_t>(Check::EtaAgreement)] = p.eta_apery == p.eta_direct;
  ok[static_cast<std::size_t>(Check::EtaSums)] = detail::check_eta_sums(s, p);
  ok[static_cast<std::size_t>(Check::WilfForms)] = p.wilf_sum == p.wilf_surplus;
  ok[static_cast<std::size_t>(Check::ShiftedFloors)] = detail::check_shifted_floors(s, ap, p);
  ok[static_cast<std::size_t>(Check::FloorDefect)] = detail::check_floor_defect(s, ap, p);
  ok[static_cast<std::size_t>(Check::GapImpliesSum)] = detail::check_gap_implies_sum(s, ap);
  ok[static_cast<std::size_t>(Check::GapDisjunction)] = detail::check_gap_disjunction(s, ap);
  ok[static_cast<std::size_t>(Check::CorollaryReduction)] = detail::check_corollary_reduction(r);
  ok[static_cast<std::size_t>(Check::CoveredImpliesWilf)] = !r.covered || p.wilf_surplus >= 0;
  ok[static_cast<std::size_t>(Check::Wilf)] = p.wilf_surplus >= 0;

  ++summary.semigroups;
  for (std::size_t i = 0; i < kCheckCount; ++i) {
    if (ok[i]) {
      ++summary.passed[i];
      continue;
    }
    ++summary.failed[i];
    if (!summary.first_failure) summary.first_failure = Counterexample{static_cast<Check>(i), s.minimal_generators(), s.genus()};
  }
}

[[nodiscard]] inline VerificationSummary verify_tree(int max_genus, int split_depth = -1, int jobs = 1) {
  return reduce_tree<VerificationSummary>(
      max_genus, [](VerificationSummary& acc, const NumericalSemigroup& s) { verify_semigroup(s, acc); },
      split_depth, jobs);
}

}  // namespace nsg
