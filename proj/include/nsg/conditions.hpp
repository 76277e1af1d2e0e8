#pragma once

// Sufficient conditions for Wilf's inequality, evaluated in exact integer
// arithmetic. Every rational inequality is compared with its denominators
// cleared; nothing here touches floating point.

#include <optional>
#include <string>
#include <vector>

#include "nsg/error.hpp"
#include "nsg/intervals.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Both sides of a cleared-denominator inequality lhs >= rhs.
struct Comparison {
  Int lhs = 0;
  Int rhs = 0;
  [[nodiscard]] constexpr bool holds() const noexcept { return lhs >= rhs; }
  friend constexpr bool operator==(const Comparison&, const Comparison&) = default;
};

// (2 + (alpha-3)/q) nu >= m   <=>   (2q + alpha - 3) nu >= q m
[[nodiscard]] constexpr Comparison thm_a_bound(Int q, Int nu, Int m, Int alpha) noexcept {
  return {(2 * q + alpha - 3) * nu, q * m};
}

// ((alpha+3)/3) nu >= m   <=>   (alpha + 3) nu >= 3 m
[[nodiscard]] constexpr Comparison thm_b_bound(Int nu, Int m, Int alpha) noexcept {
  return {(alpha + 3) * nu, 3 * m};
}

// (2 + 1/q) nu >= m   <=>   (2q + 1) nu >= q m
[[nodiscard]] constexpr Comparison two_nu_q_bound(Int q, Int nu, Int m) noexcept {
  return {(2 * q + 1) * nu, q * m};
}

// m <= 8 + 4(alpha-3)/q   <=>   8q + 4(alpha - 3) >= q m
[[nodiscard]] constexpr Comparison cor_a_bound(Int q, Int m, Int alpha) noexcept {
  return {8 * q + 4 * (alpha - 3), q * m};
}

// m <= 4(alpha+3)/3   <=>   4(alpha + 3) >= 3 m
[[nodiscard]] constexpr Comparison cor_b_bound(Int m, Int alpha) noexcept { return {4 * (alpha + 3), 3 * m}; }

// m <= 8 + 4/q   <=>   8q + 4 >= q m
[[nodiscard]] constexpr Comparison small_m_bound(Int q, Int m) noexcept { return {8 * q + 4, q * m}; }

struct ConditionReport {
  std::optional<Int> thm_a;  // smallest witnessing alpha
  std::optional<Int> thm_b;
  std::vector<Int> thm_a_alphas;  // every witnessing alpha, ascending
  std::vector<Int> thm_b_alphas;
  std::vector<Int> cor_a_alphas;
  std::vector<Int> cor_b_alphas;
  bool two_nu = false;
  bool two_nu_q = false;
  bool small_gap = false;
  bool gap6_q = false;
  bool small_m = false;
  bool small_nu = false;
  bool small_q = false;
  bool covered = false;
};

namespace detail {

inline void require_alpha(Int alpha, Int lo, Int hi) {
  if (alpha < lo || alpha > hi)
    throw Error(Errc::AlphaOutOfRange, "alpha = " + std::to_string(alpha) + " outside [" + std::to_string(lo) +
                                           ", " + std::to_string(hi) + "]");
}

inline Int w_at(const AperyDecomposition& ap, Int i) { return ap[static_cast<std::size_t>(i)]; }

inline Int w_last(const AperyDecomposition& ap) { return ap.sorted_w.back(); }

}  // namespace detail

/// w_{m-1} >= w_1 + w_alpha and (2q + alpha - 3) nu >= q m, 2 <= alpha <= m-2.
[[nodiscard]] inline bool check_thm_A(const NumericalSemigroup& s, const AperyDecomposition& ap, Int alpha) {
  const Int m = s.multiplicity();
  const Int q = q_rho(s).q;
  if (q == 0) throw Error(Errc::FullSemigroup, "the condition needs q >= 1");
  detail::require_alpha(alpha, 2, m - 2);
  return detail::w_last(ap) >= detail::w_at(ap, 1) + detail::w_at(ap, alpha) &&
         thm_a_bound(q, s.embedding_dimension(), m, alpha).holds();
}

[[nodiscard]] inline bool check_thm_A(const NumericalSemigroup& s, Int alpha) {
  return check_thm_A(s, apery_set(s, s.multiplicity()), alpha);
}

/// w_{m-1} >= w_{alpha-1} + w_alpha and (alpha + 3) nu >= 3m, 2 <= alpha <= m-2.
[[nodiscard]] inline bool check_thm_B(const NumericalSemigroup& s, const AperyDecomposition& ap, Int alpha) {
  const Int m = s.multiplicity();
  detail::require_alpha(alpha, 2, m - 2);
  return detail::w_last(ap) >= detail::w_at(ap, alpha - 1) + detail::w_at(ap, alpha) &&
         thm_b_bound(s.embedding_dimension(), m, alpha).holds();
}

[[nodiscard]] inline bool check_thm_B(const NumericalSemigroup& s, Int alpha) {
  return check_thm_B(s, apery_set(s, s.multiplicity()), alpha);
}

/// w_{m-1} >= w_1 + w_alpha and m <= 8 + 4(alpha-3)/q. Implies either nu <= 3
/// or check_thm_A at the same alpha.
[[nodiscard]] inline bool check_cor_A(const NumericalSemigroup& s, const AperyDecomposition& ap, Int alpha) {
  const Int m = s.multiplicity();
  const Int q = q_rho(s).q;
  if (q == 0) throw Error(Errc::FullSemigroup, "the condition needs q >= 1");
  detail::require_alpha(alpha, 2, m - 2);
  return detail::w_last(ap) >= detail::w_at(ap, 1) + detail::w_at(ap, alpha) && cor_a_bound(q, m, alpha).holds();
}

/// w_{m-1} >= w_{alpha-1} + w_alpha and m <= 4(alpha+3)/3. Implies either
/// nu <= 3 or check_thm_B at the same alpha.
[[nodiscard]] inline bool check_cor_B(const NumericalSemigroup& s, const AperyDecomposition& ap, Int alpha) {
  const Int m = s.multiplicity();
  detail::require_alpha(alpha, 2, m - 2);
  return detail::w_last(ap) >= detail::w_at(ap, alpha - 1) + detail::w_at(ap, alpha) && cor_b_bound(m, alpha).holds();
}

/// Implication "m - nu > alpha(alpha-1)/2  =>  w_{m-1} >= w_1 + w_alpha".
/// It is a theorem, so a false return means the inputs were computed wrong.
[[nodiscard]] inline bool lemma_gap_implies_sum(const NumericalSemigroup& s, const AperyDecomposition& ap,
                                                Int alpha) {
  const Int m = s.multiplicity();
  detail::require_alpha(alpha, 1, m - 2);
  const Int gap = m - s.embedding_dimension();
  if (!(2 * gap > alpha * (alpha - 1))) return true;
  return detail::w_last(ap) >= detail::w_at(ap, 1) + detail::w_at(ap, alpha);
}

[[nodiscard]] inline bool lemma_gap_implies_sum(const NumericalSemigroup& s, Int alpha) {
  return lemma_gap_implies_sum(s, apery_set(s, s.multiplicity()), alpha);
}

/// Implication "m - nu >= alpha(alpha-1)/2 - 1  =>  w_{m-1} >= w_1 + w_alpha
/// or w_{m-1} >= w_{alpha-2} + w_{alpha-1}", 3 <= alpha <= m-2.
[[nodiscard]] inline bool lemma_gap_disjunction(const NumericalSemigroup& s, const AperyDecomposition& ap,
                                                Int alpha) {
  const Int m = s.multiplicity();
  detail::require_alpha(alpha, 3, m - 2);
  const Int gap = m - s.embedding_dimension();
  if (!(2 * gap >= alpha * (alpha - 1) - 2)) return true;
  const Int last = detail::w_last(ap);
  return last >= detail::w_at(ap, 1) + detail::w_at(ap, alpha) ||
         last >= detail::w_at(ap, alpha - 2) + detail::w_at(ap, alpha - 1);
}

[[nodiscard]] inline bool lemma_gap_disjunction(const NumericalSemigroup& s, Int alpha) {
  return lemma_gap_disjunction(s, apery_set(s, s.multiplicity()), alpha);
}

[[nodiscard]] inline ConditionReport evaluate_conditions(const NumericalSemigroup& s, const AperyDecomposition& ap) {
  ConditionReport r;
  const Int m = s.multiplicity();
  const Int nu = s.embedding_dimension();
  const Int q = q_rho(s).q;

  for (Int alpha = 2; alpha <= m - 2; ++alpha) {
    if (q >= 1 && check_thm_A(s, ap, alpha)) r.thm_a_alphas.push_back(alpha);
    if (check_thm_B(s, ap, alpha)) r.thm_b_alphas.push_back(alpha);
    if (q >= 1 && check_cor_A(s, ap, alpha)) r.cor_a_alphas.push_back(alpha);
    if (check_cor_B(s, ap, alpha)) r.cor_b_alphas.push_back(alpha);
  }
  if (!r.thm_a_alphas.empty()) r.thm_a = r.thm_a_alphas.front();
  if (!r.thm_b_alphas.empty()) r.thm_b = r.thm_b_alphas.front();

  // q-dependent conditions are not applicable to N (q = 0).
  r.two_nu = 2 * nu >= m;
  r.two_nu_q = q >= 1 && two_nu_q_bound(q, nu, m).holds();
  r.small_gap = m - nu <= 5;
  r.gap6_q = q >= 1 && m - nu == 6 && two_nu_q_bound(q, nu, m).holds();
  r.small_m = m <= 9;
  r.small_nu = nu <= 3;
  r.small_q = q >= 1 && q <= 3;
  r.covered = r.thm_a.has_value() || r.thm_b.has_value() || r.two_nu || r.two_nu_q || r.small_gap || r.gap6_q ||
              r.small_m || r.small_nu || r.small_q;
  return r;
}

[[nodiscard]] inline ConditionReport evaluate_conditions(const NumericalSemigroup& s) {
  return evaluate_conditions(s, apery_set(s, s.multiplicity()));
}

}  // namespace nsg
