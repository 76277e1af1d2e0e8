#pragma once

// Shifted interval decomposition of a numerical semigroup.
//
// Write c = q*m - rho with q = ceil(c/m) and 0 <= rho < m. The intervals
// I_k = [k*m - rho, (k+1)*m - rho) tile N shifted by rho; I_q starts at c, so
// every interval from k = q onward is full. n_k counts S in I_k and eta_j
// counts the non-full intervals holding exactly j elements. eta can also be
// read off the sorted Apery set, which turns Wilf's inequality
//     nu * n >= c
// into
//     sum_{j=1}^{m-1} eta_j * (j*nu - m) + rho >= 0.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nsg/error.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

struct QRho {
  Int q = 0;
  Int rho = 0;
  friend bool operator==(const QRho&, const QRho&) = default;
};

struct IntervalProfile {
  Int q = 0;
  Int rho = 0;
  std::vector<Int> n_k;         // k = 0 .. q-1
  std::vector<Int> eta_direct;  // index j-1 holds eta_j, j = 1 .. m-1
  std::vector<Int> eta_apery;
  Int wilf_surplus = 0;
  Int wilf_sum = 0;
};

namespace detail {

constexpr Int floor_div(Int a, Int b) noexcept {
  const Int d = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? d - 1 : d;
}

}  // namespace detail

[[nodiscard]] inline QRho q_rho(const NumericalSemigroup& s) noexcept {
  const Int m = s.multiplicity();
  const Int c = s.conductor();
  const Int q = (c + m - 1) / m;
  return {q, q * m - c};
}

/// floor((w + rho) / m), the interval index shifted by one that w falls in.
[[nodiscard]] inline Int shifted_floor(Int w, Int rho, Int m) noexcept { return detail::floor_div(w + rho, m); }

/// Number of elements of S in [k*m - rho, (k+1)*m - rho), clamped to N.
[[nodiscard]] inline Int interval_count(const NumericalSemigroup& s, Int k) {
  const Int rho = q_rho(s).rho;
  const Int m = s.multiplicity();
  const Int lo = std::max<Int>(0, k * m - rho);
  const Int hi = (k + 1) * m - rho;
  Int count = 0;
  for (Int x = lo; x < hi; ++x) count += s.contains(x) ? 1 : 0;
  return count;
}

[[nodiscard]] inline std::vector<Int> interval_counts(const NumericalSemigroup& s) {
  const Int q = q_rho(s).q;
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(q));
  for (Int k = 0; k < q; ++k) out.push_back(interval_count(s, k));
  return out;
}

[[nodiscard]] inline std::vector<Int> eta_from_counts(std::span<const Int> n_k, Int m) {
  std::vector<Int> eta(static_cast<std::size_t>(m - 1), 0);
  for (Int count : n_k)
    if (count >= 1 && count <= m - 1) ++eta[static_cast<std::size_t>(count - 1)];
  return eta;
}

[[nodiscard]] inline std::vector<Int> eta_direct(const NumericalSemigroup& s) {
  return eta_from_counts(interval_counts(s), s.multiplicity());
}

[[nodiscard]] inline std::vector<Int> eta_apery(const NumericalSemigroup& s, const AperyDecomposition& ap) {
  const Int m = s.multiplicity();
  const Int rho = q_rho(s).rho;
  std::vector<Int> eta;
  eta.reserve(static_cast<std::size_t>(m - 1));
  for (std::size_t j = 1; j < ap.size(); ++j)
    eta.push_back(shifted_floor(ap[j], rho, m) - shifted_floor(ap[j - 1], rho, m));
  return eta;
}

[[nodiscard]] inline std::vector<Int> eta_apery(const NumericalSemigroup& s) {
  return eta_apery(s, apery_set(s, s.multiplicity()));
}

/// nu * n - c. Wilf's inequality holds for S iff this is nonnegative.
[[nodiscard]] inline Int wilf_surplus(const NumericalSemigroup& s) noexcept {
  return s.embedding_dimension() * s.sporadic_count() - s.conductor();
}

[[nodiscard]] inline Int wilf_sum(const NumericalSemigroup& s, const AperyDecomposition& ap) {
  const Int m = s.multiplicity();
  const Int nu = s.embedding_dimension();
  const Int rho = q_rho(s).rho;
  Int total = rho;
  for (std::size_t j = 1; j < ap.size(); ++j) {
    const Int eta = shifted_floor(ap[j], rho, m) - shifted_floor(ap[j - 1], rho, m);
    total += eta * (static_cast<Int>(j) * nu - m);
  }
  return total;
}

[[nodiscard]] inline Int wilf_sum(const NumericalSemigroup& s) { return wilf_sum(s, apery_set(s, s.multiplicity())); }

[[nodiscard]] inline Int floor_defect(const NumericalSemigroup& s, const AperyDecomposition& ap, Int i, Int j,
                                      Int k) {
  const Int m = s.multiplicity();
  for (Int idx : {i, j, k})
    if (idx < 0 || idx >= m)
      throw Error(Errc::IndexOutOfRange,
                  "Apery index " + std::to_string(idx) + " outside [0, " + std::to_string(m - 1) + "]");
  const Int rho = q_rho(s).rho;
  const auto fl = [&](Int idx) { return shifted_floor(ap[static_cast<std::size_t>(idx)], rho, m); };
  return fl(i) - fl(j) - fl(k);
}

/// floor((w_i+rho)/m) - floor((w_j+rho)/m) - floor((w_k+rho)/m). Whenever
/// w_i >= w_j + w_k this is at least -1, and -1 forces rho >= 1 with both
/// subtracted floors at least 2.
[[nodiscard]] inline Int floor_defect(const NumericalSemigroup& s, Int i, Int j, Int k) {
  return floor_defect(s, apery_set(s, s.multiplicity()), i, j, k);
}

[[nodiscard]] inline IntervalProfile interval_profile(const NumericalSemigroup& s, const AperyDecomposition& ap) {
  IntervalProfile p;
  const auto qr = q_rho(s);
  p.q = qr.q;
  p.rho = qr.rho;
  p.n_k = interval_counts(s);
  p.eta_direct = eta_from_counts(p.n_k, s.multiplicity());
  p.eta_apery = eta_apery(s, ap);
  p.wilf_surplus = wilf_surplus(s);
  p.wilf_sum = wilf_sum(s, ap);
  return p;
}

[[nodiscard]] inline IntervalProfile interval_profile(const NumericalSemigroup& s) {
  return interval_profile(s, apery_set(s, s.multiplicity()));
}

}  // namespace nsg
