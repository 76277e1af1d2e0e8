#pragma once

// Canonical numerical semigroup value and its classical invariants:
// multiplicity, Frobenius number, conductor, genus, minimal generators,
// Apery sets and pseudo-Frobenius numbers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nsg/error.hpp"

namespace nsg {

using Int = std::int64_t;

/// Generators above this bound are rejected, which keeps every product the
/// library forms (q*m*nu and friends) far inside 64-bit range.
inline constexpr Int kMaxGenerator = Int{1} << 20;

/// Upper bound on the number of membership entries a single semigroup may
/// allocate (the table spans [0, f + m]).
inline constexpr Int kMaxTableEntries = Int{1} << 26;

class NumericalSemigroup;

namespace detail {
NumericalSemigroup assemble(std::vector<std::uint8_t> table, std::vector<Int> min_gens);

inline std::string join(std::span<const Int> values, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}
}  // namespace detail

/// Validated generator list: nonempty, positive, strictly increasing,
/// coprime. Duplicates in the input are dropped.
class GeneratorSet {
 public:
  static GeneratorSet make(std::vector<Int> gens) {
    if (gens.empty()) throw Error(Errc::EmptyGenerators, "at least one generator is required");
    for (Int g : gens) {
      if (g <= 0) throw Error(Errc::ZeroGenerator, "generators must be positive, got " + std::to_string(g));
      if (g > kMaxGenerator)
        throw Error(Errc::GeneratorTooLarge,
                    "generator " + std::to_string(g) + " exceeds " + std::to_string(kMaxGenerator));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Int d = 0;
    for (Int g : gens) d = std::gcd(d, g);
    if (d != 1)
      throw Error(Errc::NonCoprime, "generators " + detail::join(gens) + " share the common divisor " +
                                        std::to_string(d) + ", so the complement is infinite");
    return GeneratorSet(std::move(gens));
  }

  static GeneratorSet make(std::initializer_list<Int> gens) { return make(std::vector<Int>(gens)); }

  [[nodiscard]] std::span<const Int> values() const noexcept { return gens_; }
  [[nodiscard]] Int smallest() const noexcept { return gens_.front(); }
  [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }

 private:
  explicit GeneratorSet(std::vector<Int> gens) : gens_(std::move(gens)) {}
  std::vector<Int> gens_;
};

/// Immutable numerical semigroup. The membership table covers exactly
/// [0, f + m]; everything at or above the conductor is a member.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(const GeneratorSet& gens);

  static NumericalSemigroup from_generators(std::vector<Int> gens) {
    return from_generators(GeneratorSet::make(std::move(gens)));
  }
  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(GeneratorSet::make(gens));
  }

  /// Builds the semigroup whose complement in N is exactly `gaps`.
  /// Throws NotASemigroup when the complement is not closed under addition.
  static NumericalSemigroup from_gaps(std::span<const Int> gaps);

  static NumericalSemigroup naturals() { return NumericalSemigroup(std::vector<std::uint8_t>{1}); }

  [[nodiscard]] bool contains(Int x) const noexcept {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return table_[static_cast<std::size_t>(x)] != 0;
  }

  [[nodiscard]] Int multiplicity() const noexcept { return m_; }
  [[nodiscard]] Int frobenius() const noexcept { return f_; }
  [[nodiscard]] Int conductor() const noexcept { return conductor_; }
  [[nodiscard]] Int genus() const noexcept { return genus_; }
  /// Number of elements strictly below the conductor, 0 included.
  [[nodiscard]] Int sporadic_count() const noexcept { return sporadic_; }
  [[nodiscard]] Int embedding_dimension() const noexcept { return static_cast<Int>(min_gens_.size()); }
  [[nodiscard]] const std::vector<Int>& minimal_generators() const noexcept { return min_gens_; }
  [[nodiscard]] bool is_naturals() const noexcept { return f_ < 0; }

  /// Raw table over [0, f + m]; entry x is 1 iff x is in S.
  [[nodiscard]] std::span<const std::uint8_t> membership() const noexcept { return table_; }

  [[nodiscard]] std::vector<Int> gaps() const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(genus_));
    for (Int x = 1; x < conductor_; ++x)
      if (table_[static_cast<std::size_t>(x)] == 0) out.push_back(x);
    return out;
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.table_ == b.table_;
  }

 private:
  explicit NumericalSemigroup(std::vector<std::uint8_t> table) : table_(std::move(table)) {
    derive_scalars();
    derive_minimal_generators();
  }
  NumericalSemigroup(std::vector<std::uint8_t> table, std::vector<Int> min_gens)
      : table_(std::move(table)), min_gens_(std::move(min_gens)) {
    derive_scalars();
  }

  friend NumericalSemigroup detail::assemble(std::vector<std::uint8_t>, std::vector<Int>);

  void derive_scalars() {
    const Int size = static_cast<Int>(table_.size());
    f_ = -1;
    for (Int x = size - 1; x >= 0; --x) {
      if (table_[static_cast<std::size_t>(x)] == 0) {
        f_ = x;
        break;
      }
    }
    conductor_ = f_ + 1;
    m_ = 1;
    for (Int x = 1; x < size; ++x) {
      if (table_[static_cast<std::size_t>(x)] != 0) {
        m_ = x;
        break;
      }
    }
    genus_ = 0;
    sporadic_ = 0;
    for (Int x = 0; x < conductor_; ++x) {
      if (table_[static_cast<std::size_t>(x)] != 0)
        ++sporadic_;
      else
        ++genus_;
    }
  }

  // Minimal generators are m together with the Apery elements (w.r.t. m)
  // that are not sums of two nonzero Apery elements.
  void derive_minimal_generators() {
    min_gens_.clear();
    if (is_naturals()) {
      min_gens_.push_back(1);
      return;
    }
    std::vector<Int> ap;
    ap.reserve(static_cast<std::size_t>(m_));
    for (Int x = 0; x <= f_ + m_; ++x)
      if (contains(x) && !contains(x - m_)) ap.push_back(x);
    std::vector<std::uint8_t> decomposable(table_.size(), 0);
    for (std::size_t i = 1; i < ap.size(); ++i) {
      for (std::size_t j = i; j < ap.size(); ++j) {
        const Int s = ap[i] + ap[j];
        if (s > ap.back()) break;
        decomposable[static_cast<std::size_t>(s)] = 1;
      }
    }
    min_gens_.push_back(m_);
    for (std::size_t i = 1; i < ap.size(); ++i)
      if (decomposable[static_cast<std::size_t>(ap[i])] == 0) min_gens_.push_back(ap[i]);
    std::sort(min_gens_.begin(), min_gens_.end());
  }

  std::vector<std::uint8_t> table_;
  std::vector<Int> min_gens_;
  Int m_ = 1;
  Int f_ = -1;
  Int conductor_ = 0;
  Int genus_ = 0;
  Int sporadic_ = 0;
};

namespace detail {

/// Trusted construction for callers that already know the minimal
/// generators (the tree walker). No validation is performed.
inline NumericalSemigroup assemble(std::vector<std::uint8_t> table, std::vector<Int> min_gens) {
  return NumericalSemigroup(std::move(table), std::move(min_gens));
}

}  // namespace detail

// Shortest paths over residues mod m (Nijenhuis): dist[r] is the least
// element of S congruent to r, i.e. the Apery element of that class. This
// yields f = max(dist) - m before anything is allocated at table scale.
inline NumericalSemigroup NumericalSemigroup::from_generators(const GeneratorSet& gens) {
  const Int m = gens.smallest();
  if (m == 1) return naturals();
  const auto mz = static_cast<std::size_t>(m);
  constexpr Int kInf = std::numeric_limits<Int>::max();
  std::vector<Int> dist(mz, kInf);
  dist[0] = 0;
  using Item = std::pair<Int, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    auto [d, r] = heap.top();
    heap.pop();
    if (d != dist[r]) continue;
    for (Int g : gens.values().subspan(1)) {
      const auto next = (r + static_cast<std::size_t>(g)) % mz;
      if (d + g < dist[next]) {
        dist[next] = d + g;
        heap.emplace(d + g, next);
      }
    }
  }
  const Int top = *std::max_element(dist.begin(), dist.end());
  if (top + 1 > kMaxTableEntries)
    throw Error(Errc::GeneratorTooLarge, "membership table of " + std::to_string(top + 1) +
                                             " entries exceeds the supported limit");
  std::vector<std::uint8_t> table(static_cast<std::size_t>(top + 1));
  for (Int x = 0; x <= top; ++x) table[static_cast<std::size_t>(x)] = x >= dist[static_cast<std::size_t>(x % m)];
  return NumericalSemigroup(std::move(table));
}

inline NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const Int> gaps) {
  if (gaps.empty()) return naturals();
  Int f = 0;
  for (Int g : gaps) {
    if (g <= 0) throw Error(Errc::NotASemigroup, "gap " + std::to_string(g) + " is not a positive integer");
    if (g > kMaxGenerator) throw Error(Errc::GeneratorTooLarge, "gap " + std::to_string(g) + " is too large");
    f = std::max(f, g);
  }
  std::vector<std::uint8_t> member(static_cast<std::size_t>(f + 1), 1);
  for (Int g : gaps) member[static_cast<std::size_t>(g)] = 0;
  Int m = 1;
  while (m <= f && member[static_cast<std::size_t>(m)] == 0) ++m;
  for (Int a = m; a <= f; ++a) {
    if (member[static_cast<std::size_t>(a)] == 0) continue;
    for (Int b = a; a + b <= f; ++b) {
      if (member[static_cast<std::size_t>(b)] != 0 && member[static_cast<std::size_t>(a + b)] == 0)
        throw Error(Errc::NotASemigroup, std::to_string(a) + " + " + std::to_string(b) + " = " +
                                             std::to_string(a + b) + " is listed as a gap");
    }
  }
  member.resize(static_cast<std::size_t>(f + m + 1), 1);
  return NumericalSemigroup(std::move(member));
}

[[nodiscard]] inline bool contains(const NumericalSemigroup& s, Int x) noexcept { return s.contains(x); }

/// Apery set of S with respect to a nonzero element `wrt`, sorted ascending.
/// The min/max subsets use the order x <= y iff y - x in S and are only
/// filled when `wrt` is the multiplicity.
struct AperyDecomposition {
  Int wrt = 1;
  std::vector<Int> sorted_w;
  std::vector<Int> min_ap;  // contains w_0 = 0
  std::vector<Int> max_ap;

  [[nodiscard]] std::size_t size() const noexcept { return sorted_w.size(); }
  [[nodiscard]] Int operator[](std::size_t i) const { return sorted_w[i]; }
};

[[nodiscard]] inline AperyDecomposition apery_set(const NumericalSemigroup& s, Int a) {
  if (a <= 0 || !s.contains(a))
    throw Error(Errc::NotAnElement, std::to_string(a) + " is not a nonzero element of the semigroup");
  AperyDecomposition ap;
  ap.wrt = a;
  ap.sorted_w.reserve(static_cast<std::size_t>(a));
  for (Int x = 0; static_cast<Int>(ap.sorted_w.size()) < a; ++x)
    if (s.contains(x) && !s.contains(x - a)) ap.sorted_w.push_back(x);
  if (a != s.multiplicity()) return ap;

  const auto& w = ap.sorted_w;
  const std::size_t m = w.size();
  const auto in_apery = [&](Int x) { return s.contains(x) && !s.contains(x - a); };
  std::vector<std::uint8_t> is_sum(m, 0);
  std::vector<std::uint8_t> below_other(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 1; j < m; ++j) {
      const Int sum = w[i] + w[j];
      if (sum > w.back()) break;
      if (!in_apery(sum)) continue;
      below_other[i] = 1;
      if (i >= 1 && i <= j) {
        const auto pos = static_cast<std::size_t>(std::lower_bound(w.begin(), w.end(), sum) - w.begin());
        is_sum[pos] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (is_sum[i] == 0) ap.min_ap.push_back(w[i]);
    if (below_other[i] == 0) ap.max_ap.push_back(w[i]);
  }
  return ap;
}

/// Pseudo-Frobenius numbers: gaps x with x + s in S for every nonzero s in S.
/// Checking the minimal generators suffices.
[[nodiscard]] inline std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.is_naturals())
    throw Error(Errc::FullSemigroup, "pseudo-Frobenius numbers are undefined for N");
  std::vector<Int> out;
  for (Int x : s.gaps()) {
    const bool ok = std::all_of(s.minimal_generators().begin(), s.minimal_generators().end(),
                                [&](Int g) { return s.contains(x + g); });
    if (ok) out.push_back(x);
  }
  return out;
}

[[nodiscard]] inline Int type(const NumericalSemigroup& s) { return static_cast<Int>(pseudo_frobenius(s).size()); }

/// Closed form for the Frobenius number of a two-generated semigroup.
[[nodiscard]] inline Int sylvester_frobenius(Int a, Int b) {
  if (a < 2 || b < 2) throw Error(Errc::InvalidArgument, "both generators must be at least 2");
  if (std::gcd(a, b) != 1)
    throw Error(Errc::NonCoprime, std::to_string(a) + " and " + std::to_string(b) + " are not coprime");
  return a * b - a - b;
}

}  // namespace nsg
