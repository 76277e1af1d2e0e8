#pragma once

// Test-only reference computations. Nothing here calls into the library's
// construction paths; each oracle works from the definitions directly.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;

/// Membership of [0, bound) in the monoid generated by `gens`, by forward
/// sieve: x is a member iff x - g is a member for some generator g.
inline std::vector<bool> sieve(const std::vector<Int>& gens, Int bound) {
  std::vector<bool> mem(static_cast<std::size_t>(bound), false);
  mem[0] = true;
  for (Int x = 1; x < bound; ++x)
    for (Int g : gens)
      if (g <= x && mem[static_cast<std::size_t>(x - g)]) {
        mem[static_cast<std::size_t>(x)] = true;
        break;
      }
  return mem;
}

struct Brute {
  std::vector<bool> mem;
  Int m = 0;
  Int f = -1;
  Int genus = 0;
  Int n = 0;
  std::vector<Int> min_gens;
  std::vector<Int> apery;  // w.r.t. m, sorted

  [[nodiscard]] bool in(Int x) const {
    if (x < 0) return false;
    if (x >= static_cast<Int>(mem.size())) return true;
    return mem[static_cast<std::size_t>(x)];
  }
};

/// All invariants by exhaustive search over [0, bound). The caller picks a
/// bound comfortably above f + 2m.
inline Brute brute(const std::vector<Int>& gens, Int bound) {
  Brute b;
  b.mem = sieve(gens, bound);
  for (Int x = 0; x < bound; ++x)
    if (!b.mem[static_cast<std::size_t>(x)]) b.f = x;
  for (Int x = 1; x < bound; ++x)
    if (b.mem[static_cast<std::size_t>(x)]) {
      b.m = x;
      break;
    }
  for (Int x = 0; x <= b.f; ++x) (b.mem[static_cast<std::size_t>(x)] ? b.n : b.genus) += 1;
  for (Int x = 1; x < bound; ++x) {
    if (!b.in(x)) continue;
    bool decomposable = false;
    for (Int a = 1; a < x && !decomposable; ++a) decomposable = b.in(a) && b.in(x - a);
    if (!decomposable) b.min_gens.push_back(x);
  }
  for (Int r = 0; r < b.m; ++r) {
    Int x = r;
    while (!b.in(x)) x += b.m;
    b.apery.push_back(x);
  }
  std::sort(b.apery.begin(), b.apery.end());
  return b;
}

/// Numbers of numerical semigroups of each genus 0..max_genus, found by
/// testing every g-subset of {1, ..., 2g} as a gap set (the Frobenius number
/// of a genus-g semigroup is at most 2g - 1).
inline std::vector<std::uint64_t> gap_subset_counts(int max_genus) {
  std::vector<std::uint64_t> counts;
  for (int g = 0; g <= max_genus; ++g) {
    const int universe = 2 * g;
    std::uint64_t count = 0;
    std::vector<int> pick(static_cast<std::size_t>(universe), 0);
    std::fill(pick.end() - g, pick.end(), 1);
    do {
      std::vector<bool> gap(static_cast<std::size_t>(universe + 1), false);
      for (int i = 0; i < universe; ++i)
        if (pick[static_cast<std::size_t>(i)]) gap[static_cast<std::size_t>(i + 1)] = true;
      bool closed = true;
      for (int a = 1; a <= universe && closed; ++a) {
        if (gap[static_cast<std::size_t>(a)]) continue;
        for (int b = a; a + b <= universe; ++b)
          if (!gap[static_cast<std::size_t>(b)] && gap[static_cast<std::size_t>(a + b)]) {
            closed = false;
            break;
          }
      }
      if (closed) ++count;
    } while (std::next_permutation(pick.begin(), pick.end()));
    counts.push_back(count);
  }
  return counts;
}

/// Random coprime generator list with entries in [2, hi].
inline std::vector<Int> random_generators(std::mt19937_64& rng, Int hi, int max_count) {
  std::uniform_int_distribution<Int> value(2, hi);
  std::uniform_int_distribution<int> count(2, max_count);
  for (;;) {
    std::vector<Int> gens(static_cast<std::size_t>(count(rng)));
    for (auto& g : gens) g = value(rng);
    Int d = 0;
    for (Int g : gens) d = std::gcd(d, g);
    if (d == 1) return gens;
  }
}

}  // namespace oracle
