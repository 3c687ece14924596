#pragma once

/**
 * @file shuffle_modinv.hpp
 * @brief k-way perfect in-shuffle for any N = kM via modular-inverse involutions.
 *
 * Let m = kM - 1 and, for x in Z_m with g = gcd(x, m),
 *
 *   J_r(x) = g * ( r * (x/g)^-1  mod  m/g ).
 *
 * When gcd(r, m) = 1, J_r is an involution, and J_k(J_1(x)) = k*x mod m.
 * Since gcd(k, m) = 1 always holds, swapping x <-> J_1(x) and then
 * x <-> J_k(x) over positions 1..m-1 performs the in-shuffle; positions 0 and
 * N-1 are fixed.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "shuffleworks/errors.hpp"

namespace shuffleworks {

/// Operation tallies for the modular-inverse method.
struct OpCounter {
  std::uint64_t euclid_iterations = 0;
  std::uint64_t gcd_calls = 0;
  std::uint64_t swaps = 0;
};

struct ExtGcd {
  std::uint64_t g = 0;
  std::int64_t u = 0;
  std::int64_t v = 0;
};

/// g = gcd(a, b) with a*u + b*v = g. Both inputs must fit in int64_t and not
/// both be zero. Each division step is added to counter->euclid_iterations.
inline ExtGcd ext_gcd(std::uint64_t a, std::uint64_t b, OpCounter* counter = nullptr) {
  constexpr auto kMax = static_cast<std::uint64_t>(INT64_MAX);
  if (a == 0 && b == 0) throw OutOfRange("ext_gcd(0, 0) is undefined");
  if (a > kMax || b > kMax) throw OverflowError("ext_gcd operands must fit in int64_t");

  auto old_r = static_cast<std::int64_t>(a);
  auto r = static_cast<std::int64_t>(b);
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  std::uint64_t iterations = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
    ++iterations;
  }
  if (counter) {
    counter->euclid_iterations += iterations;
    ++counter->gcd_calls;
  }
  return {static_cast<std::uint64_t>(old_r), old_s, old_t};
}

namespace detail {

inline std::uint64_t normalize(std::int64_t u, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  std::int64_t r = u % mm;
  if (r < 0) r += mm;
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace detail

/// a^-1 mod m, in [0, m). For m = 1 the answer is 0.
inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m, OpCounter* counter = nullptr) {
  if (m == 0) throw OutOfRange("modulus must be at least 1");
  if (m == 1) return 0;
  const ExtGcd e = ext_gcd(a % m, m, counter);
  if (e.g != 1) {
    throw NotCoprime("mod_inverse: gcd(" + std::to_string(a) + ", " + std::to_string(m) +
                     ") = " + std::to_string(e.g));
  }
  return detail::normalize(e.u, m);
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Modulus m = kM - 1 together with N = kM.
class ModContext {
 public:
  ModContext(std::uint64_t half, std::uint64_t k) : half_(half), k_(k) {
    if (k < 2) throw ArityError("arity k must be at least 2, got " + std::to_string(k));
    if (half < 1) throw ArityError("M must be at least 1");
    std::uint64_t n = 0;
    if (__builtin_mul_overflow(half, k, &n) || n - 1 > static_cast<std::uint64_t>(INT64_MAX)) {
      throw OverflowError("kM overflows the index range");
    }
    n_ = n;
  }

  /// Context for an array of n elements; n must be a positive multiple of k.
  static ModContext for_size(std::uint64_t n, std::uint64_t k) {
    if (k < 2) throw ArityError("arity k must be at least 2, got " + std::to_string(k));
    if (n == 0 || n % k != 0) {
      throw ArityError("N=" + std::to_string(n) + " is not a positive multiple of k=" +
                       std::to_string(k));
    }
    return ModContext(n / k, k);
  }

  std::uint64_t modulus() const noexcept { return n_ - 1; }
  std::uint64_t arity() const noexcept { return k_; }
  std::uint64_t half() const noexcept { return half_; }
  std::uint64_t size() const noexcept { return n_; }

 private:
  std::uint64_t half_;
  std::uint64_t k_;
  std::uint64_t n_;
};

namespace detail {

// J_r(x) for a multiplier already known to be coprime to m. One extended
// Euclid run gives both g = gcd(x, m) and (x/g)^-1 mod m/g.
inline std::uint64_t j_map_unchecked(std::uint64_t r, std::uint64_t x, std::uint64_t m,
                                     OpCounter* counter) {
  if (x == 0) return 0;
  const ExtGcd e = ext_gcd(x, m, counter);
  const std::uint64_t reduced = m / e.g;
  if (reduced == 1) return 0;
  const std::uint64_t inv = normalize(e.u, reduced);
  return e.g * mulmod(r % reduced, inv, reduced);
}

inline void require_coprime(std::uint64_t r, std::uint64_t m) {
  if (gcd(r, m) != 1) {
    throw NotCoprime("multiplier " + std::to_string(r) + " is not coprime to m=" +
                     std::to_string(m));
  }
}

}  // namespace detail

/// J_r(x) on Z_m. Requires gcd(r, m) = 1 and 0 <= x < m.
inline std::uint64_t j_map(std::uint64_t r, std::uint64_t x, const ModContext& ctx,
                           OpCounter* counter = nullptr) {
  const std::uint64_t m = ctx.modulus();
  detail::require_coprime(r, m);
  if (x >= m) throw OutOfRange("residue " + std::to_string(x) + " >= m=" + std::to_string(m));
  return detail::j_map_unchecked(r, x, m, counter);
}

/// J_r(J_s(x)).
inline std::uint64_t compose_j(std::uint64_t r, std::uint64_t s, std::uint64_t x,
                               const ModContext& ctx, OpCounter* counter = nullptr) {
  detail::require_coprime(r, ctx.modulus());
  return j_map(r, j_map(s, x, ctx, counter), ctx, counter);
}

/// Calls visit(x, J_r(x)) for each x in 1..m-1 with x < J_r(x). Returns the
/// number of pairs visited.
template <class Visit>
std::uint64_t for_each_j_pair(std::uint64_t r, const ModContext& ctx, Visit&& visit,
                              OpCounter* counter = nullptr) {
  const std::uint64_t m = ctx.modulus();
  detail::require_coprime(r, m);
  std::uint64_t pairs = 0;
  for (std::uint64_t x = 1; x < m; ++x) {
    const std::uint64_t j = detail::j_map_unchecked(r, x, m, counter);
    if (x < j) {
      visit(static_cast<std::size_t>(x), static_cast<std::size_t>(j));
      ++pairs;
    }
  }
  if (counter) counter->swaps += pairs;
  return pairs;
}

/// In-shuffle of N = kM positions through a swap callable: the J_1 round, then
/// the J_k round.
template <class SwapFn>
OpCounter shuffle_modinv_with(std::size_t n_elems, std::size_t k, SwapFn&& swap) {
  const ModContext ctx = ModContext::for_size(n_elems, k);
  OpCounter counter;
  for_each_j_pair(1, ctx, swap, &counter);
  for_each_j_pair(k, ctx, swap, &counter);
  return counter;
}

template <class T>
OpCounter shuffle_modinv(std::span<T> array, std::size_t k) {
  using std::swap;
  return shuffle_modinv_with(array.size(), k,
                             [&](std::size_t i, std::size_t j) { swap(array[i], array[j]); });
}

template <class T>
OpCounter shuffle_modinv(std::vector<T>& array, std::size_t k) {
  return shuffle_modinv(std::span<T>(array), k);
}

/// Swaps performed by shuffle_modinv on N = kM elements, without moving data.
inline std::uint64_t swap_count_modinv(std::uint64_t n_elems, std::uint64_t k) {
  const ModContext ctx = ModContext::for_size(n_elems, k);
  const auto none = [](std::size_t, std::size_t) {};
  return for_each_j_pair(1, ctx, none) + for_each_j_pair(k, ctx, none);
}

struct ProfileRow {
  std::uint64_t n = 0;
  OpCounter ops;
};

/// Index computation of shuffle_modinv (no data movement) for each
/// M in [m_lo, m_hi] stepping by step.
inline std::vector<ProfileRow> op_count_profile(std::uint64_t m_lo, std::uint64_t m_hi,
                                                std::uint64_t k, std::uint64_t step = 1) {
  if (m_lo < 1 || m_hi < m_lo || step == 0) {
    throw OutOfRange("invalid M range " + std::to_string(m_lo) + ".." + std::to_string(m_hi) +
                     " step " + std::to_string(step));
  }
  std::vector<ProfileRow> rows;
  for (std::uint64_t half = m_lo; half <= m_hi; half += step) {
    const ModContext ctx(half, k);
    ProfileRow row;
    row.n = ctx.size();
    const auto none = [](std::size_t, std::size_t) {};
    for_each_j_pair(1, ctx, none, &row.ops);
    for_each_j_pair(k, ctx, none, &row.ops);
    rows.push_back(row);
    if (m_hi - half < step) break;
  }
  return rows;
}

}  // namespace shuffleworks
