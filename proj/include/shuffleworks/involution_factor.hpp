#pragma once

/**
 * @file involution_factor.hpp
 * @brief Writing a permutation as the product of two involutions.
 *
 * For the circular shift C_n = (0 1 ... n-1) and any k in [0, n), define
 *
 *   I_k = (0 k)(1 k-1)...(k+1 n-1)(k+2 n-2)...
 *
 * i.e. I_k reverses the block [0, k] and the block [k+1, n-1]. Then
 * C_n = I_k * I_{k-1} (indices mod n), and for n > 2 these n pairs are the
 * only factorizations. Any other permutation is handled cycle by cycle.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "shuffleworks/errors.hpp"
#include "shuffleworks/oracle.hpp"
#include "shuffleworks/permutation.hpp"

namespace shuffleworks {

/// S and T with compose(s, t) == product: apply t's swaps, then s's.
struct InvolutionPair {
  Involution s;
  Involution t;
  Permutation product;

  InvolutionPair() = default;
  InvolutionPair(Involution s_, Involution t_)
      : s(std::move(s_)), t(std::move(t_)), product(compose(s, t)) {}

  friend bool operator==(const InvolutionPair& a, const InvolutionPair& b) {
    return a.s == b.s && a.t == b.t;
  }
};

namespace detail {

// Image of a under I_k on {0, ..., n-1}.
constexpr std::size_t circular_image(std::size_t n, std::size_t k, std::size_t a) noexcept {
  return a <= k ? k - a : k + n - a;
}

inline void check_circular_args(std::size_t n, std::size_t k) {
  if (n == 0) throw OutOfRange("cycle length must be at least 1");
  if (k >= n) {
    throw OutOfRange("k=" + std::to_string(k) + " out of range for cycle length " +
                     std::to_string(n));
  }
}

}  // namespace detail

inline Involution circular_involution(std::size_t n, std::size_t k) {
  detail::check_circular_args(n, k);
  std::vector<std::size_t> map(n);
  for (std::size_t a = 0; a < n; ++a) map[a] = detail::circular_image(n, k, a);
  return Involution(std::move(map));
}

/// (I_k, I_{k-1}) with k-1 read as n-1 when k == 0. The product is C_n.
inline InvolutionPair factor_cyclic(std::size_t n, std::size_t k) {
  detail::check_circular_args(n, k);
  return {circular_involution(n, k), circular_involution(n, k == 0 ? n - 1 : k - 1)};
}

inline std::vector<InvolutionPair> enumerate_circular_factorizations(std::size_t n) {
  if (n == 0) throw OutOfRange("cycle length must be at least 1");
  std::vector<InvolutionPair> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(factor_cyclic(n, k));
  return out;
}

/// Factors p as compose(S, T). Each cycle is relabeled 0..L-1 in traversal
/// order from its minimum element and factored with parameter k mod L; the
/// per-cycle involutions are disjoint and combine into S and T.
inline InvolutionPair factor_permutation(const Permutation& p, std::size_t k = 0) {
  const std::size_t n = p.size();
  std::vector<std::size_t> s(n), t(n);
  for (const auto& cyc : cycle_decompose(p).cycles) {
    const std::size_t len = cyc.size();
    const std::size_t ks = k % len;
    const std::size_t kt = ks == 0 ? len - 1 : ks - 1;
    for (std::size_t a = 0; a < len; ++a) {
      s[cyc[a]] = cyc[detail::circular_image(len, ks, a)];
      t[cyc[a]] = cyc[detail::circular_image(len, kt, a)];
    }
  }
  return {Involution(std::move(s)), Involution(std::move(t))};
}

/// Every ordered pair (S, T) of involutions with compose(S, T) == p, found by
/// exhaustive search over all involutions. p.size() <= 9.
inline std::vector<InvolutionPair> brute_force_factorizations(const Permutation& p) {
  if (p.size() > kMaxEnumerationSize) {
    throw OutOfRange("brute-force search limited to size " + std::to_string(kMaxEnumerationSize) +
                     ", got " + std::to_string(p.size()));
  }
  const auto all = enumerate_involutions(p.size());
  std::vector<InvolutionPair> found;
  for (const auto& s : all) {
    for (const auto& t : all) {
      bool match = true;
      for (std::size_t i = 0; i < p.size() && match; ++i) match = s(t(i)) == p(i);
      if (match) found.emplace_back(s, t);
    }
  }
  return found;
}

inline std::size_t brute_force_factorization_count(const Permutation& p) {
  return brute_force_factorizations(p).size();
}

}  // namespace shuffleworks
