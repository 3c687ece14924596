#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force references for the in-place algorithms.
 *
 * Everything here allocates freely and is written directly from the
 * definitions. None of it is used by the in-place shuffles, so it can be used
 * to check them.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "shuffleworks/errors.hpp"
#include "shuffleworks/permutation.hpp"

namespace shuffleworks {

/// Target map of the k-way perfect in-shuffle on N = kM positions:
/// i -> k*i mod (N-1) for i < N-1, and N-1 stays put.
inline Permutation in_shuffle_permutation(std::size_t n, std::size_t k) {
  if (k < 2 || n % k != 0) {
    throw ArityError("in-shuffle needs N a multiple of k >= 2 (N=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  }
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    map[i] = static_cast<std::size_t>((static_cast<unsigned __int128>(k) * i) % (n - 1));
  }
  if (n > 0) map[n - 1] = n - 1;
  return Permutation(std::move(map));
}

/// Out-of-place k-way in-shuffle: out[k*i mod (N-1)] = in[i], out[N-1] = in[N-1].
template <class T>
std::vector<T> oracle_shuffle(std::span<const T> in, std::size_t k) {
  const std::size_t n = in.size();
  if (k < 2 || n % k != 0) {
    throw ArityError("oracle_shuffle: N=" + std::to_string(n) + " is not a multiple of k=" +
                     std::to_string(k));
  }
  std::vector<T> out(in.begin(), in.end());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto dst = static_cast<std::size_t>((static_cast<unsigned __int128>(k) * i) % (n - 1));
    out[dst] = in[i];
  }
  return out;
}

template <class T>
std::vector<T> oracle_shuffle(const std::vector<T>& in, std::size_t k) {
  return oracle_shuffle(std::span<const T>(in), k);
}

/// out[p(i)] = in[i].
template <class T>
std::vector<T> oracle_apply(const Permutation& p, std::span<const T> in) {
  if (p.size() != in.size()) {
    throw SizeMismatch("oracle_apply: permutation size " + std::to_string(p.size()) +
                       " != array size " + std::to_string(in.size()));
  }
  std::vector<T> out(in.begin(), in.end());
  for (std::size_t i = 0; i < in.size(); ++i) out[p(i)] = in[i];
  return out;
}

template <class T>
std::vector<T> oracle_apply(const Permutation& p, const std::vector<T>& in) {
  return oracle_apply(p, std::span<const T>(in));
}

inline constexpr std::size_t kMaxEnumerationSize = 9;

namespace detail {

inline void enumerate_involutions_rec(std::vector<std::size_t>& map, std::vector<bool>& matched,
                                      std::size_t from,
                                      const std::function<void(const Involution&)>& visit) {
  const std::size_t n = map.size();
  while (from < n && matched[from]) ++from;
  if (from == n) {
    visit(Involution(map));
    return;
  }
  matched[from] = true;
  // Smallest unmatched element is either fixed ...
  map[from] = from;
  enumerate_involutions_rec(map, matched, from + 1, visit);
  // ... or paired with a larger unmatched element.
  for (std::size_t j = from + 1; j < n; ++j) {
    if (matched[j]) continue;
    matched[j] = true;
    map[from] = j;
    map[j] = from;
    enumerate_involutions_rec(map, matched, from + 1, visit);
    map[j] = j;
    matched[j] = false;
  }
  map[from] = from;
  matched[from] = false;
}

}  // namespace detail

/// Calls visit once for every involution of {0, ..., n-1}. n <= 9.
inline void enumerate_involutions(std::size_t n,
                                  const std::function<void(const Involution&)>& visit) {
  if (n > kMaxEnumerationSize) {
    throw OutOfRange("enumerate_involutions: n=" + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxEnumerationSize));
  }
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  std::vector<bool> matched(n, false);
  detail::enumerate_involutions_rec(map, matched, 0, visit);
}

inline std::vector<Involution> enumerate_involutions(std::size_t n) {
  std::vector<Involution> out;
  enumerate_involutions(n, [&](const Involution& inv) { out.push_back(inv); });
  return out;
}

}  // namespace shuffleworks
