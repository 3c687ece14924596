#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations, involutions and cycle decompositions on {0, ..., N-1}.
 *
 * A Permutation stores the full image map: map[i] is the position the
 * element at position i is sent to. Composition follows function
 * composition, compose(p, q)(i) = p(q(i)), so q acts first.
 *
 * An Involution is a Permutation equal to its own inverse. It can be
 * executed in place as one round of disjoint swaps, and any permutation is
 * the product of two of them (see involution_factor.hpp).
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shuffleworks/errors.hpp"

namespace shuffleworks {

/// A swap of positions i and j, normalized so that i < j.
struct Transposition {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

class Permutation {
 public:
  Permutation() = default;

  /// Takes ownership of an image map. Throws InvalidPermutation unless the
  /// map is a bijection on {0, ..., map.size()-1}.
  explicit Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t i = 0; i < map_.size(); ++i) {
      const std::size_t v = map_[i];
      if (v >= map_.size()) {
        throw InvalidPermutation("image " + std::to_string(v) + " at index " + std::to_string(i) +
                                 " is out of range for size " + std::to_string(map_.size()));
      }
      if (seen[v]) {
        throw InvalidPermutation("image " + std::to_string(v) + " appears more than once");
      }
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> map(n);
    std::iota(map.begin(), map.end(), std::size_t{0});
    return Permutation(unchecked, std::move(map));
  }

  /// The circular shift C_n = (0 1 ... n-1), i -> i+1 mod n.
  static Permutation cycle(std::size_t n) {
    std::vector<std::size_t> map(n);
    for (std::size_t i = 0; i < n; ++i) map[i] = (i + 1 == n) ? 0 : i + 1;
    return Permutation(unchecked, std::move(map));
  }

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t operator()(std::size_t i) const noexcept { return map_[i]; }
  std::span<const std::size_t> map() const noexcept { return map_; }

  Permutation inverse() const {
    std::vector<std::size_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
    return Permutation(unchecked, std::move(inv));
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < map_.size(); ++i) {
      if (map_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 protected:
  struct unchecked_t {};
  static constexpr unchecked_t unchecked{};

  Permutation(unchecked_t, std::vector<std::size_t> map) noexcept : map_(std::move(map)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);

 private:
  std::vector<std::size_t> map_;
};

/// compose(p, q)(i) = p(q(i)); q is applied first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw SizeMismatch("compose: sizes " + std::to_string(p.size()) + " and " +
                       std::to_string(q.size()) + " differ");
  }
  std::vector<std::size_t> map(p.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = p(q(i));
  return Permutation(Permutation::unchecked, std::move(map));
}

/// True iff map[map[i]] == i for all i.
inline bool is_involution(const Permutation& p) noexcept {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p(p(i)) != i) return false;
  }
  return true;
}

/// A self-inverse permutation: disjoint transpositions plus fixed points.
/// Degenerate pairs (x x) are fixed points, never stored transpositions.
class Involution : public Permutation {
 public:
  Involution() = default;

  explicit Involution(std::vector<std::size_t> map) : Permutation(std::move(map)) { check(); }
  explicit Involution(Permutation p) : Permutation(std::move(p)) { check(); }

  static Involution identity(std::size_t n) { return Involution(Permutation::identity(n)); }

  /// Builds the involution on n points that swaps each listed pair. Pairs may
  /// be given in either order; (x, x) is accepted and means x is fixed.
  static Involution from_transpositions(std::size_t n,
                                        std::span<const std::pair<std::size_t, std::size_t>> pairs) {
    std::vector<std::size_t> map(n);
    std::iota(map.begin(), map.end(), std::size_t{0});
    std::vector<bool> used(n, false);
    for (const auto& [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw InvalidPermutation("transposition (" + std::to_string(a) + " " + std::to_string(b) +
                                 ") out of range for size " + std::to_string(n));
      }
      if (used[a] || (a != b && used[b])) {
        throw InvalidPermutation("transpositions are not disjoint at (" + std::to_string(a) + " " +
                                 std::to_string(b) + ")");
      }
      used[a] = used[b] = true;
      map[a] = b;
      map[b] = a;
    }
    return Involution(unchecked, std::move(map));
  }

  /// Pairs (i, j) with i < j and map[i] == j, ordered by i.
  std::vector<Transposition> transpositions() const {
    std::vector<Transposition> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if ((*this)(i) > i) out.push_back({i, (*this)(i)});
    }
    return out;
  }

  std::vector<std::size_t> fixed_points() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if ((*this)(i) == i) out.push_back(i);
    }
    return out;
  }

 private:
  Involution(unchecked_t tag, std::vector<std::size_t> map) noexcept
      : Permutation(tag, std::move(map)) {}

  void check() const {
    if (!is_involution(*this)) throw InvalidPermutation("permutation is not an involution");
  }
};

/// Disjoint cycles of a permutation. Each cycle starts at its minimum
/// element and follows the map; cycles are ordered by that minimum.
struct CycleDecomposition {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> cycles;

  /// Rebuilds the permutation: each cycle sends cycles[c][t] to cycles[c][t+1].
  Permutation to_permutation() const {
    std::vector<std::size_t> map(size, size);
    for (const auto& cyc : cycles) {
      for (std::size_t t = 0; t < cyc.size(); ++t) {
        if (cyc[t] >= size) throw InvalidPermutation("cycle element out of range");
        map[cyc[t]] = cyc[(t + 1) % cyc.size()];
      }
    }
    return Permutation(std::move(map));
  }
};

inline CycleDecomposition cycle_decompose(const Permutation& p) {
  CycleDecomposition out{p.size(), {}};
  std::vector<bool> visited(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t x = start; !visited[x]; x = p(x)) {
      visited[x] = true;
      cyc.push_back(x);
    }
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

/// Executes one round of swaps: calls swap(i, j) once for every transposition
/// (i, j) of inv with i < j. The swaps are disjoint and may run in any order.
template <class SwapFn>
void apply_involution(const Involution& inv, SwapFn&& swap) {
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const std::size_t j = inv(i);
    if (i < j) swap(i, j);
  }
}

template <class T>
void apply_involution_in_place(std::span<T> array, const Involution& inv) {
  if (array.size() != inv.size()) {
    throw SizeMismatch("apply_involution_in_place: array has " + std::to_string(array.size()) +
                       " elements, involution has " + std::to_string(inv.size()));
  }
  using std::swap;
  apply_involution(inv, [&](std::size_t i, std::size_t j) { swap(array[i], array[j]); });
}

/// Two rounds: t's swaps, then s's. The element starting at x ends at s(t(x)),
/// so the array is permuted by compose(s, t).
template <class T>
void apply_pair_in_place(std::span<T> array, const Involution& s, const Involution& t) {
  if (s.size() != t.size()) {
    throw SizeMismatch("apply_pair_in_place: involution sizes " + std::to_string(s.size()) +
                       " and " + std::to_string(t.size()) + " differ");
  }
  apply_involution_in_place(array, t);
  apply_involution_in_place(array, s);
}

template <class T>
void apply_involution_in_place(std::vector<T>& array, const Involution& inv) {
  apply_involution_in_place(std::span<T>(array), inv);
}

template <class T>
void apply_pair_in_place(std::vector<T>& array, const Involution& s, const Involution& t) {
  apply_pair_in_place(std::span<T>(array), s, t);
}

}  // namespace shuffleworks
