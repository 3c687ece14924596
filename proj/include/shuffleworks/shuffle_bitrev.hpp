#pragma once

/**
 * @file shuffle_bitrev.hpp
 * @brief k-way perfect in-shuffle by two rounds of digit-reversal swaps.
 *
 * For N = k^n, write i in base k with n digits and let rev_t(i) reverse the
 * t least significant digits. Then rev_n(rev_{n-1}(i)) = k*i mod (N-1), so
 * the in-shuffle is one round of rev_{n-1} swaps followed by one round of
 * rev_n swaps. Both rounds are involutions and each swap set is disjoint.
 *
 * The partner j = rev_t(i) is never recomputed from scratch. As i advances,
 * the ruler value p (number of trailing k-1 digits of i) gives
 *
 *   rev_t(i+1) = rev_t(i) - k^t + k^(t-p) + k^(t-p-1)      for p < t,
 *
 * and rev_t(i+1) = i+1 when p >= t (the low t digits wrap to zero).
 *
 * For k = 2 and N = 2M not a power of two, shuffle_general_k2 first rotates
 * power-of-two sized pieces of the second half next to their partners in
 * the first half, then shuffles each aligned 2^(j+1) block.
 */

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shuffleworks/errors.hpp"

namespace shuffleworks {

/// Selects how the ruler value p is produced while scanning indices.
enum class RulerMode {
  kAuto,      ///< hardware trailing-ones count when k == 2, counter otherwise
  kCounter,   ///< simulate a base-k counter (any k)
  kHardware,  ///< std::countr_one; only meaningful for k == 2
};

namespace detail {

inline std::size_t checked_mul(std::size_t a, std::size_t b, const char* what) {
  std::size_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string(what) + " overflows");
  return r;
}

inline std::size_t ipow(std::size_t base, unsigned e) {
  std::size_t r = 1;
  for (unsigned t = 0; t < e; ++t) r = checked_mul(r, base, "power");
  return r;
}

}  // namespace detail

/// Parameters (N, k, M) of a k-way in-shuffle with N = kM, plus n when N = k^n.
class ShuffleSpec {
 public:
  ShuffleSpec(std::size_t n_elems, std::size_t k) : size_(n_elems), k_(k) {
    if (k < 2) throw ArityError("arity k must be at least 2, got " + std::to_string(k));
    if (n_elems == 0 || n_elems % k != 0) {
      throw ArityError("N=" + std::to_string(n_elems) + " is not a positive multiple of k=" +
                       std::to_string(k));
    }
    std::size_t p = 1;
    unsigned e = 0;
    while (p < n_elems) {
      if (__builtin_mul_overflow(p, k, &p)) break;
      ++e;
    }
    if (p == n_elems) exponent_ = e;
  }

  /// N = k^n. Throws OverflowError if k^n does not fit in std::size_t.
  static ShuffleSpec power(std::size_t k, unsigned n) {
    if (k < 2) throw ArityError("arity k must be at least 2, got " + std::to_string(k));
    if (n == 0) throw ArityError("exponent must be at least 1");
    return ShuffleSpec(detail::ipow(k, n), k);
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t arity() const noexcept { return k_; }
  std::size_t half() const noexcept { return size_ / k_; }
  std::optional<unsigned> exponent() const noexcept { return exponent_; }
  bool is_power() const noexcept { return exponent_.has_value(); }

  unsigned require_exponent() const {
    if (!exponent_) {
      throw ArityError("N=" + std::to_string(size_) + " is not a power of k=" + std::to_string(k_));
    }
    return *exponent_;
  }

 private:
  std::size_t size_;
  std::size_t k_;
  std::optional<unsigned> exponent_;
};

/// k^0, k^1, ..., k^n.
class PowerTable {
 public:
  PowerTable(std::size_t k, unsigned n) : powers_(n + 1) {
    powers_[0] = 1;
    for (unsigned t = 1; t <= n; ++t) powers_[t] = detail::checked_mul(powers_[t - 1], k, "k^n");
  }
  explicit PowerTable(const ShuffleSpec& spec) : PowerTable(spec.arity(), spec.require_exponent()) {}

  std::size_t operator[](unsigned t) const noexcept { return powers_[t]; }
  unsigned exponent() const noexcept { return static_cast<unsigned>(powers_.size() - 1); }

 private:
  std::vector<std::size_t> powers_;
};

/// n-digit base-k counter that reports the ruler value of each increment.
class KaryCounter {
 public:
  KaryCounter(std::size_t k, unsigned n) : k_(k), digits_(n, 0) {
    if (k < 2) throw OutOfRange("counter base must be at least 2");
  }

  std::size_t base() const noexcept { return k_; }
  unsigned width() const noexcept { return static_cast<unsigned>(digits_.size()); }
  std::size_t value() const noexcept { return value_; }
  /// Digit t, least significant first.
  std::size_t digit(unsigned t) const noexcept { return digits_[t]; }

  /// Advances to value()+1 and returns the number of trailing k-1 digits the
  /// old value had. Throws OutOfRange when the counter would wrap.
  unsigned increment() {
    unsigned p = 0;
    while (p < digits_.size() && digits_[p] == k_ - 1) ++p;
    if (p == digits_.size()) throw OutOfRange("base-k counter overflow");
    for (unsigned t = 0; t < p; ++t) digits_[t] = 0;
    ++digits_[p];
    ++value_;
    return p;
  }

 private:
  std::size_t k_;
  std::vector<std::size_t> digits_;
  std::size_t value_ = 0;
};

inline unsigned ruler_increment(KaryCounter& counter) { return counter.increment(); }

/// i with its low t base-k digits reversed; the upper n-t digits are kept.
inline std::size_t rev_digits(std::size_t i, unsigned t, const ShuffleSpec& spec) {
  const unsigned n = spec.require_exponent();
  if (i >= spec.size()) {
    throw OutOfRange("index " + std::to_string(i) + " >= N=" + std::to_string(spec.size()));
  }
  if (t > n) throw OutOfRange("digit count " + std::to_string(t) + " > n=" + std::to_string(n));
  const std::size_t k = spec.arity();
  std::size_t high = i;
  std::size_t low = 0;
  for (unsigned d = 0; d < t; ++d) {
    low = low * k + high % k;
    high /= k;
  }
  return high * detail::ipow(k, t) + low;
}

/// rev_t(i+1) from prev = rev_t(i), given the ruler value p < t of i -> i+1.
/// Unsigned wrap-around in the intermediate terms cancels out exactly.
inline std::size_t rev_next(std::size_t prev, unsigned p, unsigned t, const PowerTable& powers) {
  if (p >= t) {
    throw OutOfRange("rev_next needs p < t (p=" + std::to_string(p) + ", t=" + std::to_string(t) +
                     "); the caller resets to i+1 instead");
  }
  return prev - powers[t] + powers[t - p] + powers[t - p - 1];
}

/// Calls visit(i, j) for every i < j = rev_t(i), in increasing i. Returns the
/// number of pairs visited.
template <class Visit>
std::size_t for_each_rev_pair(const ShuffleSpec& spec, unsigned t, Visit&& visit,
                              RulerMode mode = RulerMode::kAuto) {
  const unsigned n = spec.require_exponent();
  if (t > n) throw OutOfRange("digit count " + std::to_string(t) + " > n=" + std::to_string(n));
  if (t <= 1) return 0;

  const std::size_t total = spec.size();
  const PowerTable powers(spec.arity(), n);
  const std::size_t kt = powers[t];
  std::size_t count = 0;
  std::size_t j = 0;

  if (spec.arity() == 2 && mode != RulerMode::kCounter) {
    for (std::size_t i = 0;; ++i) {
      if (i < j) {
        visit(i, j);
        ++count;
      }
      if (i + 1 == total) break;
      const auto p = static_cast<unsigned>(std::countr_one(i));
      j = p >= t ? i + 1 : j - kt + powers[t - p] + powers[t - p - 1];
    }
    return count;
  }

  KaryCounter counter(spec.arity(), n);
  for (std::size_t i = 0;; ++i) {
    if (i < j) {
      visit(i, j);
      ++count;
    }
    if (i + 1 == total) break;
    const unsigned p = counter.increment();
    j = p >= t ? i + 1 : j - kt + powers[t - p] + powers[t - p - 1];
  }
  return count;
}

/// One round of rev_t swaps driven by a swap callable.
template <class SwapFn>
std::size_t revswap_round_with(const ShuffleSpec& spec, unsigned t, SwapFn&& swap,
                               RulerMode mode = RulerMode::kAuto) {
  return for_each_rev_pair(spec, t, swap, mode);
}

template <class T>
std::size_t revswap_round(std::span<T> array, unsigned t, const ShuffleSpec& spec,
                          RulerMode mode = RulerMode::kAuto) {
  if (array.size() != spec.size()) {
    throw SizeMismatch("revswap_round: array has " + std::to_string(array.size()) +
                       " elements, spec has N=" + std::to_string(spec.size()));
  }
  using std::swap;
  return for_each_rev_pair(
      spec, t, [&](std::size_t i, std::size_t j) { swap(array[i], array[j]); }, mode);
}

/// Swap counts of the two rounds (rev_{n-1}, then rev_n).
struct PhaseCounts {
  std::size_t phase1 = 0;
  std::size_t phase2 = 0;

  std::size_t total() const noexcept { return phase1 + phase2; }
  friend bool operator==(const PhaseCounts&, const PhaseCounts&) = default;
};

/// In-shuffle of k^n positions via a swap callable: rev_{n-1} round, then rev_n.
template <class SwapFn>
PhaseCounts shuffle_power_with(const ShuffleSpec& spec, SwapFn&& swap,
                               RulerMode mode = RulerMode::kAuto) {
  const unsigned n = spec.require_exponent();
  PhaseCounts counts;
  counts.phase1 = for_each_rev_pair(spec, n - 1, swap, mode);
  counts.phase2 = for_each_rev_pair(spec, n, swap, mode);
  return counts;
}

template <class T>
PhaseCounts shuffle_power(std::span<T> array, const ShuffleSpec& spec,
                          RulerMode mode = RulerMode::kAuto) {
  if (array.size() != spec.size()) {
    throw SizeMismatch("shuffle_power: array has " + std::to_string(array.size()) +
                       " elements, spec has N=" + std::to_string(spec.size()));
  }
  using std::swap;
  return shuffle_power_with(
      spec, [&](std::size_t i, std::size_t j) { swap(array[i], array[j]); }, mode);
}

template <class T>
PhaseCounts shuffle_power(std::vector<T>& array, std::size_t k, RulerMode mode = RulerMode::kAuto) {
  return shuffle_power(std::span<T>(array), ShuffleSpec(array.size(), k), mode);
}

/// Closed-form swap counts of shuffle_power for N = k^n.
inline PhaseCounts swap_counts(const ShuffleSpec& spec) {
  const unsigned n = spec.require_exponent();
  const std::size_t k = spec.arity();
  using detail::ipow;
  if (n % 2 == 0) {
    return {k * (ipow(k, n - 1) - ipow(k, n / 2)) / 2, (ipow(k, n) - ipow(k, n / 2)) / 2};
  }
  return {k * (ipow(k, n - 1) - ipow(k, (n - 1) / 2)) / 2, (ipow(k, n) - ipow(k, (n + 1) / 2)) / 2};
}

// ---------------------------------------------------------------------------
// Rotation reduction, k = 2.

/// Left-rotates [start, start+length) by shift: the first shift elements move
/// to the end.
struct Rotation {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t shift = 0;

  friend bool operator==(const Rotation&, const Rotation&) = default;
};

/// A block [start, start+size) that is in-shuffled after all rotations.
struct ShuffleBlock {
  std::size_t start = 0;
  std::size_t size = 0;

  friend bool operator==(const ShuffleBlock&, const ShuffleBlock&) = default;
};

struct RotationPlan {
  std::vector<std::size_t> segment_sizes;  ///< powers of two in M, decreasing
  std::vector<Rotation> rotations;
  std::vector<ShuffleBlock> blocks;
  std::size_t cost = 0;  ///< sum of rotation lengths
};

/// Plan for N = 2M. With M = (b_s ... b_1 b_0)_2, every set bit i >= 1 gets a
/// rotation that brings the 2^i-piece of the second half next to its mate in
/// the first half. That rotation spans (b_i ... b_0)_2 elements, so
/// cost = sum over i >= 1 of b_i * (b_i ... b_0)_2. When no lower bits are set
/// the rotation has shift 0 and is still counted.
inline RotationPlan rotation_plan(std::size_t half) {
  if (half == 0) throw OutOfRange("rotation_plan needs M >= 1");
  if (half > (~std::size_t{0}) / 2) throw OverflowError("2M overflows");
  RotationPlan plan;
  std::size_t base = 0;
  for (int bit = std::bit_width(half) - 1; bit >= 0; --bit) {
    const std::size_t piece = std::size_t{1} << bit;
    if ((half & piece) == 0) continue;
    plan.segment_sizes.push_back(piece);
    const std::size_t below = half & (piece - 1);
    if (bit >= 1) {
      plan.rotations.push_back({base + piece, below + piece, below});
      plan.cost += below + piece;
    }
    plan.blocks.push_back({base, 2 * piece});
    base += 2 * piece;
  }
  return plan;
}

namespace detail {

template <class SwapFn>
std::size_t reverse_with(std::size_t first, std::size_t last, SwapFn& swap) {
  std::size_t swaps = 0;
  while (first + 1 < last) {
    swap(first++, --last);
    ++swaps;
  }
  return swaps;
}

}  // namespace detail

/// Triple-reversal rotation. Returns the number of swaps performed; a shift
/// of 0 or of the whole length moves nothing.
template <class SwapFn>
std::size_t rotate_with(const Rotation& rot, SwapFn&& swap) {
  if (rot.shift == 0 || rot.shift == rot.length) return 0;
  const std::size_t mid = rot.start + rot.shift;
  const std::size_t end = rot.start + rot.length;
  std::size_t swaps = detail::reverse_with(rot.start, mid, swap);
  swaps += detail::reverse_with(mid, end, swap);
  swaps += detail::reverse_with(rot.start, end, swap);
  return swaps;
}

struct GeneralShuffleStats {
  std::size_t rotations = 0;
  std::size_t rotated_elements = 0;  ///< elements covered by executed rotations
  std::size_t rotation_swaps = 0;
  std::size_t block_swaps = 0;

  std::size_t total_swaps() const noexcept { return rotation_swaps + block_swaps; }
};

/// 2-way in-shuffle of any even N: all rotations first, then shuffle_power on
/// each block, in order.
template <class SwapFn>
GeneralShuffleStats shuffle_general_k2_with(std::size_t n_elems, SwapFn&& swap,
                                            RulerMode mode = RulerMode::kAuto) {
  if (n_elems == 0 || n_elems % 2 != 0) {
    throw ArityError("shuffle_general_k2 needs an even positive N, got " + std::to_string(n_elems));
  }
  const RotationPlan plan = rotation_plan(n_elems / 2);
  GeneralShuffleStats stats;
  for (const auto& rot : plan.rotations) {
    stats.rotation_swaps += rotate_with(rot, swap);
    stats.rotated_elements += rot.length;
    ++stats.rotations;
  }
  for (const auto& block : plan.blocks) {
    const std::size_t base = block.start;
    const auto counts = shuffle_power_with(
        ShuffleSpec(block.size, 2),
        [&](std::size_t i, std::size_t j) { swap(base + i, base + j); }, mode);
    stats.block_swaps += counts.total();
  }
  return stats;
}

template <class T>
GeneralShuffleStats shuffle_general_k2(std::span<T> array, RulerMode mode = RulerMode::kAuto) {
  using std::swap;
  return shuffle_general_k2_with(
      array.size(), [&](std::size_t i, std::size_t j) { swap(array[i], array[j]); }, mode);
}

template <class T>
GeneralShuffleStats shuffle_general_k2(std::vector<T>& array, RulerMode mode = RulerMode::kAuto) {
  return shuffle_general_k2(std::span<T>(array), mode);
}

}  // namespace shuffleworks
