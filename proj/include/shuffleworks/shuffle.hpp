#pragma once

// Method selection shared by the command-line tool and the self test.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "shuffleworks/errors.hpp"
#include "shuffleworks/shuffle_bitrev.hpp"
#include "shuffleworks/shuffle_modinv.hpp"

namespace shuffleworks {

enum class ShuffleMethod { kAuto, kBitrev, kModinv, kOracle };

inline std::optional<ShuffleMethod> parse_shuffle_method(std::string_view name) {
  if (name == "auto") return ShuffleMethod::kAuto;
  if (name == "bitrev") return ShuffleMethod::kBitrev;
  if (name == "modinv") return ShuffleMethod::kModinv;
  if (name == "oracle") return ShuffleMethod::kOracle;
  return std::nullopt;
}

/// The concrete algorithm a request resolves to.
enum class ShufflePlan { kBitrevPower, kBitrevReduced, kModinv, kOracle };

inline std::string_view to_string(ShufflePlan p) {
  switch (p) {
    case ShufflePlan::kBitrevPower: return "bitrev";
    case ShufflePlan::kBitrevReduced: return "bitrev-reduced";
    case ShufflePlan::kModinv: return "modinv";
    case ShufflePlan::kOracle: return "oracle";
  }
  return "unknown";
}

/// auto: digit reversal when N = k^n, the rotation reduction when k = 2, the
/// modular-inverse method otherwise. bitrev accepts N = k^n, or any even N
/// when k = 2.
inline ShufflePlan resolve_plan(ShuffleMethod method, std::size_t n_elems, std::size_t k) {
  const ShuffleSpec spec(n_elems, k);  // validates N = kM
  switch (method) {
    case ShuffleMethod::kOracle: return ShufflePlan::kOracle;
    case ShuffleMethod::kModinv: return ShufflePlan::kModinv;
    case ShuffleMethod::kAuto:
      if (spec.is_power()) return ShufflePlan::kBitrevPower;
      return k == 2 ? ShufflePlan::kBitrevReduced : ShufflePlan::kModinv;
    case ShuffleMethod::kBitrev:
      if (spec.is_power()) return ShufflePlan::kBitrevPower;
      if (k == 2) return ShufflePlan::kBitrevReduced;
      throw ArityError("bitrev needs N a power of k (or k = 2); N=" + std::to_string(n_elems) +
                       ", k=" + std::to_string(k));
  }
  throw OutOfRange("unknown shuffle method");
}

struct ShuffleReport {
  ShufflePlan plan = ShufflePlan::kOracle;
  std::uint64_t swaps = 0;
  std::uint64_t rounds = 0;
  std::uint64_t euclid_iterations = 0;
};

/// Runs an in-place plan through a swap callable. kOracle is not in-place and
/// is rejected here.
template <class SwapFn>
ShuffleReport run_in_place(ShufflePlan plan, std::size_t n_elems, std::size_t k, SwapFn&& swap,
                           RulerMode mode = RulerMode::kAuto) {
  ShuffleReport report;
  report.plan = plan;
  switch (plan) {
    case ShufflePlan::kBitrevPower: {
      const auto counts = shuffle_power_with(ShuffleSpec(n_elems, k), swap, mode);
      report.swaps = counts.total();
      report.rounds = 2;
      break;
    }
    case ShufflePlan::kBitrevReduced: {
      const auto stats = shuffle_general_k2_with(n_elems, swap, mode);
      report.swaps = stats.total_swaps();
      // each rotation is sequential work; the block shuffles share two rounds
      report.rounds = stats.rotations + 2;
      break;
    }
    case ShufflePlan::kModinv: {
      const auto ops = shuffle_modinv_with(n_elems, k, swap);
      report.swaps = ops.swaps;
      report.rounds = 2;
      report.euclid_iterations = ops.euclid_iterations;
      break;
    }
    case ShufflePlan::kOracle:
      throw OutOfRange("the oracle shuffle is not in-place");
  }
  return report;
}

}  // namespace shuffleworks
