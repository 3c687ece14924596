#pragma once

/**
 * @file network.hpp
 * @brief Explicit swap networks: rounds of disjoint swaps over N positions.
 *
 * A network is executed round by round; the swaps inside a round touch
 * distinct positions, so they commute and may run concurrently. Networks can
 * be built from either shuffle method or from the two-involution
 * factorization of an arbitrary permutation, and rendered as a versioned
 * text format or as a Graphviz graph.
 */

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "shuffleworks/errors.hpp"
#include "shuffleworks/involution_factor.hpp"
#include "shuffleworks/permutation.hpp"
#include "shuffleworks/shuffle_bitrev.hpp"
#include "shuffleworks/shuffle_modinv.hpp"

namespace shuffleworks {

using Swap = Transposition;

struct SwapRound {
  std::vector<Swap> swaps;

  friend bool operator==(const SwapRound&, const SwapRound&) = default;
};

struct SwapNetwork {
  std::size_t n_positions = 0;
  std::vector<SwapRound> rounds;
  std::string label;

  std::size_t total_swaps() const noexcept {
    std::size_t total = 0;
    for (const auto& r : rounds) total += r.swaps.size();
    return total;
  }

  friend bool operator==(const SwapNetwork&, const SwapNetwork&) = default;
};

enum class NetworkMethod { kBitrev, kModinv, kFactorization };

inline std::string_view to_string(NetworkMethod m) {
  switch (m) {
    case NetworkMethod::kBitrev: return "bitrev";
    case NetworkMethod::kModinv: return "modinv";
    case NetworkMethod::kFactorization: return "factorization";
  }
  return "unknown";
}

/// True iff no position appears in two swaps of the round (or twice in one).
inline bool check_disjoint(const SwapRound& round) {
  std::vector<std::size_t> seen;
  seen.reserve(2 * round.swaps.size());
  for (const auto& s : round.swaps) {
    if (s.i == s.j) return false;
    seen.push_back(s.i);
    seen.push_back(s.j);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

/// Throws InvalidPermutation unless every swap is (i < j < N) and every round
/// is disjoint.
inline void validate(const SwapNetwork& net) {
  for (std::size_t r = 0; r < net.rounds.size(); ++r) {
    for (const auto& s : net.rounds[r].swaps) {
      if (!(s.i < s.j && s.j < net.n_positions)) {
        throw InvalidPermutation("round " + std::to_string(r) + ": bad swap (" +
                                 std::to_string(s.i) + " " + std::to_string(s.j) + ")");
      }
    }
    if (!check_disjoint(net.rounds[r])) {
      throw InvalidPermutation("round " + std::to_string(r) + " has overlapping swaps");
    }
  }
}

namespace detail {

inline void canonicalize(SwapRound& round) { std::sort(round.swaps.begin(), round.swaps.end()); }

inline SwapRound round_of(const Involution& inv) {
  SwapRound round;
  for (const auto& t : inv.transpositions()) round.swaps.push_back(t);
  return round;
}

}  // namespace detail

/// rev_{n-1} round, then rev_n round. Requires N = k^n.
inline SwapNetwork build_bitrev_network(const ShuffleSpec& spec) {
  const unsigned n = spec.require_exponent();
  SwapNetwork net{spec.size(), {}, "bitrev"};
  for (unsigned t : {n - 1, n}) {
    SwapRound round;
    for_each_rev_pair(spec, t, [&](std::size_t i, std::size_t j) { round.swaps.push_back({i, j}); });
    detail::canonicalize(round);
    net.rounds.push_back(std::move(round));
  }
  return net;
}

/// J_1 round, then J_k round. Requires N = kM.
inline SwapNetwork build_modinv_network(std::size_t n_elems, std::size_t k) {
  const ModContext ctx = ModContext::for_size(n_elems, k);
  SwapNetwork net{n_elems, {}, "modinv"};
  for (std::uint64_t r : {std::uint64_t{1}, std::uint64_t{k}}) {
    SwapRound round;
    for_each_j_pair(r, ctx, [&](std::size_t i, std::size_t j) { round.swaps.push_back({i, j}); });
    detail::canonicalize(round);
    net.rounds.push_back(std::move(round));
  }
  return net;
}

/// T's transpositions, then S's, for factor_permutation(p) = (S, T).
inline SwapNetwork build_factorization_network(const Permutation& p) {
  const InvolutionPair pair = factor_permutation(p);
  return {p.size(), {detail::round_of(pair.t), detail::round_of(pair.s)}, "factorization"};
}

/// Shuffle networks by method. kFactorization builds the network of the
/// in-shuffle permutation itself.
inline SwapNetwork build_network(NetworkMethod method, std::size_t n_elems, std::size_t k) {
  switch (method) {
    case NetworkMethod::kBitrev: return build_bitrev_network(ShuffleSpec(n_elems, k));
    case NetworkMethod::kModinv: return build_modinv_network(n_elems, k);
    case NetworkMethod::kFactorization: {
      const ShuffleSpec spec(n_elems, k);
      std::vector<std::size_t> map(n_elems);
      for (std::size_t i = 0; i + 1 < n_elems; ++i) {
        map[i] = static_cast<std::size_t>(
            (static_cast<unsigned __int128>(spec.arity()) * i) % (n_elems - 1));
      }
      map[n_elems - 1] = n_elems - 1;
      return build_factorization_network(Permutation(std::move(map)));
    }
  }
  throw OutOfRange("unknown network method");
}

inline SwapNetwork build_network(const Permutation& p) { return build_factorization_network(p); }

/// Runs the rounds in order through a swap callable.
template <class SwapFn>
void apply_network(const SwapNetwork& net, SwapFn&& swap) {
  for (const auto& round : net.rounds) {
    for (const auto& s : round.swaps) swap(s.i, s.j);
  }
}

/// Runs the rounds in reverse order, undoing apply_network.
template <class SwapFn>
void apply_network_reversed(const SwapNetwork& net, SwapFn&& swap) {
  for (auto it = net.rounds.rbegin(); it != net.rounds.rend(); ++it) {
    for (const auto& s : it->swaps) swap(s.i, s.j);
  }
}

/// Like apply_network, but each round's swaps are split across `threads`
/// workers, joined before the next round starts. swap must be safe to call
/// concurrently on disjoint index pairs.
template <class SwapFn>
void apply_network_parallel(const SwapNetwork& net, SwapFn&& swap, unsigned threads) {
  if (threads <= 1) {
    apply_network(net, swap);
    return;
  }
  for (const auto& round : net.rounds) {
    const std::size_t count = round.swaps.size();
    const std::size_t chunk = (count + threads - 1) / threads;
    std::vector<std::jthread> workers;
    for (std::size_t lo = 0; lo < count; lo += chunk) {
      const std::size_t hi = std::min(count, lo + chunk);
      workers.emplace_back([&round, &swap, lo, hi] {
        for (std::size_t s = lo; s < hi; ++s) swap(round.swaps[s].i, round.swaps[s].j);
      });
    }
  }
}

template <class T>
void apply_network_in_place(std::span<T> array, const SwapNetwork& net) {
  if (array.size() != net.n_positions) {
    throw SizeMismatch("network has " + std::to_string(net.n_positions) + " positions, array has " +
                       std::to_string(array.size()));
  }
  using std::swap;
  apply_network(net, [&](std::size_t i, std::size_t j) { swap(array[i], array[j]); });
}

/// map[x] = final position of the element that starts at x.
inline Permutation network_permutation(const SwapNetwork& net) {
  validate(net);
  // where[pos] = starting position of the element currently at pos
  std::vector<std::size_t> where(net.n_positions);
  for (std::size_t i = 0; i < where.size(); ++i) where[i] = i;
  apply_network(net, [&](std::size_t i, std::size_t j) { std::swap(where[i], where[j]); });
  std::vector<std::size_t> map(net.n_positions);
  for (std::size_t pos = 0; pos < where.size(); ++pos) map[where[pos]] = pos;
  return Permutation(std::move(map));
}

// ---------------------------------------------------------------------------
// Text format
//
//   # shuffleworks-net v1
//   N=<N> method=<label> swaps=<total>
//   round 0: (i j) (i j) ...
//   round 1: ...

inline constexpr std::string_view kNetworkTextMagic = "# shuffleworks-net v1";

inline std::string emit_text(const SwapNetwork& net) {
  std::ostringstream out;
  out << kNetworkTextMagic << '\n';
  out << "N=" << net.n_positions << " method=" << net.label << " swaps=" << net.total_swaps()
      << '\n';
  for (std::size_t r = 0; r < net.rounds.size(); ++r) {
    SwapRound sorted = net.rounds[r];
    detail::canonicalize(sorted);
    out << "round " << r << ':';
    for (const auto& s : sorted.swaps) out << " (" << s.i << ' ' << s.j << ')';
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline std::size_t parse_count(std::string_view text, std::string_view what) {
  if (text.empty()) throw ParseError("empty " + std::string(what));
  std::size_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("bad " + std::string(what) + ": " + std::string(text));
    if (__builtin_mul_overflow(value, std::size_t{10}, &value) ||
        __builtin_add_overflow(value, static_cast<std::size_t>(c - '0'), &value)) {
      throw OverflowError(std::string(what) + " too large: " + std::string(text));
    }
  }
  return value;
}

inline std::string_view take_field(std::string_view& line, std::string_view key) {
  if (line.substr(0, key.size()) != key) throw ParseError("expected '" + std::string(key) + "'");
  line.remove_prefix(key.size());
  const auto end = std::min(line.find(' '), line.size());
  std::string_view value = line.substr(0, end);
  line.remove_prefix(end);
  if (!line.empty()) line.remove_prefix(1);
  return value;
}

}  // namespace detail

/// Inverse of emit_text. Throws ParseError on malformed input.
inline SwapNetwork parse_text(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.size() < 2 || lines[0] != kNetworkTextMagic) {
    throw ParseError("missing '" + std::string(kNetworkTextMagic) + "' header");
  }
  SwapNetwork net;
  std::string_view header = lines[1];
  net.n_positions = detail::parse_count(detail::take_field(header, "N="), "N");
  net.label = std::string(detail::take_field(header, "method="));
  const std::size_t declared = detail::parse_count(detail::take_field(header, "swaps="), "swaps");

  for (std::size_t r = 0; r + 2 < lines.size(); ++r) {
    std::string_view line = lines[r + 2];
    const std::string prefix = "round " + std::to_string(r) + ":";
    if (line.substr(0, prefix.size()) != prefix) throw ParseError("expected '" + prefix + "'");
    line.remove_prefix(prefix.size());
    SwapRound round;
    while (!line.empty()) {
      if (line.substr(0, 2) != " (") throw ParseError("expected ' (' in round " + std::to_string(r));
      line.remove_prefix(2);
      const auto sp = line.find(' ');
      const auto close = line.find(')');
      if (sp == std::string_view::npos || close == std::string_view::npos || close < sp) {
        throw ParseError("malformed swap in round " + std::to_string(r));
      }
      const std::size_t i = detail::parse_count(line.substr(0, sp), "index");
      const std::size_t j = detail::parse_count(line.substr(sp + 1, close - sp - 1), "index");
      round.swaps.push_back({i, j});
      line.remove_prefix(close + 1);
    }
    net.rounds.push_back(std::move(round));
  }
  if (net.total_swaps() != declared) {
    throw ParseError("header declares " + std::to_string(declared) + " swaps, body has " +
                     std::to_string(net.total_swaps()));
  }
  try {
    validate(net);
  } catch (const InvalidPermutation& e) {
    throw ParseError(e.what());
  }
  return net;
}

// ---------------------------------------------------------------------------
// Graphviz
//
// Column c holds the state before round c; the last column is the output.
// Rails run right to left (inputs on the right). Each swap is a vertical edge
// inside its round's column.

inline std::string emit_dot(const SwapNetwork& net) {
  const std::size_t cols = net.rounds.size() + 1;
  const auto node = [](std::size_t pos, std::size_t col) {
    return "p" + std::to_string(pos) + "_r" + std::to_string(col);
  };
  std::ostringstream out;
  out << "graph network {\n";
  out << "  rankdir=RL;\n";
  out << "  label=\"N=" << net.n_positions << " method=" << net.label
      << " swaps=" << net.total_swaps() << "\";\n";
  out << "  node [shape=point];\n";
  for (std::size_t c = 0; c < cols; ++c) {
    out << "  { rank=same;";
    for (std::size_t p = 0; p < net.n_positions; ++p) out << ' ' << node(p, c) << ';';
    out << " }\n";
  }
  for (std::size_t p = 0; p < net.n_positions; ++p) {
    out << "  " << node(p, 0) << " [shape=plaintext, label=\"" << p << "\"];\n";
    out << "  " << node(p, cols - 1) << " [shape=plaintext, label=\"" << p << "\"];\n";
  }
  for (std::size_t p = 0; p < net.n_positions; ++p) {
    for (std::size_t c = 0; c + 1 < cols; ++c) {
      out << "  " << node(p, c) << " -- " << node(p, c + 1) << ";\n";
    }
  }
  for (std::size_t r = 0; r < net.rounds.size(); ++r) {
    SwapRound sorted = net.rounds[r];
    detail::canonicalize(sorted);
    for (const auto& s : sorted.swaps) {
      out << "  " << node(s.i, r) << " -- " << node(s.j, r)
          << " [class=swap, color=red, constraint=false];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace shuffleworks
