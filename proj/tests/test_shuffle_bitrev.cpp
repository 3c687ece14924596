#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "shuffleworks/oracle.hpp"
#include "shuffleworks/shuffle_bitrev.hpp"
#include "test_support.hpp"

namespace sw = shuffleworks;
using sw::testing::iota_vec;
using sw::testing::naive_rev;

namespace {

std::vector<char> chars(const std::string& s) { return {s.begin(), s.end()}; }

std::string strip_spaces(std::string s) {
  std::erase(s, ' ');
  return s;
}

}  // namespace

TEST(ShuffleSpec, DetectsPowers) {
  EXPECT_EQ(sw::ShuffleSpec(27, 3).exponent(), 3u);
  EXPECT_EQ(sw::ShuffleSpec(2, 2).exponent(), 1u);
  EXPECT_FALSE(sw::ShuffleSpec(12, 2).exponent().has_value());
  EXPECT_EQ(sw::ShuffleSpec(12, 2).half(), 6u);
  EXPECT_THROW(sw::ShuffleSpec(13, 2), sw::ArityError);
  EXPECT_THROW(sw::ShuffleSpec(0, 2), sw::ArityError);
  EXPECT_THROW(sw::ShuffleSpec(6, 1), sw::ArityError);
}

TEST(ShuffleSpec, PowerOverflowIsRejected) {
  EXPECT_EQ(sw::ShuffleSpec::power(2, 63).size(), std::size_t{1} << 63);
  EXPECT_THROW(sw::ShuffleSpec::power(2, 64), sw::OverflowError);
  EXPECT_THROW(sw::ShuffleSpec::power(3, 41), sw::OverflowError);
}

TEST(PowerTable, Powers) {
  const sw::PowerTable table(3, 4);
  EXPECT_EQ(table[0], 1u);
  EXPECT_EQ(table[4], 81u);
  for (unsigned t = 0; t < 4; ++t) EXPECT_EQ(table[t + 1], 3 * table[t]);
}

TEST(RevDigits, Examples) {
  const auto bin6 = sw::ShuffleSpec::power(2, 6);
  EXPECT_EQ(sw::rev_digits(44, 3, bin6), 41u);
  for (std::size_t i = 0; i < 64; ++i) EXPECT_EQ(sw::rev_digits(i, 1, bin6), i);
  EXPECT_EQ(sw::rev_digits(5, 2, sw::ShuffleSpec::power(3, 2)), 7u);
}

TEST(RevDigits, RangeErrors) {
  const auto spec = sw::ShuffleSpec::power(2, 4);
  EXPECT_THROW(sw::rev_digits(16, 2, spec), sw::OutOfRange);
  EXPECT_THROW(sw::rev_digits(3, 5, spec), sw::OutOfRange);
  EXPECT_THROW(sw::rev_digits(1, 1, sw::ShuffleSpec(12, 2)), sw::ArityError);
}

TEST(RevDigits, MatchesDigitArrayOracleAndIsInvolution) {
  for (std::size_t k : {2, 3, 4, 5}) {
    for (unsigned n = 1; sw::detail::ipow(k, n) <= 4096; ++n) {
      const auto spec = sw::ShuffleSpec::power(k, n);
      for (unsigned t = 0; t <= n; ++t) {
        for (std::size_t i = 0; i < spec.size(); ++i) {
          const std::size_t r = sw::rev_digits(i, t, spec);
          ASSERT_EQ(r, naive_rev(i, t, k, n));
          ASSERT_EQ(sw::rev_digits(r, t, spec), i);
        }
      }
    }
  }
}

TEST(RevDigits, TwoRoundsGiveTheShuffleMap) {
  for (std::size_t k : {2, 3, 4, 5, 7}) {
    for (unsigned n = 1; sw::detail::ipow(k, n) <= 20000; ++n) {
      const auto spec = sw::ShuffleSpec::power(k, n);
      const std::size_t big = spec.size();
      for (std::size_t i = 0; i + 1 < big; ++i) {
        ASSERT_EQ(sw::rev_digits(sw::rev_digits(i, n - 1, spec), n, spec), (k * i) % (big - 1));
      }
      EXPECT_EQ(sw::rev_digits(sw::rev_digits(big - 1, n - 1, spec), n, spec), big - 1);
    }
  }
}

TEST(RulerIncrement, Examples) {
  sw::KaryCounter bin(2, 3);
  EXPECT_EQ(sw::ruler_increment(bin), 0u);  // 0 -> 1
  sw::ruler_increment(bin);                 // 1 -> 2
  sw::ruler_increment(bin);                 // 2 -> 3
  EXPECT_EQ(sw::ruler_increment(bin), 2u);  // 011 -> 100
  EXPECT_EQ(bin.value(), 4u);

  sw::KaryCounter tern(3, 3);
  for (int s = 0; s < 8; ++s) sw::ruler_increment(tern);
  EXPECT_EQ(tern.value(), 8u);
  EXPECT_EQ(sw::ruler_increment(tern), 2u);  // 022 -> 100
  EXPECT_EQ(tern.digit(2), 1u);
  EXPECT_EQ(tern.digit(0), 0u);
}

TEST(RulerIncrement, OverflowThrows) {
  sw::KaryCounter c(3, 2);
  for (int s = 0; s < 8; ++s) c.increment();
  EXPECT_THROW(c.increment(), sw::OutOfRange);
}

TEST(RulerIncrement, CountsTrailingMaxDigits) {
  for (std::size_t k : {2, 3, 5}) {
    sw::KaryCounter c(k, 5);
    const std::size_t limit = sw::detail::ipow(k, 5) - 1;
    for (std::size_t i = 0; i < limit; ++i) {
      const auto d = sw::testing::digits_of(i, k, 5);
      unsigned expected = 0;
      while (expected < 5 && d[expected] == k - 1) ++expected;
      ASSERT_EQ(c.increment(), expected);
      ASSERT_EQ(c.value(), i + 1);
    }
  }
}

TEST(RevNext, Examples) {
  const sw::PowerTable bin(2, 6);
  EXPECT_EQ(sw::rev_next(0, 0, 3, bin), 4u);
  EXPECT_EQ(sw::rev_next(13, 0, 6, bin), 45u);
  const sw::PowerTable tern(3, 2);
  EXPECT_EQ(sw::rev_next(6, 1, 2, tern), 1u);
  EXPECT_THROW(sw::rev_next(0, 2, 2, tern), sw::OutOfRange);
}

TEST(RevNext, IncrementalMatchesScratchEverywhere) {
  for (std::size_t k : {2, 3, 4, 6}) {
    for (unsigned n = 1; sw::detail::ipow(k, n) <= 5000; ++n) {
      const auto spec = sw::ShuffleSpec::power(k, n);
      for (unsigned t = 0; t <= n; ++t) {
        // The visited partners must be exactly the i < rev_t(i) pairs.
        std::vector<std::pair<std::size_t, std::size_t>> seen;
        for (auto mode : {sw::RulerMode::kCounter, sw::RulerMode::kHardware}) {
          seen.clear();
          sw::for_each_rev_pair(
              spec, t, [&](std::size_t i, std::size_t j) { seen.emplace_back(i, j); }, mode);
          std::vector<std::pair<std::size_t, std::size_t>> expected;
          for (std::size_t i = 0; i < spec.size(); ++i) {
            const std::size_t j = naive_rev(i, t, k, n);
            if (i < j) expected.emplace_back(i, j);
          }
          ASSERT_EQ(seen, expected) << "k=" << k << " n=" << n << " t=" << t;
        }
      }
    }
  }
}

TEST(RevswapRound, TrivialDigitCounts) {
  auto v = iota_vec(27);
  const auto spec = sw::ShuffleSpec::power(3, 3);
  EXPECT_EQ(sw::revswap_round(std::span(v), 0, spec), 0u);
  EXPECT_EQ(sw::revswap_round(std::span(v), 1, spec), 0u);
  EXPECT_EQ(v, iota_vec(27));
}

TEST(RevswapRound, Examples) {
  auto abcd = chars("abcd");
  EXPECT_EQ(sw::revswap_round(std::span(abcd), 2, sw::ShuffleSpec::power(2, 2)), 1u);
  EXPECT_EQ(abcd, chars("acbd"));

  auto v = iota_vec(27);
  EXPECT_EQ(sw::revswap_round(std::span(v), 3, sw::ShuffleSpec::power(3, 3)), 9u);
}

TEST(RevswapRound, LengthMismatch) {
  auto v = iota_vec(9);
  EXPECT_THROW(sw::revswap_round(std::span(v), 2, sw::ShuffleSpec::power(2, 3)), sw::SizeMismatch);
}

TEST(ShufflePower, Examples) {
  auto two = iota_vec(3);
  sw::shuffle_power(two, 3);
  EXPECT_EQ(two, iota_vec(3));

  auto nine = iota_vec(9);
  sw::shuffle_power(nine, 3);
  EXPECT_EQ(nine, (std::vector<std::size_t>{0, 3, 6, 1, 4, 7, 2, 5, 8}));

  auto sixteen = iota_vec(16);
  sw::shuffle_power(sixteen, 2);
  EXPECT_EQ(sixteen, sw::oracle_shuffle(iota_vec(16), 2));
}

TEST(ShufflePower, RejectsNonPowers) {
  auto v = iota_vec(12);
  EXPECT_THROW(sw::shuffle_power(v, 2), sw::ArityError);
}

TEST(ShufflePower, OracleEquivalenceAndCounts) {
  for (std::size_t k : {2, 3, 4, 5}) {
    for (unsigned n = 1; sw::detail::ipow(k, n) <= 65536; ++n) {
      const auto spec = sw::ShuffleSpec::power(k, n);
      for (auto mode : {sw::RulerMode::kCounter, sw::RulerMode::kAuto}) {
        auto v = iota_vec(spec.size());
        const auto counts = sw::shuffle_power(std::span(v), spec, mode);
        ASSERT_EQ(v, sw::oracle_shuffle(iota_vec(spec.size()), k)) << "k=" << k << " n=" << n;
        ASSERT_EQ(counts, sw::swap_counts(spec));
        EXPECT_LE(counts.total(), spec.size());
      }
    }
  }
}

TEST(SwapCounts, Examples) {
  const auto c33 = sw::swap_counts(sw::ShuffleSpec::power(3, 3));
  EXPECT_EQ(c33.phase1, 9u);
  EXPECT_EQ(c33.phase2, 9u);
  EXPECT_EQ(c33.total(), 18u);

  const auto c24 = sw::swap_counts(sw::ShuffleSpec::power(2, 4));
  EXPECT_EQ(c24.phase1, 4u);
  EXPECT_EQ(c24.phase2, 6u);
  EXPECT_EQ(c24.total(), 16u - 3u * 4u / 2u);

  EXPECT_EQ(sw::swap_counts(sw::ShuffleSpec::power(2, 1)), (sw::PhaseCounts{0, 0}));
}

TEST(SwapCounts, TotalsMatchClosedForms) {
  for (std::size_t k : {2, 3, 4, 5}) {
    for (unsigned n = 1; sw::detail::ipow(k, n) <= (1u << 20); ++n) {
      const auto c = sw::swap_counts(sw::ShuffleSpec::power(k, n));
      const std::size_t kn = sw::detail::ipow(k, n);
      if (n % 2 == 0) {
        EXPECT_EQ(2 * c.total(), 2 * kn - (k + 1) * sw::detail::ipow(k, n / 2));
      } else {
        EXPECT_EQ(c.total(), kn - sw::detail::ipow(k, (n + 1) / 2));
      }
    }
  }
}

TEST(RotationPlan, ThirtyElements) {
  const auto plan = sw::rotation_plan(15);
  EXPECT_EQ(plan.segment_sizes, (std::vector<std::size_t>{8, 4, 2, 1}));
  ASSERT_EQ(plan.rotations.size(), 3u);
  EXPECT_EQ(plan.rotations[0], (sw::Rotation{8, 15, 7}));
  EXPECT_EQ(plan.rotations[1], (sw::Rotation{20, 7, 3}));
  EXPECT_EQ(plan.rotations[2], (sw::Rotation{26, 3, 1}));
  EXPECT_EQ(plan.cost, 3u + 7u + 15u);
  EXPECT_LE(plan.cost, 30u);
}

TEST(RotationPlan, ThirtyElementTrace) {
  std::string s = strip_spaces("ssssssss tttt uu v ssssssss tttt uu v");
  const std::vector<std::string> trace = {
      strip_spaces("ssssssss ssssssss tttt uu v tttt uu v"),
      strip_spaces("ssssssss ssssssss tttt tttt uu v uu v"),
      strip_spaces("ssssssss ssssssss tttt tttt uu uu v v"),
  };
  const auto plan = sw::rotation_plan(15);
  for (std::size_t r = 0; r < plan.rotations.size(); ++r) {
    sw::rotate_with(plan.rotations[r], [&](std::size_t i, std::size_t j) { std::swap(s[i], s[j]); });
    EXPECT_EQ(s, trace[r]) << "after rotation " << r;
  }
}

TEST(RotationPlan, PowerOfTwoAndSixHalves) {
  const auto eight = sw::rotation_plan(8);
  EXPECT_EQ(eight.segment_sizes, (std::vector<std::size_t>{8}));
  ASSERT_EQ(eight.rotations.size(), 1u);
  EXPECT_EQ(eight.rotations[0].shift, 0u);  // nothing to move, still counted
  EXPECT_EQ(eight.cost, 8u);

  const auto six = sw::rotation_plan(6);
  EXPECT_EQ(six.segment_sizes, (std::vector<std::size_t>{4, 2}));
  EXPECT_EQ(six.cost, 6u + 2u);
  EXPECT_EQ(six.blocks, (std::vector<sw::ShuffleBlock>{{0, 8}, {8, 4}}));
}

TEST(RotationPlan, CostFormulaAndBound) {
  for (std::size_t half = 1; half <= 4096; ++half) {
    const auto plan = sw::rotation_plan(half);
    std::size_t formula = 0;
    for (int i = 1; (std::size_t{1} << i) <= half; ++i) {
      if (half >> i & 1) formula += half & ((std::size_t{2} << i) - 1);
    }
    ASSERT_EQ(plan.cost, formula) << "M=" << half;
    ASSERT_LE(plan.cost, 2 * half);
  }
}

TEST(RotateWith, MatchesStdRotate) {
  for (std::size_t len = 0; len < 20; ++len) {
    for (std::size_t shift = 0; shift <= len; ++shift) {
      auto v = iota_vec(len + 3);
      auto expected = v;
      std::rotate(expected.begin() + 2, expected.begin() + 2 + shift, expected.begin() + 2 + len);
      sw::rotate_with({2, len, shift}, [&](std::size_t i, std::size_t j) { std::swap(v[i], v[j]); });
      ASSERT_EQ(v, expected);
    }
  }
}

TEST(ShuffleGeneralK2, Examples) {
  auto deck = chars("abcdef123456");
  sw::shuffle_general_k2(deck);
  EXPECT_EQ(deck, chars("a1b2c3d4e5f6"));

  auto thirty = iota_vec(30);
  const auto stats = sw::shuffle_general_k2(thirty);
  EXPECT_EQ(thirty, sw::oracle_shuffle(iota_vec(30), 2));
  EXPECT_EQ(stats.rotated_elements, 25u);

  auto two = chars("xy");
  sw::shuffle_general_k2(two);
  EXPECT_EQ(two, chars("xy"));
}

TEST(ShuffleGeneralK2, RejectsOddLength) {
  auto v = iota_vec(7);
  EXPECT_THROW(sw::shuffle_general_k2(v), sw::ArityError);
}

TEST(ShuffleGeneralK2, OracleEquivalenceUpTo4096) {
  for (std::size_t n = 2; n <= 4096; n += 2) {
    auto v = iota_vec(n);
    const auto stats = sw::shuffle_general_k2(v);
    ASSERT_EQ(v, sw::oracle_shuffle(iota_vec(n), 2)) << "N=" << n;
    ASSERT_EQ(stats.rotated_elements, sw::rotation_plan(n / 2).cost);
    ASSERT_LE(stats.rotated_elements, n);
  }
}
