#include "lowdisc/analysis.hpp"
#include "lowdisc/generator.hpp"
#include "lowdisc/sequence_io.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace lowdisc;
using lowdisc::testing::Word;

namespace {

CyclicSequence seq(std::string_view digits, std::uint32_t k = 2) {
  return parse_sequence(digits, AlphabetSize(k), SequenceTextFormat::Digits);
}

// Counts inside the witness window reproduce the reported value.
void check_witness(const CyclicSequence& w, const DiscrepancyReport& r) {
  std::vector<std::int64_t> counts(w.alphabet().value(), 0);
  for (std::size_t i = 0; i < r.witness.length; ++i) ++counts[w.at_circular(r.witness.start + i)];
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  CHECK(*hi - *lo == r.value);
  CHECK(counts[r.witness.symbol_max] - counts[r.witness.symbol_min] == r.value);
  CHECK(r.witness.length >= 1);
  CHECK(r.witness.length <= w.size());
  CHECK(r.witness.start < w.size());
}

} // namespace

TEST_CASE("cyclic sequences validate their symbols") {
  CHECK_THROWS_AS(CyclicSequence({0, 2}, AlphabetSize(2)), std::invalid_argument);
  CHECK_THROWS_AS(CyclicSequence({}, AlphabetSize(2)), std::invalid_argument);
  CHECK(CyclicSequence({0, 1, 1}, AlphabetSize(2)).at_circular(4) == 1);
}

TEST_CASE("discrepancy") {
  CHECK(discrepancy(seq("11101000")).value == 3);
  CHECK(discrepancy(seq("000")).value == 3);
  CHECK(lowdisc::testing::brute_discrepancy({0, 1, 0, 1}, 2) == 1);
  CHECK(discrepancy(seq("0101")).value == 1);
  CHECK(discrepancy(seq("0")).value == 1);
  CHECK(discrepancy(seq("0", 5)).value == 1);
}

TEST_CASE("discrepancy witness is the earliest shortest maximizer") {
  const CyclicSequence w = seq("0110");
  // Circularly the maximum 2 is reached by "11" at 1 and "00" at 3;
  // "0110" as a whole is balanced.
  const DiscrepancyReport r = discrepancy(w);
  CHECK(r.value == 2);
  CHECK(r.witness == DiscrepancyWitness{1, 2, 1, 0});
  check_witness(w, r);

  const DiscrepancyReport all_zero = discrepancy(seq("000"));
  CHECK(all_zero.witness == DiscrepancyWitness{0, 3, 0, 1});
}

TEST_CASE("naive discrepancy") {
  CHECK(discrepancy_naive(seq("1100")) == 2);
  CHECK(discrepancy_naive(seq("1111001011010000")) == 4);
  CHECK(discrepancy_naive(seq("0")) == 1);
  std::vector<Symbol> big(kNaiveDiscrepancyLimit + 1, 0);
  CHECK_THROWS_AS(discrepancy_naive(CyclicSequence(big, AlphabetSize(2))), std::invalid_argument);
}

TEST_CASE("fast discrepancy agrees with enumeration") {
  std::mt19937_64 rng(42);
  for (std::uint32_t k = 2; k <= 4; ++k) {
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t len = 1 + rng() % 40;
      const Word w = lowdisc::testing::random_word(rng, k, len);
      const CyclicSequence c(w, AlphabetSize(k));
      const DiscrepancyReport r = discrepancy(c);
      REQUIRE(r.value == lowdisc::testing::brute_discrepancy(w, k));
      REQUIRE(r.value == discrepancy_naive(c));
      check_witness(c, r);
    }
  }
}

TEST_CASE("discrepancy is invariant under rotation and symbol permutation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng() % 3);
    Word w = lowdisc::testing::random_word(rng, k, 1 + rng() % 64);
    const auto base = discrepancy(CyclicSequence(w, AlphabetSize(k))).value;

    std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(rng() % w.size()), w.end());
    CHECK(discrepancy(CyclicSequence(w, AlphabetSize(k))).value == base);

    std::vector<Symbol> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& s : w) s = perm[s];
    CHECK(discrepancy(CyclicSequence(w, AlphabetSize(k))).value == base);
  }
}

TEST_CASE("discrepancy dominates every linear subword") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng() % 3);
    const Word w = lowdisc::testing::random_word(rng, k, 2 + rng() % 30);
    const auto whole = discrepancy(CyclicSequence(w, AlphabetSize(k))).value;
    const std::size_t a = rng() % w.size();
    const std::size_t b = a + 1 + rng() % (w.size() - a);
    const Word sub(w.begin() + static_cast<std::ptrdiff_t>(a),
                   w.begin() + static_cast<std::ptrdiff_t>(b));
    CHECK(whole >= lowdisc::testing::brute_linear_discrepancy(sub, k));
  }
}

TEST_CASE("de Bruijn sequences have discrepancy at least n") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& w : lowdisc::testing::all_de_bruijn(2, n)) {
      CHECK(discrepancy(CyclicSequence(w, AlphabetSize(2))).value >= static_cast<std::int64_t>(n));
    }
  }
  for (const auto& w : lowdisc::testing::all_de_bruijn(3, 2)) {
    CHECK(discrepancy(CyclicSequence(w, AlphabetSize(3))).value >= 2);
  }
}

TEST_CASE("is_de_bruijn") {
  CHECK(is_de_bruijn(seq("1100"), 2));
  CHECK_FALSE(is_de_bruijn(seq("1010"), 2));
  CHECK(is_de_bruijn(seq("112102200", 3), 2));
  CHECK(is_de_bruijn(seq("10"), 1));
  CHECK_THROWS_AS(is_de_bruijn(seq("10"), 0), std::invalid_argument);

  const DeBruijnCheck dup = check_de_bruijn(seq("1010"), 2);
  REQUIRE(dup.duplicate);
  CHECK(dup.duplicate->first == 0);
  CHECK(dup.duplicate->second == 2);

  const DeBruijnCheck len = check_de_bruijn(seq("1100"), 3);
  CHECK_FALSE(len.ok);
  CHECK_FALSE(len.duplicate);
  CHECK(len.reason == "length 4 != 2^3");
}

TEST_CASE("window encoding and sorting report the same duplicate") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng() % 3);
    const std::size_t n = 1 + rng() % 3;
    const std::size_t len = checked_power(AlphabetSize(k), n);
    const CyclicSequence w(lowdisc::testing::random_word(rng, k, len), AlphabetSize(k));
    const auto a = detail::first_duplicate_by_encoding(w, n);
    const auto b = detail::first_duplicate_by_sorting(w, n);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
      CHECK(a->first == b->first);
      CHECK(a->second == b->second);
    }
  }
  for (const auto& w : lowdisc::testing::all_de_bruijn(3, 2)) {
    const CyclicSequence c(w, AlphabetSize(3));
    CHECK_FALSE(detail::first_duplicate_by_sorting(c, 2).has_value());
    CHECK(is_de_bruijn(c, 2));
  }
}
