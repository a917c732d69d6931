#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "trirep/code.hpp"

namespace trirep {
namespace {

BinaryCode example() { return BinaryCode::from_strings({"110", "011"}); }

std::set<std::string> word_strings(const BinaryCode& c) {
  std::set<std::string> out;
  for (const auto& w : c.enumerate_codewords()) out.insert(w.to_string());
  return out;
}

TEST(BinaryCode, EnumerateCodewords) {
  EXPECT_EQ(word_strings(BinaryCode::zero(4)), (std::set<std::string>{"0000"}));
  EXPECT_EQ(word_strings(example()), (std::set<std::string>{"000", "110", "011", "101"}));
}

TEST(BinaryCode, EnumerationMatchesSpanOracle) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto code = oracle::random_code(rng, n, rng() % (std::min<std::size_t>(n, 6) + 1), false);
    const auto words = code.enumerate_codewords();
    const std::set<BitVector> distinct(words.begin(), words.end());
    EXPECT_EQ(words.size(), std::size_t{1} << code.dimension());
    EXPECT_EQ(distinct.size(), words.size());
    std::set<BitVector> expected;
    for (const auto& e : oracle::span_with_degrees(code.basis(), n)) expected.insert(e.word);
    EXPECT_EQ(distinct, expected);
  }
}

TEST(BinaryCode, WeightEnumerator) {
  EXPECT_EQ(BinaryCode::zero(5).weight_enumerator(), (WeightEnumerator{{0, 1}}));
  EXPECT_EQ(example().weight_enumerator(), (WeightEnumerator{{0, 1}, {2, 3}}));
  EXPECT_EQ(BinaryCode::from_strings({"111"}).weight_enumerator(), (WeightEnumerator{{0, 1}, {3, 1}}));
}

TEST(BinaryCode, EnumerationGuard) {
  std::vector<BitVector> basis;
  for (std::size_t i = 0; i < 21; ++i) basis.push_back(BitVector::unit(21, i));
  const BinaryCode big(21, basis);
  try {
    big.weight_enumerator();
    FAIL() << "guard not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::size_guard);
  }
  EXPECT_EQ(big.weight_enumerator(21).total(), std::uint64_t{1} << 21);
}

TEST(BinaryCode, Degree) {
  const auto c = example();
  EXPECT_EQ(c.degree(BitVector(3)), 0u);
  EXPECT_EQ(c.degree(BitVector::from_string("110")), 1u);
  EXPECT_EQ(c.degree(BitVector::from_string("011")), 1u);
  EXPECT_EQ(c.degree(BitVector::from_string("101")), 2u);
  try {
    c.degree(BitVector::from_string("100"));
    FAIL() << "membership not checked";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::membership);
  }
}

TEST(BinaryCode, DegreeMatchesSpanOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const auto code = oracle::random_code(rng, n, 1 + rng() % std::min<std::size_t>(n, 5), false);
    for (const auto& e : oracle::span_with_degrees(code.basis(), n)) EXPECT_EQ(code.degree(e.word), e.degree);
  }
}

TEST(BinaryCode, Minimality) {
  const auto c = example();
  for (const char* w : {"110", "011", "101"}) EXPECT_TRUE(c.is_minimal(BitVector::from_string(w)));
  const auto d = BinaryCode::from_strings({"100", "110"});
  EXPECT_FALSE(d.is_minimal(BitVector::from_string("110")));
  EXPECT_TRUE(d.is_minimal(BitVector::from_string("100")));
  EXPECT_TRUE(d.is_minimal(BitVector::from_string("010")));
  EXPECT_TRUE(d.is_minimal(BitVector(3)));
  EXPECT_THROW(c.is_minimal(BitVector::from_string("100")), Error);
}

TEST(BinaryCode, MinimalityMatchesPairwiseOracle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const auto code = oracle::random_code(rng, n, 1 + rng() % std::min<std::size_t>(n, 5), false);
    std::vector<BitVector> words;
    for (const auto& e : oracle::span_with_degrees(code.basis(), n)) words.push_back(e.word);
    for (const auto& w : words) EXPECT_EQ(code.is_minimal(w), oracle::is_minimal_by_pairs(words, w));
  }
}

TEST(BinaryCode, Puncture) {
  EXPECT_EQ(example().puncture({}), example());
  const auto rep = BinaryCode::from_strings({"11"}).puncture({1});
  EXPECT_EQ(rep.length(), 1u);
  EXPECT_EQ(rep.dimension(), 1u);
  EXPECT_EQ(word_strings(rep), (std::set<std::string>{"0", "1"}));
  const auto p = example().puncture({0});
  EXPECT_EQ(p.dimension(), 2u);
  EXPECT_EQ(word_strings(p), (std::set<std::string>{"00", "10", "11", "01"}));
  EXPECT_EQ(BinaryCode::from_strings({"101"}).puncture({0, 2}).dimension(), 0u);
  EXPECT_THROW(example().puncture({3}), Error);
}

TEST(BinaryCode, DoubledAndEven) {
  const auto d = BinaryCode::from_strings({"1"}).doubled();
  EXPECT_EQ(word_strings(d), (std::set<std::string>{"00", "11"}));
  EXPECT_EQ(example().doubled().weight_enumerator(), (WeightEnumerator{{0, 1}, {4, 3}}));
  EXPECT_TRUE(BinaryCode::zero(3).is_even());
  EXPECT_FALSE(BinaryCode::from_strings({"111"}).is_even());
  EXPECT_TRUE(example().is_even());
}

TEST(BinaryCode, DoublingDoublesEveryWeight) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const auto code = oracle::random_code(rng, n, rng() % (std::min<std::size_t>(n, 5) + 1), false);
    EXPECT_TRUE(code.doubled().is_even());
    EXPECT_EQ(code.doubled().weight_enumerator(), code.weight_enumerator().double_exponents());
  }
}

TEST(BinaryCode, RejectsDependentBasis) {
  EXPECT_THROW(BinaryCode::from_strings({"110", "110"}), Error);
  EXPECT_THROW(BinaryCode::from_strings({"000"}), Error);
  EXPECT_THROW(BinaryCode(3, {BitVector::from_string("11")}), Error);
}

TEST(BinaryCode, FileFormat) {
  std::istringstream in("# example\n3 2\n110\n011  # second\n");
  const auto c = BinaryCode::parse(in);
  EXPECT_EQ(c, example());
  std::istringstream again(c.to_text());
  EXPECT_EQ(BinaryCode::parse(again), c);
  std::istringstream zero("4 0\n");
  EXPECT_EQ(BinaryCode::parse(zero), BinaryCode::zero(4));

  for (const char* bad : {"", "3\n110\n", "3 2\n110\n", "3 1\n11\n", "3 1\n1a0\n", "3 2\n110\n110\n", "0 0\n"}) {
    std::istringstream is(bad);
    try {
      BinaryCode::parse(is);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::format) << bad;
    }
  }
}

}  // namespace
}  // namespace trirep
