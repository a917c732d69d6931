#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "trirep/represent.hpp"

namespace trirep {
namespace {

BinaryCode example() { return BinaryCode::from_strings({"110", "011"}); }

std::vector<BinaryCode> even_corpus() {
  std::vector<BinaryCode> out;
  for (auto& c : oracle::random_corpus(43, 60)) {
    if (c.is_even()) out.push_back(std::move(c));
  }
  return out;
}

TEST(Sizes, SphereAndExponentTargets) {
  EXPECT_EQ(sphere_size_for(1), 4u);
  EXPECT_EQ(sphere_size_for(4), 4u);
  EXPECT_EQ(sphere_size_for(5), 6u);
  EXPECT_EQ(sphere_size_for(10), 10u);
  EXPECT_EQ(next_even_above(3), 4u);
  EXPECT_EQ(next_even_above(4), 6u);
}

TEST(RepresentBasisVector, WeightOne) {
  const auto g = represent_basis_vector(BitVector::from_string("1"), 4);
  EXPECT_EQ(g.config.triangle_count(), 10u);
  EXPECT_TRUE(is_cycle(g.config, oracle::ones(10)));
  EXPECT_EQ(g.ports.size(), 1u);
}

TEST(RepresentBasisVector, UsesOnlySupportSlots) {
  const auto g = represent_basis_vector(BitVector::from_string("110"), 4);
  EXPECT_EQ(g.config.triangle_count(), 16u);
  EXPECT_TRUE(is_cycle(g.config, oracle::ones(16)));
  EXPECT_EQ(g.ports.size(), 2u);
  EXPECT_TRUE(g.ports.contains("B1"));
  EXPECT_TRUE(g.ports.contains("B2"));
}

TEST(RepresentBasisVector, SizeLaw) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    BitVector b = oracle::random_vector(rng, n);
    if (b.none()) b.set(0);
    const std::size_t m = sphere_size_for(n) + 2 * (rng() % 3);
    const auto g = represent_basis_vector(b, m);
    EXPECT_EQ(g.config.triangle_count() - b.popcount(), m + 5 * b.popcount());
    EXPECT_TRUE(is_cycle(g.config, oracle::ones(g.config.triangle_count())));
    EXPECT_EQ(cycle_space(g.config).size(), 1u);
  }
}

TEST(RepresentBasisVector, Contracts) {
  EXPECT_THROW(represent_basis_vector(BitVector(3), 4), Error);
  EXPECT_THROW(represent_basis_vector(BitVector::from_string("11"), 5), Error);
  EXPECT_THROW(represent_basis_vector(BitVector::from_string("11111"), 4), Error);
}

TEST(RepresentCode, WorkedExample) {
  const auto rep = represent_code(example());
  EXPECT_EQ(rep.sphere_faces, 4u);
  ASSERT_EQ(rep.blocks.size(), 2u);
  EXPECT_EQ(rep.blocks[0].size(), 16u);
  EXPECT_EQ(rep.blocks[1].size(), 16u);
  EXPECT_EQ(cycle_space(rep.config).size(), 2u);
  EXPECT_EQ(rep.config.triangle_count(), 3u + 2 * 14);
}

TEST(RepresentCode, ZeroAndSingleBasisVector) {
  const auto zero = represent_code(BinaryCode::zero(3));
  EXPECT_TRUE(zero.config.empty());
  EXPECT_TRUE(cycle_space(zero.config).empty());

  const auto single = represent_code(BinaryCode::from_strings({"11"}));
  const auto cycles = enumerate_cycles(single.config);
  const std::set<BitVector> got(cycles.begin(), cycles.end());
  EXPECT_EQ(got, (std::set<BitVector>{BitVector(single.config.triangle_count()), single.block_indicator(0)}));
  EXPECT_EQ(single.blocks[0].size(), single.config.triangle_count());
}

TEST(RepresentCode, RejectsOddCodes) { EXPECT_THROW(represent_code(BinaryCode::from_strings({"111"})), Error); }

TEST(Balance, AlreadyBalanced) {
  const auto rep = represent_code(example());
  const auto bal = balance(rep);
  EXPECT_EQ(*bal.exponent, 14u);
  EXPECT_EQ(bal.config, rep.config);
}

TEST(Balance, SubdividesShortBlocks) {
  const auto code = BinaryCode::from_strings({"1100", "0110", "1111"});
  const auto rep = represent_code(code);
  EXPECT_EQ(rep.excess(0), 14u);
  EXPECT_EQ(rep.excess(1), 14u);
  EXPECT_EQ(rep.excess(2), 24u);
  const auto bal = balance(rep);
  EXPECT_EQ(*bal.exponent, 24u);
  EXPECT_EQ(bal.blocks[0].size(), rep.blocks[0].size() + 10);
  EXPECT_EQ(bal.blocks[1].size(), rep.blocks[1].size() + 10);
  EXPECT_EQ(bal.blocks[2], rep.blocks[2]);
  EXPECT_EQ(bal.config.triangle_count(), rep.config.triangle_count() + 20);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(bal.excess(i), 24u);
  EXPECT_EQ(cycle_space(bal.config).size(), 3u);
}

TEST(Balance, RejectsMixedParity) {
  auto rep = represent_code(BinaryCode::from_strings({"1100", "0011"}));
  rep.code = BinaryCode::from_strings({"1000", "0011"});
  EXPECT_THROW(balance(rep), Error);
}

TEST(Balance, ExponentBoundedLinearly) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    const auto code = oracle::random_code(rng, n, rng() % std::min<std::size_t>(n, 4), true);
    const auto bal = balance(represent_code(code));
    EXPECT_GT(*bal.exponent, n);
    EXPECT_LE(*bal.exponent, 6 * n + 2);
    EXPECT_EQ(*bal.exponent % 2, 0u);
  }
}

TEST(MapF, Examples) {
  const auto bal = balance(represent_code(example()));
  EXPECT_TRUE(map_f(bal, BitVector(3)).none());
  EXPECT_EQ(map_f(bal, BitVector::from_string("110")), bal.block_indicator(0));
  const auto f = map_f(bal, BitVector::from_string("101"));
  EXPECT_EQ(f, bal.block_indicator(0) ^ bal.block_indicator(1));
  EXPECT_EQ(f.popcount(), 2 + 2 * *bal.exponent);
  EXPECT_EQ(kernel_degree(bal, f), 2u);
  EXPECT_THROW(map_f(bal, BitVector::from_string("100")), Error);
}

TEST(MapF, WeightLaw) {
  for (const auto& code : even_corpus()) {
    const auto bal = balance(represent_code(code));
    const std::size_t e = *bal.exponent;
    for (const auto& c : code.enumerate_codewords()) {
      EXPECT_EQ(map_f(bal, c).popcount(), c.popcount() + code.degree(c) * e) << code.to_text();
    }
  }
}

TEST(Bijection, WorkedExample) {
  const auto report = verify_bijection(balance(represent_code(example())));
  EXPECT_TRUE(report.ok()) << report.counterexample;
}

TEST(Bijection, RandomEvenCodesAndEnumeratorViaImages) {
  for (const auto& code : even_corpus()) {
    const auto bal = balance(represent_code(code));
    const auto report = verify_bijection(bal);
    EXPECT_TRUE(report.ok()) << report.counterexample << '\n' << code.to_text();
    WeightEnumerator via_images;
    for (const auto& c : code.enumerate_codewords()) via_images.add_term(map_f(bal, c).popcount());
    EXPECT_EQ(via_images, weight_enumerator_cycles(bal.config));
  }
}

TEST(Bijection, DetectsBrokenRepresentation) {
  auto bal = balance(represent_code(example()));
  bal.blocks[1] = bal.blocks[0];
  EXPECT_FALSE(verify_bijection(bal).ok());
}

TEST(Recover, WorkedExample) {
  const WeightEnumerator ker{{0, 1}, {16, 2}, {30, 1}};
  const auto rec = recover_weight_enumerator(ker, 14, 3, 2);
  EXPECT_EQ(rec.folded, (WeightEnumerator{{0, 1}, {2, 3}}));
  ASSERT_EQ(rec.degree_blocks.size(), 3u);
  EXPECT_EQ(rec.degree_blocks[0], (WeightEnumerator{{0, 1}}));
  EXPECT_EQ(rec.degree_blocks[1], (WeightEnumerator{{16, 2}}));
  EXPECT_EQ(rec.degree_blocks[2], (WeightEnumerator{{30, 1}}));
  EXPECT_EQ(recover_weight_enumerator(WeightEnumerator{{0, 1}}, 9, 3, 0).folded, (WeightEnumerator{{0, 1}}));
  EXPECT_THROW(recover_weight_enumerator(ker, 3, 3, 2), Error);
  EXPECT_THROW(recover_weight_enumerator(WeightEnumerator{{10, 1}}, 14, 3, 2), Error);
}

TEST(Recover, DegreeBlocksAreShiftedExtendedEnumerators) {
  for (const auto& code : even_corpus()) {
    const auto bal = balance(represent_code(code));
    const std::size_t e = *bal.exponent, n = code.length(), d = code.dimension();
    const auto rec = recover_weight_enumerator(weight_enumerator_cycles(bal.config), e, n, d);
    std::vector<WeightAndDegree> items;
    for (const auto& c : code.enumerate_codewords()) items.push_back({c.popcount(), code.degree(c)});
    const auto extended = split_by_degree(items, d);
    for (std::size_t k = 0; k <= d; ++k) {
      EXPECT_EQ(rec.degree_blocks[k], extended[k].shifted(k * e));
      if (k > 0 && !rec.degree_blocks[k].empty() && !rec.degree_blocks[k - 1].empty()) {
        EXPECT_LT(rec.degree_blocks[k - 1].max_exponent(), rec.degree_blocks[k].terms().begin()->first);
      }
    }
  }
}

TEST(Pipeline, Examples) {
  EXPECT_EQ(pipeline(example()).weight_enumerator, (WeightEnumerator{{0, 1}, {2, 3}}));
  EXPECT_EQ(pipeline(example()).kernel_enumerator, (WeightEnumerator{{0, 1}, {16, 2}, {30, 1}}));
  const auto odd = pipeline(BinaryCode::from_strings({"1"}));
  EXPECT_TRUE(odd.doubled);
  EXPECT_EQ(odd.weight_enumerator, (WeightEnumerator{{0, 1}, {1, 1}}));
  EXPECT_EQ(pipeline(BinaryCode::zero(4)).weight_enumerator, (WeightEnumerator{{0, 1}}));
}

TEST(Pipeline, MatchesDirectEnumeration) {
  for (const auto& code : oracle::random_corpus(59, 40)) {
    EXPECT_EQ(pipeline(code).weight_enumerator, code.weight_enumerator()) << code.to_text();
  }
}

TEST(Meta, WorkedExample) {
  const auto bal = balance(represent_code(example()));
  std::ostringstream os;
  write_meta(os, bal, false);
  const std::string text = os.str();
  EXPECT_EQ(text.rfind("n 3\nd 2\nm 4\ne 14\ndoubled 0\nslot 0 0\nslot 1 1\nslot 2 2\nblock 0 ", 0), 0u) << text;
}

}  // namespace
}  // namespace trirep
