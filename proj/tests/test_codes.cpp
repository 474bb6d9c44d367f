#include <doctest.h>

#include <algorithm>
#include <map>

#include "test_support.hpp"
#include "trinom/charz.hpp"
#include "trinom/codes.hpp"
#include "trinom/sums.hpp"

using namespace trinom;
using codes::BigInt;
using codes::CodeSpec;
using codes::WeightDist;
using gf::Fe;
using gf::Poly;

namespace {

WeightDist dist(std::uint32_t n, std::uint32_t k, std::initializer_list<std::pair<std::uint32_t, long long>> items) {
  std::vector<codes::WeightEntry> entries;
  for (auto [w, f] : items) entries.push_back({w, BigInt(f)});
  return WeightDist(n, k, entries);
}

// Distribution counted straight from trace_codeword, no kernel involved.
WeightDist brute_distribution(const gf::FieldCtx& ctx, const CodeSpec& spec) {
  std::map<std::uint32_t, long long> counts;
  for (std::uint32_t ci = 0; ci < ctx.q(); ++ci)
    for (std::uint32_t bi = 0; bi < ctx.order(); ++bi)
      ++counts[codes::trace_codeword(ctx, spec, ctx.subfield_from_index(ci), test::element_by_index(bi)).weight()];
  std::vector<codes::WeightEntry> entries;
  for (auto [w, f] : counts) entries.push_back({w, BigInt(f)});
  return WeightDist(ctx.n(), 3, entries);
}

codes::Codeword rotate(const codes::Codeword& w) {
  codes::Codeword r = w;
  std::rotate(r.symbols.rbegin(), r.symbols.rbegin() + 1, r.symbols.rend());
  return r;
}

// Dual distribution by exhaustive search over GF(3)^8 against a spanning set of the code.
WeightDist brute_dual_q3(const gf::FieldCtx& ctx, const std::vector<codes::Codeword>& code) {
  const std::uint32_t n = ctx.n();
  std::map<std::uint32_t, long long> counts;
  std::vector<std::uint32_t> digits(n, 0);
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t v = 0; v < total; ++v) {
    std::uint64_t rest = v;
    std::uint32_t weight = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      digits[i] = static_cast<std::uint32_t>(rest % 3);
      rest /= 3;
      weight += digits[i] != 0;
    }
    bool orthogonal = true;
    for (const auto& word : code) {
      Fe acc = Fe::zero();
      for (std::uint32_t i = 0; i < n; ++i)
        acc = ctx.add(acc, ctx.mul(ctx.subfield_from_index(digits[i]), word.symbols[i]));
      if (!acc.is_zero()) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) ++counts[weight];
  }
  std::vector<codes::WeightEntry> entries;
  for (auto [w, f] : counts) entries.push_back({w, BigInt(f)});
  return WeightDist(n, n - 3, entries);
}

}  // namespace

TEST_CASE("WeightDist normalizes entries") {
  const WeightDist wd(3, 1, {{3, BigInt(1)}, {0, BigInt(1)}, {2, BigInt(0)}});
  CHECK(wd.entries().size() == 2);
  CHECK(wd.entries().front().weight == 0);
  CHECK(wd.total() == 2);
  CHECK(wd.min_distance() == 3);
  CHECK(wd.nonzero_weight_count() == 1);
  CHECK(wd.frequency(2) == 0);
}

TEST_CASE("canonical keys") {
  const auto ctx = gf::build_field(2, 2);
  const CodeSpec a{4, 2, 6}, b{4, 5, 9}, c{4, 2, 7};
  CHECK(a.canonical_key(ctx) == b.canonical_key(ctx));
  CHECK_FALSE(a.canonical_key(ctx) == c.canonical_key(ctx));
  CHECK(b.canonical(ctx) == a);
  CHECK(a.canonical_key(ctx).g1 == 10);
  CHECK(a.canonical_key(ctx).coset_min == 6);
}

TEST_CASE("trace_codeword") {
  const auto ctx = gf::build_field(2, 2);
  const CodeSpec spec{4, 2, 6};
  const auto zero = codes::trace_codeword(ctx, spec, Fe::zero(), Fe::zero());
  CHECK(zero.symbols.size() == 15);
  CHECK(zero.weight() == 0);
  CHECK(codes::trace_codeword(ctx, spec, ctx.one(), Fe::zero()).weight() == 15);
  CHECK(codes::trace_codeword(ctx, spec, Fe::zero(), ctx.gamma()).weight() == 12);
  CHECK(test::error_kind([&] { codes::trace_codeword(ctx, spec, ctx.gamma(), Fe::zero()); }) ==
        ErrorKind::NotInSubfield);
  for (Fe s : codes::trace_codeword(ctx, spec, ctx.one(), ctx.element(4)).symbols) CHECK(ctx.in_subfield(s));
}

TEST_CASE("generator_encode") {
  const auto c2 = gf::build_field(2, 1);
  const Poly h = c2.minimal_polynomial(0);
  CHECK(codes::generator_encode(c2, h, Poly{}).weight() == 0);
  const auto words = codes::generator_codewords(c2, h);
  REQUIRE(words.size() == 2);
  CHECK(words[0].weight() + words[1].weight() == 3);
  CHECK(std::min(words[0].weight(), words[1].weight()) == 0);

  const auto c4 = gf::build_field(2, 2);
  const Poly h4 = gf::poly_mul(c4, c4.minimal_polynomial(10), c4.minimal_polynomial(6));
  const auto gen = codes::generator_codewords(c4, h4);
  CHECK(gen.size() == 64);
  CHECK(gen == codes::trace_codewords(c4, CodeSpec{4, 2, 6}));

  const Poly bad = gf::poly_mul(c2, h, h);
  CHECK(test::error_kind([&] { codes::generator_encode(c2, bad, Poly{{c2.one()}}); }) == ErrorKind::NotADivisor);
}

TEST_CASE("weight_distribution examples") {
  const auto c4 = gf::build_field(2, 2);
  CHECK(codes::weight_distribution(c4, {4, 2, 6}) == dist(15, 3, {{0, 1}, {11, 45}, {12, 15}, {15, 3}}));
  const auto c2 = gf::build_field(2, 1);
  CHECK(codes::weight_distribution(c2, {2, 0, 1}) == dist(3, 3, {{0, 1}, {1, 3}, {2, 3}, {3, 1}}));
  const auto c5 = gf::build_field(5, 1);
  const auto wd5 = codes::weight_distribution(c5, {5, 0, 1});
  CHECK(wd5 == dist(24, 3, {{0, 1}, {19, 96}, {20, 24}, {24, 4}}));
  CHECK(wd5 == brute_distribution(c5, {5, 0, 1}));
  CHECK(wd5.total() == 125);
  CHECK(codes::weight_distribution(c4, {4, 2, 6}, codes::Exec::Serial) ==
        codes::weight_distribution(c4, {4, 2, 6}, codes::Exec::Parallel));
  CHECK(test::error_kind([&] { codes::weight_distribution(c4, {4, 2, 5}); }) == ErrorKind::DimensionNotThree);
}

TEST_CASE("qualifying codes have the closed-form three-weight distribution") {
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    CAPTURE(q);
    const auto ctx = gf::build_field_for_q(q);
    const auto table = codes::table1_distribution(static_cast<std::uint32_t>(q));
    CHECK(table.total() == BigInt(q * q * q));
    for (const auto& spec : charz::enumerate_qualifying(ctx)) {
      const auto wd = codes::weight_distribution(ctx, spec);
      CHECK(wd == table);
      CHECK(codes::is_griesmer_optimal(q, 3, q * (q - 1) - 1, q * q - 1));
    }
    const auto specs = charz::enumerate_qualifying(ctx);
    CHECK(brute_distribution(ctx, specs.front()) == table);
  }
}

TEST_CASE("weight_distribution_of_parity_check") {
  const auto c4 = gf::build_field(2, 2);
  const Poly h = gf::poly_mul(c4, c4.minimal_polynomial(10), c4.minimal_polynomial(6));
  CHECK(codes::weight_distribution_of_parity_check(c4, h) ==
        dist(15, 3, {{0, 1}, {11, 45}, {12, 15}, {15, 3}}));

  const Poly three_singletons =
      gf::poly_mul(c4, gf::poly_mul(c4, c4.minimal_polynomial(0), c4.minimal_polynomial(5)), c4.minimal_polynomial(10));
  const auto wd = codes::weight_distribution_of_parity_check(c4, three_singletons);
  CHECK(wd.total() == 64);
  CHECK(wd.frequency(15) >= 9);

  const auto c2 = gf::build_field(2, 1);
  const Poly h0 = c2.minimal_polynomial(0);
  const Poly cube = gf::poly_mul(c2, gf::poly_mul(c2, h0, h0), h0);
  CHECK(test::error_kind([&] { codes::weight_distribution_of_parity_check(c2, cube); }) == ErrorKind::NotADivisor);
  CHECK(test::error_kind([&] { codes::weight_distribution_of_parity_check(c4, c4.minimal_polynomial(6)); }) ==
        ErrorKind::WrongDegree);
}

TEST_CASE("irreducible codes") {
  const auto ctx = gf::build_field(2, 2);
  // size-2 coset of a qualifying e2 gives a one-weight code
  CHECK(codes::weight_distribution_irreducible(ctx, 6) == dist(15, 2, {{0, 1}, {12, 15}}));
  // size-1 coset: the repetition-like code of weight q^2 - 1
  CHECK(codes::weight_distribution_irreducible(ctx, 10) == dist(15, 1, {{0, 1}, {15, 3}}));
}

TEST_CASE("encoder equivalence and cyclic closure") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) {
    CAPTURE(q);
    const auto ctx = gf::build_field_for_q(q);
    const auto specs = charz::enumerate_qualifying(ctx);
    for (std::size_t s = 0; s < specs.size(); ++s) {
      if (q >= 7 && s % 4 != 0) continue;
      const auto h = codes::parity_check_polynomial(ctx, specs[s]);
      const auto trace_words = codes::trace_codewords(ctx, specs[s]);
      CHECK(trace_words == codes::generator_codewords(ctx, h));
      if (s == 0)
        for (std::size_t w = 0; w < trace_words.size(); w += 5) {
          CHECK(codes::is_codeword(ctx, h, rotate(trace_words[w])));
          CHECK(std::binary_search(trace_words.begin(), trace_words.end(), rotate(trace_words[w])));
        }
    }
  }
}

TEST_CASE("weight equals n minus the zero count") {
  for (std::uint64_t q : {3, 4, 5}) {
    const auto ctx = gf::build_field_for_q(q);
    for (const auto& spec : charz::enumerate_qualifying(ctx)) {
      for (std::uint32_t ci = 0; ci < q; ++ci) {
        const Fe c = ctx.subfield_from_index(ci);
        const Fe a = test::preimage_of_trace(ctx, c);
        for (std::uint32_t bi = 0; bi < ctx.order(); bi += 3) {
          const Fe b = test::element_by_index(bi);
          CHECK(codes::trace_codeword(ctx, spec, c, b).weight() ==
                ctx.n() - sums::count_zero_entries(ctx, spec.e1, spec.e2, a, b));
        }
      }
    }
  }
}

TEST_CASE("MacWilliams transform") {
  const auto ex1 = dist(15, 3, {{0, 1}, {11, 45}, {12, 15}, {15, 3}});
  const auto dual = codes::macwilliams_dual(ex1, 4, 15, 3);
  CHECK(dual.frequency(0) == 1);
  CHECK(dual.frequency(1) == 0);
  CHECK(dual.frequency(2) == 0);
  CHECK(dual.frequency(3) == 195);
  CHECK(dual.total() == BigInt(1) << 24);
  CHECK(codes::macwilliams_dual(dual, 4, 15, 12) == ex1);

  CHECK(codes::macwilliams_dual(dist(3, 3, {{0, 1}, {1, 3}, {2, 3}, {3, 1}}), 2, 3, 3) == dist(3, 0, {{0, 1}}));
  CHECK(test::error_kind([&] { codes::macwilliams_dual(dist(15, 3, {{0, 1}, {11, 45}}), 4, 15, 3); }) ==
        ErrorKind::InconsistentInput);

  const auto c3 = gf::build_field(3, 1);
  for (const auto& spec : charz::enumerate_qualifying(c3)) {
    const auto wd = codes::weight_distribution(c3, spec);
    const auto d3 = codes::macwilliams_dual(wd, 3, 8, 3);
    CHECK(d3.frequency(3) == 16);
    CHECK(codes::macwilliams_dual(d3, 3, 8, 5) == wd);
  }
}

TEST_CASE("MacWilliams against an exhaustive dual at q = 3") {
  const auto ctx = gf::build_field(3, 1);
  const CodeSpec spec{3, 0, 1};
  const auto words = codes::trace_codewords(ctx, spec);
  const auto wd = codes::weight_distribution(ctx, spec);
  CHECK(brute_dual_q3(ctx, words) == codes::macwilliams_dual(wd, 3, 8, 3));
}

TEST_CASE("MacWilliams is an involution on larger distributions") {
  for (std::uint64_t q : {5, 7, 8, 9}) {
    const auto table = codes::table1_distribution(static_cast<std::uint32_t>(q));
    const auto n = static_cast<std::uint32_t>(q * q - 1);
    const auto dual = codes::macwilliams_dual(table, static_cast<std::uint32_t>(q), n, 3);
    CHECK(dual.frequency(1) == 0);
    CHECK(dual.frequency(2) == 0);
    CHECK(dual.frequency(3) == BigInt((q * q - 3) * (q * q - 1) * (q - 2) * (q - 1) / 6));
    CHECK(codes::macwilliams_dual(dual, static_cast<std::uint32_t>(q), n, n - 3) == table);
  }
}

TEST_CASE("Pless moments") {
  const auto ex1 = dist(15, 3, {{0, 1}, {11, 45}, {12, 15}, {15, 3}});
  CHECK(codes::pless_moment_check(ex1, {0, 0, 195}, 4, 15, 3));
  CHECK_FALSE(codes::pless_moment_check(ex1, {0, 0, 196}, 4, 15, 3));
  const auto perturbed = dist(15, 3, {{0, 1}, {11, 46}, {12, 15}, {15, 3}});
  CHECK_FALSE(codes::pless_moment_check(perturbed, {0, 0, 195}, 4, 15, 3));
  const auto t5 = codes::table1_distribution(5);
  const auto d5 = codes::macwilliams_dual(t5, 5, 24, 3);
  CHECK(codes::pless_moment_check(t5, {d5.frequency(1), d5.frequency(2), d5.frequency(3)}, 5, 24, 3));
}

TEST_CASE("Griesmer bound") {
  CHECK(codes::griesmer_sum(4, 3, 11) == 15);
  CHECK(codes::is_griesmer_optimal(4, 3, 11, 15));
  CHECK_FALSE(codes::is_griesmer_optimal(4, 3, 11, 16));
  CHECK(codes::griesmer_sum(2, 1, 1) == 1);
  CHECK(codes::griesmer_sum(5, 3, 19) == 24);
  CHECK(codes::griesmer_sum(3, 4, 10) == 10 + 4 + 2 + 1);
}

TEST_CASE("dual parameters") {
  const auto c4 = gf::build_field(2, 2);
  CHECK(codes::dual_parameters(c4, {4, 2, 6}) == codes::DualParameters{15, 12, 3});
  const auto c3 = gf::build_field(3, 1);
  for (const auto& spec : charz::enumerate_qualifying(c3))
    CHECK(codes::dual_parameters(c3, spec) == codes::DualParameters{8, 5, 3});
  const auto c2 = gf::build_field(2, 1);
  CHECK(test::error_kind([&] { codes::dual_parameters(c2, {2, 0, 1}); }) == ErrorKind::QTooSmall);
  CHECK(test::error_kind([&] { codes::dual_parameters(c4, {4, 0, 3}); }) == ErrorKind::ConditionsNotMet);
}
