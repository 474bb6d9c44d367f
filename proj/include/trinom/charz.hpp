#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trinom/codes.hpp"
#include "trinom/gf.hpp"

namespace trinom::charz {

inline constexpr std::uint32_t kDefaultScanCap = 16;

struct ConditionReport {
  std::uint64_t q = 0;
  std::int64_t e1 = 0, e2 = 0;
  std::uint64_t gcd1 = 0;  // gcd(q-1, 2e1 - e2)
  std::uint64_t gcd2 = 0;  // gcd(q+1, e2)
  bool qualifies = false;
};

/// gcds are taken after reducing the second argument, with gcd(m, 0) = m.
ConditionReport check_conditions(std::uint64_t q, std::int64_t e1, std::int64_t e2);

/// Qualifying codes, one canonical representative each, sorted by canonical key.
std::vector<codes::CodeSpec> enumerate_qualifying(const gf::FieldCtx& ctx);

/// phi(q^2 - 1)(q - 1)/2.
std::uint64_t count_formula(std::uint64_t q);

struct ScanRecord {
  /// Coset minima of the factors of h(x): three size-1 cosets, or a size-1
  /// coset followed by a size-2 coset.
  std::vector<std::uint32_t> cosets;
  /// (e1, e2) for the degree 1 x degree 2 shape.
  std::optional<codes::CodeSpec> spec;
  std::uint32_t dimension = 3;
  codes::WeightDist weights;
  bool matches_table1 = false;
  bool qualifies_thm1 = false;
};

/// Every dimension-3 cyclic code of length q^2 - 1 with its exact weight distribution.
std::vector<ScanRecord> scan_all_dimension3(const gf::FieldCtx& ctx, std::uint32_t scan_cap = kDefaultScanCap);

/// matches_table1 <=> qualifies_thm1 on every record, and the number of
/// matches equals count_formula(q).
bool theorem5_holds(const std::vector<ScanRecord>& records, std::uint64_t q);
bool verify_theorem5(const gf::FieldCtx& ctx, std::uint32_t scan_cap = kDefaultScanCap);

struct Rational {
  std::int64_t num = 0, den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Sum of base-p digits of x.
std::uint64_t digit_sum(const codes::BigInt& x, std::uint32_t p);

/// (1/(p-1)) min{ S_p(j (p^f - 1)/u) : 1 <= j < u }, reduced.
Rational theta(std::uint64_t u, std::uint32_t p, std::uint64_t f);

struct TwoWeightReport {
  std::uint32_t q = 0;
  std::int64_t e = 0;
  std::uint64_t u = 0, f = 0, s = 0;
  Rational theta;
  std::optional<std::uint64_t> r;
  int epsilon = 0;
  std::optional<codes::WeightDist> predicted;
  bool is_two_weight = false;
  std::string diagnostic;
};

/// Two-weight test for the irreducible code with parity-check polynomial h_e.
/// Requires |coset(e)| = 2.
TwoWeightReport schmidt_white_test(const gf::FieldCtx& ctx, std::int64_t e);

}  // namespace trinom::charz
