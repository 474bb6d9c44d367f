#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "trinom/gf.hpp"

namespace trinom::sums {

/// Exact element of Z[zeta_p] in the basis 1, zeta, ..., zeta^(p-2).
class CycInt {
 public:
  explicit CycInt(std::uint32_t p) : p_(p), coeffs_(p - 1, 0) {}

  /// Sum of counts[j] * zeta^j for j in [0, p).
  static CycInt from_exponent_counts(std::uint32_t p, const std::vector<std::int64_t>& counts);
  static CycInt integer(std::uint32_t p, std::int64_t m);
  static CycInt zeta_power(std::uint32_t p, std::uint64_t j);

  std::uint32_t p() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  bool is_integer() const;
  /// The rational integer value, or nullopt when the element is not in Z.
  std::optional<std::int64_t> to_integer() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt operator-() const;
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend bool operator==(const CycInt&, const CycInt&) = default;

 private:
  std::uint32_t p_;
  std::vector<std::int64_t> coeffs_;
};

enum class Tower { Top, Base };

enum class SumCase { BothZero, TraceNonzeroBZero, TraceZeroBNonzero, BothNonzero };

std::string_view to_string(SumCase c);

/// zeta_p^(absolute trace of x). For Tower::Base, x must lie in GF(q).
CycInt additive_char(const gf::FieldCtx& ctx, gf::Fe x, Tower tower);

/// S(a, b) = sum over x in GF(q^2)^* of chi'(a x^((q+1)e1) + b x^e2).
CycInt eval_S(const gf::FieldCtx& ctx, std::int64_t e1, std::int64_t e2, gf::Fe a, gf::Fe b);

/// #{ 0 <= i < q^2-1 : Tr(a gamma^((q+1)e1 i) + b gamma^(e2 i)) = 0 }.
std::uint64_t count_zero_entries(const gf::FieldCtx& ctx, std::int64_t e1, std::int64_t e2, gf::Fe a, gf::Fe b);

/// T(a, b) = sum over y in GF(q)^* of S(ya, yb), computed as q Z(a,b) - (q^2 - 1).
std::int64_t eval_T(const gf::FieldCtx& ctx, std::int64_t e1, std::int64_t e2, gf::Fe a, gf::Fe b);

/// T(a, b) summed in Z[zeta_p]; throws NonIntegerSum if the total is not rational.
std::int64_t eval_T_by_characters(const gf::FieldCtx& ctx, std::int64_t e1, std::int64_t e2, gf::Fe a, gf::Fe b);

SumCase classify_case(const gf::FieldCtx& ctx, gf::Fe a, gf::Fe b);

/// Right-hand side of the reduction of S(a, b) to a double sum over GF(q)^*:
/// -sum_z sum_x chi(z + (a^q + a) x^e1 + z^-1 b^(q+1) x^e2).
CycInt lemma2_rhs(const gf::FieldCtx& ctx, std::int64_t e1, std::int64_t e2, gf::Fe a, gf::Fe b);

/// Evaluates both sides independently and compares them exactly.
/// Requires Tr(a) != 0, b != 0 and gcd(q+1, e2) = 1.
bool verify_lemma2_identity(const gf::FieldCtx& ctx, std::int64_t e1, std::int64_t e2, gf::Fe a, gf::Fe b);

/// Quadratic character of GF(q)^* from the parity of the discrete log base delta.
int quadratic_character(const gf::FieldCtx& ctx, gf::Fe u);

/// #{ x in GF(q)^* \ {rho} : eta(x^2 - rho x) = 1 } for odd q and rho in GF(q)^*.
std::uint64_t remark3_count(const gf::FieldCtx& ctx, gf::Fe rho);

}  // namespace trinom::sums
