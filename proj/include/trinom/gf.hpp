#pragma once

// Arithmetic in the tower GF(q) ⊂ GF(q^2), q = p^t.
//
// Elements of GF(q^2) are stored by discrete logarithm with respect to a
// fixed primitive element gamma. GF(q) is the subset {0} ∪ <gamma^(q+1)>,
// so no separate subfield construction is needed. Addition uses a Zech
// logarithm table; a coordinate-vector route is kept for cross-checking.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trinom/error.hpp"

namespace trinom::gf {

/// An element of GF(q^2): either zero or gamma^log with log in [0, q^2 - 1).
class Fe {
 public:
  static constexpr std::uint32_t kZeroRaw = 0xFFFFFFFFu;

  constexpr Fe() = default;
  static constexpr Fe zero() { return Fe{}; }
  /// `exponent` must already be reduced modulo q^2 - 1.
  static constexpr Fe from_log(std::uint32_t exponent) { return Fe{exponent}; }

  constexpr bool is_zero() const { return raw_ == kZeroRaw; }
  constexpr std::uint32_t log() const { return raw_; }
  constexpr std::uint32_t raw() const { return raw_; }

  friend constexpr auto operator<=>(Fe, Fe) = default;

 private:
  constexpr explicit Fe(std::uint32_t raw) : raw_(raw) {}
  std::uint32_t raw_ = kZeroRaw;
};

/// Polynomial with coefficients in GF(q^2) (in practice the subfield GF(q)),
/// constant term first, no trailing zeros. The zero polynomial is empty.
struct Poly {
  std::vector<Fe> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  void normalize() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
  friend bool operator==(const Poly&, const Poly&) = default;
};

inline constexpr std::uint64_t kDefaultTableCap = 4096;

class FieldCtx {
 public:
  std::uint32_t p() const { return p_; }
  std::uint32_t t() const { return t_; }
  std::uint32_t q() const { return q_; }
  /// Order of GF(q^2)^*, which is also the code length.
  std::uint32_t n() const { return n_; }
  /// Size of GF(q^2).
  std::uint32_t order() const { return n_ + 1; }
  /// Monic primitive polynomial of degree 2t over GF(p), constant term first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fe gamma() const { return Fe::from_log(1); }
  std::uint32_t delta_exponent() const { return q_ + 1; }
  Fe delta() const { return element(q_ + 1); }
  Fe one() const { return Fe::from_log(0); }
  Fe minus_one() const { return Fe::from_log(p_ == 2 ? 0 : n_ / 2); }

  /// gamma^k for any integer k.
  Fe element(std::int64_t k) const;
  /// delta^k, i.e. the k-th power of the generator of GF(q)^*.
  Fe subfield_element(std::int64_t k) const;
  bool in_subfield(Fe x) const { return x.is_zero() || x.log() % (q_ + 1) == 0; }

  Fe add(Fe x, Fe y) const;
  Fe neg(Fe x) const { return x.is_zero() ? x : mul(x, minus_one()); }
  Fe sub(Fe x, Fe y) const { return add(x, neg(y)); }
  Fe mul(Fe x, Fe y) const;
  Fe inv(Fe x) const;
  Fe div(Fe x, Fe y) const { return mul(x, inv(y)); }
  Fe pow(Fe x, std::int64_t k) const;

  /// Addition through polynomial-basis coordinates instead of Zech logs.
  Fe add_by_coordinates(Fe x, Fe y) const;
  /// Coordinate vector of x packed base p (digit i = coefficient of X^i).
  std::uint32_t coordinates(Fe x) const { return x.is_zero() ? 0 : antilog_[x.log()]; }
  Fe from_coordinates(std::uint32_t code) const;

  /// x^q + x.
  Fe trace(Fe x) const { return add(pow(x, q_), x); }
  /// x^(q+1).
  Fe norm(Fe x) const { return pow(x, static_cast<std::int64_t>(q_) + 1); }
  /// Tr_{GF(q^2)/GF(p)}(x) as an integer in [0, p).
  std::uint32_t absolute_trace(Fe x) const { return x.is_zero() ? 0 : abs_trace_[x.log()]; }
  /// Tr_{GF(q)/GF(p)}(x) as an integer in [0, p); x must lie in GF(q).
  std::uint32_t subfield_absolute_trace(Fe x) const;

  /// Tr(x) == 0 without materializing the trace.
  bool trace_is_zero(Fe x) const {
    return x.is_zero() ||
           (static_cast<std::uint64_t>(x.log()) * (q_ - 1) + (n_ - minus_one().log())) % n_ == 0;
  }

  /// Index of a GF(q) element in [0, q): 0 for zero, k + 1 for delta^k.
  std::uint32_t subfield_index(Fe x) const;
  Fe subfield_from_index(std::uint32_t i) const { return i == 0 ? Fe::zero() : subfield_element(i - 1); }

  /// {a * q^j mod n}, ascending.
  std::vector<std::uint32_t> cyclotomic_coset(std::int64_t a) const;
  std::uint32_t coset_min(std::int64_t a) const { return cyclotomic_coset(a).front(); }
  /// All distinct cyclotomic cosets, ordered by their minimum.
  std::vector<std::vector<std::uint32_t>> all_cosets() const;

  /// Monic minimal polynomial over GF(q) of gamma^(-a).
  Poly minimal_polynomial(std::int64_t a) const;
  /// x^n - 1.
  Poly xn_minus_1() const;

 private:
  friend FieldCtx build_field(std::uint32_t, std::uint32_t,
                              std::optional<std::vector<std::uint32_t>>, std::uint64_t);
  FieldCtx() = default;
  std::uint32_t add_codes(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_ = 0, t_ = 0, q_ = 0, n_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> antilog_;   // exponent -> coordinate code
  std::vector<std::uint32_t> log_;       // coordinate code -> exponent (kZeroRaw at 0)
  std::vector<std::uint32_t> zech_;      // i -> log(1 + gamma^i)
  std::vector<std::uint8_t> abs_trace_;  // exponent -> absolute trace
  std::vector<std::uint8_t> sub_trace_;  // k -> Tr_{GF(q)/GF(p)}(delta^k)
};

/// Builds GF(p^t) ⊂ GF(p^(2t)). Without an override the modulus is the
/// lexicographically least (constant coefficient most significant) monic
/// primitive polynomial of degree 2t over GF(p).
FieldCtx build_field(std::uint32_t p, std::uint32_t t,
                     std::optional<std::vector<std::uint32_t>> override_modulus = std::nullopt,
                     std::uint64_t table_cap = kDefaultTableCap);

/// Same as build_field for q = p^t; throws InvalidArgument if q is not a prime power.
FieldCtx build_field_for_q(std::uint64_t q,
                           std::optional<std::vector<std::uint32_t>> override_modulus = std::nullopt,
                           std::uint64_t table_cap = kDefaultTableCap);

/// True iff `f` (constant first, monic) is primitive over GF(p).
bool is_primitive_polynomial(std::uint32_t p, std::span<const std::uint32_t> f);

Poly poly_mul(const FieldCtx& ctx, const Poly& a, const Poly& b);
/// Returns (quotient, remainder); `divisor` must be nonzero.
std::pair<Poly, Poly> poly_divmod(const FieldCtx& ctx, const Poly& dividend, const Poly& divisor);
Fe poly_eval(const FieldCtx& ctx, const Poly& f, Fe x);
/// (x^n - 1) / h; throws NotADivisor if the remainder is nonzero.
Poly poly_divide_xn_minus_1(const FieldCtx& ctx, const Poly& h);

}  // namespace trinom::gf
