#include "trinom/sums.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "trinom/numtheory.hpp"

namespace trinom::sums {

using gf::Fe;
using gf::FieldCtx;

CycInt CycInt::from_exponent_counts(std::uint32_t p, const std::vector<std::int64_t>& counts) {
  CycInt out(p);
  // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
  const std::int64_t last = counts[p - 1];
  for (std::uint32_t j = 0; j + 1 < p; ++j) out.coeffs_[j] = counts[j] - last;
  return out;
}

CycInt CycInt::integer(std::uint32_t p, std::int64_t m) {
  CycInt out(p);
  out.coeffs_[0] = m;
  return out;
}

CycInt CycInt::zeta_power(std::uint32_t p, std::uint64_t j) {
  std::vector<std::int64_t> counts(p, 0);
  counts[j % p] = 1;
  return from_exponent_counts(p, counts);
}

bool CycInt::is_integer() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](auto c) { return c == 0; });
}

std::optional<std::int64_t> CycInt::to_integer() const {
  if (!is_integer()) return std::nullopt;
  return coeffs_[0];
}

CycInt& CycInt::operator+=(const CycInt& o) {
  if (o.p_ != p_) throw Error(ErrorKind::InvalidArgument, "mixing cyclotomic rings");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  if (o.p_ != p_) throw Error(ErrorKind::InvalidArgument, "mixing cyclotomic rings");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string_view to_string(SumCase c) {
  switch (c) {
    case SumCase::BothZero: return "BothZero";
    case SumCase::TraceNonzeroBZero: return "TraceNonzeroBZero";
    case SumCase::TraceZeroBNonzero: return "TraceZeroBNonzero";
    case SumCase::BothNonzero: return "BothNonzero";
  }
  return "Unknown";
}

CycInt additive_char(const FieldCtx& ctx, Fe x, Tower tower) {
  const std::uint32_t tr = tower == Tower::Top ? ctx.absolute_trace(x) : ctx.subfield_absolute_trace(x);
  return CycInt::zeta_power(ctx.p(), tr);
}

namespace {

struct Exponents {
  std::uint64_t first;   // (q+1) e1 mod n
  std::uint64_t second;  // e2 mod n
};

Exponents reduce(const FieldCtx& ctx, std::int64_t e1, std::int64_t e2) {
  return {nt::mod(e1, ctx.q() - 1) * ctx.delta_exponent() % ctx.n(), nt::mod(e2, ctx.n())};
}

// Calls visit(w) for w = a gamma^(g1 i) + b gamma^(g2 i), i = 0..n-1.
template <typename Visit>
void for_each_entry(const FieldCtx& ctx, Exponents ex, Fe a, Fe b, Visit&& visit) {
  const std::uint64_t n = ctx.n();
  std::uint64_t ea = 0, eb = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Fe w = ctx.add(ctx.mul(a, Fe::from_log(static_cast<std::uint32_t>(ea))),
                         ctx.mul(b, Fe::from_log(static_cast<std::uint32_t>(eb))));
    visit(w);
    ea += ex.first;
    if (ea >= n) ea -= n;
    eb += ex.second;
    if (eb >= n) eb -= n;
  }
}

}  // namespace

CycInt eval_S(const FieldCtx& ctx, std::int64_t e1, std::int64_t e2, Fe a, Fe b) {
  std::vector<std::int64_t> counts(ctx.p(), 0);
  for_each_entry(ctx, reduce(ctx, e1, e2), a, b, [&](Fe w) { ++counts[ctx.absolute_trace(w)]; });
  return CycInt::from_exponent_counts(ctx.p(), counts);
}

std::uint64_t count_zero_entries(const FieldCtx& ctx, std::int64_t e1, std::int64_t e2, Fe a, Fe b) {
  std::uint64_t zeros = 0;
  for_each_entry(ctx, reduce(ctx, e1, e2), a, b, [&](Fe w) { zeros += ctx.trace_is_zero(w) ? 1 : 0; });
  return zeros;
}

std::int64_t eval_T(const FieldCtx& ctx, std::int64_t e1, std::int64_t e2, Fe a, Fe b) {
  const auto z = static_cast<std::int64_t>(count_zero_entries(ctx, e1, e2, a, b));
  return static_cast<std::int64_t>(ctx.q()) * z - static_cast<std::int64_t>(ctx.n());
}

std::int64_t eval_T_by_characters(const FieldCtx& ctx, std::int64_t e1, std::int64_t e2, Fe a, Fe b) {
  CycInt total(ctx.p());
  for (std::uint32_t k = 0; k + 1 < ctx.q(); ++k) {
    const Fe y = ctx.subfield_element(k);
    total += eval_S(ctx, e1, e2, ctx.mul(y, a), ctx.mul(y, b));
  }
  auto value = total.to_integer();
  if (!value) throw Error(ErrorKind::NonIntegerSum, "T summed to a non-rational cyclotomic integer");
  return *value;
}

SumCase classify_case(const FieldCtx& ctx, Fe a, Fe b) {
  const bool trace_zero = ctx.trace_is_zero(a);
  if (b.is_zero()) return trace_zero ? SumCase::BothZero : SumCase::TraceNonzeroBZero;
  return trace_zero ? SumCase::TraceZeroBNonzero : SumCase::BothNonzero;
}

CycInt lemma2_rhs(const FieldCtx& ctx, std::int64_t e1, std::int64_t e2, Fe a, Fe b) {
  const Fe ta = ctx.trace(a);
  const Fe nb = ctx.norm(b);
  std::vector<std::int64_t> counts(ctx.p(), 0);
  for (std::uint32_t kz = 0; kz + 1 < ctx.q(); ++kz) {
    const Fe z = ctx.subfield_element(kz);
    const Fe scaled_nb = ctx.mul(ctx.inv(z), nb);
    for (std::uint32_t kx = 0; kx + 1 < ctx.q(); ++kx) {
      const Fe x = ctx.subfield_element(kx);
      const Fe arg = ctx.add(z, ctx.add(ctx.mul(ta, ctx.pow(x, e1)), ctx.mul(scaled_nb, ctx.pow(x, e2))));
      ++counts[ctx.subfield_absolute_trace(arg)];
    }
  }
  return -CycInt::from_exponent_counts(ctx.p(), counts);
}

bool verify_lemma2_identity(const FieldCtx& ctx, std::int64_t e1, std::int64_t e2, Fe a, Fe b) {
  if (ctx.trace_is_zero(a)) throw Error(ErrorKind::PreconditionViolated, "Tr(a) must be nonzero");
  if (b.is_zero()) throw Error(ErrorKind::PreconditionViolated, "b must be nonzero");
  if (std::gcd<std::uint64_t, std::uint64_t>(ctx.q() + 1, nt::mod(e2, ctx.q() + 1)) != 1)
    throw Error(ErrorKind::PreconditionViolated, "gcd(q+1, e2) must be 1");
  return eval_S(ctx, e1, e2, a, b) == lemma2_rhs(ctx, e1, e2, a, b);
}

int quadratic_character(const FieldCtx& ctx, Fe u) {
  if (ctx.p() == 2) throw Error(ErrorKind::EvenCharacteristic, "quadratic character needs odd q");
  if (u.is_zero()) throw Error(ErrorKind::DivisionByZero, "quadratic character of zero");
  const std::uint32_t k = ctx.subfield_index(u) - 1;
  return k % 2 == 0 ? 1 : -1;
}

std::uint64_t remark3_count(const FieldCtx& ctx, Fe rho) {
  if (ctx.p() == 2) throw Error(ErrorKind::EvenCharacteristic, "q must be odd");
  if (rho.is_zero()) throw Error(ErrorKind::ZeroRho, "rho must be nonzero");
  if (!ctx.in_subfield(rho)) throw Error(ErrorKind::NotInSubfield, "rho must lie in GF(q)");
  std::uint64_t count = 0;
  for (std::uint32_t k = 0; k + 1 < ctx.q(); ++k) {
    const Fe x = ctx.subfield_element(k);
    if (x == rho) continue;
    const Fe u = ctx.sub(ctx.mul(x, x), ctx.mul(rho, x));
    if (quadratic_character(ctx, u) == 1) ++count;
  }
  return count;
}

}  // namespace trinom::sums
