#pragma once

#include <algorithm>
#include <stdexcept>

#include "trinom/error.hpp"
#include "trinom/kernels.hpp"

namespace trinom::kernels::detail {

// Index 0 is zero, index j > 0 is gamma^(j-1).
inline gf::Fe element_by_index(std::uint32_t j) { return j == 0 ? gf::Fe::zero() : gf::Fe::from_log(j - 1); }

inline std::uint64_t message_count(const gf::FieldCtx& ctx, unsigned k) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) {
    total *= ctx.q();
    if (total > (std::uint64_t{1} << 40)) throw Error(ErrorKind::CapExceeded, "too many messages to enumerate");
  }
  return total;
}

// Fills traces[i] = Tr(b gamma^(e2 i)) and adds one histogram entry per
// first-summand coefficient c.
inline void accumulate_trace_block(const gf::FieldCtx& ctx, const TraceCode& code, gf::Fe b,
                                   std::vector<gf::Fe>& traces, Histogram& hist) {
  const std::uint64_t n = ctx.n();
  std::uint64_t e = 0;
  std::uint64_t zeros = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    traces[i] = ctx.trace(ctx.mul(b, gf::Fe::from_log(static_cast<std::uint32_t>(e))));
    zeros += traces[i].is_zero() ? 1 : 0;
    e += code.second_exponent;
    if (e >= n) e -= n;
  }
  ++hist[n - zeros];
  if (!code.with_first) return;

  // c delta^(e1 i) + t_i = 0  <=>  t_i = gamma^(log c + g1 i + log(-1))
  const std::uint64_t minus_one = ctx.minus_one().log();
  for (std::uint32_t k = 0; k + 1 < ctx.q(); ++k) {
    std::uint64_t target = (std::uint64_t{k} * ctx.delta_exponent() + minus_one) % n;
    zeros = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      zeros += traces[i].raw() == target ? 1 : 0;
      target += code.first_exponent;
      if (target >= n) target -= n;
    }
    ++hist[n - zeros];
  }
}

// rows[j][i] = coefficient of x^i in x^j g(x) mod (x^n - 1).
inline std::vector<std::vector<gf::Fe>> shifted_rows(const gf::FieldCtx& ctx, const gf::Poly& g, unsigned k) {
  const std::size_t n = ctx.n();
  std::vector<std::vector<gf::Fe>> rows(k, std::vector<gf::Fe>(n, gf::Fe::zero()));
  for (unsigned j = 0; j < k; ++j)
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) rows[j][(i + j) % n] = g.coeffs[i];
  return rows;
}

// Weight of sum_j m_j x^j g(x), where the base-q digits of `m` index the
// GF(q) coefficients m_j.
inline std::uint32_t encode_weight(const gf::FieldCtx& ctx, const std::vector<std::vector<gf::Fe>>& rows,
                                   std::uint64_t m, std::vector<gf::Fe>& coeffs) {
  coeffs.clear();
  for (std::size_t j = 0; j < rows.size(); ++j, m /= ctx.q())
    coeffs.push_back(ctx.subfield_from_index(static_cast<std::uint32_t>(m % ctx.q())));
  const std::size_t n = ctx.n();
  std::uint32_t weight = 0;
  for (std::size_t i = 0; i < n; ++i) {
    gf::Fe s = gf::Fe::zero();
    for (std::size_t j = 0; j < rows.size(); ++j) s = ctx.add(s, ctx.mul(coeffs[j], rows[j][i]));
    weight += s.is_zero() ? 0 : 1;
  }
  return weight;
}

}  // namespace trinom::kernels::detail
