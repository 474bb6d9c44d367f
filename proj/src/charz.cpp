#include "trinom/charz.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "trinom/numtheory.hpp"

namespace trinom::charz {

using codes::BigInt;
using codes::CodeSpec;
using codes::WeightDist;
using gf::FieldCtx;

ConditionReport check_conditions(std::uint64_t q, std::int64_t e1, std::int64_t e2) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be at least 2");
  ConditionReport rep;
  rep.q = q;
  rep.e1 = e1;
  rep.e2 = e2;
  rep.gcd1 = std::gcd(q - 1, nt::mod(2 * e1 - e2, q - 1));
  rep.gcd2 = std::gcd(q + 1, nt::mod(e2, q + 1));
  rep.qualifies = rep.gcd1 == 1 && rep.gcd2 == 1;
  return rep;
}

std::vector<CodeSpec> enumerate_qualifying(const FieldCtx& ctx) {
  const std::uint32_t q = ctx.q();
  const auto n = static_cast<std::int64_t>(ctx.n());
  std::map<codes::CanonicalKey, CodeSpec> found;
#pragma omp parallel
  {
    std::map<codes::CanonicalKey, CodeSpec> local;
#pragma omp for schedule(static)
    for (std::int64_t e2 = 0; e2 < n; ++e2) {
      for (std::int64_t e1 = 0; e1 + 1 < q; ++e1) {
        if (!check_conditions(q, e1, e2).qualifies) continue;
        const CodeSpec spec{q, e1, e2};
        local.try_emplace(spec.canonical_key(ctx), spec.canonical(ctx));
      }
    }
#pragma omp critical
    found.insert(local.begin(), local.end());
  }
  std::vector<CodeSpec> out;
  out.reserve(found.size());
  for (auto& [key, spec] : found) out.push_back(spec);
  return out;
}

std::uint64_t count_formula(std::uint64_t q) { return nt::euler_phi(q * q - 1) * (q - 1) / 2; }

std::vector<ScanRecord> scan_all_dimension3(const FieldCtx& ctx, std::uint32_t scan_cap) {
  const std::uint32_t q = ctx.q();
  if (q > scan_cap)
    throw Error(ErrorKind::CapExceeded, "scan needs q <= " + std::to_string(scan_cap));

  std::vector<std::uint32_t> singles, doubles;
  for (const auto& coset : ctx.all_cosets()) (coset.size() == 1 ? singles : doubles).push_back(coset.front());

  std::vector<ScanRecord> records;
  for (std::size_t i = 0; i < singles.size(); ++i)
    for (std::size_t j = i + 1; j < singles.size(); ++j)
      for (std::size_t k = j + 1; k < singles.size(); ++k)
        records.push_back({{singles[i], singles[j], singles[k]}, std::nullopt, 3, {}, false, false});
  for (std::uint32_t s : singles)
    for (std::uint32_t d : doubles) {
      const CodeSpec spec{q, static_cast<std::int64_t>(s / ctx.delta_exponent()), static_cast<std::int64_t>(d)};
      records.push_back({{s, d}, spec, 3, {}, false, check_conditions(q, spec.e1, spec.e2).qualifies});
    }

  const WeightDist table1 = codes::table1_distribution(q);
  const auto count = static_cast<std::int64_t>(records.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    auto& rec = records[static_cast<std::size_t>(idx)];
    gf::Poly h{{ctx.one()}};
    for (std::uint32_t a : rec.cosets) h = gf::poly_mul(ctx, h, ctx.minimal_polynomial(a));
    rec.weights = codes::weight_distribution_of_parity_check(ctx, h, codes::Exec::Serial);
    rec.matches_table1 = rec.weights == table1;
  }
  return records;
}

bool theorem5_holds(const std::vector<ScanRecord>& records, std::uint64_t q) {
  std::uint64_t matches = 0;
  for (const auto& rec : records) {
    if (rec.matches_table1 != rec.qualifies_thm1) return false;
    matches += rec.matches_table1 ? 1 : 0;
  }
  return matches == count_formula(q);
}

bool verify_theorem5(const FieldCtx& ctx, std::uint32_t scan_cap) {
  return theorem5_holds(scan_all_dimension3(ctx, scan_cap), ctx.q());
}

std::uint64_t digit_sum(const BigInt& x, std::uint32_t p) {
  std::uint64_t sum = 0;
  BigInt rest = x;
  while (rest > 0) {
    sum += static_cast<std::uint64_t>(rest % p);
    rest /= p;
  }
  return sum;
}

Rational theta(std::uint64_t u, std::uint32_t p, std::uint64_t f) {
  if (u < 2) throw Error(ErrorKind::InvalidArgument, "theta needs u > 1");
  BigInt pf = 1;
  for (std::uint64_t i = 0; i < f; ++i) pf *= p;
  const BigInt span = pf - 1;
  if (span % u != 0) throw Error(ErrorKind::InvalidArgument, "u does not divide p^f - 1");
  const BigInt step = span / u;
  std::uint64_t best = UINT64_MAX;
  for (std::uint64_t j = 1; j < u; ++j) best = std::min(best, digit_sum(step * j, p));
  const std::uint64_t g = std::gcd(best, std::uint64_t{p - 1});
  return {static_cast<std::int64_t>(best / g), static_cast<std::int64_t>((p - 1) / g)};
}

TwoWeightReport schmidt_white_test(const FieldCtx& ctx, std::int64_t e) {
  if (ctx.cyclotomic_coset(e).size() != 2) throw Error(ErrorKind::WrongDegree, "h_e must have degree 2");
  TwoWeightReport rep;
  const std::uint64_t q = ctx.q(), p = ctx.p();
  rep.q = ctx.q();
  rep.e = e;
  rep.u = std::gcd(q + 1, nt::mod(e, q + 1));
  if (rep.u == 1) {
    rep.diagnostic = "u = 1";
    return rep;
  }
  rep.f = nt::multiplicative_order(p, rep.u);
  const std::uint64_t two_t = 2ull * ctx.t();
  if (two_t % rep.f != 0) throw std::logic_error("ord_u(p) does not divide 2t");
  rep.s = two_t / rep.f;
  rep.theta = theta(rep.u, ctx.p(), rep.f);

  const auto s = static_cast<std::int64_t>(rep.s);
  const auto f = static_cast<std::int64_t>(rep.f);
  const std::int64_t s_theta_num = s * rep.theta.num;
  if (s_theta_num % rep.theta.den != 0) {
    rep.diagnostic = "s*theta is not an integer";
    return rep;
  }
  const std::int64_t s_theta = s_theta_num / rep.theta.den;
  const std::int64_t rest_exp = s * f - 2 * s_theta;  // s(f - 2 theta)
  if (rest_exp < 0) {
    rep.diagnostic = "s(f - 2 theta) is negative";
    return rep;
  }
  const std::uint64_t a = nt::ipow(p, static_cast<unsigned>(s_theta));
  const std::uint64_t rhs = (rep.u - 1) * nt::ipow(p, static_cast<unsigned>(rest_exp));
  const std::uint64_t u = rep.u;
  for (std::uint64_t r : nt::divisors(u - 1)) {
    const std::uint64_t residue = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * a) % u);
    if (residue != 1 && residue != u - 1) continue;
    if (r * (u - r) != rhs) continue;
    rep.r = r;
    // u = 2 makes +1 and -1 congruent; +1 is taken first.
    rep.epsilon = residue == 1 ? 1 : -1;
    break;
  }
  if (!rep.r) {
    rep.diagnostic = "no admissible r";
    return rep;
  }

  const auto qq = static_cast<std::int64_t>(q);
  const auto n = qq * qq - 1;
  const auto r = static_cast<std::int64_t>(*rep.r);
  const auto ui = static_cast<std::int64_t>(u);
  const auto ea = rep.epsilon * static_cast<std::int64_t>(a);
  const std::int64_t w1_num = (qq - 1) * (qq * qq - r * ea);
  const std::int64_t w2_num = (qq - 1) * (qq * qq + (ui - r) * ea);
  if (w1_num % qq != 0 || w2_num % qq != 0 || (n * (ui - r)) % ui != 0 || (n * r) % ui != 0)
    throw std::logic_error("predicted two-weight distribution is not integral");
  rep.predicted = WeightDist(static_cast<std::uint32_t>(n), 2,
                             {{0, 1},
                              {static_cast<std::uint32_t>(w1_num / qq), BigInt(n * (ui - r) / ui)},
                              {static_cast<std::uint32_t>(w2_num / qq), BigInt(n * r / ui)}});
  rep.is_two_weight = true;
  return rep;
}

}  // namespace trinom::charz
