#include "trinom/gf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "trinom/numtheory.hpp"

namespace trinom::gf {

namespace {

using Coeffs = std::vector<std::uint32_t>;

// (a * b) mod f over GF(p); a, b have length deg f, f is monic.
Coeffs mulmod(const Coeffs& a, const Coeffs& b, std::span<const std::uint32_t> f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t k = 2 * d - 1; k >= d; --k) {
    const std::uint64_t top = prod[k];
    if (top == 0) continue;
    prod[k] = 0;
    // X^d = -(f_0 + ... + f_{d-1} X^{d-1})
    for (std::size_t j = 0; j < d; ++j)
      prod[k - d + j] = (prod[k - d + j] + (p - top) * f[j]) % p;
  }
  return Coeffs(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
}

Coeffs x_pow_mod(std::uint64_t e, std::span<const std::uint32_t> f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  Coeffs result(d, 0), base(d, 0);
  result[0] = 1;
  if (d == 1)
    base[0] = (p - f[0]) % p;
  else
    base[1] = 1;
  while (e) {
    if (e & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

bool is_one(const Coeffs& c) {
  return c[0] == 1 && std::all_of(c.begin() + 1, c.end(), [](auto v) { return v == 0; });
}

}  // namespace

bool is_primitive_polynomial(std::uint32_t p, std::span<const std::uint32_t> f) {
  if (f.size() < 2 || f.back() != 1 || f[0] == 0) return false;
  if (std::any_of(f.begin(), f.end(), [p](auto c) { return c >= p; })) return false;
  const std::uint64_t order = nt::ipow(p, static_cast<unsigned>(f.size() - 1)) - 1;
  if (!is_one(x_pow_mod(order, f, p))) return false;
  for (auto [prime, e] : nt::factorize(order))
    if (is_one(x_pow_mod(order / prime, f, p))) return false;
  return true;
}

FieldCtx build_field(std::uint32_t p, std::uint32_t t, std::optional<std::vector<std::uint32_t>> override_modulus,
                     std::uint64_t table_cap) {
  if (!nt::is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (t == 0) throw Error(ErrorKind::InvalidArgument, "extension degree t must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < t; ++i) {
    q *= p;
    if (q > table_cap)
      throw Error(ErrorKind::CapExceeded,
                  "q = " + std::to_string(p) + "^" + std::to_string(t) + " exceeds cap " + std::to_string(table_cap));
  }
  const std::uint32_t d = 2 * t;
  const std::uint64_t field_size = q * q;
  if (field_size - 1 >= Fe::kZeroRaw) throw Error(ErrorKind::CapExceeded, "field too large for 32-bit logs");

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.t_ = t;
  ctx.q_ = static_cast<std::uint32_t>(q);
  ctx.n_ = static_cast<std::uint32_t>(field_size - 1);

  if (override_modulus) {
    auto& f = *override_modulus;
    if (f.size() != d + 1)
      throw Error(ErrorKind::NotPrimitive, "modulus must have degree " + std::to_string(d));
    if (!is_primitive_polynomial(p, f)) throw Error(ErrorKind::NotPrimitive, "override modulus is not primitive");
    ctx.modulus_ = f;
  } else {
    // Candidate index runs with f_0 as the most significant base-p digit.
    Coeffs f(d + 1, 0);
    f[d] = 1;
    const std::uint64_t top_place = field_size / p;
    for (std::uint64_t idx = top_place; idx < field_size; ++idx) {
      std::uint64_t rest = idx;
      for (std::uint32_t j = d; j-- > 0;) {
        f[j] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (is_primitive_polynomial(p, f)) {
        ctx.modulus_ = f;
        break;
      }
    }
    if (ctx.modulus_.empty()) throw std::logic_error("no primitive polynomial found");
  }

  const std::uint32_t n = ctx.n_;
  const auto top_place = static_cast<std::uint32_t>(field_size / p);
  // reduction[c] = coordinates of -c * (f - X^d)
  std::vector<std::uint32_t> reduction(p, 0);
  for (std::uint32_t c = 1; c < p; ++c) {
    std::uint32_t code = 0, place = 1;
    for (std::uint32_t j = 0; j < d; ++j, place *= p)
      code += static_cast<std::uint32_t>((std::uint64_t{p - c} * ctx.modulus_[j]) % p) * place;
    reduction[c] = code;
  }

  ctx.antilog_.assign(n, 0);
  ctx.log_.assign(static_cast<std::size_t>(field_size), Fe::kZeroRaw);
  std::uint32_t code = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (ctx.log_[code] != Fe::kZeroRaw) throw Error(ErrorKind::NotPrimitive, "modulus generates a short cycle");
    ctx.antilog_[i] = code;
    ctx.log_[code] = i;
    const std::uint32_t top = code / top_place;
    code = (code % top_place) * p;
    if (top != 0) code = ctx.add_codes(code, reduction[top]);
  }
  if (code != 1) throw Error(ErrorKind::NotPrimitive, "gamma does not have order q^2 - 1");

  ctx.zech_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) ctx.zech_[i] = ctx.log_[ctx.add_codes(ctx.antilog_[i], 1)];

  // Absolute trace is GF(p)-linear: precompute it on the polynomial basis.
  std::vector<std::uint32_t> basis_trace(d);
  for (std::uint32_t j = 0, place = 1; j < d; ++j, place *= p) {
    const Fe x = ctx.from_coordinates(place);
    Fe acc = Fe::zero();
    std::int64_t frob = 1;
    for (std::uint32_t k = 0; k < d; ++k, frob *= p) acc = ctx.add(acc, ctx.pow(x, frob));
    const std::uint32_t c = ctx.coordinates(acc);
    if (c >= p) throw std::logic_error("absolute trace left the prime field");
    basis_trace[j] = c;
  }
  ctx.abs_trace_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t rest = ctx.antilog_[i], acc = 0;
    for (std::uint32_t j = 0; j < d; ++j) {
      acc += (rest % p) * basis_trace[j];
      rest /= p;
    }
    ctx.abs_trace_[i] = static_cast<std::uint8_t>(acc % p);
  }

  ctx.sub_trace_.resize(ctx.q_ - 1);
  for (std::uint32_t k = 0; k + 1 < ctx.q_; ++k) {
    const Fe x = ctx.subfield_element(k);
    Fe acc = Fe::zero();
    std::int64_t frob = 1;
    for (std::uint32_t j = 0; j < t; ++j, frob *= p) acc = ctx.add(acc, ctx.pow(x, frob));
    const std::uint32_t c = ctx.coordinates(acc);
    if (c >= p) throw std::logic_error("subfield trace left the prime field");
    ctx.sub_trace_[k] = static_cast<std::uint8_t>(c);
  }
  return ctx;
}

FieldCtx build_field_for_q(std::uint64_t q, std::optional<std::vector<std::uint32_t>> override_modulus,
                           std::uint64_t table_cap) {
  auto pt = nt::prime_power(q);
  if (!pt) throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
  return build_field(pt->first, pt->second, std::move(override_modulus), table_cap);
}

std::uint32_t FieldCtx::add_codes(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0, place = 1;
  while (a != 0 || b != 0) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

Fe FieldCtx::element(std::int64_t k) const { return Fe::from_log(static_cast<std::uint32_t>(nt::mod(k, n_))); }

Fe FieldCtx::subfield_element(std::int64_t k) const {
  return Fe::from_log(static_cast<std::uint32_t>(nt::mod(k, q_ - 1) * (q_ + 1)));
}

Fe FieldCtx::add(Fe x, Fe y) const {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  std::uint32_t diff = y.log() >= x.log() ? y.log() - x.log() : y.log() + n_ - x.log();
  const std::uint32_t z = zech_[diff];
  if (z == Fe::kZeroRaw) return Fe::zero();
  const std::uint64_t e = std::uint64_t{x.log()} + z;
  return Fe::from_log(static_cast<std::uint32_t>(e % n_));
}

Fe FieldCtx::mul(Fe x, Fe y) const {
  if (x.is_zero() || y.is_zero()) return Fe::zero();
  return Fe::from_log(static_cast<std::uint32_t>((std::uint64_t{x.log()} + y.log()) % n_));
}

Fe FieldCtx::inv(Fe x) const {
  if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Fe::from_log(x.log() == 0 ? 0 : n_ - x.log());
}

Fe FieldCtx::pow(Fe x, std::int64_t k) const {
  if (x.is_zero()) {
    if (k < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return k == 0 ? one() : Fe::zero();
  }
  const std::uint64_t e = (std::uint64_t{x.log()} * nt::mod(k, n_)) % n_;
  return Fe::from_log(static_cast<std::uint32_t>(e));
}

Fe FieldCtx::add_by_coordinates(Fe x, Fe y) const {
  return from_coordinates(add_codes(coordinates(x), coordinates(y)));
}

Fe FieldCtx::from_coordinates(std::uint32_t code) const {
  if (code >= log_.size()) throw Error(ErrorKind::InvalidArgument, "coordinate code out of range");
  return code == 0 ? Fe::zero() : Fe::from_log(log_[code]);
}

std::uint32_t FieldCtx::subfield_absolute_trace(Fe x) const {
  if (!in_subfield(x)) throw Error(ErrorKind::NotInSubfield, "element is not in GF(q)");
  return x.is_zero() ? 0 : sub_trace_[x.log() / (q_ + 1)];
}

std::uint32_t FieldCtx::subfield_index(Fe x) const {
  if (!in_subfield(x)) throw Error(ErrorKind::NotInSubfield, "element is not in GF(q)");
  return x.is_zero() ? 0 : x.log() / (q_ + 1) + 1;
}

std::vector<std::uint32_t> FieldCtx::cyclotomic_coset(std::int64_t a) const {
  std::vector<std::uint32_t> coset;
  std::uint64_t x = nt::mod(a, n_);
  while (std::find(coset.begin(), coset.end(), x) == coset.end()) {
    coset.push_back(static_cast<std::uint32_t>(x));
    x = x * q_ % n_;
  }
  std::sort(coset.begin(), coset.end());
  return coset;
}

std::vector<std::vector<std::uint32_t>> FieldCtx::all_cosets() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(n_, false);
  for (std::uint32_t a = 0; a < n_; ++a) {
    if (seen[a]) continue;
    auto c = cyclotomic_coset(a);
    for (auto j : c) seen[j] = true;
    out.push_back(std::move(c));
  }
  return out;
}

Poly FieldCtx::minimal_polynomial(std::int64_t a) const {
  Poly h{{one()}};
  for (std::uint32_t j : cyclotomic_coset(a)) {
    const Poly linear{{neg(element(-static_cast<std::int64_t>(j))), one()}};
    h = poly_mul(*this, h, linear);
  }
  for (Fe c : h.coeffs)
    if (!in_subfield(c)) throw std::logic_error("minimal polynomial has a coefficient outside GF(q)");
  return h;
}

Poly FieldCtx::xn_minus_1() const {
  Poly f;
  f.coeffs.assign(n_ + 1, Fe::zero());
  f.coeffs[0] = minus_one();
  f.coeffs[n_] = one();
  return f;
}

Poly poly_mul(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Fe::zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out.coeffs[i + j] = ctx.add(out.coeffs[i + j], ctx.mul(a.coeffs[i], b.coeffs[j]));
  }
  out.normalize();
  return out;
}

std::pair<Poly, Poly> poly_divmod(const FieldCtx& ctx, const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Poly rem = dividend;
  rem.normalize();
  Poly quot;
  const int dd = divisor.degree();
  if (rem.degree() < dd) return {quot, rem};
  quot.coeffs.assign(static_cast<std::size_t>(rem.degree() - dd + 1), Fe::zero());
  const Fe lead_inv = ctx.inv(divisor.coeffs.back());
  for (int k = rem.degree(); k >= dd; --k) {
    const Fe c = ctx.mul(rem.coeffs[static_cast<std::size_t>(k)], lead_inv);
    if (c.is_zero()) continue;
    quot.coeffs[static_cast<std::size_t>(k - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      auto& r = rem.coeffs[static_cast<std::size_t>(k - dd + j)];
      r = ctx.sub(r, ctx.mul(c, divisor.coeffs[static_cast<std::size_t>(j)]));
    }
  }
  quot.normalize();
  rem.normalize();
  return {quot, rem};
}

Fe poly_eval(const FieldCtx& ctx, const Poly& f, Fe x) {
  Fe acc = Fe::zero();
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = ctx.add(ctx.mul(acc, x), *it);
  return acc;
}

Poly poly_divide_xn_minus_1(const FieldCtx& ctx, const Poly& h) {
  Poly hn = h;
  hn.normalize();
  if (hn.is_zero()) throw Error(ErrorKind::NotADivisor, "zero polynomial");
  auto [quot, rem] = poly_divmod(ctx, ctx.xn_minus_1(), hn);
  if (!rem.is_zero()) throw Error(ErrorKind::NotADivisor, "h(x) does not divide x^n - 1");
  return quot;
}

}  // namespace trinom::gf
