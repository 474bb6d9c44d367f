#include "trinom/codes.hpp"

#include <algorithm>
#include <string>

#include "trinom/charz.hpp"
#include "trinom/numtheory.hpp"

namespace trinom::codes {

using gf::Fe;
using gf::FieldCtx;
using gf::Poly;

namespace {

void require_same_field(const FieldCtx& ctx, std::uint32_t q) {
  if (ctx.q() != q)
    throw Error(ErrorKind::InvalidArgument,
                "code over GF(" + std::to_string(q) + ") used with GF(" + std::to_string(ctx.q()) + ")");
}

BigInt big_pow(std::uint64_t base, std::uint32_t exp) {
  BigInt r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// C(m, 0..m)
std::vector<BigInt> binomial_row(std::uint32_t m) {
  std::vector<BigInt> row(m + 1);
  row[0] = 1;
  for (std::uint32_t s = 1; s <= m; ++s) row[s] = row[s - 1] * (m - s + 1) / s;
  return row;
}

BigInt binomial(std::uint32_t m, std::uint32_t s) {
  if (s > m) return 0;
  return binomial_row(m)[s];
}

Poly message_polynomial(const FieldCtx& ctx, std::uint64_t m, unsigned k) {
  Poly msg;
  for (unsigned j = 0; j < k; ++j, m /= ctx.q())
    msg.coeffs.push_back(ctx.subfield_from_index(static_cast<std::uint32_t>(m % ctx.q())));
  msg.normalize();
  return msg;
}

kernels::TraceCode trace_code(const FieldCtx& ctx, const CodeSpec& spec) {
  return {nt::mod(spec.e1, ctx.q() - 1) * ctx.delta_exponent() % ctx.n(), nt::mod(spec.e2, ctx.n()), true};
}

}  // namespace

CanonicalKey CodeSpec::canonical_key(const FieldCtx& ctx) const {
  require_same_field(ctx, q);
  return {static_cast<std::uint32_t>(nt::mod(e1, q - 1) * ctx.delta_exponent() % ctx.n()), ctx.coset_min(e2)};
}

CodeSpec CodeSpec::canonical(const FieldCtx& ctx) const {
  require_same_field(ctx, q);
  return {q, static_cast<std::int64_t>(nt::mod(e1, q - 1)), static_cast<std::int64_t>(ctx.coset_min(e2))};
}

WeightDist::WeightDist(std::uint32_t n, std::uint32_t k, std::vector<WeightEntry> entries) : n_(n), k_(k) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; });
  for (auto& e : entries) {
    if (e.weight > n) throw Error(ErrorKind::InconsistentInput, "weight exceeds length");
    if (e.frequency < 0) throw Error(ErrorKind::InconsistentInput, "negative frequency");
    if (e.frequency == 0) continue;
    if (!entries_.empty() && entries_.back().weight == e.weight)
      entries_.back().frequency += e.frequency;
    else
      entries_.push_back(std::move(e));
  }
}

WeightDist WeightDist::from_histogram(std::uint32_t n, std::uint32_t k, const kernels::Histogram& hist) {
  std::vector<WeightEntry> entries;
  for (std::uint32_t w = 0; w < hist.size(); ++w)
    if (hist[w] != 0) entries.push_back({w, BigInt(hist[w])});
  return WeightDist(n, k, std::move(entries));
}

BigInt WeightDist::frequency(std::uint32_t weight) const {
  for (const auto& e : entries_)
    if (e.weight == weight) return e.frequency;
  return 0;
}

BigInt WeightDist::total() const {
  BigInt sum = 0;
  for (const auto& e : entries_) sum += e.frequency;
  return sum;
}

std::size_t WeightDist::nonzero_weight_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return e.weight != 0; }));
}

std::uint32_t WeightDist::min_distance() const {
  for (const auto& e : entries_)
    if (e.weight != 0) return e.weight;
  return 0;
}

std::uint32_t Codeword::weight() const {
  return static_cast<std::uint32_t>(
      std::count_if(symbols.begin(), symbols.end(), [](Fe s) { return !s.is_zero(); }));
}

Poly parity_check_polynomial(const FieldCtx& ctx, const CodeSpec& spec) {
  require_same_field(ctx, spec.q);
  return gf::poly_mul(ctx, ctx.minimal_polynomial(static_cast<std::int64_t>(ctx.delta_exponent()) * spec.e1),
                      ctx.minimal_polynomial(spec.e2));
}

Codeword trace_codeword(const FieldCtx& ctx, const CodeSpec& spec, Fe c, Fe b) {
  require_same_field(ctx, spec.q);
  if (!ctx.in_subfield(c)) throw Error(ErrorKind::NotInSubfield, "first coefficient must lie in GF(q)");
  Codeword word;
  word.symbols.reserve(ctx.n());
  const Fe step1 = ctx.pow(ctx.delta(), spec.e1);
  const Fe step2 = ctx.element(spec.e2);
  Fe x1 = c, x2 = b;
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    word.symbols.push_back(ctx.add(x1, ctx.trace(x2)));
    x1 = ctx.mul(x1, step1);
    x2 = ctx.mul(x2, step2);
  }
  return word;
}

Codeword generator_encode(const FieldCtx& ctx, const Poly& h, const Poly& message) {
  const Poly g = gf::poly_divide_xn_minus_1(ctx, h);
  Poly m = message;
  m.normalize();
  if (m.degree() >= h.degree()) throw Error(ErrorKind::InvalidArgument, "message degree must be below deg h");
  const Poly product = gf::poly_mul(ctx, m, g);
  Codeword word;
  word.symbols.assign(ctx.n(), Fe::zero());
  std::copy(product.coeffs.begin(), product.coeffs.end(), word.symbols.begin());
  return word;
}

bool is_codeword(const FieldCtx& ctx, const Poly& h, const Codeword& word) {
  const std::size_t n = ctx.n();
  if (word.symbols.size() != n) return false;
  std::vector<Fe> acc(n, Fe::zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (word.symbols[i].is_zero()) continue;
    for (std::size_t j = 0; j < h.coeffs.size(); ++j)
      acc[(i + j) % n] = ctx.add(acc[(i + j) % n], ctx.mul(word.symbols[i], h.coeffs[j]));
  }
  return std::all_of(acc.begin(), acc.end(), [](Fe s) { return s.is_zero(); });
}

std::vector<Codeword> trace_codewords(const FieldCtx& ctx, const CodeSpec& spec) {
  std::vector<Codeword> words;
  for (std::uint32_t ci = 0; ci < ctx.q(); ++ci) {
    const Fe c = ctx.subfield_from_index(ci);
    words.push_back(trace_codeword(ctx, spec, c, Fe::zero()));
    for (std::uint32_t e = 0; e < ctx.n(); ++e) words.push_back(trace_codeword(ctx, spec, c, Fe::from_log(e)));
  }
  std::sort(words.begin(), words.end());
  return words;
}

std::vector<Codeword> generator_codewords(const FieldCtx& ctx, const Poly& h) {
  const auto k = static_cast<unsigned>(h.degree());
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= ctx.q();
  std::vector<Codeword> words;
  words.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) words.push_back(generator_encode(ctx, h, message_polynomial(ctx, m, k)));
  std::sort(words.begin(), words.end());
  return words;
}

WeightDist weight_distribution(const FieldCtx& ctx, const CodeSpec& spec, Exec exec) {
  require_same_field(ctx, spec.q);
  if (ctx.cyclotomic_coset(spec.e2).size() != 2)
    throw Error(ErrorKind::DimensionNotThree, "h_e2 has degree 1 for e2 = " + std::to_string(spec.e2));
  const auto code = trace_code(ctx, spec);
  const auto hist =
      exec == Exec::Serial ? kernels::trace_weights_serial(ctx, code) : kernels::trace_weights_parallel(ctx, code);
  return WeightDist::from_histogram(ctx.n(), 3, hist);
}

WeightDist weight_distribution_by_generator(const FieldCtx& ctx, const Poly& h, Exec exec) {
  const Poly g = gf::poly_divide_xn_minus_1(ctx, h);
  const auto k = static_cast<unsigned>(h.degree());
  const auto hist = exec == Exec::Serial ? kernels::generator_weights_serial(ctx, g, k)
                                         : kernels::generator_weights_parallel(ctx, g, k);
  return WeightDist::from_histogram(ctx.n(), k, hist);
}

WeightDist weight_distribution_of_parity_check(const FieldCtx& ctx, const Poly& h, Exec exec) {
  Poly hn = h;
  hn.normalize();
  if (hn.degree() != 3) throw Error(ErrorKind::WrongDegree, "parity-check polynomial must have degree 3");
  return weight_distribution_by_generator(ctx, hn, exec);
}

WeightDist weight_distribution_irreducible(const FieldCtx& ctx, std::int64_t e, Exec exec) {
  const auto dim = static_cast<std::uint32_t>(ctx.cyclotomic_coset(e).size());
  const kernels::TraceCode code{0, nt::mod(e, ctx.n()), false};
  auto hist =
      exec == Exec::Serial ? kernels::trace_weights_serial(ctx, code) : kernels::trace_weights_parallel(ctx, code);
  // b -> (Tr(b gamma^(e i)))_i is q^(2 - dim) to one.
  const std::uint64_t multiplicity = dim == 2 ? 1 : ctx.q();
  for (auto& f : hist) f /= multiplicity;
  return WeightDist::from_histogram(ctx.n(), dim, hist);
}

WeightDist table1_distribution(std::uint32_t q) {
  const std::uint64_t qq = q;
  return WeightDist(static_cast<std::uint32_t>(qq * qq - 1), 3,
                    {{0, 1},
                     {static_cast<std::uint32_t>(qq * (qq - 1) - 1), BigInt((qq - 1) * (qq * qq - 1))},
                     {static_cast<std::uint32_t>(qq * (qq - 1)), BigInt(qq * qq - 1)},
                     {static_cast<std::uint32_t>(qq * qq - 1), BigInt(qq - 1)}});
}

WeightDist macwilliams_dual(const WeightDist& wd, std::uint32_t q, std::uint32_t n, std::uint32_t k) {
  if (wd.n() != n) throw Error(ErrorKind::InconsistentInput, "distribution length does not match n");
  if (k > n) throw Error(ErrorKind::InconsistentInput, "dimension exceeds length");
  const BigInt size = big_pow(q, k);
  if (wd.total() != size) throw Error(ErrorKind::InconsistentInput, "frequencies do not sum to q^k");

  std::vector<BigInt> q1_pow(n + 1);
  q1_pow[0] = 1;
  for (std::uint32_t j = 1; j <= n; ++j) q1_pow[j] = q1_pow[j - 1] * (q - 1);

  std::vector<BigInt> dual(n + 1, 0);
  for (const auto& entry : wd.entries()) {
    const std::uint32_t i = entry.weight;
    const auto row_i = binomial_row(i);
    const auto row_rest = binomial_row(n - i);
    for (std::uint32_t j = 0; j <= n; ++j) {
      // Krawtchouk K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i,s) C(n-i,j-s)
      BigInt kraw = 0;
      const std::uint32_t s_lo = j > n - i ? j - (n - i) : 0;
      const std::uint32_t s_hi = std::min(i, j);
      for (std::uint32_t s = s_lo; s <= s_hi; ++s) {
        BigInt term = q1_pow[j - s] * row_i[s] * row_rest[j - s];
        if (s % 2) kraw -= term;
        else kraw += term;
      }
      dual[j] += entry.frequency * kraw;
    }
  }
  std::vector<WeightEntry> entries;
  for (std::uint32_t j = 0; j <= n; ++j) {
    if (dual[j] % size != 0) throw Error(ErrorKind::InconsistentInput, "MacWilliams transform is not integral");
    BigInt b = dual[j] / size;
    if (b < 0) throw Error(ErrorKind::InconsistentInput, "MacWilliams transform is negative");
    if (b != 0) entries.push_back({j, std::move(b)});
  }
  return WeightDist(n, n - k, std::move(entries));
}

bool pless_moment_check(const WeightDist& wd, const std::vector<BigInt>& dual_prefix, std::uint32_t q,
                        std::uint32_t n, std::uint32_t k) {
  if (dual_prefix.size() != 3) throw Error(ErrorKind::InvalidArgument, "expected B_1, B_2, B_3");
  const std::vector<BigInt> dual{1, dual_prefix[0], dual_prefix[1], dual_prefix[2]};
  // sum_i C(n-i, v) A_i = q^(k-v) sum_{j<=v} C(n-j, v-j) B_j, scaled by q^v.
  for (std::uint32_t v = 0; v <= std::min<std::uint32_t>(3, n); ++v) {
    BigInt lhs = 0, rhs = 0;
    for (const auto& e : wd.entries()) lhs += binomial(n - e.weight, v) * e.frequency;
    for (std::uint32_t j = 0; j <= v; ++j) rhs += binomial(n - j, v - j) * dual[j];
    if (lhs * big_pow(q, v) != rhs * big_pow(q, k)) return false;
  }
  return true;
}

std::uint64_t griesmer_sum(std::uint64_t q, std::uint32_t k, std::uint64_t d) {
  std::uint64_t sum = 0, power = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (power >= d) return sum + (k - i);  // every remaining term is 1
    sum += (d + power - 1) / power;
    power *= q;
  }
  return sum;
}

bool is_griesmer_optimal(std::uint64_t q, std::uint32_t k, std::uint64_t d, std::uint64_t n) {
  return n == griesmer_sum(q, k, d);
}

DualParameters dual_parameters(const FieldCtx& ctx, const CodeSpec& spec) {
  require_same_field(ctx, spec.q);
  if (spec.q == 2) throw Error(ErrorKind::QTooSmall, "the dual has minimum distance 3 only for q > 2");
  if (!charz::check_conditions(spec.q, spec.e1, spec.e2).qualifies)
    throw Error(ErrorKind::ConditionsNotMet, "gcd conditions fail");
  const auto wd = weight_distribution(ctx, spec);
  const auto dual = macwilliams_dual(wd, ctx.q(), ctx.n(), 3);
  return {ctx.n(), ctx.n() - 3, dual.min_distance()};
}

}  // namespace trinom::codes
