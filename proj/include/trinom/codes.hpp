#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trinom/gf.hpp"
#include "trinom/kernels.hpp"

namespace trinom::codes {

using BigInt = boost::multiprecision::cpp_int;

enum class Exec { Serial, Parallel };

struct CanonicalKey {
  std::uint32_t g1 = 0;         // (q+1) e1 mod n
  std::uint32_t coset_min = 0;  // least element of the coset of e2
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// The cyclic code C_((q+1)e1, e2) with parity-check polynomial h_((q+1)e1) h_e2.
struct CodeSpec {
  std::uint32_t q = 0;
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;

  CanonicalKey canonical_key(const gf::FieldCtx& ctx) const;
  /// Representative with e1 in [0, q-1) and e2 the minimum of its coset.
  CodeSpec canonical(const gf::FieldCtx& ctx) const;
  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

struct WeightEntry {
  std::uint32_t weight = 0;
  BigInt frequency;
  friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

/// Exact weight distribution of an [n, k] code over GF(q). Entries are sorted
/// by weight and carry only nonzero frequencies.
class WeightDist {
 public:
  WeightDist() = default;
  WeightDist(std::uint32_t n, std::uint32_t k, std::vector<WeightEntry> entries);
  static WeightDist from_histogram(std::uint32_t n, std::uint32_t k, const kernels::Histogram& hist);

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  const std::vector<WeightEntry>& entries() const { return entries_; }

  BigInt frequency(std::uint32_t weight) const;
  BigInt total() const;
  /// Distinct nonzero weights.
  std::size_t nonzero_weight_count() const;
  /// Smallest nonzero weight, or 0 for the zero code.
  std::uint32_t min_distance() const;

  friend bool operator==(const WeightDist&, const WeightDist&) = default;

 private:
  std::uint32_t n_ = 0, k_ = 0;
  std::vector<WeightEntry> entries_;
};

struct Codeword {
  std::vector<gf::Fe> symbols;
  std::uint32_t weight() const;
  friend auto operator<=>(const Codeword&, const Codeword&) = default;
};

/// h_((q+1)e1)(x) h_e2(x).
gf::Poly parity_check_polynomial(const gf::FieldCtx& ctx, const CodeSpec& spec);

/// (c delta^(e1 i) + Tr(b gamma^(e2 i))) for i in [0, n); c must be in GF(q).
Codeword trace_codeword(const gf::FieldCtx& ctx, const CodeSpec& spec, gf::Fe c, gf::Fe b);

/// Coefficients of m(x) g(x) with g = (x^n - 1) / h; deg m < deg h.
Codeword generator_encode(const gf::FieldCtx& ctx, const gf::Poly& h, const gf::Poly& message);

/// True iff word(x) h(x) = 0 mod x^n - 1.
bool is_codeword(const gf::FieldCtx& ctx, const gf::Poly& h, const Codeword& word);

/// All q^3 trace codewords, sorted.
std::vector<Codeword> trace_codewords(const gf::FieldCtx& ctx, const CodeSpec& spec);
/// All q^(deg h) generator-polynomial codewords, sorted.
std::vector<Codeword> generator_codewords(const gf::FieldCtx& ctx, const gf::Poly& h);

/// Exact distribution over all q^3 trace codewords. Requires |coset(e2)| = 2.
WeightDist weight_distribution(const gf::FieldCtx& ctx, const CodeSpec& spec, Exec exec = Exec::Parallel);

/// Exact distribution of the cyclic code with parity-check polynomial h, deg h = 3.
WeightDist weight_distribution_of_parity_check(const gf::FieldCtx& ctx, const gf::Poly& h,
                                               Exec exec = Exec::Parallel);

/// Same as above for any degree, enumerating q^(deg h) messages.
WeightDist weight_distribution_by_generator(const gf::FieldCtx& ctx, const gf::Poly& h, Exec exec = Exec::Parallel);

/// Distribution of the irreducible code C_(e) = {(Tr(b gamma^(e i)))_i}.
WeightDist weight_distribution_irreducible(const gf::FieldCtx& ctx, std::int64_t e, Exec exec = Exec::Parallel);

/// {0:1, q(q-1)-1:(q-1)(q^2-1), q(q-1):q^2-1, q^2-1:q-1}.
WeightDist table1_distribution(std::uint32_t q);

/// Dual distribution B_0..B_n of an [n, k] code over GF(q).
WeightDist macwilliams_dual(const WeightDist& wd, std::uint32_t q, std::uint32_t n, std::uint32_t k);

/// Checks the first four binomial-moment (Pless) identities between `wd`
/// and the dual prefix B_1, B_2, B_3.
bool pless_moment_check(const WeightDist& wd, const std::vector<BigInt>& dual_prefix, std::uint32_t q,
                        std::uint32_t n, std::uint32_t k);

std::uint64_t griesmer_sum(std::uint64_t q, std::uint32_t k, std::uint64_t d);
bool is_griesmer_optimal(std::uint64_t q, std::uint32_t k, std::uint64_t d, std::uint64_t n);

struct DualParameters {
  std::uint32_t n = 0, k = 0, d = 0;
  friend bool operator==(const DualParameters&, const DualParameters&) = default;
};

/// Parameters of the dual of a qualifying code, d read off the MacWilliams output.
DualParameters dual_parameters(const gf::FieldCtx& ctx, const CodeSpec& spec);

}  // namespace trinom::codes
