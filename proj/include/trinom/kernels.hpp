#pragma once

// Weight-enumeration kernels. Every kernel has a serial reference and an
// OpenMP variant; both return the same histogram (index = Hamming weight,
// value = number of codewords), which tests and the benchmark compare.

#include <cstdint>
#include <vector>

#include "trinom/gf.hpp"

namespace trinom::kernels {

using Histogram = std::vector<std::uint64_t>;

/// Codewords (c delta^(e1 i) + Tr(b gamma^(e2 i)))_i with c ranging over GF(q)
/// (or only c = 0 when `with_first` is false) and b over GF(q^2).
struct TraceCode {
  std::uint64_t first_exponent = 0;  // (q+1) e1 mod n, as a power of gamma
  std::uint64_t second_exponent = 0; // e2 mod n
  bool with_first = true;
};

Histogram trace_weights_serial(const gf::FieldCtx& ctx, const TraceCode& code);
Histogram trace_weights_parallel(const gf::FieldCtx& ctx, const TraceCode& code);

/// Codewords m(x) g(x) for every m over GF(q) of degree < k, where g has
/// degree n - k.
Histogram generator_weights_serial(const gf::FieldCtx& ctx, const gf::Poly& generator, unsigned k);
Histogram generator_weights_parallel(const gf::FieldCtx& ctx, const gf::Poly& generator, unsigned k);

/// Number of threads OpenMP regions will use (1 when built without OpenMP).
int max_threads();
void set_threads(int n);

}  // namespace trinom::kernels
