#include "kernels_common.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trinom::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Per-thread histograms are summed after the loop; integer addition keeps
// the result independent of the schedule.

Histogram trace_weights_parallel(const gf::FieldCtx& ctx, const TraceCode& code) {
  Histogram hist(ctx.n() + 1, 0);
  const auto blocks = static_cast<std::int64_t>(ctx.order());
#pragma omp parallel
  {
    Histogram local(ctx.n() + 1, 0);
    std::vector<gf::Fe> traces(ctx.n());
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b)
      detail::accumulate_trace_block(ctx, code, detail::element_by_index(static_cast<std::uint32_t>(b)), traces,
                                     local);
#pragma omp critical
    for (std::size_t w = 0; w < hist.size(); ++w) hist[w] += local[w];
  }
  return hist;
}

Histogram generator_weights_parallel(const gf::FieldCtx& ctx, const gf::Poly& generator, unsigned k) {
  Histogram hist(ctx.n() + 1, 0);
  const auto messages = static_cast<std::int64_t>(detail::message_count(ctx, k));
  const auto rows = detail::shifted_rows(ctx, generator, k);
#pragma omp parallel
  {
    Histogram local(ctx.n() + 1, 0);
    std::vector<gf::Fe> coeffs;
#pragma omp for schedule(static)
    for (std::int64_t m = 0; m < messages; ++m)
      ++local[detail::encode_weight(ctx, rows, static_cast<std::uint64_t>(m), coeffs)];
#pragma omp critical
    for (std::size_t w = 0; w < hist.size(); ++w) hist[w] += local[w];
  }
  return hist;
}

}  // namespace trinom::kernels
