#include "kernels_common.hpp"

namespace trinom::kernels {

Histogram trace_weights_serial(const gf::FieldCtx& ctx, const TraceCode& code) {
  Histogram hist(ctx.n() + 1, 0);
  std::vector<gf::Fe> traces(ctx.n());
  for (std::uint32_t b = 0; b < ctx.order(); ++b)
    detail::accumulate_trace_block(ctx, code, detail::element_by_index(b), traces, hist);
  return hist;
}

Histogram generator_weights_serial(const gf::FieldCtx& ctx, const gf::Poly& generator, unsigned k) {
  Histogram hist(ctx.n() + 1, 0);
  const std::uint64_t messages = detail::message_count(ctx, k);
  const auto rows = detail::shifted_rows(ctx, generator, k);
  std::vector<gf::Fe> coeffs;
  for (std::uint64_t m = 0; m < messages; ++m) ++hist[detail::encode_weight(ctx, rows, m, coeffs)];
  return hist;
}

}  // namespace trinom::kernels
