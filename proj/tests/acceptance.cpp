// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trinom/charz.hpp"
#include "trinom/cli.hpp"
#include "trinom/codes.hpp"
#include "trinom/numtheory.hpp"
#include "trinom/sums.hpp"

using namespace trinom;
using codes::BigInt;
using codes::WeightDist;
using gf::Fe;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void fail(const std::string& what) {
    if (ok) {
      ok = false;
      detail = what;
    }
  }
};

Fe element_by_index(std::uint32_t i) { return i == 0 ? Fe::zero() : Fe::from_log(i - 1); }

json cli_json(const std::vector<std::string>& args, Outcome& out) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  out.require(code == 0, "cli exit code " + std::to_string(code) + ": " + e.str());
  if (code != 0) return json::object();
  return json::parse(o.str());
}

std::string key_string(std::uint64_t q, const codes::CodeSpec& s) {
  return "q=" + std::to_string(q) + " (" + std::to_string(s.e1) + "," + std::to_string(s.e2) + ")";
}

// Every distribution produced during the run, for the involution check.
struct Computed {
  WeightDist wd;
  std::uint32_t q;
};
std::vector<Computed> g_computed;

Outcome criterion1() {
  Outcome out;
  const json j = cli_json({"inspect", "--q", "4", "--e1", "2", "--e2", "6"}, out);
  if (!out.ok) return out;
  const json& r = j["result"];
  out.require(r["weights"] == json::parse("[[0,1],[11,45],[12,15],[15,3]]"), "weights " + r["weights"].dump());
  out.require(r["B1"] == 0 && r["B2"] == 0 && r["B3"] == 195, "dual prefix");
  out.require(r["dual"] == json::parse("[15,12,3]"), "dual parameters " + r["dual"].dump());
  out.require(r["griesmer_optimal"] == true, "griesmer");
  if (out.ok) out.detail = "1+45z^11+15z^12+3z^15, B3=195, dual [15,12,3]";
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto ctx = gf::build_field(2, 2);
  const std::set<std::pair<std::uint32_t, std::uint32_t>> expected = {
      {0, 1}, {0, 2}, {0, 7}, {0, 11}, {5, 1}, {5, 3}, {5, 6}, {5, 7}, {10, 2}, {10, 3}, {10, 6}, {10, 11}};
  const json en = cli_json({"enumerate", "--q", "4"}, out);
  if (!out.ok) return out;
  std::set<std::pair<std::uint32_t, std::uint32_t>> listed;
  for (const auto& c : en["result"]["codes"]) {
    const codes::CodeSpec s{4, c["e1"].get<std::int64_t>(), c["e2"].get<std::int64_t>()};
    listed.insert({s.canonical_key(ctx).g1, s.canonical_key(ctx).coset_min});
  }
  out.require(en["result"]["count"] == 12 && listed == expected, "enumerate list differs");

  const json sc = cli_json({"scan", "--q", "4"}, out);
  if (!out.ok) return out;
  out.require(sc["result"]["verdict"] == true, "scan verdict false");
  std::set<std::pair<std::uint32_t, std::uint32_t>> matched;
  for (const auto& rec : sc["result"]["records"]) {
    if (rec["matches_table1"] != true) continue;
    const codes::CodeSpec s{4, rec["e1"].get<std::int64_t>(), rec["e2"].get<std::int64_t>()};
    matched.insert({s.canonical_key(ctx).g1, s.canonical_key(ctx).coset_min});
  }
  out.require(matched == expected, "scan matches differ from the listed codes");
  if (out.ok)
    out.detail = "12 codes; scan matched exactly these among " + std::to_string(sc["result"]["records"].size()) +
                 " dimension-3 codes";
  return out;
}

Outcome criterion3() {
  Outcome out;
  std::size_t checked = 0;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto ctx = gf::build_field_for_q(q);
    const auto table = codes::table1_distribution(ctx.q());
    for (const auto& spec : charz::enumerate_qualifying(ctx)) {
      const auto wd = codes::weight_distribution(ctx, spec);
      g_computed.push_back({wd, ctx.q()});
      out.require(wd == table, "distribution mismatch at " + key_string(q, spec));
      ++checked;
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " qualifying codes, all equal to the closed form";
  return out;
}

Outcome criterion4() {
  Outcome out;
  std::ostringstream d;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto ctx = gf::build_field_for_q(q);
    const auto records = charz::scan_all_dimension3(ctx);
    std::size_t matches = 0;
    for (const auto& r : records) {
      matches += r.matches_table1;
      if (q <= 5) g_computed.push_back({r.weights, ctx.q()});
    }
    out.require(charz::theorem5_holds(records, q), "equivalence fails at q=" + std::to_string(q));
    d << "q=" << q << ":" << matches << "/" << records.size() << " ";
  }
  if (out.ok) out.detail = d.str();
  return out;
}

std::int64_t case_value(std::int64_t q, sums::SumCase c) {
  switch (c) {
    case sums::SumCase::BothZero: return (q - 1) * (q * q - 1);
    case sums::SumCase::TraceNonzeroBZero: return -(q * q - 1);
    case sums::SumCase::TraceZeroBNonzero: return -(q - 1);
    case sums::SumCase::BothNonzero: return 1;
  }
  return 0;
}

// Calls check(a, b, T(a, b)) for every (a, b) in GF(q^2) x GF(q^2).
template <class Check>
void for_all_T(const gf::FieldCtx& ctx, std::int64_t e1, std::int64_t e2, Check&& check) {
  for (std::uint32_t ai = 0; ai < ctx.order(); ++ai)
    for (std::uint32_t bi = 0; bi < ctx.order(); ++bi) {
      const Fe a = element_by_index(ai), b = element_by_index(bi);
      check(a, b, sums::eval_T(ctx, e1, e2, a, b));
    }
}

Outcome criterion5() {
  Outcome out;
  std::size_t specs_checked = 0;
  for (std::uint64_t q : {3, 4, 5, 7}) {
    const auto ctx = gf::build_field_for_q(q);
    const auto specs = charz::enumerate_qualifying(ctx);
    const std::size_t stride = std::max<std::size_t>(1, specs.size() / 4);
    std::size_t used = 0;
    for (std::size_t s = 0; s < specs.size(); s += stride, ++used) {
      const auto& spec = specs[s];
      std::set<sums::SumCase> seen;
      for_all_T(ctx, spec.e1, spec.e2, [&](Fe a, Fe b, std::int64_t t) {
        const auto c = sums::classify_case(ctx, a, b);
        if (t != case_value(static_cast<std::int64_t>(q), c)) out.fail("case value mismatch at " + key_string(q, spec));
        if (seen.insert(c).second)
          out.require(sums::eval_T_by_characters(ctx, spec.e1, spec.e2, a, b) == t,
                      "character sum disagrees at " + key_string(q, spec));
      });
      out.require(seen.size() == 4, "transversal incomplete at " + key_string(q, spec));
      ++specs_checked;
    }
    out.require(used >= 3, "fewer than three exponent pairs at q=" + std::to_string(q));
  }
  if (out.ok) out.detail = std::to_string(specs_checked) + " exponent pairs, all (a,b), integer-exact";
  return out;
}

Outcome criterion6() {
  Outcome out;
  std::ostringstream d;
  for (std::uint64_t q : {4, 5, 7, 8, 9}) {
    const auto ctx = gf::build_field_for_q(q);
    std::size_t pairs = 0;
    for (std::int64_t e1 = 0; e1 + 1 < static_cast<std::int64_t>(q); ++e1)
      for (std::int64_t e2 = 0; e2 < static_cast<std::int64_t>(ctx.n()); ++e2) {
        const auto rep = charz::check_conditions(q, e1, e2);
        if (rep.gcd2 != 1 || rep.gcd1 <= 1) continue;
        ++pairs;
        const std::int64_t modulus = static_cast<std::int64_t>(q * rep.gcd1);
        const std::int64_t target = 1 - static_cast<std::int64_t>(q);
        for_all_T(ctx, e1, e2, [&](Fe a, Fe b, std::int64_t t) {
          if (b.is_zero() || ctx.trace_is_zero(a)) return;
          if (t == 1) out.fail("T = 1 at q=" + std::to_string(q));
          if (((t - target) % modulus + modulus) % modulus != 0) out.fail("congruence fails at q=" + std::to_string(q));
        });
      }
    d << "q=" << q << ":" << pairs << (pairs == 0 ? "(vacuous) " : " ");
  }
  if (out.ok) out.detail = "exponent pairs " + d.str();
  return out;
}

Outcome criterion7() {
  Outcome out;
  std::size_t total = 0;
  for (std::uint64_t q : {3, 4, 5}) {
    const auto ctx = gf::build_field_for_q(q);
    for (const auto& spec : charz::enumerate_qualifying(ctx)) {
      std::size_t valid = 0;
      for (std::uint32_t ai = 1; ai < ctx.order(); ++ai) {
        const Fe a = element_by_index(ai);
        if (ctx.trace_is_zero(a)) continue;
        for (std::uint32_t bi = 1; bi < ctx.order(); ++bi) {
          if (!sums::verify_lemma2_identity(ctx, spec.e1, spec.e2, a, element_by_index(bi)))
            out.fail("identity fails at " + key_string(q, spec));
          ++valid;
        }
      }
      out.require(valid >= 10, "fewer than ten pairs at " + key_string(q, spec));
      total += valid;
    }
  }
  if (out.ok) out.detail = std::to_string(total) + " (a,b) pairs, exact in Z[zeta_p]";
  return out;
}

Outcome criterion8() {
  Outcome out;
  std::size_t fields = 0;
  for (std::uint64_t q = 3; q <= 49; q += 2) {
    if (!nt::prime_power(q)) continue;
    const auto ctx = gf::build_field_for_q(q);
    for (std::uint32_t k = 0; k + 1 < q; ++k)
      out.require(sums::remark3_count(ctx, ctx.subfield_element(k)) == (q - 1) / 2 - 1,
                  "count mismatch at q=" + std::to_string(q));
    ++fields;
  }
  if (out.ok) out.detail = std::to_string(fields) + " odd prime powers, every rho";
  return out;
}

Outcome criterion9() {
  Outcome out;
  std::size_t tested = 0, accepted = 0;
  bool saw_q3 = false;
  for (std::uint64_t q : {3, 5, 7, 8, 9, 11}) {
    const auto ctx = gf::build_field_for_q(q);
    for (std::uint32_t e = 0; e < ctx.n(); ++e) {
      if (ctx.cyclotomic_coset(e).size() != 2) continue;
      const auto rep = charz::schmidt_white_test(ctx, e);
      const auto observed = codes::weight_distribution_irreducible(ctx, e);
      g_computed.push_back({observed, ctx.q()});
      ++tested;
      const std::string where = "q=" + std::to_string(q) + " e=" + std::to_string(e);
      out.require(rep.is_two_weight == (observed.nonzero_weight_count() == 2), "verdict disagrees at " + where);
      if (rep.is_two_weight) {
        ++accepted;
        out.require(rep.predicted && *rep.predicted == observed, "prediction differs at " + where);
        out.require(rep.predicted && rep.predicted->frequency(static_cast<std::uint32_t>(q * (q - 1))) == 0,
                    "prediction contains q(q-1) at " + where);
      }
      if (q == 3 && e == 2) {
        saw_q3 = true;
        const WeightDist expected(8, 2, {{0, BigInt(1)}, {4, BigInt(4)}, {8, BigInt(4)}});
        out.require(rep.predicted && *rep.predicted == expected && observed == expected, "q=3 e=2 case");
      }
    }
  }
  out.require(saw_q3, "q=3 e=2 not exercised");
  if (out.ok) out.detail = std::to_string(tested) + " exponents, " + std::to_string(accepted) + " two-weight";
  return out;
}

Outcome criterion10() {
  Outcome out;
  std::size_t specs = 0;
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto ctx = gf::build_field_for_q(q);
    for (const auto& spec : charz::enumerate_qualifying(ctx)) {
      const auto h = codes::parity_check_polynomial(ctx, spec);
      out.require(codes::trace_codewords(ctx, spec) == codes::generator_codewords(ctx, h),
                  "codeword sets differ at " + key_string(q, spec));
      g_computed.push_back({codes::weight_distribution_by_generator(ctx, h), ctx.q()});
      ++specs;
    }
  }
  for (const auto& [wd, q] : g_computed) {
    const auto dual = codes::macwilliams_dual(wd, q, wd.n(), wd.k());
    out.require(codes::macwilliams_dual(dual, q, wd.n(), wd.n() - wd.k()) == wd, "involution fails");
  }
  if (out.ok)
    out.detail = std::to_string(specs) + " codeword sets equal; involution on " + std::to_string(g_computed.size()) +
                 " distributions";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "GF(4) example regression", 1, criterion1},
      {2, "GF(4) enumeration and scan", 5, criterion2},
      {3, "closed-form distribution, q in {2,3,4,5,7,8,9}", 120, criterion3},
      {4, "converse scan, q in {2,3,4,5,7,8,9}", 300, criterion4},
      {5, "T case table, q in {3,4,5,7}", 0, criterion5},
      {6, "T != 1 and congruence when gcd(q-1,2e1-e2) > 1", 0, criterion6},
      {7, "S double-sum identity, q in {3,4,5}", 0, criterion7},
      {8, "quadratic-character count, odd q <= 49", 0, criterion8},
      {9, "two-weight test soundness, q in {3,5,7,8,9,11}", 300, criterion9},
      {10, "encoder equivalence and MacWilliams involution", 0, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds && o.ok) {
      o.ok = false;
      o.detail = "too slow";
    }
    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", secs, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::printf("%s [%d] %s (%s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, timing, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
