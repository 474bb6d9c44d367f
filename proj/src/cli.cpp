#include "trinom/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "trinom/charz.hpp"
#include "trinom/codes.hpp"
#include "trinom/io.hpp"
#include "trinom/kernels.hpp"
#include "trinom/sums.hpp"

namespace trinom::cli {

namespace {

using io::json;

struct Config {
  std::optional<std::vector<std::uint32_t>> modulus;
  std::uint64_t table_cap = gf::kDefaultTableCap;
  std::uint32_t scan_cap = charz::kDefaultScanCap;
};

Config load_config(const std::string& path) {
  Config cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open config " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, "bad config " + path + ": " + e.what());
  }
  try {
    if (j.contains("modulus")) {
      const auto& m = j["modulus"];
      cfg.modulus = m.is_string() ? io::parse_coefficients(m.get<std::string>()) : m.get<std::vector<std::uint32_t>>();
    }
    if (j.contains("table_cap")) cfg.table_cap = j["table_cap"].get<std::uint64_t>();
    if (j.contains("scan_cap")) cfg.scan_cap = j["scan_cap"].get<std::uint32_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, "bad config field: " + std::string(e.what()));
  }
  return cfg;
}

gf::Fe parse_element(const gf::FieldCtx& ctx, const std::string& text) {
  if (text == "zero") return gf::Fe::zero();
  std::size_t used = 0;
  long long k = 0;
  try {
    k = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw Error(ErrorKind::InvalidArgument, "element must be a gamma exponent or 'zero', got '" + text + "'");
  return ctx.element(k);
}

json element_json(gf::Fe x) { return x.is_zero() ? json("zero") : json(x.log()); }

json envelope(const std::string& command, json params, json result) {
  return {{"command", command}, {"params", std::move(params)}, {"result", std::move(result)},
          {"tool_version", kToolVersion}};
}

struct Globals {
  std::string format = "json";
  std::string config_path;
  std::string modulus;
  int threads = 0;
};

class Runner {
 public:
  Runner(const Globals& g, std::ostream& out) : g_(g), out_(out) {
    std::string path = g.config_path;
    if (path.empty())
      if (const char* env = std::getenv("TRINOM_CONFIG")) path = env;
    cfg_ = load_config(path);
    if (!g.modulus.empty()) cfg_.modulus = io::parse_coefficients(g.modulus);
    if (g.threads > 0) kernels::set_threads(g.threads);
  }

  gf::FieldCtx field(std::uint64_t q) const { return gf::build_field_for_q(q, cfg_.modulus, cfg_.table_cap); }

  void emit(const std::string& command, json params, json result) const {
    out_ << envelope(command, std::move(params), std::move(result)).dump(2) << '\n';
  }
  bool csv() const { return g_.format == "csv"; }
  void require_json(const std::string& command) const {
    if (csv()) throw Error(ErrorKind::InvalidArgument, command + " has no tabular payload; use --format json");
  }
  std::ostream& out() const { return out_; }
  std::uint32_t scan_cap() const { return cfg_.scan_cap; }

 private:
  const Globals& g_;
  std::ostream& out_;
  Config cfg_;
};

void cmd_inspect(const Runner& run, std::uint64_t q, std::int64_t e1, std::int64_t e2) {
  const auto ctx = run.field(q);
  const codes::CodeSpec spec{ctx.q(), e1, e2};
  const auto cond = charz::check_conditions(q, e1, e2);
  const auto wd = codes::weight_distribution(ctx, spec);
  if (run.csv()) {
    run.out() << io::to_csv(wd);
    return;
  }
  const auto dual = codes::macwilliams_dual(wd, ctx.q(), ctx.n(), 3);
  const std::vector<codes::BigInt> prefix{dual.frequency(1), dual.frequency(2), dual.frequency(3)};
  const std::uint32_t d = wd.min_distance();

  json result = {{"conditions", io::to_json(cond)},
                 {"canonical", {spec.canonical_key(ctx).g1, spec.canonical_key(ctx).coset_min}},
                 {"n", ctx.n()},
                 {"k", 3},
                 {"d", d},
                 {"weights", io::to_json(wd)["weights"]},
                 {"nonzero_weights", wd.nonzero_weight_count()},
                 {"matches_table1", wd == codes::table1_distribution(ctx.q())},
                 {"griesmer_sum", codes::griesmer_sum(q, 3, d)},
                 {"griesmer_optimal", codes::is_griesmer_optimal(q, 3, d, ctx.n())},
                 {"B1", io::big_to_json(prefix[0])},
                 {"B2", io::big_to_json(prefix[1])},
                 {"B3", io::big_to_json(prefix[2])},
                 {"pless_consistent", codes::pless_moment_check(wd, prefix, ctx.q(), ctx.n(), 3)}};
  try {
    const auto dp = codes::dual_parameters(ctx, spec);
    result["dual"] = {dp.n, dp.k, dp.d};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::QTooSmall && e.kind() != ErrorKind::ConditionsNotMet) throw;
    result["dual"] = nullptr;
    result["dual_note"] = std::string(to_string(e.kind()));
  }
  result["modulus"] = ctx.modulus();
  run.emit("inspect", {{"q", q}, {"e1", e1}, {"e2", e2}}, std::move(result));
}

void cmd_enumerate(const Runner& run, std::uint64_t q) {
  const auto ctx = run.field(q);
  const auto specs = charz::enumerate_qualifying(ctx);
  if (run.csv()) {
    run.out() << "g1,e1,e2\n";
    for (const auto& s : specs) run.out() << s.canonical_key(ctx).g1 << ',' << s.e1 << ',' << s.e2 << '\n';
    return;
  }
  json rows = json::array();
  for (const auto& s : specs)
    rows.push_back({{"g1", s.canonical_key(ctx).g1}, {"e1", s.e1}, {"e2", s.e2}, {"coset", ctx.cyclotomic_coset(s.e2)}});
  run.emit("enumerate", {{"q", q}},
           {{"count", specs.size()}, {"formula", charz::count_formula(q)}, {"codes", std::move(rows)}});
}

void cmd_scan(const Runner& run, std::uint64_t q) {
  const auto ctx = run.field(q);
  const auto records = charz::scan_all_dimension3(ctx, run.scan_cap());
  const bool verdict = charz::theorem5_holds(records, q);
  std::uint64_t matches = 0;
  for (const auto& r : records) matches += r.matches_table1 ? 1 : 0;
  if (run.csv()) {
    run.out() << "cosets,e1,e2,matches_table1,qualifies,weights\n";
    for (const auto& r : records) {
      std::string cosets, weights;
      for (auto c : r.cosets) cosets += (cosets.empty() ? "" : ";") + std::to_string(c);
      for (const auto& e : r.weights.entries())
        weights += (weights.empty() ? "" : ";") + std::to_string(e.weight) + ":" + e.frequency.str();
      run.out() << cosets << ',' << (r.spec ? std::to_string(r.spec->e1) : "") << ','
                << (r.spec ? std::to_string(r.spec->e2) : "") << ',' << (r.matches_table1 ? "true" : "false") << ','
                << (r.qualifies_thm1 ? "true" : "false") << ',' << weights << '\n';
    }
    return;
  }
  json rows = json::array();
  for (const auto& r : records) rows.push_back(io::to_json(r));
  run.emit("scan", {{"q", q}},
           {{"verdict", verdict},
            {"records_scanned", records.size()},
            {"matches", matches},
            {"formula", charz::count_formula(q)},
            {"records", std::move(rows)}});
}

void cmd_sums(const Runner& run, std::uint64_t q, std::int64_t e1, std::int64_t e2, const std::string& a_text,
              const std::string& b_text) {
  run.require_json("sums");
  const auto ctx = run.field(q);
  const gf::Fe a = parse_element(ctx, a_text), b = parse_element(ctx, b_text);
  const auto z = sums::count_zero_entries(ctx, e1, e2, a, b);
  const auto t_count = sums::eval_T(ctx, e1, e2, a, b);
  const auto t_chars = sums::eval_T_by_characters(ctx, e1, e2, a, b);
  json result = {{"case", std::string(sums::to_string(sums::classify_case(ctx, a, b)))},
                 {"Z", z},
                 {"T", t_count},
                 {"T_by_characters", t_chars},
                 {"S", io::to_json(sums::eval_S(ctx, e1, e2, a, b))},
                 {"conditions", io::to_json(charz::check_conditions(q, e1, e2))}};
  const bool identity_applies =
      !ctx.trace_is_zero(a) && !b.is_zero() && charz::check_conditions(q, e1, e2).gcd2 == 1;
  result["double_sum_identity"] = identity_applies ? json(sums::verify_lemma2_identity(ctx, e1, e2, a, b)) : json(nullptr);
  run.emit("sums", {{"q", q}, {"e1", e1}, {"e2", e2}, {"a", element_json(a)}, {"b", element_json(b)}},
           std::move(result));
}

void cmd_twoweight(const Runner& run, std::uint64_t q, std::int64_t e) {
  run.require_json("twoweight");
  const auto ctx = run.field(q);
  const auto rep = charz::schmidt_white_test(ctx, e);
  const auto observed = codes::weight_distribution_irreducible(ctx, e);
  json result = io::to_json(rep);
  result["observed"] = io::to_json(observed)["weights"];
  result["observed_two_weight"] = observed.nonzero_weight_count() == 2;
  result["agrees"] = rep.is_two_weight == (observed.nonzero_weight_count() == 2) &&
                     (!rep.predicted || *rep.predicted == observed);
  run.emit("twoweight", {{"q", q}, {"e", e}}, std::move(result));
}

void cmd_griesmer(const Runner& run, std::uint64_t q, std::uint32_t k, std::uint64_t d, std::optional<std::uint64_t> n) {
  run.require_json("griesmer");
  if (q < 2 || k < 1 || d < 1) throw Error(ErrorKind::InvalidArgument, "need q >= 2, k >= 1, d >= 1");
  json params = {{"q", q}, {"k", k}, {"d", d}};
  json result = {{"sum", codes::griesmer_sum(q, k, d)}};
  if (n) {
    params["n"] = *n;
    result["optimal"] = codes::is_griesmer_optimal(q, k, d, *n);
  }
  run.emit("griesmer", std::move(params), std::move(result));
}

int exit_code(ErrorKind kind) { return kind == ErrorKind::CapExceeded ? 3 : 2; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal three-weight cyclic codes of length q^2-1 and dimension 3", "trinom"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--config", g.config_path, "JSON config file (also TRINOM_CONFIG)");
  app.add_option("--modulus", g.modulus, "Primitive modulus over GF(p), comma-separated, constant first");
  app.add_option("--threads", g.threads, "OpenMP threads")->check(CLI::NonNegativeNumber);

  std::uint64_t q = 0, d = 0;
  std::int64_t e1 = 0, e2 = 0, e = 0;
  std::uint32_t k = 0;
  std::optional<std::uint64_t> n;
  std::string a_text, b_text;

  auto* inspect = app.add_subcommand("inspect", "Weight distribution, Griesmer and dual data for C_((q+1)e1,e2)");
  inspect->add_option("--q", q)->required();
  inspect->add_option("--e1", e1)->required();
  inspect->add_option("--e2", e2)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every code satisfying both gcd conditions");
  enumerate->add_option("--q", q)->required();

  auto* scan = app.add_subcommand("scan", "Scan all dimension-3 cyclic codes of length q^2-1");
  scan->add_option("--q", q)->required();

  auto* sums_cmd = app.add_subcommand("sums", "Evaluate S, T and Z for given (a, b)");
  sums_cmd->add_option("--q", q)->required();
  sums_cmd->add_option("--e1", e1)->required();
  sums_cmd->add_option("--e2", e2)->required();
  sums_cmd->add_option("--a", a_text, "gamma exponent or 'zero'")->required();
  sums_cmd->add_option("--b", b_text, "gamma exponent or 'zero'")->required();

  auto* twoweight = app.add_subcommand("twoweight", "Two-weight test for the irreducible code C_(e)");
  twoweight->add_option("--q", q)->required();
  twoweight->add_option("--e", e)->required();

  auto* griesmer = app.add_subcommand("griesmer", "Griesmer sum and optimality");
  griesmer->add_option("--q", q)->required();
  griesmer->add_option("--k", k)->required();
  griesmer->add_option("--d", d)->required();
  griesmer->add_option("--n", n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    Runner run(g, out);
    if (*inspect) cmd_inspect(run, q, e1, e2);
    else if (*enumerate) cmd_enumerate(run, q);
    else if (*scan) cmd_scan(run, q);
    else if (*sums_cmd) cmd_sums(run, q, e1, e2, a_text, b_text);
    else if (*twoweight) cmd_twoweight(run, q, e);
    else if (*griesmer) cmd_griesmer(run, q, k, d, n);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"trinom"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace trinom::cli
