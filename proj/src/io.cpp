#include "trinom/io.hpp"

#include <limits>
#include <sstream>

namespace trinom::io {

json big_to_json(const codes::BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

codes::BigInt big_from_json(const json& j) {
  if (j.is_string()) return codes::BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return codes::BigInt(j.get<std::uint64_t>());
  return codes::BigInt(j.get<std::int64_t>());
}

json to_json(const codes::WeightDist& wd) {
  json weights = json::array();
  for (const auto& e : wd.entries()) weights.push_back(json::array({e.weight, big_to_json(e.frequency)}));
  return {{"n", wd.n()}, {"k", wd.k()}, {"weights", weights}};
}

codes::WeightDist weight_dist_from_json(const json& j) {
  std::vector<codes::WeightEntry> entries;
  for (const auto& row : j.at("weights")) entries.push_back({row.at(0).get<std::uint32_t>(), big_from_json(row.at(1))});
  return codes::WeightDist(j.at("n").get<std::uint32_t>(), j.at("k").get<std::uint32_t>(), std::move(entries));
}

std::string to_csv(const codes::WeightDist& wd) {
  std::ostringstream out;
  for (const auto& e : wd.entries()) out << e.weight << ',' << e.frequency << '\n';
  return out.str();
}

json to_json(const charz::ConditionReport& rep) {
  return {{"q", rep.q}, {"e1", rep.e1}, {"e2", rep.e2}, {"gcd1", rep.gcd1}, {"gcd2", rep.gcd2},
          {"qualifies", rep.qualifies}};
}

json to_json(const charz::ScanRecord& rec) {
  json j = {{"cosets", rec.cosets},
            {"dimension", rec.dimension},
            {"weights", to_json(rec.weights)["weights"]},
            {"matches_table1", rec.matches_table1},
            {"qualifies", rec.qualifies_thm1}};
  j["e1"] = rec.spec ? json(rec.spec->e1) : json(nullptr);
  j["e2"] = rec.spec ? json(rec.spec->e2) : json(nullptr);
  return j;
}

json to_json(const charz::TwoWeightReport& rep) {
  json j = {{"q", rep.q},
            {"e", rep.e},
            {"u", rep.u},
            {"f", rep.f},
            {"s", rep.s},
            {"theta_num", rep.theta.num},
            {"theta_den", rep.theta.den},
            {"epsilon", rep.epsilon},
            {"is_two_weight", rep.is_two_weight},
            {"diagnostic", rep.diagnostic}};
  j["r"] = rep.r ? json(*rep.r) : json(nullptr);
  j["predicted"] = rep.predicted ? to_json(*rep.predicted)["weights"] : json(nullptr);
  return j;
}

json to_json(const sums::CycInt& v) { return {{"p", v.p()}, {"coeffs", v.coeffs()}}; }

std::vector<std::uint32_t> parse_coefficients(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorKind::InvalidArgument, "empty coefficient in '" + text + "'");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item[0] == '-')
      throw Error(ErrorKind::InvalidArgument, "bad coefficient '" + item + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty coefficient list");
  return out;
}

}  // namespace trinom::io
