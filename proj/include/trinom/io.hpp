#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trinom/charz.hpp"
#include "trinom/codes.hpp"
#include "trinom/sums.hpp"

namespace trinom::io {

using nlohmann::json;

/// Frequencies that fit in 64 bits are JSON numbers, larger ones decimal strings.
json big_to_json(const codes::BigInt& v);
codes::BigInt big_from_json(const json& j);

/// {"n":..., "k":..., "weights":[[w,freq],...]}
json to_json(const codes::WeightDist& wd);
codes::WeightDist weight_dist_from_json(const json& j);
/// One "w,freq" row per entry.
std::string to_csv(const codes::WeightDist& wd);

json to_json(const charz::ConditionReport& rep);
json to_json(const charz::ScanRecord& rec);
json to_json(const charz::TwoWeightReport& rep);
json to_json(const sums::CycInt& v);

/// "1,0,1" -> {1, 0, 1}
std::vector<std::uint32_t> parse_coefficients(const std::string& text);

}  // namespace trinom::io
