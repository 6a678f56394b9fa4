#pragma once

#include <string>

#include <json.hpp>

#include "specex/checks.hpp"
#include "specex/extremal.hpp"
#include "specex/spectral.hpp"
#include "specex/walks.hpp"

namespace specex {

inline constexpr const char* kToolName = "specex";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

Json to_json(const SpectralResult& result);
Json to_json(const ExtremalReport& report);
Json to_json(const CheckReport& report);
Json to_json(const WalkRatioReport& report);

std::string to_csv(const ExtremalReport& report);
std::string to_csv(const CheckReport& report);
std::string check_csv_header();
std::string to_csv_row(const CheckReport& report);

const char* verdict_name(Verdict v);

}  // namespace specex
