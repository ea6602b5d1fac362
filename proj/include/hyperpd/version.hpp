#pragma once

namespace hyperpd {

inline constexpr const char* kVersion = "hyperpd 0.1.0";
inline constexpr const char* kCampaignSchema = "hyperpd-campaign/1";
inline constexpr const char* kSolveSchema = "hyperpd-solve/1";
inline constexpr const char* kCheckSchema = "hyperpd-check/1";
inline constexpr const char* kLemmasSchema = "hyperpd-lemmas/1";

}  // namespace hyperpd
