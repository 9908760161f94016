#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace torelli::suite {

struct Options {
  std::uint64_t seed = 20240601;
  std::string cache_dir;
  std::vector<int> only;  // empty: every criterion
  /// Called after each criterion; used for live PASS/FAIL lines.
  std::function<void(const struct CriterionResult&)> on_result;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  io::json data;
  double seconds = 0;  // wall time, kept out of the JSON manifest
};

struct Report {
  std::vector<CriterionResult> results;
  bool all_pass = false;
  double seconds = 0;
};

constexpr int kCriteria = 14;

Report run_acceptance(const Options& opt);

/// Deterministic manifest: no timings.
io::json to_json(const Report& r);

/// "PASS [ 3] title: detail"
std::string line(const CriterionResult& r);

}  // namespace torelli::suite
