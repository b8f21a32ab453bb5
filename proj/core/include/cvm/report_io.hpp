#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cvm/edge_process.hpp"
#include "cvm/experiments.hpp"
#include "cvm/simulator.hpp"
#include "cvm/statics.hpp"
#include "cvm/urn.hpp"

namespace cvm {

// Shortest decimal form that round-trips (at most 17 significant digits).
std::string format_double(double x);

nlohmann::json to_json(const SimReport& r);
nlohmann::json to_json(const IndexBounds& b);
// Fields "spec", "records", "aggregates". Wall times only when asked, so
// that default output is identical across worker counts.
nlohmann::json to_json(const ExperimentReport& r, bool include_timing = false);

// One value per line.
std::string opinions_csv(const OpinionConfig& c);
OpinionConfig parse_opinions_csv(std::string_view text);

// Header "replicate,seed,nu,absorbed,consensus,theta_inf_zero,events".
// Records appear epsilon-major; theta_inf_zero is blank when undefined.
std::string records_csv(const ExperimentReport& r);

// Columns time,event_index,X0..XJ,boundary.
std::string census_csv(std::span<const CensusSample> trace);

// Columns step,box0..boxJ.
std::string urn_trajectory_csv(std::span<const UrnState> trajectory);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace cvm
