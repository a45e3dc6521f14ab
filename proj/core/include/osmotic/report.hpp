#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "osmotic/config.hpp"
#include "osmotic/harness.hpp"

namespace osmotic {

// Self-describing output header: enough to reproduce the run byte-identically
// (wallclock excluded).
struct RunManifest {
  std::string artifact_version;
  std::string suite;
  std::uint64_t seed = 0;
  std::string format;  // "csv" or "json"
  SimulationConfig config;
};

RunManifest make_manifest(const SimulationConfig& cfg, const std::string& format);

/// Fixed CSV column order.
const char* csv_header();

/// CSV with the manifest embedded as leading '#' comment lines.
void write_csv(std::ostream& out, const RunManifest& manifest,
               const std::vector<ExperimentRecord>& records);

/// JSON object {"manifest": ..., "records": [...]}; record field names match
/// the CSV headers exactly.
void write_json(std::ostream& out, const RunManifest& manifest,
                const std::vector<ExperimentRecord>& records);

std::string to_csv(const RunManifest& manifest,
                   const std::vector<ExperimentRecord>& records);
std::string to_json(const RunManifest& manifest,
                    const std::vector<ExperimentRecord>& records);

/// Human-readable summary table (means per epsilon and service bucket).
std::string format_summary(const std::vector<SummaryRow>& rows);

}  // namespace osmotic
