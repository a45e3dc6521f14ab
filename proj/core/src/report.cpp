#include "osmotic/report.hpp"

#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "osmotic/version.hpp"

namespace osmotic {

namespace {

// Shortest round-trip formatting keeps re-runs byte-identical.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

nlohmann::ordered_json manifest_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["artifact_version"] = m.artifact_version;
  j["suite"] = m.suite;
  j["seed"] = m.seed;
  j["format"] = m.format;
  j["config"] = serialize_config(m.config);
  return j;
}

}  // namespace

RunManifest make_manifest(const SimulationConfig& cfg, const std::string& format) {
  RunManifest m;
  m.artifact_version = kArtifactVersion;
  m.suite = suite_name(cfg.suite.kind);
  m.seed = cfg.workload.seed;
  m.format = format;
  m.config = cfg;
  return m;
}

const char* csv_header() {
  return "run_id,seed,epsilon_initial,epsilon_final,total_services,osmotic_count,"
         "public_count,unhandled_count,track,epsilon_adjustments,p_osmotic,wallclock_us";
}

void write_csv(std::ostream& out, const RunManifest& manifest,
               const std::vector<ExperimentRecord>& records) {
  out << "# manifest: " << manifest_json(manifest).dump() << "\n";
  out << csv_header() << "\n";
  for (const auto& r : records) {
    out << r.run_id << ',' << r.seed << ',' << fmt(r.epsilon_initial) << ','
        << fmt(r.epsilon_final) << ',' << r.total_services << ',' << r.osmotic_count
        << ',' << r.public_count << ',' << r.unhandled_count << ',' << r.track << ','
        << r.epsilon_adjustments << ',' << fmt(r.p_osmotic) << ',' << r.wallclock_us
        << "\n";
  }
}

void write_json(std::ostream& out, const RunManifest& manifest,
                const std::vector<ExperimentRecord>& records) {
  nlohmann::ordered_json j;
  j["manifest"] = manifest_json(manifest);
  auto& arr = j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json rec;
    rec["run_id"] = r.run_id;
    rec["seed"] = r.seed;
    rec["epsilon_initial"] = r.epsilon_initial;
    rec["epsilon_final"] = r.epsilon_final;
    rec["total_services"] = r.total_services;
    rec["osmotic_count"] = r.osmotic_count;
    rec["public_count"] = r.public_count;
    rec["unhandled_count"] = r.unhandled_count;
    rec["track"] = r.track;
    rec["epsilon_adjustments"] = r.epsilon_adjustments;
    rec["p_osmotic"] = r.p_osmotic;
    rec["wallclock_us"] = r.wallclock_us;
    arr.push_back(std::move(rec));
  }
  out << j.dump(2) << "\n";
}

std::string to_csv(const RunManifest& manifest,
                   const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  write_csv(out, manifest, records);
  return out.str();
}

std::string to_json(const RunManifest& manifest,
                    const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  write_json(out, manifest, records);
  return out.str();
}

std::string format_summary(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "epsilon" << std::setw(10) << "services"
      << std::setw(8) << "runs" << std::setw(22) << "p_osmotic (mean/sd)" << std::setw(22)
      << "track (mean/sd)" << "wallclock_us (mean/sd)\n";
  for (const auto& r : rows) {
    std::ostringstream p, t, w;
    p << std::fixed << std::setprecision(4) << r.p_osmotic_mean << " / "
      << r.p_osmotic_stddev;
    t << std::fixed << std::setprecision(1) << r.track_mean << " / " << r.track_stddev;
    w << std::fixed << std::setprecision(1) << r.wallclock_mean_us << " / "
      << r.wallclock_stddev_us;
    out << std::left << std::setw(12) << fmt(r.epsilon_initial) << std::setw(10)
        << r.services_bucket << std::setw(8) << r.count << std::setw(22) << p.str()
        << std::setw(22) << t.str() << w.str() << "\n";
  }
  return out.str();
}

}  // namespace osmotic
