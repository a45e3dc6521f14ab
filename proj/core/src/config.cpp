#include "osmotic/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace osmotic {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an unsigned integer, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ConfigError(key + ": expected true/false, got '" + value + "'");
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError(key + ": empty list element");
    out.push_back(parse_double(key, item));
  }
  if (out.empty()) throw ConfigError(key + ": expected a comma separated list");
  return out;
}

int parse_property_name(const std::string& key, const std::string& value) {
  if (value == "load") return 0;
  if (value == "energy") return 1;
  if (value == "time") return 2;
  throw ConfigError(key + ": expected one of load, energy, time; got '" + value + "'");
}

const char* property_name(int index) {
  switch (index) {
    case 0: return "load";
    case 1: return "energy";
    default: return "time";
  }
}

// Formats a double with the shortest round-trip representation so serialized
// configs and outputs are byte-stable.
std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_double_list(const std::vector<double>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += format_double(vs[i]);
  }
  return out;
}

using KeyHandler = std::function<void(const std::string& key, const std::string& value)>;

}  // namespace

const char* suite_name(SuiteKind kind) {
  switch (kind) {
    case SuiteKind::Distribution: return "distribution";
    case SuiteKind::ProbabilityVsEpsilon: return "probability_vs_epsilon";
    case SuiteKind::AllocationTimeVsEpsilon: return "allocation_time_vs_epsilon";
  }
  return "distribution";
}

std::vector<std::string> known_suite_names() {
  return {"distribution", "probability_vs_epsilon", "allocation_time_vs_epsilon"};
}

SuiteKind parse_suite_name(const std::string& name) {
  if (name == "distribution") return SuiteKind::Distribution;
  if (name == "probability_vs_epsilon") return SuiteKind::ProbabilityVsEpsilon;
  if (name == "allocation_time_vs_epsilon") return SuiteKind::AllocationTimeVsEpsilon;
  std::string msg = "unknown suite '" + name + "'; valid suites:";
  for (const auto& n : known_suite_names()) msg += " " + n;
  throw ConfigError(msg);
}

void validate(const OsmosisSettings& s) {
  if (s.epsilon <= 0.0) throw ConfigError("[osmosis] epsilon: must be positive");
  if (s.epsilon_reference <= 0.0) {
    throw ConfigError("[osmosis] epsilon_reference: must be positive");
  }
  if (s.epsilon_multiplier <= 1.0) {
    throw ConfigError("[osmosis] epsilon_multiplier: must be greater than 1");
  }
  if (s.max_epsilon_adjustments < 0) {
    throw ConfigError("[osmosis] max_epsilon_adjustments: must be non-negative");
  }
  if (s.split_parts < 2) {
    throw ConfigError("[osmosis] split_parts: must be at least 2");
  }
  if (s.dominant_property < 0 || s.dominant_property > 2) {
    throw ConfigError("[osmosis] dominant_property: out of range");
  }
}

void validate(const SuiteConfig& suite) {
  if (suite.runs < 1) throw ConfigError("[experiment] runs: must be at least 1");
  if (suite.epsilon_multipliers.empty()) {
    throw ConfigError("[experiment] epsilon_multipliers: must not be empty");
  }
  for (double m : suite.epsilon_multipliers) {
    if (m <= 0.0) {
      throw ConfigError("[experiment] epsilon_multipliers: entries must be positive");
    }
  }
  if (suite.bucket_width < 1) {
    throw ConfigError("[experiment] bucket_width: must be at least 1");
  }
}

SimulationConfig parse_config(std::istream& in) {
  SimulationConfig cfg;

  const std::map<std::string, std::map<std::string, KeyHandler>> handlers = {
      {"workload",
       {
           {"num_users", [&](const std::string& k, const std::string& v) {
              cfg.workload.num_users = static_cast<int>(parse_int(k, v)); }},
           {"services_min", [&](const std::string& k, const std::string& v) {
              cfg.workload.services_min = static_cast<int>(parse_int(k, v)); }},
           {"services_max", [&](const std::string& k, const std::string& v) {
              cfg.workload.services_max = static_cast<int>(parse_int(k, v)); }},
           {"load_min", [&](const std::string& k, const std::string& v) {
              cfg.workload.load.min = parse_double(k, v); }},
           {"load_max", [&](const std::string& k, const std::string& v) {
              cfg.workload.load.max = parse_double(k, v); }},
           {"energy_min", [&](const std::string& k, const std::string& v) {
              cfg.workload.energy.min = parse_double(k, v); }},
           {"energy_max", [&](const std::string& k, const std::string& v) {
              cfg.workload.energy.max = parse_double(k, v); }},
           {"time_min", [&](const std::string& k, const std::string& v) {
              cfg.workload.time.min = parse_double(k, v); }},
           {"time_max", [&](const std::string& k, const std::string& v) {
              cfg.workload.time.max = parse_double(k, v); }},
           {"divisible_fraction", [&](const std::string& k, const std::string& v) {
              cfg.workload.divisible_fraction = parse_double(k, v); }},
           {"seed", [&](const std::string& k, const std::string& v) {
              cfg.workload.seed = parse_uint(k, v); }},
       }},
      {"infrastructure",
       {
           {"num_osmotic", [&](const std::string& k, const std::string& v) {
              cfg.infrastructure.num_osmotic = static_cast<int>(parse_int(k, v)); }},
           {"num_public", [&](const std::string& k, const std::string& v) {
              cfg.infrastructure.num_public = static_cast<int>(parse_int(k, v)); }},
           {"load_total", [&](const std::string& k, const std::string& v) {
              cfg.infrastructure.osmotic_server.load_total = parse_double(k, v); }},
           {"energy_total", [&](const std::string& k, const std::string& v) {
              cfg.infrastructure.osmotic_server.energy_total = parse_double(k, v); }},
           {"time_total", [&](const std::string& k, const std::string& v) {
              cfg.infrastructure.osmotic_server.time_total = parse_double(k, v); }},
           {"concurrent_capacity", [&](const std::string& k, const std::string& v) {
              cfg.infrastructure.osmotic_server.concurrent_capacity =
                  static_cast<int>(parse_int(k, v)); }},
           {"public_capacity_factor", [&](const std::string& k, const std::string& v) {
              cfg.infrastructure.public_capacity_factor = parse_double(k, v); }},
           {"iteration_energy", [&](const std::string& k, const std::string& v) {
              cfg.infrastructure.iteration_energy = parse_double(k, v); }},
           {"min_processing_time", [&](const std::string& k, const std::string& v) {
              cfg.infrastructure.min_processing_time = parse_double(k, v); }},
       }},
      {"osmosis",
       {
           {"epsilon", [&](const std::string& k, const std::string& v) {
              cfg.osmosis.epsilon = parse_double(k, v); }},
           {"epsilon_reference", [&](const std::string& k, const std::string& v) {
              cfg.osmosis.epsilon_reference = parse_double(k, v); }},
           {"epsilon_multiplier", [&](const std::string& k, const std::string& v) {
              cfg.osmosis.epsilon_multiplier = parse_double(k, v); }},
           {"max_epsilon_adjustments", [&](const std::string& k, const std::string& v) {
              cfg.osmosis.max_epsilon_adjustments = static_cast<int>(parse_int(k, v)); }},
           {"enable_splitting", [&](const std::string& k, const std::string& v) {
              cfg.osmosis.enable_splitting = parse_bool(k, v); }},
           {"split_parts", [&](const std::string& k, const std::string& v) {
              cfg.osmosis.split_parts = static_cast<int>(parse_int(k, v)); }},
           {"normalize", [&](const std::string& k, const std::string& v) {
              cfg.osmosis.normalize = parse_bool(k, v); }},
           {"weights_mode", [&](const std::string& k, const std::string& v) {
              if (v == "dependent") cfg.osmosis.weights_mode = WeightMode::Dependent;
              else if (v == "independent") cfg.osmosis.weights_mode = WeightMode::Independent;
              else throw ConfigError(k + ": expected dependent or independent");
            }},
           {"dominant_property", [&](const std::string& k, const std::string& v) {
              cfg.osmosis.dominant_property = parse_property_name(k, v); }},
       }},
      {"experiment",
       {
           {"suite", [&](const std::string&, const std::string& v) {
              cfg.suite.kind = parse_suite_name(v); }},
           {"runs", [&](const std::string& k, const std::string& v) {
              cfg.suite.runs = static_cast<int>(parse_int(k, v)); }},
           {"epsilon_multipliers", [&](const std::string& k, const std::string& v) {
              cfg.suite.epsilon_multipliers = parse_double_list(k, v); }},
           {"bucket_width", [&](const std::string& k, const std::string& v) {
              cfg.suite.bucket_width = static_cast<int>(parse_int(k, v)); }},
           {"sweep_services", [&](const std::string& k, const std::string& v) {
              cfg.suite.sweep_services = parse_bool(k, v); }},
       }},
  };

  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#' || text[0] == ';') continue;
    if (text.front() == '[') {
      if (text.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
      }
      section = trim(text.substr(1, text.size() - 2));
      if (handlers.find(section) == handlers.end()) {
        throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" +
                          section + "]");
      }
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    if (section.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": key outside any section");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    const auto& section_handlers = handlers.at(section);
    const auto it = section_handlers.find(key);
    if (it == section_handlers.end()) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key [" + section +
                        "] " + key);
    }
    it->second("[" + section + "] " + key, value);
  }

  validate(cfg.workload);
  validate(cfg.infrastructure);
  validate(cfg.osmosis);
  validate(cfg.suite);
  if (cfg.workload.time.min < cfg.infrastructure.min_processing_time) {
    throw ConfigError(
        "[workload] time_min: below [infrastructure] min_processing_time");
  }
  return cfg;
}

SimulationConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::string serialize_config(const SimulationConfig& cfg) {
  std::string out;
  out += "[workload]\n";
  out += "num_users = " + std::to_string(cfg.workload.num_users) + "\n";
  out += "services_min = " + std::to_string(cfg.workload.services_min) + "\n";
  out += "services_max = " + std::to_string(cfg.workload.services_max) + "\n";
  out += "load_min = " + format_double(cfg.workload.load.min) + "\n";
  out += "load_max = " + format_double(cfg.workload.load.max) + "\n";
  out += "energy_min = " + format_double(cfg.workload.energy.min) + "\n";
  out += "energy_max = " + format_double(cfg.workload.energy.max) + "\n";
  out += "time_min = " + format_double(cfg.workload.time.min) + "\n";
  out += "time_max = " + format_double(cfg.workload.time.max) + "\n";
  out += "divisible_fraction = " + format_double(cfg.workload.divisible_fraction) + "\n";
  out += "seed = " + std::to_string(cfg.workload.seed) + "\n";
  out += "\n[infrastructure]\n";
  out += "num_osmotic = " + std::to_string(cfg.infrastructure.num_osmotic) + "\n";
  out += "num_public = " + std::to_string(cfg.infrastructure.num_public) + "\n";
  out += "load_total = " + format_double(cfg.infrastructure.osmotic_server.load_total) + "\n";
  out += "energy_total = " +
         format_double(cfg.infrastructure.osmotic_server.energy_total) + "\n";
  out += "time_total = " + format_double(cfg.infrastructure.osmotic_server.time_total) + "\n";
  out += "concurrent_capacity = " +
         std::to_string(cfg.infrastructure.osmotic_server.concurrent_capacity) + "\n";
  out += "public_capacity_factor = " +
         format_double(cfg.infrastructure.public_capacity_factor) + "\n";
  out += "iteration_energy = " + format_double(cfg.infrastructure.iteration_energy) + "\n";
  out += "min_processing_time = " +
         format_double(cfg.infrastructure.min_processing_time) + "\n";
  out += "\n[osmosis]\n";
  out += "epsilon = " + format_double(cfg.osmosis.epsilon) + "\n";
  out += "epsilon_reference = " + format_double(cfg.osmosis.epsilon_reference) + "\n";
  out += "epsilon_multiplier = " + format_double(cfg.osmosis.epsilon_multiplier) + "\n";
  out += "max_epsilon_adjustments = " +
         std::to_string(cfg.osmosis.max_epsilon_adjustments) + "\n";
  out += std::string("enable_splitting = ") +
         (cfg.osmosis.enable_splitting ? "true" : "false") + "\n";
  out += "split_parts = " + std::to_string(cfg.osmosis.split_parts) + "\n";
  out += std::string("normalize = ") + (cfg.osmosis.normalize ? "true" : "false") + "\n";
  out += std::string("weights_mode = ") +
         (cfg.osmosis.weights_mode == WeightMode::Dependent ? "dependent" : "independent") +
         "\n";
  out += std::string("dominant_property = ") + property_name(cfg.osmosis.dominant_property) +
         "\n";
  out += "\n[experiment]\n";
  out += std::string("suite = ") + suite_name(cfg.suite.kind) + "\n";
  out += "runs = " + std::to_string(cfg.suite.runs) + "\n";
  out += "epsilon_multipliers = " + format_double_list(cfg.suite.epsilon_multipliers) + "\n";
  out += "bucket_width = " + std::to_string(cfg.suite.bucket_width) + "\n";
  out += std::string("sweep_services = ") + (cfg.suite.sweep_services ? "true" : "false") +
         "\n";
  return out;
}

OsmosisConfig make_osmosis_config(const OsmosisSettings& settings,
                                  const InfrastructureConfig& infra,
                                  double epsilon_scale) {
  validate(settings);
  validate(infra);
  if (epsilon_scale <= 0.0) {
    throw ConfigError("epsilon scale must be positive");
  }
  OsmosisConfig cfg;
  cfg.epsilon_initial = settings.epsilon * epsilon_scale;
  cfg.epsilon_reference = settings.epsilon_reference;
  cfg.epsilon_multiplier = settings.epsilon_multiplier;
  cfg.max_epsilon_adjustments = settings.max_epsilon_adjustments;
  cfg.enable_splitting = settings.enable_splitting;
  cfg.split_parts = settings.split_parts;
  cfg.normalized = settings.normalize;
  cfg.independent_weights = settings.weights_mode == WeightMode::Independent;
  cfg.weights = weights_dependent(3, static_cast<std::size_t>(settings.dominant_property));
  if (settings.normalize) {
    cfg.scales = PropertyScales{infra.osmotic_server.load_total,
                                infra.osmotic_server.energy_total,
                                infra.osmotic_server.time_total};
  } else {
    cfg.scales = PropertyScales::unit();
  }
  return cfg;
}

}  // namespace osmotic
