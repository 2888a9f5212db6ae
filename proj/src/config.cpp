#include "entneg/config.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace entneg {

namespace {

struct Key {
  std::string section;  // "" for top level
  std::string name;
  bool operator<(const Key& other) const {
    return std::tie(section, name) < std::tie(other.section, other.name);
  }
  std::string path() const {
    return section.empty() ? name : "[" + section + "] " + name;
  }
};

using RawConfig = std::map<Key, std::string>;

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument("config: " + message);
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

RawConfig parse_raw(const std::string& text) {
  RawConfig raw;
  std::istringstream stream(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        fail("line " + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail("line " + std::to_string(lineno) + ": expected key = value");
    const Key key{section, trim(line.substr(0, eq))};
    if (key.name.empty())
      fail("line " + std::to_string(lineno) + ": empty key");
    if (!raw.emplace(key, trim(line.substr(eq + 1))).second)
      fail("duplicate key " + key.path());
  }
  return raw;
}

// (section, key) pairs accepted for each scenario kind.
std::set<Key> schema_for(ScenarioKind kind) {
  std::set<Key> keys{{"", "scenario"},
                     {"model", "epsilon0"},
                     {"model", "n0"},
                     {"model", "beta"},
                     {"sweep", "variable"},
                     {"sweep", "scale"},
                     {"sweep", "min"},
                     {"sweep", "max"},
                     {"sweep", "count"},
                     {"sweep", "values"},
                     {"output", "M"}};
  const std::string bath =
      kind == ScenarioKind::junction ? "junction" : "bath";
  for (const char* name : {"gamma", "W", "W_over_gamma", "K"})
    keys.insert({bath, name});
  if (kind == ScenarioKind::junction) {
    for (const char* name : {"mu_bar", "V", "a"}) keys.insert({bath, name});
  } else {
    keys.insert({bath, "mu"});
  }
  if (kind == ScenarioKind::equilibrium_canonical) {
    keys.insert({"model", "canonical_N"});
    keys.insert({"output", "compare_gc"});
  }
  if (kind == ScenarioKind::relaxation) keys.insert({"model", "delta"});
  if (kind == ScenarioKind::relaxation || kind == ScenarioKind::junction) {
    for (const char* name : {"scale", "min", "max", "count", "values"})
      keys.insert({"time", name});
    if (kind == ScenarioKind::junction) keys.insert({"time", "eval"});
  }
  return keys;
}

double parse_double(const Key& key, const std::string& value) {
  char* end = nullptr;
  const double parsed = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0')
    fail(key.path() + ": expected a number, got '" + value + "'");
  return parsed;
}

int parse_int(const Key& key, const std::string& value) {
  const double parsed = parse_double(key, value);
  const int as_int = static_cast<int>(parsed);
  if (parsed != as_int) fail(key.path() + ": expected an integer");
  return as_int;
}

bool parse_bool(const Key& key, const std::string& value) {
  if (value == "true" || value == "on" || value == "1") return true;
  if (value == "false" || value == "off" || value == "0") return false;
  fail(key.path() + ": expected true/false");
}

std::vector<double> parse_values(const Key& key, const std::string& value) {
  std::vector<double> out;
  std::string item;
  std::istringstream stream(value);
  while (std::getline(stream, item, ',')) {
    std::istringstream inner(item);
    std::string token;
    while (inner >> token) out.push_back(parse_double(key, token));
  }
  if (out.empty()) fail(key.path() + ": expected at least one number");
  return out;
}

ScenarioKind parse_kind(const std::string& value) {
  if (value == "equilibrium-gc") return ScenarioKind::equilibrium_gc;
  if (value == "equilibrium-canonical") return ScenarioKind::equilibrium_canonical;
  if (value == "relax") return ScenarioKind::relaxation;
  if (value == "junction") return ScenarioKind::junction;
  fail("scenario: unknown kind '" + value +
       "' (expected equilibrium-gc, equilibrium-canonical, relax, or junction)");
}

SweepVariable parse_variable(const std::string& value) {
  if (value == "gamma") return SweepVariable::gamma;
  if (value == "mu") return SweepVariable::mu;
  if (value == "V") return SweepVariable::voltage;
  if (value == "a") return SweepVariable::asymmetry;
  if (value == "mu_bar") return SweepVariable::mu_bar;
  if (value == "time") return SweepVariable::time;
  fail("[sweep] variable: unknown variable '" + value + "'");
}

GridSpec parse_grid(const RawConfig& raw, const std::string& section) {
  GridSpec grid;
  bool any = false;
  auto get = [&](const char* name) -> const std::string* {
    const auto it = raw.find({section, name});
    if (it == raw.end()) return nullptr;
    any = true;
    return &it->second;
  };
  const std::string* scale = get("scale");
  const std::string* min = get("min");
  const std::string* max = get("max");
  const std::string* count = get("count");
  const std::string* values = get("values");
  if (!any) return grid;

  if (scale) {
    if (*scale == "linear") grid.scale = GridSpec::Scale::linear;
    else if (*scale == "log") grid.scale = GridSpec::Scale::log;
    else if (*scale == "list") grid.scale = GridSpec::Scale::list;
    else fail("[" + section + "] scale: expected linear, log, or list");
  } else if (values) {
    grid.scale = GridSpec::Scale::list;
  }

  if (grid.scale == GridSpec::Scale::list) {
    if (!values) fail("[" + section + "] values is required for a list grid");
    if (min || max || count)
      fail("[" + section + "] values excludes min/max/count");
    grid.values = parse_values({section, "values"}, *values);
  } else {
    if (values) fail("[" + section + "] values requires scale = list");
    if (!min || !count)
      fail("[" + section + "] grid needs min and count (and max unless count = 1)");
    grid.min = parse_double({section, "min"}, *min);
    grid.count = parse_int({section, "count"}, *count);
    if (grid.count > 1 && !max) fail("[" + section + "] grid needs max");
    grid.max = max ? parse_double({section, "max"}, *max) : grid.min;
  }
  return grid;
}

ScenarioConfig from_raw(const RawConfig& raw) {
  const auto kind_it = raw.find({"", "scenario"});
  if (kind_it == raw.end()) fail("missing top-level key 'scenario'");
  const ScenarioKind kind = parse_kind(kind_it->second);

  const auto schema = schema_for(kind);
  for (const auto& [key, value] : raw)
    if (!schema.contains(key))
      fail(key.path() + ": unknown key for scenario " + to_string(kind));

  ScenarioConfig config;
  config.kind = kind;
  const std::string bath =
      kind == ScenarioKind::junction ? "junction" : "bath";

  auto get = [&](const std::string& section,
                 const std::string& name) -> const std::string* {
    const auto it = raw.find({section, name});
    return it == raw.end() ? nullptr : &it->second;
  };
  auto get_double = [&](const std::string& section, const std::string& name,
                        double fallback) {
    const std::string* v = get(section, name);
    return v ? parse_double({section, name}, *v) : fallback;
  };

  config.epsilon0 = get_double("model", "epsilon0", 0.0);
  config.n0 = get_double("model", "n0", 0.0);
  config.beta = get_double("model", "beta", 1.0);
  if (const std::string* v = get("model", "canonical_N"))
    config.canonical_n = parse_int({"model", "canonical_N"}, *v);
  if (const std::string* v = get("model", "delta"))
    config.delta = parse_double({"model", "delta"}, *v);

  config.gamma = get_double(bath, "gamma", 0.0);
  if (const std::string* v = get(bath, "W"))
    config.bandwidth = parse_double({bath, "W"}, *v);
  if (const std::string* v = get(bath, "W_over_gamma"))
    config.bandwidth_over_gamma = parse_double({bath, "W_over_gamma"}, *v);
  if (const std::string* v = get(bath, "K"))
    config.level_count = parse_int({bath, "K"}, *v);
  if (const std::string* v = get(bath, "mu"))
    config.mu = parse_double({bath, "mu"}, *v);
  config.mu_bar = get_double(bath, "mu_bar", 0.0);
  config.voltage = get_double(bath, "V", 0.0);
  config.asymmetry = get_double(bath, "a", 0.0);

  if (const std::string* v = get("sweep", "variable"))
    config.sweep_variable = parse_variable(*v);
  config.sweep_grid = parse_grid(raw, "sweep");

  GridSpec time = parse_grid(raw, "time");
  if (time.count > 0 || !time.values.empty()) config.time_grid = time;
  config.eval_time = get_double("time", "eval", 10.0);

  if (const std::string* v = get("output", "M"))
    config.cutoff = parse_int({"output", "M"}, *v);
  if (const std::string* v = get("output", "compare_gc"))
    config.compare_gc = parse_bool({"output", "compare_gc"}, *v);

  config.validate();
  return config;
}

void apply_override(RawConfig& raw, const std::string& entry,
                    ScenarioKind kind) {
  const auto eq = entry.find('=');
  if (eq == std::string::npos)
    fail("override '" + entry + "': expected key=value");
  std::string path = trim(entry.substr(0, eq));
  const std::string value = trim(entry.substr(eq + 1));

  Key key;
  const auto dot = path.find('.');
  if (dot != std::string::npos) {
    key = {trim(path.substr(0, dot)), trim(path.substr(dot + 1))};
    if (!schema_for(kind).contains(key))
      fail("override " + key.path() + ": unknown key for scenario " +
           to_string(kind));
  } else {
    // Bare key: resolve against the schema; must be unambiguous.
    std::vector<Key> matches;
    for (const Key& candidate : schema_for(kind))
      if (candidate.name == path) matches.push_back(candidate);
    if (matches.empty())
      fail("override '" + path + "': unknown key for scenario " +
           to_string(kind));
    if (matches.size() > 1)
      fail("override '" + path + "' is ambiguous; qualify as section.key");
    key = matches.front();
  }

  // Grid keys come in two exclusive families; an override switching family
  // displaces the other one's keys from the file.
  if (key.section == "sweep" || key.section == "time") {
    if (key.name == "values") {
      for (const char* name : {"min", "max", "count"})
        raw.erase({key.section, name});
    } else if (key.name == "min" || key.name == "max" || key.name == "count") {
      raw.erase({key.section, "values"});
    }
  }
  raw[key] = value;
}

}  // namespace

ScenarioConfig parse_config(const std::string& text,
                            const std::vector<std::string>& overrides) {
  RawConfig raw = parse_raw(text);
  if (!overrides.empty()) {
    const auto kind_it = raw.find({"", "scenario"});
    if (kind_it == raw.end()) fail("missing top-level key 'scenario'");
    const ScenarioKind kind = parse_kind(kind_it->second);
    for (const std::string& entry : overrides) apply_override(raw, entry, kind);
  }
  return from_raw(raw);
}

ScenarioConfig parse_config_file(const std::string& path,
                                 const std::vector<std::string>& overrides) {
  std::ifstream file(path);
  if (!file) fail("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str(), overrides);
}

std::string format_double(double value) {
  char buffer[64];
  for (int precision = 6; precision <= 17; ++precision) {
    std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
    if (std::strtod(buffer, nullptr) == value) break;
  }
  return buffer;
}

namespace {

void echo_grid(std::ostringstream& out, const GridSpec& grid) {
  switch (grid.scale) {
    case GridSpec::Scale::list:
      out << "scale = list\n" << "values =";
      for (double v : grid.values) out << ' ' << format_double(v);
      out << '\n';
      break;
    case GridSpec::Scale::linear:
    case GridSpec::Scale::log:
      out << "scale = " << (grid.scale == GridSpec::Scale::log ? "log" : "linear")
          << '\n';
      out << "min = " << format_double(grid.min) << '\n';
      out << "max = " << format_double(grid.max) << '\n';
      out << "count = " << grid.count << '\n';
      break;
  }
}

}  // namespace

std::string config_echo(const ScenarioConfig& config) {
  std::ostringstream out;
  const bool junction = config.kind == ScenarioKind::junction;
  const bool canonical = config.kind == ScenarioKind::equilibrium_canonical;
  const bool relax = config.kind == ScenarioKind::relaxation;

  out << "scenario = " << to_string(config.kind) << "\n\n";

  out << "[model]\n";
  out << "epsilon0 = " << format_double(config.epsilon0) << '\n';
  out << "n0 = " << format_double(config.n0) << '\n';
  out << "beta = " << format_double(config.beta) << '\n';
  if (canonical) out << "canonical_N = " << config.resolved_canonical_n() << '\n';
  if (relax && config.delta)
    out << "delta = " << format_double(*config.delta) << '\n';
  out << '\n';

  out << (junction ? "[junction]\n" : "[bath]\n");
  out << "gamma = " << format_double(config.gamma) << '\n';
  if (config.bandwidth_over_gamma)
    out << "W_over_gamma = " << format_double(*config.bandwidth_over_gamma) << '\n';
  else
    out << "W = " << format_double(config.bandwidth.value_or(0.0)) << '\n';
  out << "K = " << config.resolved_level_count() << '\n';
  if (junction) {
    out << "mu_bar = " << format_double(config.mu_bar) << '\n';
    out << "V = " << format_double(config.voltage) << '\n';
    out << "a = " << format_double(config.asymmetry) << '\n';
  } else {
    out << "mu = " << format_double(config.resolved_mu(config.gamma)) << '\n';
  }
  out << '\n';

  const bool time_series =
      relax || (junction && config.sweep_variable == SweepVariable::time);
  if (!relax && config.sweep_variable) {
    out << "[sweep]\n";
    out << "variable = " << to_string(*config.sweep_variable) << '\n';
    if (!time_series) echo_grid(out, config.sweep_grid);
    out << '\n';
  }
  if (relax || junction) {
    out << "[time]\n";
    if (time_series) echo_grid(out, config.resolved_time_grid());
    if (junction && !time_series)
      out << "eval = " << format_double(config.eval_time) << '\n';
    out << '\n';
  }

  out << "[output]\n";
  out << "M = " << config.cutoff << '\n';
  if (canonical) out << "compare_gc = " << (config.compare_gc ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace entneg
