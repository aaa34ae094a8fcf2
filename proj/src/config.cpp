#include "splitdg/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "splitdg/errors.hpp"
#include "splitdg/sbp_basis.hpp"

namespace splitdg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> out;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const std::string_view item = trim(value.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

template <class T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto res = std::from_chars(value.data(), end, out);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw ConfigError("invalid value '" + std::string(value) + "' for key " + std::string(key));
  }
  return out;
}

}  // namespace

void apply_config_value(RunConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "case") {
    cfg.case_id = parse_case(value);
  } else if (key == "N") {
    cfg.degree = parse_number<int>(key, value);
  } else if (key == "elements") {
    cfg.elements = parse_number<int>(key, value);
  } else if (key == "scheme") {
    cfg.scheme = parse_flux_scheme(value);
  } else if (key == "stab") {
    if (value == "paired") {
      cfg.stab.reset();
    } else {
      cfg.stab = parse_stabilization(value);
    }
  } else if (key == "cfl") {
    cfg.cfl = parse_number<double>(key, value);
  } else if (key == "t_end") {
    cfg.t_end = parse_number<double>(key, value);
  } else if (key == "output_interval") {
    cfg.output_interval = parse_number<double>(key, value);
  } else if (key == "gamma") {
    cfg.gamma = parse_number<double>(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "threads") {
    cfg.threads = parse_number<int>(key, value);
  } else if (key == "output") {
    cfg.output = std::string(value);
  } else if (key == "grids") {
    cfg.grids.clear();
    for (auto item : split_list(value)) cfg.grids.push_back(parse_number<int>(key, item));
  } else if (key == "degrees") {
    cfg.degrees.clear();
    for (auto item : split_list(value)) cfg.degrees.push_back(parse_number<int>(key, item));
  } else if (key == "schemes") {
    cfg.schemes.clear();
    for (auto item : split_list(value)) cfg.schemes.push_back(parse_flux_scheme(item));
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void RunConfig::validate() const {
  auto check_degree = [](int n) {
    if (n < 1 || n > PolyBasis::kMaxDegree) {
      throw ConfigError("N must be in [1, " + std::to_string(PolyBasis::kMaxDegree) + "], got " +
                        std::to_string(n));
    }
  };
  check_degree(degree);
  for (int n : degrees) check_degree(n);
  if (elements < 1) throw ConfigError("elements must be >= 1");
  for (int g : grids) {
    if (g < 1) throw ConfigError("grid sizes must be >= 1");
  }
  if (!(cfl > 0.0)) throw ConfigError("cfl must be positive");
  if (!(t_end > 0.0)) throw ConfigError("t_end must be positive");
  if (!(output_interval > 0.0)) throw ConfigError("output_interval must be positive");
  if (!(gamma > 1.0)) throw ConfigError("gamma must exceed 1");
  if (threads < 0) throw ConfigError("threads must be >= 0");
}

RunConfig parse_run_config(std::string_view text) {
  RunConfig cfg;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
    }
    apply_config_value(cfg, key, value);
  }
  cfg.validate();
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

}  // namespace splitdg
