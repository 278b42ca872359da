#include "rotlandau/run_config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace rotlandau {

void Tolerances::validate() const {
  if (!(leakage > 0.0 && residual > 0.0 && integrator > 0.0))
    throw std::runtime_error("config: all tolerances must be > 0");
}

void RunConfig::validate() const {
  physical.validate();
  tolerances.validate();
  if (truncation.n_z_max < 0 || truncation.n_rho_max < 0 || truncation.m_abs_max < 0)
    throw std::runtime_error("config: truncation bounds must be >= 0");
  if (pauli_charge != +1 && pauli_charge != -1 && pauli_charge != 0)
    throw std::runtime_error("config: pauli.charge must be +1, -1 or 0");
  if (format != "csv" && format != "json")
    throw std::runtime_error("config: format must be csv or json");
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, const std::string& key) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad numeric value for " + key + ": '" + v + "'");
  }
  if (pos != v.size())
    throw std::runtime_error("config: bad numeric value for " + key + ": '" + v + "'");
  return x;
}

long long parse_int(const std::string& v, const std::string& key) {
  std::size_t pos = 0;
  long long x = 0;
  try {
    x = std::stoll(v, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad integer value for " + key + ": '" + v + "'");
  }
  if (pos != v.size())
    throw std::runtime_error("config: bad integer value for " + key + ": '" + v + "'");
  return x;
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw std::runtime_error("config: bad boolean value for " + key + ": '" + v + "'");
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::map<std::string, std::function<void(const std::string&)>> setters{
      {"physical.b", [&](const std::string& v) { cfg.physical.b = parse_double(v, "physical.b"); }},
      {"physical.charge_sign",
       [&](const std::string& v) {
         cfg.physical.charge_sign = static_cast<int>(parse_int(v, "physical.charge_sign"));
       }},
      {"physical.theta_B",
       [&](const std::string& v) { cfg.physical.theta_B = parse_double(v, "physical.theta_B"); }},
      {"physical.omega",
       [&](const std::string& v) { cfg.physical.omega = parse_double(v, "physical.omega"); }},
      {"physical.d", [&](const std::string& v) { cfg.physical.d = parse_double(v, "physical.d"); }},
      {"truncation.n_z_max",
       [&](const std::string& v) {
         cfg.truncation.n_z_max = static_cast<int>(parse_int(v, "truncation.n_z_max"));
       }},
      {"truncation.n_rho_max",
       [&](const std::string& v) {
         cfg.truncation.n_rho_max = static_cast<int>(parse_int(v, "truncation.n_rho_max"));
       }},
      {"truncation.m_abs_max",
       [&](const std::string& v) {
         cfg.truncation.m_abs_max = static_cast<int>(parse_int(v, "truncation.m_abs_max"));
       }},
      {"truncation.include_negative_energy",
       [&](const std::string& v) {
         cfg.truncation.include_negative_energy =
             parse_bool(v, "truncation.include_negative_energy");
       }},
      {"pauli.mu_a",
       [&](const std::string& v) { cfg.pauli_mu_a = parse_double(v, "pauli.mu_a"); }},
      {"pauli.charge",
       [&](const std::string& v) {
         cfg.pauli_charge = static_cast<int>(parse_int(v, "pauli.charge"));
       }},
      {"tolerances.leakage",
       [&](const std::string& v) { cfg.tolerances.leakage = parse_double(v, "tolerances.leakage"); }},
      {"tolerances.residual",
       [&](const std::string& v) {
         cfg.tolerances.residual = parse_double(v, "tolerances.residual");
       }},
      {"tolerances.integrator",
       [&](const std::string& v) {
         cfg.tolerances.integrator = parse_double(v, "tolerances.integrator");
       }},
      {"seed",
       [&](const std::string& v) {
         cfg.seed = static_cast<unsigned long long>(parse_int(v, "seed"));
       }},
  };

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: line " + std::to_string(lineno) +
                               ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end())
      throw std::runtime_error("config: line " + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
    it->second(value);
  }

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("config: ") + e.what());
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace rotlandau
