#include "qkz/report.hpp"

#include <sstream>

#include "json.hpp"

namespace qkz {

void Report::set(const std::string& key, const std::string& value) {
  config.emplace_back(key, value);
}

void Report::add(const std::string& name, const std::string& mode,
                 const std::string& status, const std::string& witness) {
  checks.push_back({name, mode, status, witness});
}

void Report::add_pass(const std::string& name, const std::string& mode,
                      const std::string& witness) {
  add(name, mode, "pass", witness);
}

void Report::add_fail(const std::string& name, const std::string& mode,
                      const std::string& witness) {
  add(name, mode, "fail", witness);
}

void Report::add_check(const std::string& name, const std::string& mode,
                       bool ok, const std::string& witness) {
  add(name, mode, ok ? "pass" : "fail", witness);
}

void Report::add_recorded(const std::string& name, const std::string& mode,
                          const std::string& witness) {
  add(name, mode, "recorded", witness);
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

int Report::exit_code() const { return all_passed() ? 0 : 1; }

std::string Report::to_text() const {
  std::ostringstream os;
  os << "== " << tool << " (version " << tool_version << ")\n";
  for (const auto& [k, v] : config) os << "   " << k << " = " << v << "\n";
  for (const auto& c : checks) {
    os << "[" << c.status << "] " << c.name << " (" << c.mode << ")";
    if (!c.witness.empty()) os << ": " << c.witness;
    os << "\n";
  }
  os << (all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = tool;
  j["version"] = tool_version;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  j["config"] = cfg;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["mode"] = c.mode;
    e["status"] = c.status;
    e["witness"] = c.witness;
    j["checks"].push_back(e);
  }
  j["all_passed"] = all_passed();
  return j.dump(2) + "\n";
}

}  // namespace qkz
