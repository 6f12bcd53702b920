#include "qkz/serialize.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qkz {

namespace {

using nlohmann::json;

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

json payload_of(const QkzSolution& sol) {
  json j;
  j["kind"] = "qkz-solution";
  j["format_version"] = kFormatVersion;
  j["k"] = sol.k;
  j["n"] = sol.n;
  j["s_exponent"] = sol.s_exponent;
  json basis = json::array();
  for (int i = 0; i < sol.basis().size(); ++i)
    basis.push_back(sol.basis().at(i).to_string());
  j["basis"] = std::move(basis);
  json comps = json::array();
  for (const auto& comp : sol.components) {
    json terms = json::array();
    for (const auto& [m, c] : comp.terms()) {
      json coeff = json::array();
      for (const auto& [qe, qc] : c.terms())
        coeff.push_back(json::array({qe, rat_to_string(qc)}));
      terms.push_back(json::array({json(m.e), std::move(coeff)}));
    }
    comps.push_back(std::move(terms));
  }
  j["components"] = std::move(comps);
  return j;
}

void check(bool ok, const std::string& what) {
  require(ok, errc::corrupt_cache, what);
}

}  // namespace

std::string serialize_solution(const QkzSolution& sol) {
  json j = payload_of(sol);
  j["hash"] = fnv1a_hex(j.dump());
  return j.dump(1) + "\n";
}

QkzSolution deserialize_solution(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  check(!j.is_discarded() && j.is_object(), "not a JSON object");
  check(j.value("kind", "") == "qkz-solution", "wrong payload kind");
  check(j.contains("format_version") && j["format_version"].is_number_integer(),
        "missing format version");
  require(j["format_version"] == kFormatVersion, errc::format_version_mismatch,
          "cache written by format version " +
              j["format_version"].dump());

  check(j.contains("hash") && j["hash"].is_string(), "missing content hash");
  const std::string stored = j["hash"];
  j.erase("hash");
  check(fnv1a_hex(j.dump()) == stored, "content hash mismatch");

  check(j["k"].is_number_integer() && j["n"].is_number_integer() &&
            j["s_exponent"].is_number_integer(),
        "bad size fields");
  QkzSolution sol;
  sol.k = j["k"];
  sol.n = j["n"];
  sol.s_exponent = j["s_exponent"];
  sol.rep = build(sol.k, sol.n);
  require(sol.s_exponent == 2 * (sol.k + 1), errc::corrupt_cache,
          "boundary exponent does not match the sizes");

  const json& basis = j["basis"];
  check(basis.is_array() &&
            static_cast<int>(basis.size()) == sol.basis().size(),
        "basis size mismatch");
  for (int i = 0; i < sol.basis().size(); ++i)
    check(basis[i] == sol.basis().at(i).to_string(), "basis order mismatch");

  const int nv = sol.nvars();
  const json& comps = j["components"];
  check(comps.is_array() && comps.size() == basis.size(),
        "component count mismatch");
  sol.coeffs_nonnegative = true;
  for (const json& terms : comps) {
    check(terms.is_array(), "component is not a term list");
    PolyL p(nv);
    for (const json& t : terms) {
      check(t.is_array() && t.size() == 2 && t[0].is_array() &&
                static_cast<int>(t[0].size()) == nv && t[1].is_array(),
            "malformed term");
      std::vector<int32_t> e;
      for (const json& x : t[0]) {
        check(x.is_number_integer(), "non-integer exponent");
        e.push_back(x.get<int32_t>());
      }
      LaurentQ c;
      for (const json& qt : t[1]) {
        check(qt.is_array() && qt.size() == 2 && qt[0].is_number_integer() &&
                  qt[1].is_string(),
              "malformed coefficient");
        const Rational qc = rat_from_string(qt[1].get<std::string>());
        check(qc != 0, "stored zero coefficient");
        if (qc < 0) sol.coeffs_nonnegative = false;
        c.set_term(qt[0].get<int>(), qc);
      }
      check(!c.is_zero(), "stored zero term");
      p.add_term(Monomial(std::move(e)), c);
    }
    sol.components.push_back(std::move(p));
  }
  return sol;
}

std::string solution_cache_name(int k, int n) {
  return "solution-k" + std::to_string(k) + "-n" + std::to_string(n) + "-v" +
         std::to_string(kFormatVersion) + ".json";
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("QKZ_CACHE_DIR"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::string(home) + "/.cache/qkz";
  return ".qkz-cache";
}

void write_solution_cache(const QkzSolution& sol, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  require(!ec, errc::usage_error, "cache dir not writable: " + dir);
  const fs::path path = fs::path(dir) / solution_cache_name(sol.k, sol.n);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), errc::usage_error, "cannot write " + path.string());
  out << serialize_solution(sol);
  require(out.good(), errc::usage_error, "short write to " + path.string());
}

QkzSolution load_or_solve(int k, int n, const std::string& dir, bool use_cache,
                          int kn_cap) {
  namespace fs = std::filesystem;
  if (use_cache) {
    const fs::path path = fs::path(dir) / solution_cache_name(k, n);
    std::ifstream in(path, std::ios::binary);
    if (in.good()) {
      std::ostringstream buf;
      buf << in.rdbuf();
      try {
        QkzSolution sol = deserialize_solution(buf.str());
        if (sol.k == k && sol.n == n) return sol;
      } catch (const Error&) {
        /* corrupt or stale cache; fall through to a fresh solve */
      }
    }
  }
  QkzSolution sol = solve(k, n, kn_cap);
  if (use_cache) write_solution_cache(sol, dir);
  return sol;
}

}  // namespace qkz
