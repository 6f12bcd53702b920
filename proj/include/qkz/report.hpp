#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qkz {

inline constexpr const char* tool_version = "1.0.0";

struct CheckResult {
  std::string name;
  std::string mode;    /* symbolic | multipoint | exact */
  std::string status;  /* pass | fail | recorded | unsupported */
  std::string witness; /* value, counterexample, or bound arithmetic */
};

/* Deterministic machine-readable result of a verification pass. Contains no
   timestamps or environment data so identical runs render identical bytes. */
struct Report {
  std::string tool;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<CheckResult> checks;

  explicit Report(std::string tool_name = "") : tool(std::move(tool_name)) {}

  void set(const std::string& key, const std::string& value);
  void add(const std::string& name, const std::string& mode,
           const std::string& status, const std::string& witness = "");
  void add_pass(const std::string& name, const std::string& mode,
                const std::string& witness = "");
  void add_fail(const std::string& name, const std::string& mode,
                const std::string& witness = "");
  /* Convenience for equality-style checks. */
  void add_check(const std::string& name, const std::string& mode, bool ok,
                 const std::string& witness = "");
  void add_recorded(const std::string& name, const std::string& mode,
                    const std::string& witness = "");
  void merge(const Report& other);

  bool all_passed() const; /* no "fail" entries */
  int exit_code() const;   /* 0 pass/recorded, 1 otherwise */
  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace qkz
