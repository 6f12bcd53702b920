#pragma once

#include <string>

#include "qkz/qkzsolver.hpp"

namespace qkz {

inline constexpr int kFormatVersion = 1;

/* Canonical JSON: graded-lex term order, "p/q" coefficients, and a content
   hash over the payload. Deterministic byte-for-byte for a given solution. */
std::string serialize_solution(const QkzSolution& sol);

/* Validates the format version (FormatVersionMismatch) and the content hash
   plus structural integrity (CorruptCache), then rebuilds the solution. */
QkzSolution deserialize_solution(const std::string& text);

std::string solution_cache_name(int k, int n);

/* QKZ_CACHE_DIR if set, else $HOME/.cache/qkz, else .qkz-cache. */
std::string default_cache_dir();

void write_solution_cache(const QkzSolution& sol, const std::string& dir);

/* Cached solve: any cache problem (missing, stale version, corruption) falls
   back to a fresh solve, which is then re-cached. */
QkzSolution load_or_solve(int k, int n, const std::string& dir,
                          bool use_cache, int kn_cap = 14);

}  // namespace qkz
