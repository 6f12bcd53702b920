#include "doctest.h"

#include "qkz/serialize.hpp"

#include <filesystem>
#include <fstream>

using namespace qkz;

TEST_CASE("solution roundtrip is exact and canonical") {
  QkzSolution sol = solve(3, 2);
  std::string text = serialize_solution(sol);
  QkzSolution back = deserialize_solution(text);
  CHECK(back.k == sol.k);
  CHECK(back.n == sol.n);
  CHECK(back.s_exponent == sol.s_exponent);
  REQUIRE(back.components.size() == sol.components.size());
  for (size_t i = 0; i < sol.components.size(); ++i)
    CHECK(back.components[i] == sol.components[i]);
  CHECK(back.coeffs_nonnegative == sol.coeffs_nonnegative);
  CHECK(serialize_solution(back) == text);
}

TEST_CASE("tampering and version skew are rejected") {
  std::string text = serialize_solution(solve(2, 2));

  std::string bad = text;
  auto pos = bad.find("\"2/1\"");
  if (pos == std::string::npos) pos = bad.find("\"1/1\"");
  REQUIRE(pos != std::string::npos);
  bad[pos + 1] = '9';
  CHECK_THROWS_AS(deserialize_solution(bad), Error);
  try {
    deserialize_solution(bad);
  } catch (const Error& e) {
    CHECK(e.code() == errc::corrupt_cache);
  }

  std::string stale = text;
  auto vp = stale.find("\"format_version\": 1");
  REQUIRE(vp != std::string::npos);
  stale.replace(vp, 19, "\"format_version\": 2");
  try {
    deserialize_solution(stale);
  } catch (const Error& e) {
    CHECK(e.code() == errc::format_version_mismatch);
  }

  CHECK_THROWS_AS(deserialize_solution("not json at all"), Error);
  CHECK_THROWS_AS(deserialize_solution("{\"kind\": \"other\"}"), Error);
}

TEST_CASE("cache lifecycle") {
  const std::string dir = "cache-test-dir";
  std::filesystem::remove_all(dir);
  CHECK(solution_cache_name(2, 2) == "solution-k2-n2-v1.json");

  QkzSolution s1 = load_or_solve(2, 2, dir, true);
  CHECK(std::filesystem::exists(std::filesystem::path(dir) /
                                solution_cache_name(2, 2)));
  QkzSolution s2 = load_or_solve(2, 2, dir, true);
  CHECK(s2.components == s1.components);

  {
    std::ofstream f(std::filesystem::path(dir) / solution_cache_name(2, 2));
    f << "garbage";
  }
  QkzSolution s3 = load_or_solve(2, 2, dir, true);
  CHECK(s3.components == s1.components);
  /* the fallback re-wrote a valid cache */
  QkzSolution s4 = load_or_solve(2, 2, dir, true);
  CHECK(s4.components == s1.components);

  QkzSolution s5 = load_or_solve(2, 2, dir, false);
  CHECK(s5.components == s1.components);
  std::filesystem::remove_all(dir);
}
