#include "doctest.h"

#include "qkz/pathword.hpp"

#include <string>
#include <vector>

using namespace qkz;

static std::vector<std::string> words(const Basis& b) {
  std::vector<std::string> out;
  for (const auto& p : b.paths) out.push_back(p.to_string());
  return out;
}

TEST_CASE("path counts") {
  /* k = 2 column is the Catalan numbers */
  std::vector<long> catalan = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) CHECK(count_paths(2, n) == catalan[n - 1]);
  CHECK(count_paths(1, 7) == 1);
  CHECK(count_paths(7, 1) == 1);
  CHECK(count_paths(3, 2) == 5);
  CHECK(count_paths(3, 3) == 42);
  CHECK(count_paths(4, 2) == 14);
  CHECK(count_paths(5, 2) == 42);
  CHECK(count_paths(3, 4) == 462);
  /* transposition symmetry of the count */
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 4; ++n) CHECK(count_paths(k, n) == count_paths(n, k));
}

TEST_CASE("enumeration order is rank then lex") {
  Basis b = enumerate(3, 2);
  CHECK(words(b) == std::vector<std::string>{"123123", "121323", "112323",
                                             "121233", "112233"});
  std::vector<long> ranks;
  for (const auto& p : b.paths) ranks.push_back(p.rank());
  CHECK(ranks == std::vector<long>{0, 1, 2, 2, 3});
  CHECK(b.paths.front() == PathWord::min_rank_path(3, 2));
  CHECK(b.paths.back() == PathWord::max_rank_path(3, 2));
  CHECK(b.index_of(PathWord::parse(3, 2, "112323")) == 2);
  CHECK(b.at(4).to_string() == "112233");

  for (auto [k, n] : {std::pair{2, 3}, {2, 4}, {4, 2}, {3, 3}}) {
    Basis e = enumerate(k, n);
    CHECK(Integer(e.size()) == count_paths(k, n));
    for (int i = 1; i < e.size(); ++i) {
      const auto &a = e.at(i - 1), &c = e.at(i);
      CHECK((a.rank() < c.rank() || (a.rank() == c.rank() && a < c)));
    }
  }
  CHECK(PathWord::max_rank_path(2, 2).rank() == 1);
  CHECK_THROWS_AS(enumerate(4, 4), Error); /* kn = 16 over the default cap */
}

TEST_CASE("parsing rejects malformed words") {
  CHECK(PathWord::parse(3, 2, "121323").steps() ==
        std::vector<int>{1, 2, 1, 3, 2, 3});
  CHECK_THROWS_AS(PathWord::parse(2, 2, "112"), Error);   /* short */
  CHECK_THROWS_AS(PathWord::parse(2, 2, "1133"), Error);  /* letter > k */
  CHECK_THROWS_AS(PathWord::parse(2, 2, "1112"), Error);  /* multiplicity */
  CHECK_THROWS_AS(PathWord::parse(2, 2, "2112"), Error);  /* ballot prefix */
  CHECK_THROWS_AS(PathWord::parse(2, 2, "1x22"), Error);
}

TEST_CASE("duality is the tableau transpose and an involution") {
  Basis b = enumerate(3, 2);
  for (const auto& p : b.paths) {
    PathWord d = p.dual();
    CHECK(d.k() == 2);
    CHECK(d.n() == 3);
    CHECK(d.dual() == p);
    CHECK(d == from_tableau(to_tableau(p).transpose()));
  }
  /* duality swaps the extremal paths */
  CHECK(PathWord::max_rank_path(3, 2).dual() == PathWord::min_rank_path(2, 3));
  CHECK(PathWord::min_rank_path(3, 2).dual() == PathWord::max_rank_path(2, 3));

  RectTableau t = to_tableau(PathWord::parse(3, 2, "123123"));
  CHECK(t.data() == std::vector<std::vector<int>>{{1, 4}, {2, 5}, {3, 6}});
  CHECK(from_tableau(t) == PathWord::parse(3, 2, "123123"));
}

TEST_CASE("lozenge moves") {
  PathWord pf = PathWord::parse(3, 2, "123123");
  CHECK(pf.add_lozenge(3).to_string() == "121323");
  CHECK(pf.add_lozenge(3).rank() == pf.rank() + 1);
  CHECK(pf.add_lozenge(3).remove_lozenge(3) == pf);

  /* adding needs a concave corner, removing a convex one that keeps the
     ballot condition */
  CHECK_THROWS_AS(PathWord::parse(3, 2, "112233").add_lozenge(2), Error);
  CHECK_THROWS_AS(pf.remove_lozenge(1), Error);
  CHECK(!pf.lozenge_removable(1));
  PathWord mid = PathWord::parse(3, 2, "121323");
  CHECK(!mid.lozenge_removable(2)); /* concave there */
  CHECK(mid.lozenge_removable(3));
  CHECK(mid.remove_lozenge(3) == pf);

  for (const auto& p : enumerate(3, 2).paths)
    for (int i = 1; i < p.length(); ++i)
      if (p.classify(i) == Shape::concave)
        CHECK(p.add_lozenge(i).remove_lozenge(i) == p);
}

TEST_CASE("shape classification") {
  PathWord w = PathWord::parse(3, 2, "112233");
  CHECK(w.classify(2) == Shape::convex);
  CHECK(w.classify(1) == Shape::flat);
  CHECK(PathWord::parse(3, 2, "123123").classify(3) == Shape::concave);
  CHECK(std::string(shape_name(Shape::convex)) == "convex");
  CHECK(std::string(shape_name(Shape::flat)) == "flat");
  CHECK(std::string(shape_name(Shape::concave)) == "concave");
  CHECK_THROWS_AS(w.classify(0), Error);
  CHECK_THROWS_AS(w.classify(6), Error);
  CHECK(w.step(1) == 1);
  CHECK(w.step(6) == 3);
  CHECK_THROWS_AS(w.step(7), Error);
}

TEST_CASE("prefix-restricted enumeration") {
  Basis pre = enumerate_with_prefix(3, 2, 2);
  CHECK(words(pre) == std::vector<std::string>{"123123", "121323", "121233"});
  Basis all = enumerate_with_prefix(3, 2, 0);
  CHECK(words(all) == words(enumerate(3, 2)));
  Basis one = enumerate_with_prefix(2, 3, 1);
  CHECK(one.size() == count_paths(2, 3));
  for (const auto& p : one.paths) CHECK(p.step(1) == 1);
  /* prefix length is capped at k-1 */
  CHECK_THROWS_AS(enumerate_with_prefix(2, 3, 2), Error);
}
