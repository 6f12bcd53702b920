#pragma once

#include <map>
#include <string>
#include <vector>

#include "qkz/error.hpp"
#include "qkz/rational.hpp"

namespace qkz {

enum class Shape { convex, flat, concave };

const char* shape_name(Shape s);

/* Lattice word over {1..k} in which each value appears exactly n times and
   every prefix is dominance-ordered: count(j) >= count(j+1). Word positions
   are 1-based throughout this interface; length N = kn. */
class PathWord {
 public:
  PathWord(int k, int n, std::vector<int> steps);

  static PathWord min_rank_path(int k, int n); /* (1 2 ... k)^n */
  static PathWord max_rank_path(int k, int n); /* 1^n 2^n ... k^n */
  static PathWord parse(int k, int n, const std::string& text);

  int k() const { return k_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(steps_.size()); }
  int step(int pos) const; /* 1-based */
  const std::vector<int>& steps() const { return steps_; }

  long inversions() const;
  /* inversions(min_rank_path) - inversions(*this); counts the unit lozenges
     separating this word from the rank-0 word. */
  long rank() const;
  Shape classify(int i) const; /* 1 <= i <= N-1, compares steps i, i+1 */
  PathWord add_lozenge(int i) const;    /* concave swap, rank + 1 */
  PathWord remove_lozenge(int i) const; /* convex swap, rank - 1 */
  /* True when remove_lozenge(i) exists: convex and the swap keeps the
     ballot condition (removal, unlike addition, can break it). */
  bool lozenge_removable(int i) const;
  PathWord dual() const;                /* (k,n) -> (n,k) transposition */

  std::string to_string() const;

  bool operator==(const PathWord& o) const {
    return k_ == o.k_ && n_ == o.n_ && steps_ == o.steps_;
  }
  bool operator!=(const PathWord& o) const { return !(*this == o); }
  bool operator<(const PathWord& o) const { return steps_ < o.steps_; }

 private:
  PathWord swapped(int i, Shape expect) const;

  int k_, n_;
  std::vector<int> steps_;
};

/* k rows of n boxes holding 1..kn, increasing along rows and columns. */
class RectTableau {
 public:
  RectTableau(std::vector<std::vector<int>> rows);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return static_cast<int>(rows_.front().size()); }
  const std::vector<std::vector<int>>& data() const { return rows_; }
  RectTableau transpose() const;

  bool operator==(const RectTableau& o) const { return rows_ == o.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

RectTableau to_tableau(const PathWord& p);
PathWord from_tableau(const RectTableau& t);

struct Basis {
  int k = 0, n = 0;
  std::vector<PathWord> paths;
  std::map<std::string, int> index;

  int size() const { return static_cast<int>(paths.size()); }
  int index_of(const PathWord& p) const;
  const PathWord& at(int i) const;
};

Integer count_paths(int k, int n);

/* All lattice words, ordered by (rank ascending, lex ascending). The rank-0
   word comes first and the unique rank-maximal word last. */
Basis enumerate(int k, int n, int kn_cap = 14);

/* Sub-basis of words beginning 1, 2, ..., j, in the same order. */
Basis enumerate_with_prefix(int k, int n, int j, int kn_cap = 14);

}  // namespace qkz
