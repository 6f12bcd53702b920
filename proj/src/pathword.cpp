#include "qkz/pathword.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qkz {

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::convex: return "convex";
    case Shape::flat: return "flat";
    case Shape::concave: return "concave";
  }
  return "?";
}

PathWord::PathWord(int k, int n, std::vector<int> steps)
    : k_(k), n_(n), steps_(std::move(steps)) {
  require(k_ >= 1 && n_ >= 1, errc::invalid_word, "parameters must be >= 1");
  require(static_cast<int>(steps_.size()) == k_ * n_, errc::invalid_word,
          "word length must be k*n");
  std::vector<int> counts(k_ + 1, 0);
  for (int v : steps_) {
    require(v >= 1 && v <= k_, errc::invalid_word,
            "step value outside 1..k");
    ++counts[v];
    if (v > 1)
      require(counts[v] <= counts[v - 1], errc::ballot_violation,
              "prefix count of " + std::to_string(v) + " exceeds that of " +
                  std::to_string(v - 1));
  }
  for (int v = 1; v <= k_; ++v)
    require(counts[v] == n_, errc::invalid_word,
            "step value " + std::to_string(v) + " must occur n times");
}

PathWord PathWord::min_rank_path(int k, int n) {
  std::vector<int> s;
  s.reserve(static_cast<size_t>(k) * n);
  for (int rep = 0; rep < n; ++rep)
    for (int v = 1; v <= k; ++v) s.push_back(v);
  return PathWord(k, n, std::move(s));
}

PathWord PathWord::max_rank_path(int k, int n) {
  std::vector<int> s;
  s.reserve(static_cast<size_t>(k) * n);
  for (int v = 1; v <= k; ++v)
    for (int rep = 0; rep < n; ++rep) s.push_back(v);
  return PathWord(k, n, std::move(s));
}

PathWord PathWord::parse(int k, int n, const std::string& text) {
  std::vector<int> s;
  if (text.find('.') != std::string::npos) {
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, '.')) {
      require(!part.empty(), errc::invalid_word, "empty step in " + text);
      s.push_back(std::stoi(part));
    }
  } else {
    for (char c : text) {
      require(c >= '1' && c <= '9', errc::invalid_word,
              std::string("bad step character '") + c + "'");
      s.push_back(c - '0');
    }
  }
  return PathWord(k, n, std::move(s));
}

int PathWord::step(int pos) const {
  require(pos >= 1 && pos <= length(), errc::index_out_of_range,
          "step position " + std::to_string(pos));
  return steps_[pos - 1];
}

long PathWord::inversions() const {
  long inv = 0;
  for (size_t a = 0; a < steps_.size(); ++a)
    for (size_t b = a + 1; b < steps_.size(); ++b)
      if (steps_[a] > steps_[b]) ++inv;
  return inv;
}

long PathWord::rank() const {
  return min_rank_path(k_, n_).inversions() - inversions();
}

Shape PathWord::classify(int i) const {
  require(i >= 1 && i <= length() - 1, errc::index_out_of_range,
          "local shape position " + std::to_string(i));
  int a = steps_[i - 1], b = steps_[i];
  if (a < b) return Shape::convex;
  if (a == b) return Shape::flat;
  return Shape::concave;
}

PathWord PathWord::swapped(int i, Shape expect) const {
  require(classify(i) == expect, errc::shape_mismatch,
          std::string("position ") + std::to_string(i) + " of " +
              to_string() + " is not " + shape_name(expect));
  std::vector<int> s = steps_;
  std::swap(s[i - 1], s[i]);
  return PathWord(k_, n_, std::move(s)); /* re-checks the ballot condition */
}

PathWord PathWord::add_lozenge(int i) const {
  return swapped(i, Shape::concave);
}

PathWord PathWord::remove_lozenge(int i) const {
  return swapped(i, Shape::convex);
}

bool PathWord::lozenge_removable(int i) const {
  if (classify(i) != Shape::convex) return false;
  /* Only the prefix ending at i changes; re-check the counts there. */
  std::vector<int> counts(k_ + 1, 0);
  for (int pos = 1; pos <= i; ++pos) ++counts[pos == i ? steps_[i] : steps_[pos - 1]];
  for (int v = 2; v <= k_; ++v)
    if (counts[v] > counts[v - 1]) return false;
  return true;
}

PathWord PathWord::dual() const {
  std::vector<int> seen(k_ + 1, 0);
  std::vector<int> s;
  s.reserve(steps_.size());
  for (int v : steps_) s.push_back(++seen[v]);
  return PathWord(n_, k_, std::move(s));
}

std::string PathWord::to_string() const {
  std::string out;
  if (k_ <= 9) {
    for (int v : steps_) out.push_back(static_cast<char>('0' + v));
  } else {
    for (size_t j = 0; j < steps_.size(); ++j) {
      if (j) out.push_back('.');
      out += std::to_string(steps_[j]);
    }
  }
  return out;
}

RectTableau::RectTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  require(!rows_.empty() && !rows_.front().empty(), errc::invalid_word,
          "empty tableau");
  const size_t cols = rows_.front().size();
  size_t total = 0;
  for (const auto& row : rows_) {
    require(row.size() == cols, errc::invalid_word, "ragged tableau");
    total += row.size();
  }
  std::vector<bool> seen(total + 1, false);
  for (size_t r = 0; r < rows_.size(); ++r)
    for (size_t c = 0; c < cols; ++c) {
      int v = rows_[r][c];
      require(v >= 1 && v <= static_cast<int>(total) && !seen[v],
              errc::invalid_word, "entries must be a permutation of 1..kn");
      seen[v] = true;
      if (c > 0)
        require(rows_[r][c - 1] < v, errc::invalid_word,
                "rows must increase");
      if (r > 0)
        require(rows_[r - 1][c] < v, errc::invalid_word,
                "columns must increase");
    }
}

RectTableau RectTableau::transpose() const {
  std::vector<std::vector<int>> t(cols(), std::vector<int>(rows()));
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) t[c][r] = rows_[r][c];
  return RectTableau(std::move(t));
}

RectTableau to_tableau(const PathWord& p) {
  std::vector<std::vector<int>> rows(p.k());
  for (int pos = 1; pos <= p.length(); ++pos)
    rows[p.step(pos) - 1].push_back(pos);
  return RectTableau(std::move(rows));
}

PathWord from_tableau(const RectTableau& t) {
  std::vector<int> steps(static_cast<size_t>(t.rows()) * t.cols());
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 0; c < t.cols(); ++c) steps[t.data()[r][c] - 1] = r + 1;
  return PathWord(t.rows(), t.cols(), std::move(steps));
}

int Basis::index_of(const PathWord& p) const {
  auto it = index.find(p.to_string());
  require(it != index.end(), errc::invalid_word,
          "word " + p.to_string() + " is not in the basis");
  return it->second;
}

const PathWord& Basis::at(int i) const {
  require(i >= 0 && i < size(), errc::index_out_of_range,
          "basis position " + std::to_string(i));
  return paths[static_cast<size_t>(i)];
}

Integer count_paths(int k, int n) {
  require(k >= 1 && n >= 1, errc::invalid_word, "parameters must be >= 1");
  Rational c(factorial(static_cast<long>(k) * n));
  for (int j = 0; j < k; ++j)
    c *= Rational(factorial(j)) / Rational(factorial(n + j));
  require(rat_is_integer(c), errc::non_integer, "path count");
  return c.get_num();
}

Basis enumerate(int k, int n, int kn_cap) {
  require(k >= 1 && n >= 1, errc::invalid_word, "parameters must be >= 1");
  require(k * n <= kn_cap, errc::size_cap_exceeded,
          "kn = " + std::to_string(k * n) + " exceeds cap " +
              std::to_string(kn_cap));
  Basis basis;
  basis.k = k;
  basis.n = n;

  std::vector<int> counts(k + 1, 0), word;
  const int total = k * n;
  std::function<void()> grow = [&]() {
    if (static_cast<int>(word.size()) == total) {
      basis.paths.emplace_back(k, n, word);
      return;
    }
    for (int v = 1; v <= k; ++v) {
      if (counts[v] == n) continue;
      if (v > 1 && counts[v] + 1 > counts[v - 1]) continue;
      ++counts[v];
      word.push_back(v);
      grow();
      word.pop_back();
      --counts[v];
    }
  };
  grow();

  std::stable_sort(basis.paths.begin(), basis.paths.end(),
                   [](const PathWord& a, const PathWord& b) {
                     long ra = a.rank(), rb = b.rank();
                     if (ra != rb) return ra < rb;
                     return a < b;
                   });
  for (int i = 0; i < basis.size(); ++i)
    basis.index.emplace(basis.paths[i].to_string(), i);
  return basis;
}

Basis enumerate_with_prefix(int k, int n, int j, int kn_cap) {
  require(j >= 0 && j <= k - 1, errc::index_out_of_range,
          "prefix length " + std::to_string(j));
  Basis full = enumerate(k, n, kn_cap);
  Basis out;
  out.k = k;
  out.n = n;
  for (const PathWord& p : full.paths) {
    bool match = true;
    for (int pos = 1; pos <= j; ++pos)
      if (p.step(pos) != pos) {
        match = false;
        break;
      }
    if (match) out.paths.push_back(p);
  }
  for (int i = 0; i < out.size(); ++i)
    out.index.emplace(out.paths[i].to_string(), i);
  return out;
}

}  // namespace qkz
