#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qkz/monomial.hpp"
#include "qkz/ring.hpp"

namespace qkz {

/* Sparse multivariate Laurent polynomial over a coefficient ring R, stored as
   a term map in graded-lex order. Zero coefficients are never kept.

   A default-constructed polynomial is the arity-adaptable zero: binary
   operations let it adopt the other operand's variable count, which keeps
   generic matrix code free of explicit arity bookkeeping. Nonzero operands
   of different arity are rejected. */
template <class R>
class MultiPoly {
public:
  using Terms = std::map<Monomial, R>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {
    require(nvars >= 0, errc::degenerate_input, "negative variable count");
  }

  static MultiPoly constant(int nvars, const R& c) {
    MultiPoly out(nvars);
    out.add_term(Monomial::zero(nvars), c);
    return out;
  }

  static MultiPoly variable(int nvars, int var, int32_t exp = 1) {
    MultiPoly out(nvars);
    out.add_term(Monomial::unit(nvars, var, exp), ring_one(R()));
    return out;
  }

  static MultiPoly from_monomial(int nvars, const Monomial& m, const R& c) {
    require(m.nvars() == nvars, errc::ring_mismatch, "monomial arity");
    MultiPoly out(nvars);
    out.add_term(m, c);
    return out;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    /* total == 0 with all exponents non-negative forces the zero monomial */
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.total == 0 &&
            terms_.begin()->first.nonnegative());
  }
  size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  void add_term(const Monomial& m, const R& c) {
    require(m.nvars() == nvars_, errc::ring_mismatch,
            "term arity does not match polynomial");
    if (ring_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (ring_is_zero(it->second)) terms_.erase(it);
    }
  }

  const R* coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  bool operator==(const MultiPoly& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, R() - c);
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    adopt_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    adopt_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, R() - c);
    return *this;
  }

  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    out += o;
    return out;
  }

  MultiPoly operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    out -= o;
    return out;
  }

  /* Copy promoted to a wider variable set; only constants may be widened. */
  MultiPoly promoted(int nvars) const {
    if (nvars == nvars_) return *this;
    require(is_constant(), errc::ring_mismatch,
            "arity change of a non-constant polynomial");
    MultiPoly out(nvars);
    if (!is_zero()) out.add_term(Monomial::zero(nvars), terms_.begin()->second);
    return out;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) {
      if (is_constant()) return promoted(o.nvars_) * o;
      return *this * o.promoted(nvars_);
    }
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    MultiPoly out(nvars_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) out.add_term(m1 + m2, c1 * c2);
    return out;
  }

  MultiPoly& operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
  }

  MultiPoly scale(const R& c) const {
    MultiPoly out(nvars_);
    if (ring_is_zero(c)) return out;
    for (const auto& [m, x] : terms_) out.add_term(m, x * c);
    return out;
  }

  MultiPoly mul_monomial(const Monomial& m, const R& c) const {
    MultiPoly out(nvars_);
    if (ring_is_zero(c)) return out;
    for (const auto& [t, x] : terms_) out.add_term(t + m, x * c);
    return out;
  }

  /* Exact division; throws InexactDivision when the quotient does not exist
     in the Laurent ring. Operands are shifted to non-negative exponents so
     the graded-lex divisibility argument applies. */
  MultiPoly exact_div(const MultiPoly& g) const {
    require(!g.is_zero(), errc::degenerate_input, "division by zero");
    if (nvars_ != g.nvars_) {
      if (g.is_constant()) return exact_div(g.promoted(nvars_));
      return promoted(g.nvars_).exact_div(g);
    }
    if (is_zero()) return *this;
    Monomial fshift = min_exponents(), gshift = g.min_exponents();
    MultiPoly rem = mul_monomial(fshift.scaled(-1), ring_one(R()));
    MultiPoly gs = g.mul_monomial(gshift.scaled(-1), ring_one(R()));
    const auto& glead = *gs.terms_.rbegin();
    MultiPoly quot(nvars_);
    while (!rem.is_zero()) {
      const auto& rlead = *rem.terms_.rbegin();
      Monomial d = rlead.first - glead.first;
      if (!d.nonnegative())
        fail(errc::inexact_division, "lead term not divisible");
      R qc = ring_exact_div(rlead.second, glead.second);
      quot.add_term(d, qc);
      rem -= gs.mul_monomial(d, qc);
    }
    return quot.mul_monomial(fshift - gshift, ring_one(R()));
  }

  /* Swap variables a and b in every term. */
  MultiPoly transpose_vars(int a, int b) const {
    check_var(a);
    check_var(b);
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial t = m;
      std::swap(t.e[a], t.e[b]);
      out.terms_.emplace(std::move(t), c);
    }
    return out;
  }

  /* z_var -> coeff * (monomial in the same variable set). The image may
     involve var itself; it is applied once per term, not iteratively. */
  MultiPoly substitute_monomial(int var, const R& coeff,
                                const Monomial& image) const {
    check_var(var);
    require(image.nvars() == nvars_, errc::ring_mismatch, "image arity");
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
      const int32_t t = m.e[var];
      Monomial base = m;
      base.total -= base.e[var];
      base.e[var] = 0;
      out.add_term(base + image.scaled(t), c * ring_pow(coeff, t));
    }
    return out;
  }

  /* Collapse one variable to a ring value. A zero value requires the
     polynomial to have no negative exponents in that variable. */
  MultiPoly partial_eval(int var, const R& value) const {
    check_var(var);
    const bool value_zero = ring_is_zero(value);
    MultiPoly out(nvars_);
    std::map<int32_t, R> pows;
    for (const auto& [m, c] : terms_) {
      const int32_t t = m.e[var];
      require(t >= 0 || !value_zero, errc::degenerate_input,
              "negative exponent at zero value");
      if (value_zero && t > 0) continue;
      Monomial base = m;
      base.total -= t;
      base.e[var] = 0;
      if (t == 0) {
        out.add_term(base, c);
        continue;
      }
      auto it = pows.find(t);
      if (it == pows.end()) it = pows.emplace(t, ring_pow(value, t)).first;
      out.add_term(base, c * it->second);
    }
    return out;
  }

  R evaluate(const std::vector<R>& values) const {
    require(static_cast<int>(values.size()) == nvars_, errc::shape_mismatch,
            "evaluation point arity");
    R acc{};
    std::vector<std::map<int32_t, R>> pows(nvars_);
    for (const auto& [m, c] : terms_) {
      R prod = c;
      for (int v = 0; v < nvars_; ++v) {
        const int32_t t = m.e[v];
        if (t == 0) continue;
        auto it = pows[v].find(t);
        if (it == pows[v].end())
          it = pows[v].emplace(t, ring_pow(values[v], long(t))).first;
        prod = prod * it->second;
      }
      acc = acc + prod;
    }
    return acc;
  }

  /* Terms with var-exponent exactly e, that exponent zeroed out. */
  MultiPoly coefficient_slice(int var, int32_t exp) const {
    check_var(var);
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m.e[var] != exp) continue;
      Monomial base = m;
      base.total -= base.e[var];
      base.e[var] = 0;
      out.terms_.emplace(std::move(base), c);
    }
    return out;
  }

  int32_t degree_in(int var) const {
    check_var(var);
    int32_t d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first || m.e[var] > d) d = m.e[var];
      first = false;
    }
    return d;
  }

  int32_t min_exp_in(int var) const {
    check_var(var);
    int32_t d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first || m.e[var] < d) d = m.e[var];
      first = false;
    }
    return d;
  }

  bool has_negative_exponents() const {
    for (const auto& [m, c] : terms_)
      if (!m.nonnegative()) return true;
    return false;
  }

  /* Every term satisfies sum_v weight[v] * e[v] == expected. */
  bool is_quasi_homogeneous(const std::vector<int>& weights,
                            int64_t expected) const {
    require(static_cast<int>(weights.size()) == nvars_, errc::shape_mismatch,
            "weight vector arity");
    for (const auto& [m, c] : terms_) {
      int64_t w = 0;
      for (int v = 0; v < nvars_; ++v) w += int64_t(weights[v]) * m.e[v];
      if (w != expected) return false;
    }
    return true;
  }

  template <class T, class F>
  MultiPoly<T> map_coeffs(F f) const {
    MultiPoly<T> out(nvars_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  /* Re-index variables into a wider (or reordered) variable set:
     old variable v becomes var_map[v]. */
  MultiPoly embed(int new_nvars, const std::vector<int>& var_map) const {
    require(static_cast<int>(var_map.size()) == nvars_, errc::shape_mismatch,
            "variable map arity");
    MultiPoly out(new_nvars);
    for (const auto& [m, c] : terms_) {
      std::vector<int32_t> e(new_nvars, 0);
      for (int v = 0; v < nvars_; ++v) {
        require(var_map[v] >= 0 && var_map[v] < new_nvars,
                errc::index_out_of_range, "variable map target");
        e[var_map[v]] += m.e[v];
      }
      out.add_term(Monomial(std::move(e)), c);
    }
    return out;
  }

  Monomial min_exponents() const {
    std::vector<int32_t> mins(nvars_, 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
      for (int v = 0; v < nvars_; ++v)
        mins[v] = first ? m.e[v] : std::min(mins[v], m.e[v]);
      first = false;
    }
    return Monomial(std::move(mins));
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    require(static_cast<int>(names.size()) == nvars_, errc::shape_mismatch,
            "variable name list");
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << ring_to_string(c) << ")";
      for (int v = 0; v < nvars_; ++v) {
        if (m.e[v] == 0) continue;
        os << "*" << names[v];
        if (m.e[v] != 1) os << "^" << m.e[v];
      }
    }
    return os.str();
  }

private:
  void check_var(int var) const {
    require(var >= 0 && var < nvars_, errc::index_out_of_range,
            "variable index");
  }

  void adopt_arity(const MultiPoly& o) {
    if (terms_.empty() && nvars_ != o.nvars_ && !o.terms_.empty())
      nvars_ = o.nvars_;
    require(nvars_ == o.nvars_ || o.terms_.empty(), errc::ring_mismatch,
            "polynomial arity mismatch");
  }

  int nvars_ = 0;
  Terms terms_;
};

/* Ring interface so polynomials can serve as matrix entries. */
template <class R>
bool ring_is_zero(const MultiPoly<R>& p) {
  return p.is_zero();
}
template <class R>
MultiPoly<R> ring_one(const MultiPoly<R>& p) {
  return MultiPoly<R>::constant(p.nvars(), ring_one(R()));
}
template <class R>
MultiPoly<R> ring_exact_div(const MultiPoly<R>& a, const MultiPoly<R>& b) {
  return a.exact_div(b);
}
template <class R>
std::string ring_to_string(const MultiPoly<R>& p) {
  std::vector<std::string> names;
  for (int i = 0; i < p.nvars(); ++i) names.push_back("x" + std::to_string(i));
  return p.to_string(names);
}

/* Divided difference in adjacent variables var, var+1:
   (f with the pair swapped minus f) / (z_var - z_{var+1}).
   Computed termwise: x^a y^b maps to the telescoped geometric sum
   -sum x^{b+s} y^{a-1-s} (a > b), its negative for a < b, 0 for a = b.
   Linear in term count times the exponent spread, no long division. */
template <class R>
MultiPoly<R> divided_difference(const MultiPoly<R>& f, int var) {
  require(var >= 0 && var + 1 < f.nvars(), errc::index_out_of_range,
          "divided difference position");
  MultiPoly<R> out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    const int32_t a = m.e[var], b = m.e[var + 1];
    if (a == b) continue;
    const int32_t lo = std::min(a, b), hi = std::max(a, b);
    R val = c;
    if (a > b) val = R() - c;
    Monomial t = m;
    for (int32_t s = lo; s < hi; ++s) {
      t.e[var] = s;
      t.e[var + 1] = lo + hi - 1 - s;
      t.total = m.total - 1;
      out.add_term(t, val);
    }
  }
  return out;
}

}  // namespace qkz
