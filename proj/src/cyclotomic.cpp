#include "qkz/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace qkz {

namespace {

/* Dense division of integer polynomials, known exact. */
std::vector<Integer> div_exact_int(std::vector<Integer> num,
                                   const std::vector<Integer>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  require(num.size() >= den.size(), errc::inexact_division,
          "cyclotomic division degree");
  std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
  while (num.size() >= den.size()) {
    Integer lead = num.back() / den.back();
    size_t pos = num.size() - den.size();
    quot[pos] = lead;
    for (size_t i = 0; i < den.size(); ++i) num[pos + i] -= lead * den[i];
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (num.empty()) break;
  }
  require(num.empty(), errc::inexact_division, "cyclotomic division");
  return quot;
}

struct FieldTable {
  int phi;
  std::vector<Integer> minpoly;
  /* x^j mod Phi_M in the power basis, j = 0 .. 2*phi. */
  std::vector<std::vector<Rational>> power;
};

const FieldTable& field_table(int order) {
  static std::map<int, FieldTable> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  FieldTable t;
  t.minpoly = cyclotomic_polynomial(order);
  t.phi = static_cast<int>(t.minpoly.size()) - 1;
  const int top = std::max(2 * t.phi + 2, order);
  t.power.reserve(top + 1);
  for (int j = 0; j <= top; ++j) {
    if (j < t.phi) {
      std::vector<Rational> v(t.phi, Rational(0));
      v[j] = 1;
      t.power.push_back(std::move(v));
    } else {
      /* x^j = x * x^{j-1}, then reduce the overflow term with the monic
         relation x^phi = -sum_{i<phi} minpoly[i] x^i. */
      std::vector<Rational> v(t.phi, Rational(0));
      const auto& prev = t.power[j - 1];
      Rational carry = prev[t.phi - 1];
      for (int i = t.phi - 1; i > 0; --i) v[i] = prev[i - 1];
      v[0] = 0;
      for (int i = 0; i < t.phi; ++i)
        v[i] -= carry * Rational(t.minpoly[i]);
      t.power.push_back(std::move(v));
    }
  }
  return cache.emplace(order, std::move(t)).first->second;
}

std::vector<Rational> reduce_poly(int order, const std::vector<Rational>& p) {
  const FieldTable& t = field_table(order);
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t j = 0; j < p.size(); ++j) {
    if (p[j] == 0) continue;
    require(j < t.power.size(), errc::index_out_of_range,
            "cyclotomic reduction degree");
    const auto& row = t.power[j];
    for (int i = 0; i < t.phi; ++i) out[i] += p[j] * row[i];
  }
  return out;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int order) {
  static std::map<int, std::vector<Integer>> cache;
  require(order >= 1, errc::degenerate_input, "cyclotomic order");
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  /* x^order - 1 divided by the product of all lower cyclotomics. */
  std::vector<Integer> num(order + 1, Integer(0));
  num[0] = -1;
  num[order] = 1;
  for (int d = 1; d < order; ++d)
    if (order % d == 0) num = div_exact_int(std::move(num),
                                            cyclotomic_polynomial(d));
  return cache.emplace(order, std::move(num)).first->second;
}

CycloElem CycloElem::zeta(int order, long power) {
  require(order >= 1, errc::degenerate_input, "cyclotomic order");
  long p = power % order;
  if (p < 0) p += order;
  std::vector<Rational> poly(static_cast<size_t>(p) + 1, Rational(0));
  poly.back() = 1;
  return from_coords(order, reduce_poly(order, poly));
}

CycloElem CycloElem::from_coords(int order, std::vector<Rational> coords) {
  const FieldTable& t = field_table(order);
  require(static_cast<int>(coords.size()) == t.phi, errc::shape_mismatch,
          "coordinate vector length");
  CycloElem e;
  e.order_ = order;
  e.coords_ = std::move(coords);
  return e;
}

bool CycloElem::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational CycloElem::as_rational() const {
  require(is_rational(), errc::non_integer_coefficient,
          "element is not rational: " + to_string());
  return coords_[0];
}

CycloElem CycloElem::promoted(int order) const {
  if (order == order_) return *this;
  require(order % order_ == 0, errc::ring_mismatch,
          "cyclotomic order does not embed");
  const int step = order / order_;
  std::vector<Rational> poly(static_cast<size_t>(order_ - 1) * step + 1,
                             Rational(0));
  bool any = false;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    poly[i * step] += coords_[i];
    any = true;
  }
  if (!any) poly.assign(1, Rational(0));
  return from_coords(order, reduce_poly(order, poly));
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
  const int m = std::lcm(order_, o.order_);
  CycloElem a = promoted(m), b = o.promoted(m);
  for (size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
  return a;
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
  const int m = std::lcm(order_, o.order_);
  CycloElem a = promoted(m), b = o.promoted(m);
  for (size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] -= b.coords_[i];
  return a;
}

CycloElem CycloElem::operator-() const {
  CycloElem a = *this;
  for (auto& c : a.coords_) c = -c;
  return a;
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
  const int m = std::lcm(order_, o.order_);
  CycloElem a = promoted(m), b = o.promoted(m);
  std::vector<Rational> conv(a.coords_.size() + b.coords_.size() - 1,
                             Rational(0));
  for (size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i] == 0) continue;
    for (size_t j = 0; j < b.coords_.size(); ++j) {
      if (b.coords_[j] == 0) continue;
      conv[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  return from_coords(m, reduce_poly(m, conv));
}

bool CycloElem::operator==(const CycloElem& o) const {
  const int m = std::lcm(order_, o.order_);
  return promoted(m).coords_ == o.promoted(m).coords_;
}

CycloElem CycloElem::inverse() const {
  require(!is_zero(), errc::degenerate_input, "inverse of zero");
  /* Extended Euclid for gcd(elem, Phi_M) = 1 over Q[x]. */
  const FieldTable& t = field_table(order_);
  std::vector<Rational> r0(t.minpoly.size());
  for (size_t i = 0; i < t.minpoly.size(); ++i) r0[i] = Rational(t.minpoly[i]);
  std::vector<Rational> r1 = coords_;
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(r0);
  trim(r1);
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
  while (true) {
    require(!r1.empty(), errc::degenerate_input,
            "element not invertible in cyclotomic field");
    if (r1.size() == 1) break;
    /* r0 = q*r1 + rem; update (r0, s0) <- (r1, s1), (r1, s1) <- (rem, s0-q*s1) */
    std::vector<Rational> rem = r0;
    std::vector<Rational> q(rem.size() >= r1.size()
                                ? rem.size() - r1.size() + 1
                                : 1,
                            Rational(0));
    while (rem.size() >= r1.size()) {
      Rational lead = rem.back() / r1.back();
      size_t pos = rem.size() - r1.size();
      q[pos] = lead;
      for (size_t i = 0; i < r1.size(); ++i) rem[pos + i] -= lead * r1[i];
      trim(rem);
      if (rem.empty()) break;
    }
    std::vector<Rational> s2 = s0;
    s2.resize(std::max(s2.size(), q.size() + s1.size() - 1), Rational(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trim(s2);
    if (s2.empty()) s2.assign(1, Rational(0));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Rational unit = r1[0];
  std::vector<Rational> inv = s1;
  for (auto& c : inv) c /= unit;
  return from_coords(order_, reduce_poly(order_, inv));
}

CycloElem CycloElem::conj() const {
  /* zeta^j -> zeta^{(M-1)j mod M}. */
  std::vector<Rational> poly(order_, Rational(0));
  if (order_ == 1) return *this;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    poly[(i * (order_ - 1)) % order_] += coords_[i];
  }
  return from_coords(order_, reduce_poly(order_, poly));
}

std::string CycloElem::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << rat_to_string(coords_[i]);
  }
  os << "] (order " << order_ << ")";
  return os.str();
}

CycloElem cyclo_eval_laurent(const LaurentQ& l, int order, long power) {
  CycloElem acc;
  for (const auto& [e, c] : l.terms()) {
    long p = (static_cast<long>(e) * power) % order;
    if (p < 0) p += order;
    acc = acc + CycloElem(c) * CycloElem::zeta(order, p);
  }
  return acc;
}

}  // namespace qkz
