#include "qkz/sumrules.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qkz/pointgen.hpp"

namespace qkz {

int cyclotomic_order(int k) {
  require(k >= 1, errc::unsupported_parameters, "rank must be positive");
  return static_cast<int>(std::lcm(4, 2 * (k + 1)));
}

CycloElem q_value(int k) {
  const int M = cyclotomic_order(k);
  return CycloElem::zeta(M, long(M / (2 * (k + 1))) * (k + 2));
}

CycloElem tau_value(int k) {
  const CycloElem q = q_value(k);
  return -(q + q.inverse());
}

namespace detail {

std::vector<int> padded_rows(const std::vector<int>& rows, int nn) {
  require(static_cast<int>(rows.size()) <= nn, errc::shape_mismatch,
          "more rows than variables");
  std::vector<int> lam(nn, 0);
  for (size_t i = 0; i < rows.size(); ++i) {
    require(rows[i] >= 0, errc::degenerate_input, "negative row length");
    require(i == 0 || rows[i] <= rows[i - 1], errc::degenerate_input,
            "row lengths must be weakly decreasing");
    lam[i] = rows[i];
  }
  return lam;
}

}  // namespace detail

Covector covector(const ReprMatrices& rep) {
  const int dim = rep.basis.size();
  const int gens = rep.generators();
  const CycloElem tau = tau_value(rep.k);

  /* One equation per generator and source path: sum_t v_t (e_i)_{t,s} equals
     tau v_s, stacked into a single nullspace problem. */
  Matrix<CycloElem> a(gens * dim, dim);
  for (int i = 1; i <= gens; ++i) {
    Matrix<CycloElem> m = generator_matrix<CycloElem>(rep, i, tau);
    for (int s = 0; s < dim; ++s)
      for (int t = 0; t < dim; ++t) {
        CycloElem coeff = m.at(t, s);
        if (t == s) coeff = coeff - tau;
        a.at((i - 1) * dim + s, t) = coeff;
      }
  }

  auto basis_vecs = nullspace(a);
  require(basis_vecs.size() == 1, errc::non_unique_solution,
          "tau eigenspace has dimension " + std::to_string(basis_vecs.size()));
  std::vector<CycloElem> v = std::move(basis_vecs.front());
  require(!v[0].is_zero(), errc::positivity_uncertified,
          "vanishing entry at the minimal path");
  const CycloElem scale = v[0].inverse();
  for (auto& e : v) e = e * scale;
  for (int idx = 0; idx < dim; ++idx)
    require(certify_sign(v[idx]) > 0, errc::positivity_uncertified,
            "entry not certified positive at " +
                rep.basis.at(idx).to_string());
  return Covector{rep.k, rep.n, std::move(v)};
}

std::vector<int> sum_rule_diagram(int k, int n) {
  require(k >= 1 && n >= 1, errc::unsupported_parameters,
          "side lengths must be positive");
  std::vector<int> rows(k * n);
  for (int i = 1; i <= k * n; ++i) rows[i - 1] = n - 1 - (i - 1) / k;
  return rows;
}

namespace {

PolyQ alternant_poly(const std::vector<int>& expo, int nn) {
  PolyQ out(nn);
  std::vector<int> perm(nn);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < nn; ++i)
      for (int j = i + 1; j < nn; ++j)
        if (perm[i] > perm[j]) ++inv;
    std::vector<int32_t> e(nn);
    for (int i = 0; i < nn; ++i) e[i] = expo[perm[i]];
    out.add_term(Monomial(std::move(e)), Rational(inv % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

PolyQ schur_poly(const std::vector<int>& rows, int nn) {
  const std::vector<int> lam = detail::padded_rows(rows, nn);
  std::vector<int> expo(nn);
  for (int j = 0; j < nn; ++j) expo[j] = lam[j] + nn - 1 - j;
  PolyQ p = alternant_poly(expo, nn);
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j)
      p = p.exact_div(PolyQ::variable(nn, i) - PolyQ::variable(nn, j));
  return p;
}

namespace {

CycloElem q_image(const LaurentQ& c, int k) {
  const int M = cyclotomic_order(k);
  return cyclo_eval_laurent(c, M, long(M / (2 * (k + 1))) * (k + 2));
}

CycloElem sum_rule_prefactor(int k, int n) {
  const int M = cyclotomic_order(k);
  const CycloElem minus_i_over_q =
      (-CycloElem::zeta(M, M / 4)) * q_value(k).inverse();
  return ring_pow(minus_i_over_q, long(k) * n * (n - 1) / 2);
}

}  // namespace

SumRulePoly sum_rule(const QkzSolution& sol) {
  const int k = sol.k, n = sol.n, N = k * n, nv = N + 1;
  const Covector v = covector(sol.rep);

  PolyC acc(nv);
  for (size_t idx = 0; idx < sol.components.size(); ++idx)
    acc += sol.component(int(idx))
               .map_coeffs<CycloElem>(
                   [&](const LaurentQ& c) { return q_image(c, k); })
               .scale(v.entries[idx]);
  acc = acc.scale(sum_rule_prefactor(k, n));

  PolyQ out = acc.map_coeffs<Rational>([](const CycloElem& c) {
    require(c.is_rational(), errc::non_integer_coefficient,
            "cyclotomic residue " + c.to_string());
    Rational r = c.as_rational();
    require(rat_is_integer(r), errc::non_integer_coefficient,
            "fractional coefficient " + rat_to_string(r));
    require(r >= 0, errc::inconsistent_derivation,
            "negative coefficient " + rat_to_string(r));
    return r;
  });

  require(!out.has_negative_exponents(), errc::inconsistent_derivation,
          "sum rule is not polynomial");
  for (int i = 0; i + 1 < N; ++i)
    require(out.transpose_vars(i, i + 1) == out, errc::inconsistent_derivation,
            "not symmetric in adjacent variables " + std::to_string(i + 1));
  for (int i = 0; i < N; ++i)
    require(out.degree_in(i) == 2 * (n - 1), errc::inconsistent_derivation,
            "z degree off at variable " + std::to_string(i + 1));
  require(out.degree_in(N) == k * n * (n - 1) / 2,
          errc::inconsistent_derivation, "r degree off");
  std::vector<int> weights(nv, 1);
  weights[N] = 2;
  require(out.is_quasi_homogeneous(weights, 3LL * k * n * (n - 1) / 2),
          errc::inconsistent_derivation, "weight off");

  /* z_j -> r/z_j sends the polynomial to (r/z_j^2)^{n-1} times itself. */
  for (int j = 0; j < N; ++j) {
    Monomial image = Monomial::unit(nv, N) + Monomial::unit(nv, j, -1);
    Monomial factor =
        Monomial::unit(nv, N, n - 1) + Monomial::unit(nv, j, -2 * (n - 1));
    require(out.substitute_monomial(j, Rational(1), image) ==
                out.mul_monomial(factor, Rational(1)),
            errc::inconsistent_derivation,
            "reflection covariance fails in variable " + std::to_string(j + 1));
  }

  return SumRulePoly{k, n, std::move(out)};
}

std::vector<Rational> homogeneous_r_coefficients(const SumRulePoly& s) {
  const int N = s.k * s.n;
  PolyQ p = s.poly;
  for (int v = 0; v < N; ++v) p = p.partial_eval(v, Rational(1));
  std::vector<Rational> out(size_t(s.k) * s.n * (s.n - 1) / 2 + 1,
                            Rational(0));
  for (const auto& [m, c] : p.terms()) out.at(m.e[N]) = c;
  return out;
}

namespace {

Integer assert_integer(const Rational& r, const char* what) {
  require(rat_is_integer(r), errc::non_integer, what);
  return r.get_num();
}

}  // namespace

Integer asm_number(int k, int n) {
  require(k >= 1 && n >= 1, errc::unsupported_parameters,
          "side lengths must be positive");
  Rational acc(1);
  for (int j = 0; j < n; ++j) {
    Rational num(factorial(j));
    for (int i = 1; i <= k - 1; ++i)
      num *= Rational(factorial((k + 1) * j + i));
    Rational den(1);
    for (int i = 0; i <= k - 1; ++i) den *= Rational(factorial(k * j + i));
    acc *= num / den;
  }
  return assert_integer(acc, "square count product formula");
}

Integer vsasm_number(int k, int n) {
  require(k >= 1 && n >= 1, errc::unsupported_parameters,
          "side lengths must be positive");
  Rational acc(1);
  for (int j = 1; j <= n - 1; ++j) {
    Rational num = Rational(factorial(2 * j)) *
                   Rational(factorial(2 * n * k + 2 * j - 1));
    Rational den = Rational(factorial((k + 1) * j)) *
                   Rational(factorial((k + 1) * (j + n) - 1));
    acc *= num / den;
  }
  return assert_integer(acc, "symmetric count product formula");
}

N2Values n2_closed_forms(int k) {
  require(k >= 1, errc::unsupported_parameters, "rank must be positive");
  N2Values out;
  for (int m = 0; m <= k; ++m) {
    Rational c = make_rational(k + 1, 2 * k + 1) *
                 Rational(binomial(2 * k + 1, m)) *
                 Rational(binomial(2 * k + 1, k - m));
    out.coeffs.push_back(assert_integer(c, "binomial sum coefficient"));
  }
  Rational av = Rational(2) * Rational(factorial(4 * k + 1)) /
                (Rational(factorial(3 * k + 2)) * Rational(factorial(k + 1)));
  out.vsasm2 = assert_integer(av, "n = 2 symmetric count");
  return out;
}

namespace {

Rational quad(const Rational& a, const Rational& b) {
  return a * a + a * b + b * b;
}

Rational rquad(const Rational& r, const Rational& a, const Rational& b) {
  const Rational p = a * b;
  return r * r + r * p + p * p;
}

}  // namespace

Rational ik_determinant(const std::vector<Rational>& z, const Rational& r) {
  require(!z.empty() && z.size() % 2 == 0, errc::degenerate_input,
          "even number of values required");
  const int n = static_cast<int>(z.size()) / 2;
  Matrix<Rational> m(n, n);
  Rational pref(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational d = quad(z[i], z[j + n]) * rquad(r, z[i], z[j + n]);
      require(d != 0, errc::degenerate_input, "vanishing quadratic factor");
      pref *= d;
      m.at(i, j) = Rational(1) / d;
    }
  for (int half = 0; half < 2; ++half)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Rational &a = z[half * n + i], &b = z[half * n + j];
        const Rational d = (a - b) * (r - a * b);
        require(d != 0, errc::degenerate_input,
                "coinciding or reflected values");
        pref /= d;
      }
  return pref * determinant(m);
}

Report ik_pfaffian_check(const std::vector<Rational>& z, const Rational& r) {
  require(!z.empty() && z.size() % 2 == 0, errc::degenerate_input,
          "even number of values required");
  const int nn = static_cast<int>(z.size());
  Matrix<Rational> p(nn, nn);
  Rational pref(1);
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j) {
      const Rational den = quad(z[i], z[j]) * rquad(r, z[i], z[j]);
      const Rational num = (z[i] - z[j]) * (r - z[i] * z[j]);
      require(den != 0 && num != 0, errc::degenerate_input,
              "degenerate point");
      p.at(i, j) = num / den;
      p.at(j, i) = -p.at(i, j);
      pref *= den / num;
    }
  const Rational value = ik_determinant(z, r);
  const Rational rhs = pref * pfaffian(p);

  Report rep("pfaffian-check");
  rep.set("size", std::to_string(nn));
  rep.add_check("pfaffian_square_identity", "exact", value * value == rhs,
                "value " + rat_to_string(value));
  return rep;
}

WVector w_vector(const QkzSolution& sol) {
  const int k = sol.k, n = sol.n, N = k * n;
  const Covector v = covector(sol.rep);
  const CycloElem pref = sum_rule_prefactor(k, n);
  const size_t rdeg = size_t(k) * n * (n - 1) / 2;

  WVector out{k, n, {}};
  for (size_t idx = 0; idx < sol.components.size(); ++idx) {
    PolyL p = sol.component(int(idx));
    for (int var = 0; var < N; ++var)
      p = p.partial_eval(var, LaurentQ(Rational(1)));
    std::vector<CycloElem> coeffs(rdeg + 1);
    for (const auto& [m, c] : p.terms())
      coeffs.at(m.e[N]) = q_image(c, k) * v.entries[idx] * pref;
    out.entries.push_back(std::move(coeffs));
  }
  return out;
}

Stationary stationary_probabilities(const QkzSolution& sol) {
  const WVector w = w_vector(sol);
  CycloElem total;
  std::vector<CycloElem> at_one;
  for (const auto& entry : w.entries) {
    CycloElem val;
    for (const auto& c : entry) val = val + c;
    total = total + val;
    at_one.push_back(val);
  }
  require(!total.is_zero(), errc::inconsistent_derivation,
          "vanishing normalization");

  Stationary out{sol.k, sol.n, {}, {}, true};
  const CycloElem inv = total.inverse();
  CycloElem sum;
  for (auto& val : at_one) {
    CycloElem p = val * inv;
    require(certify_sign(p) > 0, errc::positivity_uncertified,
            "probability not certified positive");
    sum = sum + p;
    out.decimals.push_back(certified_decimal(p, 12));
    out.all_rational = out.all_rational && p.is_rational();
    out.probabilities.push_back(std::move(p));
  }
  require(sum == CycloElem(1), errc::inconsistent_derivation,
          "probabilities do not sum to 1");
  return out;
}

ConjectureVerdict convex_transition_probability(int k, int kn_cap) {
  require(k >= 2, errc::unsupported_parameters,
          "growth observable needs k >= 2");
  const QkzSolution sol = solve(k, 2, kn_cap);
  const Stationary st = stationary_probabilities(sol);
  const int N = 2 * k;

  CycloElem obs;
  for (size_t pos = 0; pos < st.probabilities.size(); ++pos) {
    const PathWord& p = sol.basis().at(int(pos));
    long asc = 0;
    for (int i = 1; i <= N - 1; ++i)
      if (p.classify(i) == Shape::convex) ++asc;
    obs = obs + st.probabilities[pos] * CycloElem(Rational(asc));
  }
  obs = obs * CycloElem(make_rational(1, N - 1));

  const Rational closed =
      make_rational(long(k - 1) * (13 * k + 4),
                    2L * (2 * k - 1) * (4 * k + 1));
  ConjectureVerdict out;
  out.k = k;
  out.observable = obs;
  out.closed_form = closed;
  out.matches = obs == CycloElem(closed);
  out.observable_decimal = certified_decimal(obs, 12);
  return out;
}

namespace {

std::string rat_list(const std::vector<Rational>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << " ";
    os << v[i].get_num().get_str();
    if (!rat_is_integer(v[i])) os << "/" << v[i].get_den().get_str();
  }
  return os.str();
}

Integer int_pow(long base, long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(e));
  return out;
}

}  // namespace

Report verify_sum_rule_values(const SumRulePoly& s) {
  const int k = s.k, n = s.n, N = k * n;
  const int rdeg = k * n * (n - 1) / 2;

  Report rep("sum-rule-values");
  rep.set("k", std::to_string(k));
  rep.set("n", std::to_string(n));

  const auto co = homogeneous_r_coefficients(s);
  rep.add_pass("homogeneous_coefficients", "exact", rat_list(co));

  bool recip = true;
  for (int m = 0; m <= rdeg; ++m) recip = recip && co[m] == co[rdeg - m];
  rep.add_check("reciprocal_in_r", "exact", recip, "");

  Rational at1(0);
  for (const auto& c : co) at1 += c;
  rep.add_check("value_at_r0", "exact",
                co[0] == Rational(int_pow(k + 1, long(n) * (n - 1) / 2) *
                                  asm_number(k, n)),
                rat_to_string(co[0]));
  rep.add_check("value_at_r1", "exact",
                at1 == Rational(int_pow(k + 1, long(n) * (n - 1)) *
                                vsasm_number(k, n)),
                rat_to_string(at1));

  std::vector<int> idmap(N);
  std::iota(idmap.begin(), idmap.end(), 0);
  const PolyQ sy = schur_poly(sum_rule_diagram(k, n), N).embed(N + 1, idmap);
  rep.add_check("top_r_slice_is_schur", "symbolic",
                s.poly.coefficient_slice(N, rdeg) == sy,
                std::to_string(sy.term_count()) + " terms");
  Monomial allz(std::vector<int32_t>(N + 1, n - 1));
  allz.e[N] = 0;
  allz.total = int64_t(N) * (n - 1);
  rep.add_check("constant_r_slice_is_schur", "symbolic",
                s.poly.coefficient_slice(N, 0) ==
                    sy.mul_monomial(allz, Rational(1)),
                "monomial shift exponent " + std::to_string(n - 1));

  if (n == 2) {
    const N2Values closed = n2_closed_forms(k);
    bool same = static_cast<int>(closed.coeffs.size()) == rdeg + 1;
    for (int m = 0; same && m <= rdeg; ++m)
      same = co[m] == Rational(closed.coeffs[m]);
    rep.add_check("binomial_closed_form", "exact", same,
                  "vertically symmetric count " + closed.vsasm2.get_str());
  }
  return rep;
}

namespace {

std::string point_bound_witness(const SumRulePoly& s, int points) {
  return std::to_string(points) + " points > weight bound " +
         std::to_string(3LL * s.k * s.n * (s.n - 1) / 2);
}

}  // namespace

Report check_symplectic_agreement(const SumRulePoly& s, std::uint64_t seed,
                                  int points) {
  const int N = s.k * s.n;
  const auto rows = sum_rule_diagram(s.k, s.n);

  Report rep("symplectic-schur-agreement");
  rep.set("k", std::to_string(s.k));
  rep.set("n", std::to_string(s.n));
  rep.set("seed", std::to_string(seed));
  rep.set("points", std::to_string(points));

  PointGen gen(seed);
  bool ok = true;
  std::string witness = point_bound_witness(s, points);
  for (int p = 0; p < points && ok; ++p) {
    const auto pt = gen.sample(N);
    std::vector<Rational> coords = pt.z;
    coords.push_back(pt.r);
    if (s.poly.evaluate(coords) != symplectic_schur(rows, pt.z, pt.r)) {
      ok = false;
      witness = "first failure at point " + std::to_string(p);
    }
  }
  rep.add_check("symplectic_schur_agreement", "multipoint", ok, witness);
  return rep;
}

Report check_ik_agreement(const SumRulePoly& s, std::uint64_t seed,
                          int points) {
  require(s.k == 2, errc::unsupported_parameters,
          "determinant formula needs k = 2");
  const int N = 2 * s.n;

  Report rep("determinant-agreement");
  rep.set("n", std::to_string(s.n));
  rep.set("seed", std::to_string(seed));
  rep.set("points", std::to_string(points));

  PointGen gen(seed);
  bool ok = true;
  std::string witness = point_bound_witness(s, points);
  for (int p = 0; p < points && ok; ++p) {
    const auto pt = gen.sample(N);
    std::vector<Rational> coords = pt.z;
    coords.push_back(pt.r);
    if (s.poly.evaluate(coords) != ik_determinant(pt.z, pt.r)) {
      ok = false;
      witness = "first failure at point " + std::to_string(p);
    }
  }
  rep.add_check("determinant_agreement", "multipoint", ok, witness);
  return rep;
}

}  // namespace qkz
