#include "eulertop/normal_form.hpp"

#include <cstdlib>
#include <string>

#include "eulertop/errors.hpp"

namespace eulertop {

RhoLaurent PolyHamiltonian::coeff(int a, int b) const {
  auto it = terms_.find(Monomial{a, b});
  return it == terms_.end() ? RhoLaurent() : it->second;
}

void PolyHamiltonian::add_term(Monomial m, const RhoLaurent& c) {
  if (m.degree() > max_degree_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyHamiltonian PolyHamiltonian::homogeneous_part(int degree) const {
  PolyHamiltonian out(max_degree_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) out.terms_.emplace(m, c);
  }
  return out;
}

bool PolyHamiltonian::is_resonant() const {
  for (const auto& [m, c] : terms_) {
    if (m.q != m.p) return false;
  }
  return true;
}

PolyHamiltonian& PolyHamiltonian::operator+=(const PolyHamiltonian& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolyHamiltonian& PolyHamiltonian::operator-=(const PolyHamiltonian& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PolyHamiltonian& PolyHamiltonian::operator*=(const Rational& s) {
  if (eulertop::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

PolyHamiltonian poisson_bracket(const PolyHamiltonian& f, const PolyHamiltonian& g) {
  PolyHamiltonian out(std::min(f.max_degree(), g.max_degree()));
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      // d/dq f * d/dp g - d/dp f * d/dq g
      const long coef = static_cast<long>(mf.q) * mg.p - static_cast<long>(mf.p) * mg.q;
      if (coef == 0) continue;
      out.add_term(Monomial{mf.q + mg.q - 1, mf.p + mg.p - 1}, (cf * cg) * Rational(coef));
    }
  }
  return out;
}

PolyHamiltonian expand_hamiltonian(int max_degree) {
  if (max_degree < 2 || max_degree % 2 != 0) {
    throw UsageError("expand_hamiltonian needs an even degree >= 2, got " + std::to_string(max_degree));
  }
  PolyHamiltonian h(max_degree);
  const RhoLaurent half_rho = RhoLaurent::monomial(Rational(1, 2), 1);
  const RhoLaurent half_inv_rho = RhoLaurent::monomial(Rational(1, 2), -1);
  h.add_term({0, 2}, -half_rho);
  // sin^2 q = sum_{k>=1} (-1)^(k+1) 2^(2k-1) q^(2k) / (2k)!
  for (int k = 1; 2 * k <= max_degree; ++k) {
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(2 * k - 1));
    Rational s(pow2, factorial(static_cast<unsigned long>(2 * k)));
    s.canonicalize();
    if (k % 2 == 0) s = -s;
    h.add_term({2 * k, 0}, half_inv_rho * s);
    h.add_term({2 * k, 2}, half_inv_rho * Rational(-s));
  }
  return h;
}

PolyHamiltonian williamson_reduce(const PolyHamiltonian& h) {
  const PolyHamiltonian quad = h.homogeneous_part(2);
  PolyHamiltonian expected(h.max_degree());
  expected.add_term({2, 0}, RhoLaurent::monomial(Rational(1, 2), -1));
  expected.add_term({0, 2}, RhoLaurent::monomial(Rational(-1, 2), 1));
  if (!(quad == expected)) {
    throw UsageError("williamson_reduce: quadratic part must be (q^2/rho - rho p^2)/2");
  }
  PolyHamiltonian out(h.max_degree());
  for (const auto& [m, c] : h.terms()) {
    const int a = m.q;
    const int b = m.p;
    if ((a - b) % 2 != 0) {
      throw UsageError("williamson_reduce: monomial q^" + std::to_string(a) + " p^" + std::to_string(b) +
                       " would need a half-integer power of rho");
    }
    // q^a p^b -> rho^((a-b)/2) 2^(-(a+b)/2) (Q+P)^a (P-Q)^b
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>((a + b) / 2));
    const RhoLaurent base = c * RhoLaurent::monomial(Rational(Integer(1), pow2), (a - b) / 2);
    for (int i = 0; i <= a; ++i) {
      const Integer ca = binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(i));
      for (int j = 0; j <= b; ++j) {
        Integer cb = binomial(static_cast<unsigned long>(b), static_cast<unsigned long>(j));
        if (j % 2 == 1) cb = -cb;
        out.add_term({i + j, a + b - i - j}, base * Rational(ca * cb));
      }
    }
  }
  return out;
}

BirkhoffNormalForm birkhoff_normalize(const PolyHamiltonian& h, int order) {
  if (order < 1) throw UsageError("birkhoff_normalize needs order >= 1");
  const int top_degree = 2 * order;
  if (h.max_degree() < top_degree) {
    throw UsageError("birkhoff_normalize: Hamiltonian known through degree " + std::to_string(h.max_degree()) +
                     ", need " + std::to_string(top_degree));
  }
  PolyHamiltonian h2(top_degree);
  h2.add_term({1, 1}, RhoLaurent(1));
  {
    PolyHamiltonian quad = h.homogeneous_part(2);
    PolyHamiltonian low(top_degree);
    for (const auto& [m, c] : h.terms()) {
      if (m.degree() < 2) low.add_term(m, c);
    }
    PolyHamiltonian qp(h.max_degree());
    qp.add_term({1, 1}, RhoLaurent(1));
    if (!(quad == qp) || !low.is_zero()) {
      throw UsageError("birkhoff_normalize: Hamiltonian must start with exactly qp");
    }
  }

  // Deprit triangle. Row i holds H_n^(i) for n = 0..n_max-i, where
  // H(eps) = sum eps^n/n! H_n^(0) with H_n^(0) = n! * (degree n+2 part) and
  // W(eps) = sum eps^n/n! W_(n+1), and
  //   H_n^(i) = H_(n+1)^(i-1) + sum_m C(n,m) {H_(n-m)^(i-1), W_(m+1)}.
  const int n_max = top_degree - 2;
  std::vector<std::vector<PolyHamiltonian>> tri(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    PolyHamiltonian part = h.homogeneous_part(n + 2);
    PolyHamiltonian scaled(top_degree);
    scaled += part;
    tri[0].push_back(scaled * Rational(factorial(static_cast<unsigned long>(n))));
  }
  std::vector<PolyHamiltonian> gens(static_cast<std::size_t>(n_max) + 1, PolyHamiltonian(top_degree));
  const PolyHamiltonian& h0 = tri[0][0];

  auto at = [&](int i, int n) -> PolyHamiltonian& {
    return tri[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
  };

  for (int i = 1; i <= n_max; ++i) {
    // Fill the anti-diagonal H_(i-j)^(j), j = 1..i, with W_i taken as zero.
    for (int j = 1; j <= i; ++j) {
      const int n = i - j;
      PolyHamiltonian entry = at(j - 1, n + 1);
      for (int m = 0; m <= n; ++m) {
        if (m + 1 >= i) continue;  // W_i not yet known
        const Rational c(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m)));
        entry += poisson_bracket(at(j - 1, n - m), gens[static_cast<std::size_t>(m + 1)]) * c;
      }
      tri[static_cast<std::size_t>(j)].push_back(std::move(entry));
    }
    // Homological equation: {qp, q^a p^b} = (b - a) q^a p^b.
    PolyHamiltonian w(top_degree);
    for (const auto& [m, c] : at(i, 0).terms()) {
      if (m.q == m.p) continue;
      const int divisor = m.p - m.q;
      if (divisor == 0) throw InternalError("zero homological divisor");
      // w = -c / (b - a)
      Rational factor(1, static_cast<unsigned long>(std::abs(divisor)));
      if (divisor > 0) factor = -factor;
      w.add_term(m, c * factor);
    }
    const PolyHamiltonian correction = poisson_bracket(h0, w);
    for (int j = 1; j <= i; ++j) at(j, i - j) += correction;
    gens[static_cast<std::size_t>(i)] = std::move(w);
    if (!at(i, 0).is_resonant()) throw InternalError("Deprit step left a non-resonant term");
  }

  BirkhoffNormalForm out{PowerSeries(Variable::J, order), {}, std::move(gens)};
  for (int i = 0; i <= n_max; ++i) {
    PolyHamiltonian k = at(i, 0) * Rational(Integer(1), factorial(static_cast<unsigned long>(i)));
    out.normalized.push_back(k);
    if ((i + 2) % 2 != 0) {
      if (!k.is_zero()) throw InternalError("odd-degree resonant term");
      continue;
    }
    const int power = (i + 2) / 2;
    try {
      out.series[power] = rho_to_kappa(k.coeff(power, power));
    } catch (const RepresentationError& e) {
      throw InternalError(std::string("normal form coefficient is not polynomial in kappa: ") + e.what());
    }
  }
  return out;
}

PowerSeries birkhoff_normal_form(int order) {
  return birkhoff_normalize(williamson_reduce(expand_hamiltonian(2 * order)), order).series;
}

}  // namespace eulertop
