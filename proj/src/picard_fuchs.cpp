#include "eulertop/picard_fuchs.hpp"

#include <array>
#include <sstream>

namespace eulertop {

namespace {

// Cubic in z over Q[kappa][h].
using ZPoly = Poly<HPoly>;

HPoly hconst(const Rational& r) { return HPoly(KappaPoly(r)); }
HPoly hkappa(const Rational& r) { return HPoly(kappa() * r); }

}  // namespace

HPoly w_squared_at_2h() {
  // 2h (4h^2 + 2 kappa h - 1)
  const HPoly h = h_variable();
  const HPoly inner = h * h * Rational(4) + h * hkappa(2) - hconst(1);
  return h * inner * Rational(2);
}

PFCoefficients derive_pf_coefficients() {
  const HPoly h = h_variable();
  const ZPoly z = ZPoly::variable();
  const ZPoly two_h_minus_z = ZPoly(h * Rational(2)) - z;

  // d^i zeta / dh^i = s_i (2h - z)^(1/2 - i) dz / w with s = (1, 1, -1, 3).
  // After multiplying by w (2h - z)^(5/2) the column for c_i is
  // s_i (2h - z)^(3 - i).
  const std::array<Rational, 4> s{Rational(1), Rational(1), Rational(-1), Rational(3)};
  std::array<ZPoly, 4> columns;
  for (int i = 0; i < 4; ++i) {
    ZPoly p(1);
    for (int j = 0; j < 3 - i; ++j) p = p * two_h_minus_z;
    columns[static_cast<std::size_t>(i)] = p * s[static_cast<std::size_t>(i)];
  }

  // w(z)^2 = z^3 + kappa z^2 - z; dv times w (2h - z)^(5/2) equals
  // (3/2) w^2 + w w' (2h - z) with w w' = (w^2)'/2.
  const ZPoly w2(std::vector<HPoly>{HPoly(), hconst(-1), hkappa(1), hconst(1)});
  const ZPoly rhs = w2 * Rational(3, 2) + w2.derivative() * two_h_minus_z * Rational(1, 2);

  // Row r is the coefficient of z^(3 - r).
  std::array<std::array<HPoly, 5>, 4> m;
  for (int r = 0; r < 4; ++r) {
    const int power = 3 - r;
    for (int c = 0; c < 4; ++c) m[r][c] = columns[static_cast<std::size_t>(c)].coeff(power);
    m[r][4] = rhs.coeff(power);
  }

  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    std::optional<HPoly> inv;
    for (int r = col; r < 4; ++r) {
      inv = unit_inverse(m[r][col]);
      if (inv) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw InternalError("Picard-Fuchs system has no constant pivot in column " + std::to_string(col));
    std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(pivot)]);
    for (auto& e : m[col]) e = e * *inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const HPoly factor = m[r][col];
      for (int c = 0; c < 5; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return {m[0][4], m[1][4], m[2][4], m[3][4]};
}

Rational frobenius_f(long n, long k) {
  return Rational(2) * odd_harmonic_number(n) + Rational(2) * odd_harmonic_number(n - k) -
         Rational(2) * harmonic_number(n);
}

Rational frobenius_weight(long n, long k) {
  const auto u = [](long x) { return static_cast<unsigned long>(x); };
  Integer num = binomial(u(2 * n), u(n)) * factorial(u(2 * n - 2 * k));
  Integer den = factorial(u(k)) * factorial(u(n - k)) * factorial(u(n - 2 * k));
  Integer four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, u(n));
  den *= four_n;
  Rational w(num, den);
  w.canonicalize();
  return w;
}

std::vector<KappaPoly> frobenius_a(int n_max, FrobeniusMethod method) {
  return method == FrobeniusMethod::recursion ? frobenius_a_recursion(n_max, kappa())
                                              : frobenius_a_closed_form(n_max, kappa());
}

std::vector<KappaPoly> frobenius_b(int n_max, FrobeniusMethod method) {
  if (method == FrobeniusMethod::recursion) return frobenius_b_recursion(frobenius_a_recursion(n_max, kappa()), kappa());
  return frobenius_b_closed_form(n_max, kappa());
}

FrobeniusTable frobenius_table(int n_max) {
  FrobeniusTable t{n_max, frobenius_a(n_max, FrobeniusMethod::recursion), {}};
  t.b = frobenius_b_recursion(t.a, kappa());
  if (t.a != frobenius_a_closed_form(n_max, kappa()) || t.b != frobenius_b_closed_form(n_max, kappa())) {
    throw InternalError("Frobenius recursion and closed form disagree");
  }
  return t;
}

ActionSeries build_action_series(int order) { return build_action_series_at(order, kappa()); }

bool LaurentLogSeries::is_zero() const {
  for (const auto& c : log_part) {
    if (!c.is_zero()) return false;
  }
  for (const auto& c : regular) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string LaurentLogSeries::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < regular.size(); ++i) {
    const int power = min_power + static_cast<int>(i);
    for (int channel = 0; channel < 2; ++channel) {
      const KappaPoly& c = channel == 0 ? log_part[i] : regular[i];
      if (c.is_zero()) continue;
      if (any) os << " + ";
      any = true;
      os << "(";
      for (int d = 0; d <= c.degree(); ++d) {
        if (d > 0) os << ", ";
        os << eulertop::to_string(c.coeff(d));
      }
      os << ")*h^" << power << (channel == 0 ? "*log|h|" : "");
    }
  }
  if (!any) os << "0";
  os << " + O(h^" << max_power() + 1 << ")";
  return os.str();
}

namespace {

LaurentLogSeries from_log_series(const LogSeries& f) {
  return {0, f.log_part.coefficients(), f.regular.coefficients()};
}

// d/dh (l h^n log|h|) = n l h^(n-1) log|h| + l h^(n-1).
LaurentLogSeries derivative(const LaurentLogSeries& f) {
  LaurentLogSeries out{f.min_power - 1, f.log_part, f.regular};
  for (std::size_t i = 0; i < f.regular.size(); ++i) {
    const Rational n(f.min_power + static_cast<int>(i));
    out.log_part[i] = f.log_part[i] * n;
    out.regular[i] = f.regular[i] * n + f.log_part[i];
  }
  return out;
}

// p(h) f; known through the same top power as f.
LaurentLogSeries times(const HPoly& p, const LaurentLogSeries& f) {
  LaurentLogSeries out{f.min_power, std::vector<KappaPoly>(f.regular.size()), std::vector<KappaPoly>(f.regular.size())};
  for (int j = 0; j <= p.degree(); ++j) {
    const KappaPoly& pj = p.coefficients()[static_cast<std::size_t>(j)];
    if (pj.is_zero()) continue;
    for (std::size_t i = 0; i + static_cast<std::size_t>(j) < f.regular.size(); ++i) {
      out.log_part[i + static_cast<std::size_t>(j)] += pj * f.log_part[i];
      out.regular[i + static_cast<std::size_t>(j)] += pj * f.regular[i];
    }
  }
  return out;
}

// Sum over a common power range, truncated at the lower top power.
LaurentLogSeries add(const LaurentLogSeries& a, const LaurentLogSeries& b) {
  const int lo = std::min(a.min_power, b.min_power);
  const int hi = std::min(a.max_power(), b.max_power());
  LaurentLogSeries out{lo, {}, {}};
  if (hi < lo) return out;
  const auto n = static_cast<std::size_t>(hi - lo + 1);
  out.log_part.assign(n, KappaPoly());
  out.regular.assign(n, KappaPoly());
  for (const LaurentLogSeries* s : {&a, &b}) {
    for (std::size_t i = 0; i < s->regular.size(); ++i) {
      const int power = s->min_power + static_cast<int>(i);
      if (power > hi) break;
      out.log_part[static_cast<std::size_t>(power - lo)] += s->log_part[i];
      out.regular[static_cast<std::size_t>(power - lo)] += s->regular[i];
    }
  }
  return out;
}

LaurentLogSeries apply_operator(const LaurentLogSeries& f, PFEquation which) {
  const PFCoefficients c = derive_pf_coefficients();
  if (which == PFEquation::I) {
    const LaurentLogSeries d1 = derivative(f);
    const LaurentLogSeries d2 = derivative(d1);
    const LaurentLogSeries d3 = derivative(d2);
    return add(add(times(c.c3, d3), times(c.c2, d2)), add(times(c.c1, d1), times(c.c0, f)));
  }
  const LaurentLogSeries d1 = derivative(f);
  const LaurentLogSeries d2 = derivative(d1);
  return add(add(times(c.c3, d2), times(c.c2, d1)), times(c.c1, f));
}

}  // namespace

LaurentLogSeries pf_residual(const PowerSeries& f, PFEquation which) {
  return pf_residual(LogSeries(PowerSeries(f.variable(), f.order()), f), which);
}

LaurentLogSeries pf_residual(const LogSeries& f, PFEquation which) {
  const int needed = which == PFEquation::I ? 3 : 2;
  if (f.order() < needed) throw UsageError("pf_residual needs a series of order >= " + std::to_string(needed));
  return apply_operator(from_log_series(f), which);
}

BetaAction beta_action(Side side) {
  const Rational sign = side == Side::plus ? Rational(1) : Rational(-1);
  BetaAction b{side, SymbolicConstant::atom(Atom::half_log_64_over_k2p4, -sign), side == Side::plus ? 1 : -1,
               SymbolicConstant::atom(side == Side::plus ? Atom::inv_pi_atan_inv_rho : Atom::inv_pi_atan_rho),
               SymbolicConstant::atom(side == Side::plus ? Atom::area_plus : Atom::area_minus)};
  return b;
}

BetaActions assemble_beta_actions(int order) {
  return {beta_action(Side::plus), beta_action(Side::minus), build_action_series(order)};
}

}  // namespace eulertop
