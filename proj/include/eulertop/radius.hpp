#ifndef EULERTOP_RADIUS_HPP
#define EULERTOP_RADIUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "eulertop/numeric/real.hpp"
#include "eulertop/rational.hpp"

namespace eulertop {

enum class RadiusTarget { a_seq, b_seq, bnf_seq, sigma_seq };

const char* to_string(RadiusTarget t);
std::optional<RadiusTarget> radius_target_from_string(const std::string& name);

struct RadiusReport {
  std::string name;
  // r_n = |c_m / c_n|^(1/(n-m)) with m the previous index carrying a nonzero
  // coefficient. Indices with c_n = 0 are listed in `skipped`.
  std::vector<int> n;
  std::vector<double> estimates;
  std::vector<int> skipped;
  // Linear fit r_n = r + c/n through consecutive estimates followed by one
  // Aitken delta-squared step on the last three fitted values.
  double extrapolated = 0.0;
  // (1/2) min(rho, 1/rho) for the Frobenius sequences.
  std::optional<double> theoretical;
};

// Ratio estimate for an exact coefficient list; entries before `first` are
// ignored (used to drop c_0, c_1 where they carry no information).
RadiusReport ratio_report(const std::string& name, const std::vector<Rational>& coeffs, int first = 1);

// Coefficient lists at a fixed rational kappa, indices 0..n_max.
std::vector<Rational> radius_sequence(RadiusTarget target, const Rational& kappa, int n_max);

std::vector<RadiusReport> radius_analysis(const Rational& kappa, int n_max, const std::vector<RadiusTarget>& targets);

// (1/2) min(rho, 1/rho).
double theoretical_radius(const Rational& kappa);

}  // namespace eulertop

#endif  // EULERTOP_RADIUS_HPP
