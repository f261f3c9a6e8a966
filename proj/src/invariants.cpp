#include "eulertop/invariants.hpp"

#include <cmath>

namespace eulertop {

PowerSeries alpha_action(int order) { return alpha_action_at(order, kappa()); }

PowerSeries bnf_via_reversion(int order) { return bnf_via_reversion_at(order, kappa()); }

InvariantReport extract_sigma(int order) {
  SigmaPair<KappaPoly> p = sigma_branches_at(order, kappa());
  if (!p.consistent) throw InternalError("sigma differs between the plus and minus branches");
  return {p.plus.linear,
          p.plus.tail,
          beta_action(Side::plus).area,
          beta_action(Side::minus).area,
          p.consistent,
          bnf_via_reversion(order)};
}

std::vector<PendulumRow> pendulum_compare(const std::vector<double>& kappas) {
  const double ln32 = std::log(32.0);
  const double ln8 = std::log(8.0);
  std::vector<PendulumRow> rows;
  rows.reserve(kappas.size());
  for (double k : kappas) {
    const double lead = atom_value(Atom::half_log_64_over_k2p4, k);
    const double margin = ln32 - lead;
    rows.push_back({k, lead, margin, margin >= ln8 - 1e-12});
  }
  return rows;
}

}  // namespace eulertop
