#include "eulertop/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eulertop/invariants.hpp"
#include "eulertop/normal_form.hpp"
#include "eulertop/numeric_oracle.hpp"
#include "eulertop/radius.hpp"

namespace eulertop::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Csv {
  std::vector<std::string> rows;
  void add(const std::string& series, int n, int kappa_power, const Rational& c) {
    std::ostringstream os;
    os << series << "," << n << "," << kappa_power << "," << c.get_num().get_str() << "," << c.get_den().get_str();
    rows.push_back(os.str());
  }
};

// Collects the JSON document and, for series, the CSV rows.
class Emitter {
 public:
  Json doc = Json::object();
  Csv csv;

  Json poly(const KappaPoly& p) const {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
    return arr;
  }

  Json series(const std::string& name, const PowerSeries& s) {
    Json coeffs = Json::array();
    for (int n = 0; n <= s.order(); ++n) {
      coeffs.push_back(poly(s[n]));
      const auto& cs = s[n].coefficients();
      for (std::size_t d = 0; d < cs.size(); ++d) {
        if (!is_zero(cs[d])) csv.add(name, n, static_cast<int>(d), cs[d]);
      }
    }
    return Json{{"variable", to_string(s.variable())}, {"order", s.order()}, {"coefficients", coeffs}};
  }

  Json values(const std::string& name, const RationalSeries& s) {
    Json arr = Json::array();
    for (int n = 0; n <= s.order(); ++n) {
      arr.push_back(to_string(s[n]));
      if (!is_zero(s[n])) csv.add(name, n, 0, s[n]);
    }
    return Json{{"variable", to_string(s.variable())}, {"order", s.order()}, {"coefficients", arr}};
  }

  Json list(const std::string& name, const std::vector<KappaPoly>& v) {
    Json arr = Json::array();
    for (std::size_t n = 0; n < v.size(); ++n) {
      arr.push_back(poly(v[n]));
      const auto& cs = v[n].coefficients();
      for (std::size_t d = 0; d < cs.size(); ++d) {
        if (!is_zero(cs[d])) csv.add(name, static_cast<int>(n), static_cast<int>(d), cs[d]);
      }
    }
    return arr;
  }

  Json values(const std::string& name, const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (std::size_t n = 0; n < v.size(); ++n) {
      arr.push_back(to_string(v[n]));
      if (!is_zero(v[n])) csv.add(name, static_cast<int>(n), 0, v[n]);
    }
    return arr;
  }
};

Json symbolic(const SymbolicConstant& c, const std::optional<Rational>& kappa) {
  Json out = Json::object();
  if (c.atoms().size() == 1 && is_zero(c.rational_part())) {
    const auto& [atom, coeff] = *c.atoms().begin();
    out["sym"] = std::string(atom_tag(atom));
    out["coefficient"] = to_string(coeff);
    if (kappa) {
      const std::string d = atom_display(atom, *kappa);
      out["display"] = coeff == 1 ? d : to_string(coeff) + " * " + d;
    }
  } else {
    Json terms = Json::array();
    for (const auto& [atom, coeff] : c.atoms()) {
      terms.push_back(Json{{"sym", std::string(atom_tag(atom))}, {"coefficient", to_string(coeff)}});
    }
    out["terms"] = terms;
    out["constant"] = to_string(c.rational_part());
  }
  if (kappa) out["numeric"] = c.evaluate(kappa->get_d());
  return out;
}

std::string real_string(const Real& x, int digits) { return to_string(x, digits); }

int order_or(const CommandConfig& c, int fallback) {
  const int n = c.order.value_or(fallback);
  if (n < 1) throw ValidationError("--order must be >= 1");
  return n;
}

// Resolves kappa from --kappa or from --theta/--ell; the latter is converted
// to the exact binary value of the double.
std::optional<Rational> resolve_kappa(const CommandConfig& c) {
  if (c.kappa) return c.kappa;
  if (c.theta) {
    const TopParams p = params_from_inertia((*c.theta)[0], (*c.theta)[1], (*c.theta)[2], c.ell);
    return Rational(p.kappa);
  }
  return std::nullopt;
}

void cmd_bnf(const CommandConfig& c, Emitter& e) {
  const int n = order_or(c, 7);
  const BirkhoffNormalForm lie = birkhoff_normalize(williamson_reduce(expand_hamiltonian(2 * n)), n);
  const PowerSeries rev = bnf_via_reversion(n);
  if (lie.series != rev) throw InternalError("Lie-transform and reversion normal forms differ");
  e.doc["order"] = n;
  e.doc["series"] = e.series("bnf", lie.series);
  e.doc["methods_agree"] = true;
  if (auto k = resolve_kappa(c)) {
    e.doc["kappa"] = to_string(*k);
    e.doc["at_kappa"] = e.values("bnf_at_kappa", at_kappa(lie.series, *k));
  }
}

void cmd_frobenius(const CommandConfig& c, Emitter& e) {
  const int n = order_or(c, 40);
  const auto a = frobenius_a(n, FrobeniusMethod::recursion);
  const auto b = frobenius_b_recursion(a, kappa());
  const bool agree = a == frobenius_a(n, FrobeniusMethod::closed_form) && b == frobenius_b(n, FrobeniusMethod::closed_form);
  if (!agree) throw InternalError("Frobenius recursion and closed form disagree");
  e.doc["order"] = n;
  e.doc["a"] = e.list("a", a);
  e.doc["b"] = e.list("b", b);
  e.doc["methods_agree"] = agree;
  if (auto k = resolve_kappa(c)) {
    std::vector<Rational> av, bv;
    for (const auto& p : a) av.push_back(p.evaluate(*k));
    for (const auto& p : b) bv.push_back(p.evaluate(*k));
    e.doc["kappa"] = to_string(*k);
    e.doc["a_at_kappa"] = e.values("a_at_kappa", av);
    e.doc["b_at_kappa"] = e.values("b_at_kappa", bv);
  }
}

void cmd_actions(const CommandConfig& c, Emitter& e) {
  const int n = order_or(c, 40);
  const BetaActions beta = assemble_beta_actions(n);
  const std::optional<Rational> k = resolve_kappa(c);
  e.doc["order"] = n;
  e.doc["T_r"] = e.series("T_r", beta.basis.T_r);
  e.doc["T_s"] = Json{{"log_part", e.series("T_s_log", beta.basis.T_s.log_part)},
                      {"regular", e.series("T_s_regular", beta.basis.T_s.regular)}};
  e.doc["two_pi_I_r"] = e.series("two_pi_I_r", beta.basis.two_pi_I_r);
  e.doc["two_pi_I_s"] = Json{{"log_part", e.series("two_pi_I_s_log", beta.basis.two_pi_I_s.log_part)},
                             {"regular", e.series("two_pi_I_s_regular", beta.basis.two_pi_I_s.regular)}};
  for (const BetaAction* b : {&beta.plus, &beta.minus}) {
    e.doc["beta"][to_string(b->side)] = Json{{"k1", symbolic(b->k1, k)},
                                             {"k2", b->k2},
                                             {"k3", symbolic(b->k3, k)},
                                             {"area", symbolic(b->area, k)}};
  }
  if (k) e.doc["kappa"] = to_string(*k);
}

void cmd_invariant(const CommandConfig& c, Emitter& e) {
  const int n = order_or(c, 7);
  if (n < 2) throw ValidationError("invariant needs --order >= 2");
  const InvariantReport rep = extract_sigma(n);
  const std::optional<Rational> k = resolve_kappa(c);
  e.doc["order"] = n;
  e.doc["linear"] = symbolic(rep.linear, k);
  e.doc["tail"] = e.series("sigma_tail", rep.tail);
  e.doc["areas"] = Json{{"plus", symbolic(rep.area_plus, k)}, {"minus", symbolic(rep.area_minus, k)}};
  e.doc["branch_consistent"] = rep.branch_consistent;
  if (k) {
    e.doc["kappa"] = to_string(*k);
    e.doc["tail_at_kappa"] = e.values("sigma_tail_at_kappa", at_kappa(rep.tail, *k));
    e.doc["area_sum_minus_pi"] = rep.area_plus.evaluate(k->get_d()) + rep.area_minus.evaluate(k->get_d()) - M_PI;
  }
}

void cmd_verify(const CommandConfig& c, Emitter& e) {
  const std::optional<Rational> k = resolve_kappa(c);
  if (!k) throw ValidationError("verify needs --kappa or --theta");
  const int n = order_or(c, 30);
  std::vector<Real> samples;
  if (c.h_samples.empty()) {
    for (const char* s : {"-0.02", "-0.005", "0.005", "0.02"}) samples.push_back(to_real(parse_rational(s)));
  } else {
    for (const auto& s : c.h_samples) samples.push_back(to_real(parse_rational(s)));
  }
  QuadratureScheme scheme;
  if (c.scheme == "gauss_legendre") {
    scheme = QuadratureScheme::gauss_legendre;
  } else if (c.scheme == "tanh_sinh") {
    scheme = QuadratureScheme::tanh_sinh;
  } else {
    throw ValidationError("--scheme must be gauss_legendre or tanh_sinh");
  }
  const VerifyReport rep = verify_series_numerics(*k, samples, n, c.tolerance, scheme);
  e.doc["kappa"] = to_string(*k);
  e.doc["order"] = n;
  e.doc["scheme"] = to_string(scheme);
  e.doc["disc_radius"] = rep.disc_radius;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    rows.push_back(Json{{"h", real_string(r.h, c.precision)},
                        {"side", to_string(r.side)},
                        {"series", real_string(r.series, c.precision)},
                        {"quadrature", real_string(r.quadrature, c.precision)},
                        {"deviation", r.deviation},
                        {"quadrature_error", r.quadrature_error}});
  }
  e.doc["rows"] = rows;
  e.doc["max_deviation"] = rep.max_deviation;
  e.doc["side_sum_error"] = rep.side_sum_error;
  e.doc["area_sum_error"] = rep.area_sum_error;
}

void cmd_radius(const CommandConfig& c, Emitter& e) {
  if (!c.kappa) throw ValidationError("radius needs an exact --kappa");
  std::vector<RadiusTarget> targets;
  if (c.targets.empty()) {
    targets = {RadiusTarget::a_seq, RadiusTarget::b_seq, RadiusTarget::bnf_seq, RadiusTarget::sigma_seq};
  }
  for (const auto& t : c.targets) {
    auto r = radius_target_from_string(t);
    if (!r) throw ValidationError("unknown radius target '" + t + "' (a-seq, b-seq, bnf-seq, sigma-seq)");
    targets.push_back(*r);
  }
  const auto reports = radius_analysis(*c.kappa, c.n_max, targets);
  e.doc["kappa"] = to_string(*c.kappa);
  e.doc["n_max"] = c.n_max;
  Json arr = Json::array();
  for (const auto& r : reports) {
    Json j{{"sequence", r.name}, {"n", r.n}, {"estimates", r.estimates}, {"skipped", r.skipped},
           {"extrapolated", r.extrapolated}};
    j["theoretical"] = r.theoretical ? Json(*r.theoretical) : Json(nullptr);
    arr.push_back(j);
  }
  e.doc["reports"] = arr;
}

void cmd_pendulum(const CommandConfig& c, Emitter& e) {
  std::vector<double> grid = c.kappa_grid;
  if (grid.empty()) {
    for (int i = 0; i < 100; ++i) grid.push_back(-5.0 + 10.0 * i / 99.0);
  }
  if (c.kappa) grid.push_back(c.kappa->get_d());
  const auto rows = pendulum_compare(grid);
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    arr.push_back(Json{{"kappa", r.kappa}, {"euler_leading", r.euler_leading}, {"margin", r.margin},
                       {"above_bound", r.above_bound}});
    all = all && r.above_bound;
  }
  e.doc["pendulum_leading"] = Json{{"display", "log 32"}, {"numeric", std::log(32.0)}};
  e.doc["euler_maximum"] = Json{{"kappa", "0"}, {"display", atom_display(Atom::half_log_64_over_k2p4, Rational(0))}};
  e.doc["bound"] = Json{{"display", "log 8"}, {"numeric", std::log(8.0)}};
  e.doc["rows"] = arr;
  e.doc["all_above_bound"] = all;
}

void cmd_params(const CommandConfig& c, Emitter& e) {
  if (c.theta) {
    const TopParams p = params_from_inertia((*c.theta)[0], (*c.theta)[1], (*c.theta)[2], c.ell);
    e.doc["theta"] = Json::array({p.theta1, p.theta2, p.theta3});
    e.doc["ell"] = p.ell;
    e.doc["rho"] = p.rho;
    e.doc["kappa"] = p.kappa;
    e.doc["lambda"] = p.lambda;
    e.doc["ordering_valid"] = true;
    return;
  }
  if (!c.kappa) throw ValidationError("params needs --theta (with --ell) or --kappa");
  const Real k = to_real(*c.kappa);
  e.doc["kappa"] = to_string(*c.kappa);
  e.doc["rho"] = real_string(rho_from_kappa(k), c.precision);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"bnf",    "frobenius", "actions",  "invariant",
                                              "verify", "radius",    "pendulum", "params"};
  return names;
}

int execute(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), config.command) == names.end()) {
    err << "unknown command '" << config.command << "'; expected one of:";
    for (const auto& n : names) err << " " << n;
    err << "\n";
    return kExitUnknownCommand;
  }
  try {
    if (config.kappa && config.theta) throw ValidationError("give exactly one of --kappa and --theta");
    if (!(config.tolerance > 0)) throw ValidationError("--tol must be > 0");
    if (config.precision < 1) throw ValidationError("--precision must be >= 1");
    const bool series_command = config.command == "bnf" || config.command == "frobenius" ||
                                config.command == "actions" || config.command == "invariant";
    if (config.format == Format::csv && !series_command) {
      throw ValidationError("csv output is defined for bnf, frobenius, actions and invariant");
    }
    Emitter e;
    e.doc["command"] = config.command;
    if (config.command == "bnf") cmd_bnf(config, e);
    if (config.command == "frobenius") cmd_frobenius(config, e);
    if (config.command == "actions") cmd_actions(config, e);
    if (config.command == "invariant") cmd_invariant(config, e);
    if (config.command == "verify") cmd_verify(config, e);
    if (config.command == "radius") cmd_radius(config, e);
    if (config.command == "pendulum") cmd_pendulum(config, e);
    if (config.command == "params") cmd_params(config, e);
    if (config.format == Format::csv) {
      out << "series,n,kappa_power,numerator,denominator\n";
      for (const auto& r : e.csv.rows) out << r << "\n";
    } else {
      out << e.doc.dump(2) << "\n";
    }
    return kExitOk;
  } catch (const InternalError& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
}

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal forms, action series and the semi-global invariant of the Euler top"};
  app.set_help_flag("--help", "print help");
  std::string command, kappa_text, theta_text, targets_text, h_text, grid_text, format_text = "json";
  CommandConfig config;
  int order = 0;
  if (const char* env = std::getenv("PRECISION")) config.precision = std::atoi(env);
  app.add_option("command", command, "bnf | frobenius | actions | invariant | verify | radius | pendulum | params")
      ->required();
  app.add_option("--kappa", kappa_text, "exact kappa, e.g. 1/2 or 0.25");
  app.add_option("--theta", theta_text, "moments of inertia theta1,theta2,theta3");
  app.add_option("--ell", config.ell, "angular momentum");
  auto* order_opt = app.add_option("--order", order, "series order N");
  app.add_option("--tol", config.tolerance, "quadrature tolerance");
  app.add_option("--format", format_text, "json | csv");
  app.add_option("--precision", config.precision, "significant digits for high-precision values");
  app.add_option("--n-max", config.n_max, "largest coefficient index for radius");
  app.add_option("--targets", targets_text, "a-seq,b-seq,bnf-seq,sigma-seq");
  app.add_option("--h", h_text, "comma-separated h samples for verify");
  app.add_option("--scheme", config.scheme, "gauss_legendre | tanh_sinh");
  app.add_option("--kappa-grid", grid_text, "comma-separated kappa values for pendulum");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitValidation;
  }
  config.command = command;
  if (order_opt->count() > 0) config.order = order;
  try {
    if (!kappa_text.empty()) config.kappa = parse_rational(kappa_text);
    if (!theta_text.empty()) {
      const auto parts = split_commas(theta_text);
      if (parts.size() != 3) throw UsageError("--theta needs three comma-separated values");
      config.theta = std::array<double, 3>{std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2])};
    }
    if (format_text == "json") {
      config.format = Format::json;
    } else if (format_text == "csv") {
      config.format = Format::csv;
    } else {
      throw UsageError("--format must be json or csv");
    }
    config.targets = split_commas(targets_text);
    config.h_samples = split_commas(h_text);
    for (const auto& g : split_commas(grid_text)) config.kappa_grid.push_back(std::stod(g));
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitValidation;
  }
  return execute(config, out, err);
}

}  // namespace eulertop::cli
