// Copyright 2026 The gksl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gksl_cli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "gksl/collision.hpp"
#include "gksl/fermigauss.hpp"
#include "gksl/lattloss.hpp"
#include "gksl/liouvillian.hpp"
#include "gksl/weakcoupling.hpp"
#include "gksl_cli/xxz.hpp"

namespace gksl::cli {
namespace {

double num(const Json& j, const char* key) { return j.at(key).get<double>(); }
int integer(const Json& j, const char* key) { return j.at(key).get<int>(); }
std::string str(const Json& j, const char* key) { return j.at(key).get<std::string>(); }
bool has(const Json& j, const char* key) { return j.contains(key) && !j.at(key).is_null(); }

std::vector<double> linspace(double t_final, int steps) {
  std::vector<double> t;
  for (int i = 0; i <= steps; ++i) t.push_back(t_final * i / steps);
  return t;
}

CVector qubit_state(const std::string& name) {
  CVector psi = CVector::Zero(2);
  if (name == "excited") {
    psi(1) = 1.0;
  } else if (name == "ground") {
    psi(0) = 1.0;
  } else {
    psi.setConstant(1.0 / std::sqrt(2.0));
  }
  return psi;
}

// --- relax -----------------------------------------------------------------

ExperimentResult run_relax(const ExperimentConfig& c) {
  const Json& m = c.model;
  const double omega = num(m, "omega");
  const double beta = num(m, "beta");
  const double down = num(m, "gamma_down");
  const double up = has(m, "gamma_up") ? num(m, "gamma_up") : down * std::exp(-beta * omega);

  CMatrix h = CMatrix::Zero(2, 2);
  h(1, 1) = omega;
  const HermitianOperator hs(h);
  const BohrSpectrum spectrum = bohr_decompose(hs, CouplingSet({HermitianOperator(pauli::x())}));
  std::vector<BathEntry> entries;
  for (double w : spectrum.frequencies) {
    const double g = w > 0.0 ? down : (w < 0.0 ? up : 0.0);
    entries.push_back({w, CMatrix::Constant(1, 1, g), CMatrix::Zero(1, 1)});
  }
  const BathSpectralFunction bath(std::move(entries), beta);
  const LindbladModel model = build_secular_lindblad(spectrum, bath);

  const CVector psi0 = qubit_state(str(m, "initial"));
  const std::vector<double> times = linspace(num(m, "t_final"), integer(m, "steps"));
  const std::string method = str(m, "method");
  std::vector<CMatrix> states;
  if (method == "trajectories") {
    TrajectoryOptions opts;
    opts.dt = num(m, "dt");
    opts.n_traj = integer(m, "trajectories");
    opts.seed = c.seed;
    for (double t : times) {
      if (t == 0.0) {
        states.push_back(psi0 * psi0.adjoint());
        continue;
      }
      opts.t_final = t;
      states.push_back(run_trajectories(model, psi0, opts).mean_state.matrix());
    }
  } else {
    PropagationOptions opts;
    opts.method = method == "rk" ? PropagationMethod::AdaptiveRk : PropagationMethod::ExactExp;
    for (const DensityMatrix& rho : propagate_series(model, DensityMatrix::pure(psi0), times, opts)) {
      states.push_back(rho.matrix());
    }
  }

  ExperimentResult r;
  CsvTable table({"t", "p0", "p1", "coherence_abs"});
  for (std::size_t i = 0; i < times.size(); ++i) {
    const CMatrix& rho = states[i];
    table.add_row({times[i], rho(0, 0).real(), rho(1, 1).real(), std::abs(rho(0, 1))});
  }
  r.tables.emplace_back("", std::move(table));

  const double total = up + down;
  const double p1_stationary = total > 0.0 ? up / total : states.front()(1, 1).real();
  const double boltzmann_p1 = std::exp(-beta * omega) / (1.0 + std::exp(-beta * omega));
  const double deviation = std::abs(states.back()(1, 1).real() - p1_stationary);
  r.results = {{"gamma_up", up},
               {"stationary_p1", p1_stationary},
               {"boltzmann_p1", boltzmann_p1},
               {"detailed_balance", check_detailed_balance(bath, beta, 1e-12).pass},
               {"final_deviation", deviation}};
  r.converged = deviation <= num(c.tolerances, "boltzmann");
  return r;
}

// --- spectrum --------------------------------------------------------------

ExperimentResult run_spectrum(const ExperimentConfig& c) {
  const Json& m = c.model;
  const int l = integer(m, "sites");
  const Index dim = Index{1} << l;
  CMatrix h = CMatrix::Zero(dim, dim);
  std::vector<CMatrix> jumps;
  for (int j = 1; j <= l; ++j) {
    h += num(m, "field") * site_operator(pauli::number(), j, l);
    if (j < l) {
      const CMatrix hop = two_site_operator(pauli::raise(), j, pauli::lower(), j + 1, l);
      h += num(m, "hopping") * (hop + hop.adjoint());
    }
    if (num(m, "damping") > 0.0) jumps.push_back(std::sqrt(num(m, "damping")) * site_operator(pauli::lower(), j, l));
    if (num(m, "pumping") > 0.0) jumps.push_back(std::sqrt(num(m, "pumping")) * site_operator(pauli::raise(), j, l));
    if (num(m, "dephasing") > 0.0) {
      jumps.push_back(std::sqrt(num(m, "dephasing")) * site_operator(pauli::z(), j, l));
    }
  }
  const LindbladModel model(HermitianOperator(h), std::move(jumps));
  const std::optional<double> tol =
      has(c.tolerances, "zero") ? std::optional<double>(num(c.tolerances, "zero")) : std::nullopt;
  const SteadyState ss = steady_state(model, tol);
  const CommutantResult comm = commutant_uniqueness_test(model);

  std::vector<Complex> lambdas(ss.spectrum.data(), ss.spectrum.data() + ss.spectrum.size());
  std::sort(lambdas.begin(), lambdas.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
  });
  ExperimentResult r;
  CsvTable table({"index", "re", "im"});
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    table.add_row({static_cast<double>(i), lambdas[i].real(), lambdas[i].imag()});
  }
  r.tables.emplace_back("", std::move(table));
  r.results = {{"gap", ss.gap},
               {"unique", ss.unique},
               {"kernel_dimension", ss.null_space.size()},
               {"zero_tolerance", ss.zero_tolerance},
               {"irreducible", comm.irreducible},
               {"commutant_dimension", comm.dimension},
               {"residual", ss.residual}};
  return r;
}

// --- pauli -----------------------------------------------------------------

ExperimentResult run_pauli(const ExperimentConfig& c) {
  const Json& m = c.model;
  const auto energies = m.at("energies").get<std::vector<double>>();
  const auto d = static_cast<Index>(energies.size());
  CMatrix h = CMatrix::Zero(d, d);
  CMatrix ladder = CMatrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    h(i, i) = energies[static_cast<std::size_t>(i)];
    if (i + 1 < d) ladder(i, i + 1) = ladder(i + 1, i) = 1.0;
  }
  const HermitianOperator hs(h);
  const BohrSpectrum spectrum = bohr_decompose(hs, CouplingSet({HermitianOperator(ladder)}));
  BathFamilySpec family;
  family.type = str(m, "family") == "ohmic" ? BathFamily::Ohmic : BathFamily::Flat;
  family.coupling = num(m, "coupling");
  family.beta = num(m, "beta");
  family.cutoff = num(m, "cutoff");
  const BathSpectralFunction bath = evaluate_bath_family(family, spectrum);
  const PauliMasterModel pauli = extract_pauli_model(spectrum, bath, hs);
  const LindbladModel lindblad = build_secular_lindblad(spectrum, bath);

  RVector p0 = RVector::Zero(d);
  if (has(m, "initial_populations")) {
    const auto p = m.at("initial_populations").get<std::vector<double>>();
    for (Index i = 0; i < d; ++i) p0(i) = p[static_cast<std::size_t>(i)];
  } else {
    p0(d - 1) = 1.0;
  }
  const CMatrix& v = spectrum.eigen.vectors;
  const DensityMatrix rho0(v * p0.cast<Complex>().asDiagonal() * v.adjoint());
  const std::vector<double> times = linspace(num(m, "t_final"), integer(m, "steps"));
  const std::vector<DensityMatrix> states = propagate_series(lindblad, rho0, times);

  std::vector<std::string> header = {"t"};
  for (Index i = 0; i < d; ++i) header.push_back("p" + std::to_string(i));
  header.push_back("lindblad_deviation");
  CsvTable table(header);
  double worst = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const RVector p = evolve_pauli(pauli, p0, times[k]);
    const RVector diag = (v.adjoint() * states[k].matrix() * v).diagonal().real();
    const double dev = (p - diag).cwiseAbs().maxCoeff();
    worst = std::max(worst, dev);
    std::vector<double> row = {times[k]};
    for (Index i = 0; i < d; ++i) row.push_back(p(i));
    row.push_back(dev);
    table.add_row(std::move(row));
  }
  ExperimentResult r;
  r.tables.emplace_back("", std::move(table));
  const RVector stationary = pauli_stationary(pauli);
  r.results = {{"max_lindblad_deviation", worst},
               {"consistent", worst <= num(c.tolerances, "consistency")},
               {"stationary", std::vector<double>(stationary.data(), stationary.data() + d)},
               {"detailed_balance", check_detailed_balance(bath, num(m, "beta"), 1e-10).pass}};
  return r;
}

// --- collision_converge ----------------------------------------------------

ExperimentResult run_collision(const ExperimentConfig& c) {
  const Json& m = c.model;
  const double tau0 = num(m, "tau0");
  const ExchangeCollisionModel ex =
      exchange_collision_model(num(m, "omega"), num(m, "coupling"), num(m, "n_ancilla"), tau0);
  std::vector<double> taus;
  for (double f : m.at("factors").get<std::vector<double>>()) taus.push_back(f * tau0);
  const DensityMatrix rho0 = DensityMatrix::pure(qubit_state(str(m, "initial")));
  const bool scaled = m.at("scaled").get<bool>();
  const double t_final = num(m, "t_final");
  const ContinuumReport lindblad = continuum_limit_check(ex.spec, ex.reference, rho0, taus, t_final, scaled);
  const LindbladModel free(ex.reference.hamiltonian(), {});
  const ContinuumReport unitary = continuum_limit_check(ex.spec, free, rho0, taus, t_final, scaled);

  ExperimentResult r;
  CsvTable table({"tau", "steps", "error", "unitary_error"});
  for (std::size_t i = 0; i < taus.size(); ++i) {
    table.add_row({taus[i], static_cast<double>(lindblad.steps[i]), lindblad.errors[i], unitary.errors[i]});
  }
  r.tables.emplace_back("", std::move(table));
  const double order = lindblad.fitted_order;
  r.results = {{"fitted_order", std::isfinite(order) ? Json(order) : Json(nullptr)},
               {"order_in_window", std::isfinite(order) && order >= num(c.tolerances, "order_min") &&
                                       order <= num(c.tolerances, "order_max")},
               {"scaled", scaled}};
  return r;
}

// --- transport -------------------------------------------------------------

ExperimentResult run_transport(const ExperimentConfig& c) {
  const Json& m = c.model;
  const double hopping = num(m, "hopping");
  const double n_left = num(m, "n_left"), n_right = num(m, "n_right");
  const LyapunovSolver solver = str(m, "solver") == "schur" ? LyapunovSolver::Schur : LyapunovSolver::Vectorized;
  ExperimentResult r;
  CsvTable table({"length", "bond", "current"});
  Json per_length = Json::array();
  std::vector<double> first;
  bool flat = true;
  for (int l : m.at("lengths").get<std::vector<int>>()) {
    const LyapunovSteadyState ss = lyapunov_steady(boundary_chain(l, hopping, num(m, "coupling"), n_left, n_right), solver);
    const std::vector<double> j = bond_currents(ss.c, hopping);
    const auto [lo, hi] = std::minmax_element(j.begin(), j.end());
    for (std::size_t k = 0; k < j.size(); ++k) table.add_row({double(l), double(k + 1), j[k]});
    flat = flat && (*hi - *lo) <= num(c.tolerances, "flatness");
    first.push_back(j.front());
    per_length.push_back({{"length", l}, {"unique", ss.unique}, {"residual", ss.residual}, {"flatness", *hi - *lo}});
  }
  r.tables.emplace_back("", std::move(table));
  const auto [lo, hi] = std::minmax_element(first.begin(), first.end());
  const double scale = std::max(std::abs(*lo), std::abs(*hi));
  r.results = {{"lengths", per_length},
               {"flat", flat},
               {"relative_spread", scale > 0.0 ? (*hi - *lo) / scale : 0.0},
               {"kappa", n_left != n_right ? Json(first.front() / (n_left - n_right)) : Json(nullptr)}};
  return r;
}

// --- rainbow ---------------------------------------------------------------

ExperimentResult run_rainbow(const ExperimentConfig& c) {
  const Json& m = c.model;
  RainbowOptions o;
  o.length = integer(m, "length");
  o.hopping = num(m, "hopping");
  o.coupling = num(m, "coupling");
  o.bell_phase = num(m, "bell_phase");
  o.preparation = str(m, "preparation") == "bell" ? AncillaPreparation::Bell : AncillaPreparation::Product;
  if (has(m, "collision_tau")) o.collision_tau = num(m, "collision_tau");
  o.max_collisions = integer(m, "max_collisions");
  o.fixed_collisions = m.at("fixed_collisions").get<bool>();
  o.threshold = num(c.tolerances, "threshold");
  const RainbowReport rep = rainbow_experiment(o);

  ExperimentResult r;
  CsvTable table({"site", "fidelity", "cross_abs"});
  for (const RainbowPair& p : rep.pairs) table.add_row({double(p.site), p.fidelity, std::abs(p.cross_correlation)});
  r.tables.emplace_back("", std::move(table));
  r.results = {{"min_fidelity", rep.min_fidelity},
               {"all_above_threshold", rep.all_above_threshold},
               {"max_cross_correlation", rep.max_cross_correlation},
               {"collisions", rep.collisions}};
  return r;
}

// --- loss ------------------------------------------------------------------

ExperimentResult run_loss(const ExperimentConfig& c) {
  const Json& m = c.model;
  LossModel model;
  model.sites = integer(m, "sites");
  model.hopping = num(m, "hopping");
  model.order = integer(m, "order");
  model.rate = num(m, "rate");
  model.boundary = str(m, "boundary") == "periodic" ? Boundary::Periodic : Boundary::Open;
  model.trap = num(m, "trap");
  const std::vector<int> occ = has(m, "initial") ? m.at("initial").get<std::vector<int>>()
                                                  : std::vector<int>(static_cast<std::size_t>(model.sites), 1);
  const std::vector<double> times = linspace(num(m, "t_final"), integer(m, "steps"));
  std::optional<PropagationOptions> opts;
  const std::string method = str(m, "method");
  if (method != "auto") {
    opts = default_loss_propagation(model);
    opts->method = method == "exact" ? PropagationMethod::ExactExp : PropagationMethod::AdaptiveRk;
  }
  const DensitySeries series = density_trajectory(model, occupation_state(occ), times, opts);

  ExperimentResult r;
  CsvTable density({"t", "n"});
  CsvTable momentum({"t", "k", "nk"});
  const std::vector<double> ks = momentum_grid(model.sites);
  double worst_increase = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    density.add_row({times[i], series.density[i]});
    const RVector nk = momentum_occupation(model, series.states[i].matrix());
    for (std::size_t q = 0; q < ks.size(); ++q) momentum.add_row({times[i], ks[q], nk(static_cast<Index>(q))});
    if (i > 0) worst_increase = std::max(worst_increase, series.density[i] - series.density[i - 1]);
  }
  r.tables.emplace_back("", std::move(density));
  r.tables.emplace_back("momentum", std::move(momentum));
  r.results = {{"max_density_increase", worst_increase},
               {"monotone", worst_increase <= num(c.tolerances, "monotone")},
               {"initial_first_fourier_mode",
                first_fourier_mode(momentum_occupation(model, series.states.front().matrix()))}};
  if (has(m, "fit_window")) {
    const auto w = m.at("fit_window").get<std::vector<double>>();
    const DecayFit fit = decay_exponent_fit(times, series.density, w[0], w[1]);
    r.results["fit"] = {{"alpha", fit.alpha},
                        {"std_error", fit.std_error},
                        {"points", fit.points},
                        {"loglog_curvature", fit.loglog_curvature},
                        {"semilog_curvature", fit.semilog_curvature},
                        {"non_power_law", fit.non_power_law},
                        {"non_exponential", fit.non_exponential}};
  }
  return r;
}

// --- xxz_ness --------------------------------------------------------------

Direction direction(const Json& j, const char* key) {
  const auto v = j.at(key).get<std::vector<double>>();
  return {v[0], v[1], v[2]};
}

ExperimentResult run_xxz(const ExperimentConfig& c) {
  const Json& m = c.model;
  XxzOptions o;
  o.sites = integer(m, "sites");
  o.exchange = num(m, "exchange");
  o.delta = num(m, "delta");
  o.gamma_left = num(m, "gamma_left");
  o.gamma_right = num(m, "gamma_right");
  o.left = direction(m, "left");
  o.right = direction(m, "right");
  const XxzReport rep = xxz_ness_experiment(o);

  ExperimentResult r;
  CsvTable table({"bond", "jx", "jy", "jz"});
  for (std::size_t k = 0; k < rep.currents.size(); ++k) {
    table.add_row({double(k + 1), rep.currents[k][0], rep.currents[k][1], rep.currents[k][2]});
  }
  r.tables.emplace_back("", std::move(table));
  const double zero = num(c.tolerances, "zero");
  Json nonzero = Json::array();
  for (int a = 0; a < 3; ++a) {
    bool all = true;
    for (const auto& j : rep.currents) all = all && std::abs(j[a]) > zero;
    nonzero.push_back(all);
  }
  r.results = {{"unique", rep.unique},
               {"residual", rep.residual},
               {"flatness", rep.flatness},
               {"z_flat", rep.flatness[2] <= num(c.tolerances, "flatness")},
               {"nonzero", nonzero},
               {"magnetization", rep.magnetization}};
  return r;
}

}  // namespace

void check_consistency(const ExperimentConfig& c) {
  const Json& m = c.model;
  switch (c.experiment) {
    case ExperimentKind::Pauli: {
      const auto e = m.at("energies").get<std::vector<double>>();
      if (has(m, "initial_populations")) {
        const auto p = m.at("initial_populations").get<std::vector<double>>();
        if (p.size() != e.size()) throw ConfigError("model.initial_populations: length must match model.energies");
        double sum = 0.0;
        for (double x : p) sum += x;
        if (std::abs(sum - 1.0) > 1e-10) throw ConfigError("model.initial_populations: must sum to 1");
      }
      break;
    }
    case ExperimentKind::Loss: {
      const int l = integer(m, "sites");
      if (integer(m, "order") > l) throw ConfigError("model.order: must not exceed model.sites");
      if (has(m, "initial") && m.at("initial").size() != static_cast<std::size_t>(l)) {
        throw ConfigError("model.initial: length must equal model.sites");
      }
      if (has(m, "fit_window")) {
        const auto w = m.at("fit_window").get<std::vector<double>>();
        if (w.size() != 2 || !(w[0] < w[1])) throw ConfigError("model.fit_window: expected [t_min, t_max], t_min < t_max");
      }
      break;
    }
    case ExperimentKind::CollisionConverge: {
      for (double f : m.at("factors").get<std::vector<double>>()) {
        if (!(f > 0.0)) throw ConfigError("model.factors: entries must be > 0");
      }
      break;
    }
    default:
      break;
  }
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  check_consistency(config);
  switch (config.experiment) {
    case ExperimentKind::Relax: return run_relax(config);
    case ExperimentKind::Spectrum: return run_spectrum(config);
    case ExperimentKind::Pauli: return run_pauli(config);
    case ExperimentKind::CollisionConverge: return run_collision(config);
    case ExperimentKind::Transport: return run_transport(config);
    case ExperimentKind::Rainbow: return run_rainbow(config);
    case ExperimentKind::Loss: return run_loss(config);
    case ExperimentKind::XxzNess: return run_xxz(config);
  }
  throw ConfigError("experiment: unsupported kind");
}

}  // namespace gksl::cli
