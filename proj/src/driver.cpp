#include "splitdg/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "splitdg/cases.hpp"
#include "splitdg/errors.hpp"
#include "splitdg/solver.hpp"
#include "splitdg/time_integration.hpp"

namespace splitdg {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

struct Problem {
  CartesianMesh mesh;
  PolyBasis basis;
  SemidiscreteConfig semi;
  Field initial;
};

Problem make_problem(const RunConfig& cfg, int degree, int elements, FluxScheme scheme,
                     Stabilization stab) {
  cfg.validate();
  GasModel gas{cfg.gamma};
  gas.validate();
  Problem p{build_cartesian_mesh(elements, elements, elements, case_domain(cfg.case_id)),
            build_basis(degree), SemidiscreteConfig{scheme, stab, gas, {}}, Field{}};
  switch (cfg.case_id) {
    case CaseId::manufactured:
      p.semi.source = [gas](double x, double y, double z, double t) {
        return manufactured_source(x, y, z, t, gas);
      };
      p.initial = interpolate_field(p.mesh, p.basis,
                                    [](double x, double y, double z) { return manufactured_solution(x, y, z, 0.0); });
      break;
    case CaseId::tgv:
    case CaseId::tgv_ma04: {
      const TgvVariant variant = cfg.case_id == CaseId::tgv ? TgvVariant::low : TgvVariant::ma04;
      p.initial = interpolate_field(p.mesh, p.basis, [variant, gas](double x, double y, double z) {
        return tgv_initial_condition(x, y, z, variant, gas);
      });
      break;
    }
  }
  return p;
}

ExactSolution manufactured_exact() {
  return [](double x, double y, double z, double t) { return manufactured_solution(x, y, z, t); };
}

DiagnosticsRecord sample(const Field& u, double t, const SplitFormDg& solver) {
  DiagnosticsRecord r = total_quantities(u, solver.mesh(), solver.basis(), solver.gas());
  r.t = t;
  r.enstrophy = enstrophy(u, solver.mesh(), solver.basis());
  const Field rate = solver.compute_residual(u, t);
  r.ke_dissipation_rate = ke_dissipation_rate(u, rate, solver.mesh(), solver.basis());
  r.mu_num = numerical_viscosity(r.ke_dissipation_rate, r.enstrophy);
  return r;
}

void write_header(std::ostream& out, bool with_l2) {
  out << "t,mass,mom_x,mom_y,mom_z,energy,kinetic_energy,entropy_total,enstrophy,"
         "ke_dissipation_rate,mu_num";
  if (with_l2) out << ",l2_rho,l2_rhou,l2_rhov,l2_rhow,l2_rhoe";
  out << '\n';
}

void write_row(std::ostream& out, const DiagnosticsRecord& r, const std::optional<Vec5>& l2, bool with_l2) {
  out << fmt(r.t) << ',' << fmt(r.mass) << ',' << fmt(r.mom_x) << ',' << fmt(r.mom_y) << ','
      << fmt(r.mom_z) << ',' << fmt(r.energy) << ',' << fmt(r.kinetic_energy) << ','
      << fmt(r.entropy_total) << ',' << fmt(r.enstrophy) << ',' << fmt(r.ke_dissipation_rate) << ','
      << fmt(r.mu_num.value_or(kNan));
  if (with_l2) {
    for (int v = 0; v < 5; ++v) out << ',' << fmt(l2 ? (*l2)[v] : kNan);
  }
  out << '\n';
}

RunResult integrate(const RunConfig& cfg, const Problem& problem, std::ostream* csv, bool record) {
  const SplitFormDg solver(problem.mesh, problem.basis, problem.semi);
  const bool manufactured = cfg.case_id == CaseId::manufactured;
  const ExactSolution exact = manufactured_exact();
  Field u = problem.initial;
  LowStorageRk rk;
  RunResult result;
  double t = 0.0;

  auto emit = [&](double time) {
    if (!record && !csv) return;
    DiagnosticsRecord r = sample(u, time, solver);
    std::optional<Vec5> l2;
    if (manufactured) l2 = discrete_l2_error(u, exact, time, solver.mesh(), solver.basis());
    if (csv) write_row(*csv, r, l2, manufactured);
    if (record) result.records.push_back(r);
  };

  if (csv) write_header(*csv, manufactured);
  try {
    emit(0.0);
    long next_output = 1;
    while (t < cfg.t_end) {
      const double out_time = std::min(next_output * cfg.output_interval, cfg.t_end);
      double dt = compute_dt(u, solver.mesh(), solver.basis(), solver.gas(), cfg.cfl);
      // land exactly on output times; avoid a sliver step just before them
      const bool hits = t + dt >= out_time - 1e-12 * std::max(1.0, out_time);
      if (hits) dt = out_time - t;
      rk.step(u, t, dt, solver);
      ++result.steps;
      t = hits ? out_time : t + dt;
      if (hits) {
        u.validate(solver.gas(), t);
        emit(t);
        if (out_time >= next_output * cfg.output_interval) ++next_output;
      }
    }
    u.validate(solver.gas(), t);
  } catch (const InvalidStateError& err) {
    result.crashed = true;
    result.crash_message = err.what();
    t = std::max(t, err.time());
    if (csv) {
      DiagnosticsRecord r;
      r.t = t;
      r.mass = r.mom_x = r.mom_y = r.mom_z = r.energy = kNan;
      r.kinetic_energy = r.entropy_total = r.enstrophy = r.ke_dissipation_rate = kNan;
      write_row(*csv, r, std::nullopt, manufactured);
    }
  }
  result.t_final = t;
  if (manufactured && !result.crashed) {
    result.final_l2 = discrete_l2_error(u, exact, t, solver.mesh(), solver.basis());
  }
  return result;
}

}  // namespace

void apply_thread_limit(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

RunResult run_simulation(const RunConfig& cfg, std::ostream* csv) {
  apply_thread_limit(cfg.threads);
  const Problem problem = make_problem(cfg, cfg.degree, cfg.elements, cfg.scheme, cfg.effective_stab());
  return integrate(cfg, problem, csv, true);
}

std::vector<ConvergenceRow> run_convergence(const RunConfig& cfg, std::ostream* csv) {
  if (cfg.case_id != CaseId::manufactured) {
    throw ConfigError("converge requires case=manufactured");
  }
  if (cfg.grids.size() < 2) throw ConfigError("converge requires at least two grids");
  apply_thread_limit(cfg.threads);
  std::vector<ConvergenceRow> rows;
  if (csv) {
    *csv << "elements,l2_rho,l2_rhou,l2_rhov,l2_rhow,l2_rhoe,"
            "order_rho,order_rhou,order_rhov,order_rhow,order_rhoe\n";
  }
  for (int grid : cfg.grids) {
    const Problem problem = make_problem(cfg, cfg.degree, grid, cfg.scheme, cfg.effective_stab());
    const RunResult res = integrate(cfg, problem, nullptr, false);
    if (res.crashed) {
      throw SolverCrash("convergence run on " + std::to_string(grid) + "^3 elements crashed: " +
                        res.crash_message);
    }
    ConvergenceRow row{grid, *res.final_l2, std::nullopt};
    if (!rows.empty()) {
      const ConvergenceRow& prev = rows.back();
      const double ratio = static_cast<double>(grid) / prev.elements;
      Vec5 order;
      for (int v = 0; v < 5; ++v) order[v] = std::log(prev.l2[v] / row.l2[v]) / std::log(ratio);
      row.order = order;
    }
    if (csv) {
      *csv << grid;
      for (int v = 0; v < 5; ++v) *csv << ',' << fmt(row.l2[v]);
      for (int v = 0; v < 5; ++v) *csv << ',' << (row.order ? fmt((*row.order)[v]) : std::string());
      *csv << '\n';
      csv->flush();
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepEntry> run_sweep(const RunConfig& cfg, std::ostream* csv) {
  apply_thread_limit(cfg.threads);
  const std::vector<int> degrees = cfg.degrees.empty() ? std::vector<int>{cfg.degree} : cfg.degrees;
  const std::vector<int> grids = cfg.grids.empty() ? std::vector<int>{cfg.elements} : cfg.grids;
  const std::vector<FluxScheme> schemes =
      cfg.schemes.empty() ? std::vector<FluxScheme>{cfg.scheme} : cfg.schemes;
  if (csv) {
    *csv << "N,elements";
    for (FluxScheme s : schemes) *csv << ',' << to_string(s) << '+' << to_string(cfg.effective_stab(s));
    *csv << '\n';
  }
  std::vector<SweepEntry> entries;
  for (int degree : degrees) {
    for (int grid : grids) {
      if (csv) *csv << degree << ',' << grid;
      for (FluxScheme scheme : schemes) {
        const Stabilization stab = cfg.effective_stab(scheme);
        const Problem problem = make_problem(cfg, degree, grid, scheme, stab);
        const RunResult res = integrate(cfg, problem, nullptr, false);
        entries.push_back({degree, grid, scheme, stab, res.crashed, res.t_final});
        if (csv) {
          *csv << ',' << (res.crashed ? "crash@" + fmt(res.t_final) : std::string("ok"));
          csv->flush();
        }
      }
      if (csv) *csv << '\n';
    }
  }
  return entries;
}

}  // namespace splitdg
