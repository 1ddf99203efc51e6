#include "tsfem/bench.hpp"

#include <chrono>
#include <fstream>

#include "json.hpp"

#include "tsfem/tau.hpp"

namespace tsfem {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<double> log_grid(double lo_exp, double hi_exp, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i)
    g[i] = std::pow(10.0, lo_exp + (hi_exp - lo_exp) * i / (n - 1));
  return g;
}

GmresOptions gmres_opts(double tol, int max_iters) {
  GmresOptions o;
  o.tol = tol;
  o.max_iters = max_iters;
  return o;
}

}  // namespace

Cell cell_1d(Method m, double alpha, double beta, int n_elems, double tol,
             const MethodOptions* opt_override) {
  auto t0 = Clock::now();
  Mesh mesh = uniform_line(n_elems);
  double h = 1.0 / n_elems;
  double kappa = 1.0;
  Problem p;
  p.mesh = &mesh;
  p.params.kappa = kappa;
  p.params.velocity = {-velocity_from_alpha(alpha, kappa, h), 0.0, 0.0};
  p.params.omega = omega_from_beta(beta, kappa, h);
  p.dirichlet = {{"left", cplx(0.0, 0.0)}, {"right", cplx(1.0, 0.0)}};
  MethodOptions opt = opt_override ? *opt_override : default_options(m, 1);
  opt.method = m;
  SolveReport rep;
  std::vector<cplx> u = solve(p, opt, gmres_opts(tol, 1000), &rep);
  double P = p.params.velocity.x / (2.0 * kappa);  // L = 1
  double W = std::sqrt(p.params.omega / kappa);
  ErrorPair err = l2_error(mesh, u, [&](const Vec3& x) {
    return exact_1d(x.x, P, W).value;
  });
  Cell c{"sweep1d", method_name(m), alpha, beta,
         err.rel_sq, err.rel, rep.iterations, rep.converged, ms_since(t0)};
  return c;
}

Cell cell_2d(Method m, double P, double W, int nx, double tol, int nterms) {
  auto t0 = Clock::now();
  Mesh mesh = structured_quad(nx, nx);
  double kappa = 1.0, L = 1.0;
  Problem p;
  p.mesh = &mesh;
  p.params.kappa = kappa;
  p.params.velocity = {velocity_from_peclet(P, kappa, L), 0.0, 0.0};
  p.params.omega = omega_from_womersley(W, kappa, L);
  // ones first, zeros last: the zero sets own the shared corner nodes
  p.dirichlet = {{"left", cplx(1.0, 0.0)},
                 {"top", cplx(1.0, 0.0)},
                 {"bottom", cplx(0.0, 0.0)},
                 {"right", cplx(0.0, 0.0)}};
  MethodOptions opt = default_options(m, 2);
  SolveReport rep;
  std::vector<cplx> u = solve(p, opt, gmres_opts(tol, 1000), &rep);
  ErrorPair err = l2_error(mesh, u, [&](const Vec3& x) {
    return exact_2d(x.x, x.y, P, W, nterms);
  });
  Cell c{"case2d", method_name(m), P, W,
         err.rel_sq, err.rel, rep.iterations, rep.converged, ms_since(t0)};
  return c;
}

Cell cell_3d(Method m, double P, double W, const Mesh& cyl, double tol,
             bool reversed, int max_iters, bool nodal_norm) {
  auto t0 = Clock::now();
  double kappa = 1.0;
  double L = cyl.length_scale;
  Problem p;
  p.mesh = &cyl;
  p.params.kappa = kappa;
  p.params.velocity = {0.0, 0.0, velocity_from_peclet(P, kappa, L)};
  p.params.omega = omega_from_womersley(W, kappa, L);
  if (reversed) {
    p.dirichlet = {{"inlet", cplx(1.0, 0.0)}, {"outlet", cplx(0.0, 0.0)}};
  } else {
    p.dirichlet = {{"inlet", cplx(0.0, 0.0)}, {"outlet", cplx(1.0, 0.0)}};
  }
  p.neumann = {{"wall", cplx(0.0, 0.0)}};
  MethodOptions opt = default_options(m, 3);
  SolveReport rep;
  std::vector<cplx> u = solve(p, opt, gmres_opts(tol, max_iters), &rep);
  auto oracle = [&](const Vec3& x) {
    if (reversed) return exact_1d(1.0 - x.z / L, -P, W).value;
    return exact_1d(x.z / L, P, W).value;
  };
  ErrorPair err = nodal_norm ? nodal_l2_error(cyl, u, oracle)
                             : l2_error(cyl, u, oracle);
  Cell c{"case3d", method_name(m), P, W,
         err.rel_sq, err.rel, rep.iterations, rep.converged, ms_since(t0)};
  return c;
}

double fit_loglog_slope(const std::vector<double>& L_over_h,
                        const std::vector<double>& err) {
  int n = int(L_over_h.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    double x = std::log(L_over_h[i]), y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

void apply_defaults(BenchConfig& cfg) {
  auto def_methods = [&](std::initializer_list<Method> ms) {
    if (cfg.methods.empty()) cfg.methods.assign(ms);
  };
  if (cfg.experiment == "sweep1d") {
    def_methods({Method::Galerkin, Method::Supg, Method::VmsGls, Method::Asu});
    if (cfg.xgrid.empty()) cfg.xgrid = log_grid(0, 3, 13);
    if (cfg.ygrid.empty()) cfg.ygrid = {0.01, 0.1, 1.0};
    if (cfg.mesh_n == 0) cfg.mesh_n = 100;
    if (cfg.tol == 0.0) cfg.tol = 1e-10;
  } else if (cfg.experiment == "omega-hat") {
    cfg.methods = {Method::Asu};
    if (cfg.xgrid.empty()) cfg.xgrid = log_grid(-1, 2, 50);
    if (cfg.ygrid.empty()) cfg.ygrid = {1.0, 0.1, 0.01};
  } else if (cfg.experiment == "case2d") {
    def_methods({Method::Galerkin, Method::Supg, Method::VmsGls, Method::Asu});
    if (cfg.xgrid.empty()) cfg.xgrid = log_grid(0, 3, 13);
    if (cfg.ygrid.empty()) cfg.ygrid = {10.0, std::pow(10.0, 1.5), 100.0};
    if (cfg.mesh_n == 0) cfg.mesh_n = 10;
    if (cfg.tol == 0.0) cfg.tol = 1e-4;
  } else if (cfg.experiment == "case3d") {
    def_methods({Method::Galerkin, Method::Supg, Method::VmsGls, Method::Asu});
    if (cfg.xgrid.empty()) cfg.xgrid = {10.0, 100.0, 1000.0};
    if (cfg.ygrid.empty()) cfg.ygrid = {100.0};
    if (cfg.tol == 0.0) cfg.tol = 1e-4;
  } else if (cfg.experiment == "convergence") {
    def_methods({Method::Galerkin, Method::Supg, Method::VmsGls, Method::Asu});
    if (cfg.xgrid.empty()) cfg.xgrid = {10.0, 1000.0};       // P values
    if (cfg.ygrid.empty()) cfg.ygrid = {16, 32, 64, 128};    // L/h levels
    if (cfg.n_radial == 3) cfg.n_radial = 2;  // anchor rings at the first level
    if (cfg.tol == 0.0) cfg.tol = 1e-12;
    if (cfg.max_iters < 30000) cfg.max_iters = 30000;
  } else if (cfg.experiment == "stability") {
    def_methods({Method::Galerkin, Method::Supg, Method::VmsGls, Method::Asu});
  } else {
    throw std::invalid_argument("unknown experiment: " + cfg.experiment);
  }
  if (cfg.out.empty()) cfg.out = "bench_" + cfg.experiment;
}

void run_omega_hat(const BenchConfig& cfg, BenchResult& res) {
  // mesh-free: h = kappa = 1, so a = 2 alpha, omega = 6 beta
  for (double beta : cfg.ygrid) {
    for (double alpha : cfg.xgrid) {
      auto t0 = Clock::now();
      double omega = 6.0 * beta;
      double tau = tau_approx(4.0 * std::abs(alpha), 12.0);
      cplx wa = omega_hat_approx(omega, tau, 1.0 / 12.0, false);
      cplx we = omega_hat_exact(alpha, beta, omega);
      double rel = std::abs(wa - we) / omega;
      res.cells.push_back({"omega-hat", "asu", alpha, beta, rel * rel, rel, 0,
                           true, ms_since(t0)});
    }
  }
}

void run_stability(const BenchConfig& cfg, BenchResult& res) {
  struct Regime {
    std::string name;
    bool three_d;
    double x, y;  // (alpha, beta) in 1D, (P, W) in 3D
  };
  std::vector<Regime> regimes = {
      {"diffusive-a0.5-b0.1", false, 0.5, 0.1},
      {"balanced-a3-b1", false, 3.0, 1.0},
      {"convective-a50-b0.01", false, 50.0, 0.01},
      {"unsteady-a10-b50", false, 10.0, 50.0},
      {"3d-p10-w100", true, 10.0, 100.0},
  };
  Mesh line = uniform_line(32);
  Mesh cyl = cylinder_tet(0.1, 1.0, cfg.n_axial, cfg.n_radial);
  for (const auto& rg : regimes) {
    for (Method m : cfg.methods) {
      if (is_rd(m)) continue;  // no closed-form energy to cross-check
      Problem p;
      MethodOptions opt;
      if (rg.three_d) {
        p.mesh = &cyl;
        p.params.kappa = 1.0;
        p.params.velocity = {0.0, 0.0, velocity_from_peclet(rg.x, 1.0, 1.0)};
        p.params.omega = omega_from_womersley(rg.y, 1.0, 1.0);
        p.dirichlet = {{"inlet", cplx(0.0, 0.0)}, {"outlet", cplx(1.0, 0.0)}};
        opt = default_options(m, 3);
      } else {
        p.mesh = &line;
        double h = 1.0 / 32;
        p.params.kappa = 1.0;
        p.params.velocity = {velocity_from_alpha(rg.x, 1.0, h), 0.0, 0.0};
        p.params.omega = omega_from_beta(rg.y, 1.0, h);
        p.dirichlet = {{"left", cplx(0.0, 0.0)}, {"right", cplx(0.0, 0.0)}};
        opt = default_options(m, 1);
      }
      ProbeStats st = probe_interior(p, opt, 1000, cfg.seed);
      res.stability.push_back({rg.name, method_name(m), st});
    }
  }
}

void write_csv(const BenchConfig& cfg, const BenchResult& res) {
  std::ofstream f(res.csv_path);
  if (!f) throw std::runtime_error("cannot open " + res.csv_path);
  f << "experiment,method,alpha_or_P,beta_or_W,rel_err_sq,rel_err,iters,converged,wall_ms\n";
  f.precision(12);
  for (const auto& c : res.cells) {
    f << c.experiment << ',' << c.method << ',' << c.x << ',' << c.y << ','
      << c.rel_err_sq << ',' << c.rel_err << ',' << c.iters << ','
      << (c.converged ? 1 : 0) << ',' << c.wall_ms << '\n';
  }
  (void)cfg;
}

void write_json(const BenchConfig& cfg, const BenchResult& res) {
  nlohmann::json j;
  j["config"] = {{"experiment", cfg.experiment},
                 {"mesh_n", cfg.mesh_n},
                 {"n_radial", cfg.n_radial},
                 {"n_axial", cfg.n_axial},
                 {"tol", cfg.tol},
                 {"max_iters", cfg.max_iters},
                 {"seed", cfg.seed},
                 {"deterministic", cfg.deterministic},
                 {"nterms", cfg.nterms},
                 {"expect_divergence", cfg.expect_divergence}};
  {
    std::vector<std::string> ms;
    for (Method m : cfg.methods) ms.push_back(method_name(m));
    j["config"]["methods"] = ms;
    j["config"]["xgrid"] = cfg.xgrid;
    j["config"]["ygrid"] = cfg.ygrid;
  }
  if (cfg.experiment == "stability") {
    auto& arr = j["stability"];
    arr = nlohmann::json::array();
    for (const auto& e : res.stability)
      arr.push_back({{"regime", e.regime},
                     {"method", e.method},
                     {"min_probe", e.stats.min},
                     {"median_probe", e.stats.median},
                     {"energy_residual", e.stats.energy_residual}});
  } else if (cfg.experiment == "omega-hat") {
    auto& mx = j["max_rel_err"];
    for (double beta : cfg.ygrid) {
      double worst = 0.0;
      for (const auto& c : res.cells)
        if (c.y == beta) worst = std::max(worst, c.rel_err);
      mx[std::to_string(beta)] = worst;
    }
  } else if (cfg.experiment == "convergence") {
    auto& sl = j["slopes"];
    for (Method m : cfg.methods) {
      for (double P : cfg.xgrid) {
        std::vector<double> lh, er;
        for (const auto& c : res.cells)
          if (c.method == method_name(m) && c.x == P && c.converged) {
            lh.push_back(c.y);
            er.push_back(c.rel_err);
          }
        if (lh.size() >= 2)
          sl[method_name(m)][std::to_string(int(P))] = fit_loglog_slope(lh, er);
      }
    }
  } else {
    // per-(method, W/beta) mean iterations over the x grid, diverged excluded
    auto& mi = j["mean_iterations"];
    for (Method m : cfg.methods) {
      for (double y : cfg.ygrid) {
        double sum = 0.0;
        int cnt = 0;
        for (const auto& c : res.cells)
          if (c.method == method_name(m) && c.y == y && c.converged) {
            sum += c.iters;
            ++cnt;
          }
        if (cnt > 0) mi[method_name(m)][std::to_string(y)] = sum / cnt;
      }
    }
  }
  j["n_diverged"] = res.n_diverged;
  std::ofstream f(res.json_path);
  if (!f) throw std::runtime_error("cannot open " + res.json_path);
  f << j.dump(2) << "\n";
}

}  // namespace

BenchResult run_experiment(BenchConfig cfg) {
  apply_defaults(cfg);
  BenchResult res;
  res.csv_path = cfg.out + ".csv";
  res.json_path = cfg.out + ".json";

  if (cfg.experiment == "sweep1d") {
    for (Method m : cfg.methods)
      for (double beta : cfg.ygrid)
        for (double alpha : cfg.xgrid)
          res.cells.push_back(cell_1d(m, alpha, beta, cfg.mesh_n, cfg.tol));
  } else if (cfg.experiment == "omega-hat") {
    run_omega_hat(cfg, res);
  } else if (cfg.experiment == "case2d") {
    for (Method m : cfg.methods)
      for (double W : cfg.ygrid)
        for (double P : cfg.xgrid)
          res.cells.push_back(cell_2d(m, P, W, cfg.mesh_n, cfg.tol, cfg.nterms));
  } else if (cfg.experiment == "case3d") {
    Mesh cyl = cylinder_tet(0.1, 1.0, cfg.n_axial, cfg.n_radial);
    for (Method m : cfg.methods)
      for (double W : cfg.ygrid)
        for (double P : cfg.xgrid)
          res.cells.push_back(cell_3d(m, P, W, cyl, cfg.tol, true, cfg.max_iters));
  } else if (cfg.experiment == "convergence") {
    // uniform refinement: rings double along with axial layers so every
    // element dimension halves — slopes read directly against L/h
    const double W = 10.0;
    for (double lh : cfg.ygrid) {
      int n_ax = int(lh);
      int n_rad = std::max(2, int(std::lround(cfg.n_radial * lh / cfg.ygrid[0])));
      Mesh cyl = cylinder_tet(0.1, 1.0, n_ax, n_rad);
      for (Method m : cfg.methods)
        for (double P : cfg.xgrid) {
          Cell c = cell_3d(m, P, W, cyl, cfg.tol, true, cfg.max_iters,
                           /*nodal_norm=*/true);
          c.experiment = "convergence";
          c.x = P;
          c.y = lh;
          res.cells.push_back(c);
        }
    }
  } else if (cfg.experiment == "stability") {
    run_stability(cfg, res);
  }

  // deterministic outputs: timing is the one non-reproducible column
  if (cfg.deterministic)
    for (auto& c : res.cells) c.wall_ms = 0.0;

  for (const auto& c : res.cells) {
    if (!c.converged) {
      ++res.n_diverged;
      bool expected = false;
      for (const auto& name : cfg.expect_divergence)
        if (name == c.method) expected = true;
      if (!expected) res.all_ok = false;
    }
  }
  write_csv(cfg, res);
  write_json(cfg, res);
  return res;
}

}  // namespace tsfem
