#include "ptower/cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "ptower/analysis.hpp"
#include "ptower/cli/output.hpp"
#include "ptower/dynamics.hpp"
#include "ptower/errors.hpp"
#include "ptower/format.hpp"
#include "ptower/hyperops.hpp"
#include "ptower/lambertw.hpp"
#include "ptower/series.hpp"
#include "ptower/tower.hpp"

namespace ptower::cli {

namespace {

struct CommonOptions {
  std::string out_path;
  std::string format = "csv";
  int precision = 17;
  double tol = 1e-12;
  int max_iter = 10000;
  double div_threshold = 1e15;

  OutputSpec output_spec() const {
    return OutputSpec{format == "svg" ? OutputFormat::Svg : OutputFormat::Csv,
                      out_path, precision};
  }
  IterationConfig iteration_config() const {
    return IterationConfig{tol, max_iter, div_threshold};
  }
};

// Runs `body` against the requested destination: stdout by default, a file
// when --out was given.
void emit(const CommonOptions& common, std::ostream& out,
          const std::function<void(std::ostream&)>& body) {
  if (common.out_path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file)
    throw std::domain_error("cannot open output file: " + common.out_path);
  body(file);
}

void require_csv(const CommonOptions& common, const char* subcommand) {
  if (common.format != "csv")
    throw std::domain_error(std::string(subcommand) +
                            ": only csv output is supported");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Numerical toolkit for the infinite power tower x^x^x^..."};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--out", common.out_path, "Write output to this file instead of stdout");
  app.add_option("--format", common.format, "Output format (csv or svg)")
      ->check(CLI::IsMember({"csv", "svg"}));
  app.add_option("--precision", common.precision, "Significant digits, 6..17")
      ->check(CLI::Range(6, 17));
  app.add_option("--tol", common.tol, "Orbit-difference tolerance");
  app.add_option("--max-iter", common.max_iter, "Iteration cap");
  app.add_option("--div-threshold", common.div_threshold,
                 "Orbit value that counts as divergence");
  app.set_config("--config", "", "Read key=value defaults from a file");

  // eval ------------------------------------------------------------------
  double eval_x = 0.0;
  int eval_height = 1;
  auto* eval = app.add_subcommand("eval", "Evaluate the finite tower f_n(x)");
  eval->fallthrough();
  eval->add_option("--x", eval_x, "Tower base")->required();
  eval->add_option("--height", eval_height, "Tower height n >= 1")->required();
  eval->callback([&] {
    require_csv(common, "eval");
    const double value = finite_tower(TowerInput{eval_x, eval_height});
    emit(common, out, [&](std::ostream& os) {
      os << format_double(value, common.precision) << "\n";
    });
  });

  // classify ----------------------------------------------------------------
  double classify_x = 0.0;
  auto* classify_cmd =
      app.add_subcommand("classify", "Regime of the infinite tower at base x");
  classify_cmd->fallthrough();
  classify_cmd->add_option("--x", classify_x, "Tower base")->required();
  classify_cmd->callback([&] {
    require_csv(common, "classify");
    const ScanRow row = scan_at(classify_x, common.iteration_config());
    emit(common, out, [&](std::ostream& os) {
      os << to_string(row.classification.regime);
      for (const double v : row.values)
        os << ' ' << format_double(v, common.precision);
      os << "\n";
    });
  });

  // fixedpoint --------------------------------------------------------------
  double fp_x = 0.0;
  bool fp_repulsive = false;
  auto* fixedpoint =
      app.add_subcommand("fixedpoint", "Closed-form tower fixed point via Lambert W");
  fixedpoint->fallthrough();
  fixedpoint->add_option("--x", fp_x, "Tower base")->required();
  fixedpoint->add_flag("--repulsive", fp_repulsive,
                       "Return the repulsive fixed point (1 < x < e^{1/e})");
  fixedpoint->callback([&] {
    require_csv(common, "fixedpoint");
    const double value =
        fp_repulsive ? tower_fixed_point_repulsive(fp_x) : tower_fixed_point(fp_x);
    emit(common, out, [&](std::ostream& os) {
      os << format_double(value, common.precision) << "\n";
    });
  });

  // iterate -----------------------------------------------------------------
  double iterate_x = 0.0;
  auto* iterate =
      app.add_subcommand("iterate", "Run y_{n+1} = x^{y_n} and report the orbit");
  iterate->fallthrough();
  iterate->add_option("--x", iterate_x, "Tower base")->required();
  iterate->callback([&] {
    require_csv(common, "iterate");
    const IterationTrace trace =
        iterate_tower(iterate_x, common.iteration_config());
    emit(common, out, [&](std::ostream& os) {
      write_iterate_csv(os, trace, common.output_spec());
    });
    if (trace.outcome.kind == IterationOutcome::Kind::Undecided)
      throw convergence_error("iterate: undecided after " +
                              std::to_string(trace.iterations()) +
                              " iterations");
  });

  // cobweb ------------------------------------------------------------------
  double cobweb_x = 0.0, cobweb_y0 = 0.0;
  int cobweb_steps = 50;
  auto* cobweb = app.add_subcommand("cobweb", "Cobweb diagram of the iteration");
  cobweb->fallthrough();
  cobweb->add_option("--x", cobweb_x, "Tower base")->required();
  cobweb->add_option("--y0", cobweb_y0, "Starting value")->required();
  cobweb->add_option("--steps", cobweb_steps, "Iteration steps");
  cobweb->callback([&] {
    const auto trace = cobweb_trace(cobweb_x, cobweb_y0, cobweb_steps);
    emit(common, out, [&](std::ostream& os) {
      if (common.format == "svg")
        write_cobweb_svg(os, cobweb_x, trace, common.output_spec());
      else
        write_cobweb_csv(os, cobweb_x, trace, common.output_spec());
    });
  });

  // bifurcation ---------------------------------------------------------------
  double bif_min = 0.0, bif_max = 0.0;
  int bif_samples = 200;
  auto* bifurcation =
      app.add_subcommand("bifurcation", "Attractor values over a range of bases");
  bifurcation->fallthrough();
  bifurcation->add_option("--x-min", bif_min, "Lowest base")->required();
  bifurcation->add_option("--x-max", bif_max, "Highest base")->required();
  bifurcation->add_option("--samples", bif_samples, "Number of bases");
  bifurcation->callback([&] {
    const auto rows =
        bifurcation_scan(bif_min, bif_max, bif_samples, common.iteration_config());
    emit(common, out, [&](std::ostream& os) {
      if (common.format == "svg")
        write_bifurcation_svg(os, rows, common.output_spec());
      else
        write_bifurcation_csv(os, rows, common.output_spec());
    });
  });

  // region ----------------------------------------------------------------
  double region_x_min = 0.0, region_x_max = 0.0;
  double region_y_min = 0.0, region_y_max = 0.0;
  int region_nx = 64, region_ny = 48;
  auto* region = app.add_subcommand(
      "region", "Contraction region of the double-step map, |x^{x^y+y} ln^2 x| < 1");
  region->fallthrough();
  region->add_option("--x-min", region_x_min, "Lowest base")->required();
  region->add_option("--x-max", region_x_max, "Highest base")->required();
  region->add_option("--y-min", region_y_min, "Lowest y")->required();
  region->add_option("--y-max", region_y_max, "Highest y")->required();
  region->add_option("--nx", region_nx, "Grid columns");
  region->add_option("--ny", region_ny, "Grid rows");
  region->callback([&] {
    const RegionGrid grid = region_scan({region_x_min, region_x_max},
                                        {region_y_min, region_y_max},
                                        region_nx, region_ny);
    emit(common, out, [&](std::ostream& os) {
      if (common.format == "svg")
        write_region_svg(os, grid, common.output_spec());
      else
        write_region_csv(os, grid, common.output_spec());
    });
  });

  // cycle -----------------------------------------------------------------
  double cycle_p = 0.0, cycle_x = 0.0;
  auto* cycle = app.add_subcommand("cycle", "The 2-cycle, from its ratio or its base");
  cycle->fallthrough();
  auto* cycle_p_opt = cycle->add_option("--p", cycle_p, "Cycle ratio y_high/y_low > 1");
  auto* cycle_x_opt = cycle->add_option("--x", cycle_x, "Base in (0, e^{-e})");
  cycle_p_opt->excludes(cycle_x_opt);
  cycle->callback([&] {
    require_csv(common, "cycle");
    if (cycle_p_opt->count() == 0 && cycle_x_opt->count() == 0)
      throw std::domain_error("cycle: provide exactly one of --p or --x");
    const TwoCycle result = cycle_p_opt->count() > 0 ? cycle_from_ratio(cycle_p)
                                                     : cycle_for_base(cycle_x);
    emit(common, out, [&](std::ostream& os) {
      write_cycle_csv(os, result, common.output_spec());
    });
  });

  // lambertw ------------------------------------------------------------------
  double lw_z = 0.0;
  std::string lw_branch = "principal";
  auto* lambertw_cmd = app.add_subcommand("lambertw", "Real Lambert W");
  lambertw_cmd->fallthrough();
  lambertw_cmd->add_option("--z", lw_z, "Argument, z >= -1/e")->required();
  lambertw_cmd->add_option("--branch", lw_branch, "principal or secondary")
      ->check(CLI::IsMember({"principal", "secondary"}));
  lambertw_cmd->callback([&] {
    require_csv(common, "lambertw");
    const Branch branch =
        lw_branch == "secondary" ? Branch::Secondary : Branch::Principal;
    const double w = lambert_w(lw_z, branch);
    emit(common, out, [&](std::ostream& os) {
      os << format_double(w, common.precision) << "\n";
    });
  });

  // revert ------------------------------------------------------------------
  std::vector<double> revert_coeffs;
  int revert_order = 0;
  auto* revert_cmd =
      app.add_subcommand("revert", "Series reversion by coefficient matching");
  revert_cmd->fallthrough();
  revert_cmd
      ->add_option("--coeffs", revert_coeffs,
                   "Coefficients a1,a2,... of a series with no constant term")
      ->required()
      ->delimiter(',');
  revert_cmd->add_option("--order", revert_order, "Output order")->required();
  revert_cmd->callback([&] {
    require_csv(common, "revert");
    const PowerSeries inverse = revert(PowerSeries(revert_coeffs), revert_order);
    emit(common, out, [&](std::ostream& os) {
      write_revert_csv(os, inverse, common.output_spec());
    });
  });

  // inverse ------------------------------------------------------------------
  double inv_y_min = 0.05, inv_y_max = 6.0;
  int inv_samples = 512;
  auto* inverse =
      app.add_subcommand("inverse", "Sample the tower's inverse map x = y^{1/y}");
  inverse->fallthrough();
  inverse->add_option("--y-min", inv_y_min, "Lowest y (> 0)");
  inverse->add_option("--y-max", inv_y_max, "Highest y");
  inverse->add_option("--samples", inv_samples, "Number of samples");
  inverse->callback([&] {
    if (!(inv_y_min > 0.0) || !(inv_y_max > inv_y_min) || inv_samples < 2)
      throw std::domain_error("inverse: need 0 < y-min < y-max and samples >= 2");
    std::vector<CurvePoint> points;
    points.reserve(static_cast<std::size_t>(inv_samples));
    for (int i = 0; i < inv_samples; ++i) {
      const double y = inv_y_min + (inv_y_max - inv_y_min) * i / (inv_samples - 1);
      points.push_back(CurvePoint{y, tower_inverse(y)});
    }
    emit(common, out, [&](std::ostream& os) {
      if (common.format == "svg")
        write_inverse_curve_svg(os, points, common.output_spec());
      else
        write_inverse_curve_csv(os, points, common.output_spec());
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const convergence_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ptower::cli
