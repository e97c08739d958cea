#include "fairtile/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fairtile/hexsplit.hpp"
#include "fairtile/patch.hpp"
#include "fairtile/tiling_io.hpp"
#include "fairtile/verify.hpp"

namespace fairtile::cli {

namespace {

struct GenerateArgs {
  int rings = 1;
  double epsilon0 = 5e-3;
  double rho = 0.7;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string svg_path;
};

struct VerifyArgs {
  std::string in_path;
  std::string reference_path;
  VerifyConfig cfg;
};

struct SplitArgs {
  bool regular = false;
  std::string hexagon_csv;
  std::string svg_path;
};

int run_generate(const GenerateArgs& a, std::ostream& out) {
  const Tiling tiling = generate_patch(a.rings, a.epsilon0, a.rho, a.seed);
  write_file(a.out_path, serialize_tiling(tiling));
  if (!a.svg_path.empty()) write_file(a.svg_path, render_svg(tiling));
  out << "wrote " << tiling.pentagons.size() << " pentagons to " << a.out_path << "\n";
  return 0;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const Tiling tiling = parse_tiling(read_file(a.in_path));
  std::optional<Tiling> reference;
  if (!a.reference_path.empty()) reference = parse_tiling(read_file(a.reference_path));
  const VerifyReport report = verify_all(tiling, reference ? &*reference : nullptr, a.cfg);
  out << serialize_report(report);
  return report.pass ? 0 : 1;
}

ConvexPolygon hexagon_from_csv(const std::string& csv) {
  std::vector<double> values;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("--hexagon: cannot parse '" + item + "' as a number");
    }
  }
  if (values.size() != 12)
    throw std::invalid_argument("--hexagon expects 12 comma-separated numbers, got " +
                                std::to_string(values.size()));
  std::vector<Point> vertices(6);
  for (int i = 0; i < 6; ++i)
    vertices[static_cast<std::size_t>(i)] = {values[static_cast<std::size_t>(2 * i)],
                                             values[static_cast<std::size_t>(2 * i + 1)]};
  return ConvexPolygon(std::move(vertices));
}

int run_split(const SplitArgs& a, std::ostream& out) {
  const ConvexPolygon hexagon = a.regular
                                    ? [] {
                                        const auto v = canonical_params().hexagon;
                                        return ConvexPolygon(std::vector<Point>(v.begin(), v.end()));
                                      }()
                                    : hexagon_from_csv(a.hexagon_csv);
  const FairSplit split = split_hexagon(hexagon);

  for (int m = 0; m < 3; ++m) {
    const ConvexPolygon& pentagon = split.pentagons[static_cast<std::size_t>(m)];
    out << "pentagon " << m + 1 << ":";
    for (const Point& p : pentagon.vertices())
      out << " (" << format_double(p.x) << ", " << format_double(p.y) << ")";
    out << "\n  area: " << format_double(signed_area(pentagon));
    out << "\n  perimeter: " << format_double(perimeter(pentagon));
    out << "\n  angles:";
    for (double angle : interior_angles(pentagon)) out << " " << format_double(angle);
    out << "\n  marked side: " << split.marked_side[static_cast<std::size_t>(m)] << "\n";
  }
  out << "residual inf-norm: " << format_double(split.report.residual_norm) << "\n";
  out << "iterations: " << split.report.iterations << "\n";
  out << "max angle deviation: " << format_double(split.max_angle_deviation) << "\n";

  if (!a.svg_path.empty()) {
    Tiling preview;
    preview.generation.rings = 0;
    for (int m = 0; m < 3; ++m)
      preview.pentagons.push_back({m, 0, 0, m, split.marked_side[static_cast<std::size_t>(m)],
                                   split.pentagons[static_cast<std::size_t>(m)]});
    write_file(a.svg_path, render_svg(preview));
  }
  return 0;
}

int run_jacobian(std::ostream& out) {
  const SplitParams v0 = canonical_params();
  const double closed_form =
      (-162.0 + 486.0 * std::sqrt(2.0) + 81.0 * std::sqrt(3.0) - 270.0 * std::sqrt(6.0)) / 8.0;
  const double analytic = determinant(jacobian_ab(v0));

  const auto residual_fn = [&v0](std::span<const double> x) {
    SplitParams trial = v0;
    for (int i = 0; i < 4; ++i)
      trial.inner[static_cast<std::size_t>(i)] = {x[static_cast<std::size_t>(i)],
                                                  x[static_cast<std::size_t>(i + 4)]};
    const std::array<double, 8> f = residuals(trial);
    return std::vector<double>(f.begin(), f.end());
  };
  std::array<double, 8> x0;
  for (int i = 0; i < 4; ++i) {
    x0[static_cast<std::size_t>(i)] = v0.inner[static_cast<std::size_t>(i)].x;
    x0[static_cast<std::size_t>(i + 4)] = v0.inner[static_cast<std::size_t>(i)].y;
  }
  const double fd = determinant(finite_diff_jacobian(residual_fn, x0, 1e-6));

  out << "closed form:          " << format_double(closed_form) << "\n";
  out << "analytic determinant: " << format_double(analytic) << "\n";
  out << "finite differences:   " << format_double(fd) << "\n";
  out << "|analytic - closed|:  " << format_double(std::abs(analytic - closed_form)) << "\n";
  out << "|fd - closed|:        " << format_double(std::abs(fd - closed_form)) << "\n";
  const bool ok = std::abs(analytic - closed_form) <= 1e-10 && std::abs(fd - closed_form) <= 1e-6;
  return ok ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fair pentagon patch generator and verifier"};
  app.name("fairtile");
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "generate a pentagon patch");
  generate->add_option("--rings", gen.rings, "cluster rings around the center")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  generate->add_option("--epsilon", gen.epsilon0, "first cluster perturbation magnitude")
      ->capture_default_str();
  generate->add_option("--rho", gen.rho, "per-cluster magnitude shrink factor")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "random stream seed")->capture_default_str();
  generate->add_option("--out", gen.out_path, "output tiling JSON path")->required();
  generate->add_option("--svg", gen.svg_path, "optional SVG figure path");

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "verify a tiling document");
  verify->add_option("--in", ver.in_path, "tiling JSON path")->required();
  verify->add_option("--reference", ver.reference_path, "reference tiling for closeness");
  verify->add_option("--tol-area", ver.cfg.tol_area, "area deviation bound")->capture_default_str();
  verify->add_option("--tol-perimeter", ver.cfg.tol_perimeter, "perimeter deviation bound")
      ->capture_default_str();
  verify->add_option("--delta-sep", ver.cfg.delta_sep, "required incongruence separation")
      ->capture_default_str();
  verify->add_option("--mu-max", ver.cfg.mu_max, "angle deviation bound (radians)")
      ->capture_default_str();
  verify->add_option("--eps-max", ver.cfg.eps_max, "closeness bound to the reference")
      ->capture_default_str();

  SplitArgs spl;
  CLI::App* split = app.add_subcommand("split", "split one hexagon into three fair pentagons");
  split->add_flag("--regular", spl.regular, "use the regular unit hexagon");
  split->add_option("--hexagon", spl.hexagon_csv, "hexagon vertices x1,y1,...,x6,y6");
  split->add_option("--svg", spl.svg_path, "optional SVG figure path");

  CLI::App* jacobian =
      app.add_subcommand("jacobian", "check the split Jacobian determinant at the base point");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(generate)) return run_generate(gen, out);
    if (app.got_subcommand(verify)) return run_verify(ver, out);
    if (app.got_subcommand(split)) {
      if (spl.regular == !spl.hexagon_csv.empty())
        throw std::invalid_argument("split: pass exactly one of --regular or --hexagon");
      return run_split(spl, out);
    }
    if (app.got_subcommand(jacobian)) return run_jacobian(out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const TilingFormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fairtile::cli
