// zernike -- coefficient tables, basis-function grids and verification
// suites for the three separable eigenbases of the Zernike system.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "cli_commands.hpp"
#include "zernike/verify.hpp"

namespace {

int threads_from(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("ZERNIKE_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

} // namespace

int main(int argc, char** argv) {
  using namespace zernike;

  CLI::App app{"Zernike-system eigenbases and interbasis expansion coefficients"};
  app.require_subcommand(1);

  // coeffs
  std::string pair_s = "I-II", route_s, format_s = "csv";
  int n = 0, threads = 0;
  auto* coeffs = app.add_subcommand("coeffs", "emit one multiplet's coefficient matrix");
  coeffs->add_option("--pair", pair_s, "I-II, I-III or II-III")->required();
  coeffs->add_option("--n", n, "principal quantum number")->required();
  coeffs->add_option("--route", route_s, "3f2|cg|hahn (I-*), cgsum|4f3|racah (II-III)");
  coeffs->add_option("--format", format_s, "csv or json");
  coeffs->add_option("--threads", threads, "worker threads (or ZERNIKE_THREADS)");

  // grid
  std::string system_s = "I";
  int la = 0, lb = 0, resolution = 256;
  auto* grid = app.add_subcommand("grid", "sample one basis function over [-1,1]^2");
  grid->add_option("--system", system_s, "I, II or III")->required();
  grid->add_option("--a", la, "n (system I) or k1 (II/III)")->required();
  grid->add_option("--b", lb, "m (system I) or k2 (II/III)")->required();
  grid->add_option("--resolution", resolution, "grid side length in [32, 4096]");
  grid->add_option("--format", format_s, "csv or ppm");
  grid->add_option("--threads", threads, "worker threads");

  // verify
  std::string suite;
  int n_max = 6;
  double tolerance = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "run one named verification suite");
  std::string suites_help;
  for (const auto& s : zernike::verify::suite_names())
    suites_help += (suites_help.empty() ? "" : ", ") + s;
  verify_cmd->add_option("--suite", suite, suites_help)->required();
  verify_cmd->add_option("--n-max", n_max, "largest principal quantum number");
  verify_cmd->add_option("--tolerance", tolerance, "override the suite's default tolerance");
  verify_cmd->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  try {
    if (coeffs->parsed()) {
      const auto pair = cli::parse_pair(pair_s);
      const auto route =
          route_s.empty() ? interbasis::default_route(pair) : cli::parse_route(route_s);
      if (!interbasis::route_admissible(pair, route)) {
        std::cerr << "error: route " << interbasis::to_string(route)
                  << " is not admissible for pair " << interbasis::to_string(pair) << "\n";
        return cli::kExitUsage;
      }
      return cli::cmd_coeffs(std::cout, pair, n, route, cli::parse_format(format_s),
                             threads_from(threads));
    }
    if (grid->parsed()) {
      const auto sys = cli::parse_system(system_s);
      const auto label = sys == bases::System::I
                             ? bases::MultipletLabel::polar(la, lb)
                             : bases::MultipletLabel::cartesian(la, lb);
      return cli::cmd_grid(std::cout, sys, label, resolution,
                           cli::parse_format(format_s), threads_from(threads));
    }
    return cli::cmd_verify(std::cout, suite, n_max, tolerance, threads_from(threads));
  } catch (const integrity_error& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return cli::kExitIntegrity;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  }
}
