#include <iostream>

#include "commands.hpp"
#include "hermlag/errors.hpp"
#include "hermlag/version.hpp"

int main(int argc, char** argv) {
  using namespace hermlag;
  CLI::App app{"Scaled Laguerre and Hermite spectral experiments"};
  app.set_version_flag("--version", HERMLAG_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<cli::JsonConfig>());
  app.set_config("--config", "", "JSON file whose keys mirror the flag names");

  cli::Globals g;
  app.add_option("--out", g.out, "Write CSV here instead of stdout (manifest goes to <out>.json)");
  app.add_option("--manifest", g.manifest, "Manifest path (default <out>.json, or stderr)");
  app.add_flag("--serial", g.serial, "Run sweep cells on one thread");
  app.add_option("--bandwidth-constant", g.bandwidth_constant,
                 "Constant c in M = c sqrt(N)/beta, B = c sqrt(N) beta")
      ->check(CLI::PositiveNumber);

  cli::add_rule(app, g);
  cli::add_project(app, g);
  cli::add_sweep_galerkin(app, g);
  cli::add_balance(app, g);
  cli::add_transition(app, g);
  cli::add_quad_compare(app, g);
  cli::add_fit(app, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (last change " << e.last_delta() << ")\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
