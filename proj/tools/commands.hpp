#pragma once

#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hermlag/io.hpp"

namespace hermlag::cli {

struct Globals {
  std::string out;
  std::string manifest;
  bool serial = false;
  double bandwidth_constant = 0.0;  // 0 keeps the library default
};

/// Reads JSON config files whose keys mirror the long flag names; nested objects address subcommands.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

void add_rule(CLI::App& app, Globals& g);
void add_project(CLI::App& app, Globals& g);
void add_sweep_galerkin(CLI::App& app, Globals& g);
void add_balance(CLI::App& app, Globals& g);
void add_transition(CLI::App& app, Globals& g);
void add_quad_compare(CLI::App& app, Globals& g);
void add_fit(CLI::App& app, Globals& g);

}  // namespace hermlag::cli
