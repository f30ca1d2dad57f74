#include "tulczyjew/commands.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

int main(int argc, char ** argv)
{
  CLI::App app{"Trivialized Tulczyjew triple toolkit: rigid body simulation, bundle maps and property checks"};
  app.require_subcommand(1);

  std::string config_path;
  auto * simulate = app.add_subcommand("simulate", "Integrate a rigid body from a JSON configuration");
  simulate->add_option("--config", config_path, "Configuration file")->required();

  std::uint64_t seed  = 0;
  std::size_t samples = 100;
  std::string algebra_path;
  auto * verify = app.add_subcommand("verify", "Run the randomized property suites");
  verify->add_option("--seed", seed, "Random seed")->required();
  verify->add_option("--samples", samples, "Samples per property")->required();
  verify->add_option("--algebra", algebra_path, "Extra algebra (JSON) to check");

  std::string inertia_path;
  auto * inertia = app.add_subcommand("inertia", "Print the inertia form of a body");
  inertia->add_option("--config", inertia_path, "Configuration file with a body or preset")->required();

  std::string map_name, point, map_algebra = "so3";
  auto * maps = app.add_subcommand("maps", "Apply a bundle map to a point literal");
  maps->add_option("name", map_name, "kappa, alpha, alpha_inv, beta, beta_inv, gamma or gamma_inv")->required();
  maps->add_option("--point", point, "JSON array [g, s1, s2, s3]; g is \"e\" or a matrix")->required();
  maps->add_option("--algebra", map_algebra, "so3 or abelian")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? tulczyjew::kExitOk : tulczyjew::kExitConfigError;
  }

  if (simulate->parsed()) { return tulczyjew::cmd_simulate(config_path, std::cout, std::cerr); }
  if (verify->parsed()) { return tulczyjew::cmd_verify(seed, samples, algebra_path, std::cout, std::cerr); }
  if (inertia->parsed()) { return tulczyjew::cmd_inertia(inertia_path, std::cout, std::cerr); }
  return tulczyjew::cmd_maps(map_name, point, map_algebra, std::cout, std::cerr);
}
