#ifndef TULCZYJEW__CONFIG_HPP_
#define TULCZYJEW__CONFIG_HPP_

#include "tulczyjew/lie_algebra.hpp"
#include "tulczyjew/mechanics.hpp"
#include "tulczyjew/rigid_body.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace tulczyjew {

enum class OutputFormat { Csv, JsonLines };

/**
 * @brief Everything `simulate` needs, resolved from a JSON document.
 *
 * Accepted keys:
 *   algebra     "so3" or {"name", "dim", "structure_constants": c[i][j][k]}
 *   system      {"inertia": matrix} | {"body": [{"mass", "position"}...]}
 *               | {"preset": "cube"|"box"|"sphere", "side"|"edges"|"radius",
 *                  "mass"|"density", "quadrature_order"}
 *   initial     {"A0": [...]} or {"X0": [...]}, optional "g0": matrix
 *   integrator  {"method": "rk4"|"midpoint", "dt", "steps", "reproject_every",
 *                "reconstruction": "munthe-kaas"|"lie-euler"}
 *   output      {"path", "format": "csv"|"json-lines", "stride"}
 *   track_attitude  optional bool, so3 only (default true)
 */
struct SimulationConfig
{
  LieAlgebra algebra = LieAlgebra::so3();
  std::optional<BodySpec> body;
  Eigen::MatrixXd inertia;
  std::optional<CoalgebraElement> A0;
  std::optional<AlgebraElement> X0;
  std::optional<Eigen::MatrixXd> g0;
  bool track_attitude = true;
  IntegratorOptions integrator;
  std::string output_path;  // empty or "-" means stdout
  OutputFormat format = OutputFormat::Csv;
};

/// Throws ConfigError on any schema or invariant violation.
SimulationConfig parse_config(const nlohmann::json & doc);
SimulationConfig load_config(const std::string & path);

/// "so3" or an explicit dense structure-constant object. With `validate`
/// unset only the shape is checked, so broken constants can be reported on.
LieAlgebra parse_algebra(const nlohmann::json & node, bool validate = true);
/// Body point list or preset; throws ConfigError.
BodySpec parse_body(const nlohmann::json & system);

nlohmann::json read_json_file(const std::string & path);

}  // namespace tulczyjew

#endif
