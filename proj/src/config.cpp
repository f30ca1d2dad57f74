#include "tulczyjew/config.hpp"

#include "tulczyjew/errors.hpp"
#include "tulczyjew/lie_group.hpp"

#include <fstream>
#include <numbers>

namespace tulczyjew {

using nlohmann::json;

namespace {

double get_number(const json & node, const std::string & key)
{
  if (!node.contains(key)) { throw ConfigError("missing key '" + key + "'"); }
  const auto & v = node.at(key);
  if (!v.is_number()) { throw ConfigError("'" + key + "' must be a number"); }
  return v.get<double>();
}

std::size_t get_count(const json & node, const std::string & key, std::size_t fallback)
{
  if (!node.contains(key)) { return fallback; }
  const auto & v = node.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) { throw ConfigError("'" + key + "' must be a positive integer"); }
  return v.get<std::size_t>();
}

Eigen::VectorXd to_vector(const json & node, const std::string & what, std::size_t n)
{
  if (!node.is_array() || node.size() != n) {
    throw ConfigError("'" + what + "' must be an array of " + std::to_string(n) + " numbers");
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!node[i].is_number()) { throw ConfigError("'" + what + "' must contain only numbers"); }
    v(static_cast<Eigen::Index>(i)) = node[i].get<double>();
  }
  return v;
}

Eigen::MatrixXd to_matrix(const json & node, const std::string & what, std::size_t rows, std::size_t cols)
{
  if (!node.is_array() || node.size() != rows) {
    throw ConfigError("'" + what + "' must be a " + std::to_string(rows) + "x" + std::to_string(cols) + " nested array");
  }
  Eigen::MatrixXd M(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    M.row(static_cast<Eigen::Index>(r)) = to_vector(node[r], what, cols).transpose();
  }
  return M;
}

double preset_mass(const json & system, double volume)
{
  const bool has_mass = system.contains("mass"), has_density = system.contains("density");
  if (has_mass == has_density) { throw ConfigError("preset needs exactly one of 'mass' or 'density'"); }
  return has_mass ? get_number(system, "mass") : get_number(system, "density") * volume;
}

}  // namespace

json read_json_file(const std::string & path)
{
  std::ifstream in(path);
  if (!in) { throw ConfigError("cannot open '" + path + "'"); }
  try {
    return json::parse(in);
  } catch (const json::parse_error & e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

LieAlgebra parse_algebra(const json & node, bool validate)
{
  if (node.is_string()) {
    if (node.get<std::string>() == "so3") { return LieAlgebra::so3(); }
    throw ConfigError("unknown algebra '" + node.get<std::string>() + "'");
  }
  if (!node.is_object()) { throw ConfigError("'algebra' must be \"so3\" or an object"); }
  const auto dim = get_count(node, "dim", 0);
  if (dim == 0) { throw ConfigError("algebra: missing 'dim'"); }
  if (!node.contains("structure_constants")) { throw ConfigError("algebra: missing 'structure_constants'"); }
  const auto & c = node.at("structure_constants");
  std::vector<double> flat;
  flat.reserve(dim * dim * dim);
  if (!c.is_array() || c.size() != dim) { throw ConfigError("structure_constants must be a dim x dim x dim array"); }
  for (std::size_t i = 0; i < dim; ++i) {
    const Eigen::MatrixXd slab = to_matrix(c[i], "structure_constants", dim, dim);
    for (Eigen::Index j = 0; j < slab.rows(); ++j) {
      for (Eigen::Index k = 0; k < slab.cols(); ++k) { flat.push_back(slab(j, k)); }
    }
  }
  const std::string name = node.value("name", std::string("custom"));
  try {
    return validate ? LieAlgebra::checked(name, dim, std::move(flat)) : LieAlgebra(name, dim, std::move(flat));
  } catch (const ContractViolation & e) {
    throw ConfigError(std::string("algebra: ") + e.what());
  }
}

BodySpec parse_body(const json & system)
{
  try {
    if (system.contains("body")) {
      const auto & pts = system.at("body");
      if (!pts.is_array() || pts.empty()) { throw ConfigError("'body' must be a non-empty array"); }
      BodySpec body;
      for (const auto & p : pts) {
        if (!p.is_object() || !p.contains("position")) { throw ConfigError("body points need 'mass' and 'position'"); }
        body.points.push_back({get_number(p, "mass"), Eigen::Vector3d(to_vector(p.at("position"), "position", 3))});
      }
      body.validate();
      return body;
    }
    const std::string preset = system.value("preset", std::string());
    const int order          = static_cast<int>(get_count(system, "quadrature_order", 4));
    if (preset == "cube") {
      const double a = get_number(system, "side");
      return BodySpec::cube(a, preset_mass(system, a * a * a), order);
    }
    if (preset == "box") {
      if (!system.contains("edges")) { throw ConfigError("box preset needs 'edges'"); }
      const Eigen::Vector3d e = to_vector(system.at("edges"), "edges", 3);
      return BodySpec::box(e, preset_mass(system, e.prod()), order);
    }
    if (preset == "sphere") {
      const double r = get_number(system, "radius");
      return BodySpec::sphere(r, preset_mass(system, 4.0 / 3.0 * std::numbers::pi * r * r * r), order);
    }
    throw ConfigError("system needs 'inertia', 'body' or a known 'preset' (cube, box, sphere)");
  } catch (const ContractViolation & e) {
    throw ConfigError(e.what());
  }
}

SimulationConfig parse_config(const json & doc)
{
  if (!doc.is_object()) { throw ConfigError("configuration must be a JSON object"); }
  SimulationConfig cfg;
  cfg.algebra  = parse_algebra(doc.value("algebra", json("so3")));
  const auto n = cfg.algebra.dim();
  const bool so3 = cfg.algebra.name() == "so3" && n == 3;

  if (!doc.contains("system")) { throw ConfigError("missing 'system'"); }
  const auto & system = doc.at("system");
  if (system.contains("inertia")) {
    cfg.inertia = to_matrix(system.at("inertia"), "inertia", n, n);
  } else {
    if (!so3) { throw ConfigError("bodies and presets require the so3 algebra"); }
    cfg.body = parse_body(system);
    try {
      cfg.inertia = inertia_from_body(*cfg.body).matrix();
    } catch (const DegenerateBody & e) {
      throw ConfigError(e.what());
    }
  }
  try {
    InertiaForm check(cfg.inertia);
  } catch (const SingularForm & e) {
    throw ConfigError(std::string("inertia: ") + e.what());
  }

  if (!doc.contains("initial")) { throw ConfigError("missing 'initial'"); }
  const auto & init = doc.at("initial");
  const bool has_A  = init.contains("A0"), has_X = init.contains("X0");
  if (has_A == has_X) { throw ConfigError("initial needs exactly one of 'A0' or 'X0'"); }
  if (has_A) { cfg.A0 = CoalgebraElement(to_vector(init.at("A0"), "A0", n)); }
  if (has_X) { cfg.X0 = AlgebraElement(to_vector(init.at("X0"), "X0", n)); }

  cfg.track_attitude = doc.value("track_attitude", so3);
  if (cfg.track_attitude && !so3) { throw ConfigError("attitude tracking is only available for so3"); }
  if (init.contains("g0")) {
    if (!so3) { throw ConfigError("'g0' is only available for so3"); }
    cfg.g0         = to_matrix(init.at("g0"), "g0", 3, 3);
    const auto spec = GroupSpec::so3();
    if (!spec.is_member(spec.element(*cfg.g0))) { throw ConfigError("'g0' is not a rotation matrix"); }
  }

  const json integ = doc.value("integrator", json::object());
  const std::string method = integ.value("method", std::string("rk4"));
  if (method == "rk4") {
    cfg.integrator.method = Method::RK4;
  } else if (method == "midpoint") {
    cfg.integrator.method = Method::Midpoint;
  } else {
    throw ConfigError("unknown integrator method '" + method + "'");
  }
  const std::string recon = integ.value("reconstruction", std::string("munthe-kaas"));
  if (recon == "munthe-kaas") {
    cfg.integrator.reconstruction = Reconstruction::MuntheKaas;
  } else if (recon == "lie-euler") {
    cfg.integrator.reconstruction = Reconstruction::LieEuler;
  } else {
    throw ConfigError("unknown reconstruction '" + recon + "'");
  }
  cfg.integrator.dt = get_number(integ, "dt");
  if (!(cfg.integrator.dt > 0.0)) { throw ConfigError("'dt' must be positive"); }
  cfg.integrator.steps           = get_count(integ, "steps", 0);
  if (cfg.integrator.steps == 0) { throw ConfigError("missing 'steps'"); }
  cfg.integrator.reproject_every = get_count(integ, "reproject_every", 100);

  const json out = doc.value("output", json::object());
  cfg.output_path            = out.value("path", std::string());
  cfg.integrator.stride      = get_count(out, "stride", 1);
  const std::string format   = out.value("format", std::string("csv"));
  if (format == "csv") {
    cfg.format = OutputFormat::Csv;
  } else if (format == "json-lines") {
    cfg.format = OutputFormat::JsonLines;
  } else {
    throw ConfigError("unknown output format '" + format + "'");
  }
  return cfg;
}

SimulationConfig load_config(const std::string & path)
{
  const json doc = read_json_file(path);
  try {
    return parse_config(doc);
  } catch (const json::exception & e) {
    throw ConfigError(std::string("configuration: ") + e.what());
  }
}

}  // namespace tulczyjew
