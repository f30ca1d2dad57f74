#include "tulczyjew/commands.hpp"

#include "tulczyjew/bundle_maps.hpp"
#include "tulczyjew/errors.hpp"
#include "tulczyjew/lie_group.hpp"
#include "tulczyjew/rigid_body.hpp"
#include "tulczyjew/trajectory_io.hpp"
#include "tulczyjew/verify.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <ostream>

namespace tulczyjew {

using nlohmann::json;

namespace {

bool finite_row(const TrajectoryRow & row)
{
  const bool g_ok = !row.g || row.g->allFinite();
  return g_ok && row.A.coords().allFinite() && row.X.coords().allFinite() && std::isfinite(row.energy) &&
         std::isfinite(row.casimir);
}

void write_record(std::ostream & out, const TrajectoryRecord & rec, OutputFormat format)
{
  if (format == OutputFormat::Csv) {
    write_csv(out, rec);
  } else {
    write_json_lines(out, rec);
  }
}

json vector_json(const Eigen::VectorXd & v)
{
  json a = json::array();
  // Adding 0.0 folds -0 into 0 so printed points stay tidy.
  for (Eigen::Index i = 0; i < v.size(); ++i) { a.push_back(v(i) + 0.0); }
  return a;
}

json matrix_json(const Eigen::MatrixXd & M)
{
  json a = json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) { a.push_back(vector_json(M.row(r).transpose())); }
  return a;
}

Eigen::VectorXd slot(const json & node, std::size_t n)
{
  if (!node.is_array() || (n && node.size() != n)) {
    throw ConfigError("point slots must be arrays of " + std::to_string(n) + " numbers");
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(node.size()));
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number()) { throw ConfigError("point slots must contain only numbers"); }
    v(static_cast<Eigen::Index>(i)) = node[i].get<double>();
  }
  return v;
}

GroupElement parse_base(const GroupSpec & spec, const json & node)
{
  if (node.is_string() && node.get<std::string>() == "e") { return spec.identity(); }
  const auto d = static_cast<std::size_t>(spec.matrix_size());
  if (!node.is_array() || node.size() != d) {
    throw ConfigError("base point must be \"e\" or a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
  }
  Eigen::MatrixXd M(spec.matrix_size(), spec.matrix_size());
  for (std::size_t r = 0; r < d; ++r) { M.row(static_cast<Eigen::Index>(r)) = slot(node[r], d).transpose(); }
  const auto g = spec.element(std::move(M));
  if (!spec.is_member(g)) { throw ConfigError("base point is not an element of " + spec.name()); }
  return g;
}

json base_json(const GroupSpec & spec, const GroupElement & g)
{
  return g.mat == spec.identity().mat ? json("e") : matrix_json(g.mat);
}

template<class P>
json point_json(const GroupSpec & spec, const P & p, const Eigen::VectorXd & s1, const Eigen::VectorXd & s2,
                const Eigen::VectorXd & s3)
{
  return json::array({base_json(spec, p.g), vector_json(s1), vector_json(s2), vector_json(s3)});
}

}  // namespace

TrajectoryRecord simulate(const SimulationConfig & cfg)
{
  const InertiaForm I(cfg.inertia);
  const CoalgebraElement A0 = cfg.A0 ? *cfg.A0 : I.iso(*cfg.X0);
  const auto flow           = hamiltonian_flow(cfg.algebra, rigid_body_hamiltonian(I));

  TrajectoryRecord rec;
  if (cfg.track_attitude) {
    const auto spec = GroupSpec::so3();
    const auto g0   = cfg.g0 ? spec.element(*cfg.g0) : spec.identity();
    rec             = integrate_with_reconstruction(spec, flow, g0, A0, cfg.integrator);
  } else {
    rec = integrate_reduced(flow, A0, cfg.integrator);
  }
  for (const auto & row : rec.rows) {
    if (!finite_row(row)) { throw ConvergenceError("state became non-finite at t = " + format_number(row.t)); }
  }
  return rec;
}

int cmd_simulate(const std::string & config_path, std::ostream & out, std::ostream & err)
{
  SimulationConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const ConfigError & e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  TrajectoryRecord rec;
  try {
    rec = simulate(cfg);
  } catch (const Error & e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumericError;
  }
  if (cfg.output_path.empty() || cfg.output_path == "-") {
    write_record(out, rec, cfg.format);
    return kExitOk;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  if (!file) {
    err << "config error: cannot write '" << cfg.output_path << "'\n";
    return kExitConfigError;
  }
  write_record(file, rec, cfg.format);
  return kExitOk;
}

int cmd_verify(std::uint64_t seed, std::size_t samples, const std::string & algebra_path, std::ostream & out,
               std::ostream & err)
{
  VerifyOptions opts;
  opts.seed    = seed;
  opts.samples = samples;
  if (samples == 0) {
    err << "config error: --samples must be positive\n";
    return kExitConfigError;
  }
  if (!algebra_path.empty()) {
    try {
      opts.extra_algebra = parse_algebra(read_json_file(algebra_path), false);
    } catch (const ConfigError & e) {
      err << "config error: " << e.what() << '\n';
      return kExitConfigError;
    }
  }
  VerifyReport report;
  try {
    report = run_verification(opts);
  } catch (const Error & e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumericError;
  }
  report.print(out);
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_inertia(const std::string & config_path, std::ostream & out, std::ostream & err)
{
  BodySpec body;
  try {
    const json doc = read_json_file(config_path);
    body           = parse_body(doc.contains("system") ? doc.at("system") : doc);
  } catch (const ConfigError & e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const json::exception & e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  const Eigen::Matrix3d M = inertia_generator_form(body);
  const Eigen::Matrix3d S = 0.5 * (M + M.transpose());
  const int rank          = inertia_rank(S);
  json doc;
  doc["inertia"]     = matrix_json(S);
  doc["eigenvalues"] = vector_json(Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(S).eigenvalues());
  doc["rank"]        = rank;
  doc["total_mass"]  = body.total_mass();
  out << doc.dump(2) << '\n';
  if (rank < 3) {
    err << "warning: inertia has rank " << rank << "; the body is degenerate and cannot be simulated\n";
    return kExitNumericError;
  }
  return kExitOk;
}

int cmd_maps(const std::string & name, const std::string & point, const std::string & algebra, std::ostream & out,
             std::ostream & err)
{
  json result;
  try {
    json lit;
    try {
      lit = json::parse(point);
    } catch (const json::parse_error & e) {
      throw ConfigError(std::string("--point is not valid JSON: ") + e.what());
    }
    if (!lit.is_array() || lit.size() != 4) { throw ConfigError("--point must be [g, s1, s2, s3]"); }
    if (algebra != "so3" && algebra != "abelian") { throw ConfigError("--algebra must be so3 or abelian"); }
    if (algebra == "abelian" && (!lit[1].is_array() || lit[1].empty())) {
      throw ConfigError("abelian points need non-empty slots");
    }
    const auto spec = algebra == "so3" ? GroupSpec::so3() : GroupSpec::translations(lit[1].size());
    const auto & alg = spec.algebra();
    const auto n     = alg.dim();
    const auto g     = parse_base(spec, lit[0]);
    const Eigen::VectorXd s1 = slot(lit[1], n), s2 = slot(lit[2], n), s3 = slot(lit[3], n);

    if (name == "kappa") {
      const auto r = kappa(alg, {g, AlgebraElement(s1), AlgebraElement(s2), AlgebraElement(s3)});
      result       = point_json(spec, r, r.X.coords(), r.Y.coords(), r.Z.coords());
    } else if (name == "alpha") {
      const auto r = alpha(alg, {g, CoalgebraElement(s1), AlgebraElement(s2), CoalgebraElement(s3)});
      result       = point_json(spec, r, r.X.coords(), r.A.coords(), r.B.coords());
    } else if (name == "alpha_inv") {
      const auto r = alpha_inv(alg, {g, AlgebraElement(s1), CoalgebraElement(s2), CoalgebraElement(s3)});
      result       = point_json(spec, r, r.A.coords(), r.X.coords(), r.B.coords());
    } else if (name == "beta") {
      const auto r = beta(alg, {g, CoalgebraElement(s1), AlgebraElement(s2), CoalgebraElement(s3)});
      result       = point_json(spec, r, r.A.coords(), r.B.coords(), r.X.coords());
    } else if (name == "beta_inv") {
      const auto r = beta_inv(alg, {g, CoalgebraElement(s1), CoalgebraElement(s2), AlgebraElement(s3)});
      result       = point_json(spec, r, r.A.coords(), r.X.coords(), r.B.coords());
    } else if (name == "gamma") {
      const auto r = gamma(alg, {g, CoalgebraElement(s1), CoalgebraElement(s2), AlgebraElement(s3)});
      result       = point_json(spec, r, r.X.coords(), r.A.coords(), r.B.coords());
    } else if (name == "gamma_inv") {
      const auto r = gamma_inv(alg, {g, AlgebraElement(s1), CoalgebraElement(s2), CoalgebraElement(s3)});
      result       = point_json(spec, r, r.A.coords(), r.B.coords(), r.X.coords());
    } else {
      throw ConfigError("unknown map '" + name + "' (kappa, alpha, alpha_inv, beta, beta_inv, gamma, gamma_inv)");
    }
  } catch (const ConfigError & e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const Error & e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  out << result.dump() << '\n';
  return kExitOk;
}

}  // namespace tulczyjew
