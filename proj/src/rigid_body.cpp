#include "tulczyjew/rigid_body.hpp"

#include "tulczyjew/errors.hpp"
#include "tulczyjew/lie_group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tulczyjew {

namespace {

BodySpec tensor_quadrature(const Eigen::Vector3d & edges, double mass, int order)
{
  if (!(mass > 0.0)) { throw ContractViolation("body preset: mass must be positive"); }
  if (!(edges.minCoeff() > 0.0)) { throw ContractViolation("body preset: dimensions must be positive"); }
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  BodySpec body;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      for (std::size_t k = 0; k < x.size(); ++k) {
        // weights sum to 2 per axis
        const double m = mass * w[i] * w[j] * w[k] / 8.0;
        body.points.push_back({m, Eigen::Vector3d(0.5 * edges.x() * x[i], 0.5 * edges.y() * x[j], 0.5 * edges.z() * x[k])});
      }
    }
  }
  return body;
}

}  // namespace

double BodySpec::total_mass() const
{
  double m = 0.0;
  for (const auto & p : points) { m += p.mass; }
  return m;
}

void BodySpec::validate() const
{
  if (points.empty()) { throw ContractViolation("body has no mass points"); }
  for (const auto & p : points) {
    if (!(p.mass > 0.0) || !std::isfinite(p.mass)) { throw ContractViolation("body: point masses must be positive"); }
    if (!p.position.allFinite()) { throw ContractViolation("body: positions must be finite"); }
  }
}

void gauss_legendre(int order, std::vector<double> & nodes, std::vector<double> & weights)
{
  if (order < 1) { throw ContractViolation("gauss_legendre: order must be at least 1"); }
  nodes.assign(static_cast<std::size_t>(order), 0.0);
  weights.assign(static_cast<std::size_t>(order), 0.0);
  for (int i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) { break; }
    }
    nodes[static_cast<std::size_t>(i)]   = x;
    weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

BodySpec BodySpec::cube(double side, double mass, int order)
{
  return tensor_quadrature(Eigen::Vector3d::Constant(side), mass, order);
}

BodySpec BodySpec::box(const Eigen::Vector3d & edges, double mass, int order)
{
  return tensor_quadrature(edges, mass, order);
}

BodySpec BodySpec::sphere(double radius, double mass, int order)
{
  if (!(mass > 0.0) || !(radius > 0.0)) { throw ContractViolation("sphere preset: mass and radius must be positive"); }
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  const int n_phi      = 2 * order;
  const double volume  = 4.0 / 3.0 * std::numbers::pi * radius * radius * radius;
  BodySpec body;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r  = 0.5 * radius * (x[i] + 1.0);
    const double wr = 0.5 * radius * w[i] * r * r;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double ct = x[j];
      const double st = std::sqrt(1.0 - ct * ct);
      for (int k = 0; k < n_phi; ++k) {
        const double phi = 2.0 * std::numbers::pi * (k + 0.5) / n_phi;
        const double dv  = wr * w[j] * (2.0 * std::numbers::pi / n_phi);
        body.points.push_back({mass * dv / volume, Eigen::Vector3d(r * st * std::cos(phi), r * st * std::sin(phi), r * ct)});
      }
    }
  }
  return body;
}

InertiaForm::InertiaForm(Eigen::MatrixXd M) : M_(std::move(M))
{
  if (M_.rows() != M_.cols() || M_.rows() == 0) { throw SingularForm("inertia form must be a non-empty square matrix"); }
  if (!M_.allFinite()) { throw SingularForm("inertia form has non-finite entries"); }
  if ((M_ - M_.transpose()).cwiseAbs().maxCoeff() > 1e-12) { throw SingularForm("inertia form is not symmetric"); }
  llt_.compute(M_);
  if (llt_.info() != Eigen::Success || eigenvalues().minCoeff() <= 0.0) {
    throw SingularForm("inertia form is not positive definite");
  }
}

Eigen::VectorXd InertiaForm::eigenvalues() const
{
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(M_, Eigen::EigenvaluesOnly).eigenvalues();
}

CoalgebraElement InertiaForm::iso(const AlgebraElement & X) const
{
  if (X.size() != dim()) { throw ContractViolation("inertia: vector has the wrong dimension"); }
  return CoalgebraElement(Eigen::VectorXd(M_ * X.coords()));
}

AlgebraElement InertiaForm::iso_inv(const CoalgebraElement & A) const
{
  if (A.size() != dim()) { throw ContractViolation("inertia: covector has the wrong dimension"); }
  return AlgebraElement(Eigen::VectorXd(llt_.solve(A.coords())));
}

Eigen::Matrix3d inertia_generator_form(const BodySpec & body)
{
  body.validate();
  Eigen::Matrix3d gens[3];
  for (int i = 0; i < 3; ++i) { gens[i] = skew(Eigen::Vector3d::Unit(i)); }
  Eigen::Matrix3d M = Eigen::Matrix3d::Zero();
  for (const auto & p : body.points) {
    Eigen::Vector3d v[3];
    for (int i = 0; i < 3; ++i) { v[i] = gens[i] * p.position; }
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) { M(i, j) += p.mass * v[i].dot(v[j]); }
    }
  }
  return M;
}

Eigen::Matrix3d inertia_classical(const BodySpec & body)
{
  body.validate();
  Eigen::Matrix3d M = Eigen::Matrix3d::Zero();
  for (const auto & p : body.points) {
    const Eigen::Vector3d & q = p.position;
    M += p.mass * (q.squaredNorm() * Eigen::Matrix3d::Identity() - q * q.transpose());
  }
  return M;
}

int inertia_rank(const Eigen::Matrix3d & M)
{
  const Eigen::Vector3d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(M, Eigen::EigenvaluesOnly).eigenvalues();
  const double top         = ev.cwiseAbs().maxCoeff();
  if (top == 0.0) { return 0; }
  int rank = 0;
  for (int i = 0; i < 3; ++i) { rank += ev(i) > 1e-12 * top ? 1 : 0; }
  return rank;
}

InertiaForm inertia_from_body(const BodySpec & body)
{
  const Eigen::Matrix3d M = inertia_generator_form(body);
  const Eigen::Matrix3d C = inertia_classical(body);
  const double scale      = std::max(1.0, C.cwiseAbs().maxCoeff());
  if ((M - C).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::logic_error("inertia: generator form and classical tensor disagree");
  }
  if (const int rank = inertia_rank(M); rank < 3) {
    throw DegenerateBody("inertia form has rank " + std::to_string(rank) + " < 3 (collinear or single-point body)");
  }
  // Remove rounding asymmetry before the strict symmetry check.
  return InertiaForm(Eigen::MatrixXd(0.5 * (M + M.transpose())));
}

CoalgebraElement inertia_iso(const InertiaForm & I, const AlgebraElement & X) { return I.iso(X); }

AlgebraElement inertia_iso_inv(const InertiaForm & I, const CoalgebraElement & A) { return I.iso_inv(A); }

ReducedLagrangian rigid_body_lagrangian(const InertiaForm & I)
{
  ReducedLagrangian l;
  l.eval    = [I](const AlgebraElement & X) { return 0.5 * pair(I.iso(X), X); };
  l.grad    = [I](const AlgebraElement & X) { return I.iso(X); };
  l.hessian = [I](const AlgebraElement &) { return I.matrix(); };
  return l;
}

ReducedHamiltonian rigid_body_hamiltonian(const InertiaForm & I)
{
  ReducedHamiltonian h;
  h.eval = [I](const CoalgebraElement & A) { return 0.5 * pair(A, I.iso_inv(A)); };
  h.grad = [I](const CoalgebraElement & A) { return I.iso_inv(A); };
  return h;
}

AlgebraElement euler_rhs(const LieAlgebra & alg, const InertiaForm & I, const AlgebraElement & X)
{
  if (alg.dim() != I.dim()) { throw ContractViolation("euler_rhs: inertia form and algebra dimensions differ"); }
  return I.iso_inv(alg.coad(X, I.iso(X)));
}

SymmetricTopOracle::SymmetricTopOracle(double I1, double I3, const Eigen::Vector3d & X0) : X0_(X0)
{
  if (!(I1 > 0.0) || !(I3 > 0.0)) { throw ContractViolation("symmetric top: principal moments must be positive"); }
  rate_ = X0.z() * (I3 - I1) / I1;
}

Eigen::Vector3d SymmetricTopOracle::at(double t) const
{
  const double c = std::cos(rate_ * t), s = std::sin(rate_ * t);
  return {c * X0_.x() - s * X0_.y(), s * X0_.x() + c * X0_.y(), X0_.z()};
}

}  // namespace tulczyjew
