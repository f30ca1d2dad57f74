#ifndef TULCZYJEW__RIGID_BODY_HPP_
#define TULCZYJEW__RIGID_BODY_HPP_

#include "tulczyjew/lie_algebra.hpp"
#include "tulczyjew/mechanics.hpp"

#include <Eigen/Dense>

#include <vector>

namespace tulczyjew {

struct PointMass
{
  double mass = 0.0;  // kg
  Eigen::Vector3d position = Eigen::Vector3d::Zero();  // body frame, m
};

/**
 * @brief Mass distribution of a rigid body as a weighted point cloud.
 *
 * Presets are tensor-product Gauss-Legendre quadratures of a uniform
 * density, so their inertia is exact for the quadratic integrand.
 */
struct BodySpec
{
  std::vector<PointMass> points;

  double total_mass() const;
  /// Throws ContractViolation on empty bodies or non-positive masses.
  void validate() const;

  /// Uniform cube of the given side centered at the origin.
  static BodySpec cube(double side, double mass, int order = 4);
  /// Uniform box with edge lengths (a, b, c) along the body axes.
  static BodySpec box(const Eigen::Vector3d & edges, double mass, int order = 4);
  /// Uniform ball of the given radius.
  static BodySpec sphere(double radius, double mass, int order = 4);
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int order, std::vector<double> & nodes, std::vector<double> & weights);

/// Symmetric positive-definite form on g, the moment of inertia.
class InertiaForm
{
public:
  /// Throws SingularForm unless M is symmetric (1e-12) and positive definite.
  explicit InertiaForm(Eigen::MatrixXd M);

  const Eigen::MatrixXd & matrix() const { return M_; }
  std::size_t dim() const { return static_cast<std::size_t>(M_.rows()); }
  Eigen::VectorXd eigenvalues() const;

  /// X -> I(X, .).
  CoalgebraElement iso(const AlgebraElement & X) const;
  /// Solves I(X, .) = A.
  AlgebraElement iso_inv(const CoalgebraElement & A) const;

private:
  Eigen::MatrixXd M_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

/// sum_p m_p (E_i q_p . E_j q_p) with E_i the so(3) generators.
Eigen::Matrix3d inertia_generator_form(const BodySpec & body);
/// sum_p m_p (|q_p|^2 Id - q_p q_p^T).
Eigen::Matrix3d inertia_classical(const BodySpec & body);
/// Numerical rank of the inertia matrix (eigenvalues above 1e-12 of the largest).
int inertia_rank(const Eigen::Matrix3d & M);

/// Inertia form of a body; throws DegenerateBody if its rank is below 3.
InertiaForm inertia_from_body(const BodySpec & body);

CoalgebraElement inertia_iso(const InertiaForm & I, const AlgebraElement & X);
AlgebraElement inertia_iso_inv(const InertiaForm & I, const CoalgebraElement & A);

/// l(X) = I(X, X) / 2.
ReducedLagrangian rigid_body_lagrangian(const InertiaForm & I);
/// h(A) = <A, I^{-1} A> / 2.
ReducedHamiltonian rigid_body_hamiltonian(const InertiaForm & I);

/// X' = I^{-1} ad*_X (I X); in R^3 this is I X' = (I X) x X.
AlgebraElement euler_rhs(const LieAlgebra & alg, const InertiaForm & I, const AlgebraElement & X);

/// Closed-form body angular velocity of a symmetric top, inertia diag(I1, I1, I3).
class SymmetricTopOracle
{
public:
  SymmetricTopOracle(double I1, double I3, const Eigen::Vector3d & X0);

  /// Rotation rate of (X1, X2): X3(0) (I3 - I1) / I1.
  double rate() const { return rate_; }
  Eigen::Vector3d at(double t) const;

private:
  double rate_;
  Eigen::Vector3d X0_;
};

}  // namespace tulczyjew

#endif
