#ifndef TULCZYJEW__MECHANICS_HPP_
#define TULCZYJEW__MECHANICS_HPP_

#include "tulczyjew/bundle_maps.hpp"
#include "tulczyjew/lie_group.hpp"
#include "tulczyjew/reduction.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace tulczyjew {

constexpr double kGradientStep = 1e-6;

/// Lagrangian on G x g. Missing gradients fall back to central differences.
struct TrivializedLagrangian
{
  std::function<double(const GroupElement &, const AlgebraElement &)> eval;
  std::function<CoalgebraElement(const GroupElement &, const AlgebraElement &)> grad_X;
  /// Left-trivialized differential along G.
  std::function<CoalgebraElement(const GroupElement &, const AlgebraElement &)> grad_g;
};

/// Hamiltonian on G x g*. Missing gradients fall back to central differences.
struct TrivializedHamiltonian
{
  std::function<double(const GroupElement &, const CoalgebraElement &)> eval;
  std::function<AlgebraElement(const GroupElement &, const CoalgebraElement &)> grad_A;
  std::function<CoalgebraElement(const GroupElement &, const CoalgebraElement &)> grad_g;
};

/// Lagrangian on g.
struct ReducedLagrangian
{
  std::function<double(const AlgebraElement &)> eval;
  std::function<CoalgebraElement(const AlgebraElement &)> grad;
  /// Optional; central differences of grad otherwise.
  std::function<Eigen::MatrixXd(const AlgebraElement &)> hessian;
};

/// Hamiltonian on g*. Its gradient lives in g.
struct ReducedHamiltonian
{
  std::function<double(const CoalgebraElement &)> eval;
  std::function<AlgebraElement(const CoalgebraElement &)> grad;
};

CoalgebraElement partial_X(const TrivializedLagrangian & L, const GroupElement & g, const AlgebraElement & X);
CoalgebraElement partial_g(const GroupSpec & spec, const TrivializedLagrangian & L, const GroupElement & g,
                           const AlgebraElement & X);
AlgebraElement partial_A(const TrivializedHamiltonian & H, const GroupElement & g, const CoalgebraElement & A);
CoalgebraElement partial_g(const GroupSpec & spec, const TrivializedHamiltonian & H, const GroupElement & g,
                           const CoalgebraElement & A);

/// Central-difference gradient of a scalar function on coordinates.
Eigen::VectorXd numeric_gradient(const std::function<double(const Eigen::VectorXd &)> & f, const Eigen::VectorXd & x,
                                 double h = kGradientStep);

/// Max |grad - numeric_gradient| at X.
double gradient_residual(const ReducedLagrangian & l, const AlgebraElement & X, double h = kGradientStep);
double gradient_residual(const ReducedHamiltonian & hm, const CoalgebraElement & A, double h = kGradientStep);

/// Point of the trivialized Lagrangian dynamics over (g, X): alpha_inv applied
/// to dL(g, X), i.e. (g, dL/dX, X, dL/dg + ad*_X dL/dX). Read as the implicit
/// equation g' = g X, A' = B.
PointTTsG dynamics_point_lagrangian(const GroupSpec & spec, const TrivializedLagrangian & L, const GroupElement & g,
                                    const AlgebraElement & X);

/// Hamiltonian vector field (g, A, dH/dA, -dH/dg + ad*_X A).
PointTTsG hamiltonian_field(const GroupSpec & spec, const TrivializedHamiltonian & H, const GroupElement & g,
                            const CoalgebraElement & A);

/// (dl/dX, ad*_X dl/dX).
ReducedPhasePair reduced_dynamics(const LieAlgebra & alg, const ReducedLagrangian & l, const AlgebraElement & X);

/// (B, ad*_{dh/dB} B).
ReducedPhasePair reduced_hamiltonian_field(const LieAlgebra & alg, const ReducedHamiltonian & hm,
                                           const CoalgebraElement & B);

/// X -> dl/dX.
CoalgebraElement legendre(const ReducedLagrangian & l, const AlgebraElement & X);

/**
 * @brief Hamiltonian h(B) = <B, X> - l(X) with X the inverse Legendre image of B.
 *
 * Only Lagrangians with an affine gradient and a positive-definite quadratic
 * part are accepted; anything else throws NotHyperregular.
 */
ReducedHamiltonian legendre_transform(const LieAlgebra & alg, const ReducedLagrangian & l);

/// Inverse Legendre map for the same class of Lagrangians.
std::function<AlgebraElement(const CoalgebraElement &)> inverse_legendre(const LieAlgebra & alg,
                                                                       const ReducedLagrangian & l);

enum class Method { RK4, Midpoint };
enum class Reconstruction { MuntheKaas, LieEuler };

struct IntegratorOptions
{
  Method method = Method::RK4;
  double dt     = 1e-3;
  std::size_t steps = 1;
  /// Record every stride-th step (step 0 always).
  std::size_t stride = 1;
  std::size_t reproject_every = 100;
  Reconstruction reconstruction = Reconstruction::MuntheKaas;

  void validate() const;
};

struct TrajectoryRow
{
  double t = 0.0;
  std::optional<Eigen::MatrixXd> g;
  CoalgebraElement A;
  AlgebraElement X;
  double energy  = 0.0;
  double casimir = 0.0;
};

struct TrajectoryRecord
{
  std::vector<TrajectoryRow> rows;

  bool has_attitude() const { return !rows.empty() && rows.front().g.has_value(); }
  std::size_t dim() const { return rows.empty() ? 0 : rows.front().A.size(); }
};

/// Reduced flow B' = rhs(B).B together with the observables recorded per row.
struct ReducedFlow
{
  std::function<ReducedPhasePair(const CoalgebraElement &)> rhs;
  std::function<AlgebraElement(const CoalgebraElement &)> velocity;
  std::function<double(const CoalgebraElement &)> energy;
  std::function<double(const CoalgebraElement &)> casimir;
};

/// <A, A> in the Euclidean identification; a Casimir of so(3)*.
double squared_norm_casimir(const CoalgebraElement & A);

/// Lie-Poisson flow of h: B' = ad*_{dh/dB} B, velocity dh/dB, energy h.
ReducedFlow hamiltonian_flow(const LieAlgebra & alg, ReducedHamiltonian hm);

using VectorField = std::function<Eigen::VectorXd(const Eigen::VectorXd &)>;

Eigen::VectorXd rk4_step(const VectorField & f, const Eigen::VectorXd & y, double dt);
/// Implicit midpoint by fixed-point iteration (50 iterations, residual 1e-12).
Eigen::VectorXd midpoint_step(const VectorField & f, const Eigen::VectorXd & y, double dt);

/// dexp^{-1} for left-trivialized reconstruction, truncated after the
/// double bracket: v + [u, v]/2 + [u, [u, v]]/12.
AlgebraElement dexp_inv_left(const LieAlgebra & alg, const AlgebraElement & u, const AlgebraElement & v);

TrajectoryRecord integrate_reduced(const ReducedFlow & flow, const CoalgebraElement & B0,
                                   const IntegratorOptions & opts);

/// Couples the reduced flow with g' = g X(B). With RK4 the group is advanced
/// by the matching 4th-order Munthe-Kaas step (or Lie-Euler if requested).
TrajectoryRecord integrate_with_reconstruction(const GroupSpec & spec, const ReducedFlow & flow,
                                               const GroupElement & g0, const CoalgebraElement & B0,
                                               const IntegratorOptions & opts);

/// Euler-Poincare flow in velocity form: solve Hess l(X) X' = ad*_X dl/dX.
/// Rows carry A = dl/dX and the energy <A, X> - l(X).
TrajectoryRecord integrate_lagrangian(const LieAlgebra & alg, const ReducedLagrangian & l, const AlgebraElement & X0,
                                      const IntegratorOptions & opts);

}  // namespace tulczyjew

#endif
