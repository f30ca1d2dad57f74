#ifndef TULCZYJEW__BUNDLE_MAPS_HPP_
#define TULCZYJEW__BUNDLE_MAPS_HPP_

#include "tulczyjew/lie_algebra.hpp"
#include "tulczyjew/lie_group.hpp"

#include <functional>

namespace tulczyjew {

// Left-trivialized iterated bundles over a group G with algebra g. Each point
// type fixes which slots are vectors and which are covectors, so the maps
// below cannot be fed the wrong bundle.

/// TTG = G x g x g x g.
struct PointTTG
{
  GroupElement g;
  AlgebraElement X;
  AlgebraElement Y;
  AlgebraElement Z;
};

/// TT*G = G x g* x g x g*.
struct PointTTsG
{
  GroupElement g;
  CoalgebraElement A;
  AlgebraElement X;
  CoalgebraElement B;
};

/// T*TG = G x g x g* x g*.
struct PointTsTG
{
  GroupElement g;
  AlgebraElement X;
  CoalgebraElement A;
  CoalgebraElement B;
};

/// T*T*G = G x g* x g* x g.
struct PointTsTsG
{
  GroupElement g;
  CoalgebraElement A;
  CoalgebraElement B;
  AlgebraElement X;
};

/// Canonical involution (g, X, Y, Z) -> (g, Y, X, Z - [X, Y]).
PointTTG kappa(const LieAlgebra & alg, const PointTTG & v);

/// (g, A, X, B) -> (g, X, B - ad*_X A, A).
PointTsTG alpha(const LieAlgebra & alg, const PointTTsG & rho);
/// (g, X, C, D) -> (g, D, X, C + ad*_X D).
PointTTsG alpha_inv(const LieAlgebra & alg, const PointTsTG & w);

/// (g, A, X, B) -> (g, A, -B + ad*_X A, X); contraction with the symplectic form.
PointTsTsG beta(const LieAlgebra & alg, const PointTTsG & rho);
/// (g, A, B, X) -> (g, A, X, -B + ad*_X A).
PointTTsG beta_inv(const LieAlgebra & alg, const PointTsTsG & u);

/// (g, A, B, X) -> (g, X, -B, A).
PointTsTG gamma(const LieAlgebra & alg, const PointTsTsG & u);
/// (g, X, C, D) -> (g, D, -C, X).
PointTsTsG gamma_inv(const LieAlgebra & alg, const PointTsTG & w);

/// Liouville form: theta(g, A, X, B) = <A, X>.
double theta(const PointTTsG & rho);

/// Base point of T*G in trivialization.
struct CotangentPoint
{
  GroupElement g;
  CoalgebraElement A;
};

/// Value (X, B) of a trivialized vector field on G x g* at a base point.
struct CotangentFieldValue
{
  AlgebraElement X;
  CoalgebraElement B;
};

/// Symplectic form on T*G: <B, Y> - <C, X> - <A, [X, Y]>.
double omega_at(const LieAlgebra & alg, const CotangentPoint & base, const CotangentFieldValue & phi,
                const CotangentFieldValue & psi);

/// Pairing of TT*G with TTG over TG: <<(g, A, Y, B), (g, X, Y, Z)>> = <A, Z> + <B, X>.
/// The middle slots must agree exactly.
double tt_pairing(const PointTTsG & rho, const PointTTG & v);

/// Pairing of T*TG with TTG: <(g, X, A, B), (g, X, Y, Z)> = <A, Y> + <B, Z>.
/// Base points (g, X) must agree exactly.
double tstg_pairing(const PointTsTG & w, const PointTTG & v);

/// Pairing of T*T*G with TT*G: <(g, A, B, X), (g, A, Y, C)> = <B, Y> + <C, X>.
/// Base points (g, A) must agree exactly.
double tstst_pairing(const PointTsTsG & u, const PointTTsG & rho);

/// Trivialized vector field on G: g -> X(g).
///
/// `derivative`, when set, returns the matrix whose i-th column is
/// d/dt X(g exp(t e_i)) at t = 0; otherwise central differences are used.
struct GroupField
{
  std::function<AlgebraElement(const GroupElement &)> value;
  std::function<Eigen::MatrixXd(const GroupElement &)> derivative;
};

/// Trivialized vector field on G x g*: (g, A) -> (X(g, A), B(g, A)).
struct TrivializedField
{
  std::function<AlgebraElement(const GroupElement &, const CoalgebraElement &)> X;
  std::function<CoalgebraElement(const GroupElement &, const CoalgebraElement &)> B;

  CotangentFieldValue at(const CotangentPoint & p) const { return {X(p.g, p.A), B(p.g, p.A)}; }
};

/// Symplectic form evaluated on two fields at a base point.
double omega(const LieAlgebra & alg, const TrivializedField & phi, const TrivializedField & psi,
             const CotangentPoint & base);

/// Left-trivialized derivative of a field at g (columns along the generators).
Eigen::MatrixXd field_derivative(const GroupSpec & spec, const GroupField & field, const GroupElement & g,
                                 double h = 1e-6);

/// Trivialized bracket of vector fields: DY(X(g)) - DX(Y(g)) + [X(g), Y(g)].
AlgebraElement field_bracket(const GroupSpec & spec, const GroupField & xi, const GroupField & eta,
                             const GroupElement & g, double h = 1e-6);

/// The bracket [xi, eta] as a field, usable in nested brackets.
GroupField field_bracket_field(const GroupSpec & spec, GroupField xi, GroupField eta, double h = 1e-6);

}  // namespace tulczyjew

#endif
