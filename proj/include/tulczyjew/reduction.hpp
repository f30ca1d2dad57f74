#ifndef TULCZYJEW__REDUCTION_HPP_
#define TULCZYJEW__REDUCTION_HPP_

#include "tulczyjew/bundle_maps.hpp"

namespace tulczyjew {

/// Element of g x g (the reduced TTG).
struct ReducedVelocityPair
{
  AlgebraElement X;
  AlgebraElement Y;
};

/// Element of g* x g* (the reduced TT*G).
struct ReducedPhasePair
{
  CoalgebraElement A;
  CoalgebraElement B;
};

/// Element of g x g* (the reduced T*TG).
struct ReducedMixedPair
{
  AlgebraElement X;
  CoalgebraElement A;
};

/// Element of g* x g (the reduced T*T*G).
struct ReducedCoMixedPair
{
  CoalgebraElement A;
  AlgebraElement X;
};

constexpr double kMembershipTol = 1e-9;

/// (g, X, Y, Z) -> (X, Z).
ReducedVelocityPair project_TTG(const PointTTG & v);
/// (g, A, X, B) -> (A, B).
ReducedPhasePair project_TTsG(const PointTTsG & rho);

/// Membership in K = {(g, X, 0, A)}.
bool in_K(const PointTsTG & w, double tol = kMembershipTol);
/// Membership in C = {(g, A, 0, X)}.
bool in_C(const PointTsTsG & u, double tol = kMembershipTol);

/// (g, X, 0, A) -> (X, A). Does not check membership.
ReducedMixedPair project_K(const PointTsTG & w);
/// (g, A, 0, X) -> (A, X). Does not check membership.
ReducedCoMixedPair project_C(const PointTsTsG & u);

// The reduced involution is a relation, not a map: (X1, Y1) ~ (X2, Y2)
// iff Y2 = Y1 - [X1, X2].
bool kappa_reduced_related(const LieAlgebra & alg, const ReducedVelocityPair & p, const ReducedVelocityPair & q,
                           double tol = kMembershipTol);

/// (X, A) -> (A, ad*_X A).
ReducedPhasePair alpha_reduced(const LieAlgebra & alg, const ReducedMixedPair & m);
/// (A, X) -> (A, ad*_X A).
ReducedPhasePair beta_reduced(const LieAlgebra & alg, const ReducedCoMixedPair & m);

/// Linear Poisson bracket of the linear functions <., X> and <., Y> at A.
double linear_poisson_bracket(const LieAlgebra & alg, const CoalgebraElement & A, const AlgebraElement & X,
                              const AlgebraElement & Y);

}  // namespace tulczyjew

#endif
