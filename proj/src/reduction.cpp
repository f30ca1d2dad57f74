#include "tulczyjew/reduction.hpp"

namespace tulczyjew {

ReducedVelocityPair project_TTG(const PointTTG & v) { return {v.X, v.Z}; }

ReducedPhasePair project_TTsG(const PointTTsG & rho) { return {rho.A, rho.B}; }

bool in_K(const PointTsTG & w, double tol) { return w.A.norm_inf() <= tol; }

bool in_C(const PointTsTsG & u, double tol) { return u.B.norm_inf() <= tol; }

ReducedMixedPair project_K(const PointTsTG & w) { return {w.X, w.B}; }

ReducedCoMixedPair project_C(const PointTsTsG & u) { return {u.A, u.X}; }

bool kappa_reduced_related(const LieAlgebra & alg, const ReducedVelocityPair & p, const ReducedVelocityPair & q,
                           double tol)
{
  alg.require(p.Y);
  alg.require(q.Y);
  return (q.Y - (p.Y - alg.bracket(p.X, q.X))).norm_inf() <= tol;
}

ReducedPhasePair alpha_reduced(const LieAlgebra & alg, const ReducedMixedPair & m)
{
  return {m.A, alg.coad(m.X, m.A)};
}

ReducedPhasePair beta_reduced(const LieAlgebra & alg, const ReducedCoMixedPair & m)
{
  return {m.A, alg.coad(m.X, m.A)};
}

double linear_poisson_bracket(const LieAlgebra & alg, const CoalgebraElement & A, const AlgebraElement & X,
                              const AlgebraElement & Y)
{
  return pair(A, alg.bracket(X, Y));
}

}  // namespace tulczyjew
