#include "tulczyjew/bundle_maps.hpp"

#include "tulczyjew/errors.hpp"

namespace tulczyjew {

namespace {

bool same_base(const GroupElement & a, const GroupElement & b)
{
  return a.group == b.group && a.mat.rows() == b.mat.rows() && a.mat.cols() == b.mat.cols() && a.mat == b.mat;
}

}  // namespace

PointTTG kappa(const LieAlgebra & alg, const PointTTG & v)
{
  alg.require(v.Z);
  return {v.g, v.Y, v.X, v.Z - alg.bracket(v.X, v.Y)};
}

PointTsTG alpha(const LieAlgebra & alg, const PointTTsG & rho)
{
  alg.require(rho.B);
  return {rho.g, rho.X, rho.B - alg.coad(rho.X, rho.A), rho.A};
}

PointTTsG alpha_inv(const LieAlgebra & alg, const PointTsTG & w)
{
  alg.require(w.A);
  return {w.g, w.B, w.X, w.A + alg.coad(w.X, w.B)};
}

PointTsTsG beta(const LieAlgebra & alg, const PointTTsG & rho)
{
  alg.require(rho.B);
  return {rho.g, rho.A, -rho.B + alg.coad(rho.X, rho.A), rho.X};
}

PointTTsG beta_inv(const LieAlgebra & alg, const PointTsTsG & u)
{
  alg.require(u.B);
  return {u.g, u.A, u.X, -u.B + alg.coad(u.X, u.A)};
}

PointTsTG gamma(const LieAlgebra & alg, const PointTsTsG & u)
{
  alg.require(u.A);
  alg.require(u.B);
  alg.require(u.X);
  return {u.g, u.X, -u.B, u.A};
}

PointTsTsG gamma_inv(const LieAlgebra & alg, const PointTsTG & w)
{
  alg.require(w.X);
  alg.require(w.A);
  alg.require(w.B);
  return {w.g, w.B, -w.A, w.X};
}

double theta(const PointTTsG & rho) { return pair(rho.A, rho.X); }

double omega_at(const LieAlgebra & alg, const CotangentPoint & base, const CotangentFieldValue & phi,
                const CotangentFieldValue & psi)
{
  alg.require(base.A);
  alg.require(phi.B);
  alg.require(psi.B);
  return pair(phi.B, psi.X) - pair(psi.B, phi.X) - pair(base.A, alg.bracket(phi.X, psi.X));
}

double omega(const LieAlgebra & alg, const TrivializedField & phi, const TrivializedField & psi,
             const CotangentPoint & base)
{
  return omega_at(alg, base, phi.at(base), psi.at(base));
}

double tt_pairing(const PointTTsG & rho, const PointTTG & v)
{
  if (!same_base(rho.g, v.g) || !(rho.X == v.Y)) {
    throw ContractViolation("tt_pairing: points do not share the projection onto TG");
  }
  return pair(rho.A, v.Z) + pair(rho.B, v.X);
}

double tstg_pairing(const PointTsTG & w, const PointTTG & v)
{
  if (!same_base(w.g, v.g) || !(w.X == v.X)) {
    throw ContractViolation("tstg_pairing: points do not share the base point in TG");
  }
  return pair(w.A, v.Y) + pair(w.B, v.Z);
}

double tstst_pairing(const PointTsTsG & u, const PointTTsG & rho)
{
  if (!same_base(u.g, rho.g) || !(u.A == rho.A)) {
    throw ContractViolation("tstst_pairing: points do not share the base point in T*G");
  }
  return pair(u.B, rho.X) + pair(rho.B, u.X);
}

Eigen::MatrixXd field_derivative(const GroupSpec & spec, const GroupField & field, const GroupElement & g, double h)
{
  if (field.derivative) { return field.derivative(g); }
  const auto n      = spec.algebra().dim();
  Eigen::MatrixXd J(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto e  = AlgebraElement::Unit(n, i);
    const auto fp = field.value(spec.multiply(g, spec.exp(e, h)));
    const auto fm = field.value(spec.multiply(g, spec.exp(e, -h)));
    J.col(static_cast<Eigen::Index>(i)) = (fp.coords() - fm.coords()) / (2.0 * h);
  }
  return J;
}

AlgebraElement field_bracket(const GroupSpec & spec, const GroupField & xi, const GroupField & eta,
                             const GroupElement & g, double h)
{
  const auto & alg = spec.algebra();
  const auto X     = xi.value(g);
  const auto Y     = eta.value(g);
  alg.require(X);
  alg.require(Y);
  const Eigen::VectorXd DY_X = field_derivative(spec, eta, g, h) * X.coords();
  const Eigen::VectorXd DX_Y = field_derivative(spec, xi, g, h) * Y.coords();
  return AlgebraElement(Eigen::VectorXd(DY_X - DX_Y)) + alg.bracket(X, Y);
}

GroupField field_bracket_field(const GroupSpec & spec, GroupField xi, GroupField eta, double h)
{
  GroupField out;
  out.value = [&spec, xi = std::move(xi), eta = std::move(eta), h](const GroupElement & g) {
    return field_bracket(spec, xi, eta, g, h);
  };
  return out;
}

}  // namespace tulczyjew
