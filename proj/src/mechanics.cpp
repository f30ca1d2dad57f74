#include "tulczyjew/mechanics.hpp"

#include "tulczyjew/errors.hpp"

#include <cmath>
#include <memory>

namespace tulczyjew {

namespace {

struct QuadraticPart
{
  Eigen::MatrixXd M;
  Eigen::VectorXd b0;
  Eigen::LLT<Eigen::MatrixXd> llt;
};

// l must have grad(X) = M X + b0 with M symmetric positive definite.
QuadraticPart quadratic_part(const LieAlgebra & alg, const ReducedLagrangian & l)
{
  const auto n = alg.dim();
  const auto N = static_cast<Eigen::Index>(n);
  QuadraticPart q;
  q.b0 = l.grad(AlgebraElement::Zero(n)).coords();
  q.M.resize(N, N);
  for (std::size_t j = 0; j < n; ++j) {
    q.M.col(static_cast<Eigen::Index>(j)) = l.grad(AlgebraElement::Unit(n, j)).coords() - q.b0;
  }
  const double scale = std::max(1.0, q.M.cwiseAbs().maxCoeff());
  if ((q.M - q.M.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw NotHyperregular("Legendre map is not the gradient of a quadratic form");
  }
  Eigen::VectorXd probe(N);
  for (Eigen::Index i = 0; i < N; ++i) { probe(i) = 0.5 + 0.37 * static_cast<double>(i) - 0.11 * static_cast<double>(i * i); }
  const Eigen::VectorXd expected = q.M * probe + q.b0;
  const Eigen::VectorXd actual   = l.grad(AlgebraElement(probe)).coords();
  if ((expected - actual).cwiseAbs().maxCoeff() > 1e-9 * scale * std::max(1.0, probe.cwiseAbs().maxCoeff())) {
    throw NotHyperregular("Legendre map is not affine; only quadratic Lagrangians are supported");
  }
  q.llt.compute(q.M);
  if (q.llt.info() != Eigen::Success) { throw NotHyperregular("quadratic part of the Lagrangian is not positive definite"); }
  const Eigen::VectorXd d = Eigen::MatrixXd(q.llt.matrixL()).diagonal();
  if (d.minCoeff() <= 1e-12 * std::sqrt(scale)) { throw NotHyperregular("quadratic part of the Lagrangian is singular"); }
  return q;
}

Eigen::MatrixXd hessian_of(const ReducedLagrangian & l, const AlgebraElement & X)
{
  if (l.hessian) { return l.hessian(X); }
  const auto n = X.size();
  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd H(N, N);
  for (std::size_t j = 0; j < n; ++j) {
    const auto e = AlgebraElement::Unit(n, j);
    H.col(static_cast<Eigen::Index>(j)) =
        (l.grad(X + kGradientStep * e).coords() - l.grad(X - kGradientStep * e).coords()) / (2.0 * kGradientStep);
  }
  return H;
}

bool record_step(std::size_t k, const IntegratorOptions & opts) { return k % opts.stride == 0; }

}  // namespace

CoalgebraElement partial_X(const TrivializedLagrangian & L, const GroupElement & g, const AlgebraElement & X)
{
  if (L.grad_X) { return L.grad_X(g, X); }
  return CoalgebraElement(numeric_gradient([&](const Eigen::VectorXd & x) { return L.eval(g, AlgebraElement(x)); },
                                           X.coords()));
}

CoalgebraElement partial_g(const GroupSpec & spec, const TrivializedLagrangian & L, const GroupElement & g,
                           const AlgebraElement & X)
{
  if (L.grad_g) { return L.grad_g(g, X); }
  return spec.left_derivative([&](const GroupElement & h) { return L.eval(h, X); }, g);
}

AlgebraElement partial_A(const TrivializedHamiltonian & H, const GroupElement & g, const CoalgebraElement & A)
{
  if (H.grad_A) { return H.grad_A(g, A); }
  return AlgebraElement(numeric_gradient([&](const Eigen::VectorXd & a) { return H.eval(g, CoalgebraElement(a)); },
                                         A.coords()));
}

CoalgebraElement partial_g(const GroupSpec & spec, const TrivializedHamiltonian & H, const GroupElement & g,
                           const CoalgebraElement & A)
{
  if (H.grad_g) { return H.grad_g(g, A); }
  return spec.left_derivative([&](const GroupElement & h) { return H.eval(h, A); }, g);
}

Eigen::VectorXd numeric_gradient(const std::function<double(const Eigen::VectorXd &)> & f, const Eigen::VectorXd & x,
                                 double h)
{
  Eigen::VectorXd grad(x.size());
  Eigen::VectorXd probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe(i)        = x(i) + h;
    const double fp = f(probe);
    probe(i)        = x(i) - h;
    const double fm = f(probe);
    probe(i)        = x(i);
    grad(i)         = (fp - fm) / (2.0 * h);
  }
  return grad;
}

double gradient_residual(const ReducedLagrangian & l, const AlgebraElement & X, double h)
{
  const Eigen::VectorXd fd = numeric_gradient([&](const Eigen::VectorXd & x) { return l.eval(AlgebraElement(x)); },
                                              X.coords(), h);
  return (l.grad(X).coords() - fd).cwiseAbs().maxCoeff();
}

double gradient_residual(const ReducedHamiltonian & hm, const CoalgebraElement & A, double h)
{
  const Eigen::VectorXd fd = numeric_gradient([&](const Eigen::VectorXd & a) { return hm.eval(CoalgebraElement(a)); },
                                              A.coords(), h);
  return (hm.grad(A).coords() - fd).cwiseAbs().maxCoeff();
}

PointTTsG dynamics_point_lagrangian(const GroupSpec & spec, const TrivializedLagrangian & L, const GroupElement & g,
                                    const AlgebraElement & X)
{
  const PointTsTG dL{g, X, partial_g(spec, L, g, X), partial_X(L, g, X)};
  return alpha_inv(spec.algebra(), dL);
}

PointTTsG hamiltonian_field(const GroupSpec & spec, const TrivializedHamiltonian & H, const GroupElement & g,
                            const CoalgebraElement & A)
{
  const PointTsTsG dH{g, A, partial_g(spec, H, g, A), partial_A(H, g, A)};
  return beta_inv(spec.algebra(), dH);
}

ReducedPhasePair reduced_dynamics(const LieAlgebra & alg, const ReducedLagrangian & l, const AlgebraElement & X)
{
  return alpha_reduced(alg, {X, l.grad(X)});
}

ReducedPhasePair reduced_hamiltonian_field(const LieAlgebra & alg, const ReducedHamiltonian & hm,
                                           const CoalgebraElement & B)
{
  return beta_reduced(alg, {B, hm.grad(B)});
}

CoalgebraElement legendre(const ReducedLagrangian & l, const AlgebraElement & X) { return l.grad(X); }

std::function<AlgebraElement(const CoalgebraElement &)> inverse_legendre(const LieAlgebra & alg,
                                                                       const ReducedLagrangian & l)
{
  auto q = std::make_shared<QuadraticPart>(quadratic_part(alg, l));
  return [q, n = alg.dim()](const CoalgebraElement & B) {
    if (B.size() != n) { throw ContractViolation("inverse_legendre: covector has the wrong dimension"); }
    return AlgebraElement(Eigen::VectorXd(q->llt.solve(B.coords() - q->b0)));
  };
}

ReducedHamiltonian legendre_transform(const LieAlgebra & alg, const ReducedLagrangian & l)
{
  auto inv = inverse_legendre(alg, l);
  ReducedHamiltonian hm;
  hm.eval = [inv, l](const CoalgebraElement & B) {
    const auto X = inv(B);
    return pair(B, X) - l.eval(X);
  };
  hm.grad = inv;
  return hm;
}

void IntegratorOptions::validate() const
{
  if (!(dt > 0.0) || !std::isfinite(dt)) { throw ContractViolation("integrator: dt must be positive"); }
  if (steps < 1) { throw ContractViolation("integrator: steps must be at least 1"); }
  if (stride < 1) { throw ContractViolation("integrator: stride must be at least 1"); }
  if (reproject_every < 1) { throw ContractViolation("integrator: reproject_every must be at least 1"); }
}

double squared_norm_casimir(const CoalgebraElement & A) { return A.coords().squaredNorm(); }

ReducedFlow hamiltonian_flow(const LieAlgebra & alg, ReducedHamiltonian hm)
{
  ReducedFlow flow;
  flow.rhs      = [alg, hm](const CoalgebraElement & B) { return reduced_hamiltonian_field(alg, hm, B); };
  flow.velocity = hm.grad;
  flow.energy   = hm.eval;
  flow.casimir  = squared_norm_casimir;
  return flow;
}

Eigen::VectorXd rk4_step(const VectorField & f, const Eigen::VectorXd & y, double dt)
{
  const Eigen::VectorXd k1 = f(y);
  const Eigen::VectorXd k2 = f(y + 0.5 * dt * k1);
  const Eigen::VectorXd k3 = f(y + 0.5 * dt * k2);
  const Eigen::VectorXd k4 = f(y + dt * k3);
  return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Eigen::VectorXd midpoint_step(const VectorField & f, const Eigen::VectorXd & y, double dt)
{
  Eigen::VectorXd next = y + dt * f(y);
  for (int it = 0; it < 50; ++it) {
    const Eigen::VectorXd updated = y + dt * f(0.5 * (y + next));
    const double residual         = (updated - next).cwiseAbs().maxCoeff();
    next                          = updated;
    if (residual <= 1e-12) { return next; }
  }
  throw ConvergenceError("implicit midpoint: fixed-point iteration did not converge in 50 iterations");
}

AlgebraElement dexp_inv_left(const LieAlgebra & alg, const AlgebraElement & u, const AlgebraElement & v)
{
  const auto uv = alg.bracket(u, v);
  return v + 0.5 * uv + (1.0 / 12.0) * alg.bracket(u, uv);
}

TrajectoryRecord integrate_reduced(const ReducedFlow & flow, const CoalgebraElement & B0,
                                   const IntegratorOptions & opts)
{
  opts.validate();
  const VectorField f = [&](const Eigen::VectorXd & b) { return flow.rhs(CoalgebraElement(b)).B.coords(); };

  TrajectoryRecord rec;
  rec.rows.reserve(opts.steps / opts.stride + 1);
  auto push = [&](std::size_t k, const CoalgebraElement & B) {
    rec.rows.push_back({static_cast<double>(k) * opts.dt, std::nullopt, B, flow.velocity(B), flow.energy(B),
                        flow.casimir(B)});
  };

  Eigen::VectorXd b = B0.coords();
  push(0, B0);
  for (std::size_t k = 1; k <= opts.steps; ++k) {
    b = opts.method == Method::RK4 ? rk4_step(f, b, opts.dt) : midpoint_step(f, b, opts.dt);
    if (!b.allFinite()) { throw ConvergenceError("integrate_reduced: state became non-finite"); }
    if (record_step(k, opts)) { push(k, CoalgebraElement(b)); }
  }
  return rec;
}

TrajectoryRecord integrate_with_reconstruction(const GroupSpec & spec, const ReducedFlow & flow,
                                               const GroupElement & g0, const CoalgebraElement & B0,
                                               const IntegratorOptions & opts)
{
  opts.validate();
  spec.require(g0);
  const auto & alg    = spec.algebra();
  const double dt     = opts.dt;
  const VectorField f = [&](const Eigen::VectorXd & b) { return flow.rhs(CoalgebraElement(b)).B.coords(); };
  auto vel            = [&](const Eigen::VectorXd & b) { return flow.velocity(CoalgebraElement(b)); };

  TrajectoryRecord rec;
  rec.rows.reserve(opts.steps / opts.stride + 1);
  auto push = [&](std::size_t k, const GroupElement & g, const CoalgebraElement & B) {
    rec.rows.push_back({static_cast<double>(k) * dt, g.mat, B, flow.velocity(B), flow.energy(B), flow.casimir(B)});
  };

  GroupElement g    = g0;
  Eigen::VectorXd b = B0.coords();
  push(0, g, B0);
  for (std::size_t k = 1; k <= opts.steps; ++k) {
    AlgebraElement u;
    Eigen::VectorXd next;
    if (opts.method == Method::RK4) {
      const Eigen::VectorXd k1 = f(b);
      const Eigen::VectorXd b2 = b + 0.5 * dt * k1;
      const Eigen::VectorXd k2 = f(b2);
      const Eigen::VectorXd b3 = b + 0.5 * dt * k2;
      const Eigen::VectorXd k3 = f(b3);
      const Eigen::VectorXd b4 = b + dt * k3;
      next                     = b + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + f(b4));
      if (opts.reconstruction == Reconstruction::LieEuler) {
        u = dt * vel(b);
      } else {
        const auto K1 = vel(b);
        const auto K2 = dexp_inv_left(alg, 0.5 * dt * K1, vel(b2));
        const auto K3 = dexp_inv_left(alg, 0.5 * dt * K2, vel(b3));
        const auto K4 = dexp_inv_left(alg, dt * K3, vel(b4));
        u             = (dt / 6.0) * (K1 + 2.0 * K2 + 2.0 * K3 + K4);
      }
    } else {
      next = midpoint_step(f, b, dt);
      u    = opts.reconstruction == Reconstruction::LieEuler ? dt * vel(b) : dt * vel(0.5 * (b + next));
    }
    if (!next.allFinite()) { throw ConvergenceError("integrate_with_reconstruction: state became non-finite"); }
    g = spec.multiply(g, spec.exp(u));
    if (k % opts.reproject_every == 0) { g = spec.reproject(g); }
    b = std::move(next);
    if (record_step(k, opts)) { push(k, g, CoalgebraElement(b)); }
  }
  return rec;
}

TrajectoryRecord integrate_lagrangian(const LieAlgebra & alg, const ReducedLagrangian & l, const AlgebraElement & X0,
                                      const IntegratorOptions & opts)
{
  opts.validate();
  alg.require(X0);
  const VectorField f = [&](const Eigen::VectorXd & x) -> Eigen::VectorXd {
    const AlgebraElement X(x);
    const auto dyn = reduced_dynamics(alg, l, X);
    return hessian_of(l, X).llt().solve(dyn.B.coords());
  };

  TrajectoryRecord rec;
  rec.rows.reserve(opts.steps / opts.stride + 1);
  auto push = [&](std::size_t k, const AlgebraElement & X) {
    const auto A = l.grad(X);
    rec.rows.push_back({static_cast<double>(k) * opts.dt, std::nullopt, A, X, pair(A, X) - l.eval(X),
                        squared_norm_casimir(A)});
  };

  Eigen::VectorXd x = X0.coords();
  push(0, X0);
  for (std::size_t k = 1; k <= opts.steps; ++k) {
    x = opts.method == Method::RK4 ? rk4_step(f, x, opts.dt) : midpoint_step(f, x, opts.dt);
    if (!x.allFinite()) { throw ConvergenceError("integrate_lagrangian: state became non-finite"); }
    if (record_step(k, opts)) { push(k, AlgebraElement(x)); }
  }
  return rec;
}

}  // namespace tulczyjew
