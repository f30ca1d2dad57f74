#include "tulczyjew/verify.hpp"

#include "tulczyjew/bundle_maps.hpp"
#include "tulczyjew/lie_group.hpp"
#include "tulczyjew/mechanics.hpp"
#include "tulczyjew/reduction.hpp"
#include "tulczyjew/rigid_body.hpp"
#include "tulczyjew/trajectory_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace tulczyjew {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng & rng, double lo = -1.0, double hi = 1.0)
{
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Eigen::VectorXd random_vector(Rng & rng, std::size_t n)
{
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) { v(i) = uniform(rng); }
  return v;
}

AlgebraElement rand_alg(Rng & rng, std::size_t n) { return AlgebraElement(random_vector(rng, n)); }
CoalgebraElement rand_coalg(Rng & rng, std::size_t n) { return CoalgebraElement(random_vector(rng, n)); }

GroupElement random_rotation(const GroupSpec & spec, Rng & rng)
{
  return spec.exp(rand_alg(rng, 3), std::numbers::pi * uniform(rng, 0.0, 1.0));
}

// Structure constants of the same algebra in the basis f_i = sum_a P(a, i) e_a.
LieAlgebra in_basis(const LieAlgebra & alg, const Eigen::MatrixXd & P, const std::string & name)
{
  const auto n              = alg.dim();
  const Eigen::MatrixXd Pinv = P.inverse();
  std::vector<double> c(n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          const double w = P(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(i)) *
                           P(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(j));
          if (w == 0.0) { continue; }
          for (std::size_t m = 0; m < n; ++m) {
            const double cabm = alg.c(a, b, m);
            if (cabm == 0.0) { continue; }
            for (std::size_t k = 0; k < n; ++k) {
              c[(i * n + j) * n + k] += w * cabm * Pinv(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(m));
            }
          }
        }
      }
    }
  }
  return LieAlgebra(name, n, std::move(c));
}

LieAlgebra random_nilpotent5(Rng & rng)
{
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(5, 5);
  for (Eigen::Index i = 0; i < 5; ++i) {
    for (Eigen::Index j = 0; j < 5; ++j) { P(i, j) += 0.3 * uniform(rng); }
  }
  return in_basis(LieAlgebra::filiform(5), P, "nilpotent5");
}

struct Tracker
{
  PropertyResult r;
  Tracker(std::string name, double tol) { r.name = std::move(name), r.tolerance = tol; }
  void add(double residual)
  {
    ++r.samples;
    if (std::isnan(residual) || std::isnan(r.max_residual)) {
      r.max_residual = std::numeric_limits<double>::quiet_NaN();
    } else {
      r.max_residual = std::max(r.max_residual, residual);
    }
  }
};

double diff(const Eigen::VectorXd & a, const Eigen::VectorXd & b) { return (a - b).cwiseAbs().maxCoeff(); }

// Field whose coefficients are quadratic polynomials in the matrix entries,
// with its exact left-trivialized derivative.
GroupField polynomial_field(const GroupSpec & spec, Rng & rng)
{
  const auto n = spec.algebra().dim();
  const auto d = spec.matrix_size();
  struct Coeffs
  {
    double a;
    Eigen::MatrixXd P, Q, R;
  };
  std::vector<Coeffs> cs;
  for (std::size_t k = 0; k < n; ++k) {
    cs.push_back({uniform(rng), 0.5 * Eigen::MatrixXd::Random(d, d), 0.5 * Eigen::MatrixXd::Random(d, d),
                  0.5 * Eigen::MatrixXd::Random(d, d)});
    // Eigen::Random is not seeded by rng; overwrite deterministically.
    for (auto * M : {&cs.back().P, &cs.back().Q, &cs.back().R}) {
      for (Eigen::Index i = 0; i < d * d; ++i) { M->data()[i] = 0.5 * uniform(rng); }
    }
  }
  GroupField f;
  f.value = [cs](const GroupElement & g) {
    AlgebraElement X = AlgebraElement::Zero(cs.size());
    for (std::size_t k = 0; k < cs.size(); ++k) {
      X[k] = cs[k].a + (cs[k].P * g.mat).trace() + (cs[k].Q * g.mat).trace() * (cs[k].R * g.mat).trace();
    }
    return X;
  };
  f.derivative = [cs, gens = spec.generators()](const GroupElement & g) {
    const auto n = static_cast<Eigen::Index>(cs.size());
    Eigen::MatrixXd J(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::MatrixXd v = g.mat * gens[static_cast<std::size_t>(i)];
      for (Eigen::Index k = 0; k < n; ++k) {
        const auto & c = cs[static_cast<std::size_t>(k)];
        J(k, i)        = (c.P * v).trace() + (c.Q * v).trace() * (c.R * g.mat).trace() +
                  (c.Q * g.mat).trace() * (c.R * v).trace();
      }
    }
    return J;
  };
  return f;
}

void algebra_suite(const LieAlgebra & alg, Rng & rng, std::size_t samples, VerifyReport & rep)
{
  const auto n    = alg.dim();
  const auto s    = alg.validate();
  const auto & nm = alg.name();
  rep.results.push_back({"lie_core.antisymmetry[" + nm + "]", 1, s.antisymmetry_residual, 1e-12});
  rep.results.push_back({"lie_core.jacobi[" + nm + "]", 1, s.jacobi_residual, 1e-12});

  Tracker bil("lie_core.bilinearity[" + nm + "]", 1e-14);
  Tracker dual("lie_core.coad_duality[" + nm + "]", 1e-12);
  Tracker hom("lie_core.ad_homomorphism[" + nm + "]", 1e-12);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto X = rand_alg(rng, n), Y = rand_alg(rng, n), Z = rand_alg(rng, n);
    const auto A = rand_coalg(rng, n);
    const double a = uniform(rng), b = uniform(rng);
    bil.add(diff(alg.bracket(a * X + b * Y, Z).coords(), (a * alg.bracket(X, Z) + b * alg.bracket(Y, Z)).coords()));
    dual.add(std::abs(pair(alg.coad(X, A), Y) - pair(A, alg.bracket(X, Y))));
    const Eigen::MatrixXd lhs = alg.ad(alg.bracket(X, Y));
    const Eigen::MatrixXd rhs = alg.ad(X) * alg.ad(Y) - alg.ad(Y) * alg.ad(X);
    hom.add((lhs - rhs).cwiseAbs().maxCoeff());
  }
  rep.results.push_back(bil.r);
  rep.results.push_back(dual.r);
  rep.results.push_back(hom.r);
}

void group_suite(const GroupSpec & spec, Rng & rng, std::size_t samples, VerifyReport & rep)
{
  rep.results.push_back({"lie_group.generator_commutators", 1, spec.commutator_residual(), 1e-12});
  Tracker member("lie_group.membership", 1e-9);
  Tracker round("lie_group.trivialize_roundtrip", 1e-12);
  Tracker series("lie_group.exp_vs_series", 1e-12);
  Tracker adfd("lie_group.Ad_derivative", 1e-5);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto g = random_rotation(spec, rng), h = random_rotation(spec, rng);
    const auto X = rand_alg(rng, 3), Y = rand_alg(rng, 3);
    for (const auto & k : {spec.multiply(g, h), spec.inverse(g), spec.exp(X, uniform(rng, -4.0, 4.0))}) {
      const double orth = (k.mat.transpose() * k.mat - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff();
      member.add(k.mat.determinant() > 0.0 ? orth : std::numeric_limits<double>::infinity());
    }
    const auto [g2, X2] = spec.trivialize_tangent(g, spec.untrivialize_tangent(g, X));
    round.add(diff(X2.coords(), X.coords()));

    // 20-term series at half the argument, squared once; |tX| <= pi.
    const double t        = std::numbers::pi * uniform(rng, 0.0, 1.0) / X.coords().norm();
    const Eigen::MatrixXd K = 0.5 * t * spec.hat(X);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(3, 3), sum = term;
    for (int k = 1; k < 20; ++k) {
      term = term * K / k;
      sum += term;
    }
    series.add((spec.exp(X, t).mat - sum * sum).cwiseAbs().maxCoeff());

    const double eps = 1e-6;
    const Eigen::VectorXd fd = (spec.Ad(spec.exp(X, eps), Y).coords() - Y.coords()) / eps;
    adfd.add(diff(fd, spec.algebra().ad(X) * Y.coords()));
  }
  rep.results.push_back(member.r);
  rep.results.push_back(round.r);
  rep.results.push_back(series.r);
  rep.results.push_back(adfd.r);
}

void maps_suite(const LieAlgebra & alg, const GroupElement & base, Rng & rng, std::size_t samples, VerifyReport & rep)
{
  const auto n    = alg.dim();
  const auto & nm = alg.name();
  Tracker invol("tulczyjew.kappa_involution[" + nm + "]", 1e-14);
  Tracker alpha_rt("tulczyjew.alpha_roundtrip[" + nm + "]", 1e-12);
  Tracker duality("tulczyjew.duality[" + nm + "]", 1e-12);
  Tracker factor("tulczyjew.beta_factorization[" + nm + "]", 1e-14);
  Tracker musical("tulczyjew.beta_musical[" + nm + "]", 1e-12);
  Tracker proj("tulczyjew.alpha_projection[" + nm + "]", 0.0);
  for (std::size_t i = 0; i < samples; ++i) {
    const PointTTG v{base, rand_alg(rng, n), rand_alg(rng, n), rand_alg(rng, n)};
    const auto kk = kappa(alg, kappa(alg, v));
    invol.add(std::max({diff(kk.X.coords(), v.X.coords()), diff(kk.Y.coords(), v.Y.coords()),
                        diff(kk.Z.coords(), v.Z.coords())}));

    const PointTTsG rho{base, rand_coalg(rng, n), v.X, rand_coalg(rng, n)};
    const auto back = alpha_inv(alg, alpha(alg, rho));
    alpha_rt.add(std::max({diff(back.A.coords(), rho.A.coords()), diff(back.B.coords(), rho.B.coords()),
                           diff(back.X.coords(), rho.X.coords())}));

    // v lies over (g, rho.X); kappa(v) then shares rho's middle slot.
    duality.add(std::abs(tstg_pairing(alpha(alg, rho), v) - tt_pairing(rho, kappa(alg, v))));

    const auto b  = beta(alg, rho);
    const auto gb = gamma_inv(alg, alpha(alg, rho));
    factor.add(std::max({diff(b.A.coords(), gb.A.coords()), diff(b.B.coords(), gb.B.coords()),
                         diff(b.X.coords(), gb.X.coords())}));

    const PointTTsG psi{base, rho.A, rand_alg(rng, n), rand_coalg(rng, n)};
    const double lhs = tstst_pairing(b, psi);
    const double rhs = omega_at(alg, {base, rho.A}, {psi.X, psi.B}, {rho.X, rho.B});
    musical.add(std::abs(lhs - rhs));

    const auto a = alpha(alg, rho);
    proj.add(a.X == rho.X && a.g.mat == rho.g.mat ? 0.0 : 1.0);
  }
  for (auto * t : {&invol, &alpha_rt, &duality, &factor, &musical, &proj}) { rep.results.push_back(t->r); }
}

void field_suite(const GroupSpec & spec, Rng & rng, std::size_t samples, VerifyReport & rep)
{
  Tracker anti("tulczyjew.field_bracket_antisymmetry", 1e-8);
  Tracker jac("tulczyjew.field_bracket_jacobi", 1e-8);
  const std::size_t count = std::max<std::size_t>(1, samples / 10);
  for (std::size_t i = 0; i < count; ++i) {
    const auto xi = polynomial_field(spec, rng), eta = polynomial_field(spec, rng), zeta = polynomial_field(spec, rng);
    const auto g  = random_rotation(spec, rng);
    anti.add(diff(field_bracket(spec, xi, eta, g).coords(), -field_bracket(spec, eta, xi, g).coords()));
    const auto xe = field_bracket_field(spec, xi, eta);
    const auto ez = field_bracket_field(spec, eta, zeta);
    const auto zx = field_bracket_field(spec, zeta, xi);
    const auto J  = field_bracket(spec, xe, zeta, g) + field_bracket(spec, ez, xi, g) + field_bracket(spec, zx, eta, g);
    jac.add(J.norm_inf());
  }
  rep.results.push_back(anti.r);
  rep.results.push_back(jac.r);
}

void reduction_suite(const LieAlgebra & alg, const GroupElement & base, Rng & rng, std::size_t samples,
                     VerifyReport & rep)
{
  const auto n = alg.dim();
  Tracker asq("reduction.alpha_square", 1e-12);
  Tracker bsq("reduction.beta_square", 1e-12);
  Tracker lin("reduction.alpha_reduced_linearity", 1e-14);
  Tracker anti("reduction.poisson_antisymmetry", 1e-12);
  Tracker jac("reduction.poisson_jacobi", 1e-12);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto X = rand_alg(rng, n);
    const auto A = rand_coalg(rng, n);
    const PointTTsG rho{base, A, X, alg.coad(X, A)};

    const auto a      = alpha(alg, rho);
    const auto km     = project_K(a);
    const auto down   = project_TTsG(rho);
    const auto viaRed = alpha_reduced(alg, km);
    asq.add(std::max({a.A.norm_inf(), diff(km.X.coords(), X.coords()), diff(km.A.coords(), A.coords()),
                      diff(viaRed.A.coords(), down.A.coords()), diff(viaRed.B.coords(), down.B.coords())}));

    const auto b       = beta(alg, rho);
    const auto cm      = project_C(b);
    const auto viaRedB = beta_reduced(alg, cm);
    bsq.add(std::max({b.B.norm_inf(), diff(cm.X.coords(), X.coords()), diff(cm.A.coords(), A.coords()),
                      diff(viaRedB.A.coords(), down.A.coords()), diff(viaRedB.B.coords(), down.B.coords())}));

    const auto A2   = rand_coalg(rng, n);
    const double s  = uniform(rng);
    const auto lhs  = alpha_reduced(alg, {X, A + s * A2}).B;
    const auto rhs  = alpha_reduced(alg, {X, A}).B + s * alpha_reduced(alg, {X, A2}).B;
    lin.add(diff(lhs.coords(), rhs.coords()));

    const auto i1 = static_cast<std::size_t>(rng() % n), i2 = static_cast<std::size_t>(rng() % n),
               i3 = static_cast<std::size_t>(rng() % n);
    const auto e1 = AlgebraElement::Unit(n, i1), e2 = AlgebraElement::Unit(n, i2), e3 = AlgebraElement::Unit(n, i3);
    anti.add(std::abs(linear_poisson_bracket(alg, A, e1, e2) + linear_poisson_bracket(alg, A, e2, e1)));
    // {f_X, f_Y} = f_[X,Y], so the Jacobi sum is linear in A.
    const double j = linear_poisson_bracket(alg, A, alg.bracket(e1, e2), e3) +
                     linear_poisson_bracket(alg, A, alg.bracket(e2, e3), e1) +
                     linear_poisson_bracket(alg, A, alg.bracket(e3, e1), e2);
    jac.add(std::abs(j));
  }
  for (auto * t : {&asq, &bsq, &lin, &anti, &jac}) { rep.results.push_back(t->r); }
}

InertiaForm random_inertia(Rng & rng)
{
  const Eigen::Vector3d d(uniform(rng, 1.0, 3.0), uniform(rng, 1.0, 3.0), uniform(rng, 1.0, 3.0));
  const auto spec = GroupSpec::so3();
  const auto R    = random_rotation(spec, rng).mat;
  Eigen::MatrixXd M = R * d.asDiagonal() * R.transpose();
  return InertiaForm(Eigen::MatrixXd(0.5 * (M + M.transpose())));
}

void mechanics_suite(const GroupSpec & spec, Rng & rng, std::size_t samples, VerifyReport & rep)
{
  const auto & alg = spec.algebra();
  Tracker grad("mechanics.gradient_checks", 1e-5);
  Tracker consist("mechanics.lagrangian_reduction_consistency", 0.0);
  Tracker equiv("mechanics.lagrangian_hamiltonian_equivalence", 1e-8);
  Tracker casimir("mechanics.casimir_conservation", 1e-8);
  Tracker energy("mechanics.energy_conservation", 1e-8);
  Tracker spatial("mechanics.spatial_momentum_conservation", 1e-6);
  Tracker lie_poisson("rigid_body.lie_poisson_residual", 1e-9);
  Tracker euler("rigid_body.euler_equivalence", 1e-8);
  Tracker tensor("rigid_body.inertia_generator_vs_classical", 1e-12);

  for (std::size_t i = 0; i < samples; ++i) {
    const auto I  = random_inertia(rng);
    const auto l  = rigid_body_lagrangian(I);
    const auto h  = rigid_body_hamiltonian(I);
    const auto hl = legendre_transform(alg, l);
    const auto X  = rand_alg(rng, 3);
    const auto A  = rand_coalg(rng, 3);
    grad.add(std::max({gradient_residual(l, X), gradient_residual(h, A), gradient_residual(hl, A)}));

    TrivializedLagrangian L;
    L.eval         = [&l](const GroupElement &, const AlgebraElement & Y) { return l.eval(Y); };
    L.grad_X       = [&l](const GroupElement &, const AlgebraElement & Y) { return l.grad(Y); };
    const auto g1  = random_rotation(spec, rng), g2 = random_rotation(spec, rng);
    const auto p1  = dynamics_point_lagrangian(spec, L, g1, X);
    const auto p2  = dynamics_point_lagrangian(spec, L, g2, X);
    const auto red = reduced_dynamics(alg, l, X);
    consist.add(std::max({diff(p1.A.coords(), red.A.coords()), diff(p1.B.coords(), red.B.coords()),
                          diff(p1.A.coords(), p2.A.coords()), diff(p1.B.coords(), p2.B.coords())}));

    BodySpec body;
    const int npts = 3 + static_cast<int>(rng() % 20);
    for (int k = 0; k < npts; ++k) {
      body.points.push_back({uniform(rng, 0.1, 2.0), Eigen::Vector3d(random_vector(rng, 3))});
    }
    tensor.add((inertia_generator_form(body) - inertia_classical(body)).cwiseAbs().maxCoeff());
  }

  // Trajectory-level properties: the reference body plus a few random ones.
  const std::size_t runs = std::clamp<std::size_t>(samples / 50, 1, 3);
  IntegratorOptions opts;
  opts.dt    = 1e-3;
  opts.steps = 10000;
  for (std::size_t r = 0; r < runs; ++r) {
    const InertiaForm I = r == 0 ? InertiaForm(Eigen::Vector3d(1.0, 2.0, 3.0).asDiagonal().toDenseMatrix()) : random_inertia(rng);
    const AlgebraElement X0 = r == 0 ? AlgebraElement{1.0, 1.0, 1.0} : rand_alg(rng, 3);
    const auto l  = rigid_body_lagrangian(I);
    const auto h  = legendre_transform(alg, l);
    const auto A0 = legendre(l, X0);

    const auto lag = integrate_lagrangian(alg, l, X0, opts);
    const auto ham = integrate_reduced(hamiltonian_flow(alg, h), A0, opts);
    const auto rec = integrate_with_reconstruction(spec, hamiltonian_flow(alg, rigid_body_hamiltonian(I)),
                                                   spec.identity(), A0, opts);

    AlgebraElement x = X0;
    double e_max = 0.0, c_max = 0.0, m_max = 0.0, eq_max = 0.0, eu_max = 0.0, dyn_max = 0.0;
    const auto m0 = spec.coAd_inverse(spec.identity(), A0);
    for (std::size_t k = 0; k < ham.rows.size(); ++k) {
      const auto & row = ham.rows[k];
      e_max  = std::max(e_max, std::abs(row.energy - ham.rows[0].energy) / std::abs(ham.rows[0].energy));
      c_max  = std::max(c_max, std::abs(row.casimir - ham.rows[0].casimir) / std::abs(ham.rows[0].casimir));
      eq_max = std::max(eq_max, diff(lag.rows[k].X.coords(), row.X.coords()));
      eu_max = std::max(eu_max, diff(x.coords(), I.iso_inv(row.A).coords()));
      const auto & rr = rec.rows[k];
      m_max  = std::max(m_max, diff(spec.coAd_inverse(spec.element(*rr.g), rr.A).coords(), m0.coords()));
      if (k >= 2 && k + 2 < ham.rows.size()) {
        const Eigen::VectorXd d = (-ham.rows[k + 2].A.coords() + 8.0 * ham.rows[k + 1].A.coords() -
                                   8.0 * ham.rows[k - 1].A.coords() + ham.rows[k - 2].A.coords()) / (12.0 * opts.dt);
        dyn_max = std::max(dyn_max, diff(d, alg.coad(I.iso_inv(row.A), row.A).coords()));
      }
      x = AlgebraElement(rk4_step([&](const Eigen::VectorXd & y) { return euler_rhs(alg, I, AlgebraElement(y)).coords(); },
                                  x.coords(), opts.dt));
    }
    energy.add(e_max);
    casimir.add(c_max);
    equiv.add(eq_max);
    euler.add(eu_max);
    spatial.add(m_max);
    lie_poisson.add(dyn_max);
  }
  for (auto * t : {&grad, &consist, &equiv, &casimir, &energy, &spatial, &lie_poisson, &euler, &tensor}) {
    rep.results.push_back(t->r);
  }
}

void io_suite(const GroupSpec & spec, VerifyReport & rep)
{
  IntegratorOptions opts;
  opts.dt    = 1e-2;
  opts.steps = 200;
  opts.stride = 7;
  const InertiaForm I(Eigen::Vector3d(1.0, 2.0, 3.0).asDiagonal().toDenseMatrix());
  const auto rec = integrate_with_reconstruction(spec, hamiltonian_flow(spec.algebra(), rigid_body_hamiltonian(I)),
                                                 spec.exp(AlgebraElement{0.3, -0.2, 0.9}), CoalgebraElement{1.0, 2.0, 3.0},
                                                 opts);
  auto compare = [&](const TrajectoryRecord & back) {
    if (back.rows.size() != rec.rows.size()) { return 1.0; }
    double worst = 0.0;
    for (std::size_t k = 0; k < rec.rows.size(); ++k) {
      const auto & a = rec.rows[k];
      const auto & b = back.rows[k];
      const bool same = a.t == b.t && a.energy == b.energy && a.casimir == b.casimir && a.A == b.A && a.X == b.X &&
                        b.g && *a.g == *b.g;
      worst = std::max(worst, same ? 0.0 : 1.0);
    }
    return worst;
  };
  std::stringstream csv;
  write_csv(csv, rec);
  rep.results.push_back({"cli_io.csv_roundtrip", rec.rows.size(), compare(read_csv(csv)), 0.0});
  std::stringstream jl;
  write_json_lines(jl, rec);
  rep.results.push_back({"cli_io.json_lines_roundtrip", rec.rows.size(), compare(read_json_lines(jl)), 0.0});
}

}  // namespace

bool VerifyReport::ok() const
{
  return std::all_of(results.begin(), results.end(), [](const PropertyResult & r) { return r.pass(); });
}

const PropertyResult * VerifyReport::find(const std::string & name) const
{
  for (const auto & r : results) {
    if (r.name == name) { return &r; }
  }
  return nullptr;
}

void VerifyReport::print(std::ostream & out) const
{
  std::size_t failed = 0;
  for (const auto & r : results) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-52s samples=%-6zu max_residual=%.3e tol=%.1e\n", r.pass() ? "PASS" : "FAIL",
                  r.name.c_str(), r.samples, r.max_residual, r.tolerance);
    out << line;
    failed += r.pass() ? 0 : 1;
  }
  out << (failed ? "verification FAILED: " + std::to_string(failed) + " of " : "verification passed: all ")
      << results.size() << " properties\n";
}

VerifyReport run_verification(const VerifyOptions & opts)
{
  Rng rng(opts.seed);
  VerifyReport rep;
  const auto spec    = GroupSpec::so3();
  const auto samples = std::max<std::size_t>(1, opts.samples);

  const auto nil5 = random_nilpotent5(rng);
  algebra_suite(spec.algebra(), rng, samples, rep);
  algebra_suite(nil5, rng, samples, rep);
  if (opts.extra_algebra) { algebra_suite(*opts.extra_algebra, rng, samples, rep); }

  group_suite(spec, rng, samples, rep);

  maps_suite(spec.algebra(), random_rotation(spec, rng), rng, samples, rep);
  maps_suite(nil5, GroupElement{Eigen::MatrixXd::Identity(6, 6), "nilpotent5"}, rng, samples, rep);
  field_suite(spec, rng, samples, rep);

  reduction_suite(spec.algebra(), random_rotation(spec, rng), rng, samples, rep);
  mechanics_suite(spec, rng, samples, rep);
  io_suite(spec, rep);
  return rep;
}

}  // namespace tulczyjew
