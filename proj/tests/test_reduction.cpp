#include "oracles.hpp"

#include "tulczyjew/bundle_maps.hpp"
#include "tulczyjew/reduction.hpp"

#include <doctest.h>

using namespace tulczyjew;

namespace {

const AlgebraElement e1{1.0, 0.0, 0.0}, e2{0.0, 1.0, 0.0}, e3{0.0, 0.0, 1.0};
const CoalgebraElement eps1{1.0, 0.0, 0.0}, eps3{0.0, 0.0, 1.0};

double diff(const Eigen::VectorXd & a, const Eigen::VectorXd & b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("projections extract slots and ignore g")
{
  std::mt19937_64 rng(41);
  const auto g1 = oracle::random_so3(rng), g2 = oracle::random_so3(rng);
  const AlgebraElement X{1.0, 2.0, 3.0}, Y{4.0, 5.0, 6.0}, Z{7.0, 8.0, 9.0};
  const auto p1 = project_TTG({g1, X, Y, Z});
  const auto p2 = project_TTG({g2, X, Y, Z});
  CHECK(p1.X == X);
  CHECK(p1.Y == Z);
  CHECK(p2.X == p1.X);
  CHECK(p2.Y == p1.Y);

  const CoalgebraElement A{0.1, 0.2, 0.3}, B{-1.0, -2.0, -3.0};
  const auto q = project_TTsG({g1, A, X, B});
  CHECK(q.A == A);
  CHECK(q.B == B);
}

TEST_CASE("constraint sets")
{
  const auto so3 = LieAlgebra::so3();
  const auto g   = GroupSpec::so3().identity();
  const CoalgebraElement A{1.0, -2.0, 0.5};
  const AlgebraElement X{0.3, 0.4, -0.2};
  CHECK(in_K({g, X, CoalgebraElement::Zero(3), A}));
  CHECK_FALSE(in_K({g, X, eps1, A}, 1e-9));
  CHECK(in_K(alpha(so3, {g, A, X, so3.coad(X, A)})));

  CHECK(in_C({g, A, CoalgebraElement::Zero(3), X}));
  CHECK_FALSE(in_C({g, A, eps1, X}, 1e-9));
  CHECK(in_C(beta(so3, {g, A, X, so3.coad(X, A)})));

  const auto k = project_K({g, X, CoalgebraElement::Zero(3), A});
  CHECK(k.X == X);
  CHECK(k.A == A);
  const auto c = project_C({g, A, CoalgebraElement::Zero(3), X});
  CHECK(c.A == A);
  CHECK(c.X == X);
}

TEST_CASE("reduced kappa relation")
{
  const auto so3 = LieAlgebra::so3();
  const auto ab  = LieAlgebra::abelian(3);
  const AlgebraElement Y{0.2, 0.1, 0.7};
  CHECK(kappa_reduced_related(ab, {e1, Y}, {e2, Y}));
  CHECK_FALSE(kappa_reduced_related(ab, {e1, Y}, {e2, Y + e1}));
  CHECK(kappa_reduced_related(so3, {Y, e3}, {Y, e3}));
  CHECK(kappa_reduced_related(so3, {e1, AlgebraElement::Zero(3)}, {e2, -e3}));
  CHECK_FALSE(kappa_reduced_related(so3, {e1, AlgebraElement::Zero(3)}, {e2, e3}));

  // kappa itself produces related pairs.
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    const PointTTG v{GroupSpec::so3().identity(), oracle::rand_alg(rng, 3), oracle::rand_alg(rng, 3),
                     oracle::rand_alg(rng, 3)};
    CHECK(kappa_reduced_related(so3, project_TTG(v), project_TTG(kappa(so3, v))));
  }
}

TEST_CASE("alpha_reduced and beta_reduced examples")
{
  const auto so3 = LieAlgebra::so3();
  const auto ab  = LieAlgebra::abelian(3);
  const AlgebraElement X{0.3, 0.4, -0.2};
  const CoalgebraElement A{1.0, -2.0, 0.5};

  const auto z = alpha_reduced(so3, {X, CoalgebraElement::Zero(3)});
  CHECK(z.A.norm_inf() == 0.0);
  CHECK(z.B.norm_inf() == 0.0);
  const auto a = alpha_reduced(ab, {X, A});
  CHECK(a.A == A);
  CHECK(a.B.norm_inf() == 0.0);
  const auto s = alpha_reduced(so3, {e2, eps1});
  CHECK(s.A == eps1);
  CHECK(s.B == eps3);

  const auto zb = beta_reduced(so3, {CoalgebraElement::Zero(3), X});
  CHECK(zb.B.norm_inf() == 0.0);
  const auto b = beta_reduced(ab, {A, X});
  CHECK(b.A == A);
  CHECK(b.B.norm_inf() == 0.0);
  const auto sb = beta_reduced(so3, {eps1, e2});
  CHECK(sb.A == eps1);
  CHECK(sb.B == eps3);
}

TEST_CASE("compatibility squares on the constraint sets")
{
  std::mt19937_64 rng(43);
  const auto nil = oracle::random_nilpotent5(rng);
  for (const auto & alg : {LieAlgebra::so3(), nil}) {
    const auto n = alg.dim();
    const GroupElement g{Eigen::MatrixXd::Identity(4, 4), alg.name()};
    for (int i = 0; i < 200; ++i) {
      const auto X = oracle::rand_alg(rng, n);
      const auto A = oracle::rand_coalg(rng, n);
      const PointTTsG rho{g, A, X, alg.coad(X, A)};
      const auto down = project_TTsG(rho);

      const auto w = alpha(alg, rho);
      CHECK(in_K(w, 1e-12));
      const auto k  = project_K(w);
      const auto ra = alpha_reduced(alg, k);
      CHECK(diff(k.X.coords(), X.coords()) <= 1e-12);
      CHECK(diff(k.A.coords(), A.coords()) <= 1e-12);
      CHECK(diff(ra.A.coords(), down.A.coords()) <= 1e-12);
      CHECK(diff(ra.B.coords(), down.B.coords()) <= 1e-12);

      const auto u = beta(alg, rho);
      CHECK(in_C(u, 1e-12));
      const auto c  = project_C(u);
      const auto rb = beta_reduced(alg, c);
      CHECK(diff(c.X.coords(), X.coords()) <= 1e-12);
      CHECK(diff(rb.A.coords(), down.A.coords()) <= 1e-12);
      CHECK(diff(rb.B.coords(), down.B.coords()) <= 1e-12);

      const auto A2  = oracle::rand_coalg(rng, n);
      const double s = oracle::uniform(rng);
      const auto lhs = alpha_reduced(alg, {X, A + s * A2}).B;
      const auto rhs = alpha_reduced(alg, {X, A}).B + s * alpha_reduced(alg, {X, A2}).B;
      CHECK(diff(lhs.coords(), rhs.coords()) <= 1e-14);
    }
  }
}

TEST_CASE("linear Poisson bracket")
{
  const auto so3 = LieAlgebra::so3();
  const CoalgebraElement A{1.0, 2.0, 3.0};
  CHECK(linear_poisson_bracket(so3, A, e1, e2) == 3.0);
  std::mt19937_64 rng(44);
  const auto nil = oracle::random_nilpotent5(rng);
  for (const auto & alg : {so3, nil}) {
    const auto n = alg.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const auto a = oracle::rand_coalg(rng, n);
          const auto x = AlgebraElement::Unit(n, i), y = AlgebraElement::Unit(n, j), z = AlgebraElement::Unit(n, k);
          CHECK(std::abs(linear_poisson_bracket(alg, a, x, y) + linear_poisson_bracket(alg, a, y, x)) <= 1e-12);
          const double jac = linear_poisson_bracket(alg, a, alg.bracket(x, y), z) +
                             linear_poisson_bracket(alg, a, alg.bracket(y, z), x) +
                             linear_poisson_bracket(alg, a, alg.bracket(z, x), y);
          CHECK(std::abs(jac) <= 1e-12);
        }
      }
    }
  }
}
