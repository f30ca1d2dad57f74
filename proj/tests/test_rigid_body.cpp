#include "oracles.hpp"

#include "tulczyjew/errors.hpp"
#include "tulczyjew/rigid_body.hpp"

#include <doctest.h>

using namespace tulczyjew;

namespace {

double mdiff(const Eigen::MatrixXd & a, const Eigen::MatrixXd & b) { return (a - b).cwiseAbs().maxCoeff(); }

InertiaForm diag(double a, double b, double c) { return InertiaForm(Eigen::Vector3d(a, b, c).asDiagonal().toDenseMatrix()); }

BodySpec random_cloud(std::mt19937_64 & rng)
{
  BodySpec body;
  const int n = 3 + static_cast<int>(rng() % 30);
  for (int i = 0; i < n; ++i) {
    body.points.push_back({oracle::uniform(rng, 0.1, 3.0), Eigen::Vector3d(oracle::random_vector(rng, 3, 2.0))});
  }
  return body;
}

}  // namespace

TEST_CASE("inertia from bodies")
{
  BodySpec single;
  single.points.push_back({1.0, Eigen::Vector3d(1.0, 0.0, 0.0)});
  CHECK(mdiff(inertia_generator_form(single), Eigen::Vector3d(0.0, 1.0, 1.0).asDiagonal().toDenseMatrix()) == 0.0);
  CHECK(inertia_rank(inertia_generator_form(single)) == 2);
  CHECK_THROWS_AS(inertia_from_body(single), DegenerateBody);

  const auto cube = inertia_from_body(BodySpec::cube(1.0, 1.0));
  CHECK(mdiff(cube.matrix(), Eigen::Matrix3d::Identity() / 6.0) <= 1e-6);
  CHECK(mdiff(inertia_iso_inv(cube, CoalgebraElement{1.0, 2.0, 3.0}).coords(), Eigen::Vector3d(6.0, 12.0, 18.0)) <= 1e-9);

  // m a^2 / 6 for other sides and masses; box and sphere closed forms.
  CHECK(mdiff(inertia_from_body(BodySpec::cube(2.0, 3.0)).matrix(), Eigen::Matrix3d::Identity() * 2.0) <= 1e-12);
  const Eigen::Vector3d e(1.0, 2.0, 3.0);
  const Eigen::Vector3d box_diag(2.0 * (4.0 + 9.0) / 12.0, 2.0 * (1.0 + 9.0) / 12.0, 2.0 * (1.0 + 4.0) / 12.0);
  CHECK(mdiff(inertia_from_body(BodySpec::box(e, 2.0)).matrix(), box_diag.asDiagonal().toDenseMatrix()) <= 1e-12);
  CHECK(mdiff(inertia_from_body(BodySpec::sphere(1.5, 2.0, 6)).matrix(), Eigen::Matrix3d::Identity() * 0.4 * 2.0 * 2.25) <=
        1e-12);

  // Doubling all masses doubles M exactly.
  std::mt19937_64 rng(61);
  auto body   = random_cloud(rng);
  auto double_ = body;
  for (auto & p : double_.points) { p.mass *= 2.0; }
  CHECK(inertia_generator_form(double_) == 2.0 * inertia_generator_form(body));

  BodySpec empty;
  CHECK_THROWS_AS(inertia_generator_form(empty), ContractViolation);
  BodySpec negative;
  negative.points.push_back({-1.0, Eigen::Vector3d(1.0, 2.0, 3.0)});
  CHECK_THROWS_AS(inertia_from_body(negative), ContractViolation);
}

TEST_CASE("generator form equals the classical tensor")
{
  std::mt19937_64 rng(62);
  for (int i = 0; i < 100; ++i) {
    const auto body = random_cloud(rng);
    CHECK(mdiff(inertia_generator_form(body), inertia_classical(body)) <= 1e-12);
  }
}

TEST_CASE("inertia form validation and isomorphism")
{
  Eigen::Matrix3d asym = Eigen::Matrix3d::Identity();
  asym(0, 1)           = 1e-9;
  CHECK_THROWS_AS(InertiaForm{asym}, SingularForm);
  CHECK_THROWS_AS(InertiaForm(Eigen::Vector3d(1.0, 0.0, 1.0).asDiagonal().toDenseMatrix()), SingularForm);
  CHECK_THROWS_AS(InertiaForm(Eigen::Vector3d(1.0, -1.0, 1.0).asDiagonal().toDenseMatrix()), SingularForm);

  const auto I = diag(1.0, 2.0, 3.0);
  CHECK(inertia_iso(I, AlgebraElement::Zero(3)).norm_inf() == 0.0);
  CHECK(inertia_iso(I, AlgebraElement{1.0, 1.0, 1.0}) == CoalgebraElement{1.0, 2.0, 3.0});
  CHECK(mdiff(inertia_iso_inv(I, CoalgebraElement{1.0, 2.0, 3.0}).coords(), Eigen::Vector3d(1.0, 1.0, 1.0)) <= 1e-15);
  std::mt19937_64 rng(63);
  const Eigen::Matrix3d R = oracle::random_rotation(rng);
  const InertiaForm J(Eigen::MatrixXd(R * Eigen::Vector3d(1.0, 2.0, 5.0).asDiagonal() * R.transpose()));
  for (int i = 0; i < 100; ++i) {
    const auto X = oracle::rand_alg(rng, 3), Y = oracle::rand_alg(rng, 3);
    CHECK(std::abs(pair(J.iso(X), Y) - pair(J.iso(Y), X)) <= 1e-14);
    CHECK(mdiff(J.iso_inv(J.iso(X)).coords(), X.coords()) <= 1e-12);
  }
}

TEST_CASE("lagrangian and hamiltonian examples")
{
  const auto I = diag(1.0, 2.0, 3.0);
  const auto l = rigid_body_lagrangian(I);
  const auto h = rigid_body_hamiltonian(I);
  CHECK(l.eval(AlgebraElement::Zero(3)) == 0.0);
  CHECK(l.eval(AlgebraElement{1.0, 1.0, 1.0}) == 3.0);
  CHECK(h.eval(CoalgebraElement::Zero(3)) == 0.0);
  CHECK(std::abs(h.eval(CoalgebraElement{1.0, 2.0, 3.0}) - 3.0) <= 1e-15);
  CHECK(gradient_residual(l, AlgebraElement{0.3, -0.2, 0.9}) <= 1e-6);
  CHECK(mdiff(l.hessian(AlgebraElement{0.3, -0.2, 0.9}), I.matrix()) == 0.0);
}

TEST_CASE("euler_rhs examples")
{
  const auto so3 = LieAlgebra::so3();
  CHECK(euler_rhs(so3, diag(2.0, 2.0, 2.0), AlgebraElement{0.3, -0.2, 0.9}).norm_inf() <= 1e-16);
  const auto r = euler_rhs(so3, diag(1.0, 2.0, 3.0), AlgebraElement{1.0, 1.0, 1.0});
  CHECK(mdiff(r.coords(), Eigen::Vector3d(-1.0, 1.0, -1.0 / 3.0)) <= 1e-15);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(euler_rhs(so3, diag(1.0, 2.0, 3.0), 1.7 * AlgebraElement::Unit(3, k)).norm_inf() == 0.0);
  }
  // Matches the classical vector form I X' = (I X) x X.
  std::mt19937_64 rng(64);
  for (int i = 0; i < 50; ++i) {
    const auto X              = oracle::rand_alg(rng, 3);
    const Eigen::Vector3d IX  = Eigen::Vector3d(1.0, 2.0, 3.0).cwiseProduct(X.coords());
    const Eigen::Vector3d rhs = oracle::cross(IX, X.coords());
    const Eigen::Vector3d got = Eigen::Vector3d(1.0, 2.0, 3.0).cwiseProduct(euler_rhs(so3, diag(1.0, 2.0, 3.0), X).coords());
    CHECK(mdiff(got, rhs) <= 1e-14);
  }
}

TEST_CASE("symmetric top oracle")
{
  const SymmetricTopOracle still(2.0, 2.0, Eigen::Vector3d(0.3, 0.4, 1.0));
  CHECK(still.rate() == 0.0);
  CHECK(mdiff(still.at(5.0), Eigen::Vector3d(0.3, 0.4, 1.0)) == 0.0);

  const SymmetricTopOracle top(1.0, 2.0, Eigen::Vector3d(1.0, 0.0, 1.0));
  CHECK(top.rate() == 1.0);
  for (double t : {0.0, 0.5, 3.0, 10.0}) { CHECK(std::abs(top.at(t).head<2>().norm() - 1.0) <= 1e-15); }

  CHECK_THROWS_AS(SymmetricTopOracle(0.0, 1.0, Eigen::Vector3d::Zero()), ContractViolation);
  CHECK_THROWS_AS(SymmetricTopOracle(1.0, -1.0, Eigen::Vector3d::Zero()), ContractViolation);

  // The oracle solves the Euler equation: compare with a fine rk4 run.
  const auto so3 = LieAlgebra::so3();
  const auto I   = diag(1.0, 1.0, 2.0);
  Eigen::VectorXd x = Eigen::Vector3d(1.0, 0.0, 1.0);
  const VectorField f = [&](const Eigen::VectorXd & y) { return euler_rhs(so3, I, AlgebraElement(y)).coords(); };
  for (int i = 0; i < 2000; ++i) { x = rk4_step(f, x, 1e-3); }
  CHECK(mdiff(x, top.at(2.0)) <= 1e-12);
}
