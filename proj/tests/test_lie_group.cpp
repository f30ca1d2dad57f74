#include "oracles.hpp"

#include "tulczyjew/errors.hpp"
#include "tulczyjew/lie_group.hpp"

#include <doctest.h>

#include <numbers>

using namespace tulczyjew;

namespace {

double mdiff(const Eigen::MatrixXd & a, const Eigen::MatrixXd & b) { return (a - b).cwiseAbs().maxCoeff(); }

Eigen::Matrix3d Rz(double a)
{
  Eigen::Matrix3d R;
  R << std::cos(a), -std::sin(a), 0.0, std::sin(a), std::cos(a), 0.0, 0.0, 0.0, 1.0;
  return R;
}

}  // namespace

TEST_CASE("generators and construction")
{
  const auto so3 = GroupSpec::so3();
  CHECK(so3.commutator_residual() <= 1e-12);
  CHECK(GroupSpec::translations(3).commutator_residual() == 0.0);
  // so(3) structure constants with abelian generators cannot be represented.
  CHECK_THROWS_AS(GroupSpec(LieAlgebra::so3(), GroupSpec::translations(3).generators(), "bogus"), RepresentationError);
  // Linearly dependent generators are rejected.
  auto gens = so3.generators();
  gens[2]   = gens[0];
  CHECK_THROWS_AS(GroupSpec(LieAlgebra::abelian(3), gens, "dependent"), RepresentationError);
}

TEST_CASE("multiply and inverse examples")
{
  const auto so3 = GroupSpec::so3();
  std::mt19937_64 rng(21);
  const auto g = oracle::random_so3(rng);
  CHECK(mdiff(so3.multiply(g, so3.identity()).mat, g.mat) == 0.0);
  CHECK(mdiff(so3.multiply(g, so3.inverse(g)).mat, Eigen::Matrix3d::Identity()) <= 1e-15);
  CHECK(mdiff(so3.multiply(so3.element(Rz(0.3)), so3.element(Rz(1.1))).mat, Rz(1.4)) <= 1e-15);
  CHECK(so3.inverse(so3.identity()).mat == Eigen::MatrixXd::Identity(3, 3));
  CHECK(mdiff(so3.inverse(so3.element(Rz(0.7))).mat, Rz(-0.7)) <= 1e-16);
  CHECK(so3.inverse(so3.inverse(g)).mat == g.mat);

  const GroupElement other{Eigen::MatrixXd::Identity(3, 3), "R2"};
  CHECK_THROWS_AS(so3.multiply(g, other), GroupMismatch);
}

TEST_CASE("exp examples")
{
  const auto so3 = GroupSpec::so3();
  const AlgebraElement z{0.0, 0.0, 1.0};
  CHECK(so3.exp(AlgebraElement{0.4, 0.5, 0.6}, 0.0).mat == Eigen::MatrixXd::Identity(3, 3));
  const Eigen::Vector3d y = so3.exp(z, std::numbers::pi / 2).mat * Eigen::Vector3d::UnitX();
  CHECK((y - Eigen::Vector3d::UnitY()).cwiseAbs().maxCoeff() <= 1e-15);

  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const auto X   = oracle::rand_alg(rng, 3);
    const double s = oracle::uniform(rng, -3, 3), t = oracle::uniform(rng, -3, 3);
    CHECK(mdiff(so3.multiply(so3.exp(X, s), so3.exp(X, t)).mat, so3.exp(X, s + t).mat) <= 1e-14);
    // Rodrigues against the generic scaling-and-squaring exponential.
    CHECK(mdiff(so3.exp(X, t).mat, expm(t * so3.hat(X))) <= 1e-14);
  }
  // Small-angle branch of Rodrigues.
  const AlgebraElement tiny{1e-9, -2e-9, 3e-9};
  CHECK(mdiff(so3.exp(tiny).mat, oracle::series_exp(so3.hat(tiny))) <= 1e-16);

  const auto tr = GroupSpec::translations(2);
  const auto g  = tr.exp(AlgebraElement{1.5, -2.0});
  CHECK(g.mat(0, 2) == 1.5);
  CHECK(g.mat(1, 2) == -2.0);
}

TEST_CASE("exp matches the truncated power series for |tX| <= pi")
{
  const auto so3 = GroupSpec::so3();
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto X   = oracle::rand_alg(rng, 3);
    const double t = std::numbers::pi * oracle::uniform(rng, 0.0, 1.0) / X.coords().norm();
    CHECK(mdiff(so3.exp(X, t).mat, oracle::series_exp(t * so3.hat(X))) <= 1e-12);
  }
}

TEST_CASE("membership is preserved")
{
  const auto so3 = GroupSpec::so3();
  std::mt19937_64 rng(24);
  for (int i = 0; i < 100; ++i) {
    const auto g = oracle::random_so3(rng), h = oracle::random_so3(rng);
    CHECK(so3.is_member(so3.multiply(g, h)));
    CHECK(so3.is_member(so3.inverse(g)));
    CHECK(so3.is_member(so3.exp(oracle::rand_alg(rng, 3), oracle::uniform(rng, -10, 10))));
  }
  CHECK_FALSE(so3.is_member(so3.element(-Eigen::MatrixXd::Identity(3, 3))));
  CHECK_FALSE(so3.is_member(so3.element(2.0 * Eigen::MatrixXd::Identity(3, 3))));

  Eigen::MatrixXd drifted = Rz(0.4);
  drifted(0, 1) += 1e-6;
  CHECK_FALSE(so3.is_member(so3.element(drifted)));
  CHECK(so3.is_member(so3.reproject(so3.element(drifted)), 1e-14));
}

TEST_CASE("Ad examples")
{
  const auto so3 = GroupSpec::so3();
  std::mt19937_64 rng(25);
  for (int i = 0; i < 100; ++i) {
    const auto X = oracle::rand_alg(rng, 3), Y = oracle::rand_alg(rng, 3);
    const auto g = oracle::random_so3(rng);
    CHECK(so3.Ad(so3.identity(), X) == X);
    CHECK(std::abs(so3.Ad(g, X).coords().norm() - X.coords().norm()) <= 1e-14);
    // In the R^3 identification Ad_R is the rotation itself.
    CHECK((so3.Ad(g, X).coords() - g.mat * X.coords()).cwiseAbs().maxCoeff() <= 1e-14);
    const double t           = 1e-6;
    const Eigen::VectorXd fd = (so3.Ad(so3.exp(X, t), Y).coords() - Y.coords()) / t;
    CHECK((fd - so3.algebra().ad(X) * Y.coords()).cwiseAbs().maxCoeff() <= 1e-5);
    // Spatial momentum transport.
    const auto A = oracle::rand_coalg(rng, 3);
    CHECK((so3.coAd_inverse(g, A).coords() - g.mat * A.coords()).cwiseAbs().maxCoeff() <= 1e-14);
  }
  CHECK_THROWS_AS(so3.vee(Eigen::MatrixXd::Identity(3, 3)), RepresentationError);
  CHECK_THROWS_AS(GroupSpec::translations(2).vee(Eigen::MatrixXd::Identity(3, 3)), RepresentationError);
}

TEST_CASE("trivialize_tangent examples")
{
  const auto so3 = GroupSpec::so3();
  const auto & E = so3.generators();
  std::mt19937_64 rng(26);
  const auto g = oracle::random_so3(rng);
  CHECK((so3.trivialize_tangent(g, g.mat * E[0]).second.coords() - Eigen::Vector3d::UnitX()).cwiseAbs().maxCoeff() <=
        1e-15);
  const auto [base, X2] = so3.trivialize_tangent(so3.identity(), E[1]);
  CHECK(base.mat == Eigen::MatrixXd::Identity(3, 3));
  CHECK(X2 == AlgebraElement{0.0, 1.0, 0.0});

  // Tangent of t -> g exp(tX), by central differences.
  const auto X             = oracle::rand_alg(rng, 3);
  const double h           = 1e-5;
  const Eigen::MatrixXd v  = (so3.multiply(g, so3.exp(X, h)).mat - so3.multiply(g, so3.exp(X, -h)).mat) / (2 * h);
  CHECK((so3.trivialize_tangent(g, v).second.coords() - X.coords()).cwiseAbs().maxCoeff() <= 1e-9);

  for (int i = 0; i < 100; ++i) {
    const auto Y = oracle::rand_alg(rng, 3);
    const auto k = oracle::random_so3(rng);
    CHECK((so3.trivialize_tangent(k, so3.untrivialize_tangent(k, Y)).second.coords() - Y.coords())
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }
  CHECK_THROWS_AS(so3.trivialize_tangent(g, Eigen::MatrixXd::Identity(3, 3)), NotTangent);
}

TEST_CASE("left_derivative examples")
{
  const auto so3 = GroupSpec::so3();
  std::mt19937_64 rng(27);
  const auto g = oracle::random_so3(rng);
  CHECK(so3.left_derivative([](const GroupElement &) { return 4.2; }, g).norm_inf() == 0.0);
  CHECK(so3.left_derivative([](const GroupElement & k) { return k.mat.trace(); }, so3.identity()).norm_inf() <= 1e-10);

  Eigen::Matrix3d M;
  for (int i = 0; i < 9; ++i) { M.data()[i] = oracle::uniform(rng); }
  const auto D = so3.left_derivative([&](const GroupElement & k) { return (M * k.mat).trace(); }, g);
  for (int i = 0; i < 10; ++i) {
    const auto Y         = oracle::rand_alg(rng, 3);
    const double analytic = (M * g.mat * so3.hat(Y)).trace();
    CHECK(std::abs(pair(D, Y) - analytic) <= 1e-6);
  }
}
