#ifndef TULCZYJEW_TESTS__ORACLES_HPP_
#define TULCZYJEW_TESTS__ORACLES_HPP_

// Independent reference computations used by the tests. Nothing here calls the
// code under test for the quantity being checked.

#include "tulczyjew/bundle_maps.hpp"
#include "tulczyjew/lie_algebra.hpp"
#include "tulczyjew/lie_group.hpp"

#include <Eigen/Dense>

#include <random>

namespace oracle {

using tulczyjew::AlgebraElement;
using tulczyjew::CoalgebraElement;
using tulczyjew::GroupElement;
using tulczyjew::GroupField;
using tulczyjew::GroupSpec;
using tulczyjew::LieAlgebra;

inline double uniform(std::mt19937_64 & rng, double lo = -1.0, double hi = 1.0)
{
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Eigen::VectorXd random_vector(std::mt19937_64 & rng, Eigen::Index n, double scale = 1.0)
{
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) { v(i) = scale * uniform(rng); }
  return v;
}

inline AlgebraElement rand_alg(std::mt19937_64 & rng, std::size_t n)
{
  return AlgebraElement(random_vector(rng, static_cast<Eigen::Index>(n)));
}

inline CoalgebraElement rand_coalg(std::mt19937_64 & rng, std::size_t n)
{
  return CoalgebraElement(random_vector(rng, static_cast<Eigen::Index>(n)));
}

/// Uniformly distributed rotation via a random unit quaternion.
inline Eigen::Matrix3d random_rotation(std::mt19937_64 & rng)
{
  std::normal_distribution<double> n01;
  Eigen::Quaterniond q(n01(rng), n01(rng), n01(rng), n01(rng));
  q.normalize();
  return q.toRotationMatrix();
}

inline GroupElement random_so3(std::mt19937_64 & rng) { return {random_rotation(rng), "SO3"}; }

/// Cross product written out by hand, the so(3) bracket in the hat basis.
inline Eigen::Vector3d cross(const Eigen::Vector3d & a, const Eigen::Vector3d & b)
{
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

/// exp(K) by a truncated power series after halving `halvings` times.
inline Eigen::MatrixXd series_exp(const Eigen::MatrixXd & K, int terms = 20, int halvings = 1)
{
  const Eigen::MatrixXd S = K / std::pow(2.0, halvings);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(K.rows(), K.cols()), sum = term;
  for (int k = 1; k < terms; ++k) {
    term = term * S / k;
    sum += term;
  }
  for (int i = 0; i < halvings; ++i) { sum = sum * sum; }
  return sum;
}

/// Same algebra in the basis f_i = sum_a P(a, i) e_a.
inline LieAlgebra change_basis(const LieAlgebra & alg, const Eigen::MatrixXd & P, const std::string & name)
{
  const auto n               = static_cast<Eigen::Index>(alg.dim());
  const Eigen::MatrixXd Pinv = P.inverse();
  std::vector<double> c(alg.dim() * alg.dim() * alg.dim(), 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // [f_i, f_j] expanded in e, then rewritten in f.
      Eigen::VectorXd e_coords = Eigen::VectorXd::Zero(n);
      for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
          for (Eigen::Index m = 0; m < n; ++m) {
            e_coords(m) += P(a, i) * P(b, j) *
                           alg.c(static_cast<std::size_t>(a), static_cast<std::size_t>(b), static_cast<std::size_t>(m));
          }
        }
      }
      const Eigen::VectorXd f_coords = Pinv * e_coords;
      for (Eigen::Index k = 0; k < n; ++k) { c[static_cast<std::size_t>((i * n + j) * n + k)] = f_coords(k); }
    }
  }
  return LieAlgebra(name, alg.dim(), std::move(c));
}

/// A random 5-dimensional nilpotent algebra: the filiform algebra in a random basis.
inline LieAlgebra random_nilpotent5(std::mt19937_64 & rng)
{
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(5, 5);
  for (Eigen::Index i = 0; i < 5; ++i) {
    for (Eigen::Index j = 0; j < 5; ++j) { P(i, j) += 0.3 * uniform(rng); }
  }
  return change_basis(LieAlgebra::filiform(5), P, "nilpotent5");
}

/// Point of the flow of g' = g X(g) after time t, by RK4 in the ambient matrix space.
inline Eigen::MatrixXd flow(const GroupSpec & spec, const GroupField & X, const Eigen::MatrixXd & g0, double t,
                            int steps = 64)
{
  auto rhs = [&](const Eigen::MatrixXd & g) { return Eigen::MatrixXd(g * spec.hat(X.value({g, spec.name()}))); };
  Eigen::MatrixXd g = g0;
  const double h    = t / steps;
  for (int i = 0; i < steps; ++i) {
    const Eigen::MatrixXd k1 = rhs(g);
    const Eigen::MatrixXd k2 = rhs(g + 0.5 * h * k1);
    const Eigen::MatrixXd k3 = rhs(g + 0.5 * h * k2);
    const Eigen::MatrixXd k4 = rhs(g + h * k3);
    g += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return g;
}

/**
 * Lie bracket of two fields from the commutator of their flows,
 * phi(t) = Fl^eta_{-t} Fl^xi_{-t} Fl^eta_t Fl^xi_t (g) = g + t^2 [xi, eta](g) + O(t^3),
 * symmetrized in t so the error is O(t^2). Returned left-trivialized.
 */
inline AlgebraElement flow_commutator_bracket(const GroupSpec & spec, const GroupField & xi, const GroupField & eta,
                                              const GroupElement & g, double t = 1e-3)
{
  auto phi = [&](double s) {
    Eigen::MatrixXd p = flow(spec, xi, g.mat, s);
    p                 = flow(spec, eta, p, s);
    p                 = flow(spec, xi, p, -s);
    return flow(spec, eta, p, -s);
  };
  const Eigen::MatrixXd V = (0.5 * (phi(t) + phi(-t)) - g.mat) / (t * t);
  const Eigen::MatrixXd L = g.mat.inverse() * V;
  return spec.vee(0.5 * (L - L.transpose()), 1e-3);
}

}  // namespace oracle

#endif
