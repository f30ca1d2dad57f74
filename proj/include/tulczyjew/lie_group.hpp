#ifndef TULCZYJEW__LIE_GROUP_HPP_
#define TULCZYJEW__LIE_GROUP_HPP_

#include "tulczyjew/lie_algebra.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace tulczyjew {

/// Point of a matrix Lie group.
struct GroupElement
{
  Eigen::MatrixXd mat;
  std::string group;
};

/**
 * @brief Matrix Lie group with an explicit generator basis of its algebra.
 *
 * Generators E_i are d x d matrices whose commutators reproduce the
 * structure constants of the algebra. Everything is left-trivialized:
 * a tangent vector v at g corresponds to (g, X) with g^{-1} v = sum X_i E_i.
 */
class GroupSpec
{
public:
  enum class Kind { SO3, Translations, Generic };

  /// Throws RepresentationError if the generators do not reproduce the
  /// structure constants within 1e-12 or are linearly dependent.
  GroupSpec(LieAlgebra algebra, std::vector<Eigen::MatrixXd> generators, std::string name, Kind kind = Kind::Generic);

  static GroupSpec so3();
  /// R^n as (n+1)x(n+1) unipotent matrices; its algebra is abelian.
  static GroupSpec translations(std::size_t n);

  const LieAlgebra & algebra() const { return alg_; }
  const std::vector<Eigen::MatrixXd> & generators() const { return gens_; }
  const std::string & name() const { return name_; }
  Kind kind() const { return kind_; }
  Eigen::Index matrix_size() const { return d_; }

  /// Largest entry of [E_i, E_j] - sum_k c_ijk E_k.
  double commutator_residual() const;

  GroupElement identity() const;
  GroupElement element(Eigen::MatrixXd mat) const;

  bool is_member(const GroupElement & g, double tol = 1e-9) const;
  /// Nearest member; Gram-Schmidt for SO(3), identity map otherwise.
  GroupElement reproject(const GroupElement & g) const;

  GroupElement multiply(const GroupElement & g, const GroupElement & h) const;
  GroupElement inverse(const GroupElement & g) const;

  /// sum X_i E_i.
  Eigen::MatrixXd hat(const AlgebraElement & X) const;
  /// Generator-basis expansion of M; throws RepresentationError if M is
  /// not in their span within tol.
  AlgebraElement vee(const Eigen::MatrixXd & M, double tol = 1e-9) const;

  GroupElement exp(const AlgebraElement & X, double t = 1.0) const;

  /// Coordinates of g (sum X_i E_i) g^{-1}.
  AlgebraElement Ad(const GroupElement & g, const AlgebraElement & X) const;

  /// Body-to-space transport of a momentum: <Ad*_{g^{-1}} A, Y> = <A, Ad_{g^{-1}} Y>.
  CoalgebraElement coAd_inverse(const GroupElement & g, const CoalgebraElement & A) const;

  /// (g, v) -> (g, X) with X = vee(g^{-1} v).
  std::pair<GroupElement, AlgebraElement> trivialize_tangent(const GroupElement & g, const Eigen::MatrixXd & v,
                                                             double tol = 1e-9) const;
  /// (g, X) -> g (sum X_i E_i).
  Eigen::MatrixXd untrivialize_tangent(const GroupElement & g, const AlgebraElement & X) const;

  /// Left-trivialized differential: <D, Y> = d/dt f(g exp(tY)) at t = 0,
  /// by central differences along each generator.
  CoalgebraElement left_derivative(const std::function<double(const GroupElement &)> & f, const GroupElement & g,
                                   double h = 1e-6) const;

  void require(const GroupElement & g) const;

private:
  LieAlgebra alg_;
  std::vector<Eigen::MatrixXd> gens_;
  std::string name_;
  Kind kind_;
  Eigen::Index d_;
  Eigen::MatrixXd basis_;  // columns are vec(E_i)
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> basis_qr_;
};

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
Eigen::MatrixXd expm(const Eigen::MatrixXd & M);

/// Rodrigues formula for exp of the skew matrix of w.
Eigen::Matrix3d rodrigues(const Eigen::Vector3d & w);

/// Skew-symmetric matrix with skew(w) v = w x v.
Eigen::Matrix3d skew(const Eigen::Vector3d & w);

}  // namespace tulczyjew

#endif
