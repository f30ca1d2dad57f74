#ifndef TULCZYJEW__LIE_ALGEBRA_HPP_
#define TULCZYJEW__LIE_ALGEBRA_HPP_

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tulczyjew {

struct AlgebraTag;
struct CoalgebraTag;

/**
 * @brief Coordinate tuple in a fixed basis, tagged by the space it lives in.
 *
 * Elements of the algebra and of its dual share a representation but are
 * distinct types, so a covector can never be passed where a vector is
 * expected.
 */
template<typename Tag>
class Coords
{
public:
  Coords() = default;
  explicit Coords(Eigen::VectorXd v) : v_(std::move(v)) {}
  Coords(std::initializer_list<double> values) : v_(static_cast<Eigen::Index>(values.size()))
  {
    Eigen::Index i = 0;
    for (double x : values) { v_(i++) = x; }
  }

  static Coords Zero(std::size_t n) { return Coords(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n))); }

  /// i-th basis element (0-based).
  static Coords Unit(std::size_t n, std::size_t i)
  {
    return Coords(Eigen::VectorXd::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i)));
  }

  std::size_t size() const { return static_cast<std::size_t>(v_.size()); }
  const Eigen::VectorXd & coords() const { return v_; }
  Eigen::VectorXd & coords() { return v_; }

  double operator[](std::size_t i) const { return v_(static_cast<Eigen::Index>(i)); }
  double & operator[](std::size_t i) { return v_(static_cast<Eigen::Index>(i)); }

  double norm_inf() const { return v_.size() == 0 ? 0.0 : v_.cwiseAbs().maxCoeff(); }

  Coords operator+(const Coords & o) const { return Coords(Eigen::VectorXd(v_ + o.v_)); }
  Coords operator-(const Coords & o) const { return Coords(Eigen::VectorXd(v_ - o.v_)); }
  Coords operator-() const { return Coords(Eigen::VectorXd(-v_)); }
  Coords operator*(double s) const { return Coords(Eigen::VectorXd(s * v_)); }
  Coords & operator+=(const Coords & o)
  {
    v_ += o.v_;
    return *this;
  }

  friend Coords operator*(double s, const Coords & c) { return c * s; }
  bool operator==(const Coords & o) const { return v_.size() == o.v_.size() && v_ == o.v_; }

private:
  Eigen::VectorXd v_;
};

using AlgebraElement   = Coords<AlgebraTag>;
using CoalgebraElement = Coords<CoalgebraTag>;

/// Canonical pairing <A, X> = sum A_i X_i of the dual basis with the basis.
double pair(const CoalgebraElement & A, const AlgebraElement & X);

/// Residuals of the two defining identities of a set of structure constants.
struct StructureReport
{
  double antisymmetry_residual = 0.0;
  double jacobi_residual       = 0.0;
  double tolerance             = 1e-12;

  bool antisymmetric() const { return antisymmetry_residual <= tolerance; }
  bool jacobi() const { return jacobi_residual <= tolerance; }
  bool ok() const { return antisymmetric() && jacobi(); }
};

/**
 * @brief Finite-dimensional Lie algebra given by dense structure constants.
 *
 * c(i, j, k) is the coefficient of e_k in [e_i, e_j]. Construction only
 * checks the array shape; use validate() (or checked()) for the algebraic
 * identities.
 */
class LieAlgebra
{
public:
  LieAlgebra(std::string name, std::size_t dim, std::vector<double> constants);

  /// Constructs and throws ContractViolation unless validate().ok().
  static LieAlgebra checked(std::string name, std::size_t dim, std::vector<double> constants);

  /// (R^3, cross product).
  static LieAlgebra so3();
  /// Zero bracket.
  static LieAlgebra abelian(std::size_t dim);
  /// Filiform nilpotent algebra: [e_0, e_j] = e_{j+1} for 1 <= j < dim - 1.
  static LieAlgebra filiform(std::size_t dim);

  std::size_t dim() const { return n_; }
  const std::string & name() const { return name_; }

  double c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  const std::vector<double> & constants() const { return c_; }

  AlgebraElement bracket(const AlgebraElement & X, const AlgebraElement & Y) const;

  /// Matrix of Y -> [X, Y]; column j is [X, e_j].
  Eigen::MatrixXd ad(const AlgebraElement & X) const;

  /// ad*_X A, with <ad*_X A, Y> = <A, [X, Y]>.
  CoalgebraElement coad(const AlgebraElement & X, const CoalgebraElement & A) const;

  StructureReport validate(double tol = 1e-12) const;

  void require(const AlgebraElement & X) const;
  void require(const CoalgebraElement & A) const;

private:
  std::string name_;
  std::size_t n_;
  std::vector<double> c_;
};

}  // namespace tulczyjew

#endif
