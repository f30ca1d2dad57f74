#include "tulczyjew/lie_algebra.hpp"

#include "tulczyjew/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tulczyjew {

double pair(const CoalgebraElement & A, const AlgebraElement & X)
{
  if (A.size() != X.size()) {
    throw ContractViolation("pair: covector of size " + std::to_string(A.size()) + " against vector of size "
                            + std::to_string(X.size()));
  }
  return A.coords().dot(X.coords());
}

LieAlgebra::LieAlgebra(std::string name, std::size_t dim, std::vector<double> constants)
    : name_(std::move(name)), n_(dim), c_(std::move(constants))
{
  if (n_ == 0) { throw ContractViolation("LieAlgebra: dimension must be positive"); }
  if (c_.size() != n_ * n_ * n_) {
    throw ContractViolation("LieAlgebra: expected " + std::to_string(n_ * n_ * n_) + " structure constants, got "
                            + std::to_string(c_.size()));
  }
}

LieAlgebra LieAlgebra::checked(std::string name, std::size_t dim, std::vector<double> constants)
{
  LieAlgebra alg(std::move(name), dim, std::move(constants));
  const auto report = alg.validate();
  if (!report.antisymmetric()) {
    throw ContractViolation("structure constants are not antisymmetric (residual "
                            + std::to_string(report.antisymmetry_residual) + ")");
  }
  if (!report.jacobi()) {
    throw ContractViolation("structure constants violate the Jacobi identity (residual "
                            + std::to_string(report.jacobi_residual) + ")");
  }
  return alg;
}

LieAlgebra LieAlgebra::so3()
{
  std::vector<double> c(27, 0.0);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    c[(i * 3 + j) * 3 + k] = 1.0;
    c[(j * 3 + i) * 3 + k] = -1.0;
  };
  set(0, 1, 2);
  set(1, 2, 0);
  set(2, 0, 1);
  return LieAlgebra("so3", 3, std::move(c));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim)
{
  return LieAlgebra("abelian" + std::to_string(dim), dim, std::vector<double>(dim * dim * dim, 0.0));
}

LieAlgebra LieAlgebra::filiform(std::size_t dim)
{
  std::vector<double> c(dim * dim * dim, 0.0);
  for (std::size_t j = 1; j + 1 < dim; ++j) {
    c[(0 * dim + j) * dim + j + 1] = 1.0;
    c[(j * dim + 0) * dim + j + 1] = -1.0;
  }
  return LieAlgebra("filiform" + std::to_string(dim), dim, std::move(c));
}

void LieAlgebra::require(const AlgebraElement & X) const
{
  if (X.size() != n_) {
    throw ContractViolation(name_ + ": algebra element of size " + std::to_string(X.size()) + ", expected "
                            + std::to_string(n_));
  }
}

void LieAlgebra::require(const CoalgebraElement & A) const
{
  if (A.size() != n_) {
    throw ContractViolation(name_ + ": coalgebra element of size " + std::to_string(A.size()) + ", expected "
                            + std::to_string(n_));
  }
}

AlgebraElement LieAlgebra::bracket(const AlgebraElement & X, const AlgebraElement & Y) const
{
  require(X);
  require(Y);
  AlgebraElement out = AlgebraElement::Zero(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (X[i] == 0.0) { continue; }
    for (std::size_t j = 0; j < n_; ++j) {
      const double xy = X[i] * Y[j];
      if (xy == 0.0) { continue; }
      for (std::size_t k = 0; k < n_; ++k) { out[k] += c(i, j, k) * xy; }
    }
  }
  return out;
}

Eigen::MatrixXd LieAlgebra::ad(const AlgebraElement & X) const
{
  require(X);
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n_; ++i) {
    if (X[i] == 0.0) { continue; }
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        M(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) += X[i] * c(i, j, k);
      }
    }
  }
  return M;
}

CoalgebraElement LieAlgebra::coad(const AlgebraElement & X, const CoalgebraElement & A) const
{
  require(A);
  return CoalgebraElement(Eigen::VectorXd(ad(X).transpose() * A.coords()));
}

StructureReport LieAlgebra::validate(double tol) const
{
  StructureReport r;
  r.tolerance = tol;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        r.antisymmetry_residual = std::max(r.antisymmetry_residual, std::abs(c(i, j, k) + c(j, i, k)));
      }
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        for (std::size_t l = 0; l < n_; ++l) {
          double s = 0.0;
          for (std::size_t m = 0; m < n_; ++m) {
            s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
          }
          r.jacobi_residual = std::max(r.jacobi_residual, std::abs(s));
        }
      }
    }
  }
  return r;
}

}  // namespace tulczyjew
