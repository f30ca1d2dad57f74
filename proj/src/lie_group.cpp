#include "tulczyjew/lie_group.hpp"

#include "tulczyjew/errors.hpp"

#include <cmath>

namespace tulczyjew {

namespace {

Eigen::VectorXd vec(const Eigen::MatrixXd & M)
{
  return Eigen::Map<const Eigen::VectorXd>(M.data(), M.size());
}

}  // namespace

Eigen::Matrix3d skew(const Eigen::Vector3d & w)
{
  Eigen::Matrix3d K;
  K << 0.0, -w.z(), w.y(), w.z(), 0.0, -w.x(), -w.y(), w.x(), 0.0;
  return K;
}

Eigen::Matrix3d rodrigues(const Eigen::Vector3d & w)
{
  const double th2 = w.squaredNorm();
  const double th  = std::sqrt(th2);
  double a, b;
  if (th < 1e-4) {
    a = 1.0 - th2 / 6.0 + th2 * th2 / 120.0;
    b = 0.5 - th2 / 24.0 + th2 * th2 / 720.0;
  } else {
    a = std::sin(th) / th;
    b = (1.0 - std::cos(th)) / th2;
  }
  const Eigen::Matrix3d K = skew(w);
  return Eigen::Matrix3d::Identity() + a * K + b * K * K;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd & M)
{
  const double norm = M.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings     = 0;
  if (norm > 0.5) { squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5))); }
  const Eigen::MatrixXd A = M / std::ldexp(1.0, squarings);

  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(M.rows(), M.cols());
  Eigen::MatrixXd term   = result;
  for (int k = 1; k <= 20; ++k) {
    term = term * A / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) { result = result * result; }
  return result;
}

GroupSpec::GroupSpec(LieAlgebra algebra, std::vector<Eigen::MatrixXd> generators, std::string name, Kind kind)
    : alg_(std::move(algebra)), gens_(std::move(generators)), name_(std::move(name)), kind_(kind)
{
  if (gens_.size() != alg_.dim()) {
    throw RepresentationError(name_ + ": " + std::to_string(gens_.size()) + " generators for an algebra of dimension "
                              + std::to_string(alg_.dim()));
  }
  d_ = gens_.front().rows();
  for (const auto & E : gens_) {
    if (E.rows() != d_ || E.cols() != d_) { throw RepresentationError(name_ + ": generators must be square and equal-sized"); }
  }
  basis_.resize(d_ * d_, static_cast<Eigen::Index>(gens_.size()));
  for (std::size_t i = 0; i < gens_.size(); ++i) { basis_.col(static_cast<Eigen::Index>(i)) = vec(gens_[i]); }
  basis_qr_.compute(basis_);
  if (basis_qr_.rank() != static_cast<Eigen::Index>(gens_.size())) {
    throw RepresentationError(name_ + ": generators are linearly dependent");
  }
  if (const double r = commutator_residual(); r > 1e-12) {
    throw RepresentationError(name_ + ": generator commutators miss the structure constants by " + std::to_string(r));
  }
}

GroupSpec GroupSpec::so3()
{
  std::vector<Eigen::MatrixXd> gens;
  for (int i = 0; i < 3; ++i) { gens.emplace_back(skew(Eigen::Vector3d::Unit(i))); }
  return GroupSpec(LieAlgebra::so3(), std::move(gens), "SO3", Kind::SO3);
}

GroupSpec GroupSpec::translations(std::size_t n)
{
  const auto d = static_cast<Eigen::Index>(n + 1);
  std::vector<Eigen::MatrixXd> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::MatrixXd E = Eigen::MatrixXd::Zero(d, d);
    E(static_cast<Eigen::Index>(i), d - 1) = 1.0;
    gens.push_back(std::move(E));
  }
  return GroupSpec(LieAlgebra::abelian(n), std::move(gens), "R" + std::to_string(n), Kind::Translations);
}

double GroupSpec::commutator_residual() const
{
  double r       = 0.0;
  const auto n   = alg_.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Eigen::MatrixXd C = gens_[i] * gens_[j] - gens_[j] * gens_[i];
      for (std::size_t k = 0; k < n; ++k) { C -= alg_.c(i, j, k) * gens_[k]; }
      r = std::max(r, C.cwiseAbs().maxCoeff());
    }
  }
  return r;
}

void GroupSpec::require(const GroupElement & g) const
{
  if (g.group != name_ || g.mat.rows() != d_ || g.mat.cols() != d_) {
    throw GroupMismatch("element of '" + g.group + "' used with group '" + name_ + "'");
  }
}

GroupElement GroupSpec::identity() const { return {Eigen::MatrixXd::Identity(d_, d_), name_}; }

GroupElement GroupSpec::element(Eigen::MatrixXd mat) const
{
  GroupElement g{std::move(mat), name_};
  if (g.mat.rows() != d_ || g.mat.cols() != d_) {
    throw GroupMismatch(name_ + ": expected a " + std::to_string(d_) + "x" + std::to_string(d_) + " matrix");
  }
  return g;
}

bool GroupSpec::is_member(const GroupElement & g, double tol) const
{
  if (g.group != name_ || g.mat.rows() != d_ || g.mat.cols() != d_) { return false; }
  if (!g.mat.allFinite()) { return false; }
  switch (kind_) {
  case Kind::SO3: {
    const double orth = (g.mat.transpose() * g.mat - Eigen::MatrixXd::Identity(d_, d_)).cwiseAbs().maxCoeff();
    return orth <= tol && g.mat.determinant() > 0.0;
  }
  case Kind::Translations: {
    Eigen::MatrixXd D = g.mat;
    D.col(d_ - 1).head(d_ - 1).setZero();
    return (D - Eigen::MatrixXd::Identity(d_, d_)).cwiseAbs().maxCoeff() <= tol;
  }
  case Kind::Generic: return std::abs(g.mat.determinant()) > tol;
  }
  return false;
}

GroupElement GroupSpec::reproject(const GroupElement & g) const
{
  require(g);
  if (kind_ != Kind::SO3) { return g; }
  Eigen::MatrixXd Q = g.mat;
  for (Eigen::Index j = 0; j < d_; ++j) {
    for (Eigen::Index k = 0; k < j; ++k) { Q.col(j) -= Q.col(k).dot(Q.col(j)) * Q.col(k); }
    Q.col(j).normalize();
  }
  return {std::move(Q), name_};
}

GroupElement GroupSpec::multiply(const GroupElement & g, const GroupElement & h) const
{
  require(g);
  require(h);
  return {g.mat * h.mat, name_};
}

GroupElement GroupSpec::inverse(const GroupElement & g) const
{
  require(g);
  if (kind_ == Kind::SO3) { return {g.mat.transpose(), name_}; }
  return {g.mat.inverse(), name_};
}

Eigen::MatrixXd GroupSpec::hat(const AlgebraElement & X) const
{
  alg_.require(X);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(d_, d_);
  for (std::size_t i = 0; i < gens_.size(); ++i) { M += X[i] * gens_[i]; }
  return M;
}

AlgebraElement GroupSpec::vee(const Eigen::MatrixXd & M, double tol) const
{
  if (M.rows() != d_ || M.cols() != d_) { throw ContractViolation(name_ + ": vee of a wrongly sized matrix"); }
  if (kind_ == Kind::SO3) {
    const Eigen::MatrixXd sym = M + M.transpose();
    if (sym.cwiseAbs().maxCoeff() > 2.0 * tol) {
      throw RepresentationError("SO3: matrix is not antisymmetric (residual " + std::to_string(sym.cwiseAbs().maxCoeff()) + ")");
    }
    return AlgebraElement{0.5 * (M(2, 1) - M(1, 2)), 0.5 * (M(0, 2) - M(2, 0)), 0.5 * (M(1, 0) - M(0, 1))};
  }
  const Eigen::VectorXd m = vec(M);
  Eigen::VectorXd x       = basis_qr_.solve(m);
  const double residual   = (basis_ * x - m).cwiseAbs().maxCoeff();
  if (residual > tol) {
    throw RepresentationError(name_ + ": matrix is not in the span of the generators (residual " + std::to_string(residual) + ")");
  }
  return AlgebraElement(std::move(x));
}

GroupElement GroupSpec::exp(const AlgebraElement & X, double t) const
{
  alg_.require(X);
  if (kind_ == Kind::SO3) {
    return {rodrigues(t * Eigen::Vector3d(X.coords())), name_};
  }
  return {expm(t * hat(X)), name_};
}

AlgebraElement GroupSpec::Ad(const GroupElement & g, const AlgebraElement & X) const
{
  require(g);
  const GroupElement gi = inverse(g);
  return vee(g.mat * hat(X) * gi.mat);
}

CoalgebraElement GroupSpec::coAd_inverse(const GroupElement & g, const CoalgebraElement & A) const
{
  alg_.require(A);
  const GroupElement gi = inverse(g);
  const auto n          = alg_.dim();
  CoalgebraElement out  = CoalgebraElement::Zero(n);
  for (std::size_t i = 0; i < n; ++i) { out[i] = pair(A, Ad(gi, AlgebraElement::Unit(n, i))); }
  return out;
}

std::pair<GroupElement, AlgebraElement> GroupSpec::trivialize_tangent(const GroupElement & g, const Eigen::MatrixXd & v,
                                                                      double tol) const
{
  require(g);
  if (v.rows() != d_ || v.cols() != d_) { throw NotTangent(name_ + ": tangent matrix has the wrong size"); }
  const Eigen::MatrixXd body = inverse(g).mat * v;
  try {
    return {g, vee(body, tol)};
  } catch (const RepresentationError & e) {
    throw NotTangent(std::string("vector is not tangent at g: ") + e.what());
  }
}

Eigen::MatrixXd GroupSpec::untrivialize_tangent(const GroupElement & g, const AlgebraElement & X) const
{
  require(g);
  return g.mat * hat(X);
}

CoalgebraElement GroupSpec::left_derivative(const std::function<double(const GroupElement &)> & f,
                                            const GroupElement & g, double h) const
{
  require(g);
  const auto n       = alg_.dim();
  CoalgebraElement D = CoalgebraElement::Zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto e    = AlgebraElement::Unit(n, i);
    const double fp = f(multiply(g, exp(e, h)));
    const double fm = f(multiply(g, exp(e, -h)));
    D[i]            = (fp - fm) / (2.0 * h);
  }
  return D;
}

}  // namespace tulczyjew
