#include "repdyn/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace repdyn {

MatrixTuple::MatrixTuple(std::vector<ComplexMatrix> ms) : members(std::move(ms)) {
  if (members.empty()) throw std::invalid_argument("MatrixTuple: m >= 1 required");
  const Eigen::Index n = members.front().rows();
  for (const auto& a : members) {
    if (a.rows() != a.cols()) throw std::invalid_argument("MatrixTuple: members must be square");
    if (a.rows() != n) throw std::invalid_argument("MatrixTuple: members must share dimension");
  }
}

MatrixTuple MatrixTuple::zero(int m, Eigen::Index n) {
  std::vector<ComplexMatrix> ms(static_cast<std::size_t>(m), ComplexMatrix::Zero(n, n));
  return MatrixTuple(std::move(ms));
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("commutator: dimension mismatch");
  return a * b - b * a;
}

double tuple_distance(const MatrixTuple& a, const MatrixTuple& b) {
  if (a.m() != b.m() || a.dim() != b.dim())
    throw std::invalid_argument("tuple_distance: shape mismatch");
  double s = 0.0;
  for (int i = 0; i < a.m(); ++i) s += (a[i] - b[i]).squaredNorm();
  return std::sqrt(s);
}

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Complex v = a(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  return true;
}

bool all_finite(const MatrixTuple& x) {
  for (const auto& a : x.members)
    if (!all_finite(a)) return false;
  return true;
}

ComplexVector vectorize(const ComplexMatrix& a) {
  return Eigen::Map<const ComplexVector>(a.data(), a.size());
}

LstsqResult lstsq_min_norm(const ComplexMatrix& m, const ComplexVector& b, double tol) {
  if (m.rows() != b.size()) throw std::invalid_argument("lstsq_min_norm: shape mismatch");
  if (!(tol > 0.0)) throw std::invalid_argument("lstsq_min_norm: tol must be positive");

  double max_col = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) max_col = std::max(max_col, m.col(j).norm());
  const double cutoff = tol * max_col;

  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();

  ComplexVector coeffs = svd.matrixU().adjoint() * b;
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > cutoff) {
      coeffs(k) /= sv(k);
      ++rank;
    } else {
      coeffs(k) = Complex(0, 0);
    }
  }
  LstsqResult out;
  out.solution = svd.matrixV() * coeffs;
  out.residual = (m * out.solution - b).norm();
  out.rank = rank;
  return out;
}

}  // namespace repdyn
