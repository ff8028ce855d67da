#ifndef REPDYN_MATRIX_HPP
#define REPDYN_MATRIX_HPP

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace repdyn {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// A tuple X = (X_1, ..., X_m) of complex n x n matrices of equal size.
struct MatrixTuple {
  std::vector<ComplexMatrix> members;

  MatrixTuple() = default;
  explicit MatrixTuple(std::vector<ComplexMatrix> ms);

  int m() const { return static_cast<int>(members.size()); }
  Eigen::Index dim() const { return members.empty() ? 0 : members.front().rows(); }
  const ComplexMatrix& operator[](int i) const { return members[static_cast<std::size_t>(i)]; }
  ComplexMatrix& operator[](int i) { return members[static_cast<std::size_t>(i)]; }

  static MatrixTuple zero(int m, Eigen::Index n);
};

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

inline double frobenius(const ComplexMatrix& a) { return a.norm(); }

/// Frobenius distance between tuples, sqrt(sum_i |A_i - B_i|_F^2).
double tuple_distance(const MatrixTuple& a, const MatrixTuple& b);

bool all_finite(const ComplexMatrix& a);
bool all_finite(const MatrixTuple& x);

ComplexVector vectorize(const ComplexMatrix& a);

struct LstsqResult {
  ComplexVector solution;
  double residual = 0.0;
  Eigen::Index rank = 0;
};

/// Minimum-norm least squares: among minimizers of |Mv - b| returns the one
/// of least Euclidean norm. Singular values at or below tol times the largest
/// column norm of M are treated as zero.
LstsqResult lstsq_min_norm(const ComplexMatrix& m, const ComplexVector& b, double tol = 1e-12);

}  // namespace repdyn

#endif
