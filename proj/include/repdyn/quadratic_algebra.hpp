#ifndef REPDYN_QUADRATIC_ALGEBRA_HPP
#define REPDYN_QUADRATIC_ALGEBRA_HPP

#include "repdyn/ncpoly.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace repdyn {

/// Structure constants of an algebra with generators e_1..e_m and relations
///   e_i e_j - e_j e_i =
///     sum_{k<=l} A[i,j,k,l] (e_k e_l + e_l e_k)/2 + sum_k B[i,j,k] e_k + C[i,j]
/// for i < j. Absent entries are zero.
struct QuadraticAlgebra {
  int m = 0;
  std::map<std::array<int, 4>, Complex> A;  // key (i, j, k, l), i < j, k <= l
  std::map<std::array<int, 3>, Complex> B;  // key (i, j, k), i < j
  std::map<std::array<int, 2>, Complex> C;  // key (i, j), i < j

  QuadraticAlgebra() = default;
  explicit QuadraticAlgebra(int generators) : m(generators) {}

  void set_a(int i, int j, int k, int l, Complex v);
  void set_b(int i, int j, int k, Complex v);
  void set_c(int i, int j, Complex v);

  Complex a(int i, int j, int k, int l) const;
  Complex b(int i, int j, int k) const;
  Complex c(int i, int j) const;

  friend bool operator==(const QuadraticAlgebra& x, const QuadraticAlgebra& y) {
    return x.m == y.m && x.A == y.A && x.B == y.B && x.C == y.C;
  }
};

/// Generator pairs (i, j) with i < j in lexicographic order; relation and
/// residual vectors follow this order throughout.
std::vector<std::pair<int, int>> generator_pairs(int m);

/// The m(m-1)/2 elements r_ij = e_i e_j - e_j e_i - RHS_ij, degree <= 2.
std::vector<NCPolynomial<Complex>> relation_polynomials(const QuadraticAlgebra& alg);

// Stock examples used by the CLI demos and tests.
QuadraticAlgebra abelian_algebra(int m);
QuadraticAlgebra so3_algebra();          // B from the Levi-Civita symbol
QuadraticAlgebra sl2_algebra();          // generators (e, f, h)
QuadraticAlgebra heisenberg_algebra();   // [e1,e2] = e3 only
QuadraticAlgebra weyl_algebra();         // m = 2, [e1,e2] = 1
QuadraticAlgebra broken_jacobi_algebra();

}  // namespace repdyn

#endif
