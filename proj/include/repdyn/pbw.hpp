#ifndef REPDYN_PBW_HPP
#define REPDYN_PBW_HPP

#include "repdyn/quadratic_algebra.hpp"
#include "repdyn/symbol.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace repdyn {

struct SliceTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when the sorted monomials fail to be a basis of the quotient at
/// the requested degree, so no normal form over them exists.
struct BasisCollapseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PbwReport {
  bool pass = false;
  int degree = 0;
  std::vector<int> quotient_dims;  // entry k = dim of the degree-<=k quotient slice
  std::vector<int> expected_dims;  // entry k = C(m+k, k), the symmetric-algebra count
};

/// Row-reduced basis of the span { w1 * g * w2 : total degree <= degree }
/// inside the free-algebra slice of words of length <= degree. Elimination
/// pivots prefer high degree first and non-sorted words before sorted ones,
/// so pivot counts per degree give the filtered quotient dimensions and the
/// non-pivot columns realize normal forms over sorted monomials.
///
/// Runs in exact Gaussian-rational arithmetic whenever every generator
/// coefficient reconstructs as a small rational; otherwise floating point
/// with entries below rank_tol times the largest input magnitude zeroed.
class SliceBasis {
 public:
  SliceBasis(int m, int degree, const std::vector<NCPolynomial<Complex>>& generators,
             double rank_tol = 1e-9);

  int m() const;
  int degree() const;
  bool exact() const;
  const std::vector<int>& quotient_dims() const;
  std::vector<int> expected_dims() const;
  bool dims_match() const;

  /// True when every pivot is a non-sorted word, i.e. sorted monomials are
  /// a basis of the quotient slice.
  bool sorted_monomials_free() const;

  std::map<MultiIndex, Complex> reduce(const NCWord& w) const;
  std::map<MultiIndex, Complex> reduce(const NCPolynomial<Complex>& p) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Dimension test of the filtered quotient against the symmetric algebra:
/// passes iff Weyl symmetrization is a linear isomorphism degree by degree
/// up to the given degree.
PbwReport pbw_check(const QuadraticAlgebra& alg, int degree);

/// Normal form of a word over sorted monomials e_1^{a_1}..e_m^{a_m} of
/// degree <= |w|. Requires pbw_check to pass at degree |w|.
std::map<MultiIndex, Complex> reduce_word(const QuadraticAlgebra& alg, const NCWord& w,
                                          double rank_tol = 1e-9);

/// Expansion of the class of a word over the Weyl-symmetrized basis
/// { weyl_order(alpha) }, obtained from the sorted-monomial normal form by
/// a filtration-triangular change of basis.
std::map<MultiIndex, Complex> weyl_expansion(const QuadraticAlgebra& alg, const NCWord& w,
                                             double rank_tol = 1e-9);

}  // namespace repdyn

#endif
