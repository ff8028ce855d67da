#ifndef REPDYN_SYMBOL_HPP
#define REPDYN_SYMBOL_HPP

#include "repdyn/matrix.hpp"
#include "repdyn/ncpoly.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace repdyn {

/// Exponent vector over the ambient variables; degree is the entry sum.
using MultiIndex = std::vector<int>;

int degree(const MultiIndex& a);

/// Commutative polynomial f(x_1..x_m; u_1..u_p) with complex coefficients.
/// A term may carry a constant label; labelled terms must have state degree
/// zero and are the ones eligible for promotion to constant matrices.
class WeylSymbol {
 public:
  struct Term {
    MultiIndex state;
    MultiIndex control;
    Complex coeff;
    std::string label;  // empty = plain numeric term
  };

  WeylSymbol() = default;
  WeylSymbol(int m, int p) : m_(m), p_(p) {}

  int m() const { return m_; }
  int p() const { return p_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const MultiIndex& state, const MultiIndex& control, Complex coeff,
                const std::string& label = {});

  std::vector<Term> terms() const;
  bool has_labels() const;

  WeylSymbol& operator+=(const WeylSymbol& o);
  WeylSymbol& operator*=(Complex s);
  friend WeylSymbol operator+(WeylSymbol a, const WeylSymbol& b) { return a += b; }
  friend WeylSymbol operator*(Complex s, WeylSymbol a) { return a *= s; }

  friend bool operator==(const WeylSymbol& a, const WeylSymbol& b) {
    return a.m_ == b.m_ && a.p_ == b.p_ && a.terms_ == b.terms_;
  }

 private:
  using Key = std::tuple<MultiIndex, MultiIndex, std::string>;
  int m_ = 0;
  int p_ = 0;
  std::map<Key, Complex> terms_;
};

/// Average over all distinct orderings of the word with alpha_i copies of
/// letter i. Coefficients are exact rationals, (prod alpha_i!) / |alpha|!
/// each; they sum to one. The zero multi-index gives the unit word.
NCPolynomial<Rational> weyl_order(const MultiIndex& alpha);

enum class ConstMode { Scalar, Matrix };

/// Weyl quantization of a symbol at fixed control values: the linear
/// extension of weyl_order over state monomials, with control monomials
/// collapsed to numbers. In matrix mode labelled constant terms become
/// constant-slot letters; an unlabelled state-constant term is an error.
NCPolynomial<Complex> quantize_symbol(const WeylSymbol& f, const ComplexVector& u,
                                      ConstMode mode);

/// Evaluates each word as the ordered product of the matrices it names
/// (generators from X, constant slots from consts) and sums with the
/// coefficients. The empty word evaluates to the identity.
ComplexMatrix eval_nc(const NCPolynomial<Complex>& p, const MatrixTuple& x,
                      const std::map<std::string, ComplexMatrix>& consts = {});

/// Plain commutative evaluation of the symbol at scalar arguments.
Complex scalar_restrict(const WeylSymbol& f, const ComplexVector& x, const ComplexVector& u);

/// Collapses a label-free polynomial to its commutative image: each word
/// maps to its exponent vector. Exact rational bookkeeping of the
/// symmetrization weights is the caller's concern; this sums as given.
std::map<MultiIndex, Complex> abelianize(const NCPolynomial<Complex>& p, int m);

}  // namespace repdyn

#endif
