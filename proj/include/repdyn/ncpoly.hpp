#ifndef REPDYN_NCPOLY_HPP
#define REPDYN_NCPOLY_HPP

#include "repdyn/rational.hpp"

#include <compare>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace repdyn {

using Complex = std::complex<double>;

/// One letter of a word in the free algebra: either a generator e_gen
/// (gen in 1..m) or a constant slot named by a label (gen == 0).
struct NCLetter {
  int gen = 0;
  std::string label;

  friend auto operator<=>(const NCLetter&, const NCLetter&) = default;
};

inline NCLetter gen_letter(int g) { return NCLetter{g, {}}; }
inline NCLetter const_slot(std::string label) { return NCLetter{0, std::move(label)}; }

/// A word over the generators and constant slots; the empty word is the unit.
using NCWord = std::vector<NCLetter>;

NCWord make_word(std::initializer_list<int> gens);
bool is_plain(const NCWord& w);                 // no constant slots
std::vector<int> plain_letters(const NCWord& w);  // throws on constant slots

template <class Coeff>
inline bool coeff_is_zero(const Coeff& c) {
  return c == Coeff{};
}

/// Finite linear combination of words with coefficients in Coeff
/// (exact Rational for symmetrization, complex<double> elsewhere).
/// Zero coefficients are never stored.
template <class Coeff>
struct NCPolynomial {
  std::map<NCWord, Coeff> terms;

  static NCPolynomial unit() {
    NCPolynomial p;
    p.terms.emplace(NCWord{}, Coeff{1});
    return p;
  }

  static NCPolynomial word(NCWord w, Coeff c = Coeff{1}) {
    NCPolynomial p;
    p.add_term(std::move(w), std::move(c));
    return p;
  }

  bool empty() const { return terms.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [w, c] : terms) d = std::max(d, static_cast<int>(w.size()));
    return d;
  }

  void add_term(NCWord w, Coeff c) {
    auto it = terms.find(w);
    if (it == terms.end()) {
      if (!coeff_is_zero(c)) terms.emplace(std::move(w), std::move(c));
      return;
    }
    it->second += c;
    if (coeff_is_zero(it->second)) terms.erase(it);
  }

  NCPolynomial& operator+=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  NCPolynomial& operator-=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms) add_term(w, Coeff{} - c);
    return *this;
  }
  NCPolynomial& operator*=(const Coeff& s) {
    if (coeff_is_zero(s)) {
      terms.clear();
      return *this;
    }
    for (auto& [w, c] : terms) c *= s;
    return *this;
  }

  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(NCPolynomial a, const Coeff& s) { return a *= s; }
  friend NCPolynomial operator*(const Coeff& s, NCPolynomial a) { return a *= s; }

  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial out;
    for (const auto& [wa, ca] : a.terms)
      for (const auto& [wb, cb] : b.terms) {
        NCWord w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_term(std::move(w), ca * cb);
      }
    return out;
  }

  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) {
    return a.terms == b.terms;
  }
};

NCPolynomial<Complex> to_complex(const NCPolynomial<Rational>& p);

}  // namespace repdyn

#endif
