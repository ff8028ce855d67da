#include "repdyn/symbol.hpp"

#include <algorithm>
#include <stdexcept>

namespace repdyn {

int degree(const MultiIndex& a) {
  int d = 0;
  for (int e : a) {
    if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    d += e;
  }
  return d;
}

void WeylSymbol::add_term(const MultiIndex& state, const MultiIndex& control, Complex coeff,
                          const std::string& label) {
  if (static_cast<int>(state.size()) != m_)
    throw std::invalid_argument("WeylSymbol: state exponent length != m");
  if (static_cast<int>(control.size()) != p_)
    throw std::invalid_argument("WeylSymbol: control exponent length != p");
  degree(control);
  if (!label.empty() && degree(state) != 0)
    throw std::invalid_argument("WeylSymbol: constant label on a term of positive state degree");
  Key key{state, control, label};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (coeff != Complex(0, 0)) terms_.emplace(std::move(key), coeff);
    return;
  }
  it->second += coeff;
  if (it->second == Complex(0, 0)) terms_.erase(it);
}

std::vector<WeylSymbol::Term> WeylSymbol::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_)
    out.push_back(Term{std::get<0>(key), std::get<1>(key), c, std::get<2>(key)});
  return out;
}

bool WeylSymbol::has_labels() const {
  for (const auto& [key, c] : terms_)
    if (!std::get<2>(key).empty()) return true;
  return false;
}

WeylSymbol& WeylSymbol::operator+=(const WeylSymbol& o) {
  if (m_ != o.m_ || p_ != o.p_) throw std::invalid_argument("WeylSymbol: shape mismatch in sum");
  for (const auto& [key, c] : o.terms_)
    add_term(std::get<0>(key), std::get<1>(key), c, std::get<2>(key));
  return *this;
}

WeylSymbol& WeylSymbol::operator*=(Complex s) {
  if (s == Complex(0, 0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

NCPolynomial<Rational> weyl_order(const MultiIndex& alpha) {
  const int d = degree(alpha);
  if (d == 0) return NCPolynomial<Rational>::unit();

  // Sorted base word with alpha_i copies of letter i.
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < alpha.size(); ++i)
    letters.insert(letters.end(), static_cast<std::size_t>(alpha[i]), static_cast<int>(i) + 1);

  Rational weight(1);
  for (int e : alpha)
    for (int k = 2; k <= e; ++k) weight *= k;
  for (int k = 2; k <= d; ++k) weight /= k;

  NCPolynomial<Rational> out;
  do {
    NCWord w;
    w.reserve(letters.size());
    for (int g : letters) w.push_back(gen_letter(g));
    out.add_term(std::move(w), weight);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

NCPolynomial<Complex> quantize_symbol(const WeylSymbol& f, const ComplexVector& u,
                                      ConstMode mode) {
  if (u.size() != f.p()) throw std::invalid_argument("quantize_symbol: control length != p");

  NCPolynomial<Complex> out;
  for (const auto& term : f.terms()) {
    Complex ctrl(1, 0);
    for (std::size_t j = 0; j < term.control.size(); ++j)
      for (int k = 0; k < term.control[j]; ++k) ctrl *= u(static_cast<Eigen::Index>(j));

    if (degree(term.state) == 0) {
      if (mode == ConstMode::Matrix) {
        if (term.label.empty())
          throw std::invalid_argument("quantize_symbol: unlabeled constant in matrix mode");
        out.add_term(NCWord{const_slot(term.label)}, ctrl);
      } else {
        out.add_term(NCWord{}, term.coeff * ctrl);
      }
      continue;
    }
    const Complex factor = term.coeff * ctrl;
    for (const auto& [w, c] : weyl_order(term.state).terms)
      out.add_term(w, factor * to_double(c));
  }
  return out;
}

ComplexMatrix eval_nc(const NCPolynomial<Complex>& p, const MatrixTuple& x,
                      const std::map<std::string, ComplexMatrix>& consts) {
  const Eigen::Index n = x.dim();
  for (const auto& [label, c] : consts)
    if (c.rows() != n || c.cols() != n)
      throw std::invalid_argument("eval_nc: constant matrix dimension mismatch");

  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  for (const auto& [w, coeff] : p.terms) {
    ComplexMatrix prod = ComplexMatrix::Identity(n, n);
    for (const auto& letter : w) {
      if (letter.gen > 0) {
        if (letter.gen > x.m())
          throw std::invalid_argument("eval_nc: generator index exceeds tuple length");
        prod = prod * x[letter.gen - 1];
      } else {
        auto it = consts.find(letter.label);
        if (it == consts.end())
          throw std::invalid_argument("eval_nc: missing constant matrix for label '" +
                                      letter.label + "'");
        prod = prod * it->second;
      }
    }
    acc += coeff * prod;
  }
  return acc;
}

Complex scalar_restrict(const WeylSymbol& f, const ComplexVector& x, const ComplexVector& u) {
  if (x.size() != f.m()) throw std::invalid_argument("scalar_restrict: state length != m");
  if (u.size() != f.p()) throw std::invalid_argument("scalar_restrict: control length != p");

  Complex acc(0, 0);
  for (const auto& term : f.terms()) {
    Complex v = term.coeff;
    for (std::size_t j = 0; j < term.control.size(); ++j)
      for (int k = 0; k < term.control[j]; ++k) v *= u(static_cast<Eigen::Index>(j));
    for (std::size_t j = 0; j < term.state.size(); ++j)
      for (int k = 0; k < term.state[j]; ++k) v *= x(static_cast<Eigen::Index>(j));
    acc += v;
  }
  return acc;
}

std::map<MultiIndex, Complex> abelianize(const NCPolynomial<Complex>& p, int m) {
  std::map<MultiIndex, Complex> out;
  for (const auto& [w, c] : p.terms) {
    MultiIndex alpha(static_cast<std::size_t>(m), 0);
    for (const auto& letter : w) {
      if (letter.gen == 0 || letter.gen > m)
        throw std::invalid_argument("abelianize: word is not over the m generators");
      ++alpha[static_cast<std::size_t>(letter.gen - 1)];
    }
    auto [it, inserted] = out.try_emplace(std::move(alpha), c);
    if (!inserted) it->second += c;
  }
  return out;
}

}  // namespace repdyn
