#include "repdyn/ncpoly.hpp"

#include <stdexcept>

namespace repdyn {

NCWord make_word(std::initializer_list<int> gens) {
  NCWord w;
  w.reserve(gens.size());
  for (int g : gens) w.push_back(gen_letter(g));
  return w;
}

bool is_plain(const NCWord& w) {
  for (const auto& l : w)
    if (l.gen == 0) return false;
  return true;
}

std::vector<int> plain_letters(const NCWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (l.gen == 0) throw std::invalid_argument("plain_letters: word contains a constant slot");
    out.push_back(l.gen);
  }
  return out;
}

NCPolynomial<Complex> to_complex(const NCPolynomial<Rational>& p) {
  NCPolynomial<Complex> out;
  for (const auto& [w, c] : p.terms) out.add_term(w, Complex(to_double(c), 0.0));
  return out;
}

}  // namespace repdyn
