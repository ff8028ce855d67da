#include "repdyn/quadratic_algebra.hpp"

#include <stdexcept>

namespace repdyn {

namespace {

void check_pair(int i, int j, int m) {
  if (i < 1 || j <= i || j > m)
    throw std::invalid_argument("QuadraticAlgebra: pair index out of range (need 1 <= i < j <= m)");
}

void check_gen(int k, int m) {
  if (k < 1 || k > m) throw std::invalid_argument("QuadraticAlgebra: generator index out of range");
}

template <class Map, class Key>
void put(Map& map, Key key, Complex v) {
  if (v == Complex(0, 0))
    map.erase(key);
  else
    map[key] = v;
}

}  // namespace

void QuadraticAlgebra::set_a(int i, int j, int k, int l, Complex v) {
  check_pair(i, j, m);
  check_gen(k, m);
  check_gen(l, m);
  if (k > l) throw std::invalid_argument("QuadraticAlgebra: A requires k <= l");
  put(A, std::array<int, 4>{i, j, k, l}, v);
}

void QuadraticAlgebra::set_b(int i, int j, int k, Complex v) {
  check_pair(i, j, m);
  check_gen(k, m);
  put(B, std::array<int, 3>{i, j, k}, v);
}

void QuadraticAlgebra::set_c(int i, int j, Complex v) {
  check_pair(i, j, m);
  put(C, std::array<int, 2>{i, j}, v);
}

Complex QuadraticAlgebra::a(int i, int j, int k, int l) const {
  auto it = A.find({i, j, k, l});
  return it == A.end() ? Complex(0, 0) : it->second;
}

Complex QuadraticAlgebra::b(int i, int j, int k) const {
  auto it = B.find({i, j, k});
  return it == B.end() ? Complex(0, 0) : it->second;
}

Complex QuadraticAlgebra::c(int i, int j) const {
  auto it = C.find({i, j});
  return it == C.end() ? Complex(0, 0) : it->second;
}

std::vector<std::pair<int, int>> generator_pairs(int m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<NCPolynomial<Complex>> relation_polynomials(const QuadraticAlgebra& alg) {
  std::vector<NCPolynomial<Complex>> out;
  for (auto [i, j] : generator_pairs(alg.m)) {
    NCPolynomial<Complex> r;
    r.add_term(make_word({i, j}), Complex(1, 0));
    r.add_term(make_word({j, i}), Complex(-1, 0));
    for (int k = 1; k <= alg.m; ++k)
      for (int l = k; l <= alg.m; ++l) {
        const Complex v = alg.a(i, j, k, l);
        if (v == Complex(0, 0)) continue;
        r.add_term(make_word({k, l}), -0.5 * v);
        r.add_term(make_word({l, k}), -0.5 * v);
      }
    for (int k = 1; k <= alg.m; ++k) {
      const Complex v = alg.b(i, j, k);
      if (v != Complex(0, 0)) r.add_term(make_word({k}), -v);
    }
    const Complex v = alg.c(i, j);
    if (v != Complex(0, 0)) r.add_term(NCWord{}, -v);
    out.push_back(std::move(r));
  }
  return out;
}

QuadraticAlgebra abelian_algebra(int m) { return QuadraticAlgebra(m); }

QuadraticAlgebra so3_algebra() {
  QuadraticAlgebra alg(3);
  alg.set_b(1, 2, 3, Complex(1, 0));
  alg.set_b(2, 3, 1, Complex(1, 0));
  alg.set_b(1, 3, 2, Complex(-1, 0));
  return alg;
}

QuadraticAlgebra sl2_algebra() {
  // Generators (e, f, h): [e,f] = h, [e,h] = -2e, [f,h] = 2f.
  QuadraticAlgebra alg(3);
  alg.set_b(1, 2, 3, Complex(1, 0));
  alg.set_b(1, 3, 1, Complex(-2, 0));
  alg.set_b(2, 3, 2, Complex(2, 0));
  return alg;
}

QuadraticAlgebra heisenberg_algebra() {
  QuadraticAlgebra alg(3);
  alg.set_b(1, 2, 3, Complex(1, 0));
  return alg;
}

QuadraticAlgebra weyl_algebra() {
  QuadraticAlgebra alg(2);
  alg.set_c(1, 2, Complex(1, 0));
  return alg;
}

QuadraticAlgebra broken_jacobi_algebra() {
  // [e1,e2] = e1, [e2,e3] = e2, [e3,e1] = e3; the Jacobi sum is -(e1+e2+e3).
  QuadraticAlgebra alg(3);
  alg.set_b(1, 2, 1, Complex(1, 0));
  alg.set_b(2, 3, 2, Complex(1, 0));
  alg.set_b(1, 3, 3, Complex(-1, 0));
  return alg;
}

}  // namespace repdyn
