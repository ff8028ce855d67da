#include "repdyn/pbw.hpp"

#include "repdyn/rational.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <variant>

namespace repdyn {

namespace {

constexpr std::size_t kMaxSliceWords = 200000;
constexpr std::size_t kMaxRows = 400000;

std::uint64_t encode_word(const std::vector<int>& w, int m) {
  std::uint64_t code = 0;
  for (int g : w) code = code * static_cast<std::uint64_t>(m + 1) + static_cast<std::uint64_t>(g);
  return code;
}

bool is_sorted_word(const std::vector<int>& w) {
  return std::is_sorted(w.begin(), w.end());
}

/// Columns of the elimination, ordered degree-descending with non-sorted
/// words ahead of sorted ones inside each degree.
struct WordTable {
  int m = 0;
  int d = 0;
  std::vector<std::vector<int>> words;
  std::vector<int> degree_of;
  std::vector<char> sorted_of;
  std::unordered_map<std::uint64_t, int> col_of;
  std::vector<int> words_upto;  // cumulative word count per filtration degree

  WordTable(int m_in, int d_in) : m(m_in), d(d_in) {
    std::size_t total = 0, pow = 1;
    words_upto.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k) {
      total += pow;
      words_upto[static_cast<std::size_t>(k)] = static_cast<int>(total);
      pow *= static_cast<std::size_t>(m);
      if (total > kMaxSliceWords)
        throw SliceTooLargeError("slice too large: m=" + std::to_string(m) +
                                 ", degree=" + std::to_string(d));
    }

    words.reserve(total);
    words.emplace_back();
    std::vector<int> w;
    for (int len = 1; len <= d; ++len) {
      w.assign(static_cast<std::size_t>(len), 1);
      while (true) {
        words.push_back(w);
        int pos = len - 1;
        while (pos >= 0 && w[static_cast<std::size_t>(pos)] == m) {
          w[static_cast<std::size_t>(pos)] = 1;
          --pos;
        }
        if (pos < 0) break;
        ++w[static_cast<std::size_t>(pos)];
      }
    }

    std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      bool sa = is_sorted_word(a), sb = is_sorted_word(b);
      if (sa != sb) return !sa;
      return a < b;
    });

    degree_of.resize(words.size());
    sorted_of.resize(words.size());
    col_of.reserve(words.size() * 2);
    for (std::size_t c = 0; c < words.size(); ++c) {
      degree_of[c] = static_cast<int>(words[c].size());
      sorted_of[c] = is_sorted_word(words[c]) ? 1 : 0;
      col_of.emplace(encode_word(words[c], m), static_cast<int>(c));
    }
  }

  int column(const std::vector<int>& w) const {
    auto it = col_of.find(encode_word(w, m));
    if (it == col_of.end()) throw std::invalid_argument("word outside the slice");
    return it->second;
  }
};

template <class F>
struct Ops;

template <>
struct Ops<Complex> {
  static bool zero(const Complex& v, double tol_abs) { return std::abs(v) <= tol_abs; }
};

template <>
struct Ops<GaussianRational> {
  static bool zero(const GaussianRational& v, double) { return v.is_zero(); }
};

template <class F>
using Row = std::map<int, F>;

template <class F>
void subtract_scaled(Row<F>& row, const Row<F>& pivot_row, const F& factor, double tol_abs) {
  for (const auto& [col, val] : pivot_row) {
    auto it = row.find(col);
    if (it == row.end()) {
      F nv = F{} - factor * val;
      if (!Ops<F>::zero(nv, tol_abs)) row.emplace(col, std::move(nv));
    } else {
      it->second = it->second - factor * val;
      if (Ops<F>::zero(it->second, tol_abs)) row.erase(it);
    }
  }
}

template <class F>
struct Echelon {
  double tol_abs = 0.0;
  std::map<int, Row<F>> pivots;  // leading column -> normalized row

  void reduce_full(Row<F>& row) const {
    auto it = row.begin();
    while (it != row.end()) {
      if (Ops<F>::zero(it->second, tol_abs)) {
        it = row.erase(it);
        continue;
      }
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      const int col = it->first;
      F factor = it->second;
      subtract_scaled(row, p->second, factor, tol_abs);
      it = row.lower_bound(col);
    }
  }

  bool insert(Row<F> row) {
    reduce_full(row);
    if (row.empty()) return false;
    F lead = row.begin()->second;
    for (auto& [c, v] : row) v = v / lead;
    pivots.emplace(row.begin()->first, std::move(row));
    return true;
  }

  // Full reduction of every pivot row against the others (reduced echelon
  // form); pivot rows then touch no pivot column but their own.
  void back_substitute() {
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Row<F>& row = it->second;
      auto kt = std::next(row.begin());
      while (kt != row.end()) {
        auto p = pivots.find(kt->first);
        if (p == pivots.end()) {
          ++kt;
          continue;
        }
        const int col = kt->first;
        F factor = kt->second;
        subtract_scaled(row, p->second, factor, tol_abs);
        kt = row.lower_bound(col);
      }
    }
  }
};

template <class F>
struct GeneratorTerm {
  std::vector<int> word;
  F coeff;
};

/// Builds and eliminates all translates w1 * g * w2 of total degree <= d.
template <class F>
Echelon<F> eliminate(const WordTable& tab,
                     const std::vector<std::vector<GeneratorTerm<F>>>& gens, double tol_abs) {
  Echelon<F> ech;
  ech.tol_abs = tol_abs;

  std::size_t row_count = 0;
  for (const auto& g : gens) {
    if (g.empty()) continue;
    int top = 0;
    for (const auto& t : g) top = std::max(top, static_cast<int>(t.word.size()));
    if (top > tab.d) continue;

    const int budget = tab.d - top;
    for (int len = 0; len <= budget; ++len) {
      for (int left = 0; left <= len; ++left) {
        const int right = len - left;
        // odometer over (w1, w2) pairs, w1 lex-major
        std::vector<int> w1(static_cast<std::size_t>(left), 1);
        while (true) {
          std::vector<int> w2(static_cast<std::size_t>(right), 1);
          while (true) {
            if (++row_count > kMaxRows)
              throw SliceTooLargeError("slice too large: generator translate count");
            Row<F> row;
            for (const auto& t : g) {
              std::vector<int> w = w1;
              w.insert(w.end(), t.word.begin(), t.word.end());
              w.insert(w.end(), w2.begin(), w2.end());
              const int col = tab.column(w);
              auto [it, inserted] = row.try_emplace(col, t.coeff);
              if (!inserted) {
                it->second += t.coeff;
                if (Ops<F>::zero(it->second, tol_abs)) row.erase(it);
              }
            }
            ech.insert(std::move(row));
            int pos = right - 1;
            while (pos >= 0 && w2[static_cast<std::size_t>(pos)] == tab.m) {
              w2[static_cast<std::size_t>(pos)] = 1;
              --pos;
            }
            if (pos < 0) break;
            ++w2[static_cast<std::size_t>(pos)];
          }
          int pos = left - 1;
          while (pos >= 0 && w1[static_cast<std::size_t>(pos)] == tab.m) {
            w1[static_cast<std::size_t>(pos)] = 1;
            --pos;
          }
          if (pos < 0) break;
          ++w1[static_cast<std::size_t>(pos)];
        }
      }
    }
  }
  ech.back_substitute();
  return ech;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

MultiIndex exponents_of(const std::vector<int>& word, int m) {
  MultiIndex a(static_cast<std::size_t>(m), 0);
  for (int g : word) ++a[static_cast<std::size_t>(g - 1)];
  return a;
}

void enumerate_multiindices(int m, int deg, std::vector<MultiIndex>& out) {
  MultiIndex cur(static_cast<std::size_t>(m), 0);
  // lexicographic enumeration of compositions of deg into m parts
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == m - 1) {
      cur[static_cast<std::size_t>(pos)] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, rest - v);
    }
  };
  rec(0, deg);
}

}  // namespace

struct SliceBasis::Impl {
  WordTable tab;
  std::variant<Echelon<Complex>, Echelon<GaussianRational>> ech;
  std::vector<int> quotient_dims;
  bool sorted_free = true;
  bool exact = false;

  Impl(int m, int d) : tab(m, d) {}
};

SliceBasis::SliceBasis(int m, int degree, const std::vector<NCPolynomial<Complex>>& generators,
                       double rank_tol) {
  if (m < 1) throw std::invalid_argument("SliceBasis: m >= 1 required");
  if (degree < 0) throw std::invalid_argument("SliceBasis: degree >= 0 required");

  auto impl = std::make_shared<Impl>(m, degree);

  // Validate generators and collect terms; try exact reconstruction.
  std::vector<std::vector<GeneratorTerm<Complex>>> cgens;
  std::vector<std::vector<GeneratorTerm<GaussianRational>>> qgens;
  bool exact = true;
  double scale = 0.0;
  for (const auto& g : generators) {
    std::vector<GeneratorTerm<Complex>> cg;
    std::vector<GeneratorTerm<GaussianRational>> qg;
    for (const auto& [w, c] : g.terms) {
      std::vector<int> letters = plain_letters(w);
      for (int l : letters)
        if (l > m) throw std::invalid_argument("SliceBasis: generator letter exceeds m");
      scale = std::max(scale, std::abs(c));
      cg.push_back({letters, c});
      if (exact) {
        auto q = reconstruct_gaussian(c);
        if (q)
          qg.push_back({std::move(letters), std::move(*q)});
        else
          exact = false;
      }
    }
    cgens.push_back(std::move(cg));
    if (exact) qgens.push_back(std::move(qg));
  }

  impl->exact = exact;
  if (exact) {
    impl->ech = eliminate<GaussianRational>(impl->tab, qgens, 0.0);
  } else {
    impl->ech = eliminate<Complex>(impl->tab, cgens, rank_tol * scale);
  }

  // Pivot census: quotient dims per filtration degree and pivot placement.
  std::vector<int> pivots_by_degree(static_cast<std::size_t>(degree) + 1, 0);
  auto census = [&](const auto& ech) {
    for (const auto& [col, row] : ech.pivots) {
      ++pivots_by_degree[static_cast<std::size_t>(impl->tab.degree_of[static_cast<std::size_t>(col)])];
      if (impl->tab.sorted_of[static_cast<std::size_t>(col)]) impl->sorted_free = false;
    }
  };
  std::visit(census, impl->ech);

  impl->quotient_dims.resize(static_cast<std::size_t>(degree) + 1);
  int cum = 0;
  for (int k = 0; k <= degree; ++k) {
    cum += pivots_by_degree[static_cast<std::size_t>(k)];
    impl->quotient_dims[static_cast<std::size_t>(k)] =
        impl->tab.words_upto[static_cast<std::size_t>(k)] - cum;
  }

  impl_ = std::move(impl);
}

int SliceBasis::m() const { return impl_->tab.m; }
int SliceBasis::degree() const { return impl_->tab.d; }
bool SliceBasis::exact() const { return impl_->exact; }
const std::vector<int>& SliceBasis::quotient_dims() const { return impl_->quotient_dims; }

std::vector<int> SliceBasis::expected_dims() const {
  std::vector<int> out;
  for (int k = 0; k <= degree(); ++k)
    out.push_back(static_cast<int>(binomial(m() + k, k)));
  return out;
}

bool SliceBasis::dims_match() const { return quotient_dims() == expected_dims(); }

bool SliceBasis::sorted_monomials_free() const { return impl_->sorted_free; }

namespace {

template <class F>
std::map<MultiIndex, Complex> finish_reduce(const WordTable& tab, const Echelon<F>& ech,
                                            Row<F> row, bool sorted_free) {
  ech.reduce_full(row);
  std::map<MultiIndex, Complex> out;
  for (const auto& [col, val] : row) {
    if (!tab.sorted_of[static_cast<std::size_t>(col)] || !sorted_free)
      throw BasisCollapseError("basis collapse: sorted monomials are not a basis at degree " +
                               std::to_string(tab.d));
    Complex cv;
    if constexpr (std::is_same_v<F, GaussianRational>)
      cv = val.to_complex();
    else
      cv = val;
    out.emplace(exponents_of(tab.words[static_cast<std::size_t>(col)], tab.m), cv);
  }
  return out;
}

}  // namespace

std::map<MultiIndex, Complex> SliceBasis::reduce(const NCWord& w) const {
  NCPolynomial<Complex> p;
  p.add_term(w, Complex(1, 0));
  return reduce(p);
}

std::map<MultiIndex, Complex> SliceBasis::reduce(const NCPolynomial<Complex>& p) const {
  const auto& tab = impl_->tab;
  if (p.degree() > tab.d)
    throw std::invalid_argument("SliceBasis::reduce: polynomial degree exceeds the slice");

  if (impl_->exact) {
    bool convertible = true;
    Row<GaussianRational> row;
    for (const auto& [w, c] : p.terms) {
      auto q = reconstruct_gaussian(c);
      if (!q) {
        convertible = false;
        break;
      }
      const int col = tab.column(plain_letters(w));
      auto [it, ins] = row.try_emplace(col, *q);
      if (!ins) it->second += *q;
    }
    if (convertible)
      return finish_reduce(tab, std::get<Echelon<GaussianRational>>(impl_->ech), std::move(row),
                           impl_->sorted_free);
    // Fall back to floating arithmetic against converted pivot rows.
    Echelon<Complex> mirror;
    mirror.tol_abs = 1e-14;
    for (const auto& [col, prow] : std::get<Echelon<GaussianRational>>(impl_->ech).pivots) {
      Row<Complex> cr;
      for (const auto& [c2, v] : prow) cr.emplace(c2, v.to_complex());
      mirror.pivots.emplace(col, std::move(cr));
    }
    Row<Complex> row2;
    for (const auto& [w, c] : p.terms) row2.emplace(tab.column(plain_letters(w)), c);
    return finish_reduce(tab, mirror, std::move(row2), impl_->sorted_free);
  }

  Row<Complex> row;
  for (const auto& [w, c] : p.terms) {
    const int col = tab.column(plain_letters(w));
    auto [it, ins] = row.try_emplace(col, c);
    if (!ins) it->second += c;
  }
  return finish_reduce(tab, std::get<Echelon<Complex>>(impl_->ech), std::move(row),
                       impl_->sorted_free);
}

PbwReport pbw_check(const QuadraticAlgebra& alg, int degree) {
  if (degree < 2) throw std::invalid_argument("pbw_check: degree >= 2 required");
  SliceBasis basis(alg.m, degree, relation_polynomials(alg));
  PbwReport report;
  report.degree = degree;
  report.quotient_dims = basis.quotient_dims();
  report.expected_dims = basis.expected_dims();
  report.pass = basis.dims_match();
  return report;
}

std::map<MultiIndex, Complex> reduce_word(const QuadraticAlgebra& alg, const NCWord& w,
                                          double rank_tol) {
  const int d = std::max<int>(2, static_cast<int>(w.size()));
  SliceBasis basis(alg.m, d, relation_polynomials(alg), rank_tol);
  if (!basis.dims_match())
    throw BasisCollapseError("basis collapse: pbw_check fails at degree " + std::to_string(d));
  return basis.reduce(w);
}

std::map<MultiIndex, Complex> weyl_expansion(const QuadraticAlgebra& alg, const NCWord& w,
                                             double rank_tol) {
  const int d = std::max<int>(2, static_cast<int>(w.size()));
  SliceBasis basis(alg.m, d, relation_polynomials(alg), rank_tol);
  if (!basis.dims_match())
    throw BasisCollapseError("basis collapse: pbw_check fails at degree " + std::to_string(d));

  std::map<MultiIndex, Complex> target = basis.reduce(w);
  std::map<MultiIndex, Complex> out;

  for (int deg = static_cast<int>(w.size()); deg >= 0; --deg) {
    std::vector<MultiIndex> alphas;
    enumerate_multiindices(alg.m, deg, alphas);

    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(alphas.size()));
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      auto it = target.find(alphas[i]);
      if (it != target.end()) v(static_cast<Eigen::Index>(i)) = it->second;
    }
    if (v.norm() <= 1e-13) continue;

    // Normal forms of the symmetrized basis elements of this degree.
    std::vector<std::map<MultiIndex, Complex>> forms(alphas.size());
    Eigen::MatrixXcd top =
        Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(alphas.size()),
                               static_cast<Eigen::Index>(alphas.size()));
    for (std::size_t jcol = 0; jcol < alphas.size(); ++jcol) {
      forms[jcol] = basis.reduce(to_complex(weyl_order(alphas[jcol])));
      for (std::size_t irow = 0; irow < alphas.size(); ++irow) {
        auto it = forms[jcol].find(alphas[irow]);
        if (it != forms[jcol].end())
          top(static_cast<Eigen::Index>(irow), static_cast<Eigen::Index>(jcol)) = it->second;
      }
    }

    Eigen::VectorXcd coeffs = top.fullPivLu().solve(v);
    for (std::size_t jcol = 0; jcol < alphas.size(); ++jcol) {
      const Complex c = coeffs(static_cast<Eigen::Index>(jcol));
      if (std::abs(c) <= 1e-12) continue;
      out[alphas[jcol]] = c;
      for (const auto& [a, val] : forms[jcol]) {
        auto [it, ins] = target.try_emplace(a, -c * val);
        if (!ins) it->second -= c * val;
      }
    }
  }
  return out;
}

}  // namespace repdyn
