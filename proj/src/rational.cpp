#include "repdyn/rational.hpp"

#include <cmath>
#include <limits>

namespace repdyn {

double to_double(const Rational& r) { return r.convert_to<double>(); }

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  Rational den = b.re * b.re + b.im * b.im;
  if (den == 0) throw std::domain_error("GaussianRational: division by zero");
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

namespace {

// Exact equality check: does p/q round to exactly x? Safe while |p| < 2^53.
bool rounds_to(const BigInt& p, const BigInt& q, double x) {
  if (p > BigInt(1) << 53 || q > BigInt(1) << 53) return false;
  return p.convert_to<double>() / q.convert_to<double>() == x;
}

}  // namespace

std::optional<Rational> reconstruct_rational(double x, long long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  if (x == 0.0) return Rational(0);
  if (std::abs(x) > 1e12) return std::nullopt;

  const double ax = std::abs(x);
  const Rational target(ax);  // exact dyadic value of the double
  BigInt num = boost::multiprecision::numerator(target);
  BigInt den = boost::multiprecision::denominator(target);

  // Continued-fraction convergents of target.
  BigInt p_prev = 1, p_cur = num / den;
  BigInt q_prev = 0, q_cur = 1;
  BigInt rn = num - p_cur * den, rd = den;  // remainder rn/rd = target - floor

  for (int iter = 0; iter < 128; ++iter) {
    if (q_cur > max_den) return std::nullopt;
    if (rounds_to(p_cur, q_cur, ax)) {
      Rational r(p_cur, q_cur);
      return x < 0 ? -r : r;
    }
    if (rn == 0) return std::nullopt;
    // next CF digit of rd/rn
    BigInt a = rd / rn;
    BigInt p_next = a * p_cur + p_prev;
    BigInt q_next = a * q_cur + q_prev;
    p_prev = p_cur;
    p_cur = p_next;
    q_prev = q_cur;
    q_cur = q_next;
    BigInt new_rn = rd - a * rn;
    rd = rn;
    rn = new_rn;
  }
  return std::nullopt;
}

std::optional<GaussianRational> reconstruct_gaussian(const std::complex<double>& z,
                                                     long long max_den) {
  auto re = reconstruct_rational(z.real(), max_den);
  if (!re) return std::nullopt;
  auto im = reconstruct_rational(z.imag(), max_den);
  if (!im) return std::nullopt;
  return GaussianRational{*re, *im};
}

}  // namespace repdyn
