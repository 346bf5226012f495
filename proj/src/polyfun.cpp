#include "supercong/polyfun.hpp"

#include <algorithm>
#include <sstream>

namespace supercong {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::x() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

Poly Poly::linear(const Rational& c1, const Rational& c0) { return Poly(std::vector<Rational>{c0, c1}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& x0) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& v : c) v = -v;
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& a) {
  std::vector<Rational> c(a.coeffs_);
  for (auto& v : c) v *= s;
  return Poly(std::move(c));
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1) && i > 0;
    if (!unit) {
      if (i > 0 && !is_integer(mag)) out << "(" << supercong::to_string(mag) << ")";
      else out << supercong::to_string(mag);
    }
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> rem(a.coefficients());
  if (rem.size() <= db) return {Poly(), a};
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  const Rational lead_inv = 1 / bc.back();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const Rational factor = rem[i] * lead_inv;
    quot[i - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= factor * bc[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) {
    throw NotDivisible("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  }
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (1 / a.leading()) * a;
}

Poly pochhammer_poly(const Poly& base, std::uint64_t k) {
  if (base.degree().value_or(0) > 1) throw std::invalid_argument("pochhammer_poly needs a base of degree <= 1");
  Poly result = Poly::constant(Rational(1));
  for (std::uint64_t i = 0; i < k; ++i) {
    result = result * (base + Poly::constant(Rational(static_cast<unsigned long>(i))));
  }
  return result;
}

RatFunc::RatFunc(Poly numerator, Poly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
}

RatFunc RatFunc::normalized() const {
  if (num_.is_zero()) return RatFunc(Poly(), Poly::constant(Rational(1)));
  const Poly g = poly_gcd(num_, den_);
  Poly n = poly_div_exact(num_, g);
  Poly d = poly_div_exact(den_, g);
  const Rational lead = d.leading();
  return RatFunc((1 / lead) * n, (1 / lead) * d);
}

Rational RatFunc::operator()(const Rational& x0) const {
  const Rational d = den_(x0);
  if (d == 0) throw PoleAtPoint("denominator vanishes at x = " + to_string(x0));
  return num_(x0) / d;
}

Rational eval_with_cancellation(const RatFunc& f, const Rational& x0) {
  if (f.numerator().is_zero()) return Rational(0);
  const Poly root = Poly::linear(Rational(1), -x0);
  Poly num = f.numerator();
  Poly den = f.denominator();
  while (true) {
    Poly n_next, d_next;
    try {
      n_next = poly_div_exact(num, root);
      d_next = poly_div_exact(den, root);
    } catch (const NotDivisible&) {
      break;
    }
    num = std::move(n_next);
    den = std::move(d_next);
  }
  return RatFunc(std::move(num), std::move(den))(x0);
}

}  // namespace supercong
