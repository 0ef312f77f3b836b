#include "sasprod/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace sasprod {

double float_epsilon() {
  static const double eps = [] {
    if (const char* env = std::getenv("SASPROD_FLOAT_EPS")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end != env && v > 0.0) return v;
    }
    return 1e-9;
  }();
  return eps;
}

bool rational_square_root(const mpq_class& q, mpq_class& root) {
  if (sgn(q) < 0) return false;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = mpq_class(rn, rd);
  root.canonicalize();
  return true;
}

Scalar Scalar::zero(Backend b) {
  return b == Backend::Exact ? Scalar() : floating(0.0);
}

Scalar Scalar::one(Backend b) { return integer(1, b); }

Scalar Scalar::integer(long v, Backend b) {
  if (b == Backend::Float) return floating(static_cast<double>(v));
  Scalar s;
  s.rat_ = v;
  return s;
}

Scalar Scalar::rational(long num, long den, Backend b) {
  if (den == 0) throw Error("rational with zero denominator");
  if (b == Backend::Float)
    return floating(static_cast<double>(num) / static_cast<double>(den));
  Scalar s;
  s.rat_ = mpq_class(num, den);
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  s.rat_ = q;
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::quadratic(const mpq_class& rat, const mpq_class& coef,
                         const mpq_class& d) {
  Scalar s;
  s.rat_ = rat;
  s.coef_ = coef;
  s.d_ = d;
  s.rat_.canonicalize();
  s.coef_.canonicalize();
  s.d_.canonicalize();
  if (s.coef_ != 0 && ::sgn(s.d_) <= 0)
    throw Error("quadratic extension requires positive d");
  s.normalize();
  return s;
}

Scalar Scalar::floating(double v) { return from_float_parts(v, std::fabs(v)); }

Scalar Scalar::from_float_parts(double v, double scale) {
  Scalar s;
  s.backend_ = Backend::Float;
  s.value_ = v;
  s.scale_ = scale;
  return s;
}

void Scalar::normalize() {
  if (backend_ != Backend::Exact) return;
  if (coef_ == 0) {
    d_ = 0;
    return;
  }
  mpq_class root;
  if (rational_square_root(d_, root)) {
    rat_ += coef_ * root;
    coef_ = 0;
    d_ = 0;
  }
}

Scalar Scalar::parse(const std::string& text, Backend b) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw Error("empty rational literal");
  mpq_class q;
  const auto dot = t.find('.');
  if (dot != std::string::npos) {
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    const std::size_t frac_len = t.size() - dot - 1;
    mpz_class num, den(1);
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw Error("invalid decimal literal: " + text);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    q = mpq_class(num, den);
  } else {
    if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
      throw Error("invalid rational literal: " + text);
    if (q.get_den() == 0) throw Error("zero denominator in: " + text);
  }
  q.canonicalize();
  if (b == Backend::Float) return floating(q.get_d());
  return rational(q);
}

void Scalar::require_backend(const Scalar& o) const {
  if (backend_ != o.backend_) throw Error("mixed scalar backends");
}

mpq_class Scalar::merged_d(const Scalar& a, const Scalar& b) {
  if (a.coef_ == 0) return b.d_;
  if (b.coef_ == 0) return a.d_;
  if (a.d_ != b.d_) throw Error("mixed quadratic extensions");
  return a.d_;
}

Scalar Scalar::operator-() const {
  if (backend_ == Backend::Float) return from_float_parts(-value_, scale_);
  Scalar s = *this;
  s.rat_ = -s.rat_;
  s.coef_ = -s.coef_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_backend(o);
  if (backend_ == Backend::Float) {
    const double v = value_ + o.value_;
    return from_float_parts(v, std::max({scale_, o.scale_, std::fabs(v)}));
  }
  Scalar s;
  s.d_ = merged_d(*this, o);
  s.rat_ = rat_ + o.rat_;
  s.coef_ = coef_ + o.coef_;
  s.normalize();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_backend(o);
  if (backend_ == Backend::Float) {
    const double v = value_ * o.value_;
    return from_float_parts(v, std::max({scale_, o.scale_, std::fabs(v)}));
  }
  Scalar s;
  s.d_ = merged_d(*this, o);
  s.rat_ = rat_ * o.rat_ + coef_ * o.coef_ * s.d_;
  s.coef_ = rat_ * o.coef_ + coef_ * o.rat_;
  s.normalize();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (backend_ == Backend::Float)
    return from_float_parts(1.0 / value_,
                            std::max(scale_, std::fabs(1.0 / value_)));
  if (coef_ == 0) {
    Scalar s;
    s.rat_ = 1 / rat_;
    return s;
  }
  // 1/(r + c*sqrt(d)) = (r - c*sqrt(d)) / (r^2 - c^2 d); the denominator is
  // nonzero because d is not a rational square.
  mpq_class norm = rat_ * rat_ - coef_ * coef_ * d_;
  Scalar s;
  s.d_ = d_;
  s.rat_ = rat_ / norm;
  s.coef_ = -coef_ / norm;
  s.normalize();
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator*(long k) const {
  return *this * integer(k, backend_);
}

Scalar Scalar::div(long k) const {
  if (k == 0) throw Error("division by zero");
  return *this * rational(1, k, backend_);
}

bool Scalar::is_zero() const {
  if (backend_ == Backend::Float)
    return std::fabs(value_) <= float_epsilon() * (1.0 + scale_);
  return rat_ == 0 && coef_ == 0;
}

int Scalar::sgn() const {
  if (backend_ == Backend::Float) {
    if (is_zero()) return 0;
    return value_ > 0 ? 1 : -1;
  }
  const int sr = ::sgn(rat_);
  const int sc = ::sgn(coef_);
  if (sc == 0) return sr;
  if (sr == 0) return sc;
  if (sr == sc) return sr;
  // Opposite signs: compare r^2 against c^2 d to decide which part wins.
  mpq_class lhs = rat_ * rat_;
  mpq_class rhs = coef_ * coef_ * d_;
  const int c = cmp(lhs, rhs);
  if (c == 0) throw Error("non-square d invariant violated");
  return c > 0 ? sr : sc;
}

Scalar Scalar::abs() const { return sgn() < 0 ? -*this : *this; }

namespace {

// Pulls square factors out of n (trial division, then a perfect-square
// check on the remainder) and returns their square root. Any square
// factor left behind just stays under the radical.
mpz_class extract_square_part(mpz_class& n) {
  mpz_class root(1);
  for (unsigned long p = 2; p <= 1000; ++p) {
    const mpz_class p2 = mpz_class(p) * p;
    while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
      n /= p2;
      root *= p;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    root *= r;
    n = 1;
  }
  return root;
}

}  // namespace

std::optional<Scalar> Scalar::sqrt() const {
  if (backend_ == Backend::Float) {
    if (value_ < 0 && !is_zero()) return std::nullopt;
    const double v = std::sqrt(std::max(value_, 0.0));
    return from_float_parts(v, std::max(scale_, v));
  }
  if (coef_ != 0) throw Error("sqrt of a quadratic-extension element");
  if (::sgn(rat_) < 0) return std::nullopt;
  if (rat_ == 0) return Scalar();
  mpq_class root;
  if (rational_square_root(rat_, root)) return rational(root);
  // p/q with p = a^2 p', q = b^2 q': sqrt(p/q) = a/(b q') * sqrt(p' q').
  mpz_class num = rat_.get_num();
  mpz_class den = rat_.get_den();
  const mpz_class a = extract_square_part(num);
  const mpz_class b = extract_square_part(den);
  mpq_class coef(a, b * den);
  coef.canonicalize();
  return quadratic(0, coef, mpq_class(num * den));
}

double Scalar::to_double() const {
  if (backend_ == Backend::Float) return value_;
  double v = rat_.get_d();
  if (coef_ != 0) v += coef_.get_d() * std::sqrt(d_.get_d());
  return v;
}

std::string Scalar::str() const {
  if (backend_ == Backend::Float) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value_);
    return buf;
  }
  if (coef_ == 0) return rat_.get_str();
  std::string irr;
  if (coef_ == 1)
    irr = "sqrt(" + d_.get_str() + ")";
  else if (coef_ == -1)
    irr = "-sqrt(" + d_.get_str() + ")";
  else
    irr = coef_.get_str() + "*sqrt(" + d_.get_str() + ")";
  if (rat_ == 0) return irr;
  if (::sgn(coef_) > 0) return rat_.get_str() + "+" + irr;
  return rat_.get_str() + irr;
}

}  // namespace sasprod
