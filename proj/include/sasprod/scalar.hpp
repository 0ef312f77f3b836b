#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace sasprod {

/// Error type for precondition and validation failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Backend { Exact, Float };

/// Epsilon used by the float backend's zero test; overridable through the
/// SASPROD_FLOAT_EPS environment variable. Default 1e-9.
double float_epsilon();

/// Scalar in one of two backends.
///
/// Exact values live in Q or in a quadratic extension Q(sqrt(d)), d a
/// positive non-square rational, stored as rat + coef*sqrt(d). Equality and
/// sign are decided exactly. Values from extensions with different d cannot
/// be combined.
///
/// Float values are doubles carrying the largest magnitude seen along their
/// computation history; x counts as zero when |x| <= eps * (1 + scale).
class Scalar {
public:
  Scalar() : backend_(Backend::Exact) {}

  static Scalar zero(Backend b);
  static Scalar one(Backend b);
  static Scalar integer(long v, Backend b = Backend::Exact);
  static Scalar rational(long num, long den, Backend b = Backend::Exact);
  static Scalar rational(const mpq_class& q);
  /// rat + coef*sqrt(d); folds to a rational when d is a perfect square.
  static Scalar quadratic(const mpq_class& rat, const mpq_class& coef,
                          const mpq_class& d);
  static Scalar floating(double v);

  /// Parses "p", "p/q", or a plain decimal such as "-1.25". Exact parses
  /// stay exact; the float backend converts after the exact parse.
  static Scalar parse(const std::string& text, Backend b = Backend::Exact);

  Backend backend() const { return backend_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar operator*(long k) const;
  Scalar div(long k) const;

  bool is_zero() const;
  bool operator==(const Scalar& o) const { return (*this - o).is_zero(); }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// -1, 0 or +1. Exact for the exact backend (including extension
  /// elements), epsilon-aware for floats.
  int sgn() const;
  bool is_positive() const { return sgn() > 0; }
  bool is_negative() const { return sgn() < 0; }
  bool operator<(const Scalar& o) const { return (*this - o).sgn() < 0; }
  bool operator>(const Scalar& o) const { return (*this - o).sgn() > 0; }

  Scalar inverse() const;
  Scalar abs() const;

  /// Square root. A non-square exact rational yields a representative in
  /// Q(sqrt(d)); sqrt of an extension element is not supported. Negative
  /// input yields nullopt.
  std::optional<Scalar> sqrt() const;

  bool has_extension() const {
    return backend_ == Backend::Exact && coef_ != 0;
  }
  const mpq_class& rational_part() const { return rat_; }
  const mpq_class& extension_coef() const { return coef_; }
  const mpq_class& extension_d() const { return d_; }

  double to_double() const;
  std::string str() const;

private:
  Backend backend_;
  mpq_class rat_{0};
  mpq_class coef_{0};
  mpq_class d_{0};
  double value_ = 0.0;
  double scale_ = 0.0;

  void normalize();
  static Scalar from_float_parts(double v, double scale);
  static mpq_class merged_d(const Scalar& a, const Scalar& b);
  void require_backend(const Scalar& o) const;
};

inline Scalar operator*(long k, const Scalar& s) { return s * k; }

/// True when q is the square of a rational; root receives the root if so.
bool rational_square_root(const mpq_class& q, mpq_class& root);

}  // namespace sasprod
