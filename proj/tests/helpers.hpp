#pragma once

#include <doctest.h>

#include <random>

#include "sasprod/bismut.hpp"
#include "sasprod/report.hpp"

namespace tst {

using namespace sasprod;

inline Scalar rq(long num, long den = 1) { return Scalar::rational(num, den); }

/// Deterministic small-rational generator for property tests.
struct RandomRational {
  std::mt19937_64 rng;
  explicit RandomRational(unsigned seed) : rng(seed) {}
  Scalar next(bool nonzero = false) {
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 4);
    long n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    return Scalar::rational(n, den(rng));
  }
};

inline ProductHermitian product_of(const std::string& f1,
                                   const std::string& f2, const Scalar& a,
                                   const Scalar& b,
                                   Backend bk = Backend::Exact) {
  return build_product(catalog(f1, bk), catalog(f2, bk), a, b);
}

inline std::vector<Scalar> d_basis(const SasakiStructure& s, int i) {
  return s.project_d(basis_vector(s.dim(), i, s.backend()));
}

}  // namespace tst
