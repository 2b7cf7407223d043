#pragma once

#include <random>

#include "qspectra/multipoly.hpp"
#include "qspectra/ratfun.hpp"

namespace qt {

using namespace qspectra;

inline MultiPoly Q(int e = 1) { return MultiPoly::var(VarId::q(), e); }
inline MultiPoly MU(int i, int e = 1) { return MultiPoly::var(VarId::mu(i - 1), e); }
inline MultiPoly NU(int j, int e = 1) { return MultiPoly::var(VarId::nu(j - 1), e); }
inline MultiPoly T(int e = 1) { return MultiPoly::var(VarId::t(), e); }
inline MultiPoly Y(int e = 1) { return MultiPoly::var(VarId::y(), e); }
inline MultiPoly Z(int e = 1) { return MultiPoly::var(VarId::z(), e); }

inline BigRational rat(long n, long d = 1) {
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

// Small random polynomials in q^{+-1}, mu1, mu2, nu1 with integer coefficients.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  MultiPoly poly(int max_terms = 4, int max_exp = 2) {
    MultiPoly out;
    const int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i) {
      MultiPoly term(uniform(-5, 5));
      term *= Q(uniform(-max_exp, max_exp));
      term *= MU(1, uniform(0, max_exp)) * MU(2, uniform(0, max_exp)) * NU(1, uniform(0, max_exp));
      out += term;
    }
    return out;
  }

  MultiPoly nonzero_poly(int max_terms = 4, int max_exp = 2) {
    for (;;) {
      MultiPoly p = poly(max_terms, max_exp);
      if (!p.is_zero()) return p;
    }
  }

  BigRational value() {
    long num = uniform(-30, 30);
    if (num == 0) num = 1;
    return rat(num, uniform(1, 30));
  }

  Point point() {
    Point p;
    p.set(VarId::q(), value());
    for (int i = 0; i < 2; ++i) p.set(VarId::mu(i), value());
    p.set(VarId::nu(0), value());
    p.set(VarId::y(), value());
    return p;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qt
