#include "qspectra/ratfun.hpp"

#include "qspectra/errors.hpp"

namespace qspectra {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  const auto& lead = den.leading();
  bool pure_q_power = den.is_monomial();
  for (int s = 1; s < kSlots && pure_q_power; ++s) pure_q_power = lead.mono.exp[s] == 0;
  if (pure_q_power) {
    // c*q^d is a unit of the coefficient ring; fold it into the numerator.
    Monomial inv = Monomial::of(VarId::q(), -lead.mono.exp[0]);
    num_ = num.shifted(inv).scaled(1 / lead.coeff);
    den_ = MultiPoly(1);
    return;
  }
  if (lead.coeff != 1) {
    BigRational inv = 1 / lead.coeff;
    num_ = num.scaled(inv);
    den_ = den.scaled(inv);
  } else {
    num_ = std::move(num);
    den_ = std::move(den);
  }
}

std::optional<MultiPoly> RationalFunction::cleared() const {
  if (den_.is_one()) return num_;
  return divide_exact(num_, den_);
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return {den_, num_};
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_ == o.den_) {
    MultiPoly n = num_ + o.num_;
    if (n.is_zero()) return *this = RationalFunction();
    num_ = std::move(n);
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    if (num_.is_zero()) den_ = MultiPoly(1);
    return *this;
  }
  if (den_.is_one()) {
    MultiPoly n = num_ * o.den_ + o.num_;
    return *this = RationalFunction(std::move(n), o.den_);
  }
  return *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) return *this = RationalFunction();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  return *this = RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

bool operator==(const RationalFunction& a, const RationalFunction& b) { return ratfun_eq(a, b); }

std::string RationalFunction::to_string(std::size_t max_terms) const {
  if (den_.is_one()) return num_.to_string(max_terms);
  return "(" + num_.to_string(max_terms) + ")/(" + den_.to_string(max_terms) + ")";
}

bool ratfun_eq(const RationalFunction& a, const RationalFunction& b) {
  if (a.den() == b.den()) return a.num() == b.num();
  return a.num() * b.den() == b.num() * a.den();
}

MultiPoly cleared_difference(const RationalFunction& a, const RationalFunction& b) {
  if (a.den() == b.den()) return a.num() - b.num();
  return a.num() * b.den() - b.num() * a.den();
}

RationalFunction pow(const RationalFunction& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  if (base.has_unit_denominator()) return RationalFunction(pow(base.num(), static_cast<unsigned>(exponent)));
  return {pow(base.num(), static_cast<unsigned>(exponent)), pow(base.den(), static_cast<unsigned>(exponent))};
}

RationalFunction specialize(const RationalFunction& f, const Point& point) {
  if (point.empty()) return f;
  MultiPoly den = specialize(f.den(), point);
  if (den.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "denominator vanishes at sample point");
  return {specialize(f.num(), point), std::move(den)};
}

RationalFunction substitute(const RationalFunction& f, VarId v, const RationalFunction& value) {
  // Substitute into num and den over a common denominator of value.
  const int dn = f.num().max_exponent(v);
  const int dd = f.den().max_exponent(v);
  const int top = std::max(dn, dd);
  auto homogenized = [&](const MultiPoly& p) {
    // sum_e c_e * value.num^e * value.den^(top - e)
    MultiPoly out;
    for (int e = 0; e <= top; ++e) {
      MultiPoly c = p.coefficient_of(v, e);
      if (c.is_zero()) continue;
      out += c * pow(value.num(), e) * pow(value.den(), top - e);
    }
    return out;
  };
  if (f.num().min_exponent(v) < 0 || f.den().min_exponent(v) < 0) {
    throw Error(ErrorCode::InvalidArgument, "substitute: negative exponent of " + v.name());
  }
  MultiPoly den = homogenized(f.den());
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "substitution makes the denominator vanish");
  return {homogenized(f.num()), std::move(den)};
}

RationalFunction diff_univar(const RationalFunction& f, VarId v) {
  if (v.kind != VarKind::FORMAL) throw Error(ErrorCode::NotFormalVariable, v.name());
  if (!f.den().depends_on(v)) return {derivative(f.num(), v), f.den()};
  MultiPoly num = derivative(f.num(), v) * f.den() - f.num() * derivative(f.den(), v);
  return {std::move(num), f.den() * f.den()};
}

RationalFunction diff_univar_n(const RationalFunction& f, VarId v, int k) {
  if (v.kind != VarKind::FORMAL) throw Error(ErrorCode::NotFormalVariable, v.name());
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative derivative order");
  const MultiPoly& d = f.den();
  if (!d.depends_on(v)) {
    MultiPoly n = f.num();
    for (int i = 0; i < k; ++i) n = derivative(n, v);
    return {std::move(n), d};
  }
  const MultiPoly dprime = derivative(d, v);
  MultiPoly n = f.num();
  for (int j = 0; j < k; ++j) {
    n = derivative(n, v) * d - MultiPoly(j + 1) * n * dprime;
  }
  return {std::move(n), pow(d, static_cast<unsigned>(k + 1))};
}

}  // namespace qspectra
