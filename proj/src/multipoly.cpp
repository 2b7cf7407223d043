#include "qspectra/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "qspectra/errors.hpp"

namespace qspectra {

std::string to_string(const BigRational& r) { return r.get_str(); }

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::of(VarId v, int e) {
  Monomial m;
  m.exp[v.slot()] = static_cast<std::int16_t>(e);
  m.degree = e;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](std::int16_t e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kSlots; ++i) r.exp[i] = static_cast<std::int16_t>(a.exp[i] + b.exp[i]);
  r.degree = a.degree + b.degree;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree <=> b.degree; c != 0) return c;
  for (int i = 0; i < kSlots; ++i) {
    if (auto c = a.exp[i] <=> b.exp[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : m.exp) {
    h ^= static_cast<std::uint16_t>(e);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---- Point ------------------------------------------------------------------

void Point::set(VarId v, BigRational value) {
  values_[v.slot()] = std::move(value);
  assigned_[v.slot()] = true;
}

void Point::erase(VarId v) { assigned_[v.slot()] = false; }

const BigRational& Point::get(VarId v) const {
  if (!has(v)) throw Error(ErrorCode::MissingAssignment, v.name());
  return values_[v.slot()];
}

bool Point::empty() const {
  return std::none_of(assigned_.begin(), assigned_.end(), [](bool b) { return b; });
}

// ---- MultiPoly --------------------------------------------------------------

MultiPoly::MultiPoly(long c) : MultiPoly(BigRational(c)) {}

MultiPoly::MultiPoly(const BigRational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::var(VarId v, int exponent) { return monomial(1, Monomial::of(v, exponent)); }

MultiPoly MultiPoly::monomial(const BigRational& c, const Monomial& m) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::optional<BigRational> MultiPoly::constant_value() const {
  if (terms_.empty()) return BigRational(0);
  if (is_constant()) return terms_[0].coeff;
  return std::nullopt;
}

bool MultiPoly::depends_on(VarId v) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[v] != 0; });
}

int MultiPoly::max_exponent(VarId v) const {
  int best = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.mono[v] > best) best = t.mono[v];
    first = false;
  }
  return best;
}

int MultiPoly::min_exponent(VarId v) const {
  int best = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.mono[v] < best) best = t.mono[v];
    first = false;
  }
  return best;
}

MultiPoly MultiPoly::coefficient_of(VarId v, int e) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[v] != e) continue;
    Term r = t;
    r.mono.exp[v.slot()] = 0;
    r.mono.degree -= e;
    out.push_back(std::move(r));
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two descending term lists; sign = -1 subtracts b.
std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a,
                                   const std::vector<MultiPoly::Term>& b, int sign) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : BigRational(-b[j].coeff)});
      ++j;
    } else {
      BigRational c = sign > 0 ? BigRational(a[i].coeff + b[j].coeff) : BigRational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

MultiPoly MultiPoly::scaled(const BigRational& c) const {
  if (c == 0) return {};
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::shifted(const Monomial& m) const {
  // Multiplication by a monomial preserves the graded-lex order.
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.shifted(a.terms_[0].mono).scaled(a.terms_[0].coeff);
  if (b.is_monomial()) return a.shifted(b.terms_[0].mono).scaled(b.terms_[0].coeff);

  std::unordered_map<Monomial, BigRational, MonomialHash> acc;
  acc.reserve(a.size() * b.size() / 2 + 16);
  BigRational prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(ta.mono * tb.mono);
      if (inserted) {
        it->second = prod;
      } else {
        mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), prod.get_mpq_t());
      }
    }
  }
  MultiPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [mono, coeff] : acc) {
    if (coeff != 0) r.terms_.push_back({mono, std::move(coeff)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const MultiPoly::Term& x, const MultiPoly::Term& y) { return x.mono > y.mono; });
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r -= b;
  return r;
}

namespace {

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (int s = 0; s < kSlots; ++s) {
    if (m.exp[s] == 0) continue;
    if (!out.empty()) out += '*';
    out += VarId::from_slot(s).name();
    if (m.exp[s] != 1) out += "^" + std::to_string(m.exp[s]);
  }
  return out;
}

}  // namespace

std::string MultiPoly::to_string(std::size_t max_terms) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& t : terms_) {
    if (max_terms != 0 && shown == max_terms) break;
    std::string body;
    bool negative = t.coeff < 0;
    BigRational mag = negative ? BigRational(-t.coeff) : t.coeff;
    if (t.mono.is_one()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = render_monomial(t.mono);
    } else {
      body = mag.get_str() + "*" + render_monomial(t.mono);
    }
    if (shown == 0) {
      os << (negative ? "-" : "") << body;
    } else {
      os << (negative ? " - " : " + ") << body;
    }
    ++shown;
  }
  if (shown < terms_.size()) os << " + ... (" << (terms_.size() - shown) << " more terms)";
  return os.str();
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result(1);
  MultiPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

namespace {

// Caches integer powers of one rational value, including negative ones.
class PowerTable {
 public:
  explicit PowerTable(const BigRational& base, VarId v) : base_(base), v_(v) {}

  const BigRational& get(int e) {
    if (e < 0) {
      if (base_ == 0) throw Error(ErrorCode::ZeroBaseNegativeExponent, v_.name());
      if (neg_.empty()) neg_.push_back(1);
      while (static_cast<int>(neg_.size()) <= -e) neg_.push_back(neg_.back() / base_);
      return neg_[-e];
    }
    if (pos_.empty()) pos_.push_back(1);
    while (static_cast<int>(pos_.size()) <= e) pos_.push_back(pos_.back() * base_);
    return pos_[e];
  }

 private:
  BigRational base_;
  VarId v_;
  std::vector<BigRational> pos_;
  std::vector<BigRational> neg_;
};

}  // namespace

BigRational poly_eval(const MultiPoly& p, const Point& point) {
  std::vector<std::optional<PowerTable>> tables(kSlots);
  BigRational sum = 0;
  for (const auto& t : p.terms()) {
    BigRational value = t.coeff;
    for (int s = 0; s < kSlots; ++s) {
      if (t.mono.exp[s] == 0) continue;
      VarId v = VarId::from_slot(s);
      if (!tables[s]) tables[s].emplace(point.get(v), v);
      value *= tables[s]->get(t.mono.exp[s]);
    }
    sum += value;
  }
  return sum;
}

MultiPoly specialize(const MultiPoly& p, const Point& point) {
  if (point.empty()) return p;
  std::vector<std::optional<PowerTable>> tables(kSlots);
  std::vector<MultiPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    MultiPoly::Term r{t.mono, t.coeff};
    for (int s = 0; s < kSlots; ++s) {
      if (t.mono.exp[s] == 0) continue;
      VarId v = VarId::from_slot(s);
      if (!point.has(v)) continue;
      if (!tables[s]) tables[s].emplace(point.get(v), v);
      r.coeff *= tables[s]->get(t.mono.exp[s]);
      r.mono.degree -= r.mono.exp[s];
      r.mono.exp[s] = 0;
    }
    out.push_back(std::move(r));
  }
  return MultiPoly::from_terms(std::move(out));
}

MultiPoly substitute(const MultiPoly& p, VarId v, const MultiPoly& value) {
  if (p.min_exponent(v) < 0) {
    throw Error(ErrorCode::InvalidArgument, "substitute: negative exponent of " + v.name());
  }
  std::map<int, std::vector<MultiPoly::Term>> by_exp;
  for (const auto& t : p.terms()) {
    MultiPoly::Term r = t;
    int e = r.mono.exp[v.slot()];
    r.mono.exp[v.slot()] = 0;
    r.mono.degree -= e;
    by_exp[e].push_back(std::move(r));
  }
  MultiPoly result;
  MultiPoly power(1);
  int current = 0;
  for (auto& [e, terms] : by_exp) {
    while (current < e) {
      power *= value;
      ++current;
    }
    result += MultiPoly::from_terms(std::move(terms)) * power;
  }
  return result;
}

MultiPoly derivative(const MultiPoly& p, VarId v) {
  std::vector<MultiPoly::Term> out;
  for (const auto& t : p.terms()) {
    int e = t.mono[v];
    if (e == 0) continue;
    MultiPoly::Term r = t;
    r.coeff *= e;
    r.mono.exp[v.slot()] = static_cast<std::int16_t>(e - 1);
    r.mono.degree -= 1;
    out.push_back(std::move(r));
  }
  return MultiPoly::from_terms(std::move(out));
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "divide_exact by zero polynomial");
  if (a.is_zero()) return MultiPoly();
  if (b.is_monomial()) {
    const auto& bt = b.leading();
    Monomial inv;
    for (int s = 0; s < kSlots; ++s) inv.exp[s] = static_cast<std::int16_t>(-bt.mono.exp[s]);
    inv.degree = -bt.mono.degree;
    MultiPoly q = a.shifted(inv).scaled(1 / bt.coeff);
    for (const auto& t : q.terms()) {
      for (int s = 1; s < kSlots; ++s) {
        if (t.mono.exp[s] < 0) return std::nullopt;
      }
    }
    return q;
  }

  // q is a unit: shift both sides so their lowest q-power is q^0. The
  // quotient then has lowest q-power q^0 as well and the division runs over
  // an ordinary polynomial ring where graded-lex is a well-order.
  const VarId qv = VarId::q();
  const int sa = -a.min_exponent(qv);
  const int sb = -b.min_exponent(qv);
  MultiPoly r = a.shifted(Monomial::of(qv, sa));
  const MultiPoly bb = b.shifted(Monomial::of(qv, sb));
  const auto& lt = bb.leading();
  std::vector<MultiPoly::Term> quotient;
  while (!r.is_zero()) {
    const auto& rt = r.leading();
    Monomial m;
    for (int s = 0; s < kSlots; ++s) {
      int e = rt.mono.exp[s] - lt.mono.exp[s];
      if (e < 0) return std::nullopt;
      m.exp[s] = static_cast<std::int16_t>(e);
    }
    m.degree = rt.mono.degree - lt.mono.degree;
    BigRational c = rt.coeff / lt.coeff;
    quotient.push_back({m, c});
    r -= bb.shifted(m).scaled(c);
  }
  return MultiPoly::from_terms(std::move(quotient)).shifted(Monomial::of(qv, sb - sa));
}

}  // namespace qspectra
