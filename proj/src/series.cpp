#include "qspectra/series.hpp"

#include "qspectra/errors.hpp"

namespace qspectra {

namespace {

void require_formal(VarId v) {
  if (v.kind != VarKind::FORMAL) throw Error(ErrorCode::NotFormalVariable, v.name());
}

}  // namespace

TruncatedSeries::TruncatedSeries(VarId formal, int order) : formal_(formal) {
  require_formal(formal);
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative series order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(VarId formal, std::vector<RationalFunction> coeffs)
    : formal_(formal), coeffs_(std::move(coeffs)) {
  require_formal(formal);
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(VarId formal, int order) {
  TruncatedSeries s(formal, order);
  s.coeffs_[0] = 1;
  return s;
}

const RationalFunction& TruncatedSeries::operator[](int k) const {
  if (k < 0 || k > order()) throw Error(ErrorCode::IndexOutOfRange, "series coefficient " + std::to_string(k));
  return coeffs_[static_cast<std::size_t>(k)];
}

RationalFunction& TruncatedSeries::operator[](int k) {
  if (k < 0 || k > order()) throw Error(ErrorCode::IndexOutOfRange, "series coefficient " + std::to_string(k));
  return coeffs_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (!(formal_ == o.formal_)) {
    throw Error(ErrorCode::FormalVarMismatch, formal_.name() + " vs " + o.formal_.name());
  }
  if (order() != o.order()) {
    throw Error(ErrorCode::OrderMismatch, std::to_string(order()) + " vs " + std::to_string(o.order()));
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  const int order = a.order();
  TruncatedSeries r(a.formal_, order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const RationalFunction& c) const {
  TruncatedSeries r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

TruncatedSeries TruncatedSeries::compose_scale(const RationalFunction& c) const {
  TruncatedSeries r = *this;
  RationalFunction power = 1;
  for (std::size_t k = 1; k < r.coeffs_.size(); ++k) {
    power *= c;
    r.coeffs_[k] *= power;
  }
  return r;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw Error(ErrorCode::OrderMismatch, "cannot truncate to order " + std::to_string(order));
  }
  return TruncatedSeries(formal_, std::vector<RationalFunction>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) throw Error(ErrorCode::OrderMismatch, "derivative of an order-0 series");
  std::vector<RationalFunction> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * RationalFunction(static_cast<long>(k)));
  return TruncatedSeries(formal_, std::move(out));
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (!(coeffs_[0] == RationalFunction(1))) throw Error(ErrorCode::NonUnitConstantTerm, "series inverse");
  TruncatedSeries r(formal_, order());
  r.coeffs_[0] = 1;
  for (int k = 1; k <= order(); ++k) {
    RationalFunction acc;
    for (int i = 1; i <= k; ++i) acc += coeffs_[i] * r.coeffs_[k - i];
    r.coeffs_[k] = -acc;
  }
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.formal_ == b.formal_)) return false;
  const int order = std::min(a.order(), b.order());
  for (int k = 0; k <= order; ++k) {
    if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
  }
  return true;
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (int k = 0; k <= order(); ++k) {
    const auto& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string body = c.to_string();
    bool compound = !(c.has_unit_denominator() && c.num().size() == 1);
    if (k > 0 && compound) body = "(" + body + ")";
    if (k == 1) body += "*" + formal_.name();
    if (k > 1) body += "*" + formal_.name() + "^" + std::to_string(k);
    out += out.empty() ? body : " + " + body;
  }
  return out.empty() ? "0" : out;
}

TruncatedSeries series_log_derivative(const TruncatedSeries& a) {
  if (!(a[0] == RationalFunction(1))) throw Error(ErrorCode::NonUnitConstantTerm, "log-derivative");
  const int out_order = a.order() - 1;
  if (out_order < 0) throw Error(ErrorCode::OrderMismatch, "log-derivative of an order-0 series");
  TruncatedSeries b(a.formal(), out_order);
  // b_j = (j+1) a_{j+1} - sum_{i=1..j} a_i b_{j-i}
  for (int j = 0; j <= out_order; ++j) {
    RationalFunction acc = a[j + 1] * RationalFunction(static_cast<long>(j + 1));
    for (int i = 1; i <= j; ++i) acc -= a[i] * b[j - i];
    b[j] = std::move(acc);
  }
  return b;
}

}  // namespace qspectra
