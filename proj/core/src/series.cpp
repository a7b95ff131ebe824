#include "vinculab/series.hpp"

#include <algorithm>

#include "vinculab/errors.hpp"

namespace vinculab {

namespace {

const char* kind_text(SeriesKind k) { return k == SeriesKind::OGF ? "OGF" : "EGF"; }

void require_same_kind(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.kind() != b.kind())
    throw series_domain_error(std::string("series kind mismatch: ") +
                              kind_text(a.kind()) + " vs " + kind_text(b.kind()));
}

int common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

}  // namespace

TruncatedSeries::TruncatedSeries(SeriesKind kind, int order) : kind_(kind) {
  if (order < 0) throw series_domain_error("series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

TruncatedSeries::TruncatedSeries(SeriesKind kind, std::vector<Rat> coeffs)
    : kind_(kind), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw series_domain_error("series needs a constant term");
}

TruncatedSeries TruncatedSeries::constant(SeriesKind kind, const Rat& c, int order) {
  TruncatedSeries s(kind, order);
  s.set_coeff(0, c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(SeriesKind kind, const Rat& c, int power,
                                          int order) {
  TruncatedSeries s(kind, order);
  if (power <= order) s.set_coeff(power, c);
  return s;
}

const Rat& TruncatedSeries::coeff(int n) const {
  if (n < 0 || n > order())
    throw series_domain_error("coefficient index " + std::to_string(n) +
                              " outside truncation order " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set_coeff(int n, Rat value) {
  if (n < 0 || n > order())
    throw series_domain_error("coefficient index " + std::to_string(n) +
                              " outside truncation order " + std::to_string(order()));
  coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

std::string TruncatedSeries::str() const {
  std::string out = kind_text(kind_);
  out += ";" + std::to_string(order()) + ";";
  for (int n = 0; n <= order(); ++n) {
    if (n) out.push_back(',');
    out += rat_to_string(coeffs_[static_cast<std::size_t>(n)]);
  }
  return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_kind(a, b);
  const int ord = common_order(a, b);
  TruncatedSeries out(a.kind(), ord);
  for (int n = 0; n <= ord; ++n) out.set_coeff(n, a.coeff(n) + b.coeff(n));
  return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_kind(a, b);
  const int ord = common_order(a, b);
  TruncatedSeries out(a.kind(), ord);
  for (int n = 0; n <= ord; ++n) out.set_coeff(n, a.coeff(n) - b.coeff(n));
  return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_kind(a, b);
  const int ord = common_order(a, b);
  TruncatedSeries out(a.kind(), ord);
  for (int n = 0; n <= ord; ++n) {
    Rat acc = 0;
    for (int i = 0; i <= n; ++i) acc += a.coeff(i) * b.coeff(n - i);
    out.set_coeff(n, acc);
  }
  return out;
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_kind(a, b);
  if (b.coeff(0) == 0)
    throw series_domain_error("division by a series with zero constant term");
  const int ord = common_order(a, b);
  TruncatedSeries out(a.kind(), ord);
  for (int n = 0; n <= ord; ++n) {
    Rat acc = a.coeff(n);
    for (int i = 0; i < n; ++i) acc -= out.coeff(i) * b.coeff(n - i);
    out.set_coeff(n, acc / b.coeff(0));
  }
  return out;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  require_same_kind(outer, inner);
  if (inner.coeff(0) != 0)
    throw series_domain_error("composition requires inner constant term 0");
  const int ord = common_order(outer, inner);
  // Horner evaluation over the truncated ring.
  TruncatedSeries out = TruncatedSeries::constant(outer.kind(), outer.coeff(ord), ord);
  TruncatedSeries inner_trunc(inner.kind(), ord);
  for (int n = 0; n <= ord; ++n) inner_trunc.set_coeff(n, inner.coeff(n));
  for (int n = ord - 1; n >= 0; --n) {
    out = mul(out, inner_trunc);
    out.set_coeff(0, out.coeff(0) + outer.coeff(n));
  }
  return out;
}

TruncatedSeries integrate(const TruncatedSeries& a) {
  TruncatedSeries out(a.kind(), a.order());
  for (int n = 1; n <= a.order(); ++n) out.set_coeff(n, a.coeff(n - 1) / n);
  return out;
}

TruncatedSeries exponentiate(const TruncatedSeries& a) {
  if (a.coeff(0) != 0)
    throw series_domain_error("exponentiate requires zero constant term");
  const int ord = a.order();
  TruncatedSeries out(a.kind(), ord);
  out.set_coeff(0, 1);
  // b' = a' b, i.e. n b_n = sum_{k=1..n} k a_k b_{n-k}.
  for (int n = 1; n <= ord; ++n) {
    Rat acc = 0;
    for (int k = 1; k <= n; ++k) acc += Rat(k) * a.coeff(k) * out.coeff(n - k);
    out.set_coeff(n, acc / n);
  }
  return out;
}

TruncatedSeries scalar_mul(const Rat& c, const TruncatedSeries& a) {
  TruncatedSeries out(a.kind(), a.order());
  for (int n = 0; n <= a.order(); ++n) out.set_coeff(n, c * a.coeff(n));
  return out;
}

TruncatedSeries power(const TruncatedSeries& a, int e) {
  if (e < 0) throw series_domain_error("negative series power");
  TruncatedSeries out = TruncatedSeries::constant(a.kind(), 1, a.order());
  for (int i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

TruncatedSeries series_algebra(AlgebraOp op, const TruncatedSeries& a,
                               const std::optional<TruncatedSeries>& b) {
  auto need_b = [&]() -> const TruncatedSeries& {
    if (!b) throw series_domain_error("binary series operation needs two operands");
    return *b;
  };
  switch (op) {
    case AlgebraOp::Add: return add(a, need_b());
    case AlgebraOp::Mul: return mul(a, need_b());
    case AlgebraOp::Div: return div(a, need_b());
    case AlgebraOp::Compose: return compose(a, need_b());
    case AlgebraOp::Integrate: return integrate(a);
    case AlgebraOp::Exponentiate: return exponentiate(a);
  }
  throw series_domain_error("unknown algebra op");
}

Rat pq_integer(int n, const Rat& p, const Rat& q) {
  if (n < 1) throw error("pq_integer requires n >= 1");
  Rat acc = 0;
  for (int i = 0; i <= n - 1; ++i) acc += pow_rat(p, i) * pow_rat(q, n - 1 - i);
  return acc;
}

TruncatedSeries cf_expand(const CFSpec& spec, int order) {
  if (spec.depth < 1) throw error("continued fraction depth must be >= 1");
  if (order < 0) throw error("negative order");
  // Innermost level first: h_m = 1 / (1 - a_m t h_{m+1}) where the level
  // weight a_m is x[ceil(m/2)] on odd levels and y[m/2] on even ones.
  TruncatedSeries h = TruncatedSeries::constant(SeriesKind::OGF, 1, order);
  const TruncatedSeries one = TruncatedSeries::constant(SeriesKind::OGF, 1, order);
  for (int m = spec.depth; m >= 1; --m) {
    const int level = (m + 1) / 2;
    const Rat weight = (m % 2 == 1 ? spec.x : spec.y) * pq_integer(level, spec.p, spec.q);
    // t * h, scaled
    TruncatedSeries th(SeriesKind::OGF, order);
    for (int n = 1; n <= order; ++n) th.set_coeff(n, weight * h.coeff(n - 1));
    h = div(one, sub(one, th));
  }
  return h;
}

}  // namespace vinculab
