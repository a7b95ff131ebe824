#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vinculab/bigint.hpp"

namespace vinculab {

enum class SeriesKind { OGF, EGF };

/// A formal power series truncated at a fixed order, with exact rational
/// coefficients c_0..c_order. Arithmetic never claims coefficients beyond the
/// order; binary operations truncate to the smaller order of their operands.
class TruncatedSeries {
 public:
  TruncatedSeries(SeriesKind kind, int order);
  TruncatedSeries(SeriesKind kind, std::vector<Rat> coeffs);

  static TruncatedSeries constant(SeriesKind kind, const Rat& c, int order);
  static TruncatedSeries monomial(SeriesKind kind, const Rat& c, int power, int order);

  SeriesKind kind() const { return kind_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& coeff(int n) const;
  void set_coeff(int n, Rat value);
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool operator==(const TruncatedSeries&) const = default;

  /// "OGF;3;1,1/2,0,5"
  std::string str() const;

 private:
  SeriesKind kind_;
  std::vector<Rat> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Requires b(0) != 0.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);
/// outer(inner); requires inner(0) == 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);
/// Antiderivative with constant term 0: c_n -> c_{n-1}/n on the coefficient
/// stream viewed as a function of x.
TruncatedSeries integrate(const TruncatedSeries& a);
/// exp(a); requires a(0) == 0.
TruncatedSeries exponentiate(const TruncatedSeries& a);
TruncatedSeries scalar_mul(const Rat& c, const TruncatedSeries& a);
/// a^e for e >= 0.
TruncatedSeries power(const TruncatedSeries& a, int e);

/// Dispatcher form of the algebra (one entry point per operation kind).
enum class AlgebraOp { Add, Mul, Div, Compose, Integrate, Exponentiate };
TruncatedSeries series_algebra(AlgebraOp op, const TruncatedSeries& a,
                               const std::optional<TruncatedSeries>& b);

/// q^{n-1} + p q^{n-2} + ... + p^{n-2} q + p^{n-1}; requires n >= 1.
Rat pq_integer(int n, const Rat& p, const Rat& q);

/// A finite Stieltjes continued fraction: levels alternate between x- and
/// y-weighted, with the (p,q)-integer level weight advancing every two
/// levels. depth >= 2*order guarantees coefficients up to t^order are exact.
struct CFSpec {
  int depth = 1;
  Rat x = 1, y = 1, p = 1, q = 1;
};

/// Bottom-up expansion of the continued fraction as an OGF in t.
TruncatedSeries cf_expand(const CFSpec& spec, int order);

}  // namespace vinculab
