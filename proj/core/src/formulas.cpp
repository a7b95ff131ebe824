#include "vinculab/formulas.hpp"

#include <algorithm>

#include "vinculab/errors.hpp"

namespace vinculab {

namespace {

// prod_{j=0..m} (1 - j x) as a polynomial series; m = -1 gives 1.
TruncatedSeries falling_product(int m, int order) {
  TruncatedSeries out = TruncatedSeries::constant(SeriesKind::OGF, 1, order);
  for (int j = 0; j <= m; ++j) {
    TruncatedSeries factor = TruncatedSeries::constant(SeriesKind::OGF, 1, order);
    if (order >= 1) factor.set_coeff(1, Rat(-j));
    out = mul(out, factor);
  }
  return out;
}

TruncatedSeries ogf_one(int order) {
  return TruncatedSeries::constant(SeriesKind::OGF, 1, order);
}

// 1 - x (OGF polynomial).
TruncatedSeries one_minus_x(int order) {
  TruncatedSeries s = ogf_one(order);
  if (order >= 1) s.set_coeff(1, -1);
  return s;
}

// EGF-tagged truncated exponential sum_{j=0..k-2} x^j / j!.
TruncatedSeries truncated_exp(int k, int order) {
  TruncatedSeries s(SeriesKind::EGF, order);
  Rat fact = 1;
  for (int j = 0; j <= std::min(k - 2, order); ++j) {
    if (j > 0) fact *= j;
    s.set_coeff(j, Rat(1) / fact);
  }
  return s;
}

TruncatedSeries exp_x(int order) {
  return exponentiate(TruncatedSeries::monomial(SeriesKind::EGF, 1, 1, order));
}

TruncatedSeries krun_series(int k, int r, int order) {
  if (k < 2) throw unsupported_parameter_error("krun requires k >= 2");
  if (r < 0) throw unsupported_parameter_error("krun requires r >= 0");
  const TruncatedSeries pk = truncated_exp(k, order);
  const TruncatedSeries base = exponentiate(integrate(pk));
  if (r == 0) return base;
  // g_0 = e^x - P_k; g_s = g_0 * integral(g_{s-1}); result is
  // base * integral(g_{r-1}).
  const TruncatedSeries g0 = sub(exp_x(order), pk);
  TruncatedSeries g = g0;
  for (int s = 1; s <= r - 1; ++s) g = mul(g0, integrate(g));
  return mul(base, integrate(g));
}

TruncatedSeries f23_1_sum(int r, int order) {
  if (r == 0) {
    TruncatedSeries acc(SeriesKind::OGF, order);
    for (int k = 0; 2 * k <= order; ++k) {
      const TruncatedSeries term =
          div(TruncatedSeries::monomial(SeriesKind::OGF, 1, 2 * k, order),
              mul(falling_product(k - 1, order), falling_product(k + 1, order)));
      acc = add(acc, term);
    }
    return acc;
  }
  if (r == 1) {
    TruncatedSeries acc(SeriesKind::OGF, order);
    for (int d = 0; 2 * d + 2 <= order; ++d) {
      TruncatedSeries inner(SeriesKind::OGF, order);
      for (int k = 0; 2 * k <= order; ++k) {
        const TruncatedSeries term =
            div(TruncatedSeries::monomial(SeriesKind::OGF, 1, 2 * k, order),
                mul(falling_product(k + d - 1, order), falling_product(k + d + 1, order)));
        inner = add(inner, term);
      }
      inner = sub(inner, ogf_one(order));
      const TruncatedSeries prefix =
          div(TruncatedSeries::monomial(SeriesKind::OGF, 1, 2 * d + 2, order),
              falling_product(d + 1, order));
      acc = add(acc, mul(prefix, inner));
    }
    return acc;
  }
  throw unsupported_parameter_error("f23-1 sum formula covers r = 0, 1 only");
}

TruncatedSeries h32_1_sum(int r, int order) {
  if (r == 0) return f23_1_sum(0, order);
  if (r == 1) {
    TruncatedSeries acc(SeriesKind::OGF, order);
    for (int m = 0; 2 * m + 2 <= order; ++m) {
      // x^2 (1 - (m+2)x) / (1 - (m+1)x)
      TruncatedSeries num = TruncatedSeries::monomial(SeriesKind::OGF, 1, 2, order);
      TruncatedSeries lin = ogf_one(order);
      if (order >= 1) lin.set_coeff(1, Rat(-(m + 2)));
      num = mul(num, lin);
      TruncatedSeries den = ogf_one(order);
      if (order >= 1) den.set_coeff(1, Rat(-(m + 1)));
      const TruncatedSeries prefix = div(num, den);
      TruncatedSeries inner(SeriesKind::OGF, order);
      for (int k = 0; 2 * (k + m) <= order; ++k) {
        const TruncatedSeries term =
            div(TruncatedSeries::monomial(SeriesKind::OGF, 1, 2 * (k + m), order),
                mul(falling_product(m + k, order), falling_product(m + k + 2, order)));
        inner = add(inner, term);
      }
      acc = add(acc, mul(prefix, inner));
    }
    return acc;
  }
  throw unsupported_parameter_error("h32-1 sum formula covers r = 0, 1 only");
}

TruncatedSeries ext2_series(int r, int order) {
  if (r < 0) throw unsupported_parameter_error("ext2 requires r >= 0");
  // 1 - x - x^2
  TruncatedSeries den = ogf_one(order);
  if (order >= 1) den.set_coeff(1, -1);
  if (order >= 2) den.set_coeff(2, -1);
  if (r == 0) return div(ogf_one(order), den);
  TruncatedSeries num = TruncatedSeries::monomial(SeriesKind::OGF, 1, 2, order);
  num = mul(num, power(one_minus_x(order), r - 1));
  return div(num, power(den, r + 1));
}

}  // namespace

std::optional<FormulaId> FormulaId::parse(const std::string& text, int k) {
  if (text == "bell") return FormulaId{FormulaKind::Bell, 0};
  if (text == "krun") return FormulaId{FormulaKind::KRun, k};
  if (text == "krun-dash") return FormulaId{FormulaKind::KRunDash, k};
  if (text == "f214-3") return FormulaId{FormulaKind::F214_3, 0};
  if (text == "f23-1") return FormulaId{FormulaKind::F23_1Sum, 0};
  if (text == "h32-1") return FormulaId{FormulaKind::H32_1Sum, 0};
  if (text == "ext2") return FormulaId{FormulaKind::Ext2, 0};
  return std::nullopt;
}

std::string FormulaId::str() const {
  switch (kind) {
    case FormulaKind::Bell: return "bell";
    case FormulaKind::KRun: return "krun(k=" + std::to_string(k) + ")";
    case FormulaKind::KRunDash: return "krun-dash(k=" + std::to_string(k) + ")";
    case FormulaKind::F214_3: return "f214-3";
    case FormulaKind::F23_1Sum: return "f23-1";
    case FormulaKind::H32_1Sum: return "h32-1";
    case FormulaKind::Ext2: return "ext2";
  }
  return "?";
}

TruncatedSeries series_from_formula(FormulaId id, int r, int order) {
  if (order < 0) throw error("negative order");
  switch (id.kind) {
    case FormulaKind::Bell: {
      const TruncatedSeries em1 =
          sub(exp_x(order), TruncatedSeries::constant(SeriesKind::EGF, 1, order));
      return exponentiate(em1);
    }
    case FormulaKind::KRun:
      return krun_series(id.k, r, order);
    case FormulaKind::KRunDash:
      if (r != 0)
        throw unsupported_parameter_error("krun-dash supports r = 0 only");
      if (id.k < 2) throw unsupported_parameter_error("krun-dash requires k >= 2");
      return exponentiate(integrate(truncated_exp(id.k, order)));
    case FormulaKind::F214_3: {
      if (r != 0) throw unsupported_parameter_error("f214-3 supports r = 0 only");
      // exponent 2x + x^2/2
      TruncatedSeries e(SeriesKind::EGF, order);
      if (order >= 1) e.set_coeff(1, 2);
      if (order >= 2) e.set_coeff(2, Rat(1, 2));
      return add(integrate(exponentiate(e)),
                 TruncatedSeries::constant(SeriesKind::EGF, 1, order));
    }
    case FormulaKind::F23_1Sum:
      return f23_1_sum(r, order);
    case FormulaKind::H32_1Sum:
      return h32_1_sum(r, order);
    case FormulaKind::Ext2:
      return ext2_series(r, order);
  }
  throw error("unknown formula id");
}

std::optional<FuncEqFamily> parse_funceq_family(const std::string& text) {
  if (text == "f13-2") return FuncEqFamily::F13_2;
  if (text == "f23-1") return FuncEqFamily::F23_1;
  if (text == "h13-2") return FuncEqFamily::H13_2;
  if (text == "h31-2") return FuncEqFamily::H31_2;
  return std::nullopt;
}

std::string funceq_family_str(FuncEqFamily fam) {
  switch (fam) {
    case FuncEqFamily::F13_2: return "f13-2";
    case FuncEqFamily::F23_1: return "f23-1";
    case FuncEqFamily::H13_2: return "h13-2";
    case FuncEqFamily::H31_2: return "h31-2";
  }
  return "?";
}

namespace {

// The 13-2-style identity (used verbatim by three families): the r-th series
// is assembled from the lower ones as
//   S_r = (1-x)/(1-2x) [r=0]
//   S_r = x^2/(1-2x) * sum_{d=1..r} (S_{r-d} - head_d(S_{r-d})) / (1-x)^d.
std::vector<TruncatedSeries> iterate_13_2_chain(int r, int order) {
  TruncatedSeries two_x = ogf_one(order);
  if (order >= 1) two_x.set_coeff(1, -2);
  const TruncatedSeries omx = one_minus_x(order);
  std::vector<TruncatedSeries> chain;
  chain.push_back(div(omx, two_x));
  for (int s = 1; s <= r; ++s) {
    TruncatedSeries acc(SeriesKind::OGF, order);
    for (int d = 1; d <= s; ++d) {
      TruncatedSeries tail = chain[static_cast<std::size_t>(s - d)];
      for (int j = 0; j < d && j <= order; ++j) tail.set_coeff(j, 0);
      acc = add(acc, div(tail, power(omx, d)));
    }
    const TruncatedSeries prefix =
        div(TruncatedSeries::monomial(SeriesKind::OGF, 1, 2, order), two_x);
    chain.push_back(mul(prefix, acc));
  }
  return chain;
}

// The 23-1 identity involves the series itself composed at x/(1-x); each
// self-application carries an x^2 prefactor, so ceil(order/2)+1 substitution
// rounds reach a fixed point on every coefficient up to the order.
std::vector<TruncatedSeries> iterate_23_1_chain(int r, int order) {
  const TruncatedSeries omx = one_minus_x(order);
  const TruncatedSeries x_over_omx =
      div(TruncatedSeries::monomial(SeriesKind::OGF, 1, 1, order), omx);
  const TruncatedSeries x2 = TruncatedSeries::monomial(SeriesKind::OGF, 1, 2, order);

  std::vector<TruncatedSeries> chain;
  for (int s = 0; s <= r; ++s) {
    auto rhs = [&](const TruncatedSeries& self) {
      TruncatedSeries acc =
          s == 0 ? div(ogf_one(order), omx) : TruncatedSeries(SeriesKind::OGF, order);
      for (int d = 0; d <= s; ++d) {
        const TruncatedSeries& source = d == 0 ? self : chain[static_cast<std::size_t>(s - d)];
        TruncatedSeries bracket = compose(source, x_over_omx);
        // subtract the head terms f(j) * (x/(1-x))^j, j < d
        for (int j = 0; j < d; ++j) {
          const Rat fj = chain[static_cast<std::size_t>(s - d)].coeff(j);
          if (fj != 0) bracket = sub(bracket, scalar_mul(fj, power(x_over_omx, j)));
        }
        TruncatedSeries weighted =
            d >= 2 ? mul(bracket, power(omx, d - 2)) : div(bracket, power(omx, 2 - d));
        acc = add(acc, mul(x2, weighted));
      }
      return acc;
    };
    TruncatedSeries s_r(SeriesKind::OGF, order);
    const int rounds = order / 2 + 2;
    for (int it = 0; it < rounds; ++it) s_r = rhs(s_r);
    if (rhs(s_r) != s_r)
      throw error("functional-equation iteration failed to stabilize");
    chain.push_back(s_r);
  }
  return chain;
}

}  // namespace

TruncatedSeries iterate_functional_equation(FuncEqFamily fam, int r, int order) {
  if (r < 0) throw error("negative r");
  if (order < 0) throw error("negative order");
  switch (fam) {
    case FuncEqFamily::F13_2:
    case FuncEqFamily::H13_2:
    case FuncEqFamily::H31_2:
      return iterate_13_2_chain(r, order).back();
    case FuncEqFamily::F23_1:
      return iterate_23_1_chain(r, order).back();
  }
  throw error("unknown functional-equation family");
}

std::vector<Int> coeff_counts(const TruncatedSeries& s) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(s.order()) + 1);
  Rat fact = 1;
  for (int n = 0; n <= s.order(); ++n) {
    if (n > 0) fact *= n;
    const Rat value = s.kind() == SeriesKind::EGF ? Rat(s.coeff(n) * fact) : s.coeff(n);
    if (!is_integer(value))
      throw non_integral_error(static_cast<std::size_t>(n), rat_to_string(value));
    out.push_back(boost::multiprecision::numerator(value));
  }
  return out;
}

}  // namespace vinculab
