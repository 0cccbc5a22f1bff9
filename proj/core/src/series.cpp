#include "poplab/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace poplab {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(static_cast<int>(i)) - b.coefficient(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial pow(const IntPolynomial& p, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial exponent");
  IntPolynomial result{1};
  for (int i = 0; i < e; ++i) result = result * p;
  return result;
}

// ---------------------------------------------------------------------------
// TruncatedSeries

namespace {

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  check_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::x(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const IntPolynomial& p, int order) {
  TruncatedSeries s(order);
  for (int i = 0; i <= std::min(order, p.degree()); ++i) s[i] = Rational(p.coefficient(i));
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(const std::vector<BigInt>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const BigInt& v : coeffs) c.emplace_back(v);
  return TruncatedSeries(std::move(c));
}

bool TruncatedSeries::is_zero() const { return valuation() < 0; }

bool TruncatedSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return denominator(c) == 1; });
}

std::vector<BigInt> TruncatedSeries::to_integers() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (denominator(coeffs_[i]) != 1) {
      throw std::domain_error("coefficient " + std::to_string(i) + " is not an integer: " + coeffs_[i].str());
    }
    out.push_back(numerator(coeffs_[i]));
  }
  return out;
}

int TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  check_order(order);
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (Rational& c : s.coeffs_) c = -c;
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(std::min(a.order(), b.order()));
  for (int i = 0; i <= s.order(); ++i) s[i] = a[i] + b[i];
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(std::min(a.order(), b.order()));
  for (int i = 0; i <= s.order(); ++i) s[i] = a[i] - b[i];
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(std::min(a.order(), b.order()));
  for (int i = 0; i <= s.order(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= s.order(); ++j) s[i + j] += a[i] * b[j];
  }
  return s;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b[0] == 0) throw std::domain_error("division by a series with zero constant term");
  TruncatedSeries q(std::min(a.order(), b.order()));
  for (int n = 0; n <= q.order(); ++n) {
    Rational acc = a[n];
    for (int i = 1; i <= n; ++i) acc -= b[i] * q[n - i];
    q[n] = acc / b[0];
  }
  return q;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  TruncatedSeries s = a;
  for (Rational& v : s.coeffs_) v *= c;
  return s;
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ",";
    out += coeffs_[i].str();
  }
  return out;
}

TruncatedSeries from_rational(const IntPolynomial& num, const IntPolynomial& den, int order) {
  if (den.coefficient(0) == 0) throw std::domain_error("denominator has zero constant term");
  return TruncatedSeries::from_polynomial(num, order) / TruncatedSeries::from_polynomial(den, order);
}

namespace {

bool rational_sqrt(const Rational& c, Rational& root) {
  if (c < 0) return false;
  const BigInt n = numerator(c);
  const BigInt d = denominator(c);
  const BigInt rn = boost::multiprecision::sqrt(n);
  const BigInt rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  return true;
}

}  // namespace

TruncatedSeries sqrt(const TruncatedSeries& a) {
  Rational b0;
  if (!rational_sqrt(a[0], b0) || b0 == 0) {
    throw std::domain_error("constant term " + a[0].str() + " is not a nonzero rational square");
  }
  TruncatedSeries b(a.order());
  b[0] = b0;
  for (int n = 1; n <= a.order(); ++n) {
    Rational acc = a[n];
    for (int i = 1; i < n; ++i) acc -= b[i] * b[n - i];
    b[n] = acc / (2 * b0);
  }
  return b;
}

TruncatedSeries derivative(const TruncatedSeries& a) {
  if (a.order() == 0) return TruncatedSeries(0);
  TruncatedSeries d(a.order() - 1);
  for (int i = 1; i <= a.order(); ++i) d[i - 1] = a[i] * i;
  return d;
}

TruncatedSeries pow(const TruncatedSeries& a, int e) {
  if (e < 0) throw std::invalid_argument("negative series exponent");
  TruncatedSeries result = TruncatedSeries::constant(1, a.order());
  for (int i = 0; i < e; ++i) result = result * a;
  return result;
}

TruncatedSeries solve_algebraic(const AlgebraicRelation& relation, const std::vector<BigInt>& seed, int order) {
  const int s = static_cast<int>(seed.size());
  if (s == 0) throw std::domain_error("algebraic solver needs at least a constant term");
  check_order(order);
  // Room for the order of vanishing of dF/dA, which is unknown up front.
  const int work = order + s + 1;
  TruncatedSeries a(std::max(work, s - 1));
  for (int i = 0; i < s; ++i) a[i] = Rational(seed[static_cast<std::size_t>(i)]);
  if (s > order) return a.truncated(order);

  TruncatedSeries bump(a.order());
  bump[s] = 1;
  const int v = (relation(a + bump) - relation(a)).valuation();
  if (v < 0) throw std::domain_error("relation does not depend on A near the seed");
  const int j = v - s;
  if (j >= s) {
    throw std::domain_error("seed of length " + std::to_string(s) + " cannot fix later terms (dF/dA vanishes to order " +
                            std::to_string(j) + ")");
  }

  // For m > j, [x^(m+j)] F is affine in a_m with slope [x^j] dF/dA and does
  // not depend on later coefficients.
  for (int m = s; m <= order; ++m) {
    const int w = m + j;
    a[m] = 0;
    const Rational r0 = relation(a.truncated(w))[w];
    TruncatedSeries probe = a.truncated(w);
    probe[m] = 1;
    const Rational r1 = relation(probe)[w];
    a[m] = -r0 / (r1 - r0);
  }
  TruncatedSeries result = a.truncated(order);
  const TruncatedSeries residual = relation(result);
  if (!residual.is_zero()) {
    throw std::domain_error("relation not satisfied at x^" + std::to_string(residual.valuation()) +
                            "; the seed is inconsistent");
  }
  return result;
}

TruncatedSeries residual_a257561(const TruncatedSeries& a) {
  const int n = a.order();
  auto poly = [n](std::initializer_list<long long> c) { return TruncatedSeries::from_polynomial(IntPolynomial(c), n); };
  const TruncatedSeries a2 = a * a;
  const TruncatedSeries a3 = a2 * a;
  const TruncatedSeries a4 = a3 * a;
  return poly({-1, 8, 2}) * a4 + poly({5, -46, 4, 1}) * a3 + poly({-9, 94, -21, 3}) * a2 + poly({7, -82, 12, 1}) * a +
         poly({-2, 26, 3});
}

TruncatedSeries residual_a106228(const TruncatedSeries& a) {
  const int n = a.order();
  const TruncatedSeries x = TruncatedSeries::x(n);
  const TruncatedSeries one = TruncatedSeries::constant(1, n);
  return a - one - (x * a) / (one - x * a * a);
}

}  // namespace poplab
