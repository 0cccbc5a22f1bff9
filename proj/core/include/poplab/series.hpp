#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "poplab/common.hpp"

namespace poplab {

/// Integer polynomial in x, constant term first, trailing zeros trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(int i) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  /// Human-readable form such as "1-3x+2x^2".
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, int e);

/// Power series over the rationals known through x^order.
/// Binary operations truncate to the smaller order of their operands.
class TruncatedSeries {
 public:
  static constexpr int kDefaultOrder = 16;

  /// The zero series of the given order.
  explicit TruncatedSeries(int order = kDefaultOrder);
  TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, int order);
  static TruncatedSeries x(int order);
  static TruncatedSeries from_polynomial(const IntPolynomial& p, int order);
  static TruncatedSeries from_integers(const std::vector<BigInt>& coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_integral() const;
  /// Throws std::domain_error if some coefficient is not an integer.
  std::vector<BigInt> to_integers() const;

  /// Index of the first nonzero coefficient, or -1.
  int valuation() const;

  TruncatedSeries truncated(int order) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Throws std::domain_error when b has zero constant term.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);

  bool operator==(const TruncatedSeries&) const = default;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Coefficients of num/den through x^order. Throws std::domain_error when
/// den has zero constant term.
TruncatedSeries from_rational(const IntPolynomial& num, const IntPolynomial& den, int order);

/// Principal square root: the branch with positive constant term. Throws
/// std::domain_error unless the constant term is a rational square.
TruncatedSeries sqrt(const TruncatedSeries& a);

/// Formal derivative; the order drops by one (order 0 stays a zero series
/// of order 0).
TruncatedSeries derivative(const TruncatedSeries& a);

TruncatedSeries pow(const TruncatedSeries& a, int e);

/// A polynomial relation F(x, A) = 0, evaluated on a candidate series.
using AlgebraicRelation = std::function<TruncatedSeries(const TruncatedSeries&)>;

/// Extends `seed` (a_0..a_{s-1}) to the unique series through x^order with
/// F(x, A) = 0 through x^order, when that solution is determined term by
/// term. With j the order of vanishing of dF/dA along the solution, each
/// later term is forced once s > j. Throws std::domain_error if the seed is
/// too short to fix the next term or the relation fails on the result.
TruncatedSeries solve_algebraic(const AlgebraicRelation& relation, const std::vector<BigInt>& seed, int order);

/// The quartic relation for the POP {1>2, 2>4, 1>3}, evaluated at A.
TruncatedSeries residual_a257561(const TruncatedSeries& a);

/// A - 1 - xA/(1 - xA^2), the functional equation for {4>2, 1>4, 1>3}.
TruncatedSeries residual_a106228(const TruncatedSeries& a);

}  // namespace poplab
