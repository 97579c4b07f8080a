#pragma once

// Exact arithmetic in Z[beta] for a simple Parry number beta.
//
// Elements are integer coordinate vectors in the basis 1, beta, ...,
// beta^(m-1), reduced with beta^m = t1 beta^(m-1) + ... + tm. The Parry
// polynomial may be reducible, so distinct coordinate vectors can denote
// the same real number; equality of values is decided by sign(), never by
// coordinate comparison.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace parryscope {

/// Dense polynomial with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> coeffs);

  static RationalPolynomial from_integers(std::span<const mpz_class> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  const mpq_class& leading() const { return coeffs_.back(); }

  mpq_class operator()(const mpq_class& x) const;

  /// Quotient and remainder of Euclidean division by a non-zero divisor.
  std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& divisor) const;
  RationalPolynomial monic() const;

  /// Upper bound of sup |p'(x)| over 0 <= x <= hi.
  mpq_class derivative_bound(const mpq_class& hi) const;

  std::string str() const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/// Shared arithmetic context for one Renyi expansion t1..tm: the reduction
/// rule and a monotonically narrowing isolating interval for beta.
class BetaField {
 public:
  /// `digits` are t1..tm; caller guarantees t1 >= 1 and tm >= 1.
  explicit BetaField(std::vector<int> digits);

  std::size_t degree() const noexcept { return digits_.size(); }
  const std::vector<int>& digits() const noexcept { return digits_; }

  /// x^m - t1 x^(m-1) - ... - tm, lowest degree first.
  const std::vector<mpz_class>& parry_coefficients() const noexcept { return parry_; }
  const RationalPolynomial& parry_polynomial() const noexcept { return parry_q_; }

  struct Interval {
    mpq_class lo;
    mpq_class hi;
  };
  /// Current isolating interval (lo, hi] of beta; lo == hi once beta is
  /// found to be rational.
  Interval beta_interval() const;
  /// Halves the stored interval. Safe to call concurrently.
  void refine() const;

  /// Sign of p(beta), exact.
  Sign sign_at_beta(const RationalPolynomial& p) const;

  bool same_base(const BetaField& other) const noexcept { return digits_ == other.digits_; }

 private:
  std::vector<int> digits_;
  std::vector<mpz_class> parry_;
  RationalPolynomial parry_q_;
  mutable std::mutex mutex_;
  mutable mpq_class lo_;
  mutable mpq_class hi_;
};

using BetaFieldPtr = std::shared_ptr<const BetaField>;

class ZBeta {
 public:
  /// Reduces `coords` (any length) modulo the Parry polynomial.
  ZBeta(BetaFieldPtr field, std::vector<mpz_class> coords);

  static ZBeta zero(BetaFieldPtr field);
  static ZBeta integer(BetaFieldPtr field, long value);
  static ZBeta integer(BetaFieldPtr field, const mpz_class& value);
  static ZBeta beta_power(BetaFieldPtr field, std::size_t k);

  const BetaFieldPtr& field() const noexcept { return field_; }
  /// Exactly m coordinates.
  const std::vector<mpz_class>& coords() const noexcept { return coords_; }
  bool coords_zero() const noexcept;

  Sign sign() const;
  /// Compares the real values.
  std::strong_ordering compare(const ZBeta& other) const;
  bool value_equals(const ZBeta& other) const { return compare(other) == std::strong_ordering::equal; }

  ZBeta operator-() const;
  ZBeta& operator+=(const ZBeta& other);
  ZBeta& operator-=(const ZBeta& other);
  ZBeta& operator*=(const ZBeta& other);
  friend ZBeta operator+(ZBeta a, const ZBeta& b) { return a += b; }
  friend ZBeta operator-(ZBeta a, const ZBeta& b) { return a -= b; }
  friend ZBeta operator*(ZBeta a, const ZBeta& b) { return a *= b; }

  /// Multiplication by beta.
  ZBeta times_beta() const;

  /// "c0 + c1*b + c2*b^2" style rendering.
  std::string str() const;

 private:
  void check_base(const ZBeta& other) const;
  void reduce(std::vector<mpz_class> raw);

  BetaFieldPtr field_;
  std::vector<mpz_class> coords_;
};

}  // namespace parryscope
