#include "parryscope/zbeta.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "parryscope/error.hpp"

namespace parryscope {

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPolynomial RationalPolynomial::from_integers(std::span<const mpz_class> coeffs) {
  std::vector<mpq_class> q(coeffs.begin(), coeffs.end());
  return RationalPolynomial(std::move(q));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class RationalPolynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<mpq_class> rem = coeffs_;
  const long dd = divisor.degree();
  if (degree() < dd) return {RationalPolynomial{}, *this};
  std::vector<mpq_class> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (long i = degree(); i >= dd; --i) {
    const mpq_class c = rem[static_cast<std::size_t>(i)] / divisor.leading();
    quot[static_cast<std::size_t>(i - dd)] = c;
    if (sgn(c) == 0) continue;
    for (long k = 0; k <= dd; ++k) rem[static_cast<std::size_t>(i - dd + k)] -= c * divisor.coeffs_[static_cast<std::size_t>(k)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<mpq_class> out = coeffs_;
  const mpq_class lead = leading();
  for (auto& c : out) c /= lead;
  return RationalPolynomial(std::move(out));
}

mpq_class RationalPolynomial::derivative_bound(const mpq_class& hi) const {
  mpq_class bound = 0;
  mpq_class power = 1;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    bound += mpq_class(static_cast<unsigned long>(k)) * abs(coeffs_[k]) * power;
    power *= hi;
  }
  return bound;
}

std::string RationalPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------------------
// BetaField

namespace {

Sign sign_of(const mpq_class& q) {
  const int s = sgn(q);
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

// Sign of p on [lo, hi] if p provably has no root there.
std::optional<Sign> certify(const RationalPolynomial& p, const BetaField::Interval& iv) {
  const mpq_class at_lo = p(iv.lo);
  if (iv.lo == iv.hi) return sign_of(at_lo);
  const mpq_class slack = (iv.hi - iv.lo) * p.derivative_bound(iv.hi);
  if (abs(at_lo) > slack) return sign_of(at_lo);
  return std::nullopt;
}

}  // namespace

BetaField::BetaField(std::vector<int> digits) : digits_(std::move(digits)) {
  const std::size_t m = digits_.size();
  parry_.assign(m + 1, 0);
  parry_[m] = 1;
  for (std::size_t i = 1; i <= m; ++i) parry_[m - i] = -digits_[i - 1];
  parry_q_ = RationalPolynomial::from_integers(parry_);
  // beta is the unique positive root and lies in (1, t1 + 1].
  lo_ = 1;
  hi_ = digits_.front() + 1;
}

BetaField::Interval BetaField::beta_interval() const {
  std::lock_guard lock(mutex_);
  return {lo_, hi_};
}

void BetaField::refine() const {
  std::lock_guard lock(mutex_);
  if (lo_ == hi_) return;
  mpq_class mid = (lo_ + hi_) / 2;
  const int s = sgn(parry_q_(mid));
  if (s < 0) {
    lo_ = mid;
  } else if (s > 0) {
    hi_ = mid;
  } else {
    lo_ = mid;
    hi_ = mid;
  }
}

Sign BetaField::sign_at_beta(const RationalPolynomial& p) const {
  if (p.is_zero()) return Sign::Zero;
  if (auto s = certify(p, beta_interval())) return *s;

  const RationalPolynomial g = gcd(p, parry_q_);
  if (g.degree() > 0) {
    // beta is a simple root of the Parry polynomial = g * h, so exactly one
    // of g(beta), h(beta) vanishes. g | p, so g(beta) = 0 forces p(beta) = 0.
    const RationalPolynomial h = parry_q_.divmod(g).first;
    for (;;) {
      refine();
      const auto iv = beta_interval();
      auto sg = certify(g, iv);
      if (sg && *sg != Sign::Zero) break;
      if (sg && *sg == Sign::Zero) return Sign::Zero;
      auto sh = certify(h, iv);
      if (sh && *sh != Sign::Zero) return Sign::Zero;
    }
  }
  for (;;) {
    if (auto s = certify(p, beta_interval())) return *s;
    refine();
  }
}

// ---------------------------------------------------------------------------
// ZBeta

ZBeta::ZBeta(BetaFieldPtr field, std::vector<mpz_class> coords) : field_(std::move(field)) {
  reduce(std::move(coords));
}

void ZBeta::reduce(std::vector<mpz_class> raw) {
  const std::size_t m = field_->degree();
  const auto& t = field_->digits();
  for (std::size_t i = raw.size(); i-- > m;) {
    const mpz_class c = raw[i];
    if (sgn(c) == 0) continue;
    for (std::size_t k = 1; k <= m; ++k) raw[i - k] += c * t[k - 1];
  }
  raw.resize(m, 0);
  coords_ = std::move(raw);
}

ZBeta ZBeta::zero(BetaFieldPtr field) { return ZBeta(std::move(field), {}); }

ZBeta ZBeta::integer(BetaFieldPtr field, long value) { return integer(std::move(field), mpz_class(value)); }

ZBeta ZBeta::integer(BetaFieldPtr field, const mpz_class& value) {
  return ZBeta(std::move(field), std::vector<mpz_class>{value});
}

ZBeta ZBeta::beta_power(BetaFieldPtr field, std::size_t k) {
  ZBeta out = integer(std::move(field), 1);
  for (std::size_t i = 0; i < k; ++i) out = out.times_beta();
  return out;
}

bool ZBeta::coords_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

Sign ZBeta::sign() const {
  if (coords_zero()) return Sign::Zero;
  return field_->sign_at_beta(RationalPolynomial::from_integers(coords_));
}

std::strong_ordering ZBeta::compare(const ZBeta& other) const {
  switch ((*this - other).sign()) {
    case Sign::Negative: return std::strong_ordering::less;
    case Sign::Zero: return std::strong_ordering::equal;
    case Sign::Positive: return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

void ZBeta::check_base(const ZBeta& other) const {
  if (field_ != other.field_ && !field_->same_base(*other.field_)) {
    throw Error(ErrorCode::MixedBase, "Z[beta] elements over different Renyi expansions");
  }
}

ZBeta ZBeta::operator-() const {
  ZBeta out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

ZBeta& ZBeta::operator+=(const ZBeta& other) {
  check_base(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

ZBeta& ZBeta::operator-=(const ZBeta& other) {
  check_base(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

ZBeta& ZBeta::operator*=(const ZBeta& other) {
  check_base(other);
  const std::size_t m = coords_.size();
  std::vector<mpz_class> raw(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < m; ++j) raw[i + j] += coords_[i] * other.coords_[j];
  }
  reduce(std::move(raw));
  return *this;
}

ZBeta ZBeta::times_beta() const {
  std::vector<mpz_class> raw(coords_.size() + 1, 0);
  std::copy(coords_.begin(), coords_.end(), raw.begin() + 1);
  return ZBeta(field_, std::move(raw));
}

std::string ZBeta::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coords_.size(); i-- > 0;) {
    const mpz_class& c = coords_[i];
    if (sgn(c) == 0) continue;
    const mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << (mag != 1 ? "*b" : "b");
    if (i >= 2) os << "^" << i;
  }
  return first ? "0" : os.str();
}

}  // namespace parryscope
