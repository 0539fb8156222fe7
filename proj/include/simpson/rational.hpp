#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace simpson {

// Exact signed rational over 64-bit integers, always stored reduced with a
// positive denominator. Intermediates run in 128-bit arithmetic; a result
// whose reduced form does not fit back into 64 bits throws
// std::overflow_error instead of wrapping.
//
// Comparisons are exact. Decimal strings exist for display only.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) {
    *this = from_i128(num, den);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "num/den" with the denominator always spelled out: "3/5", "-1/10", "2/1".
  std::string fraction_str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Fixed-point decimal rounded half away from zero: 3/5 -> "0.60".
  std::string decimal_str(int places = 2) const;

  friend Rational operator-(const Rational& x) {
    Rational r;
    r.num_ = -x.num_;  // canonical form is preserved under negation
    r.den_ = x.den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational: division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& x) { return *this = *this + x; }
  Rational& operator-=(const Rational& x) { return *this = *this - x; }
  Rational& operator*=(const Rational& x) { return *this = *this * x; }
  Rational& operator/=(const Rational& x) { return *this = *this / x; }

  // Canonical representation makes member-wise equality exact.
  friend bool operator==(const Rational& a, const Rational& b) = default;

  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const i128 lhs = i128(a.num_) * b.den_;
    const i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using i128 = __int128;
  using u128 = unsigned __int128;

  static u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
      const u128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_i128(i128 num, i128 den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const u128 abs_num = num < 0 ? u128(-num) : u128(num);
    if (abs_num != 0) {
      const u128 g = gcd_u128(abs_num, u128(den));
      num /= i128(g);
      den /= i128(g);
    } else {
      den = 1;
    }
    constexpr i128 lo = INT64_MIN;
    constexpr i128 hi = INT64_MAX;
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("rational: value exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::string Rational::decimal_str(int places) const {
  if (places < 0 || places > 18)
    throw std::invalid_argument("rational: unsupported decimal precision");
  u128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = num_ < 0;
  const u128 abs_num = negative ? u128(-i128(num_)) : u128(num_);
  const u128 scaled = abs_num * scale;
  u128 q = scaled / u128(den_);
  const u128 r = scaled % u128(den_);
  if (2 * r >= u128(den_)) ++q;  // half rounds away from zero

  std::string digits;
  if (q == 0) digits = "0";
  while (q != 0) {
    digits.insert(digits.begin(), char('0' + int(q % 10)));
    q /= 10;
  }
  if (int(digits.size()) <= places)
    digits.insert(0, std::string(places + 1 - digits.size(), '0'));

  std::string out;
  if (negative && digits.find_first_not_of('0') != std::string::npos)
    out += '-';
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - places);
  }
  return out;
}

}  // namespace simpson
