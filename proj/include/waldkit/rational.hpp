#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace waldkit {

using BigInteger = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class BigRational {
public:
  BigRational() = default;

  template <std::integral T>
  BigRational(T value) // NOLINT(google-explicit-constructor)
      : q_(to_mpz(value)) {}

  BigRational(const BigInteger& value) : q_(value) {} // NOLINT
  BigRational(const BigInteger& numerator, const BigInteger& denominator);
  explicit BigRational(const mpq_class& q);

  /// Accepts "p/q", "p" and leading '-' on the numerator.
  static BigRational parse(std::string_view text);

  BigInteger numerator() const { return q_.get_num(); }
  BigInteger denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  BigInteger floor() const;
  BigInteger ceil() const;

  /// Exact "p/q" form; integers print as "p/1".
  std::string to_string() const;
  /// Six significant digits, display only.
  std::string to_decimal() const;
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }

  /// True when the stored fraction is canonical (gcd 1, positive denominator).
  bool is_canonical() const;

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const { return BigRational(mpq_class(-q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  template <std::integral T>
  static BigInteger to_mpz(T value) {
    if constexpr (std::is_signed_v<T>) {
      if constexpr (sizeof(T) <= sizeof(long)) {
        return BigInteger(static_cast<long>(value));
      } else {
        return BigInteger(std::to_string(value));
      }
    } else {
      if constexpr (sizeof(T) <= sizeof(unsigned long)) {
        return BigInteger(static_cast<unsigned long>(value));
      } else {
        return BigInteger(std::to_string(value));
      }
    }
  }

  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

BigInteger lcm(const BigInteger& a, const BigInteger& b);

} // namespace waldkit
