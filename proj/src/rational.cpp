#include "waldkit/rational.hpp"

#include "waldkit/error.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace waldkit {

BigRational::BigRational(const BigInteger& numerator, const BigInteger& denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

BigRational::BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return BigRational(BigInteger(std::string(text), 10));
    }
    return BigRational(BigInteger(std::string(text.substr(0, slash)), 10),
                       BigInteger(std::string(text.substr(slash + 1)), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) {
    throw std::domain_error("division by zero");
  }
  q_ /= o.q_;
  return *this;
}

BigInteger BigRational::floor() const {
  BigInteger r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

BigInteger BigRational::ceil() const {
  BigInteger r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string BigRational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string BigRational::to_decimal() const {
  std::ostringstream os;
  os << std::setprecision(6) << to_double();
  return os.str();
}

bool BigRational::is_canonical() const {
  if (sgn(q_.get_den()) <= 0) {
    return false;
  }
  BigInteger g;
  mpz_gcd(g.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  if (q_.get_num() == 0) {
    return q_.get_den() == 1;
  }
  return g == 1;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
  return os << q.to_string();
}

BigInteger lcm(const BigInteger& a, const BigInteger& b) {
  BigInteger r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

} // namespace waldkit
