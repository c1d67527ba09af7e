#ifndef HRR_ARITH_RATIONAL_HPP
#define HRR_ARITH_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hrr {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin value wrapper around mpq_class.
class Rational {
public:
  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(long long v) : v_(static_cast<long>(v)) {}
  Rational(unsigned v) : v_(v) {}
  Rational(unsigned long v) : v_(v) {}
  Rational(const mpz_class& v) : v_(v) {}
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den);

  // Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& get() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }
  Rational inverse() const { return Rational(1) / *this; }
  Rational pow(unsigned e) const;

  // "p" for integers, "p/q" otherwise.
  std::string str() const;
  std::size_t hash() const;

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exact binomial coefficient with rational top argument: x(x-1)...(x-k+1)/k!.
Rational binomial(const Rational& x, unsigned k);
Rational factorial(unsigned n);

}  // namespace hrr

template <>
struct std::hash<hrr::Rational> {
  std::size_t operator()(const hrr::Rational& r) const { return r.hash(); }
};

#endif  // HRR_ARITH_RATIONAL_HPP
