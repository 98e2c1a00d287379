#include "evoperm/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "evoperm/error.hpp"

namespace evoperm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string_view strip_sign(std::string_view s, bool& negative) {
  negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  return s;
}

mpz_class ten_to(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

Rational parse_decimal(std::string_view text) {
  bool negative = false;
  std::string_view body = strip_sign(text, negative);

  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    bool exp_negative = false;
    std::string_view exp_digits = strip_sign(body.substr(e + 1), exp_negative);
    if (!all_digits(exp_digits) || exp_digits.size() > 6) {
      throw ParseError("malformed exponent in number '" + std::string(text) + "'");
    }
    exponent = std::stol(std::string(exp_digits));
    if (exp_negative) exponent = -exponent;
    body = body.substr(0, e);
  }

  std::string digits;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(body)) throw ParseError("malformed number '" + std::string(text) + "'");
    digits = std::string(body);
  }

  mpq_class q{mpz_class(digits, 10)};
  if (exponent > 0) q *= ten_to(static_cast<unsigned long>(exponent));
  if (exponent < 0) q /= ten_to(static_cast<unsigned long>(-exponent));
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, 1);
  value_ /= denominator;
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");

  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);

  bool negative = false;
  std::string_view num = strip_sign(text.substr(0, slash), negative);
  std::string_view den = text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed fraction '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(mpz_class(std::string(num), 10), d);
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

long double Rational::to_long_double() const {
  // Split into integer part and remainder so large numerators keep precision.
  mpz_class q = value_.get_num() / value_.get_den();
  mpq_class rem = value_ - mpq_class(q);
  return static_cast<long double>(q.get_d()) + static_cast<long double>(rem.get_d());
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, int exponent) {
  Rational result{1};
  Rational factor = exponent < 0 ? base.reciprocal() : base;
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; --e) result *= factor;
  return result;
}

}  // namespace evoperm
