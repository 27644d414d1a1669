#include "gramid/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace gramid {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();  // lowest terms, positive denominator
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::parse(const std::string& text) {
  // grammar: [+-] digits [ "/" digits ]
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto bad = [&text]() -> Rational {
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  };
  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t num_begin = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return bad();
  Integer num(text.substr(0, i));
  if (i == n) return Rational(num);
  if (text[i] != '/') return bad();
  ++i;
  std::size_t den_begin = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == den_begin || i != n) return bad();
  Integer den(text.substr(den_begin));
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string s = num().get_str();
  if (den() != 1) s += "/" + den().get_str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace gramid
