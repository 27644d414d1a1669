#include "gramid/quadform.hpp"

#include <sstream>

namespace gramid {

FormalVector FormalVector::point(int index) {
  if (index < 1)
    throw std::domain_error("FormalVector: point index must be >= 1, got " +
                            std::to_string(index));
  FormalVector v;
  v.terms_.emplace(index, Rational(1));
  return v;
}

FormalVector FormalVector::midpoint(int i, int j) {
  FormalVector v = point(i);
  v += point(j);
  return v.scaled(Rational(1, 2));
}

Rational FormalVector::coeff(int index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational() : it->second;
}

void FormalVector::add_term(int index, const Rational& c) {
  if (index < 1)
    throw std::domain_error("FormalVector: point index must be >= 1, got " +
                            std::to_string(index));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalVector& FormalVector::operator+=(const FormalVector& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, c);
  return *this;
}

FormalVector& FormalVector::operator-=(const FormalVector& o) {
  for (const auto& [i, c] : o.terms_) add_term(i, -c);
  return *this;
}

FormalVector FormalVector::operator-() const { return scaled(Rational(-1)); }

FormalVector FormalVector::scaled(const Rational& r) const {
  FormalVector v;
  if (r.is_zero()) return v;
  for (const auto& [i, c] : terms_) v.terms_.emplace(i, r * c);
  return v;
}

std::string FormalVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : terms_) {
    if (c.sign() < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    Rational a = c.abs();
    if (a != Rational(1)) os << a.str() << " ";
    os << "x" << i;
    first = false;
  }
  return os.str();
}

Rational QuadraticForm::coeff(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = coeffs_.find(Key{i, j});
  return it == coeffs_.end() ? Rational() : it->second;
}

int QuadraticForm::max_index() const {
  int m = 0;
  for (const auto& [key, c] : coeffs_)
    if (key.second > m) m = key.second;
  return m;
}

void QuadraticForm::add(int i, int j, const Rational& c) {
  if (i < 1 || j < 1)
    throw std::domain_error("QuadraticForm: point index must be >= 1");
  if (c.is_zero()) return;
  if (i > j) std::swap(i, j);
  auto [it, inserted] = coeffs_.emplace(Key{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

QuadraticForm& QuadraticForm::operator+=(const QuadraticForm& o) {
  for (const auto& [key, c] : o.coeffs_) add(key.first, key.second, c);
  return *this;
}

QuadraticForm& QuadraticForm::operator-=(const QuadraticForm& o) {
  for (const auto& [key, c] : o.coeffs_) add(key.first, key.second, -c);
  return *this;
}

QuadraticForm QuadraticForm::operator-() const { return scaled(Rational(-1)); }

QuadraticForm QuadraticForm::scaled(const Rational& r) const {
  QuadraticForm f;
  if (r.is_zero()) return f;
  for (const auto& [key, c] : coeffs_) f.coeffs_.emplace(key, r * c);
  return f;
}

std::string QuadraticForm::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : coeffs_) {
    if (c.sign() < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    Rational a = c.abs();
    if (a != Rational(1)) os << a.str() << " ";
    if (key.first == key.second)
      os << "|x" << key.first << "|^2";
    else
      os << "Re(x" << key.first << ",x" << key.second << ")";
    first = false;
  }
  return os.str();
}

QuadraticForm re_inner(const FormalVector& u, const FormalVector& v) {
  QuadraticForm f;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) f.add(a, b, ca * cb);
  return f;
}

QuadraticForm norm_sq(const FormalVector& v) { return re_inner(v, v); }

QuadraticForm substitute(const QuadraticForm& f,
                         const std::map<int, FormalVector>& replacement) {
  auto image = [&replacement](int i) -> FormalVector {
    auto it = replacement.find(i);
    return it == replacement.end() ? FormalVector::point(i) : it->second;
  };
  QuadraticForm out;
  for (const auto& [key, c] : f.coeffs())
    out += re_inner(image(key.first), image(key.second)).scaled(c);
  return out;
}

}  // namespace gramid
