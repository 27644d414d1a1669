#pragma once

#include "gramid/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gramid {

// Formal linear combination of abstract points x_1, x_2, ... (1-based,
// matching the usual geometric labeling). Coefficients are exact rationals;
// zero coefficients are never stored, so equality is map equality.
//
// Derived vectors such as midpoints (x_i + x_j)/2 and centroids
// (1/n) sum x_k are ordinary FormalVectors built from the same terms.
class FormalVector {
public:
  FormalVector() = default;

  static FormalVector point(int index);           // x_index, index >= 1
  static FormalVector midpoint(int i, int j);     // (x_i + x_j)/2

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int index) const;
  bool is_zero() const { return terms_.empty(); }
  int max_index() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add_term(int index, const Rational& c);    // accumulates, prunes zeros

  FormalVector& operator+=(const FormalVector& o);
  FormalVector& operator-=(const FormalVector& o);
  FormalVector operator-() const;
  FormalVector scaled(const Rational& r) const;

  friend FormalVector operator+(FormalVector a, const FormalVector& b) { return a += b; }
  friend FormalVector operator-(FormalVector a, const FormalVector& b) { return a -= b; }
  friend bool operator==(const FormalVector& a, const FormalVector& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;  // e.g. "x1 - 1/2 x2"

private:
  std::map<int, Rational> terms_;
};

inline FormalVector operator*(const Rational& r, const FormalVector& v) {
  return v.scaled(r);
}

// Rational-coefficient combination of Gram entries:
//
//   sum c_{ii} |x_i|^2  +  sum_{i<j} c_{ij} Re(x_i, x_j).
//
// This is the canonical expansion target for every squared norm of a
// FormalVector. Keys are unordered index pairs stored as (i, j) with
// i <= j; zero coefficients are pruned, so two forms are equal exactly
// when their coefficient maps are equal and the zero test is total.
class QuadraticForm {
public:
  using Key = std::pair<int, int>;

  QuadraticForm() = default;

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Key, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i, int j) const;             // 0 when absent
  int max_index() const;

  void add(int i, int j, const Rational& c);      // accumulates, prunes zeros

  QuadraticForm& operator+=(const QuadraticForm& o);
  QuadraticForm& operator-=(const QuadraticForm& o);
  QuadraticForm operator-() const;
  QuadraticForm scaled(const Rational& r) const;

  friend QuadraticForm operator+(QuadraticForm a, const QuadraticForm& b) { return a += b; }
  friend QuadraticForm operator-(QuadraticForm a, const QuadraticForm& b) { return a -= b; }
  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str() const;  // e.g. "|x1|^2 - 2 Re(x1,x2) + |x2|^2"

private:
  std::map<Key, Rational> coeffs_;
};

// Expansion of Re(u, v) over the Gram basis. Coefficients are rational
// (hence real), so Re is bilinear over them and this is exact for both
// real and complex model spaces.
QuadraticForm re_inner(const FormalVector& u, const FormalVector& v);

// norm_sq(v) == re_inner(v, v): sum a_i^2 |x_i|^2 + sum_{i<j} 2 a_i a_j Re(x_i,x_j).
QuadraticForm norm_sq(const FormalVector& v);

// Replaces each point symbol by a FormalVector (identity for unmapped
// indices) and re-expands. Used for reduction checks and homogeneity tests.
QuadraticForm substitute(const QuadraticForm& f,
                         const std::map<int, FormalVector>& replacement);

// Symmetric matrix of Re(x_i, x_j) for a concrete point configuration,
// 1-based access. S is Rational for exact models, double for float models.
template <typename S>
class Gram {
public:
  explicit Gram(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
    if (n < 0) throw std::domain_error("Gram: negative size");
  }

  int size() const { return n_; }

  const S& at(int i, int j) const { return a_[index(i, j)]; }

  void set(int i, int j, const S& v) {
    a_[index(i, j)] = v;
    a_[index(j, i)] = v;
  }

private:
  std::size_t index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw std::out_of_range("Gram: index out of range");
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_;
  std::vector<S> a_;
};

namespace detail {
inline Rational to_scalar(const Rational& c, const Rational*) { return c; }
inline double to_scalar(const Rational& c, const double*) { return c.to_double(); }
}  // namespace detail

// sum c_{ij} g_{ij}. Exact when S is Rational. Throws std::domain_error
// when the form references a point beyond the Gram size.
template <typename S>
S evaluate(const QuadraticForm& f, const Gram<S>& g) {
  if (f.max_index() > g.size())
    throw std::domain_error("evaluate: form references x_" +
                            std::to_string(f.max_index()) + " but Gram has " +
                            std::to_string(g.size()) + " points");
  S acc{};
  for (const auto& [key, c] : f.coeffs())
    acc += detail::to_scalar(c, static_cast<const S*>(nullptr)) * g.at(key.first, key.second);
  return acc;
}

}  // namespace gramid
