#include "gramid/combinatorics.hpp"

#include "gramid/quadform.hpp"

#include <vector>

namespace gramid {

Integer binomial(long a, long b) {
  if (a < 0) throw std::domain_error("binomial: negative upper index");
  if (b < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

namespace {

void check_nk(long n, long k) {
  if (k < 4 || k > n)
    throw std::domain_error("coefficient table requires 4 <= k <= n, got n=" +
                            std::to_string(n) + " k=" + std::to_string(k));
}

}  // namespace

Integer c_coeff(long n, long k, long p, long q) {
  check_nk(n, k);
  if (p < 1 || p >= q || q > n)
    throw std::domain_error("c_coeff requires 1 <= p < q <= n, got p=" +
                            std::to_string(p) + " q=" + std::to_string(q));
  Integer sum = 0;
  for (long r = 0; r <= k - 2; ++r) {
    Integer term = binomial(n - q + p - 1, k - 2 - r) * binomial(q - p - 1, r);
    if (r % 2 == 0)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

CoeffTable coeff_closed_form(long n, long k) {
  check_nk(n, k);
  CoeffTable t;
  t.n = n;
  t.k = k;
  t.diag = binomial(n - 1, k - 1);
  for (long p = 1; p < n; ++p)
    for (long q = p + 1; q <= n; ++q)
      t.offdiag[{p, q}] = 2 * c_coeff(n, k, p, q);
  return t;
}

CoeffTable coeff_oracle(long n, long k, unsigned long budget) {
  check_nk(n, k);
  Integer count = binomial(n, k);
  if (count > budget)
    throw BudgetError("coeff_oracle: C(" + std::to_string(n) + "," +
                          std::to_string(k) + ") = " + count.get_str() +
                          " subsets exceeds budget " + std::to_string(budget),
                      count);

  QuadraticForm total;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (long j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = static_cast<int>(j + 1);
  while (true) {
    FormalVector alt;
    for (long j = 0; j < k; ++j)
      alt.add_term(idx[static_cast<std::size_t>(j)], Rational(j % 2 == 0 ? 1 : -1));
    total += norm_sq(alt);

    // next increasing k-tuple in lexicographic order
    long pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (long j = pos + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }

  CoeffTable t;
  t.n = n;
  t.k = k;
  for (long p = 1; p <= n; ++p) {
    Rational d = total.coeff(static_cast<int>(p), static_cast<int>(p));
    if (d.den() != 1)
      throw std::logic_error("coeff_oracle: non-integer diagonal coefficient");
    if (p == 1)
      t.diag = d.num();
    else if (t.diag != d.num())
      throw std::logic_error("coeff_oracle: diagonal coefficients differ across points");
  }
  for (long p = 1; p < n; ++p)
    for (long q = p + 1; q <= n; ++q) {
      Rational c = total.coeff(static_cast<int>(p), static_cast<int>(q));
      if (c.den() != 1)
        throw std::logic_error("coeff_oracle: non-integer off-diagonal coefficient");
      t.offdiag[{p, q}] = c.num();
    }
  return t;
}

SpanSum span_sum_check(long n) {
  if (n < 4) throw std::domain_error("span_sum_check requires n >= 4");
  SpanSum s;
  s.lhs = binomial(n - 1, 3);
  for (long span = 3; span <= n - 1; ++span) s.lhs += c_coeff(n, 4, 1, span);
  s.rhs = 2 * binomial(n - 2, 2);
  return s;
}

}  // namespace gramid
