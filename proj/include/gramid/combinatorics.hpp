#pragma once

#include "gramid/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace gramid {

// Thrown when an enumeration would exceed its configured subset budget.
// Carries the exact number of subsets the request would have visited.
class BudgetError : public std::runtime_error {
public:
  BudgetError(const std::string& msg, Integer count)
      : std::runtime_error(msg), count_(std::move(count)) {}
  const Integer& count() const { return count_; }

private:
  Integer count_;
};

// C(a, b) with the zero-outside-range convention: 0 when b < 0 or b > a.
// Throws std::domain_error for a < 0. The convention matters: the
// alternating span-coefficient sum routinely produces upper indices
// smaller than lower ones, and the stated special cases only come out
// right under it.
Integer binomial(long a, long b);

// Closed-form off-diagonal coefficient of the alternating k-subset
// expansion: the coefficient of Re(x_p, x_q) in
//
//   sum_{1 <= i_1 < ... < i_k <= n} |x_{i_1} - x_{i_2} + ... + (-1)^{k-1} x_{i_k}|^2
//
// is 2 * c_coeff(n, k, p, q), where
//
//   c_coeff = sum_{r=0}^{k-2} (-1)^{r+1} C(n-q+p-1, k-2-r) C(q-p-1, r).
//
// Depends on (p, q) only through the difference q - p. Requires
// 4 <= k <= n and 1 <= p < q <= n.
Integer c_coeff(long n, long k, long p, long q);

// Coefficient table of the alternating k-subset expansion over n points.
// diag is the common coefficient of every |x_p|^2; offdiag maps each
// ordered pair (p, q), p < q, to the coefficient of Re(x_p, x_q).
struct CoeffTable {
  long n = 0;
  long k = 0;
  Integer diag;
  std::map<std::pair<long, long>, Integer> offdiag;

  friend bool operator==(const CoeffTable& a, const CoeffTable& b) {
    return a.n == b.n && a.k == b.k && a.diag == b.diag && a.offdiag == b.offdiag;
  }
};

// Table from the closed forms: diag = C(n-1, k-1), offdiag = 2 * c_coeff.
CoeffTable coeff_closed_form(long n, long k);

constexpr unsigned long kDefaultEnumBudget = 2'000'000;

// Brute-force table: enumerates every increasing k-tuple, builds the
// alternating formal vector, expands its squared norm and accumulates.
// Independent of the closed forms above; the two must agree entry for
// entry. Throws BudgetError when C(n, k) exceeds the subset budget.
CoeffTable coeff_oracle(long n, long k, unsigned long budget = kDefaultEnumBudget);

// Both members of the k = 4 span-coefficient summation identity:
//   lhs = sum_{s=3}^{n-1} c_coeff(n, 4, 1, s) + C(n-1, 3),  rhs = 2 C(n-2, 2).
// The wrap-around pair range collapses to spans 3..n-1 by translation
// invariance of c_coeff. Requires n >= 4.
struct SpanSum {
  Integer lhs;
  Integer rhs;
};
SpanSum span_sum_check(long n);

}  // namespace gramid
