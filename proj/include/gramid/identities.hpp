#pragma once

#include "gramid/quadform.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gramid {

// One summand coeff * |vec|^2 of an identity side. Keeping sides as lists
// of these (rather than pre-expanded forms) lets the same builder feed both
// the exact expansion and the LaTeX renderer.
struct NormTerm {
  Rational coeff;
  FormalVector vec;
};
using NormSum = std::vector<NormTerm>;

QuadraticForm expand(const NormSum& sum);

// A named identity between two sums of squared norms of formal vectors,
// parameterized by the number of points n. Auxiliary free symbols (such as
// the arbitrary reference point of the centroid identities) occupy indices
// n+1 .. n+extra_symbols.
struct IdentitySpec {
  std::string name;
  std::string description;
  std::function<bool(int)> arity_ok;
  std::string arity_text;               // human form of the rule, e.g. "even n >= 4"
  std::optional<int> fixed_arity;       // set for the fixed-n classics
  int extra_symbols = 0;
  std::function<std::pair<NormSum, NormSum>(int)> build;  // n -> (lhs, rhs)
  std::function<std::string(int)> latex;                  // n -> "LHS = RHS"
};

// The full catalog, in a fixed order:
//   parallelogram, apollonius, euler4, centroid_decomposition,
//   pairwise_centroid, generalized_apollonius, euler_even, generalized_euler.
const std::vector<IdentitySpec>& catalog();

// Lookup by name; throws std::invalid_argument listing all known names.
const IdentitySpec& find_identity(const std::string& name);

struct Verdict {
  bool pass;
  QuadraticForm residual;  // lhs - rhs; zero exactly when pass
};

// Builds both sides at the given n and decides LHS == RHS by exact
// coefficient cancellation. Throws std::domain_error when n violates the
// identity's arity rule. On failure the nonzero residual localizes the
// disagreeing Gram monomials.
Verdict verify_symbolic(const IdentitySpec& spec, int n);

struct ReductionVerdict {
  bool pass;
  Rational factor;     // substituted general side == factor * special side
  std::string detail;
};

// Applies the substitution to the general identity's expanded sides and
// compares them with the special identity's sides up to one common nonzero
// rational factor. The special identity is built at its fixed arity when it
// has one, otherwise at n.
ReductionVerdict reduction_check(const std::string& general_name,
                                 const std::string& special_name, int n,
                                 const std::map<int, FormalVector>& substitution);

// Math-mode LaTeX for the identity at concrete n, with all coefficients
// evaluated to explicit numbers.
std::string to_latex(const IdentitySpec& spec, int n);

}  // namespace gramid
