#pragma once

#include "gramid/identities.hpp"
#include "gramid/quadform.hpp"

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gramid {

// Concrete point configurations in the three supported model spaces.
// Duplicate points are legal everywhere; none of the identities require
// points in general position.

struct RationalConfig {
  int dimension = 0;
  std::vector<std::vector<Rational>> points;
};

struct RealConfig {
  int dimension = 0;
  std::vector<std::vector<double>> points;
};

struct ComplexConfig {
  int dimension = 0;
  std::vector<std::vector<std::complex<double>>> points;
};

using PointConfig = std::variant<RationalConfig, RealConfig, ComplexConfig>;

enum class ScalarKind { rational, real, complex_ };

ScalarKind kind_of(const PointConfig& cfg);
std::string kind_name(ScalarKind k);
int dimension_of(const PointConfig& cfg);
int count_of(const PointConfig& cfg);

// Throws std::domain_error when any point's length differs from dimension.
void validate_config(const PointConfig& cfg);

// Euclidean dot-product Grams. Exact for rational coordinates.
Gram<Rational> gram_euclidean(const RationalConfig& cfg);
Gram<double> gram_euclidean(const RealConfig& cfg);

// g_ij = Re(sum_d x_i[d] * conj(x_j[d])); only the real part ever feeds
// the symbolic layer.
Gram<double> gram_complex(const ComplexConfig& cfg);

// Polynomial model space: monomials t^k under the exponentially weighted
// inner product on [0, inf), whose moments are exact factorials. The Gram
// entry for degrees (a, b) is (a + b)!.
struct WeightedPolySpace {
  std::vector<int> degrees;
};
Gram<Rational> gram_poly_exp(const WeightedPolySpace& space);

// Exact componentwise geometry on rational configurations (1-based indices).
std::vector<Rational> midpoint(const RationalConfig& cfg, int i, int j);
std::vector<Rational> centroid(const RationalConfig& cfg, const std::vector<int>& indices);
std::vector<double> midpoint(const RealConfig& cfg, int i, int j);
std::vector<double> centroid(const RealConfig& cfg, const std::vector<int>& indices);

Rational dist_sq(const std::vector<Rational>& a, const std::vector<Rational>& b);
double dist_sq(const std::vector<double>& a, const std::vector<double>& b);

// Result of evaluating one catalog identity on a concrete configuration.
// For rational configurations the residual is exact; for float ones the
// float fields carry the rounded values.
struct ResidualReport {
  bool exact = false;
  Rational exact_residual;   // lhs - rhs, meaningful when exact
  double float_residual = 0; // lhs - rhs as double (exact path: converted)
  double lhs_value = 0;      // evaluated LHS, for relative-error scaling
};

// Evaluates LHS and RHS on the configuration's Gram and reports their
// difference. Identities with auxiliary symbols take them from `extra`
// (same scalar kind and dimension, exactly extra_symbols points).
ResidualReport numeric_residual(const IdentitySpec& spec, const PointConfig& cfg,
                                const std::optional<PointConfig>& extra = std::nullopt);

// Both members of the cocircular-set identity
//   sum_{k<l} |A_k A_l|^2  =  n^2 (R^2 - |OG|^2).
// Takes the *squared* radius so the exact path stays rational (vertices of
// a rational point set may lie on a circle of irrational radius). The
// equidistance precondition is validated: exact equality for rationals,
// relative tolerance 1e-9 for floats; violations name the worst offender.
struct CircumCheck {
  Rational lhs;
  Rational rhs;
};
CircumCheck circumradius_check(const RationalConfig& cfg,
                               const std::vector<Rational>& center,
                               const Rational& radius_sq);

struct CircumCheckF {
  double lhs;
  double rhs;
};
CircumCheckF circumradius_check(const RealConfig& cfg, const std::vector<double>& center,
                                double radius_sq);

// Characterization on 2n points: the cyclic side sum equals the signed
// middle band exactly when the centroids of the odd- and even-indexed
// points coincide. `gap` is (side sum) - (middle band), which equals
// n^2 |G1 G2|^2.
struct ParallelogramCheck {
  bool eq_holds = false;
  bool centroids_equal = false;
  Rational gap;
  std::vector<Rational> g_odd;
  std::vector<Rational> g_even;
};
ParallelogramCheck parallelogram_characterization(const RationalConfig& cfg);

}  // namespace gramid
