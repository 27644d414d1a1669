#include "gramid/models.hpp"

#include <cmath>
#include <stdexcept>

namespace gramid {

namespace {

template <typename S>
void check_points(int dimension, const std::vector<std::vector<S>>& pts) {
  if (dimension < 1) throw std::domain_error("point configuration: dimension must be >= 1");
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (static_cast<int>(pts[i].size()) != dimension)
      throw std::domain_error("point " + std::to_string(i + 1) + " has " +
                              std::to_string(pts[i].size()) + " coordinates, expected " +
                              std::to_string(dimension));
}

template <typename S>
Gram<S> dot_gram(const std::vector<std::vector<S>>& pts) {
  const int n = static_cast<int>(pts.size());
  Gram<S> g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      S acc{};
      const auto& a = pts[static_cast<std::size_t>(i - 1)];
      const auto& b = pts[static_cast<std::size_t>(j - 1)];
      for (std::size_t d = 0; d < a.size(); ++d) acc += a[d] * b[d];
      g.set(i, j, acc);
    }
  return g;
}

template <typename S>
std::vector<S> average(const std::vector<std::vector<S>>& pts, const std::vector<int>& indices) {
  if (indices.empty()) throw std::domain_error("centroid: empty index set");
  const int n = static_cast<int>(pts.size());
  std::vector<S> acc(pts[0].size(), S{});
  for (int idx : indices) {
    if (idx < 1 || idx > n)
      throw std::domain_error("centroid: index " + std::to_string(idx) + " out of range");
    const auto& p = pts[static_cast<std::size_t>(idx - 1)];
    for (std::size_t d = 0; d < acc.size(); ++d) acc[d] += p[d];
  }
  const S divisor = static_cast<S>(static_cast<int>(indices.size()));
  for (auto& c : acc) c /= divisor;
  return acc;
}

template <typename S>
S dist_sq_impl(const std::vector<S>& a, const std::vector<S>& b) {
  if (a.size() != b.size()) throw std::domain_error("dist_sq: dimension mismatch");
  S acc{};
  for (std::size_t d = 0; d < a.size(); ++d) {
    S diff = a[d] - b[d];
    acc += diff * diff;
  }
  return acc;
}

}  // namespace

ScalarKind kind_of(const PointConfig& cfg) {
  if (std::holds_alternative<RationalConfig>(cfg)) return ScalarKind::rational;
  if (std::holds_alternative<RealConfig>(cfg)) return ScalarKind::real;
  return ScalarKind::complex_;
}

std::string kind_name(ScalarKind k) {
  switch (k) {
    case ScalarKind::rational: return "rational";
    case ScalarKind::real: return "float";
    case ScalarKind::complex_: return "complex";
  }
  return "?";
}

int dimension_of(const PointConfig& cfg) {
  return std::visit([](const auto& c) { return c.dimension; }, cfg);
}

int count_of(const PointConfig& cfg) {
  return std::visit([](const auto& c) { return static_cast<int>(c.points.size()); }, cfg);
}

void validate_config(const PointConfig& cfg) {
  std::visit([](const auto& c) { check_points(c.dimension, c.points); }, cfg);
}

Gram<Rational> gram_euclidean(const RationalConfig& cfg) {
  check_points(cfg.dimension, cfg.points);
  return dot_gram(cfg.points);
}

Gram<double> gram_euclidean(const RealConfig& cfg) {
  check_points(cfg.dimension, cfg.points);
  return dot_gram(cfg.points);
}

Gram<double> gram_complex(const ComplexConfig& cfg) {
  check_points(cfg.dimension, cfg.points);
  const int n = static_cast<int>(cfg.points.size());
  Gram<double> g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      double acc = 0;
      const auto& a = cfg.points[static_cast<std::size_t>(i - 1)];
      const auto& b = cfg.points[static_cast<std::size_t>(j - 1)];
      for (std::size_t d = 0; d < a.size(); ++d)
        acc += a[d].real() * b[d].real() + a[d].imag() * b[d].imag();
      g.set(i, j, acc);
    }
  return g;
}

Gram<Rational> gram_poly_exp(const WeightedPolySpace& space) {
  const int n = static_cast<int>(space.degrees.size());
  for (int d : space.degrees)
    if (d < 0) throw std::domain_error("gram_poly_exp: negative degree");
  Gram<Rational> g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      unsigned long s = static_cast<unsigned long>(space.degrees[static_cast<std::size_t>(i - 1)] +
                                                   space.degrees[static_cast<std::size_t>(j - 1)]);
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), s);
      g.set(i, j, Rational(f));
    }
  return g;
}

std::vector<Rational> midpoint(const RationalConfig& cfg, int i, int j) {
  return average(cfg.points, {i, j});
}

std::vector<Rational> centroid(const RationalConfig& cfg, const std::vector<int>& indices) {
  return average(cfg.points, indices);
}

std::vector<double> midpoint(const RealConfig& cfg, int i, int j) {
  return average(cfg.points, {i, j});
}

std::vector<double> centroid(const RealConfig& cfg, const std::vector<int>& indices) {
  return average(cfg.points, indices);
}

Rational dist_sq(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return dist_sq_impl(a, b);
}

double dist_sq(const std::vector<double>& a, const std::vector<double>& b) {
  return dist_sq_impl(a, b);
}

namespace {

// Appends the auxiliary points to the configuration's own, after checking
// kind, dimension and count.
template <typename Config>
Config with_extras(const Config& cfg, const std::optional<PointConfig>& extra,
                   const IdentitySpec& spec) {
  Config all = cfg;
  if (spec.extra_symbols == 0) {
    if (extra && count_of(*extra) > 0)
      throw std::domain_error("identity '" + spec.name + "' takes no auxiliary points");
    return all;
  }
  if (!extra)
    throw std::domain_error("identity '" + spec.name + "' needs " +
                            std::to_string(spec.extra_symbols) + " auxiliary point(s)");
  const auto* e = std::get_if<Config>(&*extra);
  if (!e)
    throw std::domain_error("auxiliary points must use the same scalar kind as the configuration");
  if (e->dimension != cfg.dimension)
    throw std::domain_error("auxiliary points must match the configuration dimension");
  if (static_cast<int>(e->points.size()) != spec.extra_symbols)
    throw std::domain_error("identity '" + spec.name + "' needs exactly " +
                            std::to_string(spec.extra_symbols) + " auxiliary point(s), got " +
                            std::to_string(e->points.size()));
  for (const auto& p : e->points) all.points.push_back(p);
  return all;
}

}  // namespace

ResidualReport numeric_residual(const IdentitySpec& spec, const PointConfig& cfg,
                                const std::optional<PointConfig>& extra) {
  validate_config(cfg);
  const int n = count_of(cfg);
  if (!spec.arity_ok(n))
    throw std::domain_error("identity '" + spec.name + "' requires " + spec.arity_text +
                            "; configuration has n = " + std::to_string(n));
  auto [lhs, rhs] = spec.build(n);
  QuadraticForm lhs_form = expand(lhs);
  QuadraticForm rhs_form = expand(rhs);

  ResidualReport rep;
  if (const auto* rc = std::get_if<RationalConfig>(&cfg)) {
    Gram<Rational> g = gram_euclidean(with_extras(*rc, extra, spec));
    Rational l = evaluate(lhs_form, g);
    Rational r = evaluate(rhs_form, g);
    rep.exact = true;
    rep.exact_residual = l - r;
    rep.float_residual = rep.exact_residual.to_double();
    rep.lhs_value = l.to_double();
  } else if (const auto* fc = std::get_if<RealConfig>(&cfg)) {
    Gram<double> g = gram_euclidean(with_extras(*fc, extra, spec));
    double l = evaluate(lhs_form, g);
    double r = evaluate(rhs_form, g);
    rep.float_residual = l - r;
    rep.lhs_value = l;
  } else {
    const auto& cc = std::get<ComplexConfig>(cfg);
    Gram<double> g = gram_complex(with_extras(cc, extra, spec));
    double l = evaluate(lhs_form, g);
    double r = evaluate(rhs_form, g);
    rep.float_residual = l - r;
    rep.lhs_value = l;
  }
  return rep;
}

CircumCheck circumradius_check(const RationalConfig& cfg, const std::vector<Rational>& center,
                               const Rational& radius_sq) {
  check_points(cfg.dimension, cfg.points);
  if (static_cast<int>(center.size()) != cfg.dimension)
    throw std::domain_error("circumradius_check: center dimension mismatch");
  const int n = static_cast<int>(cfg.points.size());
  if (n < 1) throw std::domain_error("circumradius_check: empty configuration");

  Rational worst;
  int worst_idx = 0;
  for (int k = 1; k <= n; ++k) {
    Rational d = dist_sq(cfg.points[static_cast<std::size_t>(k - 1)], center);
    Rational err = (d - radius_sq).abs();
    if (err > worst) {
      worst = err;
      worst_idx = k;
    }
  }
  if (!worst.is_zero())
    throw std::domain_error("circumradius_check: point " + std::to_string(worst_idx) +
                            " is off the sphere, |OA|^2 differs from R^2 by " + worst.str());

  CircumCheck res;
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      res.lhs += dist_sq(cfg.points[static_cast<std::size_t>(k - 1)],
                         cfg.points[static_cast<std::size_t>(l - 1)]);
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) all[static_cast<std::size_t>(k - 1)] = k;
  Rational og_sq = dist_sq(centroid(cfg, all), center);
  res.rhs = Rational(n) * Rational(n) * (radius_sq - og_sq);
  return res;
}

CircumCheckF circumradius_check(const RealConfig& cfg, const std::vector<double>& center,
                                double radius_sq) {
  check_points(cfg.dimension, cfg.points);
  if (static_cast<int>(center.size()) != cfg.dimension)
    throw std::domain_error("circumradius_check: center dimension mismatch");
  const int n = static_cast<int>(cfg.points.size());
  if (n < 1) throw std::domain_error("circumradius_check: empty configuration");

  const double tol = 1e-9 * std::max(1.0, std::abs(radius_sq));
  double worst = 0;
  int worst_idx = 0;
  for (int k = 1; k <= n; ++k) {
    double err = std::abs(dist_sq(cfg.points[static_cast<std::size_t>(k - 1)], center) - radius_sq);
    if (err > worst) {
      worst = err;
      worst_idx = k;
    }
  }
  if (worst > tol)
    throw std::domain_error("circumradius_check: point " + std::to_string(worst_idx) +
                            " is off the sphere, |OA|^2 differs from R^2 by " +
                            std::to_string(worst));

  CircumCheckF res{0, 0};
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      res.lhs += dist_sq(cfg.points[static_cast<std::size_t>(k - 1)],
                         cfg.points[static_cast<std::size_t>(l - 1)]);
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) all[static_cast<std::size_t>(k - 1)] = k;
  double og_sq = dist_sq(centroid(cfg, all), center);
  res.rhs = static_cast<double>(n) * n * (radius_sq - og_sq);
  return res;
}

ParallelogramCheck parallelogram_characterization(const RationalConfig& cfg) {
  check_points(cfg.dimension, cfg.points);
  const int total = static_cast<int>(cfg.points.size());
  if (total < 4 || total % 2 != 0)
    throw std::domain_error("parallelogram_characterization needs an even point count >= 4, got " +
                            std::to_string(total));

  const IdentitySpec& ee = find_identity("euler_even");
  auto [lhs, rhs] = ee.build(total);
  rhs.pop_back();  // drop the alternating-sum norm, keep the middle band
  Gram<Rational> g = gram_euclidean(cfg);
  Rational side_sum = evaluate(expand(lhs), g);
  Rational middle = evaluate(expand(rhs), g);

  std::vector<int> odd, even;
  for (int i = 1; i <= total; i += 2) odd.push_back(i);
  for (int i = 2; i <= total; i += 2) even.push_back(i);

  ParallelogramCheck res;
  res.gap = side_sum - middle;
  res.eq_holds = res.gap.is_zero();
  res.g_odd = centroid(cfg, odd);
  res.g_even = centroid(cfg, even);
  res.centroids_equal = res.g_odd == res.g_even;
  return res;
}

}  // namespace gramid
