#include "gramid/identities.hpp"

#include "gramid/combinatorics.hpp"

#include <sstream>
#include <stdexcept>

namespace gramid {

namespace {

FormalVector pt(int i) { return FormalVector::point(i); }

// (1/n)(x_1 + ... + x_n)
FormalVector centroid_vec(int n) {
  FormalVector s;
  for (int k = 1; k <= n; ++k) s += pt(k);
  return s.scaled(Rational(1, n));
}

// x_1 - x_2 + x_3 - ... + (-1)^{n-1} x_n
FormalVector alternating_vec(int n) {
  FormalVector s;
  for (int i = 1; i <= n; ++i) s.add_term(i, Rational(i % 2 == 1 ? 1 : -1));
  return s;
}

// ---- LaTeX helpers ---------------------------------------------------

std::string sub(int i) {
  return i < 10 ? "x_" + std::to_string(i) : "x_{" + std::to_string(i) + "}";
}

// Point symbol at index i in a context of n real points; index n+1 is the
// auxiliary free point and renders as a bare "x".
std::string sym(int i, int n) { return i <= n ? sub(i) : "x"; }

std::string norm2(const std::string& body) { return "\\|" + body + "\\|^2"; }

std::string big_norm2(const std::string& body) {
  return "\\left\\|" + body + "\\right\\|^2";
}

std::string coeff_str(const Rational& c) {
  if (c.den() == 1) return c.num().get_str();
  return "\\frac{" + c.num().get_str() + "}{" + c.den().get_str() + "}";
}

// Joins signed terms, eliding unit coefficients and skipping zeros.
class TermJoin {
public:
  void add(const Rational& coeff, const std::string& body) {
    if (coeff.is_zero()) return;
    Rational a = coeff.abs();
    if (coeff.sign() < 0)
      s_ += "-";
    else if (!s_.empty())
      s_ += "+";
    if (a != Rational(1)) s_ += coeff_str(a);
    s_ += body;
  }
  void add(const Integer& coeff, const std::string& body) { add(Rational(coeff), body); }
  void add(long coeff, const std::string& body) { add(Rational(coeff), body); }
  std::string str() const { return s_.empty() ? "0" : s_; }

private:
  std::string s_;
};

// coeff * (joined sum), dropping the wrapper when coeff == 1.
std::string scaled_group(const Rational& coeff, const std::string& joined) {
  if (coeff == Rational(1)) return joined;
  return coeff_str(coeff) + "\\left(" + joined + "\\right)";
}

std::string cyclic_sides_latex(int n) {
  TermJoin t;
  for (int i = 1; i <= n; ++i) t.add(1L, norm2(sub(i) + "-" + sub(i % n + 1)));
  return t.str();
}

std::string alternating_latex(int n) {
  std::string s;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) s += (i % 2 == 1 ? "+" : "-");
    s += sub(i);
  }
  return s;
}

// ---- catalog entries ---------------------------------------------------

IdentitySpec make_parallelogram() {
  IdentitySpec s;
  s.name = "parallelogram";
  s.description = "parallelogram identity";
  s.arity_ok = [](int n) { return n == 2; };
  s.arity_text = "n = 2";
  s.fixed_arity = 2;
  s.build = [](int) {
    NormSum lhs{{Rational(1), pt(1) + pt(2)}, {Rational(1), pt(1) - pt(2)}};
    NormSum rhs{{Rational(2), pt(1)}, {Rational(2), pt(2)}};
    return std::pair{lhs, rhs};
  };
  s.latex = [](int) {
    return std::string(
        "\\|x_1+x_2\\|^2+\\|x_1-x_2\\|^2 = 2(\\|x_1\\|^2+\\|x_2\\|^2)");
  };
  return s;
}

IdentitySpec make_apollonius() {
  IdentitySpec s;
  s.name = "apollonius";
  s.description = "Apollonius' identity (triangle median)";
  s.arity_ok = [](int n) { return n == 3; };
  s.arity_text = "n = 3";
  s.fixed_arity = 3;
  s.build = [](int) {
    NormSum lhs{{Rational(1), pt(1) - pt(3)}, {Rational(1), pt(2) - pt(3)}};
    NormSum rhs{{Rational(2), pt(3) - FormalVector::midpoint(1, 2)},
                {Rational(1, 2), pt(1) - pt(2)}};
    return std::pair{lhs, rhs};
  };
  s.latex = [](int) {
    return std::string(
        "\\|x_1-x_3\\|^2+\\|x_2-x_3\\|^2 = "
        "2\\left\\|x_3-\\frac{x_1+x_2}{2}\\right\\|^2+\\frac{1}{2}\\|x_1-x_2\\|^2");
  };
  return s;
}

IdentitySpec make_euler4() {
  IdentitySpec s;
  s.name = "euler4";
  s.description = "Euler's quadrilateral identity (1748)";
  s.arity_ok = [](int n) { return n == 4; };
  s.arity_text = "n = 4";
  s.fixed_arity = 4;
  s.build = [](int) {
    NormSum lhs{{Rational(1), pt(1) - pt(2)},
                {Rational(1), pt(2) - pt(3)},
                {Rational(1), pt(3) - pt(4)},
                {Rational(1), pt(1) - pt(4)}};
    NormSum rhs{{Rational(1), pt(1) - pt(3)},
                {Rational(1), pt(2) - pt(4)},
                {Rational(4), FormalVector::midpoint(1, 3) - FormalVector::midpoint(2, 4)}};
    return std::pair{lhs, rhs};
  };
  s.latex = [](int) {
    return std::string(
        "\\|x_1-x_2\\|^2+\\|x_2-x_3\\|^2+\\|x_3-x_4\\|^2+\\|x_1-x_4\\|^2 = "
        "\\|x_1-x_3\\|^2+\\|x_2-x_4\\|^2+"
        "4\\left\\|\\frac{x_1+x_3}{2}-\\frac{x_2+x_4}{2}\\right\\|^2");
  };
  return s;
}

IdentitySpec make_centroid_decomposition() {
  IdentitySpec s;
  s.name = "centroid_decomposition";
  s.description = "squared distances to a free point split about the centroid";
  s.arity_ok = [](int n) { return n >= 1; };
  s.arity_text = "n >= 1";
  s.extra_symbols = 1;
  s.build = [](int n) {
    FormalVector x = pt(n + 1);
    FormalVector g = centroid_vec(n);
    NormSum lhs, rhs;
    for (int k = 1; k <= n; ++k) lhs.push_back({Rational(1), pt(k) - x});
    for (int k = 1; k <= n; ++k) rhs.push_back({Rational(1), pt(k) - g});
    rhs.push_back({Rational(n), x - g});
    return std::pair{lhs, rhs};
  };
  s.latex = [](int n) {
    TermJoin l, r;
    for (int k = 1; k <= n; ++k) l.add(1L, norm2(sub(k) + "-x"));
    for (int k = 1; k <= n; ++k) r.add(1L, norm2(sub(k) + "-x_G"));
    r.add(static_cast<long>(n), norm2("x-x_G"));
    return l.str() + " = " + r.str();
  };
  return s;
}

IdentitySpec make_pairwise_centroid() {
  IdentitySpec s;
  s.name = "pairwise_centroid";
  s.description = "sum of pairwise squared distances vs. spread about the centroid";
  s.arity_ok = [](int n) { return n >= 1; };
  s.arity_text = "n >= 1";
  s.build = [](int n) {
    FormalVector g = centroid_vec(n);
    NormSum lhs, rhs;
    for (int k = 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l) lhs.push_back({Rational(1), pt(k) - pt(l)});
    for (int k = 1; k <= n; ++k) rhs.push_back({Rational(n), pt(k) - g});
    return std::pair{lhs, rhs};
  };
  s.latex = [](int n) {
    TermJoin l, r;
    for (int k = 1; k <= n; ++k)
      for (int j = k + 1; j <= n; ++j) l.add(1L, norm2(sub(k) + "-" + sub(j)));
    for (int k = 1; k <= n; ++k) r.add(1L, norm2(sub(k) + "-x_G"));
    return l.str() + " = " + scaled_group(Rational(n), r.str());
  };
  return s;
}

IdentitySpec make_generalized_apollonius() {
  IdentitySpec s;
  s.name = "generalized_apollonius";
  s.description = "Apollonius' identity generalized to n points and a free point";
  s.arity_ok = [](int n) { return n >= 1; };
  s.arity_text = "n >= 1";
  s.extra_symbols = 1;
  s.build = [](int n) {
    FormalVector x = pt(n + 1);
    FormalVector g = centroid_vec(n);
    NormSum lhs, rhs;
    for (int k = 1; k <= n; ++k) lhs.push_back({Rational(1), pt(k) - x});
    for (int k = 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l) rhs.push_back({Rational(1, n), pt(k) - pt(l)});
    rhs.push_back({Rational(n), x - g});
    return std::pair{lhs, rhs};
  };
  s.latex = [](int n) {
    TermJoin l, pairs;
    for (int k = 1; k <= n; ++k) l.add(1L, norm2(sub(k) + "-x"));
    for (int k = 1; k <= n; ++k)
      for (int j = k + 1; j <= n; ++j) pairs.add(1L, norm2(sub(k) + "-" + sub(j)));
    std::string rhs;
    if (n >= 2) rhs = scaled_group(Rational(1, n), pairs.str()) + "+";
    TermJoin last;
    last.add(static_cast<long>(n), norm2("x-x_G"));
    rhs += last.str();
    return l.str() + " = " + rhs;
  };
  return s;
}

// Middle band: pairs (i, j), 1 <= i < j <= n, with 1 < j - i < n - 1.
// Cyclically adjacent pairs (j - i = 1 and the wrap pair (1, n)) are
// excluded; they belong to the cyclic side sum.
template <typename F>
void for_middle_pairs(int n, F&& f) {
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j <= n; ++j)
      if (j - i < n - 1) f(i, j);
}

IdentitySpec make_euler_even() {
  IdentitySpec s;
  s.name = "euler_even";
  s.description = "Euler's identity extended to an even cycle of points";
  s.arity_ok = [](int n) { return n >= 4 && n % 2 == 0; };
  s.arity_text = "even n >= 4";
  s.build = [](int n) {
    NormSum lhs, rhs;
    for (int i = 1; i <= n; ++i) lhs.push_back({Rational(1), pt(i) - pt(i % n + 1)});
    for_middle_pairs(n, [&](int i, int j) {
      rhs.push_back({Rational((j - i) % 2 == 0 ? 1 : -1), pt(i) - pt(j)});
    });
    // the alternating-sum norm stays last; callers peel it off to get the
    // bare middle band
    rhs.push_back({Rational(1), alternating_vec(n)});
    return std::pair{lhs, rhs};
  };
  s.latex = [](int n) {
    TermJoin r;
    for_middle_pairs(n, [&](int i, int j) {
      r.add(static_cast<long>((j - i) % 2 == 0 ? 1 : -1), norm2(sub(i) + "-" + sub(j)));
    });
    r.add(1L, big_norm2(alternating_latex(n)));
    return cyclic_sides_latex(n) + " = " + r.str();
  };
  return s;
}

IdentitySpec make_generalized_euler() {
  IdentitySpec s;
  s.name = "generalized_euler";
  s.description = "Euler's identity generalized to any n >= 4 via span coefficients";
  s.arity_ok = [](int n) { return n >= 4; };
  s.arity_text = "n >= 4";
  s.build = [](int n) {
    Rational scale(binomial(n - 2, 2));
    NormSum lhs, rhs;
    for (int i = 1; i <= n; ++i) lhs.push_back({scale, pt(i) - pt(i % n + 1)});
    for_middle_pairs(n, [&](int i, int j) {
      rhs.push_back({Rational(c_coeff(n, 4, i, j)), pt(i) - pt(j)});
    });
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l)
            rhs.push_back({Rational(1), pt(i) - pt(j) + pt(k) - pt(l)});
    return std::pair{lhs, rhs};
  };
  s.latex = [](int n) {
    std::string lhs = scaled_group(Rational(binomial(n - 2, 2)), cyclic_sides_latex(n));
    TermJoin r;
    for_middle_pairs(n, [&](int i, int j) {
      r.add(c_coeff(n, 4, i, j), norm2(sub(i) + "-" + sub(j)));
    });
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l)
            r.add(1L, norm2(sub(i) + "-" + sub(j) + "+" + sub(k) + "-" + sub(l)));
    return lhs + " = " + r.str();
  };
  return s;
}

void require_arity(const IdentitySpec& spec, int n) {
  if (!spec.arity_ok(n))
    throw std::domain_error("identity '" + spec.name + "' requires " +
                            spec.arity_text + "; got n = " + std::to_string(n));
}

}  // namespace

QuadraticForm expand(const NormSum& sum) {
  QuadraticForm f;
  for (const auto& term : sum) f += norm_sq(term.vec).scaled(term.coeff);
  return f;
}

const std::vector<IdentitySpec>& catalog() {
  static const std::vector<IdentitySpec> cat = [] {
    std::vector<IdentitySpec> c;
    c.push_back(make_parallelogram());
    c.push_back(make_apollonius());
    c.push_back(make_euler4());
    c.push_back(make_centroid_decomposition());
    c.push_back(make_pairwise_centroid());
    c.push_back(make_generalized_apollonius());
    c.push_back(make_euler_even());
    c.push_back(make_generalized_euler());
    return c;
  }();
  return cat;
}

const IdentitySpec& find_identity(const std::string& name) {
  for (const auto& spec : catalog())
    if (spec.name == name) return spec;
  std::string known;
  for (const auto& spec : catalog()) {
    if (!known.empty()) known += ", ";
    known += spec.name;
  }
  throw std::invalid_argument("unknown identity '" + name + "'; known identities: " + known);
}

Verdict verify_symbolic(const IdentitySpec& spec, int n) {
  require_arity(spec, n);
  auto [lhs, rhs] = spec.build(n);
  QuadraticForm residual = expand(lhs) - expand(rhs);
  bool pass = residual.is_zero();
  return {pass, std::move(residual)};
}

ReductionVerdict reduction_check(const std::string& general_name,
                                 const std::string& special_name, int n,
                                 const std::map<int, FormalVector>& substitution) {
  const IdentitySpec& gen = find_identity(general_name);
  const IdentitySpec& spc = find_identity(special_name);
  require_arity(gen, n);
  int ns = spc.fixed_arity ? *spc.fixed_arity : n;
  require_arity(spc, ns);

  auto [gl, gr] = gen.build(n);
  auto [sl, sr] = spc.build(ns);
  QuadraticForm GL = substitute(expand(gl), substitution);
  QuadraticForm GR = substitute(expand(gr), substitution);
  QuadraticForm SL = expand(sl);
  QuadraticForm SR = expand(sr);

  std::optional<Rational> factor;
  auto side_matches = [&factor](const QuadraticForm& g, const QuadraticForm& s) {
    if (s.is_zero()) return g.is_zero();
    if (g.is_zero()) return false;
    auto key = s.coeffs().begin()->first;
    Rational cand = g.coeff(key.first, key.second) / s.coeffs().begin()->second;
    if (cand.is_zero()) return false;
    if (factor && *factor != cand) return false;
    factor = cand;
    return g == s.scaled(cand);
  };

  ReductionVerdict v;
  v.pass = side_matches(GL, SL) && side_matches(GR, SR);
  v.factor = factor.value_or(Rational(1));
  std::ostringstream os;
  if (v.pass)
    os << general_name << " at n=" << n << " reduces to " << special_name
       << " with factor " << v.factor;
  else
    os << general_name << " at n=" << n << " does not reduce to " << special_name;
  v.detail = os.str();
  return v;
}

std::string to_latex(const IdentitySpec& spec, int n) {
  require_arity(spec, n);
  return spec.latex(n);
}

}  // namespace gramid
