#pragma once

// Hyperelliptic family: master polynomial prod_i (t - z_i)^{(p^s-1)/2},
// solutions I^ell = coefficient of t^{ell p^s - 1} in
// E_{r,s}(p^r lambda t) * master / (t - z_i), and verifiers for the rescaled
// KZ and dynamical equations in cleared-denominator form with lambda formal.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pskz/certificate.hpp"
#include "pskz/mpoly.hpp"
#include "pskz/params.hpp"
#include "pskz/truncexp.hpp"

namespace pskz::hyper {

namespace detail {

template <class Ring>
using Poly = MultiPoly<Ring>;

template <class Ring>
Poly<Ring> t_minus_z(const std::shared_ptr<const Ring>& ring, std::uint32_t i) {
  return Poly<Ring>::variable(ring, kT) - Poly<Ring>::variable(ring, z_var(i));
}

template <class Ring>
Poly<Ring> z_minus_z(const std::shared_ptr<const Ring>& ring, std::uint32_t i, std::uint32_t j) {
  return Poly<Ring>::variable(ring, z_var(i)) - Poly<Ring>::variable(ring, z_var(j));
}

/// prod_j (t - z_j)^{exps[j]}; a zero exponent drops the factor.
template <class Ring>
Poly<Ring> linear_power_product(const std::shared_ptr<const Ring>& ring,
                                const std::vector<std::uint64_t>& exps) {
  auto out = Poly<Ring>::constant(ring, {kT}, ring->one());
  for (std::uint32_t j = 1; j <= exps.size(); ++j)
    if (exps[j - 1] > 0) out = out * pow(t_minus_z(ring, j), exps[j - 1]);
  return out;
}

/// Coefficient of t^target in factor * prod_j (t - z_j)^{half} / (t - z_i), for
/// every i. The common part prod_j (t - z_j)^{half - 1} is built once in a
/// window of width n - 1 below the target, then each component multiplies in
/// its own prod_{j != i} (t - z_j).
template <class Ring>
std::vector<Poly<Ring>> extract_components(const std::shared_ptr<const Ring>& ring,
                                           std::uint32_t n, std::uint64_t half,
                                           const std::optional<Poly<Ring>>& factor,
                                           std::uint32_t target) {
  std::vector<Poly<Ring>> factors;
  if (factor) factors.push_back(*factor);
  if (half > 1)
    for (std::uint32_t j = 1; j <= n; ++j) factors.push_back(pow(t_minus_z(ring, j), half - 1));
  if (factors.empty()) factors.push_back(Poly<Ring>::constant(ring, {kT}, ring->one()));
  const std::vector<std::pair<std::string, std::uint32_t>> tgt{{kT, target}};
  const auto common = windowed_product<Ring>(factors, tgt, {n - 1});

  std::vector<Poly<Ring>> out;
  for (std::uint32_t i = 1; i <= n; ++i) {
    auto rest = Poly<Ring>::constant(ring, {kT}, ring->one());
    for (std::uint32_t j = 1; j <= n; ++j)
      if (j != i) rest = rest * t_minus_z(ring, j);
    out.push_back(coefficient_of_product(common, rest, tgt));
  }
  return out;
}

}  // namespace detail

/// Phi_s^o = prod_{i=1}^{2g+1} (t - z_i)^{(p^s-1)/2}, fully expanded.
template <class Ring>
MultiPoly<Ring> master_poly(const std::shared_ptr<const Ring>& ring, const HyperParams& params) {
  return detail::linear_power_product(ring, std::vector<std::uint64_t>(params.n(), params.half()));
}

/// Psi_s, component i = E_{r,s}(p^r lambda t) * Phi_s^o / (t - z_i). The
/// division lowers the exponent of the i-th factor before expansion.
template <class Ring>
std::vector<MultiPoly<Ring>> psi_vector(const std::shared_ptr<const Ring>& ring,
                                        const HyperParams& params) {
  const auto e = trunc_exp_poly(MultiPoly<Ring>::variable(ring, kLambda) *
                                MultiPoly<Ring>::variable(ring, kT));
  std::vector<MultiPoly<Ring>> out;
  for (std::uint32_t i = 1; i <= params.n(); ++i) {
    std::vector<std::uint64_t> exps(params.n(), params.half());
    exps[i - 1] -= 1;
    out.push_back(e * detail::linear_power_product(ring, exps));
  }
  return out;
}

/// I^ell = coefficient of t^{ell p^s - 1} in each component of Psi_s.
template <class Ring>
SolutionCertificate<Ring> construct_solution(const std::shared_ptr<const Ring>& ring,
                                             const HyperParams& params) {
  if (!(ring->params() == params.ring)) throw RingMismatch();
  const auto e = trunc_exp_poly(MultiPoly<Ring>::variable(ring, kLambda) *
                                MultiPoly<Ring>::variable(ring, kT));
  auto comps = detail::extract_components<Ring>(ring, params.n(), params.half(), e,
                                                static_cast<std::uint32_t>(params.target()));
  SolutionCertificate<Ring> cert{params, ring, params.solution_vars(), {}};
  for (std::uint32_t i = 1; i <= params.n(); ++i)
    cert.components.push_back({{i}, comps[i - 1].with_vars(cert.vars)});
  return cert;
}

namespace detail {

template <class Ring>
const HyperParams& require_hyper(const SolutionCertificate<Ring>& cert) {
  if (cert.family() != Family::hyper) throw WrongFamily(Family::hyper, cert.family());
  return cert.template as<HyperParams>();
}

}  // namespace detail

/// Cleared KZ residuals:
///   R_ij = (z_i - z_j) dI_j/dz_i - (1/2)(I_i - I_j), i != j,
///   R_i  = prod_{j != i}(z_i - z_j)(dI_i/dz_i - p^r lambda I_i)
///          + (1/2) sum_{j != i} prod_{m != i,j}(z_i - z_m)(I_i - I_j).
template <class Ring>
ResidualReport verify_kz(const SolutionCertificate<Ring>& cert) {
  const auto& params = detail::require_hyper(cert);
  const auto& ring = cert.ring;
  const std::uint32_t n = params.n();
  const auto half = ring->embed_rational(1, 2);
  auto I = [&](std::uint32_t i) -> const MultiPoly<Ring>& { return cert.components[i - 1].poly; };
  ResidualReport report{"kz", {}};

  for (std::uint32_t i = 1; i <= n; ++i) {
    const auto zi = z_var(i);
    for (std::uint32_t j = 1; j <= n; ++j) {
      if (j == i) continue;
      auto r = detail::z_minus_z(ring, i, j) * derivative(I(j), zi) - scale(I(i) - I(j), half);
      report.entries.push_back(
          residual_entry("KZ1[" + std::to_string(i) + "," + std::to_string(j) + "]", r));
    }
  }
  const auto lambda_pr =
      scale(MultiPoly<Ring>::variable(ring, kLambda), ring->p_to_r());
  for (std::uint32_t i = 1; i <= n; ++i) {
    const auto zi = z_var(i);
    auto prod_all = MultiPoly<Ring>::constant(ring, {}, ring->one());
    for (std::uint32_t j = 1; j <= n; ++j)
      if (j != i) prod_all = prod_all * detail::z_minus_z(ring, i, j);
    auto r = prod_all * (derivative(I(i), zi) - lambda_pr * I(i));
    MultiPoly<Ring> sum(ring, cert.vars);
    for (std::uint32_t j = 1; j <= n; ++j) {
      if (j == i) continue;
      auto prod = MultiPoly<Ring>::constant(ring, {}, ring->one());
      for (std::uint32_t m = 1; m <= n; ++m)
        if (m != i && m != j) prod = prod * detail::z_minus_z(ring, i, m);
      sum = sum + prod * (I(i) - I(j));
    }
    r = r + scale(sum, half);
    report.entries.push_back(residual_entry("KZ2[" + std::to_string(i) + "]", r));
  }
  return report;
}

/// Cleared dynamical residuals D_i = 2 lambda dI_i/dlambda - 2 p^r lambda z_i I_i - sum_j I_j.
/// Vanishing with lambda formal gives the equation for every unit lambda.
template <class Ring>
ResidualReport verify_dynamical(const SolutionCertificate<Ring>& cert) {
  const auto& params = detail::require_hyper(cert);
  const auto& ring = cert.ring;
  const std::uint32_t n = params.n();
  const auto two = ring->from_int(2);
  const auto lambda = MultiPoly<Ring>::variable(ring, kLambda);
  MultiPoly<Ring> total(ring, cert.vars);
  for (const auto& c : cert.components) total = total + c.poly;
  ResidualReport report{"dynamical", {}};
  for (std::uint32_t i = 1; i <= n; ++i) {
    const auto& Ii = cert.components[i - 1].poly;
    auto zi = MultiPoly<Ring>::variable(ring, z_var(i));
    auto r = scale(lambda * derivative(Ii.with_vars(cert.vars), kLambda), two) -
             scale(lambda * zi * Ii, ring->mul(two, ring->p_to_r())) - total;
    report.entries.push_back(residual_entry("D[" + std::to_string(i) + "]", r));
  }
  return report;
}

/// sum_j I_j(z, 0); zero mod p^s for every hypergeometric solution.
template <class Ring>
MultiPoly<Ring> lambda_zero_sum(const SolutionCertificate<Ring>& cert) {
  detail::require_hyper(cert);
  const auto& ring = cert.ring;
  const auto zero = MultiPoly<Ring>(ring, {});
  MultiPoly<Ring> sum(ring, cert.vars);
  for (const auto& c : cert.components)
    sum = sum + substitute(c.poly.with_vars(cert.vars), kLambda, zero);
  return sum;
}

/// p^s + 2g - 1 > s (2p - 2)/(p - 2), the degree condition under which
/// I^ell vanishes for every ell > g.
inline bool vanishing_applies(const RingParams& rp, std::uint32_t g) {
  return (rp.modulus() + 2 * g - 1) * (rp.p - 2) > rp.s * (2 * rp.p - 2);
}

struct VanishingResult {
  bool applicable = false;
  bool all_zero = false;
  std::vector<std::uint32_t> checked_ell;
};

/// Constructs I^ell for ell = g+1..g+3 (r = 1) and checks each is zero.
inline VanishingResult vanishing_check(const HyperParams& params) {
  VanishingResult out;
  const auto rp = params.ring.with_r(1, 1);
  out.applicable = vanishing_applies(rp, params.g);
  if (!out.applicable) return out;
  auto ring = std::make_shared<const ResidueRing>(rp);
  out.all_zero = true;
  for (std::uint32_t ell = params.g + 1; ell <= params.g + 3; ++ell) {
    out.checked_ell.push_back(ell);
    auto cert = construct_solution(ring, HyperParams::make(rp, params.g, ell));
    if (!cert.is_zero()) out.all_zero = false;
  }
  return out;
}

struct IndependenceResult {
  enum class Verdict { independent, dependent, undetermined };
  Verdict verdict = Verdict::undetermined;
  /// 1-based columns of the witnessing g x g minor.
  std::vector<std::uint32_t> columns;
  /// z-specialization in F_p^n where that minor is a nonzero scalar.
  std::vector<std::uint64_t> point;
  std::uint64_t minor_value = 0;
  /// Rows I^ell(z, 0) mod p, ell = 1..g.
  std::vector<std::vector<MultiPoly<ResidueRing>>> rows;
};

namespace detail {

/// Determinant over a commutative ring by Laplace expansion along the first row.
template <class T, class Mul, class Add, class Neg>
T laplace_det(const std::vector<std::vector<T>>& m, const T& one, Mul mul, Add add, Neg neg) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  std::optional<T> det;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    T term = mul(m[0][c], laplace_det(minor, one, mul, add, neg));
    if (c % 2 == 1) term = neg(term);
    det = det ? add(*det, term) : term;
  }
  return *det;
}

/// Advances a point of F_p^n in lexicographic order; false after the last one.
inline bool next_point(std::vector<std::uint64_t>& point, std::uint64_t p) {
  for (std::size_t pos = point.size(); pos-- > 0;) {
    if (++point[pos] < p) return true;
    point[pos] = 0;
  }
  return false;
}

inline void combinations(std::uint32_t n, std::uint32_t k, std::vector<std::uint32_t>& cur,
                         std::uint32_t start, std::vector<std::vector<std::uint32_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t i = start; i <= n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Linear independence over F_p[z] of the projections of I^1(z,0)..I^g(z,0).
/// Minors are tested by specialization at points of F_p^n first (a nonzero
/// value is a witness); when no point separates them, minors up to a size
/// limit are expanded symbolically to decide dependence.
inline IndependenceResult independence_check(const HyperParams& params,
                                             std::size_t max_points = 200000) {
  const auto& rp = params.ring;
  if (rp.modulus() <= 2ull * params.g + 1) throw ParamError("hypothesis p^s > 2g+1 violated");
  // I^ell(z, 0) has integer coefficients, so it can be built directly mod p
  // with the exponents (p^s - 1)/2 taken from the original ring.
  auto ring = std::make_shared<const ResidueRing>(RingParams::make(rp.p, 1));
  const std::uint32_t n = params.n();
  IndependenceResult out;
  for (std::uint32_t ell = 1; ell <= params.g; ++ell) {
    auto comps = detail::extract_components<ResidueRing>(
        ring, n, params.half(), std::nullopt, static_cast<std::uint32_t>(ell * rp.modulus() - 1));
    std::vector<MultiPoly<ResidueRing>> row;
    std::vector<std::string> zvars;
    for (std::uint32_t i = 1; i <= n; ++i) zvars.push_back(z_var(i));
    for (auto& c : comps) row.push_back(c.with_vars(zvars));
    out.rows.push_back(std::move(row));
  }

  std::vector<std::vector<std::uint32_t>> column_sets;
  std::vector<std::uint32_t> cur;
  detail::combinations(n, params.g, cur, 1, column_sets);

  const std::uint64_t p = rp.p;
  auto mul = [&](std::uint64_t a, std::uint64_t b) { return ring->mul(a, b); };
  auto add = [&](std::uint64_t a, std::uint64_t b) { return ring->add(a, b); };
  auto neg = [&](std::uint64_t a) { return ring->neg(a); };

  std::vector<std::uint64_t> point(n, 0);
  for (std::size_t tried = 0; tried < max_points; ++tried) {
    std::map<std::string, std::uint64_t> at;
    for (std::uint32_t i = 1; i <= n; ++i) at[z_var(i)] = point[i - 1];
    std::vector<std::vector<std::uint64_t>> values;
    for (const auto& row : out.rows) {
      std::vector<std::uint64_t> v;
      for (const auto& poly : row) v.push_back(evaluate(poly, at));
      values.push_back(std::move(v));
    }
    for (const auto& cols : column_sets) {
      std::vector<std::vector<std::uint64_t>> m;
      for (const auto& row : values) {
        std::vector<std::uint64_t> r;
        for (auto c : cols) r.push_back(row[c - 1]);
        m.push_back(std::move(r));
      }
      const auto det = detail::laplace_det<std::uint64_t>(m, 1, mul, add, neg);
      if (det != 0) {
        out.verdict = IndependenceResult::Verdict::independent;
        out.columns = cols;
        out.point = point;
        out.minor_value = det;
        return out;
      }
    }
    if (!detail::next_point(point, p)) break;
  }

  // No separating point: expand minors symbolically when that is affordable.
  std::size_t row_terms = 0;
  for (const auto& row : out.rows)
    for (const auto& poly : row) row_terms = std::max(row_terms, poly.size());
  if (row_terms > 2000) return out;
  const auto one = MultiPoly<ResidueRing>::constant(ring, {}, 1);
  auto pmul = [](const MultiPoly<ResidueRing>& a, const MultiPoly<ResidueRing>& b) { return a * b; };
  auto padd = [](const MultiPoly<ResidueRing>& a, const MultiPoly<ResidueRing>& b) { return a + b; };
  auto pneg = [](const MultiPoly<ResidueRing>& a) { return -a; };
  for (const auto& cols : column_sets) {
    std::vector<std::vector<MultiPoly<ResidueRing>>> m;
    for (const auto& row : out.rows) {
      std::vector<MultiPoly<ResidueRing>> r;
      for (auto c : cols) r.push_back(row[c - 1]);
      m.push_back(std::move(r));
    }
    const auto det = detail::laplace_det<MultiPoly<ResidueRing>>(m, one, pmul, padd, pneg);
    if (!det.is_zero()) {
      out.verdict = IndependenceResult::Verdict::independent;
      out.columns = cols;
      return out;
    }
  }
  out.verdict = IndependenceResult::Verdict::dependent;
  return out;
}

}  // namespace pskz::hyper
