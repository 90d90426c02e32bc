#pragma once

// sl2 family: tensor products L_{m_1} x ... x L_{m_n} with basis f_J v, the
// slot actions of e, f, h, the Casimir, Gaudin and dynamical Hamiltonians in
// cleared form, weight functions, the master polynomial and the extraction of
// solutions at t_1^{ell_1 p^s - 1} ... t_k^{ell_k p^s - 1}.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pskz/certificate.hpp"
#include "pskz/mpoly.hpp"
#include "pskz/params.hpp"
#include "pskz/truncexp.hpp"

namespace pskz::sl2 {

using BasisIndex = std::vector<std::uint32_t>;

inline std::uint32_t weight_of(const BasisIndex& j) {
  return std::accumulate(j.begin(), j.end(), std::uint32_t{0});
}

inline std::string to_string(const BasisIndex& j) {
  std::string s = "(";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(j[i]);
  return s + ")";
}

/// I_k: all J with |J| = k and j_s <= m_s, in lexicographic order.
inline std::vector<BasisIndex> weight_basis(const std::vector<std::uint32_t>& m, std::uint32_t k) {
  std::vector<BasisIndex> out;
  BasisIndex cur(m.size(), 0);
  auto rec = [&](auto&& self, std::size_t slot, std::uint32_t left) -> void {
    if (slot == m.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::uint32_t j = 0; j <= std::min(m[slot], left); ++j) {
      cur[slot] = j;
      self(self, slot + 1, left - j);
    }
    cur[slot] = 0;
  };
  rec(rec, 0, k);
  return out;
}

/// Maps a: {1..k} -> {1..n} whose fibers have sizes j_1..j_n, as the list
/// (a(1), ..., a(k)) of 1-based slots. Their count is k!/(j_1! ... j_n!), and
/// sum_a prod_i 1/(t_i - z_{a(i)}) is the weight function W_J.
inline std::vector<std::vector<std::uint32_t>> weight_assignments(const BasisIndex& J,
                                                                  std::uint32_t k) {
  if (weight_of(J) != k) throw std::invalid_argument("weight_assignments: |J| must equal k");
  std::vector<std::uint32_t> seq;
  for (std::uint32_t s = 0; s < J.size(); ++s) seq.insert(seq.end(), J[s], s + 1);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    out.push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

/// Element of L^{(x) m} with polynomial coefficients; absent indices are zero.
template <class Ring>
class TensorVector {
 public:
  using Poly = MultiPoly<Ring>;

  TensorVector(std::shared_ptr<const Ring> ring, std::vector<std::uint32_t> m,
               std::vector<std::string> vars)
      : ring_(std::move(ring)), m_(std::move(m)), vars_(std::move(vars)) {}

  const std::vector<std::uint32_t>& m() const { return m_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::shared_ptr<const Ring>& ring_ptr() const { return ring_; }
  const std::map<BasisIndex, Poly>& components() const { return comps_; }
  std::uint32_t n() const { return static_cast<std::uint32_t>(m_.size()); }

  /// Adds c * f_J v.
  void add(const BasisIndex& J, const Poly& c) {
    if (J.size() != m_.size()) throw std::invalid_argument("basis index has wrong length");
    for (std::size_t s = 0; s < J.size(); ++s)
      if (J[s] > m_[s]) throw std::invalid_argument("basis index exceeds m");
    if (!comps_.empty() && weight_of(comps_.begin()->first) != weight_of(J))
      throw std::invalid_argument("mixed weights in one tensor vector");
    if (c.is_zero()) return;
    auto it = comps_.find(J);
    if (it == comps_.end()) {
      comps_.emplace(J, c.with_vars(detail::union_vars(vars_, c.vars())));
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  Poly coefficient(const BasisIndex& J) const {
    auto it = comps_.find(J);
    return it == comps_.end() ? Poly(ring_, vars_) : it->second;
  }

  bool is_zero() const { return comps_.empty(); }

  /// h-eigenvalue |m| - 2|J|; nullopt for the zero vector.
  std::optional<std::int64_t> weight() const {
    if (comps_.empty()) return std::nullopt;
    const auto total = std::accumulate(m_.begin(), m_.end(), std::int64_t{0});
    return total - 2 * static_cast<std::int64_t>(weight_of(comps_.begin()->first));
  }

  TensorVector zero_like() const { return TensorVector(ring_, m_, vars_); }

  /// Applies f to every coefficient.
  template <class F>
  TensorVector map(F f) const {
    TensorVector out = zero_like();
    for (const auto& [J, c] : comps_) out.add(J, f(c));
    return out;
  }

  friend TensorVector operator+(const TensorVector& a, const TensorVector& b) {
    TensorVector out = a;
    for (const auto& [J, c] : b.comps_) out.add(J, c);
    return out;
  }

  friend TensorVector operator-(const TensorVector& a, const TensorVector& b) {
    TensorVector out = a;
    for (const auto& [J, c] : b.comps_) out.add(J, -c);
    return out;
  }

  friend TensorVector operator*(const Poly& c, const TensorVector& v) {
    return v.map([&](const Poly& x) { return c * x; });
  }

 private:
  std::shared_ptr<const Ring> ring_;
  std::vector<std::uint32_t> m_;
  std::vector<std::string> vars_;
  std::map<BasisIndex, Poly> comps_;
};

namespace detail {

template <class Ring>
void check_slot(const TensorVector<Ring>& v, std::uint32_t i) {
  if (i < 1 || i > v.n()) throw std::out_of_range("slot index out of range");
}

}  // namespace detail

/// f in slot i: f_J v -> f_{J + 1_i} v, zero when j_i = m_i.
template <class Ring>
TensorVector<Ring> act_f(std::uint32_t i, const TensorVector<Ring>& v) {
  detail::check_slot(v, i);
  auto out = v.zero_like();
  for (const auto& [J, c] : v.components()) {
    if (J[i - 1] == v.m()[i - 1]) continue;
    auto K = J;
    ++K[i - 1];
    out.add(K, c);
  }
  return out;
}

/// e in slot i: f_J v -> j_i (m_i - j_i + 1) f_{J - 1_i} v, zero when j_i = 0.
template <class Ring>
TensorVector<Ring> act_e(std::uint32_t i, const TensorVector<Ring>& v) {
  detail::check_slot(v, i);
  const auto& ring = *v.ring_ptr();
  auto out = v.zero_like();
  for (const auto& [J, c] : v.components()) {
    const std::uint32_t j = J[i - 1];
    if (j == 0) continue;
    auto K = J;
    --K[i - 1];
    out.add(K, scale(c, ring.from_int(static_cast<std::int64_t>(j) * (v.m()[i - 1] - j + 1))));
  }
  return out;
}

/// h in slot i: f_J v -> (m_i - 2 j_i) f_J v.
template <class Ring>
TensorVector<Ring> act_h(std::uint32_t i, const TensorVector<Ring>& v) {
  detail::check_slot(v, i);
  const auto& ring = *v.ring_ptr();
  auto out = v.zero_like();
  for (const auto& [J, c] : v.components()) {
    const auto eig = static_cast<std::int64_t>(v.m()[i - 1]) - 2 * static_cast<std::int64_t>(J[i - 1]);
    out.add(J, scale(c, ring.from_int(eig)));
  }
  return out;
}

/// Omega^{(i,j)} = e^(i) f^(j) + f^(i) e^(j) + (1/2) h^(i) h^(j).
template <class Ring>
TensorVector<Ring> casimir_apply(std::uint32_t i, std::uint32_t j, const TensorVector<Ring>& v) {
  if (i == j) throw std::invalid_argument("casimir_apply needs distinct slots");
  const auto half = v.ring_ptr()->embed_rational(1, 2);
  auto hh = act_h(i, act_h(j, v)).map([&](const auto& c) { return scale(c, half); });
  return act_e(i, act_f(j, v)) + act_f(i, act_e(j, v)) + hh;
}

namespace detail {

template <class Ring>
MultiPoly<Ring> z_diff_product(const std::shared_ptr<const Ring>& ring, std::uint32_t n,
                               std::uint32_t i, std::uint32_t skip) {
  auto prod = MultiPoly<Ring>::constant(ring, {}, ring->one());
  for (std::uint32_t m = 1; m <= n; ++m) {
    if (m == i || m == skip) continue;
    prod = prod * (MultiPoly<Ring>::variable(ring, z_var(i)) - MultiPoly<Ring>::variable(ring, z_var(m)));
  }
  return prod;
}

}  // namespace detail

/// prod_{j != i}(z_i - z_j) times the rescaled Gaudin Hamiltonian
/// p^r (lambda/2) h^(i) + sum_{j != i} Omega^{(i,j)} / (z_i - z_j), applied to v.
template <class Ring>
TensorVector<Ring> gaudin_apply(std::uint32_t i, const TensorVector<Ring>& v) {
  detail::check_slot(v, i);
  const auto& ring = v.ring_ptr();
  const std::uint32_t n = v.n();
  const auto coef = ring->mul(ring->p_to_r(), ring->embed_rational(1, 2));
  const auto lambda_part =
      scale(MultiPoly<Ring>::variable(ring, kLambda), coef) * detail::z_diff_product(ring, n, i, 0);
  auto out = lambda_part * act_h(i, v);
  for (std::uint32_t j = 1; j <= n; ++j) {
    if (j == i) continue;
    out = out + detail::z_diff_product(ring, n, i, j) * casimir_apply(i, j, v);
  }
  return out;
}

/// lambda times the rescaled dynamical Hamiltonian:
/// p^r lambda sum_i (z_i/2) h^(i) v + sum_{i,j} f^(i) e^(j) v.
template <class Ring>
TensorVector<Ring> dynamical_apply(const TensorVector<Ring>& v) {
  const auto& ring = v.ring_ptr();
  const std::uint32_t n = v.n();
  const auto coef = ring->mul(ring->p_to_r(), ring->embed_rational(1, 2));
  auto out = v.zero_like();
  for (std::uint32_t i = 1; i <= n; ++i) {
    auto factor = scale(MultiPoly<Ring>::variable(ring, kLambda) * MultiPoly<Ring>::variable(ring, z_var(i)), coef);
    out = out + factor * act_h(i, v);
  }
  for (std::uint32_t j = 1; j <= n; ++j) {
    auto ej = act_e(j, v);
    for (std::uint32_t i = 1; i <= n; ++i) out = out + act_f(i, ej);
  }
  return out;
}

namespace detail {

template <class Ring>
MultiPoly<Ring> diff(const std::shared_ptr<const Ring>& ring, const std::string& a, const std::string& b) {
  return MultiPoly<Ring>::variable(ring, a) - MultiPoly<Ring>::variable(ring, b);
}

/// E(p^r lambda z_l / (2 kappa)) for all l, and prod_{i<j} (z_i - z_j)^{M_ij}.
template <class Ring>
MultiPoly<Ring> t_free_factor(const std::shared_ptr<const Ring>& ring, const Sl2Params& params) {
  const auto over_2kappa = ring->embed_rational(params.kappa_den, 2 * params.kappa_num);
  auto out = MultiPoly<Ring>::constant(ring, {}, ring->one());
  for (std::uint32_t l = 1; l <= params.n(); ++l) {
    auto arg = scale(MultiPoly<Ring>::variable(ring, kLambda) * MultiPoly<Ring>::variable(ring, z_var(l)),
                     over_2kappa);
    out = out * trunc_exp_poly(arg);
  }
  for (std::uint32_t i = 1; i <= params.n(); ++i)
    for (std::uint32_t j = i + 1; j <= params.n(); ++j)
      out = out * pow(diff(ring, z_var(i), z_var(j)), params.Mij[params.pair_index(i, j)]);
  return out;
}

/// E(-p^r lambda t_i / kappa).
template <class Ring>
MultiPoly<Ring> t_exponential(const std::shared_ptr<const Ring>& ring, const Sl2Params& params,
                              std::uint32_t i) {
  const auto minus_over_kappa = ring->embed_rational(-params.kappa_den, params.kappa_num);
  return trunc_exp_poly(
      scale(MultiPoly<Ring>::variable(ring, kLambda) * MultiPoly<Ring>::variable(ring, t_var(i)),
            minus_over_kappa));
}

/// prod_i prod_{s != a(i)} (t_i - z_s) summed over the assignments of J: the
/// factor that turns the master polynomial with every (t_i - z_s) exponent
/// lowered by one into Phi_s W_J.
template <class Ring>
MultiPoly<Ring> assignment_sum(const std::shared_ptr<const Ring>& ring, const Sl2Params& params,
                               const BasisIndex& J) {
  MultiPoly<Ring> sum(ring, {});
  for (const auto& a : weight_assignments(J, params.k)) {
    auto prod = MultiPoly<Ring>::constant(ring, {}, ring->one());
    for (std::uint32_t i = 1; i <= params.k; ++i)
      for (std::uint32_t s = 1; s <= params.n(); ++s)
        if (s != a[i - 1]) prod = prod * diff(ring, t_var(i), z_var(s));
    sum = sum + prod;
  }
  return sum;
}

}  // namespace detail

/// Fully expanded master polynomial
///   prod_l E(p^r z_l lambda/(2 kappa)) prod_i E(-p^r t_i lambda/kappa)
///   prod_{i<j} (z_i - z_j)^{M_ij} prod_{i<j} (t_i - t_j)^{M0} prod_{s,i} (t_i - z_s)^{M_s}.
template <class Ring>
MultiPoly<Ring> master_polynomial(const std::shared_ptr<const Ring>& ring, const Sl2Params& params) {
  auto out = detail::t_free_factor(ring, params);
  for (std::uint32_t i = 1; i <= params.k; ++i) out = out * detail::t_exponential(ring, params, i);
  for (std::uint32_t i = 1; i <= params.k; ++i)
    for (std::uint32_t j = i + 1; j <= params.k; ++j)
      out = out * pow(detail::diff(ring, t_var(i), t_var(j)), params.M0);
  for (std::uint32_t s = 1; s <= params.n(); ++s)
    for (std::uint32_t i = 1; i <= params.k; ++i)
      out = out * pow(detail::diff(ring, t_var(i), z_var(s)), params.M[s - 1]);
  return out;
}

/// Phi_s W_J as a polynomial: one term per assignment, each with the matched
/// (t_i - z_{a(i)}) exponents lowered by one. Fully expanded; meant for small
/// parameters and as an independent route to the extracted solution.
template <class Ring>
MultiPoly<Ring> psi_component(const std::shared_ptr<const Ring>& ring, const Sl2Params& params,
                              const BasisIndex& J) {
  auto common = detail::t_free_factor(ring, params);
  for (std::uint32_t i = 1; i <= params.k; ++i) common = common * detail::t_exponential(ring, params, i);
  for (std::uint32_t i = 1; i <= params.k; ++i)
    for (std::uint32_t j = i + 1; j <= params.k; ++j)
      common = common * pow(detail::diff(ring, t_var(i), t_var(j)), params.M0);
  MultiPoly<Ring> sum(ring, {});
  for (const auto& a : weight_assignments(J, params.k)) {
    auto term = common;
    for (std::uint32_t s = 1; s <= params.n(); ++s)
      for (std::uint32_t i = 1; i <= params.k; ++i) {
        const std::uint64_t e = params.M[s - 1] - (a[i - 1] == s ? 1 : 0);
        term = term * pow(detail::diff(ring, t_var(i), z_var(s)), e);
      }
    sum = sum + term;
  }
  return sum;
}

/// I^ell: for each J in I_k the coefficient of prod_i t_i^{ell_i p^s - 1} in Phi_s W_J.
template <class Ring>
SolutionCertificate<Ring> construct_solution_sl2(const std::shared_ptr<const Ring>& ring,
                                                 const Sl2Params& params) {
  if (!(ring->params() == params.ring)) throw RingMismatch();
  const auto target = params.target();
  SolutionCertificate<Ring> cert{params, ring, params.solution_vars(), {}};
  const auto basis = weight_basis(params.m, params.k);
  if (basis.empty()) return cert;

  // Everything that involves t, with each (t_i - z_s) exponent lowered by one.
  // Couplings between different t_i go last so the window prunes early.
  std::vector<MultiPoly<Ring>> factors;
  for (std::uint32_t i = 1; i <= params.k; ++i) {
    factors.push_back(detail::t_exponential(ring, params, i));
    for (std::uint32_t s = 1; s <= params.n(); ++s)
      if (params.M[s - 1] > 1)
        factors.push_back(pow(detail::diff(ring, t_var(i), z_var(s)), params.M[s - 1] - 1));
  }
  for (std::uint32_t i = 1; i <= params.k; ++i)
    for (std::uint32_t j = i + 1; j <= params.k; ++j)
      factors.push_back(pow(detail::diff(ring, t_var(i), t_var(j)), params.M0));
  const auto common =
      windowed_product<Ring>(factors, target, std::vector<std::uint32_t>(params.k, params.n() - 1));
  const auto t_free = detail::t_free_factor(ring, params);

  for (const auto& J : basis) {
    auto c = coefficient_of_product(common, detail::assignment_sum(ring, params, J), target);
    cert.components.push_back({J, (t_free * c).with_vars(cert.vars)});
  }
  return cert;
}

template <class Ring>
TensorVector<Ring> to_tensor(const SolutionCertificate<Ring>& cert) {
  const auto& params = cert.template as<Sl2Params>();
  TensorVector<Ring> v(cert.ring, params.m, cert.vars);
  for (const auto& c : cert.components) v.add(c.index, c.poly);
  return v;
}

/// Cleared residuals, lambda formal:
///   KZ_i: kappa prod_{j != i}(z_i - z_j) dI/dz_i - gaudin_apply(i, I),
///   D:    kappa lambda dI/dlambda - dynamical_apply(I),
/// one entry per equation and basis index.
template <class Ring>
ResidualReport verify_sl2(const SolutionCertificate<Ring>& cert) {
  if (cert.family() != Family::sl2) throw WrongFamily(Family::sl2, cert.family());
  const auto& params = cert.template as<Sl2Params>();
  const auto& ring = cert.ring;
  const auto kappa = ring->embed_rational(params.kappa_num, params.kappa_den);
  const auto I = to_tensor(cert);
  const auto basis = weight_basis(params.m, params.k);
  ResidualReport report{"sl2", {}};

  auto record = [&](const std::string& name, const TensorVector<Ring>& r) {
    for (const auto& J : basis)
      report.entries.push_back(residual_entry(name + " J=" + to_string(J), r.coefficient(J)));
    for (const auto& [J, c] : r.components())
      if (std::find(basis.begin(), basis.end(), J) == basis.end())
        report.entries.push_back(residual_entry(name + " J=" + to_string(J), c));
  };

  for (std::uint32_t i = 1; i <= params.n(); ++i) {
    const auto zi = z_var(i);
    const auto lhs = scale(detail::z_diff_product(ring, params.n(), i, 0), kappa) *
                     I.map([&](const auto& c) { return derivative(c.with_vars(cert.vars), zi); });
    record("KZ[" + std::to_string(i) + "]", lhs - gaudin_apply(i, I));
  }
  const auto lambda = MultiPoly<Ring>::variable(ring, kLambda);
  const auto dlhs = scale(lambda, kappa) *
                    I.map([&](const auto& c) { return derivative(c.with_vars(cert.vars), kLambda); });
  record("D", dlhs - dynamical_apply(I));
  return report;
}

}  // namespace pskz::sl2
