#pragma once

// Baby qKZ equation E(p^r lambda) I(z-1, lambda) = I(z, lambda).

#include <cstdint>
#include <memory>
#include <string>

#include "pskz/certificate.hpp"
#include "pskz/mpoly.hpp"
#include "pskz/params.hpp"
#include "pskz/truncexp.hpp"

namespace pskz::qkz {

namespace detail {

template <class Ring>
MultiPoly<Ring> t_minus_z_plus(const std::shared_ptr<const Ring>& ring, std::int64_t c) {
  return MultiPoly<Ring>::variable(ring, kT) - MultiPoly<Ring>::variable(ring, kZ) +
         MultiPoly<Ring>::constant(ring, c);
}

/// (t - z - 1)_m = (t - z - 1)(t - z - 2) ... (t - z - m).
template <class Ring>
MultiPoly<Ring> shifted_pochhammer(const std::shared_ptr<const Ring>& ring, std::uint32_t m) {
  return substitute(pochhammer_poly(ring, m, "u"), "u", t_minus_z_plus(ring, -1));
}

template <class Ring>
MultiPoly<Ring> lambda_exp(const std::shared_ptr<const Ring>& ring, const std::string& with) {
  auto arg = MultiPoly<Ring>::variable(ring, kLambda);
  if (!with.empty()) arg = arg * MultiPoly<Ring>::variable(ring, with);
  return trunc_exp_poly(arg);
}

}  // namespace detail

/// E_{r,s}(p^r lambda t) (t - z - 1)_{(p^s-1)/2} (t - z - 1)_{(p^s+1)/2}.
template <class Ring>
MultiPoly<Ring> qkz_master(const std::shared_ptr<const Ring>& ring, const QkzParams& params) {
  return detail::lambda_exp(ring, kT) * detail::shifted_pochhammer(ring, static_cast<std::uint32_t>(params.short_length())) *
         detail::shifted_pochhammer(ring, static_cast<std::uint32_t>(params.long_length()));
}

/// Coefficient of (t)_{p^s - 1} in the Pochhammer expansion of the master polynomial.
template <class Ring>
SolutionCertificate<Ring> construct_qkz_solution(const std::shared_ptr<const Ring>& ring,
                                                 const QkzParams& params) {
  if (!(ring->params() == params.ring)) throw RingMismatch();
  const auto expansion = to_pochhammer_basis(qkz_master(ring, params), kT);
  SolutionCertificate<Ring> cert{params, ring, params.solution_vars(), {}};
  auto it = expansion.coeffs.find(static_cast<std::uint32_t>(params.target()));
  auto I = it == expansion.coeffs.end() ? MultiPoly<Ring>(ring, cert.vars) : it->second;
  cert.components.push_back({{0}, I.with_vars(cert.vars)});
  return cert;
}

/// E_{r,s}(p^r lambda) I(z - 1, lambda) - I(z, lambda), lambda formal.
template <class Ring>
ResidualReport verify_qkz(const SolutionCertificate<Ring>& cert) {
  if (cert.family() != Family::qkz) throw WrongFamily(Family::qkz, cert.family());
  const auto& ring = cert.ring;
  ResidualReport report{"qkz", {}};
  for (const auto& comp : cert.components) {
    const auto I = comp.poly.with_vars(cert.vars);
    const auto shifted = substitute(I, kZ, linear(ring, kZ, -1));
    report.entries.push_back(
        residual_entry("qKZ", detail::lambda_exp(ring, "") * shifted - I));
  }
  return report;
}

/// The two functional relations of the master polynomial, cleared:
///   (t-z-(p^s-1)/2)(t-z-(p^s+1)/2) Phi(t+1) - E(p^r lambda)(t-z)^2 Phi(t),
///   (t-z-(p^s-1)/2)(t-z-(p^s+1)/2) Phi(z-1) - (t-z)^2 Phi.
/// The z-shift relation is exact; the t-shift one holds because the truncated
/// exponential is multiplicative mod p^s.
template <class Ring>
ResidualReport functional_relations(const std::shared_ptr<const Ring>& ring, const QkzParams& params) {
  const auto phi = qkz_master(ring, params);
  const auto q = static_cast<std::int64_t>(params.ring.modulus());
  const auto denom = detail::t_minus_z_plus(ring, -(q - 1) / 2) * detail::t_minus_z_plus(ring, -(q + 1) / 2);
  const auto sq = pow(detail::t_minus_z_plus(ring, 0), 2);
  ResidualReport report{"qkz-relations", {}};
  const auto t_shift = substitute(phi, kT, linear(ring, kT, 1));
  report.entries.push_back(
      residual_entry("t -> t+1", denom * t_shift - detail::lambda_exp(ring, "") * sq * phi));
  const auto z_shift = substitute(phi, kZ, linear(ring, kZ, -1));
  report.entries.push_back(residual_entry("z -> z-1", denom * z_shift - sq * phi));
  return report;
}

}  // namespace pskz::qkz
