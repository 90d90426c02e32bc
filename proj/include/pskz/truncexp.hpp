#pragma once

// Truncated exponentials E_{r,s}(p^r A) = sum_{k <= d(r,s)} p^{kr} A^k / k!.
// Past degree d(r,s) every coefficient p^{kr}/k! is divisible by p^s, so the
// truncation agrees with exp(p^r A) mod p^s.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pskz/mpoly.hpp"
#include "pskz/padic.hpp"

namespace pskz {

/// d(r,s) = floor(s (p-1) r_den / (r_num (p-1) - r_den)) + 1.
inline std::uint64_t degree_bound(const RingParams& rp) {
  const std::uint64_t num = rp.s * (rp.p - 1) * rp.r_den;
  if (rp.r_num * (rp.p - 1) <= rp.r_den) throw ParamError("r must exceed 1/(p-1)");
  const std::uint64_t den = rp.r_num * (rp.p - 1) - rp.r_den;
  return num / den + 1;
}

/// p^{kr}/k! for 0 <= k <= d(r,s).
template <class Ring>
typename Ring::value_type exp_coefficient(const Ring& ring, std::uint64_t k) {
  if (k > degree_bound(ring.params()))
    throw std::out_of_range("k exceeds the truncation degree d(r,s)");
  return p_power_over_factorial(ring, k);
}

/// The list p^{kr}/k!, k = 0..d(r,s).
template <class Ring>
std::vector<typename Ring::value_type> exp_coefficients(const Ring& ring) {
  std::vector<typename Ring::value_type> out;
  const auto d = degree_bound(ring.params());
  for (std::uint64_t k = 0; k <= d; ++k) out.push_back(p_power_over_factorial(ring, k));
  return out;
}

/// E_{r,s}(p^r A) for a polynomial A; the caller passes A, not p^r A.
template <class Ring>
MultiPoly<Ring> trunc_exp_poly(const MultiPoly<Ring>& arg) {
  const auto coeffs = exp_coefficients(arg.ring());
  // Horner: c_0 + A (c_1 + A (c_2 + ...)).
  MultiPoly<Ring> result(arg.ring_ptr(), arg.vars());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    result = result * arg + MultiPoly<Ring>::constant(arg.ring_ptr(), arg.vars(), *it);
  }
  return result;
}

}  // namespace pskz
