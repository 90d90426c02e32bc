#pragma once

// Search for a gauge relation I_sl2(z, lambda) = G(z, lambda) * I_hyper(z, c lambda)
// between the sl2 solution on L_1^{(x) 2g+1} at weight 2g-1 (k = 1) and the
// hyperelliptic solution of genus g. Components are matched by J = 1_j <-> j.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pskz/hyper.hpp"
#include "pskz/sl2.hpp"

namespace pskz::gauge {

struct GaugeCandidate {
  std::string name;
  MultiPoly<ResidueRing> base;
};

struct GaugeResult {
  bool found = false;
  std::uint64_t c = 0;          // lambda -> c lambda
  std::uint64_t unit = 0;       // G = unit * base
  std::string base_name;
  std::optional<MultiPoly<ResidueRing>> G;
  std::vector<std::uint64_t> all_c;  // every c admitting some candidate
  std::size_t trials = 0;
  std::vector<std::string> log;
};

/// The candidates tried: the t-free part of the sl2 master polynomial, that
/// part without its exponentials, and the constant 1.
inline std::vector<GaugeCandidate> default_candidates(const std::shared_ptr<const ResidueRing>& ring,
                                                      const Sl2Params& params) {
  std::vector<GaugeCandidate> out;
  out.push_back({"t-free factor of the master polynomial", sl2::detail::t_free_factor(ring, params)});
  auto disc = MultiPoly<ResidueRing>::constant(ring, {}, ring->one());
  for (std::uint32_t i = 1; i <= params.n(); ++i)
    for (std::uint32_t j = i + 1; j <= params.n(); ++j)
      disc = disc * pow(sl2::detail::diff(ring, z_var(i), z_var(j)), params.Mij[params.pair_index(i, j)]);
  out.push_back({"prod_{i<j} (z_i - z_j)^{M_ij}", disc});
  out.push_back({"1", MultiPoly<ResidueRing>::constant(ring, {}, ring->one())});
  return out;
}

/// u with a = u * b, if a is a unit multiple of b.
inline std::optional<std::uint64_t> unit_ratio(const ResidueRing& ring,
                                               const MultiPoly<ResidueRing>& a,
                                               const MultiPoly<ResidueRing>& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const auto bb = b.with_vars(detail::union_vars(a.vars(), b.vars()));
  const auto aa = a.with_vars(bb.vars());
  if (aa.terms().front().exps != bb.terms().front().exps) return std::nullopt;
  try {
    const auto u = ring.mul(aa.terms().front().coeff, ring.inv(bb.terms().front().coeff));
    if (ring.valuation(u) != 0) return std::nullopt;
    if (aa == scale(bb, u)) return u;
  } catch (const NotAUnit&) {
  }
  return std::nullopt;
}

/// m = (1,...,1) with n = 2g+1, k = 1, given kappa; enumerates every c in Z/p^s
/// and every candidate base, fitting the unit factor from the leading term.
inline GaugeResult gauge_search(const RingParams& rp, std::uint32_t g, std::int64_t kappa_num,
                                std::int64_t kappa_den) {
  if (rp.r_num != 1 || rp.r_den != 1) throw ParamError("gauge search runs at r = 1");
  const auto ring = std::make_shared<const ResidueRing>(rp);
  const std::uint32_t n = 2 * g + 1;
  const auto sp = Sl2Params::make(rp, kappa_num, kappa_den, std::vector<std::uint32_t>(n, 1), 1, {1});
  const auto sl2_cert = sl2::construct_solution_sl2(ring, sp);
  const auto hyp_cert = hyper::construct_solution(ring, HyperParams::make(rp, g, 1));

  std::vector<MultiPoly<ResidueRing>> target(n, MultiPoly<ResidueRing>(ring, sl2_cert.vars));
  for (const auto& comp : sl2_cert.components)
    for (std::uint32_t j = 0; j < n; ++j)
      if (comp.index[j] == 1) target[j] = comp.poly;

  GaugeResult res;
  if (sl2_cert.is_zero() || hyp_cert.is_zero()) {
    res.log.push_back("one of the solutions is zero; a gauge relation is vacuous");
    return res;
  }
  const auto lambda = MultiPoly<ResidueRing>::variable(ring, kLambda);
  const auto candidates = default_candidates(ring, sp);
  for (std::uint64_t c = 0; c < rp.modulus(); ++c) {
    std::vector<MultiPoly<ResidueRing>> rescaled;
    for (const auto& comp : hyp_cert.components)
      rescaled.push_back(substitute(comp.poly, kLambda, scale(lambda, ring->from_residue(c))));
    for (const auto& cand : candidates) {
      ++res.trials;
      std::optional<std::uint64_t> unit;
      bool ok = true;
      for (std::uint32_t j = 0; j < n && ok; ++j) {
        const auto prod = cand.base * rescaled[j];
        if (target[j].is_zero() && prod.is_zero()) continue;
        auto u = unit_ratio(*ring, target[j], prod);
        ok = u && (!unit || *unit == *u);
        if (ok) unit = u;
      }
      if (ok && unit) {
        if (!res.found) {
          res.found = true;
          res.c = c;
          res.unit = *unit;
          res.base_name = cand.name;
          res.G = scale(cand.base, *unit);
        }
        res.all_c.push_back(c);
        res.log.push_back("match: c = " + std::to_string(c) + ", G = " + std::to_string(*unit) +
                          " * " + cand.name);
        break;
      }
    }
  }
  if (!res.found) res.log.push_back("no (G, c) among " + std::to_string(res.trials) + " candidate pairs");
  return res;
}

}  // namespace pskz::gauge
