#pragma once

// Family parameters for the three constructions. Each make() validates the
// invariants and throws ParamError with a message naming the violated one.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pskz/mpoly.hpp"
#include "pskz/padic.hpp"

namespace pskz {

inline std::string z_var(std::size_t i) { return "z" + std::to_string(i); }
inline std::string t_var(std::size_t i) { return "t" + std::to_string(i); }
inline const std::string kLambda = "lambda";
inline const std::string kT = "t";
inline const std::string kZ = "z";

/// Hyperelliptic family: n = 2g+1 points, extraction at t^{ell p^s - 1}.
struct HyperParams {
  RingParams ring;
  std::uint32_t g = 1;
  std::uint32_t ell = 1;

  static HyperParams make(RingParams ring, std::uint32_t g, std::uint32_t ell) {
    if (g < 1) throw ParamError("g must be a positive integer");
    if (ell < 1) throw ParamError("ell must be a positive integer");
    if (2 * g + 3 > kMaxVars) throw ParamError("g is too large for the variable limit");
    return HyperParams{ring, g, ell};
  }

  std::uint32_t n() const { return 2 * g + 1; }
  /// (p^s - 1) / 2.
  std::uint64_t half() const { return (ring.modulus() - 1) / 2; }
  std::uint64_t target() const { return ell * ring.modulus() - 1; }

  /// z1..zn, lambda.
  std::vector<std::string> solution_vars() const {
    std::vector<std::string> v;
    for (std::uint32_t i = 1; i <= n(); ++i) v.push_back(z_var(i));
    v.push_back(kLambda);
    return v;
  }
};

/// Optional explicit representatives of the exponent congruences.
struct Sl2ExponentOverride {
  std::optional<std::vector<std::uint64_t>> M;
  std::optional<std::vector<std::uint64_t>> Mij;
  std::optional<std::uint64_t> M0;
};

/// sl2 family on L_{m_1} x ... x L_{m_n}, weight |m| - 2k.
struct Sl2Params {
  RingParams ring;
  std::int64_t kappa_num = 1;
  std::int64_t kappa_den = 1;
  std::vector<std::uint32_t> m;
  std::uint32_t k = 1;
  std::vector<std::uint32_t> ell;
  std::vector<std::uint64_t> M;    // M_l, l = 1..n
  std::vector<std::uint64_t> Mij;  // M_{i,j}, (1,2), (1,3), ..., (n-1,n)
  std::uint64_t M0 = 1;

  std::uint32_t n() const { return static_cast<std::uint32_t>(m.size()); }

  /// Position of M_{i,j} (1-based i < j) in Mij.
  std::size_t pair_index(std::uint32_t i, std::uint32_t j) const {
    std::size_t idx = 0;
    for (std::uint32_t a = 1; a <= n(); ++a)
      for (std::uint32_t b = a + 1; b <= n(); ++b) {
        if (a == i && b == j) return idx;
        ++idx;
      }
    throw std::out_of_range("pair index out of range");
  }

  /// z1..zn, lambda.
  std::vector<std::string> solution_vars() const {
    std::vector<std::string> v;
    for (std::uint32_t i = 1; i <= n(); ++i) v.push_back(z_var(i));
    v.push_back(kLambda);
    return v;
  }

  std::vector<std::pair<std::string, std::uint32_t>> target() const {
    std::vector<std::pair<std::string, std::uint32_t>> out;
    for (std::uint32_t i = 1; i <= k; ++i)
      out.emplace_back(t_var(i), static_cast<std::uint32_t>(ell[i - 1] * ring.modulus() - 1));
    return out;
  }

  static Sl2Params make(RingParams ring, std::int64_t kappa_num, std::int64_t kappa_den,
                        std::vector<std::uint32_t> m, std::uint32_t k,
                        std::vector<std::uint32_t> ell, const Sl2ExponentOverride& over = {}) {
    if (kappa_den == 0) throw ParamError("kappa denominator must be nonzero");
    if (kappa_num == 0) throw ParamError("kappa must be nonzero");
    if (kappa_den < 0) {
      kappa_num = -kappa_num;
      kappa_den = -kappa_den;
    }
    const std::int64_t g = std::gcd(kappa_num, kappa_den);
    kappa_num /= g;
    kappa_den /= g;
    const auto p = static_cast<std::int64_t>(ring.p);
    if (kappa_num % p == 0) throw ParamError("p must not divide the numerator of kappa");
    if (kappa_den % p == 0) throw ParamError("p must not divide the denominator of kappa");
    if (m.empty()) throw ParamError("m must list at least one positive integer");
    for (auto mi : m)
      if (mi < 1) throw ParamError("every m_i must be a positive integer");
    if (k < 1) throw ParamError("k must be a positive integer");
    if (ell.size() != k) throw ParamError("ell must have exactly k entries");
    for (auto l : ell)
      if (l < 1) throw ParamError("every ell_i must be a positive integer");
    if (m.size() + k + 1 > kMaxVars) throw ParamError("n + k is too large for the variable limit");

    const ResidueRing base(ring.with_r(1, 1));
    const std::uint64_t q = base.modulus();
    auto smallest_positive = [&](std::uint64_t residue) { return residue == 0 ? q : residue; };
    // 1/kappa = den/num.
    auto over_kappa = [&](std::int64_t num, std::int64_t den) {
      return base.embed_rational(num * kappa_den, den * kappa_num);
    };

    Sl2Params out;
    out.ring = ring;
    out.kappa_num = kappa_num;
    out.kappa_den = kappa_den;
    out.m = m;
    out.k = k;
    out.ell = ell;
    const std::size_t n = m.size();

    std::vector<std::uint64_t> want_M, want_Mij;
    for (std::size_t l = 0; l < n; ++l) want_M.push_back(over_kappa(-static_cast<std::int64_t>(m[l]), 1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        want_Mij.push_back(over_kappa(static_cast<std::int64_t>(m[i]) * m[j], 2));
    const std::uint64_t want_M0 = over_kappa(2, 1);

    if (over.M) {
      if (over.M->size() != n) throw ParamError("M override must have n entries");
      out.M = *over.M;
    } else {
      for (auto w : want_M) out.M.push_back(smallest_positive(w));
    }
    if (over.Mij) {
      if (over.Mij->size() != want_Mij.size()) throw ParamError("Mij override must have n(n-1)/2 entries");
      out.Mij = *over.Mij;
    } else {
      for (auto w : want_Mij) out.Mij.push_back(smallest_positive(w));
    }
    out.M0 = over.M0 ? *over.M0 : smallest_positive(want_M0);

    for (std::size_t l = 0; l < n; ++l) {
      if (out.M[l] < 1) throw ParamError("M_l must be a positive integer");
      if (out.M[l] % q != want_M[l]) throw ParamError("M_l must be congruent to -m_l/kappa mod p^s");
    }
    for (std::size_t i = 0; i < want_Mij.size(); ++i) {
      if (out.Mij[i] < 1) throw ParamError("M_ij must be a positive integer");
      if (out.Mij[i] % q != want_Mij[i]) throw ParamError("M_ij must be congruent to m_i m_j/(2 kappa) mod p^s");
    }
    if (out.M0 < 1) throw ParamError("M0 must be a positive integer");
    if (out.M0 % q != want_M0) throw ParamError("M0 must be congruent to 2/kappa mod p^s");
    return out;
  }
};

/// Baby qKZ: only the ring (p, s, r).
struct QkzParams {
  RingParams ring;

  static QkzParams make(RingParams ring) { return QkzParams{ring}; }

  std::uint64_t short_length() const { return (ring.modulus() - 1) / 2; }
  std::uint64_t long_length() const { return (ring.modulus() + 1) / 2; }
  std::uint64_t target() const { return ring.modulus() - 1; }

  std::vector<std::string> solution_vars() const { return {kZ, kLambda}; }
};

}  // namespace pskz
