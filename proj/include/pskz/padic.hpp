#pragma once

// Exact arithmetic in Z/p^s and in the ramified ring Z[pi]/(pi^e - p) mod p^s.
//
// Rings are context objects: scalars are plain values and every operation goes
// through the ring that owns them. Both rings expose the same interface so the
// polynomial layer can be templated over either.

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pskz {

class NotAUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("operands belong to different rings") {}
};

/// Largest supported ramification index (denominator of r).
inline constexpr std::uint64_t kMaxRamification = 8;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/// Exponent of p in n! (Legendre).
inline std::uint64_t legendre(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = 0;
  while (n > 0) {
    n /= p;
    v += n;
  }
  return v;
}

inline std::uint64_t ipow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace detail

/// p, s and the exponent r = r_num / r_den that rescales lambda.
struct RingParams {
  std::uint64_t p = 3;
  std::uint64_t s = 1;
  std::uint64_t r_num = 1;
  std::uint64_t r_den = 1;

  /// Validating constructor. Throws ParamError naming the violated invariant.
  static RingParams make(std::uint64_t p, std::uint64_t s, std::uint64_t r_num = 1,
                         std::uint64_t r_den = 1) {
    if (p < 3 || !detail::is_prime(p)) throw ParamError("p must be an odd prime");
    if (s < 1) throw ParamError("s must be a positive integer");
    if (r_num < 1 || r_den < 1) throw ParamError("r must be a positive rational");
    if (std::gcd(r_num, r_den) != 1) throw ParamError("r_num and r_den must be coprime");
    if (r_den > kMaxRamification)
      throw ParamError("r_den exceeds the supported ramification index " +
                       std::to_string(kMaxRamification));
    if (r_num * (p - 1) <= r_den) throw ParamError("r must exceed 1/(p-1)");
    // p^s must stay below 2^62 so that sums of two residues never overflow.
    unsigned __int128 m = 1;
    for (std::uint64_t i = 0; i < s; ++i) {
      m *= p;
      if (m >= (static_cast<unsigned __int128>(1) << 62))
        throw ParamError("p^s must be below 2^62");
    }
    return RingParams{p, s, r_num, r_den};
  }

  std::uint64_t modulus() const { return detail::ipow(p, s); }

  /// Same p and s with r = 1; used when a computation does not involve r.
  RingParams with_r(std::uint64_t num, std::uint64_t den) const {
    return make(p, s, num, den);
  }

  friend bool operator==(const RingParams&, const RingParams&) = default;
};

inline std::string to_string(const RingParams& rp) {
  std::string r = std::to_string(rp.r_num);
  if (rp.r_den != 1) r += "/" + std::to_string(rp.r_den);
  return "p=" + std::to_string(rp.p) + " s=" + std::to_string(rp.s) + " r=" + r;
}

/// Z/p^s. Scalars are residues in [0, p^s).
class ResidueRing {
 public:
  using value_type = std::uint64_t;

  explicit ResidueRing(RingParams params) : params_(params), mod_(params.modulus()) {
    if (params.r_den != 1) throw ParamError("ResidueRing requires r_den = 1");
  }

  const RingParams& params() const { return params_; }
  std::uint64_t modulus() const { return mod_; }
  std::uint64_t ramification() const { return 1; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % mod_; }

  value_type from_int(std::int64_t v) const {
    auto m = static_cast<std::int64_t>(mod_);
    std::int64_t r = v % m;
    return static_cast<value_type>(r < 0 ? r + m : r);
  }

  /// num / den with den a p-unit.
  value_type embed_rational(std::int64_t num, std::int64_t den) const {
    return mul(from_int(num), inv(from_int(den)));
  }

  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  value_type add(value_type a, value_type b) const {
    value_type c = a + b;
    return c >= mod_ ? c - mod_ : c;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + mod_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : mod_ - a; }
  value_type mul(value_type a, value_type b) const { return detail::mulmod(a, b, mod_); }

  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Inverse of a unit, by the extended Euclidean algorithm.
  value_type inv(value_type a) const {
    if (a % params_.p == 0) throw NotAUnit("value divisible by p has no inverse mod p^s");
    std::int64_t old_r = static_cast<std::int64_t>(a), r = static_cast<std::int64_t>(mod_);
    std::int64_t old_x = 1, x = 0;
    while (r != 0) {
      std::int64_t q = old_r / r;
      std::int64_t tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_x - q * x;
      old_x = x;
      x = tmp;
    }
    return from_int(old_x);
  }

  /// Largest v <= s with p^v | a; s for zero.
  std::uint64_t valuation(value_type a) const {
    std::uint64_t v = 0;
    while (v < params_.s && a % params_.p == 0) {
      if (a == 0) return params_.s;
      a /= params_.p;
      ++v;
    }
    return v;
  }

  /// pi^e where pi = p here.
  value_type pi_power(std::uint64_t e) const {
    if (e >= params_.s) return 0;
    return detail::ipow(params_.p, e);
  }

  /// p^r.
  value_type p_to_r() const { return pi_power(params_.r_num); }

  /// Residue digits for serialization (length 1).
  std::vector<std::uint64_t> digits(value_type a) const { return {a}; }
  value_type from_digits(const std::vector<std::uint64_t>& d) const {
    if (d.size() != 1 || d[0] >= mod_) throw ParamError("coefficient digits out of range");
    return d[0];
  }

  /// Multiplication by a residue of the base ring Z/p^s.
  value_type scale(value_type a, std::uint64_t c) const { return mul(a, c % mod_); }
  value_type from_residue(std::uint64_t c) const { return c % mod_; }

  friend bool operator==(const ResidueRing& a, const ResidueRing& b) {
    return a.params_ == b.params_;
  }

 private:
  RingParams params_;
  std::uint64_t mod_;
};

/// Element c_0 + c_1 pi + ... + c_{e-1} pi^{e-1} of Z[pi]/(pi^e - p) mod p^s.
/// Entries past the ring's ramification index are always zero.
struct RamifiedElem {
  std::array<std::uint64_t, kMaxRamification> c{};
  friend bool operator==(const RamifiedElem&, const RamifiedElem&) = default;
};

class RamifiedRing {
 public:
  using value_type = RamifiedElem;

  explicit RamifiedRing(RingParams params) : base_(params.with_r(1, 1)), params_(params) {}

  const RingParams& params() const { return params_; }
  std::uint64_t modulus() const { return base_.modulus(); }
  std::uint64_t ramification() const { return params_.r_den; }
  const ResidueRing& base() const { return base_; }

  value_type zero() const { return {}; }
  value_type one() const { return from_residue(1); }
  value_type from_residue(std::uint64_t c) const {
    value_type r;
    r.c[0] = c % base_.modulus();
    return r;
  }
  value_type from_int(std::int64_t v) const { return from_residue(base_.from_int(v)); }
  value_type embed_rational(std::int64_t num, std::int64_t den) const {
    return from_residue(base_.embed_rational(num, den));
  }

  bool is_zero(const value_type& a) const {
    for (std::uint64_t i = 0; i < params_.r_den; ++i)
      if (a.c[i] != 0) return false;
    return true;
  }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type add(const value_type& a, const value_type& b) const {
    value_type r;
    for (std::uint64_t i = 0; i < params_.r_den; ++i) r.c[i] = base_.add(a.c[i], b.c[i]);
    return r;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    value_type r;
    for (std::uint64_t i = 0; i < params_.r_den; ++i) r.c[i] = base_.sub(a.c[i], b.c[i]);
    return r;
  }
  value_type neg(const value_type& a) const {
    value_type r;
    for (std::uint64_t i = 0; i < params_.r_den; ++i) r.c[i] = base_.neg(a.c[i]);
    return r;
  }

  /// Schoolbook product in pi, folding pi^e into p.
  value_type mul(const value_type& a, const value_type& b) const {
    const std::uint64_t e = params_.r_den;
    const std::uint64_t p = params_.p;
    value_type r;
    for (std::uint64_t i = 0; i < e; ++i) {
      if (a.c[i] == 0) continue;
      for (std::uint64_t j = 0; j < e; ++j) {
        if (b.c[j] == 0) continue;
        std::uint64_t term = base_.mul(a.c[i], b.c[j]);
        std::uint64_t k = i + j;
        if (k >= e) {
          term = base_.mul(term, p % base_.modulus());
          k -= e;
        }
        r.c[k] = base_.add(r.c[k], term);
      }
    }
    return r;
  }

  value_type pow(value_type a, std::uint64_t n) const {
    value_type r = one();
    while (n > 0) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }

  /// Inverse of a unit. Starts from the inverse of the constant digit and
  /// refines by Newton steps x <- x (2 - a x), each doubling the pi-adic precision.
  value_type inv(const value_type& a) const {
    if (a.c[0] % params_.p == 0) throw NotAUnit("element of positive pi-valuation has no inverse");
    value_type x = from_residue(base_.inv(a.c[0]));
    const value_type two = from_int(2);
    for (std::uint64_t prec = 1; prec < params_.r_den * params_.s; prec *= 2) x = mul(x, sub(two, mul(a, x)));
    return x;
  }

  /// pi^e = p^(e / r_den) pi^(e mod r_den).
  value_type pi_power(std::uint64_t e) const {
    value_type r;
    const std::uint64_t q = e / params_.r_den;
    r.c[e % params_.r_den] = base_.pi_power(q);
    return r;
  }

  /// p^r = pi^r_num.
  value_type p_to_r() const { return pi_power(params_.r_num); }

  /// Multiplication by a residue of the base ring.
  value_type scale(const value_type& a, std::uint64_t c) const {
    value_type r;
    for (std::uint64_t i = 0; i < params_.r_den; ++i) r.c[i] = base_.mul(a.c[i], c);
    return r;
  }

  /// pi-adic valuation, capped at r_den * s (meaning divisible by p^s).
  std::uint64_t pi_valuation(const value_type& a) const {
    std::uint64_t best = params_.r_den * params_.s;
    for (std::uint64_t i = 0; i < params_.r_den; ++i) {
      if (a.c[i] == 0) continue;
      best = std::min(best, base_.valuation(a.c[i]) * params_.r_den + i);
    }
    return best;
  }

  std::vector<std::uint64_t> digits(const value_type& a) const {
    return {a.c.begin(), a.c.begin() + static_cast<std::ptrdiff_t>(params_.r_den)};
  }
  value_type from_digits(const std::vector<std::uint64_t>& d) const {
    if (d.size() != params_.r_den) throw ParamError("coefficient must have r_den digits");
    value_type r;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] >= base_.modulus()) throw ParamError("coefficient digits out of range");
      r.c[i] = d[i];
    }
    return r;
  }

  friend bool operator==(const RamifiedRing& a, const RamifiedRing& b) {
    return a.params_ == b.params_;
  }

 private:
  ResidueRing base_;
  RingParams params_;
};

/// Exact p^{k r} / k! as a ring element. The value is integral whenever
/// r > 1/(p-1), since v_p(k!) <= k/(p-1).
template <class Ring>
typename Ring::value_type p_power_over_factorial(const Ring& ring, std::uint64_t k) {
  const RingParams& rp = ring.params();
  const std::uint64_t v = detail::legendre(k, rp.p);
  // Unit part of k!, stripped of its p-power.
  const ResidueRing base(rp.with_r(1, 1));
  std::uint64_t unit = base.one();
  for (std::uint64_t i = 2; i <= k; ++i) {
    std::uint64_t f = i;
    while (f % rp.p == 0) f /= rp.p;
    unit = base.mul(unit, f % base.modulus());
  }
  const std::uint64_t pi_exp = k * rp.r_num - v * rp.r_den;
  return ring.scale(ring.pi_power(pi_exp), base.inv(unit));
}

}  // namespace pskz
