#pragma once

// Sparse multivariate polynomials over a scalar ring from padic.hpp.
//
// A MultiPoly is an immutable value: an ordered variable list and a sorted
// vector of terms with nonzero coefficients. Terms are ordered
// lexicographically on exponent vectors in declared variable order, which is
// also the serialization order.

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pskz/padic.hpp"

namespace pskz {

inline constexpr std::size_t kMaxVars = 12;
using Exponent = std::uint16_t;
using Monomial = std::array<Exponent, kMaxVars>;

class UnknownVariable : public std::invalid_argument {
 public:
  explicit UnknownVariable(std::string_view name)
      : std::invalid_argument("unknown variable '" + std::string(name) + "'") {}
};

/// Inclusive exponent range kept by windowed products.
struct ExponentWindow {
  std::string var;
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
};

template <class Ring>
class MultiPoly {
 public:
  using ring_type = Ring;
  using scalar_type = typename Ring::value_type;

  struct Term {
    Monomial exps{};
    scalar_type coeff{};
  };

  MultiPoly(std::shared_ptr<const Ring> ring, std::vector<std::string> vars = {})
      : ring_(std::move(ring)), vars_(std::move(vars)) {
    if (vars_.size() > kMaxVars) throw std::invalid_argument("too many variables");
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable " + vars_[i]);
  }

  static MultiPoly constant(std::shared_ptr<const Ring> ring, std::vector<std::string> vars,
                            const scalar_type& c) {
    MultiPoly r(std::move(ring), std::move(vars));
    if (!r.ring().is_zero(c)) r.terms_.push_back({Monomial{}, c});
    return r;
  }

  static MultiPoly constant(std::shared_ptr<const Ring> ring, std::int64_t c) {
    const auto value = ring->from_int(c);
    return constant(std::move(ring), {}, value);
  }

  static MultiPoly variable(std::shared_ptr<const Ring> ring, const std::string& name) {
    MultiPoly r(ring, {name});
    Monomial m{};
    m[0] = 1;
    r.terms_.push_back({m, ring->one()});
    return r;
  }

  /// Builds a canonical polynomial from arbitrary terms; duplicates are summed.
  static MultiPoly from_terms(std::shared_ptr<const Ring> ring, std::vector<std::string> vars,
                              std::vector<Term> terms) {
    MultiPoly r(std::move(ring), std::move(vars));
    auto by_exps = [](const Term& a, const Term& b) { return a.exps < b.exps; };
    if (!std::is_sorted(terms.begin(), terms.end(), by_exps))
      std::sort(terms.begin(), terms.end(), by_exps);
    r.terms_.reserve(terms.size());
    for (auto& t : terms) {
      if (!r.terms_.empty() && r.terms_.back().exps == t.exps) {
        r.terms_.back().coeff = r.ring().add(r.terms_.back().coeff, t.coeff);
      } else {
        r.terms_.push_back(t);
      }
    }
    std::erase_if(r.terms_, [&](const Term& t) { return r.ring().is_zero(t.coeff); });
    return r;
  }

  const Ring& ring() const { return *ring_; }
  const std::shared_ptr<const Ring>& ring_ptr() const { return ring_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::optional<std::size_t> var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  std::size_t index_of(std::string_view name) const {
    auto i = var_index(name);
    if (!i) throw UnknownVariable(name);
    return *i;
  }

  /// Degree in one variable; -1 for the zero polynomial, 0 for an absent variable.
  int degree(std::string_view name) const {
    if (is_zero()) return -1;
    auto i = var_index(name);
    if (!i) return 0;
    int d = 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.exps[*i]);
    return d;
  }

  int total_degree() const {
    if (is_zero()) return -1;
    int d = 0;
    for (const auto& t : terms_) {
      int sum = 0;
      for (std::size_t i = 0; i < vars_.size(); ++i) sum += t.exps[i];
      d = std::max(d, sum);
    }
    return d;
  }

  /// Re-expresses the polynomial over another variable list. Variables that
  /// are dropped must not occur in any term.
  MultiPoly with_vars(std::vector<std::string> vars) const {
    MultiPoly r(ring_, std::move(vars));
    std::vector<std::size_t> map(vars_.size());
    bool monotone = true;
    std::size_t last = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto j = r.var_index(vars_[i]);
      if (!j) {
        for (const auto& t : terms_)
          if (t.exps[i] != 0)
            throw std::invalid_argument("cannot drop variable " + vars_[i] + " that occurs");
        map[i] = kMaxVars;
      } else {
        map[i] = *j;
        if (i > 0 && *j < last) monotone = false;
        last = *j;
      }
    }
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Term nt{Monomial{}, t.coeff};
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (map[i] != kMaxVars) nt.exps[map[i]] = t.exps[i];
      r.terms_.push_back(nt);
    }
    if (!monotone) {
      std::sort(r.terms_.begin(), r.terms_.end(),
                [](const Term& a, const Term& b) { return a.exps < b.exps; });
    }
    return r;
  }

  /// Exponent of a variable in a term (0 for absent variables).
  Exponent exponent(const Term& t, std::string_view name) const {
    auto i = var_index(name);
    return i ? t.exps[*i] : 0;
  }

 private:
  std::shared_ptr<const Ring> ring_;
  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

namespace detail {

template <class Ring>
void require_same_ring(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b) {
  if (a.ring_ptr() != b.ring_ptr() && !(a.ring() == b.ring())) throw RingMismatch();
}

inline std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                           const std::vector<std::string>& b) {
  std::vector<std::string> r = a;
  for (const auto& v : b)
    if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
  return r;
}

template <class Ring>
using Accumulator = absl::flat_hash_map<Monomial, typename Ring::value_type>;

template <class Ring>
MultiPoly<Ring> from_accumulator(std::shared_ptr<const Ring> ring, std::vector<std::string> vars,
                                 Accumulator<Ring>& acc) {
  std::vector<typename MultiPoly<Ring>::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!ring->is_zero(c)) terms.push_back({m, c});
  return MultiPoly<Ring>::from_terms(std::move(ring), std::move(vars), std::move(terms));
}

}  // namespace detail

template <class Ring>
MultiPoly<Ring> operator+(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b) {
  detail::require_same_ring(a, b);
  auto vars = detail::union_vars(a.vars(), b.vars());
  auto x = a.with_vars(vars);
  auto y = b.with_vars(vars);
  const auto& ring = a.ring();
  std::vector<typename MultiPoly<Ring>::Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.terms().begin(), j = y.terms().begin();
  while (i != x.terms().end() || j != y.terms().end()) {
    if (j == y.terms().end() || (i != x.terms().end() && i->exps < j->exps)) {
      out.push_back(*i++);
    } else if (i == x.terms().end() || j->exps < i->exps) {
      out.push_back(*j++);
    } else {
      auto c = ring.add(i->coeff, j->coeff);
      if (!ring.is_zero(c)) out.push_back({i->exps, c});
      ++i;
      ++j;
    }
  }
  return MultiPoly<Ring>::from_terms(a.ring_ptr(), vars, std::move(out));
}

template <class Ring>
MultiPoly<Ring> scale(const MultiPoly<Ring>& a, const typename Ring::value_type& c) {
  std::vector<typename MultiPoly<Ring>::Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({t.exps, a.ring().mul(t.coeff, c)});
  return MultiPoly<Ring>::from_terms(a.ring_ptr(), a.vars(), std::move(out));
}

template <class Ring>
MultiPoly<Ring> operator-(const MultiPoly<Ring>& a) {
  return scale(a, a.ring().neg(a.ring().one()));
}

template <class Ring>
MultiPoly<Ring> operator-(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b) {
  return a + (-b);
}

/// Product restricted to monomials inside the given windows. Variables
/// without a window are unrestricted.
template <class Ring>
MultiPoly<Ring> mul_windowed(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b,
                             std::span<const ExponentWindow> windows) {
  detail::require_same_ring(a, b);
  auto vars = detail::union_vars(a.vars(), b.vars());
  for (const auto& w : windows)
    if (std::find(vars.begin(), vars.end(), w.var) == vars.end()) vars.push_back(w.var);
  const auto x = a.with_vars(vars);
  const auto y = b.with_vars(vars);
  const std::size_t nv = vars.size();

  std::array<std::uint32_t, kMaxVars> lo{}, hi{};
  hi.fill(0xFFFF);
  for (const auto& w : windows) {
    auto idx = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), w.var) - vars.begin());
    lo[idx] = w.lo;
    hi[idx] = std::min<std::uint32_t>(w.hi, 0xFFFF);
  }

  const auto& ring = a.ring();
  detail::Accumulator<Ring> acc;
  acc.reserve(std::min<std::size_t>(x.size() * y.size(), 1u << 20));
  for (const auto& s : x.terms()) {
    for (const auto& t : y.terms()) {
      Monomial m;
      bool keep = true;
      for (std::size_t v = 0; v < nv; ++v) {
        const std::uint32_t e = std::uint32_t{s.exps[v]} + t.exps[v];
        if (e < lo[v] || e > hi[v]) {
          keep = false;
          break;
        }
        m[v] = static_cast<Exponent>(e);
      }
      if (!keep) continue;
      for (std::size_t v = nv; v < kMaxVars; ++v) m[v] = 0;
      auto c = ring.mul(s.coeff, t.coeff);
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second = ring.add(it->second, c);
    }
  }
  return detail::from_accumulator(a.ring_ptr(), std::move(vars), acc);
}

template <class Ring>
MultiPoly<Ring> operator*(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b) {
  return mul_windowed<Ring>(a, b, {});
}

template <class Ring>
MultiPoly<Ring> pow(const MultiPoly<Ring>& a, std::uint64_t n) {
  auto result = MultiPoly<Ring>::constant(a.ring_ptr(), a.vars(), a.ring().one());
  auto base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

/// Formal partial derivative.
template <class Ring>
MultiPoly<Ring> derivative(const MultiPoly<Ring>& a, std::string_view var) {
  const std::size_t i = a.index_of(var);
  std::vector<typename MultiPoly<Ring>::Term> out;
  for (const auto& t : a.terms()) {
    if (t.exps[i] == 0) continue;
    auto m = t.exps;
    --m[i];
    out.push_back({m, a.ring().scale(t.coeff, t.exps[i] % a.ring().modulus())});
  }
  return MultiPoly<Ring>::from_terms(a.ring_ptr(), a.vars(), std::move(out));
}

/// Coefficient of var^d, as a polynomial in the remaining variables.
template <class Ring>
MultiPoly<Ring> coefficient_of(const MultiPoly<Ring>& a, std::string_view var, std::uint32_t d) {
  std::vector<std::string> rest;
  for (const auto& v : a.vars())
    if (v != var) rest.push_back(v);
  auto idx = a.var_index(var);
  if (!idx) {
    if (d == 0) return a.with_vars(rest);
    return MultiPoly<Ring>(a.ring_ptr(), rest);
  }
  std::vector<typename MultiPoly<Ring>::Term> out;
  for (const auto& t : a.terms()) {
    if (t.exps[*idx] != d) continue;
    typename MultiPoly<Ring>::Term nt{Monomial{}, t.coeff};
    std::size_t k = 0;
    for (std::size_t v = 0; v < a.vars().size(); ++v)
      if (v != *idx) nt.exps[k++] = t.exps[v];
    out.push_back(nt);
  }
  return MultiPoly<Ring>::from_terms(a.ring_ptr(), std::move(rest), std::move(out));
}

/// Coefficient of a multidegree in several variables.
template <class Ring>
MultiPoly<Ring> coefficient_of(const MultiPoly<Ring>& a,
                               std::span<const std::pair<std::string, std::uint32_t>> degrees) {
  auto r = a;
  for (const auto& [v, d] : degrees) r = coefficient_of(r, v, d);
  return r;
}

/// Splits a polynomial by its exponents in `split_vars`; each slice is a
/// polynomial in the remaining variables.
template <class Ring>
std::map<std::vector<Exponent>, MultiPoly<Ring>> slices(const MultiPoly<Ring>& a,
                                                        const std::vector<std::string>& split_vars) {
  std::vector<std::optional<std::size_t>> idx;
  for (const auto& v : split_vars) idx.push_back(a.var_index(v));
  std::vector<std::string> rest;
  std::vector<std::size_t> rest_idx;
  for (std::size_t v = 0; v < a.vars().size(); ++v) {
    if (std::find(split_vars.begin(), split_vars.end(), a.vars()[v]) == split_vars.end()) {
      rest.push_back(a.vars()[v]);
      rest_idx.push_back(v);
    }
  }
  std::map<std::vector<Exponent>, std::vector<typename MultiPoly<Ring>::Term>> groups;
  for (const auto& t : a.terms()) {
    std::vector<Exponent> key;
    for (const auto& i : idx) key.push_back(i ? t.exps[*i] : 0);
    typename MultiPoly<Ring>::Term nt{Monomial{}, t.coeff};
    for (std::size_t k = 0; k < rest_idx.size(); ++k) nt.exps[k] = t.exps[rest_idx[k]];
    groups[key].push_back(nt);
  }
  std::map<std::vector<Exponent>, MultiPoly<Ring>> out;
  for (auto& [key, terms] : groups)
    out.emplace(key, MultiPoly<Ring>::from_terms(a.ring_ptr(), rest, std::move(terms)));
  return out;
}

/// Composition P(..., var = Q, ...).
template <class Ring>
MultiPoly<Ring> substitute(const MultiPoly<Ring>& a, std::string_view var, const MultiPoly<Ring>& q) {
  static_cast<void>(a.index_of(var));
  auto parts = slices(a, {std::string(var)});
  std::vector<std::string> rest;
  for (const auto& v : a.vars())
    if (v != var) rest.push_back(v);
  auto vars = detail::union_vars(rest, q.vars());
  MultiPoly<Ring> result(a.ring_ptr(), vars);
  // Horner from the top degree down.
  if (parts.empty()) return result;
  int top = parts.rbegin()->first[0];
  for (int d = top; d >= 0; --d) {
    result = result * q;
    auto it = parts.find({static_cast<Exponent>(d)});
    if (it != parts.end()) result = result + it->second;
  }
  return result.with_vars(vars);
}

/// Evaluates at a point; every variable occurring in P must be assigned.
template <class Ring>
typename Ring::value_type evaluate(const MultiPoly<Ring>& a,
                                   const std::map<std::string, typename Ring::value_type>& at) {
  const auto& ring = a.ring();
  std::vector<typename Ring::value_type> values;
  for (const auto& v : a.vars()) {
    auto it = at.find(v);
    if (it == at.end()) throw UnknownVariable(v);
    values.push_back(it->second);
  }
  auto sum = ring.zero();
  for (const auto& t : a.terms()) {
    auto term = t.coeff;
    for (std::size_t v = 0; v < values.size(); ++v)
      if (t.exps[v] != 0) term = ring.mul(term, ring.pow(values[v], t.exps[v]));
    sum = ring.add(sum, term);
  }
  return sum;
}

template <class Ring>
bool operator==(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b) {
  return (a - b).is_zero();
}

/// The linear form var + c.
template <class Ring>
MultiPoly<Ring> linear(std::shared_ptr<const Ring> ring, const std::string& var, std::int64_t c) {
  return MultiPoly<Ring>::variable(ring, var) + MultiPoly<Ring>::constant(ring, c);
}

/// Falling factorial (v)_m = v (v-1) ... (v-m+1); (v)_0 = 1.
template <class Ring>
MultiPoly<Ring> pochhammer_poly(std::shared_ptr<const Ring> ring, std::uint32_t m,
                                const std::string& var) {
  auto result = MultiPoly<Ring>::constant(ring, {var}, ring->one());
  for (std::uint32_t i = 0; i < m; ++i) result = result * linear(ring, var, -static_cast<std::int64_t>(i));
  return result;
}

/// Stirling numbers of the second kind S(n, k), 0 <= k <= n <= max_n, in the ring.
template <class Ring>
std::vector<std::vector<typename Ring::value_type>> stirling2_table(const Ring& ring,
                                                                    std::uint32_t max_n) {
  std::vector<std::vector<typename Ring::value_type>> s(max_n + 1);
  s[0] = {ring.one()};
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    s[n].assign(n + 1, ring.zero());
    for (std::uint32_t k = 1; k <= n; ++k) {
      auto left = k < n ? ring.scale(s[n - 1][k], k % ring.modulus()) : ring.zero();
      s[n][k] = ring.add(left, s[n - 1][k - 1]);
    }
  }
  return s;
}

/// P = sum_d coeffs[d] * (var)_d.
template <class Ring>
struct PochhammerExpansion {
  std::string var;
  std::map<std::uint32_t, MultiPoly<Ring>> coeffs;
};

/// Falling-factorial expansion via v^n = sum_k S(n,k) (v)_k.
template <class Ring>
PochhammerExpansion<Ring> to_pochhammer_basis(const MultiPoly<Ring>& a, const std::string& var) {
  PochhammerExpansion<Ring> out{var, {}};
  auto parts = slices(a, {var});
  if (parts.empty()) return out;
  const std::uint32_t top = parts.rbegin()->first[0];
  const auto s = stirling2_table(a.ring(), top);
  for (const auto& [key, coeff] : parts) {
    const std::uint32_t n = key[0];
    for (std::uint32_t k = 0; k <= n; ++k) {
      if (a.ring().is_zero(s[n][k])) continue;
      auto term = scale(coeff, s[n][k]);
      auto it = out.coeffs.find(k);
      if (it == out.coeffs.end()) {
        out.coeffs.emplace(k, term);
      } else {
        it->second = it->second + term;
      }
    }
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

/// Inverse of to_pochhammer_basis.
template <class Ring>
MultiPoly<Ring> from_pochhammer_basis(std::shared_ptr<const Ring> ring,
                                      const PochhammerExpansion<Ring>& e) {
  MultiPoly<Ring> result(ring, {e.var});
  for (const auto& [d, c] : e.coeffs) result = result + c * pochhammer_poly(ring, d, e.var);
  return result;
}

/// Product of all factors restricted to target[v] - slack[v] <= exponent(v) <= target[v]
/// for each listed variable. Partial products are pruned against the degree
/// still to come, so only terms that can reach the window survive.
template <class Ring>
MultiPoly<Ring> windowed_product(std::span<const MultiPoly<Ring>> factors,
                                 const std::vector<std::pair<std::string, std::uint32_t>>& target,
                                 const std::vector<std::uint32_t>& slack) {
  if (factors.empty()) throw std::invalid_argument("windowed_product needs at least one factor");
  const std::size_t nt = target.size();
  // remaining[f][v]: degree in target var v of factors f+1..end.
  std::vector<std::vector<std::uint32_t>> remaining(factors.size(), std::vector<std::uint32_t>(nt, 0));
  for (std::size_t f = factors.size(); f-- > 1;)
    for (std::size_t v = 0; v < nt; ++v)
      remaining[f - 1][v] =
          remaining[f][v] + static_cast<std::uint32_t>(std::max(0, factors[f].degree(target[v].first)));

  auto windows_after = [&](std::size_t f) {
    std::vector<ExponentWindow> w;
    for (std::size_t v = 0; v < nt; ++v) {
      const std::uint32_t t = target[v].second;
      const std::uint32_t lo_base = t >= slack[v] ? t - slack[v] : 0;
      const std::uint32_t lo = lo_base >= remaining[f][v] ? lo_base - remaining[f][v] : 0;
      w.push_back({target[v].first, lo, t});
    }
    return w;
  };

  const auto one = MultiPoly<Ring>::constant(factors[0].ring_ptr(), {}, factors[0].ring().one());
  auto result = mul_windowed<Ring>(factors[0], one, windows_after(0));
  for (std::size_t f = 1; f < factors.size(); ++f)
    result = mul_windowed<Ring>(result, factors[f], windows_after(f));
  return result;
}

/// Coefficient of prod_v v^{target[v]} in the product of the factors.
template <class Ring>
MultiPoly<Ring> product_coefficient(std::span<const MultiPoly<Ring>> factors,
                                    const std::vector<std::pair<std::string, std::uint32_t>>& target) {
  auto w = windowed_product(factors, target, std::vector<std::uint32_t>(target.size(), 0));
  return coefficient_of<Ring>(w, target);
}

/// Coefficient of prod_v v^{target[v]} in a * b, touching only the needed terms of a.
template <class Ring>
MultiPoly<Ring> coefficient_of_product(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b,
                                       const std::vector<std::pair<std::string, std::uint32_t>>& target) {
  std::vector<std::string> tvars;
  for (const auto& [v, d] : target) tvars.push_back(v);
  const auto a_parts = slices(a, tvars);
  const auto b_parts = slices(b, tvars);
  std::vector<std::string> rest_vars = detail::union_vars(
      a_parts.empty() ? std::vector<std::string>{} : a_parts.begin()->second.vars(),
      b_parts.empty() ? std::vector<std::string>{} : b_parts.begin()->second.vars());
  MultiPoly<Ring> result(a.ring_ptr(), rest_vars);
  for (const auto& [key, bpoly] : b_parts) {
    std::vector<Exponent> need(key.size());
    bool ok = true;
    for (std::size_t v = 0; v < key.size(); ++v) {
      if (key[v] > target[v].second) {
        ok = false;
        break;
      }
      need[v] = static_cast<Exponent>(target[v].second - key[v]);
    }
    if (!ok) continue;
    auto it = a_parts.find(need);
    if (it == a_parts.end()) continue;
    result = result + it->second * bpoly;
  }
  return result.with_vars(rest_vars);
}

/// Maps every coefficient through f into another ring (e.g. reduction mod p).
template <class RingTo, class RingFrom, class F>
MultiPoly<RingTo> change_ring(const MultiPoly<RingFrom>& a, std::shared_ptr<const RingTo> to, F f) {
  std::vector<typename MultiPoly<RingTo>::Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({t.exps, f(t.coeff)});
  return MultiPoly<RingTo>::from_terms(std::move(to), a.vars(), std::move(out));
}

template <class Ring>
std::string coeff_to_string(const Ring& ring, const typename Ring::value_type& c) {
  const auto d = ring.digits(c);
  if (d.size() == 1) return std::to_string(d[0]);
  std::string s = "(";
  bool first = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!first) s += " + ";
    first = false;
    s += std::to_string(d[i]);
    if (i == 1) s += "*pi";
    if (i > 1) s += "*pi^" + std::to_string(i);
  }
  if (first) s += "0";
  return s + ")";
}

template <class Ring>
std::string monomial_to_string(const MultiPoly<Ring>& a, const Monomial& m) {
  std::string s;
  for (std::size_t v = 0; v < a.vars().size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += a.vars()[v];
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

template <class Ring>
std::string to_string(const MultiPoly<Ring>& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << coeff_to_string(a.ring(), t.coeff) << "*" << monomial_to_string(a, t.exps);
  }
  return os.str();
}

}  // namespace pskz
