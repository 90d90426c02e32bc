#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "pskz/mpoly.hpp"
#include "pskz/params.hpp"

namespace pskz {

enum class Family { hyper, sl2, qkz };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::hyper: return "hyper";
    case Family::sl2: return "sl2";
    case Family::qkz: return "qkz";
  }
  return "?";
}

using FamilyParams = std::variant<HyperParams, Sl2Params, QkzParams>;

class WrongFamily : public std::invalid_argument {
 public:
  WrongFamily(Family want, Family got)
      : std::invalid_argument("certificate family is " + to_string(got) + ", expected " +
                              to_string(want)) {}
};

/// One component of a solution: a basis label and a polynomial in (z, lambda).
/// Hyper and qKZ labels are a single 1-based integer; sl2 labels are J.
template <class Ring>
struct Component {
  std::vector<std::uint32_t> index;
  MultiPoly<Ring> poly;
};

template <class Ring>
struct SolutionCertificate {
  FamilyParams params;
  std::shared_ptr<const Ring> ring;
  std::vector<std::string> vars;
  std::vector<Component<Ring>> components;

  Family family() const { return static_cast<Family>(params.index()); }

  const RingParams& ring_params() const {
    return std::visit([](const auto& p) -> const RingParams& { return p.ring; }, params);
  }

  bool is_zero() const {
    for (const auto& c : components)
      if (!c.poly.is_zero()) return false;
    return true;
  }

  template <class P>
  const P& as() const {
    return std::get<P>(params);
  }
};

/// Verdict for one equation: whether the cleared residual vanishes mod p^s,
/// and the lowest monomial when it does not.
struct ResidualEntry {
  std::string equation;
  bool zero = true;
  std::size_t terms = 0;
  std::string lowest_monomial;
  std::string lowest_coeff;
};

struct ResidualReport {
  std::string check;
  std::vector<ResidualEntry> entries;

  bool all_zero() const {
    for (const auto& e : entries)
      if (!e.zero) return false;
    return true;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.zero ? 0 : 1;
    return n;
  }
};

template <class Ring>
ResidualEntry residual_entry(std::string equation, const MultiPoly<Ring>& r) {
  ResidualEntry e{std::move(equation), r.is_zero(), r.size(), {}, {}};
  if (!r.is_zero()) {
    const auto& low = r.terms().front();
    e.lowest_monomial = monomial_to_string(r, low.exps);
    e.lowest_coeff = coeff_to_string(r.ring(), low.coeff);
  }
  return e;
}

}  // namespace pskz
