// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every check is an exact identity, so the tolerance is zero throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "pskz/pskz.hpp"

using namespace pskz;
using P = MultiPoly<ResidueRing>;

namespace {

// Pinned tolerance: residuals must be the zero polynomial.
constexpr std::size_t kAllowedNonzeroTerms = 0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", secs);
  std::cout << "[" << (o.pass ? "PASS" : "FAIL") << "] " << id << ". " << title << " (" << buf << ")";
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

bool clean(const ResidualReport& r) {
  for (const auto& e : r.entries)
    if (!e.zero && e.terms > kAllowedNonzeroTerms) return false;
  return true;
}

std::string first_failure(const ResidualReport& r) {
  for (const auto& e : r.entries)
    if (!e.zero) return e.equation + " lowest " + e.lowest_coeff + "*" + e.lowest_monomial;
  return {};
}

template <class Ring>
Outcome hyper_matrix(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& ps, std::vector<std::uint32_t> gs,
                     std::uint64_t rn, std::uint64_t rd) {
  std::size_t certs = 0;
  for (auto [p, s] : ps) {
    auto R = std::make_shared<const Ring>(RingParams::make(p, s, rn, rd));
    for (auto g : gs)
      for (std::uint32_t ell = 1; ell <= g; ++ell) {
        const auto cert = hyper::construct_solution(R, HyperParams::make(R->params(), g, ell));
        ++certs;
        for (const auto& rep : {hyper::verify_kz(cert), hyper::verify_dynamical(cert)})
          if (!clean(rep))
            return {false, to_string(R->params()) + " g=" + std::to_string(g) + " ell=" + std::to_string(ell) + ": " +
                               first_failure(rep)};
        if (!hyper::lambda_zero_sum(cert).is_zero())
          return {false, "sum identity fails at " + to_string(R->params()) + " g=" + std::to_string(g)};
      }
  }
  return {true, std::to_string(certs) + " certificates, KZ + dynamical + sum identity zero"};
}

const std::vector<std::pair<std::uint64_t, std::uint64_t>> kHyperRings{{3, 1}, {3, 2}, {5, 1},
                                                                        {5, 2}, {7, 1}, {7, 2}};

Outcome criterion1() {
  std::size_t certs = 0, entries = 0;
  for (auto [p, s] : kHyperRings) {
    auto R = std::make_shared<const ResidueRing>(RingParams::make(p, s));
    for (std::uint32_t g : {1u, 2u})
      for (std::uint32_t ell = 1; ell <= g; ++ell) {
        const auto cert = hyper::construct_solution(R, HyperParams::make(R->params(), g, ell));
        ++certs;
        for (const auto& rep : {hyper::verify_kz(cert), hyper::verify_dynamical(cert)}) {
          entries += rep.entries.size();
          if (!clean(rep)) return {false, "p=" + std::to_string(p) + " s=" + std::to_string(s) + ": " + first_failure(rep)};
        }
      }
  }
  return {true, std::to_string(certs) + " certificates, " + std::to_string(entries) + " residuals zero"};
}

Outcome criterion2() {
  auto R = std::make_shared<const ResidueRing>(RingParams::make(3, 1));
  const auto cert = hyper::construct_solution(R, HyperParams::make(R->params(), 1, 1));
  const std::vector<std::string> vars{"t", "z1", "z2", "z3", "lambda"};
  auto v = [&](const std::string& n) { return oracle::variable(3, vars, n); };
  for (std::uint32_t i = 1; i <= 3; ++i) {
    // E_1 = 1 mod 3, so the integrand is prod_{j != i} (t - z_j).
    auto prod = oracle::constant(3, vars, 1);
    for (std::uint32_t j = 1; j <= 3; ++j)
      if (j != i) prod = oracle::mul(prod, oracle::sub(v("t"), v("z" + std::to_string(j))));
    const auto want = oracle::coefficient(prod, 0, 2);
    if (!oracle::equals(want, cert.components[i - 1].poly) || cert.components[i - 1].poly != P::constant(R, 1))
      return {false, "component " + std::to_string(i) + " = " + to_string(cert.components[i - 1].poly)};
  }
  return {true, "I^1 = (1,1,1) mod 3, matches naive expansion"};
}

Outcome criterion3() {
  std::size_t certs = 0;
  for (auto [p, s] : kHyperRings) {
    auto R = std::make_shared<const ResidueRing>(RingParams::make(p, s));
    for (std::uint32_t g : {1u, 2u})
      for (std::uint32_t ell = 1; ell <= g; ++ell) {
        ++certs;
        const auto sum = hyper::lambda_zero_sum(hyper::construct_solution(R, HyperParams::make(R->params(), g, ell)));
        if (!sum.is_zero()) return {false, "nonzero sum at p=" + std::to_string(p) + " s=" + std::to_string(s)};
      }
  }
  return {true, std::to_string(certs) + " sums are the zero polynomial"};
}

Outcome criterion4() {
  std::size_t applicable = 0, skipped = 0;
  for (auto [p, s] : kHyperRings)
    for (std::uint32_t g : {1u, 2u}) {
      const auto rp = RingParams::make(p, s);
      if (!hyper::vanishing_applies(rp, g)) {
        ++skipped;
        continue;
      }
      ++applicable;
      auto R = std::make_shared<const ResidueRing>(rp);
      for (std::uint32_t ell = g + 1; ell <= g + 2; ++ell)
        if (!hyper::construct_solution(R, HyperParams::make(rp, g, ell)).is_zero())
          return {false, to_string(rp) + " g=" + std::to_string(g) + " ell=" + std::to_string(ell) + " nonzero"};
    }
  return {true, std::to_string(applicable) + " applicable points zero at ell=g+1,g+2; " + std::to_string(skipped) +
                    " outside the degree condition"};
}

Outcome criterion5() {
  std::ostringstream os;
  for (auto [p, s, g] : {std::tuple{7u, 1u, 1u}, {7u, 1u, 2u}, {5u, 1u, 1u}, {3u, 2u, 1u}, {5u, 2u, 2u}}) {
    const auto hp = HyperParams::make(RingParams::make(p, s), g, 1);
    const auto r = hyper::independence_check(hp);
    if (r.verdict != hyper::IndependenceResult::Verdict::independent)
      return {false, "no nonzero minor at p=" + std::to_string(p) + " s=" + std::to_string(s) + " g=" + std::to_string(g)};
    // Recompute the witness minor from the reported rows.
    const ResidueRing fp(RingParams::make(p, 1));
    std::map<std::string, std::uint64_t> at;
    for (std::uint32_t i = 1; i <= 2 * g + 1; ++i) at[z_var(i)] = r.point[i - 1];
    std::vector<std::vector<std::uint64_t>> m;
    for (const auto& row : r.rows) {
      std::vector<std::uint64_t> vals;
      for (auto c : r.columns) vals.push_back(evaluate(row[c - 1], at));
      m.push_back(vals);
    }
    const auto det = g == 1 ? m[0][0] : fp.sub(fp.mul(m[0][0], m[1][1]), fp.mul(m[0][1], m[1][0]));
    if (det == 0 || det != r.minor_value) return {false, "witness minor does not recompute"};
    os << "p=" << p << ",s=" << s << ",g=" << g << " cols=";
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
    os << " det=" << det << "; ";
  }
  return {true, os.str()};
}

Outcome criterion6() {
  auto a = hyper_matrix<ResidueRing>(kHyperRings, {1, 2}, 2, 1);
  if (!a.pass) return {false, "r=2: " + a.detail};
  auto b = hyper_matrix<RamifiedRing>({{5, 1}}, {1}, 3, 2);
  if (!b.pass) return {false, "r=3/2: " + b.detail};
  return {true, "r=2: " + a.detail + "; r=3/2 (p=5,s=1,g=1): " + b.detail};
}

Outcome criterion7() {
  std::size_t certs = 0, nonzero = 0;
  for (std::uint64_t p : {5u, 7u})
    for (std::uint64_t s : {1u, 2u})
      for (std::int64_t kappa : {2, 3})
        for (std::uint32_t k : {1u, 2u}) {
          auto R = std::make_shared<const ResidueRing>(RingParams::make(p, s));
          const auto sp = Sl2Params::make(R->params(), kappa, 1, {1, 1}, k, std::vector<std::uint32_t>(k, 1));
          const auto cert = sl2::construct_solution_sl2(R, sp);
          ++certs;
          nonzero += cert.is_zero() ? 0 : 1;
          const auto rep = sl2::verify_sl2(cert);
          if (!clean(rep)) return {false, to_string(R->params()) + " kappa=" + std::to_string(kappa) + ": " + first_failure(rep)};
        }
  return {true, std::to_string(certs) + " certificates verified (" + std::to_string(nonzero) + " nonzero)"};
}

Outcome criterion8() {
  using A = std::vector<std::vector<std::uint32_t>>;
  const bool ok = sl2::weight_assignments({1, 0, 0}, 1) == A{{1}} && sl2::weight_assignments({2, 0, 0}, 2) == A{{1, 1}} &&
                  sl2::weight_assignments({1, 1, 0}, 2) == A{{1, 2}, {2, 1}};
  return {ok, "W_(1,0..), W_(2,0..), W_(1,1,0..)"};
}

template <class Ring>
bool qkz_ok(const RingParams& rp) {
  auto R = std::make_shared<const Ring>(rp);
  const auto qp = QkzParams::make(rp);
  return clean(qkz::verify_qkz(qkz::construct_qkz_solution(R, qp))) && clean(qkz::functional_relations(R, qp));
}

Outcome criterion9() {
  std::size_t n = 0;
  for (std::uint64_t p : {3u, 5u})
    for (std::uint64_t s : {1u, 2u}) {
      const bool ok = qkz_ok<ResidueRing>(RingParams::make(p, s)) && qkz_ok<ResidueRing>(RingParams::make(p, s, 2, 1)) &&
                      qkz_ok<RamifiedRing>(RingParams::make(p, s, 3, 2));
      if (!ok) return {false, "p=" + std::to_string(p) + " s=" + std::to_string(s)};
      n += 3;
    }
  return {true, std::to_string(n) + " rings, difference equation and functional relations zero"};
}

template <class Ring>
bool exp_congruences(const RingParams& rp) {
  auto R = std::make_shared<const Ring>(rp);
  using Q = MultiPoly<Ring>;
  const auto lambda = Q::variable(R, "lambda"), t = Q::variable(R, "t"), u = Q::variable(R, "u"),
             v = Q::variable(R, "v");
  const auto pr = Q::constant(R, {}, R->p_to_r());
  const auto e = trunc_exp_poly(lambda * t);
  return derivative(e, "t") == pr * lambda * e && derivative(e, "lambda") == pr * t * e &&
         trunc_exp_poly(lambda * (u + v)) == trunc_exp_poly(lambda * u) * trunc_exp_poly(lambda * v);
}

Outcome criterion10() {
  std::mt19937_64 rng(20261018);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> rings{{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}};
  // (a) derivative-coefficient divisibility.
  for (auto [p, s] : rings) {
    auto R = std::make_shared<const ResidueRing>(RingParams::make(p, s));
    const auto q = R->modulus();
    const auto e = trunc_exp_poly(P::variable(R, "lambda") * P::variable(R, "t"));
    for (int i = 0; i < 200; ++i) {
      auto f = oracle::to_library(
          oracle::random_poly(rng, static_cast<std::int64_t>(q), {"t", "z"}, 6, static_cast<int>(2 * q)), R);
      const auto d = derivative(e * f, "t");
      for (std::uint32_t ell = 1; ell <= 2; ++ell)
        if (!coefficient_of(d, "t", static_cast<std::uint32_t>(ell * q - 1)).is_zero())
          return {false, "(a) fails at p=" + std::to_string(p) + " s=" + std::to_string(s)};
    }
  }
  // (b) exponential congruences, lambda formal.
  for (auto [p, s] : {std::pair{3u, 1u}, {3u, 2u}, {3u, 3u}, {5u, 1u}, {5u, 2u}, {7u, 1u}, {7u, 2u}})
    if (!exp_congruences<ResidueRing>(RingParams::make(p, s)) ||
        !exp_congruences<ResidueRing>(RingParams::make(p, s, 2, 1)) ||
        !exp_congruences<RamifiedRing>(RingParams::make(p, s, 3, 2)))
      return {false, "(b) fails at p=" + std::to_string(p) + " s=" + std::to_string(s)};
  // (c) Pochhammer shift invariance of the (t)_{q-1} coefficient.
  for (auto [p, s] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 1u}, {5u, 2u}}) {
    auto R = std::make_shared<const ResidueRing>(RingParams::make(p, s));
    const auto q = R->modulus();
    const auto key = static_cast<std::uint32_t>(q - 1);
    for (int i = 0; i < 200; ++i) {
      auto f = oracle::to_library(
          oracle::random_poly(rng, static_cast<std::int64_t>(q), {"t", "z"}, 8, static_cast<int>(2 * q - 1)), R);
      auto a = to_pochhammer_basis(f, "t").coeffs;
      auto b = to_pochhammer_basis(substitute(f, "t", linear(R, "t", 1)), "t").coeffs;
      const auto ca = a.count(key) ? a.at(key) : P(R), cb = b.count(key) ? b.at(key) : P(R);
      if (ca != cb) return {false, "(c) fails at p=" + std::to_string(p) + " s=" + std::to_string(s)};
    }
  }
  // (d) naive multiplication oracle.
  const std::vector<std::string> vars{"a", "b", "c"};
  std::size_t pairs = 0;
  for (auto [p, s] : {std::pair{3u, 2u}, {5u, 1u}, {7u, 2u}, {1000003u, 1u}}) {
    auto R = std::make_shared<const ResidueRing>(RingParams::make(p, s));
    const auto mod = static_cast<std::int64_t>(R->modulus());
    for (int i = 0; i < 125; ++i, ++pairs) {
      auto a = oracle::random_poly(rng, mod, vars, 12, 4), b = oracle::random_poly(rng, mod, vars, 12, 4);
      if (!oracle::equals(oracle::mul(a, b), oracle::to_library(a, R) * oracle::to_library(b, R)))
        return {false, "(d) product mismatch"};
    }
  }
  return {true, "(a) 1000 integrands, (b) 21 rings, (c) 800 polynomials, (d) " + std::to_string(pairs) + " pairs"};
}

Outcome criterion11() {
  const auto r = gauge::gauge_search(RingParams::make(5, 1), 1, 2, 1);
  std::ostringstream os;
  os << r.trials << " trials; ";
  if (!r.found) {
    os << (r.log.empty() ? "no relation found" : r.log.back());
    return {true, os.str()};
  }
  // Recheck the reported relation outside the search loop.
  auto R = std::make_shared<const ResidueRing>(RingParams::make(5, 1));
  const auto sl = sl2::construct_solution_sl2(R, Sl2Params::make(R->params(), 2, 1, {1, 1, 1}, 1, {1}));
  const auto hy = hyper::construct_solution(R, HyperParams::make(R->params(), 1, 1));
  for (const auto& comp : sl.components) {
    std::uint32_t j = 0;
    while (comp.index[j] == 0) ++j;
    const auto h = substitute(hy.components[j].poly, kLambda, scale(P::variable(R, kLambda), R->from_residue(r.c)));
    if (comp.poly != *r.G * h) return {false, "reported relation does not hold"};
  }
  os << "found G=" << r.unit << "*" << r.base_name << "; matching c: ";
  for (std::size_t i = 0; i < r.all_c.size(); ++i) os << (i ? "," : "") << r.all_c[i];
  if (r.all_c.size() == R->modulus()) os << " (every c: I_hyper is lambda-free at this precision, so c is not pinned)";
  return {true, os.str()};
}

}  // namespace

int main() {
  criterion(1, "hyperelliptic KZ and dynamical residuals", criterion1);
  criterion(2, "worked value p=3 s=1 g=1", criterion2);
  criterion(3, "sum identity at lambda=0", criterion3);
  criterion(4, "vanishing for ell > g", criterion4);
  criterion(5, "independence witness minors", criterion5);
  criterion(6, "generalized exponent r=2 and r=3/2", criterion6);
  criterion(7, "sl2 KZ and dynamical residuals", criterion7);
  criterion(8, "weight function examples", criterion8);
  criterion(9, "qKZ difference equation", criterion9);
  criterion(10, "kernel lemmas", criterion10);
  criterion(11, "gauge cross-check report", criterion11);
  std::cout << (failures ? std::to_string(failures) + " criteria FAILED" : std::string("all criteria PASS")) << std::endl;
  return failures ? 1 : 0;
}
