#pragma once

// JSON form of a SolutionCertificate, schema "pskz-cert-v1".
//
//   { "schema": "pskz-cert-v1", "family": ..., "ring": {p, s, r_num, r_den},
//     "params": {...}, "vars": [...],
//     "components": [ { "index": ..., "terms": [ {"exps": [...], "coeff": ["..."]} ] } ] }
//
// Coefficients are decimal strings, r_den of them (the pi-adic digits). The
// index is an integer for hyper and qkz and an integer array for sl2. Output
// is deterministic: keys in fixed order, terms sorted by exponent vector.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "pskz/certificate.hpp"
#include "pskz/padic.hpp"
#include "pskz/params.hpp"

namespace pskz::io {

inline constexpr const char* kSchema = "pskz-cert-v1";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyCertificate = std::variant<SolutionCertificate<ResidueRing>, SolutionCertificate<RamifiedRing>>;

using json = nlohmann::ordered_json;

namespace detail {

inline json params_json(const FamilyParams& fp) {
  json out = json::object();
  if (const auto* h = std::get_if<HyperParams>(&fp)) {
    out["g"] = h->g;
    out["ell"] = h->ell;
  } else if (const auto* s = std::get_if<Sl2Params>(&fp)) {
    out["kappa_num"] = s->kappa_num;
    out["kappa_den"] = s->kappa_den;
    out["m"] = s->m;
    out["k"] = s->k;
    out["ell"] = s->ell;
    out["M"] = s->M;
    out["Mij"] = s->Mij;
    out["M0"] = s->M0;
  }
  return out;
}

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("field \"") + key + "\" has the wrong type");
  }
}

inline std::uint64_t parse_decimal(const json& j) {
  if (!j.is_string()) throw FormatError("coefficients must be decimal strings");
  const auto& s = j.get_ref<const std::string&>();
  if (s.empty() || s.size() > 20 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw FormatError("malformed coefficient \"" + s + "\"");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw FormatError("malformed coefficient \"" + s + "\"");
  }
}

inline FamilyParams params_from_json(Family family, const RingParams& rp, const json& j) {
  switch (family) {
    case Family::hyper:
      return HyperParams::make(rp, get_field<std::uint32_t>(j, "g"), get_field<std::uint32_t>(j, "ell"));
    case Family::sl2: {
      Sl2ExponentOverride over;
      over.M = get_field<std::vector<std::uint64_t>>(j, "M");
      over.Mij = get_field<std::vector<std::uint64_t>>(j, "Mij");
      over.M0 = get_field<std::uint64_t>(j, "M0");
      auto sp = Sl2Params::make(rp, get_field<std::int64_t>(j, "kappa_num"), get_field<std::int64_t>(j, "kappa_den"),
                                get_field<std::vector<std::uint32_t>>(j, "m"), get_field<std::uint32_t>(j, "k"),
                                get_field<std::vector<std::uint32_t>>(j, "ell"), over);
      if (sp.kappa_num != get_field<std::int64_t>(j, "kappa_num") ||
          sp.kappa_den != get_field<std::int64_t>(j, "kappa_den"))
        throw FormatError("kappa must be stored in lowest terms with positive denominator");
      return sp;
    }
    case Family::qkz:
      return QkzParams::make(rp);
  }
  throw FormatError("unknown family");
}

inline Family family_from_string(const std::string& s) {
  for (auto f : {Family::hyper, Family::sl2, Family::qkz})
    if (to_string(f) == s) return f;
  throw FormatError("unknown family \"" + s + "\"");
}

inline std::vector<std::string> expected_vars(const FamilyParams& fp) {
  return std::visit([](const auto& p) { return p.solution_vars(); }, fp);
}

template <class Ring>
SolutionCertificate<Ring> read_components(const json& doc, FamilyParams fp, const RingParams& rp) {
  auto ring = std::make_shared<const Ring>(rp);
  const auto vars = get_field<std::vector<std::string>>(doc, "vars");
  if (vars != expected_vars(fp)) throw FormatError("vars do not match the family");
  SolutionCertificate<Ring> cert{std::move(fp), ring, vars, {}};
  const auto family = cert.family();
  const auto& comps = doc.at("components");
  if (!comps.is_array()) throw FormatError("components must be an array");
  std::vector<std::vector<std::uint32_t>> seen;
  for (const auto& c : comps) {
    std::vector<std::uint32_t> index;
    if (!c.is_object() || !c.contains("index")) throw FormatError("component without index");
    const auto& ij = c.at("index");
    if (family == Family::sl2) {
      index = get_field<std::vector<std::uint32_t>>(c, "index");
      const auto& sp = std::get<Sl2Params>(cert.params);
      if (index.size() != sp.n()) throw FormatError("sl2 index has the wrong length");
      std::uint32_t total = 0;
      for (std::size_t i = 0; i < index.size(); ++i) {
        if (index[i] > sp.m[i]) throw FormatError("sl2 index exceeds m");
        total += index[i];
      }
      if (total != sp.k) throw FormatError("sl2 index does not have weight k");
    } else {
      if (!ij.is_number_unsigned()) throw FormatError("index must be a non-negative integer");
      index = {ij.get<std::uint32_t>()};
      if (family == Family::hyper) {
        const auto n = std::get<HyperParams>(cert.params).n();
        if (index[0] < 1 || index[0] > n) throw FormatError("hyper index out of range");
      } else if (index[0] != 0) {
        throw FormatError("qkz index must be 0");
      }
    }
    if (std::find(seen.begin(), seen.end(), index) != seen.end()) throw FormatError("duplicate component index");
    seen.push_back(index);

    const auto& terms = c.contains("terms") ? c.at("terms") : throw FormatError("component without terms");
    if (!terms.is_array()) throw FormatError("terms must be an array");
    std::vector<typename MultiPoly<Ring>::Term> out;
    std::vector<std::uint32_t> prev;
    for (const auto& t : terms) {
      const auto exps = get_field<std::vector<std::uint32_t>>(t, "exps");
      if (exps.size() != vars.size()) throw FormatError("exps length differs from vars");
      if (!prev.empty() && !(prev < exps)) throw FormatError("terms must be strictly sorted by exps");
      prev = exps;
      if (!t.contains("coeff") || !t.at("coeff").is_array()) throw FormatError("coeff must be an array");
      std::vector<std::uint64_t> digits;
      for (const auto& d : t.at("coeff")) digits.push_back(parse_decimal(d));
      typename Ring::value_type coeff;
      try {
        coeff = ring->from_digits(digits);
      } catch (const ParamError& e) {
        throw FormatError(e.what());
      }
      Monomial m{};
      for (std::size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] > std::numeric_limits<Exponent>::max()) throw FormatError("exponent too large");
        m[v] = static_cast<Exponent>(exps[v]);
      }
      out.push_back({m, coeff});
    }
    cert.components.push_back({index, MultiPoly<Ring>::from_terms(ring, vars, std::move(out))});
  }
  return cert;
}

}  // namespace detail

template <class Ring>
json to_json(const SolutionCertificate<Ring>& cert) {
  const auto& rp = cert.ring_params();
  json doc;
  doc["schema"] = kSchema;
  doc["family"] = to_string(cert.family());
  doc["ring"] = {{"p", rp.p}, {"s", rp.s}, {"r_num", rp.r_num}, {"r_den", rp.r_den}};
  doc["params"] = detail::params_json(cert.params);
  doc["vars"] = cert.vars;
  json comps = json::array();
  for (const auto& c : cert.components) {
    json jc;
    if (cert.family() == Family::sl2) {
      jc["index"] = c.index;
    } else {
      jc["index"] = c.index.empty() ? 0u : c.index[0];
    }
    const auto poly = c.poly.with_vars(cert.vars);
    std::vector<std::pair<std::vector<std::uint32_t>, json>> rows;
    for (const auto& t : poly.terms()) {
      std::vector<std::uint32_t> exps(t.exps.begin(), t.exps.begin() + static_cast<std::ptrdiff_t>(cert.vars.size()));
      json coeff = json::array();
      for (auto d : cert.ring->digits(t.coeff)) coeff.push_back(std::to_string(d));
      rows.emplace_back(exps, coeff);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    json terms = json::array();
    for (auto& [e, co] : rows) terms.push_back({{"exps", e}, {"coeff", std::move(co)}});
    jc["terms"] = std::move(terms);
    comps.push_back(std::move(jc));
  }
  doc["components"] = std::move(comps);
  return doc;
}

template <class Ring>
std::string dump(const SolutionCertificate<Ring>& cert) {
  return to_json(cert).dump(1) + "\n";
}

inline std::string dump(const AnyCertificate& cert) {
  return std::visit([](const auto& c) { return dump(c); }, cert);
}

/// Parses and validates; every defect is reported as FormatError.
inline AnyCertificate parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("certificate must be a JSON object");
  if (detail::get_field<std::string>(doc, "schema") != kSchema) throw FormatError("unsupported schema");
  const auto family = detail::family_from_string(detail::get_field<std::string>(doc, "family"));
  const auto& jr = doc.contains("ring") ? doc.at("ring") : throw FormatError("missing field \"ring\"");
  if (!doc.contains("params") || !doc.contains("components")) throw FormatError("missing params or components");
  try {
    const auto rp = RingParams::make(detail::get_field<std::uint64_t>(jr, "p"), detail::get_field<std::uint64_t>(jr, "s"),
                                     detail::get_field<std::uint64_t>(jr, "r_num"),
                                     detail::get_field<std::uint64_t>(jr, "r_den"));
    if (rp.r_num != detail::get_field<std::uint64_t>(jr, "r_num") ||
        rp.r_den != detail::get_field<std::uint64_t>(jr, "r_den"))
      throw FormatError("r must be stored in lowest terms");
    auto fp = detail::params_from_json(family, rp, doc.at("params"));
    if (rp.r_den == 1) return detail::read_components<ResidueRing>(doc, std::move(fp), rp);
    return detail::read_components<RamifiedRing>(doc, std::move(fp), rp);
  } catch (const ParamError& e) {
    throw FormatError(std::string("invalid parameters: ") + e.what());
  }
}

}  // namespace pskz::io
