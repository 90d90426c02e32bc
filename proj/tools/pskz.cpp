// pskz command-line front end.
//
//   pskz construct hyper|sl2|qkz [ring and family flags] [--out FILE]
//   pskz verify FILE [--properties] [--json]
//   pskz sweep hyper|sl2|qkz [range flags] [--out-dir DIR]
//   pskz exp-table --p P --s S [--r R]
//
// Exit codes: 0 verified, 1 nonzero residual or failed property, 2 usage or
// format error.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "pskz/pskz.hpp"

namespace fs = std::filesystem;
using namespace pskz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitResidual = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UsageError(what + ": expected a non-negative integer, got \"" + s + "\"");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw UsageError(what + ": integer out of range");
  }
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  if (!s.empty() && s[0] == '-') return -static_cast<std::int64_t>(parse_uint(s.substr(1), what));
  return static_cast<std::int64_t>(parse_uint(s, what));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::uint64_t> parse_list(const std::string& s, const std::string& what) {
  std::vector<std::uint64_t> out;
  if (s.empty()) throw UsageError(what + ": empty list");
  for (const auto& item : split(s, ',')) out.push_back(parse_uint(item, what));
  return out;
}

template <class T>
std::vector<T> narrow(const std::vector<std::uint64_t>& v, const std::string& what) {
  std::vector<T> out;
  for (auto x : v) {
    if (x > std::numeric_limits<T>::max()) throw UsageError(what + ": value too large");
    out.push_back(static_cast<T>(x));
  }
  return out;
}

/// "a" or "a/b".
std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& s, const std::string& what) {
  const auto parts = split(s, '/');
  if (parts.size() == 1) return {parse_int(parts[0], what), 1};
  if (parts.size() == 2) return {parse_int(parts[0], what), parse_int(parts[1], what)};
  throw UsageError(what + ": expected a or a/b, got \"" + s + "\"");
}

RingParams make_ring(std::uint64_t p, std::uint64_t s, const std::string& r) {
  auto [num, den] = parse_fraction(r, "--r");
  if (num <= 0 || den <= 0) throw ParamError("r must be a positive rational");
  const auto g = std::gcd(num, den);
  return RingParams::make(p, s, static_cast<std::uint64_t>(num / g), static_cast<std::uint64_t>(den / g));
}

/// "M=2,2;Mij=4;M0=1", any subset of the three keys.
Sl2ExponentOverride parse_override(const std::string& s) {
  Sl2ExponentOverride over;
  if (s.empty()) return over;
  for (const auto& item : split(s, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--M-override: expected key=value, got \"" + item + "\"");
    const auto key = item.substr(0, eq);
    const auto val = item.substr(eq + 1);
    if (key == "M") {
      over.M = parse_list(val, "--M-override M");
    } else if (key == "Mij") {
      over.Mij = parse_list(val, "--M-override Mij");
    } else if (key == "M0") {
      over.M0 = parse_uint(val, "--M-override M0");
    } else {
      throw UsageError("--M-override: unknown key \"" + key + "\"");
    }
  }
  return over;
}

void write_atomic(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." +
         std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::FormatError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// ---------------------------------------------------------------------------
// Construction

struct FamilyFlags {
  std::uint64_t p = 0, s = 1;
  std::string r = "1";
  // hyper
  std::uint32_t g = 1;
  std::string ell = "1";
  // sl2
  std::string kappa = "2";
  std::string m = "1,1";
  std::uint32_t k = 1;
  std::string override_spec;
};

FamilyParams make_params(Family family, const FamilyFlags& f) {
  const auto rp = make_ring(f.p, f.s, f.r);
  switch (family) {
    case Family::hyper: {
      const auto ell = parse_list(f.ell, "--ell");
      if (ell.size() != 1) throw UsageError("--ell: hyper takes a single value");
      return HyperParams::make(rp, f.g, narrow<std::uint32_t>(ell, "--ell")[0]);
    }
    case Family::sl2: {
      if (rp.r_num != 1 || rp.r_den != 1) throw UsageError("--r: the sl2 family runs at r = 1");
      const auto [kn, kd] = parse_fraction(f.kappa, "--kappa");
      auto ell = narrow<std::uint32_t>(parse_list(f.ell, "--ell"), "--ell");
      if (ell.size() == 1 && f.k > 1) ell.assign(f.k, ell[0]);
      return Sl2Params::make(rp, kn, kd, narrow<std::uint32_t>(parse_list(f.m, "--m"), "--m"), f.k, ell,
                             parse_override(f.override_spec));
    }
    case Family::qkz:
      return QkzParams::make(rp);
  }
  throw UsageError("unknown family");
}

template <class Ring>
SolutionCertificate<Ring> construct_with(const FamilyParams& fp) {
  auto ring = std::make_shared<const Ring>(std::visit([](const auto& p) { return p.ring; }, fp));
  if (const auto* h = std::get_if<HyperParams>(&fp)) return hyper::construct_solution(ring, *h);
  if (const auto* s = std::get_if<Sl2Params>(&fp)) {
    if constexpr (std::is_same_v<Ring, ResidueRing>) return sl2::construct_solution_sl2(ring, *s);
    throw UsageError("the sl2 family runs at r = 1");
  }
  return qkz::construct_qkz_solution(ring, std::get<QkzParams>(fp));
}

io::AnyCertificate construct(const FamilyParams& fp) {
  const auto& rp = std::visit([](const auto& p) -> const RingParams& { return p.ring; }, fp);
  if (rp.r_den == 1) return construct_with<ResidueRing>(fp);
  return construct_with<RamifiedRing>(fp);
}

std::string summary(const io::AnyCertificate& any) {
  return std::visit(
      [](const auto& cert) {
        std::ostringstream os;
        os << "family=" << to_string(cert.family()) << " ring=" << to_string(cert.ring_params())
           << " components=" << cert.components.size();
        std::size_t terms = 0;
        for (const auto& c : cert.components) terms += c.poly.size();
        os << " terms=" << terms << " max_deg:";
        for (const auto& v : cert.vars) {
          int d = -1;
          for (const auto& c : cert.components) d = std::max(d, c.poly.with_vars(cert.vars).degree(v));
          os << " " << v << "=" << d;
        }
        if (cert.is_zero()) os << " (zero certificate)";
        return os.str();
      },
      any);
}

// ---------------------------------------------------------------------------
// Verification

struct VerifyOutcome {
  std::vector<ResidualReport> reports;
  std::vector<std::pair<std::string, std::string>> properties;  // name, verdict
  bool ok = true;
};

template <class Ring>
VerifyOutcome verify_cert(const SolutionCertificate<Ring>& cert, bool properties) {
  VerifyOutcome out;
  switch (cert.family()) {
    case Family::hyper: {
      out.reports.push_back(hyper::verify_kz(cert));
      out.reports.push_back(hyper::verify_dynamical(cert));
      if (properties) {
        const auto& hp = cert.template as<HyperParams>();
        const bool sum_zero = hyper::lambda_zero_sum(cert).is_zero();
        out.properties.emplace_back("sum identity", sum_zero ? "zero" : "NONZERO");
        out.ok = out.ok && sum_zero;
        const auto van = hyper::vanishing_check(hp);
        if (!van.applicable) {
          out.properties.emplace_back("vanishing for ell > g", "not applicable");
        } else {
          out.properties.emplace_back("vanishing for ell > g", van.all_zero ? "zero" : "NONZERO");
          out.ok = out.ok && van.all_zero;
        }
        if (hp.ring.modulus() <= 2ull * hp.g + 1) {
          out.properties.emplace_back("independence", "not applicable (p^s <= 2g+1)");
        } else {
          const auto ind = hyper::independence_check(hp);
          using V = hyper::IndependenceResult::Verdict;
          std::string verdict;
          if (ind.verdict == V::independent) {
            verdict = "independent, columns";
            for (auto c : ind.columns) verdict += " " + std::to_string(c);
            if (!ind.point.empty()) {
              verdict += ", minor = " + std::to_string(ind.minor_value) + " at z =";
              for (auto v : ind.point) verdict += " " + std::to_string(v);
            }
          } else if (ind.verdict == V::dependent) {
            verdict = "DEPENDENT";
            out.ok = false;
          } else {
            verdict = "UNDETERMINED";
            out.ok = false;
          }
          out.properties.emplace_back("independence", verdict);
        }
      }
      break;
    }
    case Family::sl2:
      if constexpr (std::is_same_v<Ring, ResidueRing>) {
        out.reports.push_back(sl2::verify_sl2(cert));
      } else {
        throw io::FormatError("the sl2 family runs at r = 1");
      }
      break;
    case Family::qkz:
      out.reports.push_back(qkz::verify_qkz(cert));
      if (properties) {
        const auto rel = qkz::functional_relations(cert.ring, cert.template as<QkzParams>());
        out.properties.emplace_back("functional relations", rel.all_zero() ? "exact" : "FAILED");
        out.ok = out.ok && rel.all_zero();
      }
      break;
  }
  for (const auto& r : out.reports) out.ok = out.ok && r.all_zero();
  return out;
}

VerifyOutcome verify_any(const io::AnyCertificate& any, bool properties) {
  return std::visit([&](const auto& c) { return verify_cert(c, properties); }, any);
}

void print_outcome(const VerifyOutcome& v, bool as_json) {
  if (as_json) {
    nlohmann::ordered_json doc;
    doc["verified"] = v.ok;
    auto reports = nlohmann::ordered_json::array();
    for (const auto& r : v.reports) {
      nlohmann::ordered_json jr;
      jr["check"] = r.check;
      jr["all_zero"] = r.all_zero();
      auto entries = nlohmann::ordered_json::array();
      for (const auto& e : r.entries) {
        nlohmann::ordered_json je;
        je["equation"] = e.equation;
        je["zero"] = e.zero;
        je["terms"] = e.terms;
        if (!e.zero) {
          je["lowest_monomial"] = e.lowest_monomial;
          je["lowest_coeff"] = e.lowest_coeff;
        }
        entries.push_back(std::move(je));
      }
      jr["entries"] = std::move(entries);
      reports.push_back(std::move(jr));
    }
    doc["reports"] = std::move(reports);
    auto props = nlohmann::ordered_json::object();
    for (const auto& [name, verdict] : v.properties) props[name] = verdict;
    doc["properties"] = std::move(props);
    std::cout << doc.dump(1) << "\n";
    return;
  }
  for (const auto& r : v.reports) {
    std::cout << r.check << ": " << (r.entries.size() - r.failures()) << "/" << r.entries.size()
              << " residuals zero\n";
    for (const auto& e : r.entries)
      if (!e.zero)
        std::cout << "  nonzero " << e.equation << ": " << e.terms << " terms, lowest " << e.lowest_coeff << "*"
                  << e.lowest_monomial << "\n";
  }
  for (const auto& [name, verdict] : v.properties) std::cout << name << ": " << verdict << "\n";
  std::cout << (v.ok ? "VERIFIED" : "FAILED") << "\n";
}

// ---------------------------------------------------------------------------
// Sweep

struct SweepRow {
  std::string label;
  std::string file;
  std::string status;
  bool ok = true;
};

unsigned thread_count(std::size_t jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PSKZ_THREADS")) {
    const std::string s(env);
    const auto cap = parse_uint(s, "PSKZ_THREADS");
    if (cap == 0) throw UsageError("PSKZ_THREADS must be positive");
    n = static_cast<unsigned>(std::min<std::uint64_t>(n, cap));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

struct SweepJob {
  std::string label;
  std::string file;
  FamilyParams params;
  bool zero_expected = false;
};

int run_sweep(const std::vector<SweepJob>& jobs, const std::string& out_dir) {
  if (jobs.empty()) throw UsageError("sweep: empty parameter range");
  std::vector<SweepRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      const auto& job = jobs[i];
      SweepRow row{job.label, job.file, {}, true};
      try {
        const auto cert = construct(job.params);
        const auto outcome = verify_any(cert, false);
        const bool zero = std::visit([](const auto& c) { return c.is_zero(); }, cert);
        row.ok = outcome.ok && (!job.zero_expected || zero);
        if (!outcome.ok) {
          row.status = "FAIL (nonzero residual)";
        } else if (job.zero_expected) {
          row.status = zero ? "zero certificate (expected)" : "FAIL (nonzero certificate, zero expected)";
        } else {
          row.status = zero ? "pass (zero certificate)" : "pass";
        }
        if (!out_dir.empty()) write_atomic(fs::path(out_dir) / job.file, io::dump(cert));
      } catch (const std::exception& e) {
        row.ok = false;
        row.status = std::string("ERROR ") + e.what();
      }
      rows[i] = row;
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = thread_count(jobs.size());
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool all = true;
  nlohmann::ordered_json index = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    std::cout << r.label << "  " << r.status << "\n";
    all = all && r.ok;
    index.push_back({{"params", r.label}, {"file", r.file}, {"status", r.status}, {"ok", r.ok}});
  }
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << " (" << rows.size() << " cases)\n";
  if (!out_dir.empty()) write_atomic(fs::path(out_dir) / "index.json", index.dump(1) + "\n");
  return all ? kExitOk : kExitResidual;
}

std::string file_stem(const std::string& label) {
  std::string s;
  for (char c : label) s += (c == ' ') ? '_' : (c == '/' ? '-' : (c == ',' ? '.' : c));
  return s + ".json";
}

std::vector<SweepJob> hyper_jobs(const std::vector<std::uint64_t>& ps, const std::vector<std::uint64_t>& ss,
                                 const std::vector<std::uint64_t>& gs, const std::vector<std::string>& rs,
                                 const std::string& ell_spec) {
  std::vector<SweepJob> jobs;
  for (const auto& r : rs)
    for (auto p : ps)
      for (auto s : ss)
        for (auto g : gs) {
          const auto rp = make_ring(p, s, r);
          std::vector<std::uint64_t> ells;
          if (ell_spec.empty()) {
            for (std::uint64_t l = 1; l <= g; ++l) ells.push_back(l);
          } else {
            ells = parse_list(ell_spec, "--ell");
          }
          for (auto ell : ells) {
            const auto hp = HyperParams::make(rp, static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(ell));
            const bool zero_expected = ell > g && hyper::vanishing_applies(rp.with_r(1, 1), hp.g) &&
                                       rp.r_num == 1 && rp.r_den == 1;
            const std::string label = "hyper p=" + std::to_string(p) + " s=" + std::to_string(s) + " r=" +
                                      std::to_string(rp.r_num) + "/" + std::to_string(rp.r_den) +
                                      " g=" + std::to_string(g) + " ell=" + std::to_string(ell);
            jobs.push_back({label, file_stem(label), hp, zero_expected});
          }
        }
  return jobs;
}

// ---------------------------------------------------------------------------

int exp_table(std::uint64_t p, std::uint64_t s, const std::string& r) {
  const auto rp = make_ring(p, s, r);
  const auto d = degree_bound(rp);
  std::cout << "d = " << d << "\n";
  if (rp.r_den == 1) {
    const ResidueRing ring(rp);
    for (const auto& c : exp_coefficients(ring)) std::cout << coeff_to_string(ring, c) << "\n";
  } else {
    const RamifiedRing ring(rp);
    for (const auto& c : exp_coefficients(ring)) std::cout << coeff_to_string(ring, c) << "\n";
  }
  return kExitOk;
}

void add_ring_flags(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--p", f.p, "odd prime p")->required();
  cmd->add_option("--s", f.s, "precision exponent s");
  cmd->add_option("--r", f.r, "rescaling exponent r = a or a/b");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pskz: polynomial solutions mod p^s of KZ, dynamical and qKZ equations"};
  app.require_subcommand(1);

  // construct
  FamilyFlags cf;
  std::string out_file;
  auto* construct_cmd = app.add_subcommand("construct", "construct a solution certificate");
  construct_cmd->require_subcommand(1);
  std::map<CLI::App*, Family> family_of;
  for (auto family : {Family::hyper, Family::sl2, Family::qkz}) {
    auto* sub = construct_cmd->add_subcommand(to_string(family), "construct a " + to_string(family) + " certificate");
    add_ring_flags(sub, cf);
    if (family == Family::hyper) {
      sub->add_option("--g", cf.g, "genus g");
      sub->add_option("--ell", cf.ell, "ell");
    } else if (family == Family::sl2) {
      sub->add_option("--kappa", cf.kappa, "kappa = a/b");
      sub->add_option("--m", cf.m, "highest weights m_1,...,m_n");
      sub->add_option("--k", cf.k, "number of t variables");
      sub->add_option("--ell", cf.ell, "ell_1,...,ell_k");
      sub->add_option("--M-override", cf.override_spec, "exponent representatives, e.g. \"M=2,2;Mij=4;M0=1\"");
    }
    sub->add_option("--out", out_file, "output file (stdout when omitted)");
    family_of[sub] = family;
  }

  // verify
  std::string verify_file;
  bool verify_properties = false, verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "verify a certificate file");
  verify_cmd->add_option("file", verify_file, "certificate JSON")->required();
  verify_cmd->add_flag("--properties", verify_properties, "also check the family properties");
  verify_cmd->add_flag("--json", verify_json, "machine-readable report");

  // sweep
  std::string sw_p = "3,5,7", sw_s = "1,2", sw_g = "1,2", sw_r = "1", sw_ell, sw_kappa = "2,3", sw_m = "1,1",
              sw_k = "1,2", sw_dir;
  auto* sweep_cmd = app.add_subcommand("sweep", "construct and verify a parameter matrix");
  sweep_cmd->require_subcommand(1);
  std::map<CLI::App*, Family> sweep_family;
  for (auto family : {Family::hyper, Family::sl2, Family::qkz}) {
    auto* sub = sweep_cmd->add_subcommand(to_string(family), "sweep the " + to_string(family) + " family");
    sub->add_option("--p", sw_p, "primes, comma separated");
    sub->add_option("--s", sw_s, "precisions, comma separated");
    sub->add_option("--r", sw_r, "exponents r, comma separated");
    if (family == Family::hyper) {
      sub->add_option("--g", sw_g, "genera, comma separated");
      sub->add_option("--ell", sw_ell, "ell values (default 1..g)");
    } else if (family == Family::sl2) {
      sub->add_option("--kappa", sw_kappa, "kappas, comma separated");
      sub->add_option("--m", sw_m, "highest weights of one module");
      sub->add_option("--k", sw_k, "k values, comma separated");
    }
    sub->add_option("--out-dir", sw_dir, "write certificates and index.json here");
    sweep_family[sub] = family;
  }

  // exp-table
  FamilyFlags ef;
  auto* exp_cmd = app.add_subcommand("exp-table", "print d(r,s) and p^{kr}/k! mod p^s");
  add_ring_flags(exp_cmd, ef);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (construct_cmd->parsed()) {
      for (auto& [sub, family] : family_of) {
        if (!sub->parsed()) continue;
        const auto cert = construct(make_params(family, cf));
        const auto text = io::dump(cert);
        if (out_file.empty()) {
          std::cout << text;
          std::cerr << summary(cert) << "\n";
        } else {
          write_atomic(out_file, text);
          std::cout << summary(cert) << "\n";
        }
      }
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const auto cert = io::parse(read_file(verify_file));
      const auto outcome = verify_any(cert, verify_properties);
      print_outcome(outcome, verify_json);
      return outcome.ok ? kExitOk : kExitResidual;
    }
    if (sweep_cmd->parsed()) {
      for (auto& [sub, family] : sweep_family) {
        if (!sub->parsed()) continue;
        const auto ps = parse_list(sw_p, "--p");
        const auto ss = parse_list(sw_s, "--s");
        const auto rs = split(sw_r, ',');
        if (sw_r.empty()) throw UsageError("--r: empty list");
        std::vector<SweepJob> jobs;
        if (family == Family::hyper) {
          jobs = hyper_jobs(ps, ss, parse_list(sw_g, "--g"), rs, sw_ell);
        } else if (family == Family::sl2) {
          const auto ks = parse_list(sw_k, "--k");
          const auto kappas = split(sw_kappa, ',');
          if (sw_kappa.empty()) throw UsageError("--kappa: empty list");
          const auto m = narrow<std::uint32_t>(parse_list(sw_m, "--m"), "--m");
          for (const auto& kappa : kappas)
            for (auto p : ps)
              for (auto s : ss)
                for (auto k : ks) {
                  const auto rp = make_ring(p, s, "1");
                  const auto [kn, kd] = parse_fraction(kappa, "--kappa");
                  const auto sp = Sl2Params::make(rp, kn, kd, m, static_cast<std::uint32_t>(k),
                                                  std::vector<std::uint32_t>(k, 1));
                  const std::string label = "sl2 p=" + std::to_string(p) + " s=" + std::to_string(s) +
                                            " kappa=" + kappa + " m=" + sw_m + " k=" + std::to_string(k);
                  jobs.push_back({label, file_stem(label), sp, false});
                }
        } else {
          for (const auto& r : rs)
            for (auto p : ps)
              for (auto s : ss) {
                const auto rp = make_ring(p, s, r);
                const std::string label = "qkz p=" + std::to_string(p) + " s=" + std::to_string(s) + " r=" +
                                          std::to_string(rp.r_num) + "/" + std::to_string(rp.r_den);
                jobs.push_back({label, file_stem(label), QkzParams::make(rp), false});
              }
        }
        return run_sweep(jobs, sw_dir);
      }
    }
    if (exp_cmd->parsed()) return exp_table(ef.p, ef.s, ef.r);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotAUnit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
