/*
   Copyright 2026 The dmf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include <dmf/dmf.hpp>

namespace dmf::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::uint64_t q = 3;
  std::string pi;
  int prec = 600;
  bool prec_given = false;
  bool json = false;
  bool oracle = false;
  int all_degree = 0;
  int threads = 1;
};

// Output of one prime in a sweep, rendered in both formats.
struct PrimeResult {
  std::string text;
  json data;
  int status = kExitOk;
};

const FqField& field_of(const RunConfig& cfg) {
  const FqField& F = FqField::of_order(cfg.q);
  require_odd_q(F);
  return F;
}

std::vector<PrimeContext> contexts_of(const RunConfig& cfg) {
  const FqField& F = field_of(cfg);
  std::vector<PrimeContext> out;
  if (cfg.all_degree > 0) {
    for (const auto& pi : monic_irreducibles(F, cfg.all_degree)) out.emplace_back(pi);
  } else if (!cfg.pi.empty()) {
    out.emplace_back(parse_poly(F, cfg.pi));
  } else {
    throw DomainError("this command needs --pi or --all-primes-of-degree");
  }
  return out;
}

// Runs fn on every context, on up to cfg.threads workers, and returns the
// results in input order.
std::vector<PrimeResult> sweep(const RunConfig& cfg, const std::vector<PrimeContext>& ctxs,
                               const std::function<PrimeResult(const PrimeContext&)>& fn) {
  std::vector<PrimeResult> results(ctxs.size());
  std::vector<std::exception_ptr> errors(ctxs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < ctxs.size(); i = next++) {
      try {
        results[i] = fn(ctxs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int nthreads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(ctxs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

int emit(const RunConfig& cfg, const std::string& command, const std::vector<PrimeResult>& results, std::ostream& out) {
  int status = kExitOk;
  for (const auto& r : results) status = std::max(status, r.status);
  if (cfg.json) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(r.data);
    out << json{{"schema", kSchemaVersion}, {"command", command}, {"passed", status == kExitOk}, {"results", arr}}.dump(2)
        << "\n";
  } else {
    for (const auto& r : results) out << r.text;
  }
  return status;
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream s;
  s << r.suite << " q=" << r.q << " pi=" << r.pi << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << std::fixed
    << std::setprecision(2) << r.seconds << "s)\n";
  for (const auto& c : r.checks) s << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
  return s.str();
}

int cmd_expand(const RunConfig& cfg, const std::string& target, const std::string& a_text, int d, std::ostream& out) {
  const FqField& F = field_of(cfg);
  const int n = cfg.prec;
  if (n < 2) throw DomainError("--prec must be at least 2");
  USeries s(RatFuncK(F), 0);
  if (target == "g") {
    s = g_series(F, n);
  } else if (target == "h") {
    s = h_series(F, n);
  } else if (target == "E") {
    s = e_series(F, n);
  } else if (target == "g_d") {
    if (d <= 0) {
      if (cfg.pi.empty()) throw DomainError("g_d needs --d or --pi");
      d = PrimeContext(parse_poly(F, cfg.pi)).d();
    }
    s = gk_series(F, d, n);
  } else if (target == "u_a" || target.rfind("u_a:", 0) == 0) {
    const std::string a = target.size() > 4 ? target.substr(4) : a_text;
    if (a.empty()) throw DomainError("u_a needs --a or u_a:<poly>");
    s = u_sub_a(parse_poly(F, a), n);
  } else if (target.rfind("form:", 0) == 0) {
    s = expand(parse_form(F, target.substr(5)), n);
  } else {
    throw DomainError("unknown expansion target '" + target + "'");
  }
  if (cfg.json) {
    out << json{{"schema", kSchemaVersion}, {"command", "expand"}, {"target", target}, {"series", series_to_json(s)}}.dump(2)
        << "\n";
  } else {
    out << format_series(s) << "\n";
  }
  return kExitOk;
}

int cmd_ssp(const RunConfig& cfg, std::ostream& out) {
  const auto ctxs = contexts_of(cfg);
  const bool multi = ctxs.size() > 1;
  auto results = sweep(cfg, ctxs, [&cfg, multi](const PrimeContext& ctx) {
    PrimeResult r;
    const ResiduePoly S = ss_poly(ctx);
    std::ostringstream t;
    if (multi) t << "pi = " << format_poly(ctx.pi()) << "\n";
    t << format_upoly(S) << "\n";
    r.data = {{"pi", format_poly(ctx.pi())}, {"ss_poly", upoly_to_json(S)}, {"degree", S.degree()}};
    if (cfg.oracle) {
      const auto js = ss_bruteforce(ctx);
      const bool match = ss_product(js, ctx) == S;
      json jl = json::array();
      t << "oracle: {";
      for (std::size_t i = 0; i < js.size(); ++i) {
        t << (i ? ", " : "") << format_quad(js[i]);
        jl.push_back(format_quad(js[i]));
      }
      t << "}\nmatch: " << (match ? "yes" : "no") << "\n";
      r.data["oracle"] = jl;
      r.data["match"] = match;
      if (!match) r.status = kExitCheckFailed;
    }
    r.text = t.str();
    return r;
  });
  return emit(cfg, "ssp", results, out);
}

int cmd_companion(const RunConfig& cfg, const std::string& form_text, std::ostream& out) {
  const FqField& F = field_of(cfg);
  const IsobaricForm f = parse_form(F, form_text);
  const CompanionPoly<RatFuncK> cp = companion(f);
  json data = {{"form", form_to_json(f)}, {"mu", cp.mu}, {"gamma", cp.gamma}, {"companion", upoly_to_json(cp.poly)}};
  std::ostringstream t;
  t << "P(f, x) = " << format_upoly(cp.poly) << "\nmu = " << cp.mu << ", gamma = " << cp.gamma << "\n";
  if (!cfg.pi.empty()) {
    const PrimeContext ctx(parse_poly(F, cfg.pi));
    const ResiduePoly r = companion_mod(f, ctx);
    t << "mod pi: " << format_upoly(r) << "\n";
    data["mod_pi"] = upoly_to_json(r);
  }
  if (cfg.json) {
    data["schema"] = kSchemaVersion;
    data["command"] = "companion";
    out << data.dump(2) << "\n";
  } else {
    out << t.str();
  }
  return kExitOk;
}

int cmd_filtration(const RunConfig& cfg, const std::string& form_text, std::ostream& out) {
  const FqField& F = field_of(cfg);
  const IsobaricForm f = parse_form(F, form_text);
  const auto ctxs = contexts_of(cfg);
  const bool multi = ctxs.size() > 1;
  auto results = sweep(cfg, ctxs, [&f, multi](const PrimeContext& ctx) {
    PrimeResult r;
    const std::int64_t w = filtration(f, ctx);
    const std::string ws = w == kMinusInfinity ? "-inf" : std::to_string(w);
    r.text = (multi ? "pi = " + format_poly(ctx.pi()) + ": " : std::string()) + ws + "\n";
    r.data = {{"pi", format_poly(ctx.pi())}, {"weight", f.weight()}, {"filtration", ws}};
    return r;
  });
  return emit(cfg, "filtration", results, out);
}

int cmd_wronskian(const RunConfig& cfg, const std::vector<std::string>& forms, std::ostream& out) {
  const FqField& F = field_of(cfg);
  std::vector<IsobaricForm> fs;
  if (forms.empty()) {
    fs = special_basis(F);
  } else {
    for (const auto& s : forms) fs.push_back(parse_form(F, s));
  }
  const IsobaricForm w = wronskian_serre(fs);
  json data = {{"wronskian", form_to_json(w)}};
  std::ostringstream t;
  t << "W = " << format_form(w) << "\n";
  int status = kExitOk;
  if (cfg.prec_given) {
    std::vector<USeries> ss;
    for (const auto& f : fs) ss.push_back(expand(f, cfg.prec));
    const USeries ws = wronskian_series(ss);
    const bool equal = agree(ws, expand(w, std::min(ws.prec(), cfg.prec)));
    const int ord = ws.order();
    t << "series identity to O(u^" << std::min(ws.prec(), cfg.prec) << "): " << (equal ? "holds" : "FAILS") << "\n";
    t << "u-order: " << (ord == kInfinity ? std::string("inf") : std::to_string(ord)) << "\n";
    data["series_identity"] = equal;
    data["u_order"] = ord == kInfinity ? json(nullptr) : json(ord);
    if (!equal) status = kExitCheckFailed;
  }
  if (cfg.json) {
    data["schema"] = kSchemaVersion;
    data["command"] = "wronskian";
    out << data.dump(2) << "\n";
  } else {
    out << t.str();
  }
  return status;
}

int cmd_verify(const RunConfig& cfg, const std::string& theorem, std::ostream& out) {
  static const std::vector<std::string> kSuites = {"computation", "ahlgrenono", "dww", "companion-products"};
  std::vector<std::string> suites;
  if (theorem == "all") {
    suites = kSuites;
  } else if (std::find(kSuites.begin(), kSuites.end(), theorem) != kSuites.end()) {
    suites = {theorem};
  } else {
    throw DomainError("unknown theorem '" + theorem + "'");
  }
  const auto ctxs = contexts_of(cfg);
  const bool skip_non_cubic = theorem == "all";
  auto results = sweep(cfg, ctxs, [&cfg, &suites, skip_non_cubic](const PrimeContext& ctx) {
    PrimeResult r;
    json reports = json::array();
    for (const auto& s : suites) {
      if (skip_non_cubic && ctx.d() != 3 && (s == "computation" || s == "ahlgrenono")) {
        r.text += s + " q=" + std::to_string(ctx.q()) + " pi=" + format_poly(ctx.pi()) + ": skipped (needs deg pi = 3)\n";
        continue;
      }
      VerifyReport rep;
      if (s == "computation") rep = verify_theorem_computation(ctx, cfg.prec_given ? cfg.prec : 0);
      if (s == "ahlgrenono") rep = verify_theorem_ahlgrenono(ctx);
      if (s == "dww") rep = verify_dww(ctx);
      if (s == "companion-products") rep = verify_companion_products(ctx);
      r.text += report_text(rep);
      reports.push_back(report_to_json(rep));
      if (!rep.passed()) r.status = kExitCheckFailed;
    }
    r.data = {{"pi", format_poly(ctx.pi())}, {"reports", reports}};
    return r;
  });
  return emit(cfg, "verify", results, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Drinfeld modular forms workbench: expansions, supersingular polynomials, Wronskians"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--q", cfg.q, "Field size q (odd prime power)")->capture_default_str();
  app.add_option("--pi", cfg.pi, "Monic irreducible pi, e.g. T^3+2T+1");
  auto* prec_opt = app.add_option("--prec", cfg.prec, "Series precision N")->capture_default_str();
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_flag("--oracle", cfg.oracle, "Also run the brute-force supersingular oracle (ssp)");
  app.add_option("--all-primes-of-degree", cfg.all_degree, "Sweep every monic irreducible of this degree");
  app.add_option("--threads", cfg.threads, "Worker threads for prime sweeps")->capture_default_str();

  std::string target, a_text, theorem = "all", form_text;
  int d = 0;
  std::vector<std::string> wr_forms;
  auto* expand_cmd = app.add_subcommand("expand", "Print a u-expansion");
  expand_cmd->add_option("target", target, "g, h, E, g_d, u_a[:<poly>] or form:<text>")->required();
  expand_cmd->add_option("--a", a_text, "Monic a for u_a");
  expand_cmd->add_option("--d", d, "Degree for g_d");
  auto* ssp_cmd = app.add_subcommand("ssp", "Supersingular polynomial modulo pi");
  auto* comp_cmd = app.add_subcommand("companion", "Companion polynomial of a form");
  comp_cmd->add_option("form", form_text, "Isobaric polynomial in g and h")->required();
  auto* filt_cmd = app.add_subcommand("filtration", "Filtration of a form modulo pi");
  filt_cmd->add_option("form", form_text, "Isobaric polynomial in g and h")->required();
  auto* wr_cmd = app.add_subcommand("wronskian", "Symbolic Wronskian (default: the special basis)");
  wr_cmd->add_option("forms", wr_forms, "Forms of equal weight and type");
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--theorem", theorem, "computation|ahlgrenono|dww|companion-products|all")->capture_default_str();

  std::vector<std::string> argv_store{"dmf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  cfg.prec_given = prec_opt->count() > 0;

  try {
    if (*expand_cmd) return cmd_expand(cfg, target, a_text, d, out);
    if (*ssp_cmd) return cmd_ssp(cfg, out);
    if (*comp_cmd) return cmd_companion(cfg, form_text, out);
    if (*filt_cmd) return cmd_filtration(cfg, form_text, out);
    if (*wr_cmd) return cmd_wronskian(cfg, wr_forms, out);
    if (*verify_cmd) return cmd_verify(cfg, theorem, out);
  } catch (const PrecisionError& e) {
    err << "precision: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace dmf::cli
