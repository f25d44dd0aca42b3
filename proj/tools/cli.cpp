#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "combfam/census.hpp"
#include "combfam/constructions.hpp"
#include "combfam/descriptor.hpp"
#include "combfam/error.hpp"
#include "combfam/iso_search.hpp"
#include "combfam/norm.hpp"
#include "combfam/spreading.hpp"
#include "combfam/uniqueness.hpp"

namespace combfam::cli {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExplicitFamily load_family(const std::string& path) {
  try {
    return parse_family(slurp(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

SparseVector load_vector(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return parse_vector(slurp(arg));
  // Inline dense form: `3,-4,1` or `3 -4 1`.
  std::string text = arg;
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream in(text);
  std::vector<Rational> values;
  for (std::string tok; in >> tok;) values.push_back(parse_rational(tok));
  return SparseVector::dense(values);
}

json members_json(const ExplicitFamily& f) {
  json arr = json::array();
  for (const FinSet& s : f.members()) arr.push_back(std::vector<Index>(s.begin(), s.end()));
  return arr;
}

json family_json(const ExplicitFamily& f) {
  return {{"base", f.base()}, {"window", f.window()}, {"members", members_json(f)}};
}

struct Options {
  bool machine = false;
  std::string descriptor, file, file2, vector, point, budget = "w*2", source;
  Index window = 0, members = 0, horizon = 0, spreading = 0;
  std::size_t n = 0, cap = kDefaultAutomorphismCap;
  bool hereditary = false, singletons = false, relax = false;
  unsigned workers = 1;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compact hereditary families of finite sets"};
  app.name("combfam");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--machine", o.machine, "JSON output");

  auto* gen = app.add_subcommand("gen", "Emit the truncation of a descriptor");
  gen->add_option("descriptor", o.descriptor)->required();
  gen->add_option("--window", o.window)->required();

  auto* check = app.add_subcommand("check", "Check family properties");
  check->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  check->add_flag("--hereditary", o.hereditary);
  auto* spread_opt = check->add_option("--spreading", o.spreading, "Headroom M");
  check->add_flag("--singletons", o.singletons);

  auto* maximal = app.add_subcommand("maximal", "Maximal members");
  maximal->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  auto* closure = app.add_subcommand("closure", "Downward closure");
  closure->add_option("file", o.file)->required()->check(CLI::ExistingFile);

  auto* norm_cmd = app.add_subcommand("norm", "Norm of a vector");
  norm_cmd->add_option("family", o.file, "Family file or descriptor")->required();
  norm_cmd->add_option("vector", o.vector, "Vector file or inline values")->required();

  auto* extremes = app.add_subcommand("extremes", "Extreme points of the dual ball");
  extremes->add_option("file", o.file)->required()->check(CLI::ExistingFile);

  auto* rank = app.add_subcommand("rank", "Cantor-Bendixson rank");
  rank->add_option("descriptor", o.descriptor)->required();
  auto* point_opt = rank->add_option("--point", o.point, "Point set; family rank when omitted");
  rank->add_option("--budget", o.budget, "Ordinal budget (default w*2)");

  auto* iso = app.add_subcommand("iso", "Find a permutation mapping F onto G");
  iso->add_option("f", o.file)->required()->check(CLI::ExistingFile);
  iso->add_option("g", o.file2)->required()->check(CLI::ExistingFile);

  auto* aut = app.add_subcommand("auto", "Automorphisms");
  aut->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  aut->add_option("--source", o.source, "Lazy source descriptor; adds singleton ranks to signatures");
  aut->add_option("--cap", o.cap, "Overflow guard");

  auto* census = app.add_subcommand("census", "Uniqueness census");
  census->add_option("--members", o.members)->required();
  census->add_option("--window", o.window)->required();
  census->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
  census->add_flag("--relax-singletons", o.relax);

  auto* strata = app.add_subcommand("strata", "Strata F_{n,k}");
  strata->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  strata->add_option("--n", o.n)->required();
  auto* strata_h = strata->add_option("--horizon", o.horizon);

  auto* claim = app.add_subcommand("claim-scan", "Check the I-set claim on every spread pair");
  claim->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  auto* claim_h = claim->add_option("--horizon", o.horizon);

  auto* recon = app.add_subcommand("reconstruct", "Rebuild level n+1 from level-n strata");
  recon->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  recon->add_option("--n", o.n)->required();
  auto* recon_h = recon->add_option("--horizon", o.horizon);

  auto* reach = app.add_subcommand("reach", "Look for a spreading hereditary partner");
  reach->add_option("file", o.file)->required()->check(CLI::ExistingFile);
  reach->add_option("--members", o.members)->required();
  reach->add_option("--window", o.window)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  auto horizon_of = [&](CLI::Option* opt) -> std::optional<Index> {
    return opt->count() ? std::optional<Index>(o.horizon) : std::nullopt;
  };

  try {
    if (gen->parsed()) {
      const ExplicitFamily f = truncate(parse_descriptor(o.descriptor), o.window);
      if (o.machine)
        out << family_json(f).dump() << "\n";
      else
        out << format_family(f);
      return kOk;
    }
    if (check->parsed()) {
      const ExplicitFamily f = load_family(o.file);
      const bool all = !o.hereditary && !spread_opt->count() && !o.singletons;
      bool ok = true;
      json report = json::object();
      if (all || o.hereditary) {
        const bool h = is_hereditary(f);
        ok = ok && h;
        report["hereditary"] = h;
        if (!o.machine) out << "hereditary: " << (h ? "yes" : "no") << "\n";
      }
      if (spread_opt->count()) {
        const auto v = spreading_violation(f, o.spreading);
        ok = ok && !v;
        report["spreading"] = !v;
        if (v) report["spreading_witness"] = {to_string(v->first), to_string(v->second)};
        if (!o.machine) {
          out << "spreading: " << (v ? "no" : "yes");
          if (v) out << " (" << to_string(v->first) << " spreads to missing " << to_string(v->second) << ")";
          out << "\n";
        }
      }
      if (all || o.singletons) {
        const bool s = has_all_singletons(f, f.window());
        ok = ok && s;
        report["singletons"] = s;
        if (!o.machine) out << "singletons: " << (s ? "yes" : "no") << "\n";
      }
      if (o.machine) out << report.dump() << "\n";
      return ok ? kOk : kViolation;
    }
    if (maximal->parsed() || closure->parsed()) {
      const ExplicitFamily f = load_family(o.file);
      const ExplicitFamily g = maximal->parsed() ? maximal_elements(f) : downward_closure(f);
      if (o.machine)
        out << family_json(g).dump() << "\n";
      else
        out << format_family(g);
      return kOk;
    }
    if (norm_cmd->parsed()) {
      const SparseVector x = load_vector(o.vector);
      const Rational v = std::filesystem::is_regular_file(o.file) ? norm(load_family(o.file), x)
                                                                  : norm(parse_descriptor(o.file), x);
      if (o.machine)
        out << json{{"norm", to_string(v)}}.dump() << "\n";
      else
        out << to_string(v) << "\n";
      return kOk;
    }
    if (extremes->parsed()) {
      const std::vector<SignedFunctional> ext = extreme_points(load_family(o.file));
      if (o.machine) {
        json arr = json::array();
        for (const auto& e : ext) arr.push_back(to_string(e));
        out << json{{"count", ext.size()}, {"extreme_points", arr}}.dump() << "\n";
      } else {
        out << "extreme points: " << ext.size() << "\n";
        for (const auto& e : ext) out << to_string(e) << "\n";
      }
      return kOk;
    }
    if (rank->parsed()) {
      const LazyFamily l = parse_descriptor(o.descriptor);
      const OrdinalW2 budget = parse_ordinal(o.budget);
      const RankResult r = point_opt->count() ? cb_rank_point(l, parse_finset(o.point), budget) : family_rank(l, budget);
      if (o.machine) {
        json w = json::array();
        for (const auto& [s, v] : r.witnesses) w.push_back({to_string(s), to_string(v)});
        out << json{{"rank", to_string(r.value)}, {"at_least", r.at_least}, {"stages_checked", r.stages_checked},
                    {"witnesses", w}}
                   .dump()
            << "\n";
      } else {
        out << to_string(r) << "\n";
      }
      return kOk;
    }
    if (iso->parsed()) {
      const ExplicitFamily f = load_family(o.file), g = load_family(o.file2);
      const auto pi = find_pi_homeomorphism(f, g);
      if (o.machine)
        out << json{{"found", pi.has_value()}, {"permutation", pi ? to_string(*pi) : "none"}}.dump() << "\n";
      else
        out << (pi ? to_string(*pi) : "none") << "\n";
      return kOk;
    }
    if (aut->parsed()) {
      const ExplicitFamily f = load_family(o.file);
      const AutomorphismReport r =
          o.source.empty() ? automorphisms(f, o.cap) : automorphisms(f, parse_descriptor(o.source), o.cap);
      if (o.machine) {
        json arr = json::array();
        for (const auto& p : r.support) arr.push_back(to_string(p));
        out << json{{"support", arr}, {"free_points", r.free_points}, {"total", r.total.get_str()}}.dump() << "\n";
      } else {
        out << "support automorphisms: " << r.support.size() << "\n";
        out << "free points: " << r.free_points << "\n";
        out << "total: " << r.total.get_str() << "\n";
        for (const auto& p : r.support) out << to_string(p) << "\n";
      }
      return kOk;
    }
    if (census->parsed()) {
      CensusOptions opt;
      opt.workers = o.workers;
      opt.enumeration.require_singletons = !o.relax;
      const CensusReport r = uniqueness_census(o.members, o.window, opt);
      out << (o.machine ? format_census_machine(r) : format_census(r));
      return r.counterexamples.empty() ? kOk : kViolation;
    }
    if (strata->parsed()) {
      const ExplicitFamily f = load_family(o.file);
      const std::optional<Index> h = horizon_of(strata_h);
      const Index top = h.value_or(f.window()) - f.base();
      json arr = json::array();
      for (std::size_t k = 0; k <= top; ++k) {
        const ExplicitFamily st = stratum(f, o.n, k, h);
        if (o.machine) {
          arr.push_back({{"k", k}, {"members", members_json(st)}});
        } else {
          out << "k " << k << ":";
          for (const FinSet& s : st.members()) out << " " << to_string(s);
          out << "\n";
        }
      }
      if (o.machine) out << json{{"n", o.n}, {"strata", arr}}.dump() << "\n";
      return kOk;
    }
    if (claim->parsed()) {
      const ClaimScan scan = claim_scan(load_family(o.file), horizon_of(claim_h));
      if (o.machine) {
        json arr = json::array();
        for (const auto& v : scan.violations)
          arr.push_back({{"s", to_string(v.s)}, {"t", to_string(v.t)}, {"I_s", v.result.is}, {"I_t", v.result.it}});
        out << json{{"pairs", scan.pairs}, {"violations", arr}}.dump() << "\n";
      } else {
        out << "pairs: " << scan.pairs << ", violations: " << scan.violations.size() << "\n";
        for (const auto& v : scan.violations)
          out << "violation " << to_string(v.s) << " -> " << to_string(v.t) << " |I_s|=" << v.result.is
              << " |I_t|=" << v.result.it << "\n";
      }
      return scan.violations.empty() ? kOk : kViolation;
    }
    if (recon->parsed()) {
      const ExplicitFamily f = load_family(o.file);
      const std::optional<Index> h = horizon_of(recon_h);
      const ExplicitFamily rebuilt = reconstruct_level(f, o.n, h);
      const bool match = rebuilt == level_below(f, o.n, h);
      if (o.machine) {
        out << json{{"match", match}, {"level", family_json(rebuilt)}}.dump() << "\n";
      } else {
        out << format_family(rebuilt);
        if (!match) err << "reconstruction differs from the family's level " << o.n + 1 << "\n";
      }
      return match ? kOk : kViolation;
    }
    if (reach->parsed()) {
      const ReachabilityReport r = regular_reachability(load_family(o.file), o.members, o.window);
      if (o.machine) {
        json arr = json::array();
        for (const auto& m : r.matches) arr.push_back({{"partner", one_line(m.partner)}, {"pi", to_string(m.pi)}});
        out << json{{"candidates", r.candidates}, {"matches", arr}}.dump() << "\n";
      } else {
        out << "candidates: " << r.candidates << ", matches: " << r.matches.size() << "\n";
        for (const auto& m : r.matches) out << "match " << one_line(m.partner) << " via " << to_string(m.pi) << "\n";
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace combfam::cli
