#include "germcalc/cli.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "germcalc/deadline.hpp"
#include "germcalc/germ_file.hpp"
#include "germcalc/parse.hpp"

namespace germcalc {

namespace {

using nlohmann::ordered_json;

struct GermArgs {
  std::string path;
  std::uint32_t characteristic = 0;  // 0: take the file's value
  double timeout_seconds = 0;
  bool json = false;
  bool force = false;

  std::optional<std::uint32_t> char_override() const {
    if (characteristic == 0) return std::nullopt;
    return characteristic;
  }
  std::optional<std::chrono::milliseconds> budget() const {
    if (timeout_seconds <= 0) return std::nullopt;
    return std::chrono::milliseconds(
        static_cast<long long>(std::llround(timeout_seconds * 1000.0)));
  }
};

void add_germ_options(CLI::App* cmd, GermArgs& a, bool run_flags) {
  cmd->add_option("file", a.path, "germ description file")->required();
  cmd->add_option("--char", a.characteristic,
                  "prime characteristic overriding the file");
  if (run_flags) {
    cmd->add_option("--timeout", a.timeout_seconds,
                    "wall-clock budget in seconds, 0 for none");
    cmd->add_flag("--force", a.force,
                  "run the quotient stage even if the gate fails");
  }
}

std::string last_stage(const Timings& tm) {
  return tm.stages.empty() ? std::string("none") : tm.stages.back().first;
}

void print_timings(std::ostream& err, const Timings& tm) {
  for (const auto& [name, ms] : tm.stages)
    err << "stage " << name << ": " << ms << " ms\n";
}

ordered_json report_json(const GermFile& gf, const MapGerm& g,
                         const GermReport& rep) {
  ordered_json germ;
  germ["source_vars"] = g.source()->var_names();
  germ["target_vars"] = g.target()->var_names();
  germ["weights"] = g.weights();
  germ["degrees"] = g.degrees();
  ordered_json comps = ordered_json::array();
  for (const Polynomial& f : g.components())
    comps.push_back(format_polynomial(f));
  germ["components"] = comps;
  if (gf.mu_image) germ["mu_image"] = *gf.mu_image;
  if (gf.family_k) germ["family_k"] = *gf.family_k;

  ordered_json j;
  j["germ"] = germ;
  j["corank"] = rep.corank;
  j["ramification_dim"] = rep.ramification.dim;
  j["gate"] = rep.certified;
  j["multiplicity"] = rep.multiplicity.finite
                          ? ordered_json(rep.multiplicity.value)
                          : ordered_json("infinite");
  if (rep.ae_codim)
    j["ae_codim"] = rep.ae_codim->finite ? ordered_json(rep.ae_codim->value)
                                         : ordered_json("infinite");
  else
    j["ae_codim"] = nullptr;
  j["mu_image"] =
      rep.mu_image ? ordered_json(*rep.mu_image) : ordered_json(nullptr);
  j["verdict"] = verdict_name(rep.verdict);
  j["characteristic"] = g.characteristic();
  ordered_json tms = ordered_json::object();
  for (const auto& [name, ms] : rep.timings.stages) tms[name] = ms;
  j["timings_ms"] = tms;
  ordered_json errs = ordered_json::array();
  for (const std::string& v : rep.violations)
    errs.push_back("homogeneity: " + v);
  for (const std::string& e : rep.errors) errs.push_back(e);
  if (!errs.empty()) j["errors"] = errs;
  return j;
}

int cmd_check(const GermArgs& a, std::ostream& out) {
  GermFile gf = read_germ_file(a.path);
  MapGerm g = load_germ(gf, a.char_override());
  std::vector<std::string> violations = validate_germ(g);
  out << "germ: " << a.path << "\n";
  out << "characteristic: " << g.characteristic() << "\n";
  out << "corank: " << corank(g) << "\n";
  if (violations.empty()) {
    out << "weighted homogeneous: yes\n";
  } else {
    out << "weighted homogeneous: no\n";
    for (const std::string& v : violations) out << "  " << v << "\n";
  }
  RamificationInfo ram = ramification_dim(g);
  out << "ramification dim: " << ram.dim << " (codim " << ram.codim << ")\n";
  bool gate = violations.empty() && ram.codim_ok;
  out << "gate: " << (gate ? "PASS" : "FAIL") << "\n";
  return gate ? 0 : 2;
}

int cmd_report(const GermArgs& a, std::ostream& out, std::ostream& err) {
  GermFile gf = read_germ_file(a.path);
  MapGerm g = load_germ(gf, a.char_override());
  DeadlineGuard guard(a.budget());
  Timings tm;
  try {
    GermReport rep = mond_verdict(g, file_mu(gf), a.force, &tm);
    out << report_json(gf, g, rep).dump(2) << "\n";
    print_timings(err, rep.timings);
    return rep.certified || a.force ? 0 : 2;
  } catch (const TimeoutError&) {
    err << "timeout; last completed stage: " << last_stage(tm) << "\n";
    return 3;
  }
}

int cmd_aecodim(const GermArgs& a, std::ostream& out, std::ostream& err) {
  if (a.json) return cmd_report(a, out, err);
  GermFile gf = read_germ_file(a.path);
  MapGerm g = load_germ(gf, a.char_override());
  DeadlineGuard guard(a.budget());
  Timings tm;
  try {
    std::vector<std::string> violations = validate_germ(g);
    RamificationInfo ram = ramification_dim(g);
    bool gate = violations.empty() && ram.codim_ok;
    if (!gate && !a.force) {
      for (const std::string& v : violations) err << v << "\n";
      if (!ram.codim_ok)
        err << "ramification locus has codimension " << ram.codim
            << ", need 2\n";
      err << "gate failed; pass --force to compute the quotient dimension "
             "anyway\n";
      return 2;
    }
    Dim d = ae_codim(g, &tm);
    out << "characteristic: " << g.characteristic() << "\n";
    const char* label = gate ? "ae_codim" : "dim N_f (hypothesis unmet)";
    if (d.finite)
      out << label << ": " << d.value << "\n";
    else
      out << label << ": INFINITE (not finitely determined)\n";
    print_timings(err, tm);
    return 0;
  } catch (const TimeoutError&) {
    err << "timeout; last completed stage: " << last_stage(tm) << "\n";
    return 3;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"invariants of weighted homogeneous polynomial map-germs "
               "(k^n,0) -> (k^(n+1),0) over a large prime field"};
  app.require_subcommand(1);

  GermArgs check_args, ae_args, report_args;
  long long family_k = 0;
  long long tau = 0, cm_type = 0;

  CLI::App* check = app.add_subcommand(
      "check", "corank, homogeneity and the ramification gate");
  add_germ_options(check, check_args, false);

  CLI::App* aecodim = app.add_subcommand(
      "aecodim", "image equation and quotient-dimension pipeline");
  add_germ_options(aecodim, ae_args, true);
  aecodim->add_flag("--json", ae_args.json, "emit the full JSON report");

  CLI::App* report =
      app.add_subcommand("report", "every invariant plus verdict, as JSON");
  add_germ_options(report, report_args, true);

  CLI::App* family = app.add_subcommand(
      "family", "image Milnor number of the built-in corank-3 family");
  family->add_option("--k", family_k, "family index, degrees (4,5,6,2k+1)")
      ->required();

  CLI::App* greuel = app.add_subcommand(
      "greuel", "Milnor number of a weighted homogeneous space curve");
  greuel->add_option("--tau", tau, "Tjurina number")->required();
  greuel->add_option("--cmtype", cm_type, "Cohen-Macaulay type")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) return cmd_check(check_args, out);
    if (aecodim->parsed()) return cmd_aecodim(ae_args, out, err);
    if (report->parsed()) return cmd_report(report_args, out, err);
    if (family->parsed()) {
      out << mu_image_family(family_k) << "\n";
      return 0;
    }
    if (greuel->parsed()) {
      out << greuel_mu(tau, cm_type) << "\n";
      return 0;
    }
  } catch (const TimeoutError& e) {
    err << "timeout: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace germcalc
