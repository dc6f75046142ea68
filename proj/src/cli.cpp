#include "grt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "grt/dk_pentagon.hpp"
#include "grt/five_cycle.hpp"
#include "grt/group_lab.hpp"
#include "grt/grt_ops.hpp"
#include "grt/lie_text.hpp"
#include "grt/torsor_lab.hpp"

namespace grt {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string format = "text";
  int jobs = 1;
  int max_degree = 6;
  std::string alphabet = "x,y";
  std::string expr;
  std::string expr2;
  std::string which;
  int n = 4;
  LabConfig lab;
  int prime = 7;
  int modulus = 3;
  int samples = 10000;
  double tolerance = 1e-10;
  double margin = 1e-3;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

class Output {
 public:
  Output(const RunConfig& cfg, std::ostream& out, std::ostream& err)
      : json_(cfg.format == "json"), out_(out), err_(err) {}

  int series(const LieSeries& s, const char* key) {
    if (json_) {
      out_ << nlohmann::json{{key, format_lie(s)}, {"series", to_json(s)}}.dump(2) << "\n";
    } else {
      out_ << format_lie(s) << "\n";
    }
    return kPass;
  }

  // Prints a residual; a nonzero one is a failed check.
  int residual(const std::string& text, bool zero, nlohmann::json extra = nlohmann::json::object()) {
    if (json_) {
      extra["residual"] = text;
      extra["zero"] = zero;
      out_ << extra.dump(2) << "\n";
    } else {
      out_ << text << "\n";
    }
    if (!zero) err_ << "check failed: residual is nonzero\n";
    return zero ? kPass : kFail;
  }

  int report(const Report& r, bool ok) {
    if (json_) {
      out_ << r.to_json().dump(2) << "\n";
    } else {
      out_ << "construction: " << r.construction << "\n"
           << "group: " << r.group << "\n"
           << "arity: " << r.arity << "\n"
           << "points_checked: " << r.points_checked << "\n"
           << "violations: " << r.violation_count << "\n";
      for (const auto& [k, v] : r.extra.items())
        if (k != "checks") out_ << k << ": " << v.dump() << "\n";
      out_ << (ok ? "PASS" : "FAIL") << "\n";
    }
    if (!ok) {
      if (!r.violations.empty()) {
        const auto& v = r.violations.front();
        std::string at;
        for (const auto& p : v.point) at += (at.empty() ? "" : ",") + p;
        err_ << "first counterexample: " << v.check << " at (" << at << ")"
             << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
      } else {
        err_ << "check failed: no counterexample found where one was expected\n";
      }
    }
    return ok ? kPass : kFail;
  }

  void raw(const nlohmann::json& j, const std::string& text) {
    if (json_) out_ << j.dump(2) << "\n";
    else out_ << text;
  }

 private:
  bool json_;
  std::ostream& out_;
  std::ostream& err_;
};

FreeLiePtr lie_algebra(const RunConfig& cfg) {
  return FreeLie::create(split_commas(cfg.alphabet), cfg.max_degree);
}

FreeLiePtr lie2(const RunConfig& cfg) { return FreeLie::create({"x", "y"}, cfg.max_degree); }

std::string format_quotient(const QuotientElement& q) {
  return format_lie(q.algebra().lift(q));
}

int cmd_lie(const RunConfig& cfg, Output& out) {
  return out.series(parse_lie(cfg.expr, lie_algebra(cfg)), "expression");
}

int cmd_project(const RunConfig& cfg, Output& out) {
  const LieSeries phi = parse_lie(cfg.expr, lie2(cfg));
  if (cfg.which == "hexagon") return out.series(hexagon_project(phi), "projection");
  if (cfg.which == "antihexagon") return out.series(antihexagon_project(phi), "projection");
  return out.series(skew_symmetrize(phi), "projection");
}

int cmd_residual(const RunConfig& cfg, Output& out) {
  const LieSeries phi = parse_lie(cfg.expr, lie2(cfg));
  if (cfg.which == "pentagon") {
    const auto t4 = drinfeld_kohno(4, cfg.max_degree);
    const QuotientElement r = pentagon_residual(*t4, phi);
    return out.residual(format_quotient(r), r.is_zero(), {{"algebra", "t4"}, {"max_degree", cfg.max_degree}});
  }
  LieSeries r(phi.algebra_ptr());
  if (cfg.which == "hexagon") r = hexagon_residual(phi);
  else if (cfg.which == "antihexagon") r = antihexagon_residual(phi);
  else if (cfg.which == "eq3") r = drinfeld_eq3_residual(phi);
  else r = skew_residual(phi);
  return out.residual(format_lie(r), r.is_zero());
}

int cmd_ihara(const RunConfig& cfg, Output& out) {
  const auto alg = lie2(cfg);
  return out.series(ihara_bracket(parse_lie(cfg.expr, alg), parse_lie(cfg.expr2, alg)),
                    "bracket");
}

int cmd_dk(const RunConfig& cfg, Output& out) {
  const auto t = drinfeld_kohno(cfg.n, cfg.max_degree);
  nlohmann::json dims = nlohmann::json::array(), sat = nlohmann::json::array();
  std::string text;
  bool all_saturated = true;
  for (int d = 1; d <= cfg.max_degree; ++d) {
    dims.push_back(t->dimension(d));
    sat.push_back(t->saturated(d));
    all_saturated = all_saturated && t->saturated(d);
    text += "degree " + std::to_string(d) + ": " + std::to_string(t->dimension(d)) +
            (t->saturated(d) ? "" : " (not saturated)") + "\n";
  }
  out.raw({{"n", cfg.n},
           {"max_degree", cfg.max_degree},
           {"relations", t->relations().size()},
           {"dimensions", dims},
           {"saturated", sat}},
          text);
  return all_saturated ? kPass : kFail;
}

int cmd_lab(bool torsor, const RunConfig& cfg, Output& out) {
  const auto& id = cfg.expr;
  const LabOutcome o = torsor ? run_torsor_lab(id, cfg.lab) : run_group_lab(id, cfg.lab);
  return out.report(o.report, o.ok);
}

int cmd_fivecycle_fp(const RunConfig& cfg, Output& out) {
  Report r = fp_cycle(cfg.prime);
  Rng rng(cfg.lab.seed);
  const Report proj = check_five_project(cfg.prime, cfg.modulus, rng);
  r.merge(proj);
  r.extra["projector"] = {{"modulus", cfg.modulus},
                          {"points_checked", proj.points_checked},
                          {"violation_count", proj.violation_count}};
  r.extra["seed"] = cfg.lab.seed;
  r.extra["points"] = r.extra["domain_size"];
  return out.report(r, r.passed());
}

int cmd_fivecycle_bw(const RunConfig& cfg, Output& out) {
  const Report r = bloch_wigner_sweep(cfg.samples, cfg.lab.seed, cfg.tolerance, cfg.margin, cfg.jobs);
  return out.report(r, r.passed());
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact free Lie algebra operators, Drinfeld-Kohno quotients and finite symmetry labs",
               "grtlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads for sample sweeps")->check(CLI::Range(1, 64));
  app.add_option("--max-degree", cfg.max_degree, "Truncation degree")->check(CLI::Range(1, 16));
  app.add_option("--seed", cfg.lab.seed, "Seed for every randomized sweep");
  app.add_option("--samples", cfg.samples, "Number of random samples")->check(CLI::Range(1, 10000000));

  std::function<int()> action;

  auto* lie = app.add_subcommand("lie", "Free Lie algebra expressions");
  lie->require_subcommand(1);
  auto* eval = lie->add_subcommand("eval", "Print the Lyndon normal form of an expression");
  eval->add_option("expr", cfg.expr, "Expression")->required();
  eval->add_option("--alphabet", cfg.alphabet, "Comma-separated generator names");
  eval->callback([&] { action = [&] { Output o(cfg, out, err); return cmd_lie(cfg, o); }; });

  auto* project = app.add_subcommand("project", "Apply a projector on lie2");
  project->add_option("which", cfg.which, "hexagon | antihexagon | skew")
      ->required()
      ->check(CLI::IsMember({"hexagon", "antihexagon", "skew"}));
  project->add_option("expr", cfg.expr, "Expression in x, y")->required();
  project->callback([&] { action = [&] { Output o(cfg, out, err); return cmd_project(cfg, o); }; });

  auto* residual = app.add_subcommand("residual", "Evaluate an equation residual");
  residual->add_option("which", cfg.which, "hexagon | antihexagon | skew | eq3 | pentagon")
      ->required()
      ->check(CLI::IsMember({"hexagon", "antihexagon", "skew", "eq3", "pentagon"}));
  residual->add_option("expr", cfg.expr, "Expression in x, y")->required();
  residual->callback([&] { action = [&] { Output o(cfg, out, err); return cmd_residual(cfg, o); }; });

  auto* ihara = app.add_subcommand("ihara", "Ihara bracket {f, g}");
  ihara->add_option("f", cfg.expr, "First argument")->required();
  ihara->add_option("g", cfg.expr2, "Second argument")->required();
  ihara->callback([&] { action = [&] { Output o(cfg, out, err); return cmd_ihara(cfg, o); }; });

  auto* dk = app.add_subcommand("dk", "Drinfeld-Kohno algebras");
  dk->require_subcommand(1);
  auto* dims = dk->add_subcommand("dims", "Per-degree dimensions of t_n");
  dims->add_option("--n", cfg.n, "Number of strands")->check(CLI::Range(2, 9));
  dims->callback([&] { action = [&] { Output o(cfg, out, err); return cmd_dk(cfg, o); }; });

  auto* lab = app.add_subcommand("lab", "Exhaustive verification suites");
  lab->require_subcommand(1);
  for (bool torsor : {false, true}) {
    auto* sub = lab->add_subcommand(torsor ? "torsor" : "group",
                                    torsor ? "Torsor constructions" : "Group constructions");
    const auto ids = torsor ? torsor_lab_ids() : group_lab_ids();
    std::vector<std::string> accepted = ids;
    if (!torsor) accepted.push_back("z3hexagon");
    sub->add_option("id", cfg.expr, "Proposition id")->required()->check(CLI::IsMember(accepted));
    sub->add_option("--group", cfg.lab.group, "Group spec, e.g. Z6, Z2xZ3, S3, Z3^3");
    sub->add_option("--target", cfg.lab.target, "Target group spec");
    sub->add_option("--pairing", cfg.lab.pairing, "ring:m | heisenberg:m | cross:m | zero:G | commutator:G | z2z4");
    sub->add_option("--arity", cfg.lab.arity, "Arity n")->check(CLI::Range(1, 6));
    sub->add_flag("--permissive", cfg.lab.permissive, "Run checks even when a hypothesis fails");
    if (torsor) sub->add_option("--torsor", cfg.lab.torsor_json, "Torsor table as JSON file");
    sub->callback([&, torsor] {
      action = [&, torsor] {
        cfg.lab.max_degree = app.get_option("--max-degree")->count() ? cfg.max_degree : 0;
        cfg.lab.samples = app.get_option("--samples")->count() ? cfg.samples : 0;
        Output o(cfg, out, err);
        return cmd_lab(torsor, cfg, o);
      };
    });
  }

  auto* five = app.add_subcommand("fivecycle", "The five-cycle over prime fields and C");
  five->require_subcommand(1);
  auto* fp = five->add_subcommand("fp", "Exhaustive check over F_p");
  fp->add_option("--prime", cfg.prime, "Prime p >= 5");
  fp->add_option("--modulus", cfg.modulus, "Modulus m of the projector test, gcd(m,5)=1");
  fp->callback([&] { action = [&] { Output o(cfg, out, err); return cmd_fivecycle_fp(cfg, o); }; });
  auto* bw = five->add_subcommand("bw", "Bloch-Wigner five-term sweep");
  bw->add_option("--tolerance", cfg.tolerance, "Residual tolerance")->check(CLI::PositiveNumber);
  bw->add_option("--margin", cfg.margin, "Distance kept from the exceptional set")->check(CLI::PositiveNumber);
  bw->callback([&] { action = [&] { Output o(cfg, out, err); return cmd_fivecycle_bw(cfg, o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    // invalid_argument (bad input) derives from logic_error; anything else is
    // a certificate failure.
    if (dynamic_cast<const std::invalid_argument*>(&e) == nullptr &&
        dynamic_cast<const std::domain_error*>(&e) == nullptr) {
      err << "certificate failed: " << e.what() << "\n";
      return kFail;
    }
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace grt
