#include "hitchin/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hitchin/connection.hpp"
#include "hitchin/holonomy.hpp"
#include "hitchin/kummer.hpp"
#include "hitchin/spectra.hpp"
#include "hitchin/spin.hpp"

namespace hitchin::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  int g = 2;
  int k = 2;
  std::string lambda = "hitchin";
  std::uint64_t seed = 20240601;
  int configs = 5;
  int steps = 512;
  double tolerance = 1e-6;
  std::string graph = "theta";
  std::string loop = "circle";
  int turns = 0;  // 0: loop default (1 for circle, 2 for dilation)
  std::string output;
  bool timings = true;
};

json rational(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

json gaussian(const Gaussian& z) {
  if (z.is_real()) return rational(z.re());
  return {{"re", rational(z.re())}, {"im", rational(z.im())}};
}

json phases(const PhaseMultiset& m) {
  json out = json::array();
  for (const auto& item : m.items())
    out.push_back({{"num", item.phase.get_num().get_str()}, {"den", item.phase.get_den().get_str()}, {"mult", item.multiplicity}});
  return out;
}

json config_json(const std::vector<Gaussian>& z) {
  json out = json::array();
  for (const auto& x : z) out.push_back(x.to_string());
  return out;
}

Gaussian lambda_value(const RunConfig& cfg) {
  if (cfg.lambda == "kummer") return lambda_kummer();
  return lambda_hitchin(cfg.k);
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

/// Collects checks in order; each check is a name, a pass flag and a payload.
class Report {
 public:
  explicit Report(const RunConfig& cfg) : cfg_(cfg) {}

  void run(const std::string& name, const std::function<bool(json&)>& body) {
    json payload = json::object();
    const auto t0 = std::chrono::steady_clock::now();
    const bool pass = body(payload);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json entry{{"name", name}, {"status", pass ? "pass" : "fail"}};
    for (auto& [key, value] : payload.items()) entry[key] = value;
    checks_.push_back(std::move(entry));
    if (cfg_.timings) timings_[name] = secs;
    all_pass_ = all_pass_ && pass;
  }

  bool pass() const { return all_pass_; }

  json to_json() const {
    json cfg{{"g", cfg_.g},           {"k", cfg_.k},       {"lambda", cfg_.lambda},
             {"seed", cfg_.seed},     {"configs", cfg_.configs},
             {"rng", "mt19937_64, (draw mod 129) - 64, distinct"},
             {"steps", cfg_.steps},   {"tolerance", cfg_.tolerance}};
    json out{{"schema", "report_v1"}, {"command", cfg_.command}, {"config", cfg}, {"checks", checks_},
             {"status", all_pass_ ? "pass" : "fail"}};
    if (cfg_.timings) out["timings_seconds"] = timings_;
    return out;
  }

 private:
  const RunConfig& cfg_;
  json checks_ = json::array();
  json timings_ = json::object();
  bool all_pass_ = true;
};

// --- individual commands ----------------------------------------------------

void spin_checks(Report& rep, const RunConfig& cfg) {
  rep.run("spin_g" + std::to_string(cfg.g), [&](json& p) {
    const auto r = verify_spin(cfg.g);
    p["clifford"] = {{"checked", r.clifford_checked}, {"failures", r.clifford_failures}};
    p["square_minus_identity"] = {{"checked", r.square_checked}, {"failures", r.square_failures}};
    p["bracket"] = {{"checked", r.bracket_checked}, {"failures", r.bracket_failures}};
    return r.ok();
  });
}

void braid_checks(Report& rep, const RunConfig& cfg) {
  rep.run("braid_g" + std::to_string(cfg.g) + "_k" + std::to_string(cfg.k), [&](json& p) {
    const auto r = verify_braid_relations(cfg.g, cfg.k);
    p["checked"] = r.checked;
    json fails = json::array();
    for (const auto& f : r.failures) fails.push_back({{"kind", f.kind}, {"indices", f.indices}});
    p["failures"] = fails;
    return r.ok();
  });
}

void invariance_checks(Report& rep, const RunConfig& cfg) {
  rep.run("heisenberg_invariance_g" + std::to_string(cfg.g) + "_k" + std::to_string(cfg.k), [&](json& p) {
    const auto r = verify_heisenberg_invariance(cfg.g, cfg.k);
    p["checked"] = r.checked;
    p["failures"] = r.failures.size();
    return r.ok();
  });
}

void kummer_checks(Report& rep, const RunConfig& cfg) {
  std::optional<Intertwiner> phi;
  rep.run("intertwiner", [&](json& p) {
    const std::size_t plus = intertwiner_solution_dim(1);
    const std::size_t minus = intertwiner_solution_dim(-1);
    p["solution_dim_plus"] = plus;
    p["solution_dim_minus"] = minus;
    phi = solve_intertwiner(plus == 1 ? 1 : -1);
    return (plus == 1) != (minus == 1) && plus + minus == 1;
  });
  if (!phi) return;
  rep.run("flat_section_seeded", [&](json& p) {
    bool ok = true;
    json rows = json::array();
    for (const auto& z : seeded_configurations(cfg.seed, static_cast<std::size_t>(cfg.configs))) {
      const auto r = verify_flat_section(z, *phi);
      const auto literal = verify_flat_section(z, *phi, Rational(1, 16));
      json res = json::array();
      for (const auto& x : r.residuals)
        res.push_back({{"i", x.i}, {"plus", rational(x.residual_plus)}, {"minus", rational(x.residual_minus)}});
      rows.push_back({{"z", config_json(z)},
                      {"coefficient", rational(spin_flat_coefficient())},
                      {"winning_sign", r.winning_sign},
                      {"residuals", res},
                      {"literal_one_sixteenth_winning_sign", literal.winning_sign}});
      ok = ok && r.winning_sign == 1;
    }
    p["configurations"] = rows;
    return ok;
  });
  rep.run("flat_section_symbolic_family", [&](json& p) {
    // z(t) = (z_2 + t, z_2, z_3, ..., z_6)
    const std::vector<Gaussian> base{5, 5, -3, 7, 11, -13};
    const std::vector<Gaussian> slope{1, 0, 0, 0, 0, 0};
    const auto r = verify_flat_section_symbolic(base, slope, *phi, 1);
    p["base"] = config_json(base);
    p["slope"] = config_json(slope);
    p["vanishes"] = r.vanishes;
    return r.ok();
  });
  rep.run("flat_section_negative_control", [&](json& p) {
    const auto z = seeded_configurations(cfg.seed, 1).front();
    Polynomial quartic = kummer_quartic(z, *phi).p;
    quartic += multiply(phi->image(0), phi->image(0));  // z_S -> z_S + 1 for the first S
    std::vector<Polynomial> dp;
    for (int i = 1; i <= 6; ++i) dp.push_back(kummer_quartic_dz(z, *phi, i));
    const auto r = verify_flat_section(z, quartic, dp);
    p["winning_sign"] = r.winning_sign;
    return r.winning_sign == 0;
  });
}

void nonseparating_checks(Report& rep, const RunConfig& cfg) {
  rep.run("nonseparating_k" + std::to_string(cfg.k), [&](json& p) {
    const auto r = nonseparating_spectrum(cfg.k);
    p["closed_form"] = phases(r.closed_form);
    p["constructive"] = phases(r.constructive);
    p["shift"] = r.shift ? rational(*r.shift) : json(nullptr);
    p["total"] = r.closed_form.total();
    return r.agree() && r.closed_form.total() == dim_sk(cfg.k);
  });
}

void separating_checks(Report& rep, const RunConfig& cfg) {
  rep.run("separating_k" + std::to_string(cfg.k), [&](json& p) {
    const auto r = separating_spectrum(cfg.k);
    p["items"] = phases(r.closed_form);
    p["constructive"] = phases(r.constructive);
    p["scalar_shift"] = r.scalar_shift ? rational(*r.scalar_shift) : json(nullptr);
    return r.agree() && r.closed_form.total() == dim_sk(cfg.k);
  });
}

void r123_checks(Report& rep, const RunConfig& cfg) {
  rep.run("r123_k" + std::to_string(cfg.k), [&](json& p) {
    const auto r = verify_r123(cfg.k);
    p["lambda_k"] = r.lambda_k ? gaussian(*r.lambda_k) : json(nullptr);
    p["residual"] = rational(r.residual);
    p["trace_consistent"] = r.trace_consistent;
    const auto pd = primitive_decomposition(cfg.k);
    json summands = json::array();
    for (const auto& s : pd.summands)
      summands.push_back({{"l", s.l}, {"dim", s.basis.size()}, {"qxq_eigenvalue", gaussian(s.qxq_eigenvalue)}});
    p["primitive_decomposition"] = summands;
    p["complete"] = pd.complete;
    return r.ok() && pd.complete && pd.eigenvectors;
  });
}

void verlinde_checks(Report& rep, const RunConfig& cfg) {
  const auto graph = TrivalentGraph::parse(cfg.graph);
  require(graph.has_value(), "unknown graph '" + cfg.graph + "' (theta | dumbbell)");
  rep.run("verlinde_" + cfg.graph + "_k" + std::to_string(cfg.k), [&](json& p) {
    const auto labels = verlinde_enumerate(*graph, cfg.k);
    p["count"] = labels.size();
    p["dim_sk"] = dim_sk(cfg.k);
    json edges = json::array();
    for (int e = 0; e < graph->edges; ++e) edges.push_back(phases(dehn_twist_phases(*graph, e, cfg.k)));
    p["dehn_twist_phases"] = edges;
    return labels.size() == dim_sk(cfg.k);
  });
}

void compare_checks(Report& rep, const RunConfig& cfg) {
  rep.run("compare_theta_nonseparating_k" + std::to_string(cfg.k), [&](json& p) {
    const auto graph = dehn_twist_phases(TrivalentGraph::theta(), 0, cfg.k);
    const auto mono = nonseparating_constructive(cfg.k);
    const auto s = compare_projective(mono, graph);
    p["shift"] = s ? rational(*s) : json(nullptr);
    return s.has_value();
  });
  rep.run("compare_dumbbell_separating_k" + std::to_string(cfg.k), [&](json& p) {
    const auto graph = dehn_twist_phases(TrivalentGraph::dumbbell(), 2, cfg.k);
    const auto mono = separating_spectrum(cfg.k).constructive;
    const auto s = compare_projective(mono, graph);
    p["shift"] = s ? rational(*s) : json(nullptr);
    return s.has_value();
  });
}

void holonomy_checks(Report& rep, const RunConfig& cfg) {
  require(cfg.loop == "circle" || cfg.loop == "dilation", "unknown loop '" + cfg.loop + "' (circle | dilation)");
  const ConnectionForm form{ResidueOperators(2, cfg.k), lambda_value(cfg)};
  const NumericConnection conn(form);
  const IntegratorConfig ic{cfg.steps, 256};
  if (cfg.loop == "circle") {
    const int turns = cfg.turns ? cfg.turns : 1;
    rep.run("holonomy_circle_k" + std::to_string(cfg.k), [&](json& p) {
      const auto psi = transport(PathSpec::circle(default_circle_base(), 1, 2, turns), conn, ic);
      const PhaseMultiset once = residue_phases(form.ops.at(1, 2), form.lambda);
      PhaseMultiset expected;
      for (const auto& item : once.items())
        expected.add(item.phase * turns, item.multiplicity);
      const auto m = match_phases(spectrum_approx(monodromy(psi)), expected, false);
      p["expected"] = phases(expected);
      p["max_error"] = m.max_error;
      return m.max_error < cfg.tolerance;
    });
  } else {
    require(cfg.lambda == "hitchin", "dilation loop compares against the hitchin value of lambda");
    const int turns = cfg.turns ? cfg.turns : 2;
    rep.run("holonomy_dilation_k" + std::to_string(cfg.k), [&](json& p) {
      const auto psi = transport(PathSpec::dilation(default_dilation_base(), {1, 2, 3}, turns), conn, ic);
      const auto eig = spectrum_approx(monodromy(psi));
      const auto own = match_phases(eig, dilation_phases(cfg.k, turns), false);
      p["turns"] = turns;
      p["expected"] = phases(dilation_phases(cfg.k, turns));
      p["max_error"] = own.max_error;
      bool ok = own.max_error < cfg.tolerance;
      if (turns == 2) {
        const auto sep = match_phases(eig, separating_spectrum(cfg.k).closed_form, true);
        p["separating_max_error"] = sep.max_error;
        p["separating_shift"] = sep.shift;
        ok = ok && sep.max_error < cfg.tolerance;
      }
      return ok;
    });
  }
}

void flatness_checks(Report& rep, const RunConfig& cfg) {
  const ConnectionForm form{ResidueOperators(2, cfg.k), lambda_value(cfg)};
  const NumericConnection conn(form);
  Config base = default_circle_base();
  base[0] = base[1] + 0.2;
  const auto rect = PathSpec::rectangle(base, 1, cplx(0.1, 0), 2, cplx(0, 0.1));
  rep.run("flatness_rectangle_k" + std::to_string(cfg.k), [&](json& p) {
    const double d = check_flatness(rect, conn, {cfg.steps, 256});
    p["deviation"] = d;
    return d < cfg.tolerance;
  });
  rep.run("flatness_degenerate_k" + std::to_string(cfg.k), [&](json& p) {
    const double d = check_flatness(PathSpec::degenerate(base, 1, cplx(0.05, 0.02)), conn, {cfg.steps, 256});
    p["deviation"] = d;
    return d < 1e-10;
  });
  rep.run("flatness_richardson_k" + std::to_string(cfg.k), [&](json& p) {
    // |lambda| = 2 keeps the discretisation error above round-off for four step counts.
    const NumericConnection strong(ConnectionForm{ResidueOperators(2, cfg.k), Gaussian(-2)});
    json devs = json::array();
    json ratios = json::array();
    bool ok = true;
    double prev = 0;
    for (int steps : {16, 32, 64, 128}) {
      const double d = check_flatness(rect, strong, {steps, 256});
      devs.push_back(d);
      if (prev > 0) {
        ratios.push_back(prev / d);
        ok = ok && prev / d > 12 && prev / d < 20;
      }
      prev = d;
    }
    p["lambda"] = -2;
    p["deviations"] = devs;
    p["ratios"] = ratios;
    return ok;
  });
}

void k1_k2_checks(Report& rep) {
  rep.run("k1_form_vanishes", [&](json& p) {
    const ResidueOperators ops(2, 1);
    bool zero = true;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) zero = zero && ops.at(i, j).is_zero();
    p["all_zero"] = zero;
    return zero;
  });
  rep.run("k2_eigenlines", [&](json& p) {
    const auto d = k2_eigenspace_decomposition();
    p["lines"] = d.lines.size();
    p["one_dimensional"] = d.all_one_dimensional;
    p["even_integer_scalars"] = d.scalars_are_even_integers;
    p["spans"] = d.spans;
    return d.lines.size() == 10 && d.all_one_dimensional && d.scalars_are_even_integers && d.spans;
  });
}

}  // namespace

int run(int argc, char** argv) { return run(argc, argv, std::cout, std::cerr); }

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact checks of the explicit Hitchin connection for hyperelliptic curves"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", cfg.output, "Write the JSON report here instead of stdout");
    sub->add_flag("!--no-timings", cfg.timings, "Omit timings (byte-identical reports)");
  };
  auto add_g = [&](CLI::App* sub) { sub->add_option("--g", cfg.g, "Genus")->check(CLI::Range(1, 3)); };
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", cfg.k, "Level")->check(CLI::Range(1, 12)); };
  auto add_lambda = [&](CLI::App* sub) {
    sub->add_option("--lambda", cfg.lambda, "Lambda preset")->check(CLI::IsMember({"kummer", "hitchin"}));
  };
  auto add_num = [&](CLI::App* sub) {
    sub->add_option("--steps", cfg.steps, "RK4 steps per segment")->check(CLI::Range(16, 1 << 20));
    sub->add_option("--tolerance", cfg.tolerance, "Numerical tolerance")->check(CLI::PositiveNumber);
  };

  std::map<std::string, std::function<void(Report&)>> actions;
  auto sub = [&](const std::string& name, const std::string& help, std::function<void(Report&)> action) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s);
    actions[name] = std::move(action);
    return s;
  };

  add_g(sub("verify-spin", "Clifford relations, rho_s(F)^2 = -I and the so(2g+2) bracket",
            [&](Report& r) { spin_checks(r, cfg); }));
  {
    auto* s = sub("verify-braid", "Infinitesimal pure braid relations for M_ij on S_k",
                  [&](Report& r) { braid_checks(r, cfg); });
    add_g(s);
    add_k(s);
  }
  {
    auto* s = sub("verify-invariance", "Heisenberg invariance of the M_ij",
                  [&](Report& r) { invariance_checks(r, cfg); });
    add_g(s);
    add_k(s);
  }
  {
    auto* s = sub("verify-kummer", "Intertwiner and flat-section equations for the Kummer quartic",
                  [&](Report& r) { kummer_checks(r, cfg); });
    s->add_option("--seed", cfg.seed, "Seed for the rational test configurations");
    s->add_option("--configs", cfg.configs, "Number of seeded configurations")->check(CLI::Range(1, 100));
  }
  add_k(sub("spectrum-nonseparating", "Monodromy spectrum of a non-separating Dehn twist",
            [&](Report& r) { nonseparating_checks(r, cfg); }));
  add_k(sub("spectrum-separating", "Monodromy spectrum of a separating Dehn twist",
            [&](Report& r) { separating_checks(r, cfg); }));
  add_k(sub("verify-r123", "R_123 = 16 Q X_Q + lambda_k and the primitive decomposition",
            [&](Report& r) { r123_checks(r, cfg); }));
  {
    auto* s = sub("verlinde", "Admissible labelings of a trivalent graph", [&](Report& r) { verlinde_checks(r, cfg); });
    add_k(s);
    s->add_option("--graph", cfg.graph, "theta | dumbbell")->check(CLI::IsMember({"theta", "dumbbell"}));
  }
  add_k(sub("compare-spectra", "Graph Dehn-twist phases against the monodromy spectra",
            [&](Report& r) { compare_checks(r, cfg); }));
  {
    auto* s = sub("holonomy", "Numerical monodromy of a loop against exact phases",
                  [&](Report& r) { holonomy_checks(r, cfg); });
    add_k(s);
    add_lambda(s);
    add_num(s);
    s->add_option("--loop", cfg.loop, "circle | dilation")->check(CLI::IsMember({"circle", "dilation"}));
    s->add_option("--turns", cfg.turns, "Number of turns")->check(CLI::Range(1, 8));
  }
  {
    auto* s = sub("flatness", "Numerical flatness on contractible loops", [&](Report& r) { flatness_checks(r, cfg); });
    add_k(s);
    add_lambda(s);
    add_num(s);
  }
  {
    auto* s = sub("all", "Every check at the given g and k", [&](Report& r) {
      spin_checks(r, cfg);
      braid_checks(r, cfg);
      const int g = cfg.g;
      cfg.g = 2;
      invariance_checks(r, cfg);
      kummer_checks(r, cfg);
      nonseparating_checks(r, cfg);
      separating_checks(r, cfg);
      r123_checks(r, cfg);
      for (const char* graph : {"theta", "dumbbell"}) {
        cfg.graph = graph;
        verlinde_checks(r, cfg);
      }
      compare_checks(r, cfg);
      k1_k2_checks(r);
      cfg.lambda = "hitchin";
      for (const char* loop : {"circle", "dilation"}) {
        cfg.loop = loop;
        holonomy_checks(r, cfg);
      }
      flatness_checks(r, cfg);
      cfg.g = g;
    });
    add_g(s);
    add_k(s);
    s->add_option("--seed", cfg.seed, "Seed for the rational test configurations");
    s->add_option("--steps", cfg.steps, "RK4 steps per segment")->check(CLI::Range(16, 1 << 20));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  Report report(cfg);
  try {
    actions.at(cfg.command)(report);
  } catch (const std::invalid_argument& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string text = report.to_json().dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "cannot write " << cfg.output << "\n";
      return 2;
    }
    file << text;
  }
  return report.pass() ? 0 : 1;
}

}  // namespace hitchin::cli
