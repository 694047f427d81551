// thinset-lab: command-line front end for the thinset library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thinset/config.hpp"
#include "thinset/errors.hpp"
#include "thinset/experiments.hpp"
#include "thinset/exponents.hpp"
#include "thinset/freq_sets.hpp"
#include "thinset/orlicz.hpp"
#include "thinset/quasi.hpp"
#include "thinset/report.hpp"
#include "thinset/rng.hpp"
#include "thinset/stable_norm.hpp"
#include "thinset/trig_polynomial.hpp"

using nlohmann::ordered_json;
using namespace thinset;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("input is not valid JSON: ") + e.what());
  }
}

// [[freq, re, im], ...]; the imaginary part may be omitted.
TrigPolynomial read_polynomial(const std::string& path) {
  auto j = parse_json(read_input(path));
  if (!j.is_array()) throw UsageError("polynomial must be a JSON array of [freq, re, im]");
  TrigPolynomial::Terms terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() < 2 || t.size() > 3 || !t[0].is_number_integer())
      throw UsageError("each term must be [freq, re] or [freq, re, im] with integer freq");
    double im = t.size() == 3 ? t[2].get<double>() : 0.0;
    terms[t[0].get<Frequency>()] += Complex(t[1].get<double>(), im);
  }
  return TrigPolynomial(std::move(terms));
}

FreqSet read_set(const std::string& path) {
  auto j = parse_json(read_input(path));
  if (!j.is_array()) throw UsageError("set must be a JSON array of integers");
  std::vector<Frequency> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw UsageError("set must contain integers only");
    v.push_back(x.get<Frequency>());
  }
  return FreqSet(std::move(v));
}

ordered_json set_json(const FreqSet& a) { return ordered_json(a.vec()); }

void print(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<Frequency> parse_checkpoints(const std::string& text) {
  std::vector<Frequency> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<Frequency>(std::llround(std::stod(item))));
    } catch (const std::logic_error&) {
      throw UsageError("bad checkpoint '" + item + "'");
    }
  }
  return out;
}

ordered_json exponent_json(const ExponentTable& t) {
  auto num = [](double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json("inf"); };
  return {{"p", num(t.p)},       {"q", num(t.q)},         {"p_conj", num(t.p_conj)},
          {"q_conj", num(t.q_conj)}, {"epsilon", num(t.epsilon)}, {"alpha", num(t.alpha)},
          {"beta", num(t.beta)}, {"s", num(t.s)}, {"s_conj", num(t.s_conj)},         {"mesh_exp", num(t.mesh_exp)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Norms, quasi-independence and Monte Carlo experiments for thin sets of frequencies"};
  app.require_subcommand(1);
  int exit_code = 0;

  // exponents
  auto* ex = app.add_subcommand("exponents", "Exponent relations between p, q, s and Orlicz parameters");
  std::optional<double> ex_p, ex_q, ex_s, ex_r;
  ex->add_option("--p", ex_p, "stable index p in (1,2]");
  ex->add_option("--q", ex_q, "exponent q in [1,p)");
  ex->add_option("--s", ex_s, "s in [1,2): with --p solves for q, with --q solves for p, with --r gives Orlicz parameters");
  ex->add_option("--r", ex_r, "Orlicz exponent r (with --s)");
  ex->callback([&] {
    if (ex_s && ex_r) {
      auto o = orlicz_params(*ex_s, *ex_r);
      print({{"s", o.s}, {"r", o.r}, {"rho", o.rho}, {"p_tilde", o.p_tilde}, {"p_tilde_conj", o.p_tilde_conj}});
      return;
    }
    double p = 0.0, q = 0.0;
    if (ex_p && ex_q) {
      p = *ex_p;
      q = *ex_q;
    } else if (ex_p && ex_s) {
      p = *ex_p;
      q = invert_for_q(p, *ex_s);
    } else if (ex_q && ex_s) {
      q = *ex_q;
      p = invert_for_p(q, *ex_s);
    } else {
      throw UsageError("exponents needs --p --q, --p --s, --q --s or --s --r");
    }
    print(exponent_json(derive_exponents(p, q)));
  });

  // norm
  auto* nm = app.add_subcommand("norm", "Norms of a polynomial given as JSON [[freq, re, im], ...]");
  std::string nm_in;
  double nm_q = 2.0;
  nm->add_option("--input", nm_in, "polynomial file (default stdin)");
  nm->add_option("--q", nm_q, "exponent for F_q and Lorentz norms");
  nm->callback([&] {
    if (!nm->get_subcommands().empty()) return;
    auto f = read_polynomial(nm_in);
    auto ln = lorentz_norms(f, nm_q);
    print({{"terms", f.size()},
           {"q", nm_q},
           {"fq", fq_norm(f, nm_q)},
           {"lorentz_q1", ln.l_q1},
           {"lorentz_qinf", ln.l_qinf},
           {"sup", sup_norm(f, 1e-9)}});
  });

  auto* orl = nm->add_subcommand("orlicz", "Luxemburg norm (psi) or integral functional (phi)");
  std::string orl_family = "psi";
  double orl_r = 2.0;
  std::size_t orl_grid = 0;
  orl->add_option("--family", orl_family, "psi or phi")->check(CLI::IsMember({"psi", "phi"}));
  orl->add_option("--r", orl_r, "Orlicz exponent r")->required();
  orl->add_option("--grid", orl_grid, "initial grid size (default 16 (degree + 1), rounded up to a power of 2)");
  orl->add_option("--input", nm_in, "polynomial file (default stdin)");
  orl->callback([&] {
    auto f = read_polynomial(nm_in);
    std::size_t m = orl_grid ? orl_grid : default_grid_size(centered_degree(f));
    double v = orl_family == "psi" ? luxemburg_norm(f, OrliczFunction::psi(orl_r), m)
                                   : log_type_functional(f, orl_r, m);
    print({{"family", orl_family}, {"r", orl_r}, {"grid", m}, {"value", v}});
  });

  auto* stn = nm->add_subcommand("stable", "Monte Carlo bracket norm E||sum Z_g c_g e_g||_inf");
  double stn_p = 1.5;
  std::size_t stn_trials = 1000, stn_groups = 0, stn_stream = 0;
  std::string stn_driver = "p_stable";
  std::optional<std::uint64_t> stn_seed;
  stn->add_option("--p", stn_p, "stable index p in (1,2]");
  stn->add_option("--trials", stn_trials, "number of trials");
  stn->add_option("--groups", stn_groups, "median-of-means groups (default ceil(trials^(1/3)))");
  stn->add_option("--driver", stn_driver, "rademacher, complex_gaussian or p_stable");
  stn->add_option("--stream", stn_stream, "random stream id");
  stn->add_option("--seed", stn_seed, "seed (default THINSET_SEED or 0)");
  stn->add_option("--input", nm_in, "polynomial file (default stdin)");
  stn->callback([&] {
    auto f = read_polynomial(nm_in);
    std::uint64_t seed = stn_seed ? *stn_seed : resolve_seed(nullptr);
    DriverDistribution d{parse_driver_kind(stn_driver), stn_p, seed, stn_stream};
    if (d.kind != DriverDistribution::Kind::p_stable) d.p = 2.0;
    auto e = estimate_bracket(f, d, stn_trials, stn_groups);
    print({{"driver", to_string(d.kind)}, {"p", d.p}, {"seed", seed}, {"value", e.value},
           {"spread", e.spread}, {"trials", e.trials}, {"groups", e.groups}});
  });

  // qis
  auto* qis = app.add_subcommand("qis", "Quasi-independence of integer sets given as JSON lists");
  qis->require_subcommand(1);
  std::string qis_in;
  auto* qc = qis->add_subcommand("check", "Decide quasi-independence, with a relation when one exists");
  qc->add_option("--input", qis_in, "set file (default stdin)");
  qc->callback([&] {
    auto a = read_set(qis_in);
    auto r = is_quasi_independent(a);
    ordered_json out{{"set", set_json(a)}, {"quasi_independent", r.independent}};
    out["witness"] = r.witness ? ordered_json(r.witness->signs) : ordered_json(nullptr);
    print(out);
  });
  auto* qm = qis->add_subcommand("max", "Largest quasi-independent subset q(A)");
  std::uint64_t qm_budget = kDefaultSearchBudget;
  qm->add_option("--input", qis_in, "set file (default stdin)");
  qm->add_option("--budget", qm_budget, "node budget");
  qm->callback([&] {
    auto a = read_set(qis_in);
    auto r = max_quasi_independent(a, qm_budget);
    print({{"q", r.q_value}, {"witness", set_json(r.witness)}, {"exact", r.exact}, {"nodes", r.nodes_explored}});
  });
  auto* qp = qis->add_subcommand("partition", "Disjoint quasi-independent pieces covering half of A");
  double qp_c = 1.0, qp_eps = 0.5;
  qp->add_option("--input", qis_in, "set file (default stdin)");
  qp->add_option("--c", qp_c, "constant c");
  qp->add_option("--eps", qp_eps, "exponent epsilon in (0,1]");
  qp->callback([&] {
    auto a = read_set(qis_in);
    auto r = partition_lemma(a, qp_c, qp_eps);
    ordered_json pieces = ordered_json::array();
    for (std::size_t i = 0; i < r.pieces.size(); ++i)
      pieces.push_back({{"set", set_json(r.pieces[i])}, {"exact", static_cast<bool>(r.exact_extraction[i])}});
    print({{"pieces", pieces},
           {"size_window", {r.size_low, r.size_high}},
           {"count_window", {r.count_low, r.count_high}},
           {"covered", r.covered}});
  });

  // sets
  auto* sets = app.add_subcommand("sets", "Example frequency sets");
  sets->require_subcommand(1);
  std::string set_kind = "squares";
  Frequency set_limit = 100;
  std::optional<std::uint64_t> set_seed;
  auto kind_of = [&] { return SetKind::parse(set_kind, set_seed ? *set_seed : resolve_seed(nullptr)); };
  auto* sg = sets->add_subcommand("generate", "Elements of a family in [1, N]");
  sg->add_option("--kind", set_kind, "squares | powers:B | sums_of_powers:B:D | interval | random:DENSITY");
  sg->add_option("--limit", set_limit, "N");
  sg->add_option("--seed", set_seed, "seed for random sets");
  sg->callback([&] {
    auto a = generate(kind_of(), set_limit);
    print({{"kind", set_kind}, {"limit", set_limit}, {"size", a.size()}, {"elements", set_json(a)}});
  });
  auto* sm = sets->add_subcommand("mesh", "Counts |Lambda cap [1,N]| and an exponent fit");
  std::string sm_cps = "100,1000,10000,100000,1000000";
  std::string sm_model = "power_log";
  sm->add_option("--kind", set_kind, "set family");
  sm->add_option("--checkpoints", sm_cps, "comma separated N values");
  sm->add_option("--model", sm_model, "polylog or power_log")->check(CLI::IsMember({"polylog", "power_log"}));
  sm->add_option("--seed", set_seed, "seed for random sets");
  sm->callback([&] {
    auto cps = parse_checkpoints(sm_cps);
    if (cps.empty()) throw UsageError("no checkpoints");
    auto a = generate(kind_of(), cps.back());
    auto counts = mesh_counts(a, cps);
    ordered_json out{{"kind", set_kind}, {"checkpoints", cps}, {"counts", counts}};
    if (cps.size() >= 4) {
      auto fit = fit_mesh_exponent(counts, cps, parse_mesh_model(sm_model));
      out["fit"] = {{"model", sm_model}, {"exponent", fit.exponent}, {"intercept", fit.intercept},
                    {"residual", fit.residual}};
    }
    print(out);
  });
  auto* sr = sets->add_subcommand("ralpha", "Representation counts r_alpha(j), j = 0..n");
  std::size_t sr_k = 0, sr_n = 0;
  unsigned sr_alpha = 2;
  sr->add_option("--kind", set_kind, "set family");
  sr->add_option("--limit", set_limit, "generate elements up to N");
  sr->add_option("--k", sr_k, "use the first k elements (default all)");
  sr->add_option("--alpha", sr_alpha, "number of summands");
  sr->add_option("--n", sr_n, "largest j reported (default N)");
  sr->add_option("--seed", set_seed, "seed for random sets");
  sr->callback([&] {
    auto a = generate(kind_of(), set_limit);
    auto rc = r_alpha(a, sr_k ? sr_k : a.size(), sr_alpha, sr_n ? sr_n : static_cast<std::size_t>(set_limit));
    print({{"alpha", rc.alpha}, {"counts", rc.counts}, {"mean_square", rc.mean_square}});
  });

  // run
  auto* run = app.add_subcommand("run", "Run a named experiment E1..E11");
  std::string run_id, run_config, run_out, run_format = "json";
  std::optional<std::uint64_t> run_seed;
  bool run_meta = false;
  run->add_option("id", run_id, "experiment id")->required();
  run->add_option("--config", run_config, "INI config file");
  run->add_option("--seed", run_seed, "seed; overrides the config file and THINSET_SEED");
  run->add_option("--out", run_out, "write the report here instead of stdout");
  run->add_option("--format", run_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  run->add_flag("--metadata", run_meta, "include wall-clock runtime in the JSON report");
  run->callback([&] {
    Config cfg = run_config.empty() ? Config{} : Config::load_file(run_config);
    if (run_seed) cfg.set("seed", std::to_string(*run_seed));
    auto rep = run_experiment(run_id, cfg);
    if (!run_out.empty()) rep.artifacts.push_back(run_out);
    auto bytes = emit_report(rep, parse_report_format(run_format), run_meta);
    if (run_out.empty()) {
      std::cout << bytes;
    } else {
      write_text_file(run_out, bytes);
    }
    for (const auto& c : rep.checks)
      std::cerr << (c.pass ? "PASS " : "FAIL ") << rep.experiment_id << " " << c.name << " " << c.statistic << "\n";
    if (!rep.all_pass()) exit_code = kExitFail;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return exit_code;
}
