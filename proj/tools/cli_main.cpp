#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "su2comm/comm_geom.hpp"
#include "su2comm/gradflow.hpp"
#include "su2comm/homalg/rings.hpp"
#include "su2comm/homalg/scenario.hpp"
#include "su2comm/homeo.hpp"
#include "su2comm/retract.hpp"
#include "su2comm/waves.hpp"

using namespace su2comm;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

#ifndef SU2COMM_DATA_DIR
#define SU2COMM_DATA_DIR "data"
#endif

struct CommonOpts {
  std::uint64_t seed = 0;
  double tol = 0;  // 0 = library defaults
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--seed", c.seed, "RNG seed");
  cmd->add_option("--tol", c.tol, "override the relative tolerance");
  cmd->add_option("--out", c.out, "output file (default stdout)");
  cmd->add_option("--format", c.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

int emit(const CommonOpts& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(c.out);
  if (!f) {
    std::cerr << "cannot open output file: " << c.out << "\n";
    return 2;
  }
  f << text;
  return 0;
}

ExtendedP parse_p(const std::string& s) {
  if (s == "0+") return ExtendedP::zero_plus();
  if (s == "0-") return ExtendedP::zero_minus();
  const double v = std::stod(s);
  if (v == 0) throw Error("P = 0 must be written as 0+ or 0-");
  if (v < -1 || v > 1) throw Error("P out of [-1, 1]");
  return ExtendedP::nonzero(v);
}

std::string p_label(const ExtendedP& p) {
  if (p.kind == ExtendedP::Kind::ZeroPlus) return "0+";
  if (p.kind == ExtendedP::Kind::ZeroMinus) return "0-";
  std::ostringstream os;
  os << p.value;
  return os.str();
}

json graded_to_json(const homalg::GradedGroup& g) {
  json out = json::object();
  for (const auto& [q, f] : g.factors) out[std::to_string(q)] = f;
  return out;
}

// ---------------------------------------------------------------- waves

int run_waves(const CommonOpts& c, const std::vector<double>& thetas,
              const std::vector<std::string>& ps, int samples) {
  struct Curve {
    double theta;
    ExtendedP p;
    std::vector<CylinderPoint> pts;
  };
  std::vector<Curve> curves;
  for (double th : thetas) {
    if (th < 0 || th > kPi) {
      std::cerr << "theta out of [0, pi]\n";
      return 2;
    }
    for (const auto& ptext : ps) {
      Curve cur{th, parse_p(ptext), {}};
      const WaveId w{th, cur.p};
      if (w.is_square()) {
        const ArcTable& tab = arc_table(w);
        for (int k = 0; k < samples; ++k)
          cur.pts.push_back(eval_arc(tab, 2 * kPi * k / samples));
      } else {
        const double phi0 = th / 2;
        const int dir = -cur.p.sign();
        for (int k = 0; k < samples; ++k) {
          const double phi = normalize_angle(phi0 + dir * (2 * kPi * k / samples));
          cur.pts.push_back({phi, wave_q(w, phi)});
        }
      }
      curves.push_back(std::move(cur));
    }
  }
  if (c.format == "csv") {
    std::ostringstream os;
    os << "theta,P,phi,Q\n";
    os.precision(17);
    for (const auto& cur : curves)
      for (const auto& pt : cur.pts)
        os << cur.theta << "," << p_label(cur.p) << "," << pt.phi << "," << pt.q << "\n";
    return emit(c, os.str());
  }
  json out = json::array();
  for (const auto& cur : curves) {
    json pts = json::array();
    for (const auto& pt : cur.pts) pts.push_back({pt.phi, pt.q});
    out.push_back({{"theta", cur.theta}, {"P", p_label(cur.p)}, {"points", pts}});
  }
  return emit(c, out.dump(2) + "\n");
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string name;
  double max_defect = 0;
  double bound = 0;
  bool pass = true;

  void record(double d) {
    max_defect = std::max(max_defect, d);
    pass = max_defect <= bound;
  }
};

void verify_quat(HaarSampler& rng, std::vector<Check>& out) {
  Check explog{"exp_log_roundtrip", 0, 1e-9};
  Check projsign{"projectivize_sign_invariance", 0, 0};
  Check equivar{"translate_is_group_action", 0, 1e-12};
  for (int i = 0; i < 500; ++i) {
    const GroupElement g = rng();
    if (std::abs(g.trace()) < 2 - 1e-6)
      explog.record(dist(su2comm::exp(su2comm::log(g)).q, g.q));
    GroupElement neg;
    neg.q = -g.q;
    projsign.record(rp3_distance(projectivize(g), projectivize(neg)));
    const TorusElement t1(rng.uniform(0, 2 * kPi)), t2(rng.uniform(0, 2 * kPi));
    equivar.record(rp3_distance(torus_translate(t1 * t2, projectivize(g)),
                                torus_translate(t1, torus_translate(t2, projectivize(g)))));
  }
  out.push_back(explog);
  out.push_back(projsign);
  out.push_back(equivar);
}

void verify_geom(HaarSampler& rng, std::vector<Check>& out) {
  Check recon{"coords_reconstruct_roundtrip", 0, 1e-7};
  Check canon{"canonical_relation", 0, 1e-7};
  Check kform{"k_factor_forms_agree", 0, 1e-12};
  for (int i = 0; i < 500; ++i) {
    const double theta = rng.uniform(0.05, kPi);
    const auto [g, h] = phi_inv(theta, projectivize(rng()));
    const ThetaCoords tc = to_coords(theta, g, h);
    const auto [g2, h2] = tc.reconstruct();
    recon.record(std::max(dist(g.q, g2.q), dist(h.q, h2.q)));
    canon.record(std::abs(canonical_residual(tc)));
    const double phi = rng.uniform(0, 2 * kPi);
    kform.record(std::abs(k_factor(phi, theta) - k_factor_ratio(phi, theta)));
  }
  out.push_back(recon);
  out.push_back(canon);
  out.push_back(kform);
}

void verify_homeo(HaarSampler& rng, std::vector<Check>& out) {
  Check resid{"phi_inv_on_level_set", 0, 1e-7};
  Check round{"rp3_roundtrip", 0, 1e-6};
  Check equi{"t_equivariance", 0, 1e-7};
  for (double theta : {0.3, kPi / 2, kPi})
    for (int i = 0; i < 300; ++i) {
      const ProjectivePoint p = projectivize(rng());
      const auto [g, h] = phi_inv(theta, p);
      resid.record(level_residual(theta, g, h));
      round.record(rp3_distance(phi_fwd(theta, g, h), p));
      equi.record(t_equivariance_defect(theta, TorusElement(rng.uniform(0, 2 * kPi)), p));
    }
  out.push_back(resid);
  out.push_back(round);
  out.push_back(equi);
}

void verify_retract(HaarSampler& rng, std::vector<Check>& out) {
  Check level{"r_target_level", 0, 1e-7};
  Check ident{"r_identity_at_t1", 0, 1e-9};
  Check mures{"rho_preserves_mu", 0, 1e-6};
  for (int i = 0; i < 100; ++i) {
    const double theta = rng.uniform(0.1, kPi - 0.1);
    const auto [g, h] = phi_inv(theta, projectivize(rng()));
    const double t = rng.uniform(0.05, 1.0);
    const auto [gt, ht] = retract_r(g, h, theta, t);
    level.record(level_residual(t * theta, gt, ht));
    const auto [g1, h1] = retract_r(g, h, theta, 1.0);
    ident.record(std::max(dist(g.q, g1.q), dist(h.q, h1.q)));

    const auto [gp, hp] = phi_inv(kPi - theta, projectivize(rng()));
    const APoint ap = make_apoint(g, h, gp, hp);
    mures.record(mu_residual(rho(ap, rng.uniform(0.0, 1.0))));
  }
  out.push_back(level);
  out.push_back(ident);
  out.push_back(mures);
}

void verify_flow(HaarSampler& rng, std::vector<Check>& out) {
  Check conv{"ascent_reaches_max", 0, 0.01};
  Check mono{"ascent_monotone", 0, 1e-9};
  int fail = 0;
  const int n = 40;
  for (int i = 0; i < n; ++i) {
    FlowConfig cfg;
    cfg.f_tol = 1e-6;
    const FlowTrace tr = flow(rng(), rng(), cfg);
    if (std::abs(tr.final().f - 2) > 1e-6) ++fail;
    for (size_t k = 1; k < tr.states.size(); ++k)
      mono.record(std::max(0.0, tr.states[k - 1].f - tr.states[k].f));
  }
  conv.record(double(fail) / n);
  out.push_back(conv);
  out.push_back(mono);
}

void verify_homalg(std::vector<Check>& out) {
  const std::string dir = std::string(SU2COMM_DATA_DIR) + "/scenarios/";
  struct Entry {
    const char* file;
    const char* core_table;
    const char* assembled_table;  // nullptr when none
  };
  const Entry entries[] = {
      {"t_frak.json", "table_T", nullptr},
      {"a_check.json", "table_A_core", "table_A"},
      {"a_bar.json", "table_Abar", "table_E_LA"},
      {"m_check.json", "table_Mcheck", "table_M"},
  };
  for (const auto& e : entries) {
    const homalg::Scenario sc = homalg::load_scenario(dir + e.file);
    Check core{e.core_table, 0, 0};
    try {
      const homalg::GradedGroup got = mv_solve_z(sc);
      core.pass = sc.expected && got == *sc.expected;
    } catch (const std::exception&) {
      core.pass = false;
    }
    out.push_back(core);
    if (!e.assembled_table) continue;
    Check asm_{e.assembled_table, 0, 0};
    try {
      const homalg::GradedGroup got = assemble_decomposition(
          mv_solve_z(sc), sc.wedge_summands, 0, sc.top_degree);
      asm_.pass = sc.expected_assembled && got == *sc.expected_assembled;
    } catch (const std::exception&) {
      asm_.pass = false;
    }
    out.push_back(asm_);
  }
  Check rings{"ring_and_characteristic_classes", 0, 0};
  try {
    rings.pass = homalg::ring_table_check(homalg::standard_ring_table()) &&
                 homalg::thaddeus_check(3, 2) == 4 &&
                 homalg::gysin_infer_lambda(homalg::gysin_solve({1, 4, 1})) == 4 &&
                 homalg::wall_invariants(2, 12, 4).congruence_ok;
  } catch (const std::exception&) {
    rings.pass = false;
  }
  out.push_back(rings);
}

int run_verify(const CommonOpts& c, const std::string& suite) {
  if (c.tol > 0) tol().eps_rel = c.tol;
  HaarSampler rng(c.seed ? c.seed : 20260823);
  std::vector<Check> checks;
  const bool all = suite == "all";
  if (all || suite == "quat") verify_quat(rng, checks);
  if (all || suite == "geom") verify_geom(rng, checks);
  if (all || suite == "homeo") verify_homeo(rng, checks);
  if (all || suite == "retract") verify_retract(rng, checks);
  if (all || suite == "flow") verify_flow(rng, checks);
  if (all || suite == "homalg") verify_homalg(checks);
  json out = json::array();
  bool ok = true;
  for (const auto& ch : checks) {
    out.push_back({{"invariant", ch.name},
                   {"max_defect", ch.max_defect},
                   {"bound", ch.bound},
                   {"pass", ch.pass}});
    ok = ok && ch.pass;
  }
  const int rc = emit(c, json({{"suite", suite}, {"checks", out}, {"pass", ok}}).dump(2) + "\n");
  return rc != 0 ? rc : (ok ? 0 : 1);
}

// ---------------------------------------------------------------- flow

int run_flow(const CommonOpts& c, int seeds, const std::string& direction, double step,
             int max_steps) {
  HaarSampler rng(c.seed ? c.seed : 1);
  FlowConfig cfg;
  cfg.step = step;
  cfg.max_steps = max_steps;
  cfg.f_tol = 1e-6;
  cfg.direction = direction == "descend" ? FlowDirection::Descend : FlowDirection::Ascend;
  const double target = cfg.direction == FlowDirection::Ascend ? 2.0 : -2.0;
  json starts = json::array();
  int converged = 0;
  for (int i = 0; i < seeds; ++i) {
    const FlowTrace tr = flow(rng(), rng(), cfg);
    const char* why = tr.terminated_by == FlowStop::FTol ? "f_tol"
                      : tr.terminated_by == FlowStop::GradTol ? "grad_tol"
                                                              : "max_steps";
    if (std::abs(tr.final().f - target) < 1e-6) ++converged;
    starts.push_back({{"final_f", tr.final().f},
                      {"steps", (int)tr.states.size() - 1},
                      {"terminated_by", why}});
  }
  json out = {{"direction", direction},
              {"starts", starts},
              {"converged", converged},
              {"total", seeds},
              {"convergence_rate", seeds ? double(converged) / seeds : 0.0}};
  return emit(c, out.dump(2) + "\n");
}

// ---------------------------------------------------------------- homeo

int run_homeo(const CommonOpts& c, double theta, int trials) {
  HaarSampler rng(c.seed ? c.seed : 1);
  double max_resid = 0, max_round = 0, max_equiv = 0;
  for (int i = 0; i < trials; ++i) {
    const ProjectivePoint p = projectivize(rng());
    const auto [g, h] = phi_inv(theta, p);
    max_resid = std::max(max_resid, level_residual(theta, g, h));
    max_round = std::max(max_round, rp3_distance(phi_fwd(theta, g, h), p));
    max_equiv = std::max(max_equiv,
                         t_equivariance_defect(theta, TorusElement(rng.uniform(0, 2 * kPi)), p));
  }
  json out = {{"theta", theta},
              {"trials", trials},
              {"max_level_residual", max_resid},
              {"max_roundtrip_defect", max_round},
              {"max_equivariance_defect", max_equiv}};
  return emit(c, out.dump(2) + "\n");
}

// ---------------------------------------------------------------- retract

int run_retract(const CommonOpts& c, int trials) {
  HaarSampler rng(c.seed ? c.seed : 1);
  double max_level = 0, max_mu = 0, max_tau = 0;
  for (int i = 0; i < trials; ++i) {
    const double theta = rng.uniform(0.1, kPi - 0.1);
    const auto [g, h] = phi_inv(theta, projectivize(rng()));
    const double t = rng.uniform(0.0, 1.0);
    const auto [gt, ht] = retract_r_prime(g, h, theta, t);
    max_level = std::max(max_level, level_residual(t * theta + (1 - t) * kPi, gt, ht));

    const auto [gp, hp] = phi_inv(kPi - theta, projectivize(rng()));
    const APoint ap = make_apoint(g, h, gp, hp);
    max_mu = std::max(max_mu, mu_residual(rho(ap, t)));
    const TorusElement tt(rng.uniform(0, 2 * kPi));
    const APoint moved = make_apoint(
        conjugate(tt.element(), ap.reps[0]), conjugate(tt.element(), ap.reps[1]),
        conjugate(tt.element(), ap.reps[2]), conjugate(tt.element(), ap.reps[3]));
    max_tau = std::max(max_tau, rp3_distance(transition_tau_homotoped(ap),
                                             transition_tau_homotoped(moved)));
  }
  json out = {{"trials", trials},
              {"max_level_residual", max_level},
              {"max_mu_residual", max_mu},
              {"max_tau_conjugation_defect", max_tau}};
  return emit(c, out.dump(2) + "\n");
}

// ---------------------------------------------------------------- cohomology

int run_cohomology(const CommonOpts& c, const std::string& path) {
  homalg::Scenario sc;
  try {
    sc = homalg::load_scenario(path);
  } catch (const std::exception& ex) {
    std::cerr << "cannot load scenario: " << ex.what() << "\n";
    return 2;
  }
  json out = {{"name", sc.name}};
  bool ok = true;
  try {
    const homalg::F2SolveResult f2 = mv_solve_f2(sc);
    json dims = json::object();
    for (const auto& [q, d] : f2.dims) dims[std::to_string(q)] = d;
    out["f2_dims"] = dims;
    json kg = json::object();
    for (const auto& [q, gens] : f2.kernel_gens)
      if (!gens.empty()) kg[std::to_string(q)] = gens;
    out["f2_kernel_generators"] = kg;
    if (!sc.expected_f2.empty()) {
      bool m = true;
      for (int q = 0; q <= sc.top_degree; ++q) {
        const int want = sc.expected_f2.count(q) ? sc.expected_f2.at(q) : 0;
        const int got = f2.dims.count(q) ? f2.dims.at(q) : 0;
        m = m && want == got;
      }
      out["f2_matches_expected"] = m;
      ok = ok && m;
    }
    const homalg::GradedGroup hz = mv_solve_z(sc);
    out["integral"] = graded_to_json(hz);
    if (sc.expected) {
      out["integral_matches_expected"] = hz == *sc.expected;
      ok = ok && hz == *sc.expected;
    }
    if (!sc.wedge_summands.empty()) {
      const homalg::GradedGroup assembled =
          assemble_decomposition(hz, sc.wedge_summands, 0, sc.top_degree);
      out["assembled"] = graded_to_json(assembled);
      if (sc.expected_assembled) {
        out["assembled_matches_expected"] = assembled == *sc.expected_assembled;
        ok = ok && assembled == *sc.expected_assembled;
      }
    }
  } catch (const std::exception& ex) {
    std::cerr << "solve failed: " << ex.what() << "\n";
    return 1;
  }
  out["pass"] = ok;
  const int rc = emit(c, out.dump(2) + "\n");
  return rc != 0 ? rc : (ok ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commutator-geometry toolkit"};
  app.require_subcommand(1);

  CommonOpts c_waves, c_verify, c_flow, c_homeo, c_retract, c_coh;

  auto* waves_cmd = app.add_subcommand("waves", "emit wave curves");
  std::vector<double> thetas{1.2, 0.5, 0.0};
  std::vector<std::string> ps{"0.70710678118654752"};
  int samples = 256;
  waves_cmd->add_option("--theta", thetas, "levels");
  waves_cmd->add_option("--p", ps, "P values (0+ / 0- for the signed zeros)");
  waves_cmd->add_option("--samples", samples, "rows per curve");
  add_common(waves_cmd, c_waves);
  c_waves.format = "csv";

  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  std::string suite = "all";
  verify_cmd->add_option("suite", suite, "all|quat|geom|homeo|retract|flow|homalg")
      ->check(CLI::IsMember({"all", "quat", "geom", "homeo", "retract", "flow", "homalg"}));
  add_common(verify_cmd, c_verify);

  auto* flow_cmd = app.add_subcommand("flow", "batch gradient flows");
  int seeds = 50, max_steps = 50000;
  double step = 0.02;
  std::string direction = "ascend";
  flow_cmd->add_option("--seeds", seeds, "number of starts");
  flow_cmd->add_option("--direction", direction)->check(CLI::IsMember({"ascend", "descend"}));
  flow_cmd->add_option("--step", step);
  flow_cmd->add_option("--max-steps", max_steps);
  add_common(flow_cmd, c_flow);

  auto* homeo_cmd = app.add_subcommand("homeo", "level-set homeomorphism checks");
  double theta = kPi / 2;
  int trials = 200;
  homeo_cmd->add_option("--theta", theta);
  homeo_cmd->add_option("--trials", trials);
  add_common(homeo_cmd, c_homeo);

  auto* retract_cmd = app.add_subcommand("retract", "retraction checks");
  int rtrials = 100;
  retract_cmd->add_option("--trials", rtrials);
  add_common(retract_cmd, c_retract);

  auto* coh_cmd = app.add_subcommand("cohomology", "solve a scenario file");
  std::string path;
  coh_cmd->add_option("scenario", path, "scenario JSON path")->required();
  add_common(coh_cmd, c_coh);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (waves_cmd->parsed()) return run_waves(c_waves, thetas, ps, samples);
    if (verify_cmd->parsed()) return run_verify(c_verify, suite);
    if (flow_cmd->parsed()) return run_flow(c_flow, seeds, direction, step, max_steps);
    if (homeo_cmd->parsed()) return run_homeo(c_homeo, theta, trials);
    if (retract_cmd->parsed()) return run_retract(c_retract, rtrials);
    if (coh_cmd->parsed()) return run_cohomology(c_coh, path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
