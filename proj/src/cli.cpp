#include "ptwave/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptwave/diagnostics.hpp"
#include "ptwave/errors.hpp"
#include "ptwave/format.hpp"
#include "ptwave/locus.hpp"
#include "ptwave/riemann.hpp"

namespace ptwave::cli {

namespace {

const char* kinetics_name(kinetics k) {
  switch (k) {
    case kinetics::dissipation_free: return "dissipation-free";
    case kinetics::maximally_dissipative: return "maximally-dissipative";
    case kinetics::auto_select: default: return "auto";
  }
}

const char* regime_name(loading_regime r) {
  switch (r) {
    case loading_regime::weak: return "weak";
    case loading_regime::intermediate: return "intermediate";
    case loading_regime::strong: default: return "strong";
  }
}

const char* case_name(material_case mc) {
  switch (mc) {
    case material_case::a1: return "A1";
    case material_case::a2: return "A2";
    case material_case::a3: return "A3";
    case material_case::b: return "B";
    case material_case::c: default: return "C";
  }
}

const char* kind_name(discontinuity_kind k) {
  switch (k) {
    case discontinuity_kind::shock: return "shock";
    case discontinuity_kind::degenerate_shock: return "degenerate-shock";
    case discontinuity_kind::phase_boundary: default: return "phase-boundary";
  }
}

const char* sonic_name(sonic_character s) {
  switch (s) {
    case sonic_character::subsonic: return "subsonic";
    case sonic_character::sonic: return "sonic";
    case sonic_character::supersonic: default: return "supersonic";
  }
}

// key=value block (text) or key,value rows (csv); numeric text lines carry a
// six-digit human reading as a trailing comment.
struct block_writer {
  std::ostream& out;
  bool csv;

  void comment(const std::string& text) {
    if (!csv) out << "# " << text << '\n';
  }
  void num(const std::string& key, double v) {
    if (csv) {
      out << key << ',' << fmt::full(v) << '\n';
    } else {
      out << key << '=' << fmt::full(v) << "  # " << fmt::sig6(v) << '\n';
    }
  }
  void str(const std::string& key, const std::string& v) {
    out << key << (csv ? ',' : '=') << v << '\n';
  }
  void flag(const std::string& key, bool v) { str(key, v ? "1" : "0"); }
};

material make_material(const run_config& cfg) {
  return material(cfg.young, cfg.density, cfg.alpha, cfg.beta);
}

void write_material_block(block_writer& w, const run_config& cfg) {
  w.num("alpha", cfg.alpha);
  w.num("beta", cfg.beta);
  w.num("young", cfg.young);
  w.num("density", cfg.density);
}

bool use_csv(const run_config& cfg, bool csv_default) {
  if (cfg.format == "csv") return true;
  if (cfg.format == "text") return false;
  return csv_default;
}

// ---- validate ----------------------------------------------------------

struct check_tally {
  std::ostream& out;
  int failed = 0;
  int total = 0;

  void record(const std::string& name, bool ok, const std::string& detail) {
    ++total;
    if (!ok) ++failed;
    out << name << ": " << (ok ? "PASS" : "FAIL") << " (" << detail << ")\n";
  }
  void residual(const std::string& name, double value, double tol) {
    std::ostringstream d;
    d << "|" << fmt::sig6(value) << "| <= " << fmt::sig6(tol);
    record(name, std::fabs(value) <= tol, d.str());
  }
};

double chord_residual(const material& m, const discontinuity& d) {
  if (d.gamma_front == d.gamma_back) return 0.0;
  const double slope = (m.stress(d.gamma_front) - m.stress(d.gamma_back)) /
                       (d.gamma_front - d.gamma_back);
  const double scale = m.density * std::fmax(d.speed * d.speed, m.c0 * m.c0);
  return (m.density * d.speed * d.speed - slope) / scale;
}

void check_jump(check_tally& t, const material& m, const discontinuity& d, double xi1) {
  const jump_residual_set r = jump_residuals(m, d);
  t.residual("jump_residual_r1", r.r1_normalized, 1e-10);
  t.residual("jump_residual_r2", r.r2_normalized, 1e-10);
  t.residual("chord_identity", chord_residual(m, d), 1e-10);
  if (d.kind == discontinuity_kind::phase_boundary) {
    const admissibility_report rep = admissibility(m, d, xi1);
    t.record("admissible_dissipation_sign", rep.dissipation_sign_ok,
             "gamma+ + gamma- >= alpha+beta");
    t.record("admissible_trailing", rep.trailing_ok,
             "2 gamma+ + gamma- <= 3(alpha+beta)/2 and s_dot <= xi1");
    t.record("admissible_speed_real", rep.speed_real_ok,
             rep.speed_real_vacuous ? "vacuous: g(gamma+) not real" : "gamma- >= g(gamma+)");
    const double ab = m.alpha + m.beta;
    const double d_scale = m.young_modulus * ab * ab * ab * ab * m.c0;
    t.record("dissipation_nonnegative", rep.dissipation_rate >= -1e-12 * d_scale,
             "D = " + fmt::sig6(rep.dissipation_rate));
  }
}

int validate_solution_file(const run_config& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.solution_path);
  if (!in) {
    err << "error: cannot open solution file " << cfg.solution_path << '\n';
    return 2;
  }
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  auto need = [&](const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) {
      throw std::invalid_argument("solution file is missing key '" + key + "'");
    }
    return std::stod(it->second);
  };
  auto optional_num = [&](const std::string& key, double fallback) {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : std::stod(it->second);
  };

  const material m(optional_num("young", 1.0), optional_num("density", 1.0),
                   need("alpha"), need("beta"));
  discontinuity d;
  d.speed = need("s_dot");
  d.gamma_front = need("gamma_plus");
  d.gamma_back = need("gamma_minus");
  d.v_front = need("v_plus");
  d.v_back = need("v_minus");
  const auto kind_it = kv.find("kind");
  d.kind = discontinuity_kind::phase_boundary;
  if (kind_it != kv.end()) {
    if (kind_it->second == "shock") d.kind = discontinuity_kind::shock;
    else if (kind_it->second == "degenerate-shock") d.kind = discontinuity_kind::degenerate_shock;
  }

  check_tally t{out};
  const double xi1 = optional_num("xi1", m.wave_speed(d.gamma_front));
  check_jump(t, m, d, xi1);
  out << "validation: " << (t.total - t.failed) << " passed, " << t.failed << " failed\n";
  return t.failed > 0 ? 4 : 0;
}

int validate_solved(const run_config& cfg, std::ostream& out) {
  const material m = make_material(cfg);
  const wave_solution sol = solve(m, cfg.velocity, cfg.kinetics_request);
  check_tally t{out};

  if (sol.jump) {
    const double xi1 = sol.fan ? sol.fan->xi_lo : m.wave_speed(sol.jump->gamma_front);
    check_jump(t, m, *sol.jump, xi1);

    if (sol.jump->kind == discontinuity_kind::phase_boundary) {
      if (sol.resolved_kinetics == kinetics::maximally_dissipative) {
        t.residual("md_sonic_front",
                   (sol.jump->speed - m.wave_speed(sol.jump->gamma_front)) / m.c0, 1e-10);
        t.residual("md_strain_identity",
                   (2.0 * sol.jump->gamma_front + sol.jump->gamma_back) /
                           (1.5 * (m.alpha + m.beta)) -
                       1.0,
                   1e-12);
        const double f = driving_force(m, *sol.jump);
        t.residual("md_kinetic_relation",
                   kinetic_relation_md_residual(m, *sol.jump) / f, 1e-9);
      }
      if (sol.resolved_kinetics == kinetics::dissipation_free && sol.fan) {
        t.residual("df_strain_identity",
                   (sol.jump->gamma_front + sol.jump->gamma_back) / (m.alpha + m.beta) - 1.0,
                   1e-12);
        const double ab = m.alpha + m.beta;
        t.residual("df_zero_driving_force",
                   driving_force(m, *sol.jump) / (m.young_modulus * ab * ab * ab * ab),
                   1e-12);
        t.residual("df_equal_sound_speeds",
                   (m.wave_speed(sol.jump->gamma_front) -
                    m.wave_speed(sol.jump->gamma_back)) /
                       m.c0,
                   1e-10);
      }
    }
  }

  if (sol.fan) {
    const double tol_g = 1e-10 * m.alpha;
    const double tol_v = 1e-10 * std::fmax(cfg.velocity, m.c0);
    const bool edge_is_jump = sol.jump && sol.jump->speed >= sol.fan->xi_lo;
    if (!edge_is_jump) {
      const bar_point l = sol.evaluate_left_limit(sol.fan->xi_lo);
      const bar_point r = sol.evaluate(sol.fan->xi_lo);
      t.record("fan_trailing_edge_continuity",
               std::fabs(l.strain - r.strain) <= tol_g &&
                   std::fabs(l.velocity - r.velocity) <= tol_v,
               "limits at xi1 agree");
    }
    const bar_point l = sol.evaluate_left_limit(sol.fan->xi_hi);
    const bar_point r = sol.evaluate(sol.fan->xi_hi);
    t.record("fan_leading_edge_continuity",
             std::fabs(l.strain - r.strain) <= tol_g &&
                 std::fabs(l.velocity - r.velocity) <= tol_v,
             "limits at xi2 agree");
  }

  t.residual("plate_boundary_velocity",
             (sol.evaluate(0.0).velocity + cfg.velocity) / cfg.velocity, 1e-12);
  const double ahead = 1.0001 * sol.wave_edge_speeds().back();
  const bar_point undisturbed = sol.evaluate(ahead);
  t.record("undisturbed_ahead", undisturbed.strain == 0.0 && undisturbed.velocity == 0.0,
           "state beyond the fastest wave is (0, 0)");

  out << "validation: " << (t.total - t.failed) << " passed, " << t.failed << " failed\n";
  return t.failed > 0 ? 4 : 0;
}

}  // namespace

int cmd_thresholds(const run_config& cfg, std::ostream& out) {
  const material m = make_material(cfg);
  const threshold_set th = compute_thresholds(m);
  const material_case mc = classify_material(m);
  block_writer w{out, use_csv(cfg, false)};

  w.comment("material thresholds");
  write_material_block(w, cfg);
  w.num("c0", m.c0);
  w.num("c1", m.c1);
  w.num("c2", m.c2);
  w.num("h", m.h);
  w.num("h_star", h_star());
  w.num("v_star", th.v_star);
  if (th.v_double_star) {
    w.num("v_double_star", *th.v_double_star);
  } else {
    w.str("v_double_star",
          "undefined (h=" + fmt::sig6(m.h) + " < sqrt(3))");
  }
  w.num("v_triple_star", th.v_triple_star);
  w.str("material_case", case_name(mc));
  w.str("auto_kinetics", kinetics_name(select_kinetics(m, kinetics::auto_select)));
  return 0;
}

int cmd_solve(const run_config& cfg, std::ostream& out) {
  const material m = make_material(cfg);
  const wave_solution sol = solve(m, cfg.velocity, cfg.kinetics_request);
  block_writer w{out, use_csv(cfg, false)};

  w.comment("wave pattern: " + sol.pattern_summary());
  write_material_block(w, cfg);
  w.num("velocity", cfg.velocity);
  w.str("regime", regime_name(sol.regime));
  w.flag("degenerate_shock", sol.degenerate_shock);
  w.str("kinetics_requested", kinetics_name(cfg.kinetics_request));
  w.str("kinetics", kinetics_name(sol.resolved_kinetics));
  w.flag("kinetics_overridden", sol.kinetics_overridden);
  w.num("plate_strain", sol.plate_strain);

  if (sol.fan) {
    w.num("xi1", sol.fan->xi_lo);
    w.num("xi2", sol.fan->xi_hi);
  }
  if (sol.jump) {
    const discontinuity& d = *sol.jump;
    w.str("kind", kind_name(d.kind));
    w.num("gamma_plus", d.gamma_front);
    w.num("gamma_minus", d.gamma_back);
    w.num("v_plus", d.v_front);
    w.num("v_minus", d.v_back);
    w.num("s_dot", d.speed);
    w.num("sigma_plus", m.stress(d.gamma_front));
    w.num("sigma_minus", m.stress(d.gamma_back));

    const double f = driving_force(m, d);
    const double half_width = 0.5 * (m.beta - m.alpha);
    w.num("driving_force", f);
    w.num("driving_force_normalized",
          f / (m.young_modulus * half_width * half_width * half_width * half_width));
    w.num("dissipation_rate", dissipation_rate(m, d));

    const jump_residual_set r = jump_residuals(m, d);
    w.num("jump_r1", r.r1);
    w.num("jump_r2", r.r2);
    w.num("jump_r1_normalized", r.r1_normalized);
    w.num("jump_r2_normalized", r.r2_normalized);

    if (d.kind == discontinuity_kind::phase_boundary) {
      const double xi1 = sol.fan ? sol.fan->xi_lo : m.wave_speed(d.gamma_front);
      const admissibility_report rep = admissibility(m, d, xi1);
      w.flag("admissible_dissipation_sign", rep.dissipation_sign_ok);
      w.flag("admissible_trailing", rep.trailing_ok);
      w.flag("admissible_speed_real", rep.speed_real_ok);
      w.flag("speed_real_vacuous", rep.speed_real_vacuous);
      w.str("sonic_front", sonic_name(rep.sonic_front));
      w.str("sonic_back", sonic_name(rep.sonic_back));
      if (sol.resolved_kinetics == kinetics::maximally_dissipative) {
        w.num("kinetic_relation_residual", kinetic_relation_md_residual(m, d));
      }
    } else {
      auto classify = [](double s, double c) {
        if (std::fabs(s - c) <= 1e-9 * std::fmax(s, c)) return sonic_character::sonic;
        return s < c ? sonic_character::subsonic : sonic_character::supersonic;
      };
      w.str("sonic_front", sonic_name(classify(d.speed, m.c0)));
      w.str("sonic_back", sonic_name(classify(d.speed, m.wave_speed(d.gamma_back))));
    }
  }
  return 0;
}

int cmd_profile(const run_config& cfg, std::ostream& out) {
  const material m = make_material(cfg);
  const wave_solution sol = solve(m, cfg.velocity, cfg.kinetics_request);
  const double fastest = sol.wave_edge_speeds().back();
  const double x_max = cfg.xmax > 0.0 ? cfg.xmax : 1.25 * fastest * cfg.time;
  const auto rows = sol.profile(cfg.time, x_max, cfg.samples);

  if (use_csv(cfg, true)) {
    out << "x,gamma,v,sigma\n";
    for (const auto& r : rows) {
      out << fmt::full(r.x) << ',' << fmt::full(r.strain) << ',' << fmt::full(r.velocity)
          << ',' << fmt::full(r.stress) << '\n';
    }
  } else {
    out << "# profile at t=" << fmt::sig6(cfg.time) << ": " << sol.pattern_summary() << '\n';
    out << "# " << std::setw(12) << "x" << std::setw(14) << "gamma" << std::setw(14) << "v"
        << std::setw(14) << "sigma" << '\n';
    for (const auto& r : rows) {
      out << "  " << std::setw(12) << fmt::sig6(r.x) << std::setw(14) << fmt::sig6(r.strain)
          << std::setw(14) << fmt::sig6(r.velocity) << std::setw(14) << fmt::sig6(r.stress)
          << '\n';
    }
  }
  return 0;
}

int cmd_locus(const run_config& cfg, std::ostream& out) {
  const material m = make_material(cfg);
  const auto curves = all_curves(m, cfg.samples, cfg.cd_phi_max);

  if (use_csv(cfg, true)) {
    out << "curve,param,s_hat,v_hat,gamma_plus,gamma_minus\n";
    for (const auto& c : curves) {
      const char* name = locus_label_name(c.label);
      for (const auto& s : c.samples) {
        out << name << ',' << fmt::full(s.param) << ',' << fmt::full(s.s_hat) << ','
            << fmt::full(s.v_hat) << ',' << fmt::full(s.gamma_plus) << ','
            << fmt::full(s.gamma_minus) << '\n';
      }
    }
  } else {
    for (const auto& c : curves) {
      out << "# curve " << locus_label_name(c.label) << " (param " << c.parameter_name
          << ")\n";
      out << "# " << std::setw(12) << c.parameter_name << std::setw(14) << "s_hat"
          << std::setw(14) << "v_hat" << std::setw(14) << "gamma+" << std::setw(14)
          << "gamma-" << '\n';
      for (const auto& s : c.samples) {
        out << "  " << std::setw(12) << fmt::sig6(s.param) << std::setw(14)
            << fmt::sig6(s.s_hat) << std::setw(14) << fmt::sig6(s.v_hat) << std::setw(14)
            << fmt::sig6(s.gamma_plus) << std::setw(14) << fmt::sig6(s.gamma_minus) << '\n';
      }
    }
  }
  return 0;
}

int cmd_validate(const run_config& cfg, std::ostream& out) {
  if (!cfg.solution_path.empty()) {
    return validate_solution_file(cfg, out, out);
  }
  return validate_solved(cfg, out);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  run_config cfg;
  std::string kinetics_text = "auto";

  CLI::App app{"semi-analytic impact waves in a phase-transforming elastic bar"};
  app.set_config("--config", "", "flat key=value configuration file; flags override it");
  app.add_option("--alpha", cfg.alpha, "lower transformation strain");
  app.add_option("--beta", cfg.beta, "upper transformation strain");
  app.add_option("--young", cfg.young, "Young's modulus")->capture_default_str();
  app.add_option("--density", cfg.density, "reference density")->capture_default_str();
  app.add_option("--velocity", cfg.velocity, "impact speed V");
  app.add_option("--kinetics", kinetics_text, "phase-boundary kinetics")
      ->check(CLI::IsMember({"auto", "df", "md"}))
      ->capture_default_str();
  app.add_option("--samples", cfg.samples, "sample count per curve or profile")
      ->check(CLI::Range(2, 10000000))
      ->capture_default_str();
  app.add_option("--time", cfg.time, "profile time")->capture_default_str();
  app.add_option("--xmax", cfg.xmax, "profile window (default: past the fastest wave)");
  app.add_option("--phi-max", cfg.cd_phi_max, "upper phi for the shock locus segment");
  app.add_option("--out", cfg.out_path, "write output to this file instead of stdout");
  app.add_option("--format", cfg.format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));

  app.require_subcommand(1);
  auto* sc_thresholds =
      app.add_subcommand("thresholds", "critical velocities and the material case");
  auto* sc_solve = app.add_subcommand("solve", "construct the self-similar solution");
  auto* sc_profile = app.add_subcommand("profile", "sample the solution at a fixed time");
  auto* sc_locus = app.add_subcommand("locus", "dimensionless solution locus curves");
  auto* sc_validate = app.add_subcommand("validate", "run the diagnostic checks");
  sc_validate->add_option("--solution", cfg.solution_path,
                          "check a saved solve block instead of solving");
  for (auto* sc : {sc_thresholds, sc_solve, sc_profile, sc_locus, sc_validate}) {
    sc->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (kinetics_text == "df") {
    cfg.kinetics_request = kinetics::dissipation_free;
  } else if (kinetics_text == "md") {
    cfg.kinetics_request = kinetics::maximally_dissipative;
  } else {
    cfg.kinetics_request = kinetics::auto_select;
  }

  const bool from_solution_file =
      app.got_subcommand(sc_validate) && !cfg.solution_path.empty();
  std::vector<std::string> missing;
  if (!from_solution_file) {
    if (app.count("--alpha") == 0) missing.push_back("--alpha");
    if (app.count("--beta") == 0) missing.push_back("--beta");
    const bool needs_velocity = app.got_subcommand(sc_solve) ||
                                app.got_subcommand(sc_profile) ||
                                app.got_subcommand(sc_validate);
    if (needs_velocity && app.count("--velocity") == 0) missing.push_back("--velocity");
  }
  if (!missing.empty()) {
    err << "error:";
    for (const auto& m : missing) err << ' ' << m;
    err << (missing.size() == 1 ? " is" : " are") << " required\n";
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "error: cannot open output file " << cfg.out_path << '\n';
      return 2;
    }
    sink = &file;
  }

  try {
    if (app.got_subcommand(sc_thresholds)) return cmd_thresholds(cfg, *sink);
    if (app.got_subcommand(sc_solve)) return cmd_solve(cfg, *sink);
    if (app.got_subcommand(sc_profile)) return cmd_profile(cfg, *sink);
    if (app.got_subcommand(sc_locus)) return cmd_locus(cfg, *sink);
    return cmd_validate(cfg, *sink);
  } catch (const spinodal_domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const out_of_regime_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const incompatible_kinetics_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const no_sign_change_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const convergence_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ptwave::cli
