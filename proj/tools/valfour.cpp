// valfour: batch verification driver and current transformer.
//
//   valfour verify <suite>|all [flags]   run an identity suite
//   valfour transform <in> <out>         Fourier-transform a serialized current
//   valfour dump-multipliers <csv>       write the multiplier table

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "valfour/serialization.hpp"
#include "valfour/verify.hpp"

using namespace valfour;

int main(int argc, char** argv) {
  CLI::App app{"Fourier transform of translation-invariant valuations: verification driver"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run an identity suite");
  std::string suite;
  VerifyConfig cfg;
  std::string format = "table";
  std::string svg_path, config_path;
  int dim = 0;
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--n", dim, "restrict random checks to this dimension (informational)");
  verify->add_option("--band-limit", cfg.band_limit_2d, "band limit for n=2 data");
  verify->add_option("--band-limit-3d", cfg.band_limit_3d, "band limit for n=3 data");
  verify->add_option("--tol-spectral", cfg.tol_spectral, "spectral identity tolerance");
  verify->add_option("--tol-quadrature", cfg.tol_quadrature, "quadrature identity tolerance");
  verify->add_option("--seed", cfg.seed, "deterministic seed");
  verify->add_option("--format", format, "table | csv | json");
  verify->add_option("--svg", svg_path, "also write an SVG error chart to this path");
  verify->add_option("--config", config_path, "JSON config file overriding the flags");

  // transform
  auto* transform = app.add_subcommand("transform", "Fourier-transform a serialized valuation current");
  std::string in_path, out_path;
  transform->add_option("input", in_path, "input ValCurrent JSON")->required();
  transform->add_option("output", out_path, "output path")->required();

  // dump-multipliers
  auto* dump = app.add_subcommand("dump-multipliers", "write the multiplier table as CSV");
  std::string csv_path;
  int max_m = 16;
  dump->add_option("csv", csv_path, "output CSV path")->required();
  dump->add_option("--max-m", max_m, "largest harmonic degree");

  CLI11_PARSE(app, argc, argv);

  if (*verify) {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "cannot read config " << config_path << "\n";
        return 2;
      }
      nlohmann::json j;
      in >> j;
      cfg.band_limit_2d = j.value("band_limit_2d", cfg.band_limit_2d);
      cfg.band_limit_3d = j.value("band_limit_3d", cfg.band_limit_3d);
      cfg.tol_spectral = j.value("tol_spectral", cfg.tol_spectral);
      cfg.tol_quadrature = j.value("tol_quadrature", cfg.tol_quadrature);
      cfg.seed = j.value("seed", cfg.seed);
    }
    std::vector<std::string> names;
    if (suite == "all") names = suite_names();
    else names.push_back(suite);
    bool ok = true;
    for (auto& name : names) {
      VerificationReport r;
      try {
        r = run_suite(name, cfg);
      } catch (const std::exception& e) {
        std::cerr << "suite " << name << " failed to run: " << e.what() << "\n";
        return 2;
      }
      ok = ok && r.all_pass();
      if (format == "csv") std::cout << format_csv(r);
      else if (format == "json") std::cout << format_json_report(r) << "\n";
      else std::cout << format_table(r) << "\n";
      if (!svg_path.empty()) {
        std::string path = names.size() == 1 ? svg_path : (name + "-" + svg_path);
        std::ofstream out(path);
        out << format_svg(r);
      }
    }
    return ok ? 0 : 1;
  }

  if (*transform) {
    std::ifstream in(in_path);
    if (!in) {
      std::cerr << "cannot read " << in_path << "\n";
      return 2;
    }
    nlohmann::json j;
    try {
      in >> j;
      ValCurrent v = valcurrent_from_json(j);
      auto rep = is_valuation_type(v.cur, 1e-8);
      if (!rep.pass) {
        std::cerr << "input is not valuation-type: i_E " << rep.iE_norm << ", vertical "
                  << rep.vertical_norm << ", closed " << rep.closed_norm << "\n";
        return 1;
      }
      ValCurrent f = fourier_val(v);
      // idempotence check: transforming twice is the antipodal pullback
      ValCurrent ff = fourier_val(f);
      ValCurrent ex = antipodal_val(v);
      double err = (ff.cur - ex.cur).smooth_norm() + (ff.cur - ex.cur).atom_norm();
      double scale = std::max(1.0, v.cur.smooth_norm() + v.cur.atom_norm());
      std::cerr << "round-trip vs antipodal pullback: " << err / scale
                << (err / scale <= 1e-8 ? " (ok)" : " (WARN)") << "\n";
      std::ofstream out(out_path);
      out << to_json(f).dump(2) << "\n";
    } catch (const std::exception& e) {
      std::cerr << "transform failed: " << e.what() << "\n";
      return 1;
    }
    return 0;
  }

  if (*dump) {
    std::ofstream out(csv_path);
    if (!out) {
      std::cerr << "cannot write " << csv_path << "\n";
      return 2;
    }
    out << dump_multiplier_csv(max_m);
    return 0;
  }
  return 2;
}
