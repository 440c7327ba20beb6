#include "dyadlab/chui_wang.hpp"
#include "dyadlab/experiments.hpp"
#include "dyadlab/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace {

using namespace dyadlab;

Json parse_json_arg(const std::string& text) {
  if (!text.empty() && text.front() == '@') return Json::parse(read_file(text.substr(1)));
  return Json::parse(text);
}

Json param_value(const std::string& raw) {
  if (raw == "inf") return Json("inf");
  try {
    size_t pos = 0;
    double v = std::stod(raw, &pos);
    if (pos == raw.size()) {
      if (v == std::floor(v) && std::abs(v) < 1e15) return Json(static_cast<long long>(v));
      return Json(v);
    }
  } catch (const std::exception&) {
  }
  return Json(raw);
}

int cmd_norm(const std::string& fspec, const std::string& pspec, const std::string& mode,
             int max_level, int subdiv) {
  FunctionValue fv = function_from_spec(parse_json_arg(fspec));
  Json pj = parse_json_arg(pspec);
  NormReport rep;
  if (mode == "w1p" || mode == "bv" || mode == "frame-sobolev") {
    double p = pj.contains("p") && pj.at("p").is_string() ? SmoothnessParams::inf
                                                          : pj.value("p", 2.0);
    if (mode == "frame-sobolev") {
      rep = fv.is_exact() ? frame_sobolev_norm(fv.exact(), p, max_level)
                          : frame_sobolev_norm(fv.grid(), p, max_level);
    } else {
      if (!fv.is_exact())
        throw std::invalid_argument("mode '" + mode + "' needs an exact piecewise function");
      rep = mode == "w1p" ? w1p_norm(fv.exact(), p) : bv_norm(fv.exact());
    }
  } else {
    SmoothnessParams prm = params_from_json(pj);
    if (mode == "dyadic") {
      rep = fv.is_exact() ? dyadic_besov_norm(fv.exact(), prm, max_level)
                          : dyadic_besov_norm(fv.grid(), prm, max_level);
    } else if (mode == "frame-besov") {
      rep = fv.is_exact() ? frame_besov_norm(fv.exact(), prm, max_level)
                          : frame_besov_norm(fv.grid(), prm, max_level);
    } else if (mode == "frame-tl") {
      rep = fv.is_exact() ? frame_tl_norm(fv.exact(), prm, max_level)
                          : frame_tl_norm(fv.grid(), prm, max_level);
    } else if (mode == "ref") {
      rep = fv.is_exact() ? ref_besov_norm(fv.exact(), prm, max_level, subdiv)
                          : ref_besov_norm(fv.grid(), prm, max_level, subdiv);
    } else if (mode == "cw-besov") {
      static const ChuiWangSystem sys = chui_wang_mother();
      rep = fv.is_exact() ? b_norm(cw_analyze(sys, fv.exact(), max_level), prm)
                          : b_norm(cw_analyze(sys, fv.grid(), max_level), prm);
      rep.out_of_region = !prm.spline_B();
      rep.method += "|spline-wavelet";
    } else {
      throw std::invalid_argument("unknown norm mode: " + mode);
    }
  }
  Json out = to_json(rep);
  out["function"] = fv.name;
  out["mode"] = mode;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_analyze(const std::string& fspec, int max_level, const std::string& system,
                const std::string& out_path) {
  FunctionValue fv = function_from_spec(parse_json_arg(fspec));
  std::string csv;
  if (system == "haar") {
    csv = fv.is_exact() ? coeffs_to_csv(analyze(fv.exact(), max_level), "even")
                        : coeffs_to_csv(analyze(fv.grid(), max_level), "even");
  } else if (system == "shifted") {
    csv = fv.is_exact() ? coeffs_to_csv(analyze_shifted(fv.exact(), max_level), "odd")
                        : coeffs_to_csv(analyze_shifted(fv.grid(), max_level), "odd");
  } else if (system == "frame") {
    csv = fv.is_exact() ? coeffs_to_csv(frame_coeffs(fv.exact(), max_level), "frame")
                        : coeffs_to_csv(frame_coeffs(fv.grid(), max_level), "frame");
  } else if (system == "spline") {
    static const ChuiWangSystem sys = chui_wang_mother();
    csv = fv.is_exact() ? coeffs_to_csv(cw_analyze(sys, fv.exact(), max_level), "even")
                        : coeffs_to_csv(cw_analyze(sys, fv.grid(), max_level), "even");
  } else {
    throw std::invalid_argument("unknown analysis system: " + system);
  }
  if (out_path.empty())
    std::cout << csv;
  else
    write_file(out_path, csv);
  return 0;
}

int cmd_experiment(const std::string& name, const std::vector<std::string>& raw_params,
                   const std::string& out_dir, uint64_t seed, bool plot,
                   const std::string& config) {
  ExperimentSpec spec;
  spec.name = name;
  spec.seed = seed;
  spec.plot = plot;
  if (!config.empty()) {
    Json cfg = Json::parse(read_file(config));
    if (cfg.contains("name")) spec.name = cfg.at("name").get<std::string>();
    if (cfg.contains("params")) spec.params = cfg.at("params");
    if (cfg.contains("seed")) spec.seed = cfg.at("seed").get<uint64_t>();
  }
  for (const auto& kv : raw_params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--param expects key=value, got: " + kv);
    spec.params[kv.substr(0, eq)] = param_value(kv.substr(eq + 1));
  }
  ExperimentResult res = run_experiment(spec);
  std::filesystem::create_directories(out_dir);
  for (const auto& [file, contents] : res.files)
    write_file((std::filesystem::path(out_dir) / file).string(), contents);
  write_file((std::filesystem::path(out_dir) / (res.name + "_summary.json")).string(),
             res.summary.dump(2) + "\n");
  std::cout << res.summary.dump(2) << "\n";
  return res.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiscale function-space laboratory"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list registered experiments");

  std::string fspec, pspec, mode = "dyadic", system = "haar", out_path;
  int max_level = 12, subdiv = 8;
  auto* norm = app.add_subcommand("norm", "compute a quasi-norm of a function spec");
  norm->add_option("f-spec", fspec, "generator spec or inline function JSON (@file to load)")
      ->required();
  norm->add_option("params", pspec, "parameters JSON {\"s\":..,\"p\":..,\"q\":..}")->required();
  norm->add_option("--mode", mode,
                   "dyadic | frame-besov | frame-tl | ref | w1p | bv | frame-sobolev | cw-besov");
  norm->add_option("--J", max_level, "truncation level");
  norm->add_option("--subdiv", subdiv, "delta subdivisions for the reference norm");

  std::string afspec, aout;
  int aJ = 4;
  std::string asystem = "haar";
  auto* analyze_cmd = app.add_subcommand("analyze", "emit coefficient CSV for a function spec");
  analyze_cmd->add_option("f-spec", afspec, "generator spec or inline function JSON")->required();
  analyze_cmd->add_option("--J", aJ, "max level");
  analyze_cmd->add_option("--system", asystem, "haar | shifted | frame | spline");
  analyze_cmd->add_option("--out", aout, "output file (default stdout)");

  std::string ename, econfig, eout = "out";
  std::vector<std::string> eparams;
  uint64_t eseed = 1;
  bool eplot = false;
  auto* experiment = app.add_subcommand("experiment", "run a registered experiment");
  experiment->add_option("name", ename, "experiment name (see `list`)");
  experiment->add_option("--param", eparams, "key=value parameter override")->take_all();
  experiment->add_option("--out", eout, "output directory");
  experiment->add_option("--seed", eseed, "RNG seed recorded in outputs");
  experiment->add_option("--json", econfig, "JSON config file with name/params/seed");
  experiment->add_flag("--plot", eplot, "also emit an SVG plot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      for (const auto& info : experiment_registry())
        std::cout << info.name << "  -  " << info.description << "\n";
      return 0;
    }
    if (norm->parsed()) return cmd_norm(fspec, pspec, mode, max_level, subdiv);
    if (analyze_cmd->parsed()) return cmd_analyze(afspec, aJ, asystem, aout);
    if (experiment->parsed()) {
      if (ename.empty() && econfig.empty())
        throw std::invalid_argument("experiment: name or --json config required");
      return cmd_experiment(ename, eparams, eout, eseed, eplot, econfig);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
