// Command-line front end: conjugate-normality checks, decompositions,
// truncated-shift analysis, randomized verification suites, and instance
// generation, all over the shared JSON matrix format.
//
// Exit codes: 0 pass, 1 predicate false or operation failure, 2 input error.

#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cnops/cnormal.hpp"
#include "cnops/douglas.hpp"
#include "cnops/generators.hpp"
#include "cnops/inequalities.hpp"
#include "cnops/json_io.hpp"
#include "cnops/verify.hpp"

namespace {

using namespace cnops;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

double parse_double_strict(std::string_view s) {
  double sign = 1.0;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    if (s.front() == '-') sign = -1.0;
    s.remove_prefix(1);
  }
  double value = 0.0;
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw DomainError("cannot parse number: '" + std::string(s) + "'");
  return sign * value;
}

/// Parses "a", "a+bi", "a-bi", "bi", "i", "-i" without locale dependence.
Complex parse_complex(std::string s) {
  std::erase(s, ' ');
  if (s.empty()) throw DomainError("empty complex literal");
  if (s.back() != 'i') return {parse_double_strict(s), 0.0};
  s.pop_back();
  // find the sign separating real and imaginary parts (not an exponent sign)
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto parse_signed_unit = [](std::string part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_double_strict(part);
  };
  if (split == std::string::npos) return {0.0, parse_signed_unit(s)};
  return {parse_double_strict(s.substr(0, split)),
          parse_signed_unit(s.substr(split))};
}

std::vector<Complex> parse_weights(const std::string& csv) {
  std::vector<Complex> out;
  std::string item;
  for (std::size_t i = 0; i <= csv.size(); ++i) {
    if (i == csv.size() || csv[i] == ',') {
      if (!item.empty()) out.push_back(parse_complex(item));
      item.clear();
    } else {
      item += csv[i];
    }
  }
  if (out.empty()) throw DomainError("no weights given");
  return out;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json_file(out_path, j);
}

struct GlobalOpts {
  Tolerance tol;
  std::string out_path;
  bool json = false;  // accepted for interface stability; output is JSON
  std::uint64_t seed = 1;
};

int run_check(const std::string& t_path, const std::string& c_path,
              const GlobalOpts& g) {
  ComplexMatrix t;
  Conjugation c{ComplexMatrix::Identity(1, 1)};
  try {
    t = matrix_from_json(load_json_file(t_path));
    c = conjugation_from_json(load_json_file(c_path), g.tol);
    if (t.rows() != t.cols() || t.rows() != c.dim())
      throw DomainError("check: T must be square and match C");
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return kExitInputError;
  }
  const CNormalReport rep = is_c_normal_battery(t, c, g.tol);
  emit(battery_report_to_json(rep), g.out_path);
  return rep.verdict ? kExitPass : kExitFail;
}

Json polar_factors_json(const CNormalPolar& polar) {
  Json factors;
  factors["J"] = antilinear_to_json(polar.j);
  factors["modulus"] = matrix_to_json(polar.modulus);
  return factors;
}

int run_decompose(const std::string& kind, const std::vector<std::string>& files,
                  bool extend, const GlobalOpts& g) {
  Json result;
  result["kind"] = kind;
  try {
    if (kind == "cartesian" || kind == "cnormal-polar" ||
        kind == "skew-structure" || kind == "cjp") {
      if (files.size() != 2)
        throw DomainError("decompose " + kind + ": expected T.json C.json");
      ComplexMatrix t;
      Conjugation c{ComplexMatrix::Identity(1, 1)};
      try {
        t = matrix_from_json(load_json_file(files[0]));
        c = conjugation_from_json(load_json_file(files[1]), g.tol);
      } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return kExitInputError;
      }
      if (kind == "cartesian") {
        const CartesianEquivalences eq = cartesian_equivalences(t, c, g.tol);
        Json factors;
        factors["A"] = matrix_to_json(eq.pair.symmetric_part);
        factors["B"] = matrix_to_json(eq.pair.skew_part);
        result["factors"] = std::move(factors);
        Json res;
        res["c_normal"] = eq.residual_c_normal;
        res["norm_identity"] = eq.residual_norm_identity;
        res["adjoint_commute_left"] = eq.residual_adjoint_left;
        res["adjoint_commute_right"] = eq.residual_adjoint_right;
        result["residuals"] = std::move(res);
        result["c_normal"] = eq.c_normal;
        result["passed"] = true;
      } else if (kind == "cnormal-polar") {
        const CNormalPolar polar = cnormal_polar(t, c, g.tol, extend);
        result["factors"] = polar_factors_json(polar);
        result["extended"] = polar.extended;
        Json res;
        res["reconstruction"] =
            (c.mat * polar.j.mat.conjugate() * polar.modulus - t).norm();
        res["commutation"] = (polar.j.mat * polar.modulus.conjugate() -
                              polar.modulus * polar.j.mat)
                                 .norm();
        result["residuals"] = std::move(res);
        result["passed"] = true;
      } else if (kind == "skew-structure") {
        const SkewStructure ss = skew_structure(t, c, g.tol);
        Json factors;
        factors["W"] = matrix_to_json(ss.unitary);
        factors["T1"] = matrix_to_json(ss.block_plus);
        factors["T3"] = matrix_to_json(ss.block_imag);
        result["factors"] = std::move(factors);
        Json partition;
        partition["plus"] = ss.plus_indices;
        partition["minus"] = ss.minus_indices;
        partition["imaginary"] = ss.imag_indices;
        result["partition"] = std::move(partition);
        Json res;
        res["reconstruction"] = ss.reconstruction_residual;
        res["swap"] = ss.swap_residual;
        res["hermiticity"] = ss.hermiticity_residual;
        result["residuals"] = std::move(res);
        result["passed"] = true;
      } else {
        const CjpFactors f = cjp_factor(t, c, g.tol);
        Json factors;
        factors["J"] = antilinear_to_json(f.j);
        factors["P"] = matrix_to_json(f.p);
        result["factors"] = std::move(factors);
        Json res;
        res["roundtrip"] = f.roundtrip_residual;
        result["residuals"] = std::move(res);
        result["passed"] = true;
      }
    } else if (kind == "polar") {
      if (files.size() != 1)
        throw DomainError("decompose polar: expected A.json (antilinear)");
      AntiLinearMap a{ComplexMatrix()};
      try {
        a = antilinear_from_json(load_json_file(files[0]));
      } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return kExitInputError;
      }
      const PolarDecomposition pd = antilinear_polar(a, g.tol);
      Json factors;
      factors["J"] = antilinear_to_json(pd.isometry_part.antilinear());
      factors["initial_projector"] = matrix_to_json(pd.isometry_part.initial_projector);
      factors["final_projector"] = matrix_to_json(pd.isometry_part.final_projector);
      factors["modulus"] = matrix_to_json(pd.modulus);
      result["factors"] = std::move(factors);
      Json res;
      res["reconstruction"] =
          (a.mat - pd.isometry_part.mat * pd.modulus.conjugate()).norm();
      result["residuals"] = std::move(res);
      result["passed"] = true;
    } else if (kind == "douglas") {
      if (files.size() != 2)
        throw DomainError("decompose douglas: expected A.json B.json");
      ComplexMatrix a, b;
      try {
        a = matrix_from_json(load_json_file(files[0]));
        b = matrix_from_json(load_json_file(files[1]));
      } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return kExitInputError;
      }
      const DouglasSolution sol = douglas_solve(a, b, g.tol);
      Json factors;
      factors["C"] = matrix_to_json(sol.factor);
      result["factors"] = std::move(factors);
      result["norm_sq"] = sol.norm_sq;
      result["k_min"] = sol.k_min;
      Json res;
      res["factorization"] = (a - b * sol.factor).norm();
      result["residuals"] = std::move(res);
      result["passed"] = true;
    } else {
      std::cerr << "unknown decomposition kind: " << kind << "\n";
      return kExitInputError;
    }
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    Json fail;
    fail["kind"] = kind;
    fail["passed"] = false;
    fail["error"] = e.name();
    fail["message"] = e.what();
    emit(fail, g.out_path);
    return kExitFail;
  }
  emit(result, g.out_path);
  return kExitPass;
}

std::vector<Complex> weights_from_file(const std::string& path) {
  const Json j = load_json_file(path);
  const Json& arr = j.is_object() && j.contains("weights") ? j.at("weights") : j;
  if (!arr.is_array() || arr.empty())
    throw DomainError("weights file: expected a nonempty array of [re, im] pairs");
  std::vector<Complex> out;
  for (const Json& e : arr) {
    if (!e.is_array() || e.size() != 2)
      throw DomainError("weights file: entries must be [re, im] pairs");
    out.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
  }
  return out;
}

int run_shift(const std::string& weights_csv, const std::string& weights_file,
              const GlobalOpts& g) {
  std::vector<Complex> w;
  try {
    if (!weights_file.empty())
      w = weights_from_file(weights_file);
    else
      w = parse_weights(weights_csv);
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return kExitInputError;
  }
  const ComplexMatrix shift = weighted_shift(w);
  const bool criterion = shift_cnormal_criterion(w, g.tol);
  const CNormalReport rep = is_c_normal_battery(
      shift, flip_conjugation(static_cast<Index>(w.size()) + 1), g.tol);
  Json j;
  j["matrix"] = matrix_to_json(shift);
  j["criterion"] = criterion;
  j["battery_verdict"] = rep.verdict;
  j["agree"] = criterion == rep.verdict;
  emit(j, g.out_path);
  return criterion ? kExitPass : kExitFail;
}

int run_verify(const verify::Config& cfg, const GlobalOpts& g) {
  std::vector<verify::SuiteReport> reports;
  try {
    reports = verify::run_suites(cfg);
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return kExitInputError;
  }
  Json j = Json::array();
  bool all_passed = true;
  double wall = 0.0;
  for (const auto& rep : reports) {
    j.push_back(verify::suite_report_to_json(rep));
    all_passed = all_passed && rep.passed();
    wall += rep.wall_ms;
  }
  emit(j, g.out_path);
  std::cerr << "wall_ms: " << wall << "\n";
  return all_passed ? kExitPass : kExitFail;
}

int run_gen(const std::string& kind, Index dim, const std::string& out_dir,
            const GlobalOpts& g) {
  if (dim < 1 || dim > 64) {
    std::cerr << "gen: dim must be in [1, 64]\n";
    return kExitInputError;
  }
  const std::string prefix = out_dir.empty() ? "." : out_dir;
  Rng rng(g.seed);
  Json manifest;
  manifest["kind"] = kind;
  manifest["dim"] = dim;
  manifest["seed"] = g.seed;
  Json files;
  auto write = [&](const char* name, const Json& content) {
    const std::string path = prefix + "/" + name;
    save_json_file(path, content);
    files[name] = path;
  };
  try {
    if (kind == "conjugation") {
      write("C.json", conjugation_to_json(random_conjugation(dim, rng)));
    } else if (kind == "cnormal") {
      const gen::CjpInstance inst = gen::random_cnormal(rng, dim, g.tol);
      write("T.json", matrix_to_json(inst.t));
      write("C.json", conjugation_to_json(inst.c));
    } else if (kind == "normal-anticommuting") {
      const gen::AnticommutingInstance inst =
          gen::random_anticommuting_normal(rng, dim);
      write("T.json", matrix_to_json(inst.t));
      write("C.json", conjugation_to_json(inst.c));
    } else if (kind == "commuting-jp") {
      const gen::CjpInstance inst = gen::random_cjp(rng, dim, {}, g.tol);
      write("C.json", conjugation_to_json(inst.c));
      write("J.json", antilinear_to_json(inst.j));
      write("P.json", matrix_to_json(inst.p));
    } else {
      std::cerr << "unknown gen kind: " << kind << "\n";
      return kExitInputError;
    }
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return kExitFail;
  }
  manifest["files"] = std::move(files);
  std::cout << manifest.dump(2) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjugation and conjugate-normal matrix toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--tol-rel", g.tol.eps_rel, "relative equality tolerance");
  app.add_option("--tol-abs", g.tol.eps_abs, "absolute equality tolerance");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--out", g.out_path, "write the report to this path");
  app.add_flag("--json", g.json, "emit JSON (always on; kept for scripts)");

  // check
  auto* check = app.add_subcommand("check", "run the conjugate-normality battery");
  std::string check_t, check_c;
  check->add_option("T", check_t, "matrix JSON file")->required();
  check->add_option("C", check_c, "conjugation JSON file")->required();

  // decompose
  auto* dec = app.add_subcommand("decompose", "compute a decomposition");
  std::string dec_kind;
  std::vector<std::string> dec_files;
  bool dec_extend = false;
  dec->add_option("kind", dec_kind,
                  "cartesian | polar | cnormal-polar | skew-structure | cjp | douglas")
      ->required();
  dec->add_option("files", dec_files, "input JSON files")->required();
  dec->add_flag("--extend", dec_extend,
                "extend the partial anti-unitary over the kernel");

  // shift
  auto* shift = app.add_subcommand("shift", "truncated weighted shift analysis");
  std::string shift_weights, shift_weights_file;
  auto* wopt = shift->add_option("--weights", shift_weights,
                                 "comma-separated complex weights, e.g. 1,0+1i");
  shift->add_option("--weights-file", shift_weights_file,
                    "JSON file with an array of [re, im] pairs")
      ->excludes(wopt);

  // verify
  auto* ver = app.add_subcommand("verify", "run a randomized verification suite");
  verify::Config cfg;
  ver->add_option("--suite", cfg.suite,
                  "battery | douglas | polar | cartesian | structure | inequalities | all");
  ver->add_option("--trials", cfg.trials, "number of seeded trials");
  ver->add_option("--dim-min", cfg.dim_min, "smallest dimension");
  ver->add_option("--dim-max", cfg.dim_max, "largest dimension");

  // gen
  auto* genc = app.add_subcommand("gen", "generate a random instance");
  std::string gen_kind, gen_out = ".";
  Index gen_dim = 4;
  genc->add_option("--kind", gen_kind,
                   "conjugation | cnormal | normal-anticommuting | commuting-jp")
      ->required();
  genc->add_option("--dim", gen_dim, "dimension");
  genc->add_option("--out-dir", gen_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*check) return run_check(check_t, check_c, g);
    if (*dec) return run_decompose(dec_kind, dec_files, dec_extend, g);
    if (*shift) {
      if (shift_weights.empty() && shift_weights_file.empty()) {
        std::cerr << "shift: need --weights or --weights-file\n";
        return kExitInputError;
      }
      return run_shift(shift_weights, shift_weights_file, g);
    }
    if (*ver) {
      cfg.seed = g.seed;
      cfg.tol = g.tol;
      return run_verify(cfg, g);
    }
    if (*genc) return run_gen(gen_kind, gen_dim, gen_out, g);
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInputError;
}
