// octoform: exact G2/Spin(7) form algebra, octonion subgroup generation and
// classification, and numeric cone-geometry checks, with JSON input/output.

#include "octoform/conegeo.hpp"
#include "octoform/exterior.hpp"
#include "octoform/groups.hpp"
#include "octoform/json_io.hpp"
#include "octoform/octonion.hpp"
#include "octoform/structures.hpp"
#include "octoform/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace octoform;

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
  }
}

json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  json j;
  f >> j;
  return j;
}

Form selected_form(const std::string& name) {
  if (name == "g2") return g2_form();
  if (name == "spin7") return spin7_form();
  if (name == "spin7-oct") return spin7_form_octonionic();
  throw std::runtime_error("unknown form selector '" + name + "' (expected g2|spin7|spin7-oct)");
}

std::vector<int> parse_frame_labels(const std::string& spec) {
  std::vector<int> labels;
  std::stringstream s(spec);
  std::string piece;
  while (std::getline(s, piece, ',')) {
    if (!piece.empty() && piece[0] == 'e') piece = piece.substr(1);
    labels.push_back(std::stoi(piece));
  }
  return labels;
}

void print_residual(const ResidualReport& r, const std::string& out_path) {
  std::cout << (r.pass ? "PASS " : "FAIL ") << r.test << "  max_residual=" << r.max_residual << "\n";
  emit(residual_to_json(r), out_path);
}

struct CliOptions {
  std::string form_name = "g2";
  std::string case_name = "g2";
  std::string out;
  std::string in;
  std::string frame;
  std::string frame_file;
  std::string generators_file;
  std::string theta_file;
  std::string form_file;
  std::string dform_file;
  bool details = false;
  bool no_order_check = false;
  std::size_t cap = default_closure_cap;
  int samples = 50;
  int dilation_samples = 100;
  double h = 1e-4;
  double tol = 1e-6;
  double dilation_tol = 1e-12;
  unsigned long seed = 0;
};

int run_form(const CliOptions& opt) {
  Form f = selected_form(opt.form_name);
  if (!opt.details) {
    emit(form_to_json(f), opt.out);
    return 0;
  }
  json j;
  j["form"] = form_to_json(f);
  QuaternionFrame q = designated_quaternion_frame();
  j["quaternion_frame"] = {{"i", q.i}, {"j", q.j}, {"k", q.k}, {"l", q.l}};
  j["cayley_table"] = CayleyTable::standard().debug_dump();
  if (opt.form_name == "spin7-oct") {
    auto witness = find_signed_permutation(f, spin7_form());
    if (witness) {
      j["signed_permutation_to_standard"] = {{"map", orthmap_to_json(witness->map)},
                                             {"overall_sign", witness->overall_sign}};
    } else {
      j["signed_permutation_to_standard"] = nullptr;
    }
  }
  emit(j, opt.out);
  return 0;
}

int run_stab(const CliOptions& opt) {
  Form f = opt.in.empty() ? selected_form(opt.form_name) : form_from_json(load_json(opt.in));
  emit({{"stabilizer_dim", stabilizer_dim(f)}}, opt.out);
  return 0;
}

int run_lee_exact(const CliOptions& opt) {
  json j;
  if (!opt.form_file.empty() || !opt.dform_file.empty()) {
    Form base = form_from_json(load_json(opt.form_file));
    Form dbase = form_from_json(load_json(opt.dform_file));
    Form lee = opt.case_name == "g2" ? lee_g2(base, dbase) : lee_spin7(base, dbase);
    j["lee_form"] = form_to_json(lee);
  } else {
    j["g2_lee_constant"] = to_string(lee_g2_constant());
    j["spin7_lee_constant"] = to_string(lee_spin7_constant());
  }
  emit(j, opt.out);
  return 0;
}

int run_torsion(const CliOptions& opt) {
  json j;
  if (opt.case_name == "g2") {
    Form omega = g2_form();
    Form theta = opt.theta_file.empty() ? Form::monomial(7, {7}) : form_from_json(load_json(opt.theta_file));
    j["torsion"] = form_to_json(torsion_g2(theta, omega));  // dual-route checked inside
    j["identity"] = "*(theta^omega) = -i_theta(*omega)";
  } else {
    Form phi = spin7_form();
    Form theta = opt.theta_file.empty() ? Form::monomial(8, {0}) : form_from_json(load_json(opt.theta_file));
    j["torsion"] = form_to_json(torsion_spin7(theta, phi));
    j["identity"] = "*(Theta^phi) = i_Theta(*phi)";
  }
  j["dual_route_check"] = "ok";
  emit(j, opt.out);
  return 0;
}

int run_group_gen(const CliOptions& opt) {
  FiniteGroup g;
  if (!opt.frame.empty() || !opt.frame_file.empty()) {
    std::vector<Octonion> frame;
    if (!opt.frame.empty()) {
      frame = frame_from_labels(parse_frame_labels(opt.frame));
    } else {
      for (const json& o : load_json(opt.frame_file)) frame.push_back(octonion_from_json(o));
    }
    g = frame_group(frame, opt.cap, !opt.no_order_check);
  } else if (!opt.generators_file.empty()) {
    std::vector<OrthMap> gens;
    for (const json& m : load_json(opt.generators_file)) gens.push_back(orthmap_from_json(m));
    g = closure(gens, opt.cap);
  } else {
    throw std::runtime_error("group gen: need --frame, --frame-file or --generators");
  }
  std::cout << "group of order " << g.order() << " on R^" << g.dim << "\n";
  emit(group_to_json(g), opt.out);
  return 0;
}

int run_group_classify(const CliOptions& opt) {
  FiniteGroup g = group_from_json(load_json(opt.in));
  Form phi = opt.form_name == "spin7-oct" ? spin7_form_octonionic() : spin7_form();
  ClassificationReport report = classify(g, phi);

  std::printf("order                %zu\n", report.order);
  std::printf("free on S^7          %s\n", report.is_free_on_sphere ? "yes" : "no");
  std::printf("fixed-point elements %zu\n", report.fixed_point_witnesses.size());
  std::printf("preserves %-10s %s\n", opt.form_name.c_str(), report.preserves_spin7 ? "yes" : "no");
  for (const FixedPointWitness& w : report.fixed_point_witnesses) {
    std::printf("  %-24s fixes a %zu-dimensional subspace\n", w.label.c_str(), w.kernel.size());
  }
  emit(classification_to_json(report), opt.out);
  return 0;
}

int run_verify_all(const CliOptions& opt) {
  std::vector<CheckResult> results = run_acceptance_suite(opt.seed);
  int failed = 0;
  for (const CheckResult& r : results) {
    std::printf("%s %2d/13 %-28s %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.number, r.name.c_str(),
                r.detail.c_str(), r.seconds);
    if (!r.pass) ++failed;
  }
  std::printf("%d/13 checks passed\n", 13 - failed);
  if (!opt.out.empty()) emit(acceptance_to_json(results), opt.out);
  return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact G2/Spin(7) toolkit: forms, octonions, finite subgroups, cone checks"};
  app.set_help_flag("--help", "print help");  // frees -h so --h can be the step size
  app.require_subcommand(1);
  CliOptions opt;

  auto* form_cmd = app.add_subcommand("form", "print a canonical form as JSON");
  form_cmd->add_option("--form", opt.form_name, "g2|spin7|spin7-oct")->default_str("g2");
  form_cmd->add_flag("--details", opt.details, "include quaternion frame, Cayley table and witness data");
  form_cmd->add_option("--out", opt.out, "write JSON here instead of stdout");

  auto* stab_cmd = app.add_subcommand("stab", "stabilizer dimension in so(n)");
  stab_cmd->add_option("--form", opt.form_name, "g2|spin7|spin7-oct");
  stab_cmd->add_option("--in", opt.in, "form JSON file (overrides --form)");
  stab_cmd->add_option("--out", opt.out);

  auto* lee_cmd = app.add_subcommand("lee", "exact Lee operators / consistency constants");
  lee_cmd->add_option("--case", opt.case_name, "g2|spin7");
  lee_cmd->add_option("--form", opt.form_file, "form JSON (with --dform: compute the Lee form)");
  lee_cmd->add_option("--dform", opt.dform_file, "d(form) JSON");
  lee_cmd->add_option("--out", opt.out);
  auto* lee_check_cmd = lee_cmd->add_subcommand("check", "numeric Lee closedness on the cylinder model");
  lee_check_cmd->add_option("--case", opt.case_name, "g2|spin7");
  lee_check_cmd->add_option("--samples", opt.samples);
  lee_check_cmd->add_option("--h", opt.h);
  lee_check_cmd->add_option("--tol", opt.tol);
  lee_check_cmd->add_option("--seed", opt.seed);
  lee_check_cmd->add_option("--out", opt.out);

  auto* torsion_cmd = app.add_subcommand("torsion", "torsion forms with the dual-route identity check");
  torsion_cmd->add_option("--case", opt.case_name, "g2|spin7");
  torsion_cmd->add_option("--theta", opt.theta_file, "Lee 1-form JSON (default: a basis covector)");
  torsion_cmd->add_option("--out", opt.out);

  auto* group_cmd = app.add_subcommand("group", "finite matrix group engine");
  group_cmd->require_subcommand(1);
  auto* gen_cmd = group_cmd->add_subcommand("gen", "generate a group and emit it as JSON");
  gen_cmd->add_option("--frame", opt.frame, "comma-separated imaginary basis labels, e.g. e1,e2,e7,e3");
  gen_cmd->add_option("--frame-file", opt.frame_file, "JSON list of exact octonions");
  gen_cmd->add_option("--generators", opt.generators_file, "JSON list of exact orthogonal matrices");
  gen_cmd->add_option("--cap", opt.cap, "closure cap (default 10000)");
  gen_cmd->add_flag("--no-order-check", opt.no_order_check,
                    "do not require frame groups to have order 2^(m+1)");
  gen_cmd->add_option("--out", opt.out);
  auto* classify_cmd = group_cmd->add_subcommand("classify", "order, freeness on S^7, Spin(7) membership");
  classify_cmd->add_option("--in", opt.in, "group JSON file")->required();
  classify_cmd->add_option("--form", opt.form_name, "spin7|spin7-oct")->default_val("spin7-oct");
  classify_cmd->add_option("--out", opt.out);

  auto* cone_cmd = app.add_subcommand("cone", "cone geometry checks");
  auto* cone_verify_cmd = cone_cmd->add_subcommand("verify", "d_S sigma = k rho and d_S rho = 0");
  cone_verify_cmd->add_option("--form", opt.form_name, "g2|spin7");
  cone_verify_cmd->add_option("--samples", opt.samples);
  cone_verify_cmd->add_option("--h", opt.h);
  cone_verify_cmd->add_option("--tol", opt.tol);
  cone_verify_cmd->add_option("--seed", opt.seed);
  cone_verify_cmd->add_option("--out", opt.out);

  auto* nk_cmd = app.add_subcommand("nk", "nearly Kaehler S^6");
  auto* nk_check_cmd = nk_cmd->add_subcommand("check", "type (3,0)+(0,3) of dF under J_u(x) = u x");
  nk_check_cmd->add_option("--samples", opt.samples);
  nk_check_cmd->add_option("--h", opt.h);
  nk_check_cmd->add_option("--tol", opt.tol);
  nk_check_cmd->add_option("--seed", opt.seed);
  nk_check_cmd->add_option("--out", opt.out);

  auto* dilation_cmd = app.add_subcommand("dilation", "scaling invariance of phi / |p|^4");
  auto* dilation_check_cmd = dilation_cmd->add_subcommand("check", "pullback under p -> lambda p");
  dilation_check_cmd->add_option("--samples", opt.dilation_samples);
  dilation_check_cmd->add_option("--tol", opt.dilation_tol);
  dilation_check_cmd->add_option("--seed", opt.seed);
  dilation_check_cmd->add_option("--out", opt.out);

  auto* verify_cmd = app.add_subcommand("verify-all", "run the full acceptance suite");
  verify_cmd->add_option("--seed", opt.seed);
  verify_cmd->add_option("--out", opt.out, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (form_cmd->parsed()) return run_form(opt);
    if (stab_cmd->parsed()) return run_stab(opt);
    if (lee_cmd->parsed()) {
      if (lee_check_cmd->parsed()) {
        LeeCase which = opt.case_name == "spin7" ? LeeCase::spin7 : LeeCase::g2;
        ResidualReport r = lee_closedness_check(which, opt.samples, opt.h, opt.tol, opt.seed);
        print_residual(r, opt.out);
        return r.pass ? 0 : 1;
      }
      return run_lee_exact(opt);
    }
    if (torsion_cmd->parsed()) return run_torsion(opt);
    if (group_cmd->parsed()) {
      if (gen_cmd->parsed()) return run_group_gen(opt);
      return run_group_classify(opt);
    }
    if (cone_cmd->parsed()) {
      Form parallel = opt.form_name == "spin7" ? spin7_form() : g2_form();
      ResidualReport r = verify_cone_identity(parallel, opt.samples, opt.h, opt.tol, opt.seed);
      print_residual(r, opt.out);
      return r.pass ? 0 : 1;
    }
    if (nk_cmd->parsed()) {
      ResidualReport r = nearly_kaehler_check(opt.samples, opt.h, opt.tol, opt.seed);
      print_residual(r, opt.out);
      return r.pass ? 0 : 1;
    }
    if (dilation_cmd->parsed()) {
      ResidualReport r = dilation_invariance_check(opt.dilation_samples, opt.dilation_tol, opt.seed);
      print_residual(r, opt.out);
      return r.pass ? 0 : 1;
    }
    if (verify_cmd->parsed()) return run_verify_all(opt);
  } catch (const std::exception& e) {
    nlohmann::json err = {{"error", e.what()}};
    std::cout << err.dump() << "\n";
    return 1;
  }
  return 0;
}
