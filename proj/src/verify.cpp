#include "octoform/verify.hpp"

#include "octoform/conegeo.hpp"
#include "octoform/exterior.hpp"
#include "octoform/groups.hpp"
#include "octoform/octonion.hpp"
#include "octoform/structures.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace octoform {

namespace {

Rational random_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 19) - 9;
  long den = static_cast<long>(rng() % 9) + 1;
  return rational_of(num, den);
}

Octonion random_octonion(std::mt19937_64& rng, bool imaginary = false) {
  Octonion o;
  for (int i = imaginary ? 1 : 0; i < 8; ++i) o.c[static_cast<std::size_t>(i)] = random_rational(rng);
  return o;
}

Form basis_covector(int dim, int index) {
  Form f(dim, 1);
  f.add_term(Mask{1} << index, Rational(1));
  return f;
}

Vector basis_vector(int dim, int index) {
  Vector v(dim);
  v[index] = 1;
  return v;
}

std::string ordered_orders(const std::vector<std::size_t>& orders) {
  std::ostringstream s;
  for (std::size_t i = 0; i < orders.size(); ++i) s << (i ? "," : "") << orders[i];
  return s.str();
}

// --- criterion 1 -----------------------------------------------------------

CheckResult check_stabilizer_dims() {
  CheckResult r{1, "stabilizer-dimensions", false, "", 0};
  int g2 = stabilizer_dim(g2_form());
  int s7 = stabilizer_dim(spin7_form());
  int s7o = stabilizer_dim(spin7_form_octonionic());
  std::ostringstream d;
  d << "dim stab(omega)=" << g2 << " dim stab(phi)=" << s7 << " dim stab(phi_oct)=" << s7o;
  r.detail = d.str();
  r.pass = g2 == 14 && s7 == 21 && s7o == 21;
  return r;
}

// --- criterion 2 -----------------------------------------------------------

CheckResult check_frame_group_orders(unsigned long seed) {
  CheckResult r{2, "frame-group-orders", false, "", 0};
  std::vector<std::string> failures;
  std::vector<std::size_t> basis_orders;

  for (int m = 1; m <= 7; ++m) {
    std::vector<int> labels;
    for (int i = 1; i <= m; ++i) labels.push_back(i);
    FiniteGroup g = frame_group(frame_from_labels(labels), default_closure_cap, false);
    basis_orders.push_back(g.order());
    if (g.order() != (std::size_t{1} << (m + 1)))
      failures.push_back("basis m=" + std::to_string(m) + ": order " + std::to_string(g.order()) +
                         " != " + std::to_string(std::size_t{1} << (m + 1)));
  }

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < 10; ++i) {
    int m = (i % 7) + 1;
    FiniteGroup g = frame_group(random_frame(m, rng), default_closure_cap, false);
    if (g.order() != (std::size_t{1} << (m + 1)))
      failures.push_back("random frame m=" + std::to_string(m) + ": order " + std::to_string(g.order()) +
                         " != " + std::to_string(std::size_t{1} << (m + 1)));
  }

  std::ostringstream d;
  d << "basis orders m=1..7: " << ordered_orders(basis_orders);
  if (!failures.empty()) {
    d << "; " << failures.size() << " mismatch(es): " << failures.front();
    if (failures.size() > 1) d << " (+" << failures.size() - 1 << " more)";
    d << " [R_s1...R_s7 = +/-I collapses m=7 to 2^7]";
  }
  r.detail = d.str();
  r.pass = failures.empty();
  return r;
}

// --- criterion 3 -----------------------------------------------------------

CheckResult check_gsigma4_elements() {
  CheckResult r{3, "gsigma4-element-match", false, "", 0};
  const CayleyTable& table = CayleyTable::standard();
  QuaternionFrame q = designated_quaternion_frame(table);
  std::vector<int> labels = {q.i, q.j, q.k, q.l};

  FiniteGroup g = frame_group(frame_from_labels(labels));

  // The displayed 32 maps: o -> ±(((o s1) s2) ...) over every subset of the
  // designated frame, in word order R_st ... R_s1.
  std::vector<OrthMap> expected;
  for (unsigned subset = 0; subset < 16; ++subset) {
    OrthMap word = OrthMap::identity(8);
    for (int t = 0; t < 4; ++t) {
      if (subset & (1u << t)) word = table.right_mult_matrix(Octonion::basis(labels[static_cast<std::size_t>(t)])) * word;
    }
    expected.push_back(word);
    expected.push_back(-word);
  }

  std::vector<OrthMap> got = g.elements;
  OrthMapLess less;
  std::sort(expected.begin(), expected.end(), less);
  std::sort(got.begin(), got.end(), less);
  bool match = expected == got;

  std::ostringstream d;
  d << "frame (i,j,k,l)=(e" << q.i << ",e" << q.j << ",e" << q.k << ",e" << q.l << "), order "
    << g.order() << ", element sets " << (match ? "equal" : "DIFFER");
  r.detail = d.str();
  r.pass = match && g.order() == 32;
  return r;
}

// --- criterion 4 -----------------------------------------------------------

CheckResult check_spin7_membership(unsigned long seed) {
  CheckResult r{4, "spin7-membership", false, "", 0};
  Form phi_oct = spin7_form_octonionic();
  std::size_t checked = 0, violations = 0;

  auto scan = [&](const FiniteGroup& g) {
    for (const OrthMap& e : g.elements) {
      ++checked;
      if (!preserves_form(e, phi_oct)) ++violations;
    }
  };

  for (int m = 1; m <= 7; ++m) {
    std::vector<int> labels;
    for (int i = 1; i <= m; ++i) labels.push_back(i);
    scan(frame_group(frame_from_labels(labels), default_closure_cap, false));
  }
  std::mt19937_64 rng(seed ^ 0x517cc1b727220a95ULL);
  scan(frame_group(random_frame(2, rng), default_closure_cap, false));
  scan(frame_group(random_frame(3, rng), default_closure_cap, false));
  scan(sp2_example_group());

  std::ostringstream d;
  d << checked << " elements checked, " << violations << " violation(s) of pullback(g, phi_oct) = phi_oct";
  r.detail = d.str();
  r.pass = violations == 0 && checked > 0;
  return r;
}

// --- criterion 5 -----------------------------------------------------------

CheckResult check_octonion_identities(unsigned long seed) {
  CheckResult r{5, "octonion-identities", false, "", 0};
  const CayleyTable& t = CayleyTable::standard();
  std::mt19937_64 rng(seed ^ 0x2545f4914f6cdd1dULL);
  int failures = 0;
  int instances = 0;

  while (instances < 1000) {
    Octonion x = random_octonion(rng);
    Octonion y = random_octonion(rng);
    Octonion o = random_octonion(rng);

    // alternativity
    if (!(t.mul(t.mul(x, x), y) == t.mul(x, t.mul(x, y)))) ++failures;
    if (!(t.mul(t.mul(y, x), x) == t.mul(y, t.mul(x, x)))) ++failures;
    // composition
    if (t.mul(x, y).norm_sq() != x.norm_sq() * y.norm_sq()) ++failures;

    // (o ybar) x = -(o xbar) y for orthogonal imaginary x, y
    Octonion xi = random_octonion(rng, true);
    Octonion zi = random_octonion(rng, true);
    if (xi.norm_sq() == 0) continue;
    Octonion yi = zi - xi * (inner(zi, xi) / xi.norm_sq());
    if (yi.norm_sq() == 0) continue;
    if (inner(xi, yi) != 0) ++failures;
    if (!(t.mul(t.mul(o, conj(yi)), xi) == -t.mul(t.mul(o, conj(xi)), yi))) ++failures;

    ++instances;
  }

  std::ostringstream d;
  d << instances << " random exact instances, " << failures << " failure(s)";
  r.detail = d.str();
  r.pass = failures == 0;
  return r;
}

// --- criterion 6 -----------------------------------------------------------

CheckResult check_torsion_formulas() {
  CheckResult r{6, "torsion-double-formulas", false, "", 0};
  Form omega = g2_form();
  Form phi = spin7_form();
  int failures = 0;
  for (int i = 0; i < 7; ++i) {
    Form theta = basis_covector(7, i);
    if (!(hodge(wedge(theta, omega)) == -interior(basis_vector(7, i), hodge(omega)))) ++failures;
    (void)torsion_g2(theta, omega);  // throws on route disagreement
  }
  for (int i = 0; i < 8; ++i) {
    Form theta = basis_covector(8, i);
    if (!(hodge(wedge(theta, phi)) == interior(basis_vector(8, i), hodge(phi)))) ++failures;
    (void)torsion_spin7(theta, phi);
  }
  std::ostringstream d;
  d << "7 basis theta + 8 basis Theta, " << failures << " failure(s)";
  r.detail = d.str();
  r.pass = failures == 0;
  return r;
}

// --- criterion 7 -----------------------------------------------------------

CheckResult check_lee_constants() {
  CheckResult r{7, "lee-consistency-constants", false, "", 0};
  Rational c = lee_g2_constant();      // throws when not uniform over basis
  Rational cp = lee_spin7_constant();
  std::ostringstream d;
  d << "g2_lee_constant=" << to_string(c) << " spin7_lee_constant=" << to_string(cp);
  r.detail = d.str();
  r.pass = true;  // stability across the basis is what the check pins
  return r;
}

// --- criterion 8 -----------------------------------------------------------

CheckResult check_scalar_curvature() {
  CheckResult r{8, "scalar-curvature-arithmetic", false, "", 0};
  bool ok = scalar_curvature_g2(Rational(16)) == 30 && scalar_curvature_g2(Rational(8)) == 15 &&
            scalar_curvature_spin7(Rational(36)) == 21 && scalar_curvature_spin7(Rational(72)) == 42;
  r.detail = "s_g2(16)=" + to_string(scalar_curvature_g2(Rational(16))) +
             " s_spin7(36)=" + to_string(scalar_curvature_spin7(Rational(36)));
  r.pass = ok;
  return r;
}

// --- criteria 9..12 (numeric) ----------------------------------------------

std::string residual_brief(const ResidualReport& rep) {
  std::ostringstream d;
  d << rep.test << ": max_res=" << rep.max_residual << " half_h=" << rep.residual_half_h;
  auto it = rep.details.find("fitted_ratio");
  if (it != rep.details.end()) d << " ratio=" << it->second;
  return d.str();
}

CheckResult check_cone_identities(unsigned long seed) {
  CheckResult r{9, "cone-identities", false, "", 0};
  ResidualReport a = verify_cone_identity(g2_form(), 50, 1e-4, 1e-6, seed);
  ResidualReport b = verify_cone_identity(spin7_form(), 50, 1e-4, 1e-6, seed);
  r.detail = residual_brief(a) + "; " + residual_brief(b);
  r.pass = a.pass && b.pass;
  return r;
}

CheckResult check_nearly_kaehler(unsigned long seed) {
  CheckResult r{10, "nearly-kaehler-s6", false, "", 0};
  ResidualReport rep = nearly_kaehler_check(50, 1e-4, 1e-6, seed, 20);
  std::ostringstream d;
  d << "type residual " << rep.max_residual << ", J^2 residual " << rep.details.at("j_square_residual")
    << ", F invariance " << rep.details.at("f_invariance_residual");
  r.detail = d.str();
  r.pass = rep.pass;
  return r;
}

CheckResult check_lee_closedness(unsigned long seed) {
  CheckResult r{11, "lee-closedness", false, "", 0};
  ResidualReport a = lee_closedness_check(LeeCase::g2, 50, 1e-4, 1e-6, seed);
  ResidualReport b = lee_closedness_check(LeeCase::spin7, 50, 1e-4, 1e-6, seed);
  std::ostringstream d;
  d << "g2: |dtheta|=" << a.max_residual << " theta(u)=" << a.details.at("theta_radial_component_mean")
    << " kappa=" << a.details.at("kappa_mean") << "; spin7: |dTheta|=" << b.max_residual
    << " Theta(u)=" << b.details.at("theta_radial_component_mean")
    << " kappa=" << b.details.at("kappa_mean");
  r.detail = d.str();
  r.pass = a.pass && b.pass;
  return r;
}

CheckResult check_dilation(unsigned long seed) {
  CheckResult r{12, "dilation-invariance", false, "", 0};
  ResidualReport rep = dilation_invariance_check(100, 1e-12, seed);
  std::ostringstream d;
  d << "100 random (p, lambda), max relative error " << rep.max_residual;
  r.detail = d.str();
  r.pass = rep.pass;
  return r;
}

// --- criterion 13 ----------------------------------------------------------

CheckResult check_freeness_sanity() {
  CheckResult r{13, "freeness-sanity", false, "", 0};

  FiniteGroup pm = closure({-OrthMap::identity(8)});
  auto [pm_free, pm_witnesses] = is_free_on_sphere(pm);

  OrthMap reflection = OrthMap::identity(8);
  reflection.at(0, 0) = -1;
  FiniteGroup refl = closure({reflection});
  auto [refl_free, refl_witnesses] = is_free_on_sphere(refl);

  bool witness_ok = !refl_witnesses.empty();
  for (const FixedPointWitness& w : refl_witnesses) {
    const OrthMap& g = refl.elements[w.element_index];
    OrthMap shifted = g - OrthMap::identity(8);
    if (w.kernel.empty()) witness_ok = false;
    for (const Vector& v : w.kernel) {
      if (!shifted.apply(v).is_zero()) witness_ok = false;
    }
    // kernel dimension must be the full nullity (7 for the reflection)
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < 8; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < 8; ++j) row.push_back(shifted.at(i, j));
      rows.push_back(std::move(row));
    }
    if (static_cast<int>(w.kernel.size()) != 8 - rank(rows)) witness_ok = false;
  }

  std::ostringstream d;
  d << "{+/-I} free=" << (pm_free ? "yes" : "no") << "; reflection group free=" << (refl_free ? "yes" : "no")
    << " with " << refl_witnesses.size() << " witness(es), kernel dim "
    << (refl_witnesses.empty() ? 0 : refl_witnesses.front().kernel.size());
  r.detail = d.str();
  r.pass = pm_free && pm_witnesses.empty() && !refl_free && witness_ok;
  return r;
}

// --- driver -----------------------------------------------------------------

CheckResult timed(CheckResult (*fn)(), double budget = 0) {
  auto start = std::chrono::steady_clock::now();
  CheckResult r = fn();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget > 0 && r.seconds >= budget) {
    r.pass = false;
    r.detail += " [exceeded " + std::to_string(budget) + " s budget]";
  }
  return r;
}

CheckResult timed_seeded(CheckResult (*fn)(unsigned long), unsigned long seed, double budget = 0) {
  auto start = std::chrono::steady_clock::now();
  CheckResult r = fn(seed);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget > 0 && r.seconds >= budget) {
    r.pass = false;
    r.detail += " [exceeded " + std::to_string(budget) + " s budget]";
  }
  return r;
}

} // namespace

CheckResult run_acceptance_check(int number, unsigned long seed) {
  switch (number) {
    case 1: return timed(check_stabilizer_dims, 5.0);
    case 2: return timed_seeded(check_frame_group_orders, seed, 30.0);
    case 3: return timed(check_gsigma4_elements);
    case 4: return timed_seeded(check_spin7_membership, seed);
    case 5: return timed_seeded(check_octonion_identities, seed);
    case 6: return timed(check_torsion_formulas);
    case 7: return timed(check_lee_constants);
    case 8: return timed(check_scalar_curvature);
    case 9: return timed_seeded(check_cone_identities, seed, 60.0);
    case 10: return timed_seeded(check_nearly_kaehler, seed);
    case 11: return timed_seeded(check_lee_closedness, seed);
    case 12: return timed_seeded(check_dilation, seed);
    case 13: return timed(check_freeness_sanity);
    default: throw std::out_of_range("run_acceptance_check: number out of range");
  }
}

std::vector<CheckResult> run_acceptance_suite(unsigned long seed) {
  std::vector<CheckResult> results;
  for (int n = 1; n <= acceptance_check_count; ++n) results.push_back(run_acceptance_check(n, seed));
  return results;
}

nlohmann::json acceptance_to_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  for (const CheckResult& r : results) {
    checks.push_back({{"number", r.number}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    all = all && r.pass;
  }
  return {{"all_pass", all}, {"checks", checks}};
}

} // namespace octoform
