#include "octoform/structures.hpp"

#include "octoform/octonion.hpp"

#include <algorithm>
#include <stdexcept>

namespace octoform {

namespace {

// R^7 basis label i -> R^8 basis label i (internal index shifts by one to
// make room for e0).
Form embed_r7_form(const Form& a) {
  Form out(8, a.degree());
  for (const auto& [m, c] : a.terms()) out.add_term(static_cast<Mask>(m << 1), c);
  return out;
}

void require_shape(const Form& f, int dim, int degree, const char* who) {
  if (f.dim() != dim || f.degree() != degree)
    throw std::invalid_argument(std::string(who) + ": wrong dimension or degree");
}

Vector sharp(const Form& one_form) {
  // Euclidean metric: # is the identity on components.
  Vector v(one_form.dim());
  for (const auto& [m, c] : one_form.terms()) {
    for (int i = 0; i < one_form.dim(); ++i) {
      if (m == (Mask{1} << i)) v[i] = c;
    }
  }
  return v;
}

} // namespace

Form g2_form() {
  Form w(7, 3);
  w.add_term(mask_of_labels({1, 2, 7}, 7), Rational(1));
  w.add_term(mask_of_labels({2, 3, 6}, 7), Rational(-1));
  w.add_term(mask_of_labels({3, 4, 7}, 7), Rational(1));
  w.add_term(mask_of_labels({5, 6, 7}, 7), Rational(1));
  w.add_term(mask_of_labels({1, 4, 6}, 7), Rational(-1));
  w.add_term(mask_of_labels({2, 4, 5}, 7), Rational(-1));
  w.add_term(mask_of_labels({1, 3, 5}, 7), Rational(1));
  return w;
}

Form spin7_form() {
  Form omega = g2_form();
  Form e0 = Form::monomial(8, {0});
  return wedge(e0, embed_r7_form(omega)) + embed_r7_form(hodge(omega));
}

Form spin7_form_octonionic(const CayleyTable& table) {
  // Value on a strictly increasing basis quadruple is ⟨x·(y·z), v⟩. The two
  // bracketings agree whenever an argument is the real unit but differ by
  // the associator on pure-imaginary quadruples; this one is the form whose
  // stabilizer contains every right multiplication R_u, u ∈ S^6 ⊂ Im O
  // (the other bracketing yields the left-multiplication copy of the
  // stabilizer, which frame groups do not sit inside).
  Form raw(8, 4);
  for (Mask m = 0; m < (Mask{1} << 8); ++m) {
    if (degree_of(m) != 4) continue;
    int idx[4];
    int t = 0;
    for (int i = 0; i < 8; ++i) {
      if (m & (Mask{1} << i)) idx[t++] = i;
    }
    Octonion x = Octonion::basis(idx[0]);
    Octonion y = Octonion::basis(idx[1]);
    Octonion z = Octonion::basis(idx[2]);
    Octonion v = Octonion::basis(idx[3]);
    raw.add_term(m, inner(table.mul(x, table.mul(y, z)), v));
  }

  Rational max_abs(0);
  for (const auto& [m, c] : raw.terms()) max_abs = std::max(max_abs, Rational(abs(c)));
  if (max_abs == 0) throw std::logic_error("spin7_form_octonionic: vanishing form");
  raw *= Rational(1) / max_abs;
  return raw;
}

Form spin7_form_octonionic() { return spin7_form_octonionic(CayleyTable::standard()); }

Form lee_g2(const Form& omega3, const Form& domega4) {
  require_shape(omega3, 7, 3, "lee_g2(omega)");
  require_shape(domega4, 7, 4, "lee_g2(domega)");
  return rational_of(-1, 3) * hodge(wedge(hodge(domega4), omega3));
}

Form lee_spin7(const Form& phi4, const Form& dphi5) {
  require_shape(phi4, 8, 4, "lee_spin7(phi)");
  require_shape(dphi5, 8, 5, "lee_spin7(dphi)");
  return rational_of(-1, 7) * hodge(wedge(hodge(dphi5), phi4));
}

Form torsion_g2(const Form& theta, const Form& omega) {
  require_shape(theta, 7, 1, "torsion_g2(theta)");
  require_shape(omega, 7, 3, "torsion_g2(omega)");
  Form star_route = rational_of(1, 4) * hodge(wedge(theta, omega));
  Form interior_route = rational_of(-1, 4) * interior(sharp(theta), hodge(omega));
  if (!(star_route == interior_route))
    throw std::logic_error("torsion_g2: *(θ∧ω) route disagrees with -i_θ(*ω) route");
  return star_route;
}

Form torsion_spin7(const Form& theta, const Form& phi) {
  require_shape(theta, 8, 1, "torsion_spin7(Theta)");
  require_shape(phi, 8, 4, "torsion_spin7(phi)");
  Form star_route = rational_of(-1, 6) * hodge(wedge(theta, phi));
  Form interior_route = rational_of(-1, 6) * interior(sharp(theta), hodge(phi));
  if (!(star_route == interior_route))
    throw std::logic_error("torsion_spin7: *(Θ∧φ) route disagrees with i_Θ(*φ) route");
  return star_route;
}

Rational scalar_curvature_g2(const Rational& theta_norm_sq) {
  if (theta_norm_sq < 0) throw std::invalid_argument("scalar_curvature_g2: negative |θ|²");
  return rational_of(15, 8) * theta_norm_sq;
}

Rational scalar_curvature_spin7(const Rational& theta_norm_sq) {
  if (theta_norm_sq < 0) throw std::invalid_argument("scalar_curvature_spin7: negative |Θ|²");
  return rational_of(21, 36) * theta_norm_sq;
}

namespace {

// Extracts c from result = c * beta (beta a basis covector); throws when the
// result is not proportional to beta.
Rational proportionality(const Form& result, Mask beta_mask) {
  for (const auto& [m, c] : result.terms()) {
    if (m != beta_mask) throw std::logic_error("lee constant: result not proportional to β");
  }
  return result.coef(beta_mask);
}

} // namespace

Rational lee_g2_constant() {
  Form omega = g2_form();
  std::optional<Rational> c;
  for (int i = 0; i < 7; ++i) {
    Form beta(7, 1);
    beta.add_term(Mask{1} << i, Rational(1));
    Form domega = rational_of(3, 4) * wedge(beta, omega);
    Rational ci = proportionality(lee_g2(omega, domega), Mask{1} << i);
    if (c && *c != ci) throw std::logic_error("lee_g2_constant: scalar varies with β");
    c = ci;
  }
  return *c;
}

Rational lee_spin7_constant() {
  Form phi = spin7_form();
  std::optional<Rational> c;
  for (int i = 0; i < 8; ++i) {
    Form beta(8, 1);
    beta.add_term(Mask{1} << i, Rational(1));
    Form dphi = wedge(beta, phi);
    Rational ci = proportionality(lee_spin7(phi, dphi), Mask{1} << i);
    if (c && *c != ci) throw std::logic_error("lee_spin7_constant: scalar varies with β");
    c = ci;
  }
  return *c;
}

namespace {

struct PermSearch {
  int n;
  const Form* from;
  const Form* to;
  // sigma[m] = image index of domain index m under P (P e_m = s_m e_sigma(m)).
  std::array<int, 8> sigma;
  std::array<bool, 8> used;

  // Sign of sorting (sigma(j) for j in the sorted mask).
  static int image_sort_sign(const std::array<int, 8>& sigma, Mask domain_mask, int n) {
    int seq[8];
    int t = 0;
    for (int j = 0; j < n; ++j) {
      if (domain_mask & (Mask{1} << j)) seq[t++] = sigma[static_cast<std::size_t>(j)];
    }
    int inv = 0;
    for (int a = 0; a < t; ++a)
      for (int b = a + 1; b < t; ++b)
        if (seq[a] > seq[b]) ++inv;
    return (inv & 1) ? -1 : 1;
  }

  static Mask image_mask(const std::array<int, 8>& sigma, Mask domain_mask, int n) {
    Mask out = 0;
    for (int j = 0; j < n; ++j) {
      if (domain_mask & (Mask{1} << j)) out |= (Mask{1} << sigma[static_cast<std::size_t>(j)]);
    }
    return out;
  }

  bool coefficients_compatible(int assigned) const {
    const int k = to->degree();
    for (Mask m = 0; m < (Mask{1} << assigned); ++m) {
      if (degree_of(m) != k) continue;
      Rational ct = to->coef(m);
      Rational cf = from->coef(image_mask(sigma, m, assigned));
      if (abs(ct) != abs(cf)) return false;
    }
    return true;
  }

  std::optional<OrthMap> solve_signs() const {
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
      bool ok = true;
      for (const auto& [m, ct] : to->terms()) {
        int prod = 1;
        for (int j = 0; j < n; ++j) {
          if ((m & (Mask{1} << j)) && (bits & (1u << j))) prod = -prod;
        }
        Rational cf = from->coef(image_mask(sigma, m, n));
        int sort_sign = image_sort_sign(sigma, m, n);
        if (Rational(prod * sort_sign) * cf != ct) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      // Zero coefficients of `to` already pull back to zero: the magnitude
      // matching ran at full assignment before signs are solved.
      OrthMap p(n);
      for (int m = 0; m < n; ++m) {
        int s = (bits & (1u << m)) ? -1 : 1;
        p.at(sigma[static_cast<std::size_t>(m)], m) = s;
      }
      return p;
    }
    return std::nullopt;
  }

  std::optional<OrthMap> search(int depth) {
    if (depth == n) return solve_signs();
    for (int img = 0; img < n; ++img) {
      if (used[static_cast<std::size_t>(img)]) continue;
      sigma[static_cast<std::size_t>(depth)] = img;
      used[static_cast<std::size_t>(img)] = true;
      if (coefficients_compatible(depth + 1)) {
        auto hit = search(depth + 1);
        if (hit) return hit;
      }
      used[static_cast<std::size_t>(img)] = false;
    }
    return std::nullopt;
  }
};

std::optional<OrthMap> signed_perm_to(const Form& from, const Form& to) {
  PermSearch s;
  s.n = from.dim();
  s.from = &from;
  s.to = &to;
  s.used.fill(false);
  auto hit = s.search(0);
  if (hit && !(pullback(*hit, from) == to)) throw std::logic_error("signed_perm_to: witness verification failed");
  return hit;
}

} // namespace

std::optional<SignedPermWitness> find_signed_permutation(const Form& from, const Form& to) {
  if (from.dim() != to.dim() || from.degree() != to.degree()) return std::nullopt;
  if (auto p = signed_perm_to(from, to)) return SignedPermWitness{*p, 1};
  if (auto p = signed_perm_to(from, -to)) return SignedPermWitness{*p, -1};
  return std::nullopt;
}

} // namespace octoform
