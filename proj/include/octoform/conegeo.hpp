#pragma once

#include "octoform/exterior.hpp"
#include "octoform/numform.hpp"

#include <functional>
#include <map>
#include <string>

namespace octoform {

/// Numeric form-valued function on R^n \ {0}, evaluated pointwise for
/// finite-difference calculus.
struct FormField {
  int dim = 0;
  int degree = 0;
  std::function<DenseForm(const Point&)> eval;
};

/// Central-difference exterior derivative, error O(h²) for smooth fields:
/// df = Σ_i e^i ∧ (f(p + h e_i) - f(p - h e_i)) / (2h).
DenseForm numeric_d(const FormField& f, const Point& p, double h);

/// Splitting of a constant k-form at a unit point u into the radial piece
/// σ = i_u(parallel) and the tangential piece ρ, with parallel = u♭∧σ + ρ
/// holding exactly (no differentiation involved).
struct ConeSplit {
  Point base;
  DenseForm sigma;
  DenseForm rho;
};

ConeSplit cone_split(const Form& parallel, const Point& u, double tol = 1e-12);

/// Residual summary of one numeric check. `convergence_order` is the
/// log2(max_residual / residual_half_h) estimate; it is recorded, not
/// asserted, unless the specific check states an expected order.
struct ResidualReport {
  std::string test;
  int samples = 0;
  double h = 0;
  double max_residual = 0;
  double residual_half_h = 0;
  double convergence_order = 0;
  bool pass = false;
  std::map<std::string, double> details;
};

/// For a constant k-form, the homogeneous extensions σ̃_p = i_{p/|p|}(parallel)
/// and ρ̃_p = tangential part must satisfy the sphere identities d_S σ = k ρ
/// and d_S ρ = 0 (forced by closedness of the constant form in cone
/// coordinates). Checks both at `samples` unit points; requires the residual
/// to shrink by >= 3.5x when h is halved. Also fits and reports the scalar
/// ratio in d_S σ = ratio · ρ.
ResidualReport verify_cone_identity(const Form& parallel, int samples, double h, double tol,
                                    unsigned long seed = 0);

/// Nearly Kähler S^6: with J_u(x) = u·x on tangent vectors, the tangential
/// restriction ψ of d(i_u ω) satisfies ψ(Jx, Jy, z) + ψ(x, y, z) = 0
/// (type (3,0)+(0,3)); J_u² = -id and F(Jx, Jy) = F(x, y) are checked too.
ResidualReport nearly_kaehler_check(int samples, double h, double tol, unsigned long seed = 0,
                                    int triples_per_sample = 20);

enum class LeeCase { g2, spin7 };

/// Cylinder models ω̃ = |p|⁻³ ω (R^7) and φ̃ = |p|⁻⁴ φ (R^8): recovers the
/// Lee form pointwise from (form, numeric d form), then checks dθ ≈ 0, that
/// θ is radial, that θ(u) is one constant across unit samples, and records
/// the fitted κ in d(form) = κ θ ∧ form.
ResidualReport lee_closedness_check(LeeCase which, int samples, double h, double tol,
                                    unsigned long seed = 0, double radial_rel_tol = 1e-8);

/// φ̃_p = φ / |p|⁴ is homogeneous of degree 0 as a covariant tensor: the
/// pullback under p -> λp equals φ̃ to round-off. Checked at random (p, λ).
ResidualReport dilation_invariance_check(int samples, double tol, unsigned long seed = 0);

/// Deterministic unit-sphere sampler (Box-Muller over mt19937_64).
class SphereSampler {
public:
  SphereSampler(int dim, unsigned long seed);
  Point next();
  double gaussian();
  /// Unit vector tangent to the sphere at u.
  Point tangent_at(const Point& u);

private:
  int dim_;
  std::mt19937_64 rng_;
};

} // namespace octoform
