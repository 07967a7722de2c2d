#pragma once

#include "octoform/exterior.hpp"
#include "octoform/linalg.hpp"
#include "octoform/rational.hpp"

#include <optional>

namespace octoform {

class CayleyTable;

/// Canonical G2 3-form on R^7:
///   ω = e127 - e236 + e347 + e567 - e146 - e245 + e135.
Form g2_form();

/// Canonical Spin(7) 4-form on R^8: φ = e0 ∧ ω + *_7 ω, with R^7 embedded
/// as e1..e7. 14 terms, coefficients ±1.
Form spin7_form();

/// Cayley 4-form built from octonion multiplication: the alternating form
/// whose value on a strictly increasing basis quadruple (x,y,z,v) is
/// ⟨x·(y·z), v⟩, rescaled so the largest |coefficient| is 1. This is the
/// 4-form preserved by every right multiplication R_u, u ∈ S^6 ⊂ Im O;
/// both bracketings of the triple product agree when an argument is e0.
Form spin7_form_octonionic(const CayleyTable& table);
Form spin7_form_octonionic();

/// Lee form of a G2 pair: θ = -(1/3) * ( *(dω) ∧ ω ), with dω supplied by
/// the caller (this module is purely pointwise/algebraic).
Form lee_g2(const Form& omega3, const Form& domega4);

/// Spin(7) Lee form: Θ = -(1/7) * ( *(dφ) ∧ φ ).
Form lee_spin7(const Form& phi4, const Form& dphi5);

/// Torsion 3-form T = (1/4) *(θ ∧ ω). Computes the second route
/// -(1/4) i_{θ#}(*ω) as well and throws std::logic_error when the two
/// disagree (a sign-convention bug).
Form torsion_g2(const Form& theta, const Form& omega);

/// Torsion 3-form T = -(1/6) *(Θ ∧ φ), dual-checked against -(1/6) i_{Θ#}(*φ).
Form torsion_spin7(const Form& theta, const Form& phi);

/// s = (15/8)|θ|²; input is the squared norm, must be nonnegative.
Rational scalar_curvature_g2(const Rational& theta_norm_sq);

/// s = (21/36)|Θ|².
Rational scalar_curvature_spin7(const Rational& theta_norm_sq);

/// The scalar c with lee_g2(ω, (3/4) β ∧ ω) = c β, verified identical over
/// all 7 basis covectors β (throws std::logic_error otherwise).
Rational lee_g2_constant();

/// The scalar c' with lee_spin7(φ, β ∧ φ) = c' β over all 8 basis β.
Rational lee_spin7_constant();

/// Signed permutation P (P e_m = ± e_{π(m)}) with pullback(P, from) =
/// overall_sign * to, if one exists. Deterministic search order.
struct SignedPermWitness {
  OrthMap map;
  int overall_sign;  // +1 or -1
};

std::optional<SignedPermWitness> find_signed_permutation(const Form& from, const Form& to);

} // namespace octoform
