#pragma once

#include "octoform/linalg.hpp"
#include "octoform/multi_index.hpp"
#include "octoform/rational.hpp"

#include <map>
#include <vector>

namespace octoform {

/// Exact alternating k-form on Euclidean R^n (n <= 8), stored sparsely as
/// basis monomial -> rational coefficient. Zero coefficients are never kept.
class Form {
public:
  Form() = default;
  Form(int dim, int degree);

  /// Monomial c * e_{l1...lk}; labels must be strictly increasing ambient
  /// labels (1-based, or 0-based in R^8).
  static Form monomial(int dim, const std::vector<int>& labels, const Rational& coef = Rational(1));

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mask, Rational>& terms() const { return terms_; }

  Rational coef(Mask m) const;
  Rational coef(const std::vector<int>& labels) const;

  /// Accumulates c into the monomial's coefficient; drops the term when the
  /// sum vanishes. Degree of the mask must match the form degree.
  void add_term(Mask m, const Rational& c);

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form operator+(const Form& other) const;
  Form operator-(const Form& other) const;
  Form operator-() const;
  Form& operator*=(const Rational& s);
  bool operator==(const Form& other) const;

private:
  int dim_ = 0;
  int degree_ = 0;
  std::map<Mask, Rational> terms_;
};

Form operator*(const Rational& s, const Form& a);

/// v as a 1-form; the Euclidean musical isomorphism is the identity on
/// components throughout.
Form flat(const Vector& v);

/// Induced inner product with ⟨e_I, e_J⟩ = δ_IJ; forms of different degree
/// are orthogonal.
Rational inner(const Form& a, const Form& b);

/// Exterior product; sign from the inversion count when merging index sets.
Form wedge(const Form& a, const Form& b);

/// Hodge star for the Euclidean metric, orientation = increasing basis
/// order: *(e_I) = s e_{I^c} with e_I ∧ e_{I^c} = s · (volume form).
Form hodge(const Form& a);

/// Interior product (i_v a)(x_2..x_k) = a(v, x_2..x_k); on a 0-form the
/// result is the zero 0-form.
Form interior(const Vector& v, const Form& a);

/// Pullback (L* a)(x_1..x_k) = a(L x_1 .. L x_k). Contravariant:
/// pullback(L1 * L2, a) = pullback(L2, pullback(L1, a)).
Form pullback(const OrthMap& l, const Form& a);

/// Derivation action of so(n): so_action(A, a) = -Σ_i a(x_1,..,A x_i,..,x_k),
/// so that d/dt pullback(exp(tA), a)|_{t=0} = -so_action(A, a).
/// Throws when A is not exactly skew-symmetric.
Form so_action(const OrthMap& skew, const Form& a);

/// dim { A in so(n) : so_action(A, a) = 0 }, computed as the nullity of the
/// exact linear system over the basis E_ij - E_ji (i < j, lexicographic).
int stabilizer_dim(const Form& a);

} // namespace octoform
