#pragma once

#include "octoform/exterior.hpp"
#include "octoform/linalg.hpp"
#include "octoform/rational.hpp"

#include <array>
#include <string>

namespace octoform {

/// Element of the 8-dimensional composition algebra over basis e0 (real
/// unit) and e1..e7 (imaginary part).
struct Octonion {
  std::array<Rational, 8> c{};

  static Octonion basis(int i);
  /// Embeds an exact R^7 vector as an imaginary octonion (components e1..e7).
  static Octonion imaginary(const Vector& v7);

  Rational real() const { return c[0]; }
  Octonion imaginary_part() const;
  bool is_imaginary() const { return c[0] == 0; }
  Rational norm_sq() const;

  Octonion operator+(const Octonion& o) const;
  Octonion operator-(const Octonion& o) const;
  Octonion operator-() const;
  Octonion operator*(const Rational& s) const;
  bool operator==(const Octonion& o) const { return c == o.c; }
};

Rational inner(const Octonion& a, const Octonion& b);

/// Conjugation: negates the imaginary part; conj(x y) = conj(y) conj(x).
Octonion conj(const Octonion& x);

/// Structure constants of the octonion product, derived from a generic G2
/// 3-form ω on R^7: e_i e_j = -δ_ij e0 + Σ_k ω(e_i, e_j, e_k) e_k for
/// imaginary labels i, j, k in 1..7. Construction validates the composition
/// property |xy| = |x||y| on a deterministic test set and rejects forms that
/// fail it.
class CayleyTable {
public:
  explicit CayleyTable(const Form& omega3);

  /// Table of the canonical ω (built once, shared read-only).
  static const CayleyTable& standard();

  /// ω(e_i, e_j, e_k), labels 1..7, antisymmetric in all arguments.
  const Rational& structure_constant(int i, int j, int k) const;

  Octonion mul(const Octonion& x, const Octonion& y) const;

  /// Cross product of imaginary parts: (x × y)_k = ω(x, y, e_k).
  Octonion cross(const Octonion& x, const Octonion& y) const;

  /// 8x8 matrix R_x with R_x(o) = o·x in the e0..e7 basis. Orthogonal iff
  /// |x| = 1; for unit imaginary x, R_x^2 = -I.
  OrthMap right_mult_matrix(const Octonion& x) const;

  /// One "e_i*e_j = ..." line per pair i, j in 0..7.
  std::vector<std::string> debug_dump() const;

private:
  std::array<Rational, 7 * 7 * 7> c_{};
  Rational& sc(int i, int j, int k);
};

/// Product and conjugation in the standard table.
Octonion operator*(const Octonion& x, const Octonion& y);

/// Quaternion frame designation: the first ordered basis triple (i < j < k,
/// labels 1..7) with e_i e_j = ±e_k (swapped to make e_i e_j = +e_k), plus
/// the first basis label l orthogonal to the triple. span{e0, i, j, k} is
/// then an associative quaternion subalgebra and l a compatible doubling
/// unit.
struct QuaternionFrame {
  int i, j, k, l;  // imaginary labels 1..7
};

QuaternionFrame designated_quaternion_frame(const CayleyTable& table = CayleyTable::standard());

} // namespace octoform
