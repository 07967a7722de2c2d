#pragma once

#include "octoform/rational.hpp"

#include <random>
#include <vector>

namespace octoform {

/// Exact vector in R^n.
class Vector {
public:
  Vector() = default;
  explicit Vector(int dim) : comp_(static_cast<std::size_t>(dim), Rational(0)) {}

  int dim() const { return static_cast<int>(comp_.size()); }
  const Rational& operator[](int i) const { return comp_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return comp_[static_cast<std::size_t>(i)]; }

  bool operator==(const Vector& other) const { return comp_ == other.comp_; }
  bool is_zero() const;

private:
  std::vector<Rational> comp_;
};

Rational inner(const Vector& a, const Vector& b);

/// Exact n x n matrix over the rationals. Carries elements of O(n) and
/// skew-symmetric generators; orthogonality is checked by is_orthogonal()
/// where a contract requires it, not at construction.
class OrthMap {
public:
  OrthMap() = default;
  explicit OrthMap(int dim)
      : dim_(dim), a_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Rational(0)) {}

  static OrthMap identity(int dim);

  int dim() const { return dim_; }
  const Rational& at(int row, int col) const { return a_[static_cast<std::size_t>(row) * dim_ + col]; }
  Rational& at(int row, int col) { return a_[static_cast<std::size_t>(row) * dim_ + col]; }

  OrthMap operator*(const OrthMap& rhs) const;
  OrthMap operator-() const;
  OrthMap operator-(const OrthMap& rhs) const;
  OrthMap operator+(const OrthMap& rhs) const;
  bool operator==(const OrthMap& other) const { return dim_ == other.dim_ && a_ == other.a_; }

  Vector apply(const Vector& v) const;
  OrthMap transpose() const;

  bool is_identity() const;
  bool is_orthogonal() const;  // exact MᵀM = I
  bool is_skew() const;        // exact M + Mᵀ = 0

private:
  int dim_ = 0;
  std::vector<Rational> a_;
};

/// Strict lexicographic order on (dim, entries); used for exact dedup.
struct OrthMapLess {
  bool operator()(const OrthMap& x, const OrthMap& y) const;
};

/// Exact determinant via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Rational det(const OrthMap& m);

/// Row rank over Q (Gaussian elimination, exact).
int rank(std::vector<std::vector<Rational>> rows);

/// Rational basis of ker(m).
std::vector<Vector> kernel_basis(const OrthMap& m);

OrthMap inverse(const OrthMap& m);  // throws std::domain_error when singular

/// Cayley transform (I - S)(I + S)^{-1} of a skew matrix: special orthogonal
/// with rational entries.
OrthMap cayley_rotation(const OrthMap& skew);

/// Random exact rotation: Cayley transform of a small random integer skew
/// matrix. Deterministic for a given generator state.
OrthMap random_rotation(int dim, std::mt19937_64& rng, int entry_range = 2);

} // namespace octoform
