#pragma once

#include "octoform/exterior.hpp"
#include "octoform/multi_index.hpp"

#include <vector>

namespace octoform {

/// Point in R^n for the numeric layer.
using Point = std::vector<double>;

double norm(const Point& p);
double dot(const Point& a, const Point& b);

/// Dense double-precision k-form on R^n, coefficients indexed by basis-mask.
/// The numeric layer never feeds back into the exact modules.
struct DenseForm {
  int dim = 0;
  int degree = 0;
  std::vector<double> c;  // size 1 << dim, entries with popcount != degree stay 0

  DenseForm() = default;
  DenseForm(int dim_, int degree_)
      : dim(dim_), degree(degree_), c(static_cast<std::size_t>(1) << dim_, 0.0) {}

  static DenseForm from_exact(const Form& f);

  double operator[](Mask m) const { return c[m]; }
  double& operator[](Mask m) { return c[m]; }

  DenseForm& operator+=(const DenseForm& o);
  DenseForm& operator-=(const DenseForm& o);
  DenseForm& operator*=(double s);
  DenseForm operator+(const DenseForm& o) const;
  DenseForm operator-(const DenseForm& o) const;
  DenseForm operator*(double s) const;

  double max_abs() const;

  /// Evaluation on `degree` vectors (determinant expansion per monomial).
  double eval(const std::vector<Point>& args) const;
};

DenseForm wedge(const DenseForm& a, const DenseForm& b);
DenseForm hodge(const DenseForm& a);
DenseForm interior(const Point& v, const DenseForm& a);
double inner(const DenseForm& a, const DenseForm& b);

/// covector ∧ form, the covector given by components.
DenseForm wedge_covector(const Point& cov, const DenseForm& a);

/// Tangential part at unit u: a - u♭ ∧ i_u a (projects the u-direction out
/// of every slot).
DenseForm tangential_part(const DenseForm& a, const Point& u);

} // namespace octoform
