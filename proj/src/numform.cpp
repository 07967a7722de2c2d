#include "octoform/numform.hpp"

#include <cmath>
#include <stdexcept>

namespace octoform {

double norm(const Point& p) { return std::sqrt(dot(p, p)); }

double dot(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

DenseForm DenseForm::from_exact(const Form& f) {
  DenseForm out(f.dim(), f.degree());
  for (const auto& [m, coef] : f.terms()) out.c[m] = coef.get_d();
  return out;
}

DenseForm& DenseForm::operator+=(const DenseForm& o) {
  for (std::size_t m = 0; m < c.size(); ++m) c[m] += o.c[m];
  return *this;
}

DenseForm& DenseForm::operator-=(const DenseForm& o) {
  for (std::size_t m = 0; m < c.size(); ++m) c[m] -= o.c[m];
  return *this;
}

DenseForm& DenseForm::operator*=(double s) {
  for (double& x : c) x *= s;
  return *this;
}

DenseForm DenseForm::operator+(const DenseForm& o) const {
  DenseForm out = *this;
  out += o;
  return out;
}

DenseForm DenseForm::operator-(const DenseForm& o) const {
  DenseForm out = *this;
  out -= o;
  return out;
}

DenseForm DenseForm::operator*(double s) const {
  DenseForm out = *this;
  out *= s;
  return out;
}

double DenseForm::max_abs() const {
  double m = 0;
  for (double x : c) m = std::max(m, std::fabs(x));
  return m;
}

namespace {

double small_det(const std::vector<std::vector<double>>& a, std::vector<int>& cols, int row) {
  if (cols.empty()) return 1.0;
  if (cols.size() == 1) return a[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[0])];
  double s = 0;
  int sign = 1;
  for (std::size_t pick = 0; pick < cols.size(); ++pick) {
    int col = cols[pick];
    std::vector<int> rest;
    for (std::size_t t = 0; t < cols.size(); ++t) {
      if (t != pick) rest.push_back(cols[t]);
    }
    s += sign * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] * small_det(a, rest, row + 1);
    sign = -sign;
  }
  return s;
}

} // namespace

double DenseForm::eval(const std::vector<Point>& args) const {
  if (static_cast<int>(args.size()) != degree)
    throw std::invalid_argument("DenseForm::eval: wrong number of arguments");
  // rows = argument index, cols = coordinate index
  std::vector<std::vector<double>> a(args.begin(), args.end());
  double s = 0;
  for (Mask m = 0; m < (Mask{1} << dim); ++m) {
    if (degree_of(m) != degree || c[m] == 0.0) continue;
    std::vector<int> cols;
    for (int i = 0; i < dim; ++i) {
      if (m & (Mask{1} << i)) cols.push_back(i);
    }
    s += c[m] * small_det(a, cols, 0);
  }
  return s;
}

DenseForm wedge(const DenseForm& a, const DenseForm& b) {
  if (a.dim != b.dim) throw std::invalid_argument("wedge: dimension mismatch");
  DenseForm out(a.dim, a.degree + b.degree);
  if (out.degree > out.dim) return out;
  for (Mask ma = 0; ma < (Mask{1} << a.dim); ++ma) {
    if (degree_of(ma) != a.degree || a.c[ma] == 0.0) continue;
    for (Mask mb = 0; mb < (Mask{1} << b.dim); ++mb) {
      if (degree_of(mb) != b.degree || b.c[mb] == 0.0) continue;
      int s = wedge_sign(ma, mb);
      if (s) out.c[ma | mb] += s * a.c[ma] * b.c[mb];
    }
  }
  return out;
}

DenseForm hodge(const DenseForm& a) {
  DenseForm out(a.dim, a.dim - a.degree);
  for (Mask m = 0; m < (Mask{1} << a.dim); ++m) {
    if (degree_of(m) != a.degree || a.c[m] == 0.0) continue;
    out.c[full_mask(a.dim) & ~m] = hodge_sign(m, a.dim) * a.c[m];
  }
  return out;
}

DenseForm interior(const Point& v, const DenseForm& a) {
  if (static_cast<int>(v.size()) != a.dim) throw std::invalid_argument("interior: dimension mismatch");
  if (a.degree == 0) return DenseForm(a.dim, 0);
  DenseForm out(a.dim, a.degree - 1);
  for (Mask m = 0; m < (Mask{1} << a.dim); ++m) {
    if (degree_of(m) != a.degree || a.c[m] == 0.0) continue;
    for (int j = 0; j < a.dim; ++j) {
      if (!(m & (Mask{1} << j)) || v[static_cast<std::size_t>(j)] == 0.0) continue;
      out.c[m ^ (Mask{1} << j)] += removal_sign(m, j) * v[static_cast<std::size_t>(j)] * a.c[m];
    }
  }
  return out;
}

double inner(const DenseForm& a, const DenseForm& b) {
  double s = 0;
  for (std::size_t m = 0; m < a.c.size(); ++m) s += a.c[m] * b.c[m];
  return s;
}

DenseForm wedge_covector(const Point& cov, const DenseForm& a) {
  DenseForm one(a.dim, 1);
  for (int i = 0; i < a.dim; ++i) one.c[Mask{1} << i] = cov[static_cast<std::size_t>(i)];
  return wedge(one, a);
}

DenseForm tangential_part(const DenseForm& a, const Point& u) {
  return a - wedge_covector(u, interior(u, a));
}

} // namespace octoform
