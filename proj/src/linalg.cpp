#include "octoform/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace octoform {

bool Vector::is_zero() const {
  for (int i = 0; i < dim(); ++i) {
    if ((*this)[i] != 0) return false;
  }
  return true;
}

Rational inner(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
  Rational s(0);
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

OrthMap OrthMap::identity(int dim) {
  OrthMap m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

OrthMap OrthMap::operator*(const OrthMap& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("OrthMap::operator*: dimension mismatch");
  OrthMap out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        if (rhs.at(k, j) == 0) continue;
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

OrthMap OrthMap::operator-() const {
  OrthMap out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out.at(i, j) = -at(i, j);
  return out;
}

OrthMap OrthMap::operator-(const OrthMap& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("OrthMap::operator-: dimension mismatch");
  OrthMap out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out.at(i, j) = at(i, j) - rhs.at(i, j);
  return out;
}

OrthMap OrthMap::operator+(const OrthMap& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("OrthMap::operator+: dimension mismatch");
  OrthMap out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out.at(i, j) = at(i, j) + rhs.at(i, j);
  return out;
}

Vector OrthMap::apply(const Vector& v) const {
  if (dim_ != v.dim()) throw std::invalid_argument("OrthMap::apply: dimension mismatch");
  Vector out(dim_);
  for (int i = 0; i < dim_; ++i) {
    Rational s(0);
    for (int j = 0; j < dim_; ++j) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

OrthMap OrthMap::transpose() const {
  OrthMap out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool OrthMap::is_identity() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool OrthMap::is_orthogonal() const { return (transpose() * *this).is_identity(); }

bool OrthMap::is_skew() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j <= i; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

bool OrthMapLess::operator()(const OrthMap& x, const OrthMap& y) const {
  if (x.dim() != y.dim()) return x.dim() < y.dim();
  for (int i = 0; i < x.dim(); ++i) {
    for (int j = 0; j < x.dim(); ++j) {
      int c = cmp(x.at(i, j), y.at(i, j));
      if (c != 0) return c < 0;
    }
  }
  return false;
}

Rational det(const OrthMap& m) {
  const int n = m.dim();
  if (n == 0) return Rational(1);

  // Clear denominators row by row so Bareiss runs over integers.
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(n),
                                        std::vector<mpz_class>(static_cast<std::size_t>(n)));
  mpz_class scale = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) l = lcm(l, m.at(i, j).get_den());
    for (int j = 0; j < n; ++j) {
      mpz_class factor = l / m.at(i, j).get_den();
      a[i][j] = m.at(i, j).get_num() * factor;
    }
    scale *= l;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return Rational(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;  // exact by Bareiss
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  Rational d(a[n - 1][n - 1], scale);
  d.canonicalize();
  if (sign < 0) d = -d;
  return d;
}

int rank(std::vector<std::vector<Rational>> rows) {
  const int nrows = static_cast<int>(rows.size());
  if (nrows == 0) return 0;
  const int ncols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int pivot = -1;
    for (int i = r; i < nrows; ++i) {
      if (rows[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = r + 1; i < nrows; ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<Vector> kernel_basis(const OrthMap& m) {
  const int n = m.dim();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  // Reduced row echelon form.
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int pivot = -1;
    for (int i = r; i < n; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    Rational inv = a[r][c];
    for (int j = c; j < n; ++j) a[r][j] /= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Vector> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector v(n);
    v[f] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

OrthMap inverse(const OrthMap& m) {
  const int n = m.dim();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                       std::vector<Rational>(2 * static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    a[i][static_cast<std::size_t>(n) + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("inverse: singular matrix");
    std::swap(a[c], a[pivot]);
    Rational inv = a[c][c];
    for (int j = c; j < 2 * n; ++j) a[c][j] /= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  OrthMap out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = a[i][static_cast<std::size_t>(n) + j];
  return out;
}

OrthMap cayley_rotation(const OrthMap& skew) {
  if (!skew.is_skew()) throw std::invalid_argument("cayley_rotation: input not skew-symmetric");
  const int n = skew.dim();
  OrthMap id = OrthMap::identity(n);
  return (id - skew) * inverse(id + skew);
}

OrthMap random_rotation(int dim, std::mt19937_64& rng, int entry_range) {
  OrthMap s(dim);
  const unsigned span = static_cast<unsigned>(2 * entry_range + 1);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      long v = static_cast<long>(rng() % span) - entry_range;
      s.at(i, j) = v;
      s.at(j, i) = -v;
    }
  }
  return cayley_rotation(s);
}

} // namespace octoform
