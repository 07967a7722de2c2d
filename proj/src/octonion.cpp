#include "octoform/octonion.hpp"

#include "octoform/structures.hpp"

#include <sstream>
#include <stdexcept>

namespace octoform {

Octonion Octonion::basis(int i) {
  if (i < 0 || i > 7) throw std::invalid_argument("Octonion::basis: index out of range");
  Octonion o;
  o.c[static_cast<std::size_t>(i)] = 1;
  return o;
}

Octonion Octonion::imaginary(const Vector& v7) {
  if (v7.dim() != 7) throw std::invalid_argument("Octonion::imaginary: expected an R^7 vector");
  Octonion o;
  for (int i = 0; i < 7; ++i) o.c[static_cast<std::size_t>(i + 1)] = v7[i];
  return o;
}

Octonion Octonion::imaginary_part() const {
  Octonion o = *this;
  o.c[0] = 0;
  return o;
}

Rational Octonion::norm_sq() const {
  Rational s(0);
  for (const Rational& x : c) s += x * x;
  return s;
}

Octonion Octonion::operator+(const Octonion& o) const {
  Octonion out;
  for (int i = 0; i < 8; ++i) out.c[i] = c[i] + o.c[i];
  return out;
}

Octonion Octonion::operator-(const Octonion& o) const {
  Octonion out;
  for (int i = 0; i < 8; ++i) out.c[i] = c[i] - o.c[i];
  return out;
}

Octonion Octonion::operator-() const {
  Octonion out;
  for (int i = 0; i < 8; ++i) out.c[i] = -c[i];
  return out;
}

Octonion Octonion::operator*(const Rational& s) const {
  Octonion out;
  for (int i = 0; i < 8; ++i) out.c[i] = c[i] * s;
  return out;
}

Rational inner(const Octonion& a, const Octonion& b) {
  Rational s(0);
  for (int i = 0; i < 8; ++i) s += a.c[i] * b.c[i];
  return s;
}

Octonion conj(const Octonion& x) {
  Octonion out = -x;
  out.c[0] = x.c[0];
  return out;
}

Rational& CayleyTable::sc(int i, int j, int k) {
  return c_[static_cast<std::size_t>(((i - 1) * 7 + (j - 1)) * 7 + (k - 1))];
}

const Rational& CayleyTable::structure_constant(int i, int j, int k) const {
  return c_[static_cast<std::size_t>(((i - 1) * 7 + (j - 1)) * 7 + (k - 1))];
}

CayleyTable::CayleyTable(const Form& omega3) {
  if (omega3.dim() != 7 || omega3.degree() != 3)
    throw std::invalid_argument("CayleyTable: expected a degree-3 form on R^7");

  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= 7; ++k) {
        if (k == i || k == j) continue;
        // ω(e_i, e_j, e_k) = sort sign * stored coefficient
        int l[3] = {i, j, k};
        int sign = 1;
        if (l[0] > l[1]) { std::swap(l[0], l[1]); sign = -sign; }
        if (l[1] > l[2]) { std::swap(l[1], l[2]); sign = -sign; }
        if (l[0] > l[1]) { std::swap(l[0], l[1]); sign = -sign; }
        Rational v = omega3.coef({l[0], l[1], l[2]});
        sc(i, j, k) = sign > 0 ? v : Rational(-v);
      }
    }
  }

  // Composition check |xy|^2 = |x|^2 |y|^2 on a deterministic test set.
  std::vector<Octonion> probes;
  for (int i = 0; i < 8; ++i) probes.push_back(Octonion::basis(i));
  Octonion ones;
  for (int i = 0; i < 8; ++i) ones.c[static_cast<std::size_t>(i)] = 1;
  probes.push_back(ones);
  Octonion ramp;
  for (int i = 0; i < 8; ++i) ramp.c[static_cast<std::size_t>(i)] = rational_of(i + 1, i % 3 + 1);
  probes.push_back(ramp);
  for (const Octonion& x : probes) {
    for (const Octonion& y : probes) {
      if (mul(x, y).norm_sq() != x.norm_sq() * y.norm_sq())
        throw std::invalid_argument(
            "CayleyTable: form is not G2-generic (composition |xy| = |x||y| fails)");
    }
  }
}

const CayleyTable& CayleyTable::standard() {
  static const CayleyTable table(g2_form());
  return table;
}

Octonion CayleyTable::mul(const Octonion& x, const Octonion& y) const {
  Octonion out;
  Rational re = x.c[0] * y.c[0];
  for (int i = 1; i <= 7; ++i) re -= x.c[static_cast<std::size_t>(i)] * y.c[static_cast<std::size_t>(i)];
  out.c[0] = re;
  for (int k = 1; k <= 7; ++k) {
    Rational v = x.c[0] * y.c[static_cast<std::size_t>(k)] + y.c[0] * x.c[static_cast<std::size_t>(k)];
    for (int i = 1; i <= 7; ++i) {
      const Rational& xi = x.c[static_cast<std::size_t>(i)];
      if (xi == 0) continue;
      for (int j = 1; j <= 7; ++j) {
        if (j == i || i == k || j == k) continue;
        const Rational& cijk = structure_constant(i, j, k);
        if (cijk == 0) continue;
        v += cijk * xi * y.c[static_cast<std::size_t>(j)];
      }
    }
    out.c[static_cast<std::size_t>(k)] = v;
  }
  return out;
}

Octonion CayleyTable::cross(const Octonion& x, const Octonion& y) const {
  Octonion out = mul(x.imaginary_part(), y.imaginary_part());
  out.c[0] = 0;
  return out;
}

OrthMap CayleyTable::right_mult_matrix(const Octonion& x) const {
  OrthMap r(8);
  for (int m = 0; m < 8; ++m) {
    Octonion col = mul(Octonion::basis(m), x);
    for (int n = 0; n < 8; ++n) r.at(n, m) = col.c[static_cast<std::size_t>(n)];
  }
  return r;
}

std::vector<std::string> CayleyTable::debug_dump() const {
  std::vector<std::string> lines;
  auto render = [](const Octonion& o) {
    std::ostringstream s;
    bool first = true;
    for (int i = 0; i < 8; ++i) {
      const Rational& v = o.c[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      if (!first) s << " + ";
      if (v != 1) s << to_string(v) << "*";
      s << "e" << i;
      first = false;
    }
    if (first) s << "0";
    return s.str();
  };
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      lines.push_back("e" + std::to_string(i) + "*e" + std::to_string(j) + " = " +
                      render(mul(Octonion::basis(i), Octonion::basis(j))));
    }
  }
  return lines;
}

Octonion operator*(const Octonion& x, const Octonion& y) { return CayleyTable::standard().mul(x, y); }

QuaternionFrame designated_quaternion_frame(const CayleyTable& table) {
  for (int a = 1; a <= 7; ++a) {
    for (int b = a + 1; b <= 7; ++b) {
      Octonion p = table.mul(Octonion::basis(a), Octonion::basis(b));
      for (int c = b + 1; c <= 7; ++c) {
        if (p == Octonion::basis(c)) {
          for (int l = 1; l <= 7; ++l) {
            if (l != a && l != b && l != c) return {a, b, c, l};
          }
        }
        if (p == -Octonion::basis(c)) {
          for (int l = 1; l <= 7; ++l) {
            if (l != a && l != b && l != c) return {b, a, c, l};
          }
        }
      }
    }
  }
  throw std::runtime_error("designated_quaternion_frame: no associative basis triple found");
}

} // namespace octoform
