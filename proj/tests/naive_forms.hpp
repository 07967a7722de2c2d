#pragma once

// Test-only reference implementation of the exterior operations by direct
// multilinear evaluation. Deliberately independent of the bitmask sign
// kernels in the library: wedge is a shuffle sum over argument positions,
// the Hodge star is read off the defining relation (a ∧ e_J)(e_1,...,e_n),
// pullback and the so(n) action evaluate on transformed argument vectors.

#include "octoform/exterior.hpp"
#include "octoform/linalg.hpp"

#include <functional>
#include <vector>

namespace naive {

using octoform::Form;
using octoform::Mask;
using octoform::OrthMap;
using octoform::Rational;
using octoform::Vector;

struct NaiveForm {
  int dim = 0;
  int degree = 0;
  std::function<Rational(const std::vector<Vector>&)> value;
};

inline Vector basis_vector(int dim, int index) {
  Vector v(dim);
  v[index] = 1;
  return v;
}

// det of the k x k matrix with rows = components of args at the indices in
// `sel`, by Laplace expansion.
inline Rational selection_det(const std::vector<Vector>& args, const std::vector<int>& sel,
                              std::size_t arg_from) {
  if (sel.empty()) return Rational(1);
  if (sel.size() == 1) return args[arg_from][sel[0]];
  Rational s(0);
  int sign = 1;
  for (std::size_t pick = 0; pick < sel.size(); ++pick) {
    std::vector<int> rest;
    for (std::size_t t = 0; t < sel.size(); ++t) {
      if (t != pick) rest.push_back(sel[t]);
    }
    Rational minor = selection_det(args, rest, arg_from + 1);
    Rational term = args[arg_from][sel[pick]] * minor;
    s += sign > 0 ? term : Rational(-term);
    sign = -sign;
  }
  return s;
}

inline NaiveForm from_exact(const Form& f) {
  const int dim = f.dim();
  const int degree = f.degree();
  std::vector<std::pair<std::vector<int>, Rational>> data;
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> sel;
    for (int i = 0; i < dim; ++i) {
      if (m & (Mask{1} << i)) sel.push_back(i);
    }
    data.emplace_back(std::move(sel), c);
  }
  return {dim, degree, [data](const std::vector<Vector>& args) {
            Rational s(0);
            for (const auto& [sel, c] : data) s += c * selection_det(args, sel, 0);
            return s;
          }};
}

inline Form to_exact(const NaiveForm& f) {
  Form out(f.dim, f.degree);
  std::vector<int> idx(static_cast<std::size_t>(f.degree));
  // iterate strictly increasing index tuples
  std::function<void(int, int)> rec = [&](int slot, int from) {
    if (slot == f.degree) {
      std::vector<Vector> args;
      Mask m = 0;
      for (int i : idx) {
        args.push_back(basis_vector(f.dim, i));
        m |= (Mask{1} << i);
      }
      out.add_term(m, f.value(args));
      return;
    }
    for (int i = from; i < f.dim; ++i) {
      idx[static_cast<std::size_t>(slot)] = i;
      rec(slot + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

inline NaiveForm wedge(const NaiveForm& a, const NaiveForm& b) {
  const int p = a.degree;
  const int total = a.degree + b.degree;
  auto av = a.value;
  auto bv = b.value;
  return {a.dim, total, [p, total, av, bv](const std::vector<Vector>& args) {
            Rational s(0);
            for (unsigned subset = 0; subset < (1u << total); ++subset) {
              if (std::popcount(subset) != p) continue;
              std::vector<Vector> first, second;
              int inversions = 0, seen_second = 0;
              for (int pos = 0; pos < total; ++pos) {
                if (subset & (1u << pos)) {
                  first.push_back(args[static_cast<std::size_t>(pos)]);
                  inversions += seen_second;
                } else {
                  second.push_back(args[static_cast<std::size_t>(pos)]);
                  ++seen_second;
                }
              }
              Rational term = av(first) * bv(second);
              s += (inversions & 1) ? Rational(-term) : term;
            }
            return s;
          }};
}

inline NaiveForm hodge(const NaiveForm& a) {
  // (*a) coefficient at J is (a ∧ e_J) evaluated on the full ordered basis.
  Form star(a.dim, a.dim - a.degree);
  std::vector<Vector> full;
  for (int i = 0; i < a.dim; ++i) full.push_back(basis_vector(a.dim, i));

  std::vector<int> idx(static_cast<std::size_t>(a.dim - a.degree));
  std::function<void(int, int)> rec = [&](int slot, int from) {
    if (slot == static_cast<int>(idx.size())) {
      Form mono(a.dim, static_cast<int>(idx.size()));
      Mask m = 0;
      for (int i : idx) m |= (Mask{1} << i);
      mono.add_term(m, Rational(1));
      star.add_term(m, wedge(a, from_exact(mono)).value(full));
      return;
    }
    for (int i = from; i < a.dim; ++i) {
      idx[static_cast<std::size_t>(slot)] = i;
      rec(slot + 1, i + 1);
    }
  };
  rec(0, 0);
  return from_exact(star);
}

inline NaiveForm interior(const Vector& v, const NaiveForm& a) {
  if (a.degree == 0) {
    return {a.dim, 0, [](const std::vector<Vector>&) { return Rational(0); }};
  }
  auto av = a.value;
  Vector front = v;
  return {a.dim, a.degree - 1, [av, front](const std::vector<Vector>& args) {
            std::vector<Vector> full;
            full.push_back(front);
            for (const Vector& x : args) full.push_back(x);
            return av(full);
          }};
}

inline NaiveForm pullback(const OrthMap& l, const NaiveForm& a) {
  auto av = a.value;
  OrthMap mat = l;
  return {a.dim, a.degree, [av, mat](const std::vector<Vector>& args) {
            std::vector<Vector> mapped;
            for (const Vector& x : args) mapped.push_back(mat.apply(x));
            return av(mapped);
          }};
}

inline NaiveForm so_action(const OrthMap& skew, const NaiveForm& a) {
  auto av = a.value;
  OrthMap mat = skew;
  int degree = a.degree;
  return {a.dim, a.degree, [av, mat, degree](const std::vector<Vector>& args) {
            Rational s(0);
            for (int i = 0; i < degree; ++i) {
              std::vector<Vector> mapped = args;
              mapped[static_cast<std::size_t>(i)] = mat.apply(args[static_cast<std::size_t>(i)]);
              s -= av(mapped);
            }
            return s;
          }};
}

// Independent row-echelon rank used by the stabilizer-dimension oracle.
inline int echelon_rank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = static_cast<std::size_t>(rank); r < rows; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[static_cast<std::size_t>(rank)][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[static_cast<std::size_t>(rank)][j];
    }
    ++rank;
    if (rank == static_cast<int>(rows)) break;
  }
  return rank;
}

} // namespace naive
