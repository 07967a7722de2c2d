#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octoform/linalg.hpp"
#include "test_util.hpp"

using namespace octoform;

namespace {

// cofactor-expansion determinant, independent of the Bareiss path
Rational naive_det(const OrthMap& m, std::vector<int> cols, int row) {
  if (cols.empty()) return Rational(1);
  Rational s(0);
  int sign = 1;
  for (std::size_t pick = 0; pick < cols.size(); ++pick) {
    std::vector<int> rest;
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (t != pick) rest.push_back(cols[t]);
    Rational term = m.at(row, cols[pick]) * naive_det(m, rest, row + 1);
    s += sign > 0 ? term : Rational(-term);
    sign = -sign;
  }
  return s;
}

Rational naive_det(const OrthMap& m) {
  std::vector<int> cols;
  for (int i = 0; i < m.dim(); ++i) cols.push_back(i);
  return naive_det(m, cols, 0);
}

} // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(101);
  for (int it = 0; it < 40; ++it) {
    int dim = 1 + static_cast<int>(rng() % 5);
    OrthMap m = testutil::random_matrix(dim, rng);
    CHECK(det(m) == naive_det(m));
  }
  CHECK(det(OrthMap::identity(8)) == 1);
  CHECK(det(-OrthMap::identity(8)) == 1);
  CHECK(det(-OrthMap::identity(7)) == -1);
  CHECK(det(OrthMap(5)) == 0);
}

TEST_CASE("rank and kernel are consistent") {
  std::mt19937_64 rng(103);
  for (int it = 0; it < 25; ++it) {
    int dim = 2 + static_cast<int>(rng() % 6);
    OrthMap m = testutil::random_matrix(dim, rng);
    if (rng() % 2) {
      // force a rank drop: last row = sum of the others
      for (int j = 0; j < dim; ++j) {
        Rational s(0);
        for (int i = 0; i + 1 < dim; ++i) s += m.at(i, j);
        m.at(dim - 1, j) = s;
      }
    }
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < dim; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < dim; ++j) row.push_back(m.at(i, j));
      rows.push_back(std::move(row));
    }
    int r = rank(rows);
    std::vector<Vector> kernel = kernel_basis(m);
    CHECK(static_cast<int>(kernel.size()) == dim - r);
    for (const Vector& v : kernel) {
      CHECK_FALSE(v.is_zero());
      CHECK(m.apply(v).is_zero());
    }
    CHECK((det(m) != 0) == (r == dim));
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(107);
  for (int it = 0; it < 15; ++it) {
    int dim = 2 + static_cast<int>(rng() % 5);
    OrthMap m = testutil::random_matrix(dim, rng);
    if (det(m) == 0) continue;
    CHECK((m * inverse(m)).is_identity());
  }
  CHECK_THROWS_AS(inverse(OrthMap(4)), std::domain_error);
}

TEST_CASE("cayley transform produces exact rotations") {
  std::mt19937_64 rng(109);
  for (int it = 0; it < 12; ++it) {
    int dim = 2 + static_cast<int>(rng() % 7);
    OrthMap q = random_rotation(dim, rng);
    CHECK(q.is_orthogonal());
    CHECK(det(q) == 1);
  }
  CHECK_THROWS_AS(cayley_rotation(OrthMap::identity(3)), std::invalid_argument);
}

TEST_CASE("orthogonality and skewness predicates") {
  OrthMap id = OrthMap::identity(6);
  CHECK(id.is_orthogonal());
  CHECK_FALSE(id.is_skew());
  CHECK(OrthMap(6).is_skew());

  OrthMap scaled = id;
  scaled.at(0, 0) = rational_of(1, 2);
  CHECK_FALSE(scaled.is_orthogonal());
}

TEST_CASE("lexicographic order is strict and total on samples") {
  std::mt19937_64 rng(113);
  OrthMapLess less;
  for (int it = 0; it < 20; ++it) {
    OrthMap a = testutil::random_matrix(3, rng);
    OrthMap b = testutil::random_matrix(3, rng);
    CHECK_FALSE(less(a, a));
    if (!(a == b)) CHECK(less(a, b) != less(b, a));
  }
}
