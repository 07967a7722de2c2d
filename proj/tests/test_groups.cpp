#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octoform/groups.hpp"
#include "octoform/structures.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace octoform;

namespace {

std::vector<OrthMap> sorted_elements(std::vector<OrthMap> v) {
  std::sort(v.begin(), v.end(), OrthMapLess{});
  return v;
}

} // namespace

TEST_CASE("closure basics") {
  FiniteGroup trivial = closure({OrthMap::identity(8)});
  CHECK(trivial.order() == 1);
  CHECK(trivial.labels.front() == "I");

  FiniteGroup pm = closure({-OrthMap::identity(8)});
  CHECK(pm.order() == 2);

  const CayleyTable& t = CayleyTable::standard();
  OrthMap r1 = t.right_mult_matrix(Octonion::basis(1));
  FiniteGroup g = closure({r1});
  CHECK(g.order() == 4);
  std::vector<OrthMap> expected = {OrthMap::identity(8), -OrthMap::identity(8), r1, -r1};
  CHECK(sorted_elements(g.elements) == sorted_elements(expected));
}

TEST_CASE("closure is idempotent") {
  const CayleyTable& t = CayleyTable::standard();
  FiniteGroup g = closure({t.right_mult_matrix(Octonion::basis(1)),
                           t.right_mult_matrix(Octonion::basis(2))});
  FiniteGroup again = closure(g.elements);
  CHECK(sorted_elements(again.elements) == sorted_elements(g.elements));
}

TEST_CASE("closures contain the identity and all inverses") {
  FiniteGroup g = frame_group(frame_from_labels({1, 4, 6}));
  OrthMapLess less;
  std::vector<OrthMap> sorted = sorted_elements(g.elements);
  CHECK(std::binary_search(sorted.begin(), sorted.end(), OrthMap::identity(8), less));
  for (const OrthMap& e : g.elements) {
    // inverse of an orthogonal element is its transpose
    CHECK(std::binary_search(sorted.begin(), sorted.end(), e.transpose(), less));
  }
}

TEST_CASE("closure rejects bad input and enforces the cap") {
  CHECK_THROWS_AS(closure({}), std::invalid_argument);

  OrthMap not_orth = OrthMap::identity(3);
  not_orth.at(0, 0) = 2;
  CHECK_THROWS_AS(closure({not_orth}), std::invalid_argument);

  // a rational rotation (3/5, 4/5) has infinite order
  OrthMap rot = OrthMap::identity(2);
  rot.at(0, 0) = rational_of(3, 5);
  rot.at(0, 1) = rational_of(-4, 5);
  rot.at(1, 0) = rational_of(4, 5);
  rot.at(1, 1) = rational_of(3, 5);
  CHECK_THROWS_AS(closure({rot}, 64), structural_error);
}

TEST_CASE("frame groups have order 2^(m+1) up to m = 6") {
  for (int m = 1; m <= 6; ++m) {
    std::vector<int> labels;
    for (int i = 1; i <= m; ++i) labels.push_back(i);
    FiniteGroup g = frame_group(frame_from_labels(labels));
    CHECK(g.order() == (std::size_t{1} << (m + 1)));
  }
}

TEST_CASE("the full 7-frame collapses to order 128") {
  // R_s1 ... R_s7 acts as a scalar (Clifford volume element), identifying
  // complementary subset words; the generated group has order 2^7.
  std::vector<int> labels = {1, 2, 3, 4, 5, 6, 7};
  CHECK_THROWS_WITH_AS(frame_group(frame_from_labels(labels)) /* enforced */,
                       "frame_group: closure has order 128, expected 2^(m+1) = 256",
                       structural_error);
  FiniteGroup g = frame_group(frame_from_labels(labels), default_closure_cap, false);
  CHECK(g.order() == 128);

  // the volume word itself
  const CayleyTable& t = CayleyTable::standard();
  OrthMap word = OrthMap::identity(8);
  for (int i = 1; i <= 7; ++i) word = t.right_mult_matrix(Octonion::basis(i)) * word;
  CHECK(word.is_identity());
}

TEST_CASE("random exact frames behave like basis frames") {
  std::mt19937_64 rng(67);
  for (int m : {1, 2, 3}) {
    FiniteGroup g = frame_group(random_frame(m, rng));
    CHECK(g.order() == (std::size_t{1} << (m + 1)));
    for (const OrthMap& e : g.elements) CHECK(e.is_orthogonal());
  }
}

TEST_CASE("frame validation") {
  Octonion not_unit = Octonion::basis(1) * Rational(2);
  CHECK_THROWS_AS(frame_group({not_unit}), std::invalid_argument);

  Octonion real_unit = Octonion::basis(0);
  CHECK_THROWS_AS(frame_group({real_unit}), std::invalid_argument);

  CHECK_THROWS_AS(frame_group({Octonion::basis(1), Octonion::basis(1)}), std::invalid_argument);
  CHECK_THROWS_AS(frame_group(std::vector<Octonion>{}), std::invalid_argument);
}

TEST_CASE("freeness on the sphere") {
  FiniteGroup pm = closure({-OrthMap::identity(8)});
  auto [pm_free, pm_w] = is_free_on_sphere(pm);
  CHECK(pm_free);
  CHECK(pm_w.empty());

  const CayleyTable& t = CayleyTable::standard();
  FiniteGroup r1_group = closure({t.right_mult_matrix(Octonion::basis(1))});
  CHECK(is_free_on_sphere(r1_group).first);

  // m = 2 frame group is free, m = 3 is not: three-letter words are
  // involutions with fixed vectors
  CHECK(is_free_on_sphere(frame_group(frame_from_labels({1, 2}))).first);
  auto [free3, w3] = is_free_on_sphere(frame_group(frame_from_labels({1, 2, 3})));
  CHECK_FALSE(free3);
  REQUIRE_FALSE(w3.empty());
  FiniteGroup g3 = frame_group(frame_from_labels({1, 2, 3}));
  for (const FixedPointWitness& w : w3) {
    REQUIRE_FALSE(w.kernel.empty());
    OrthMap shifted = g3.elements[w.element_index] - OrthMap::identity(8);
    for (const Vector& v : w.kernel) CHECK(shifted.apply(v).is_zero());
  }

  // computed verdict for the (e1,e2,e3,e4) frame group: the ten ± three- and
  // four-letter involution words each fix a 4-plane
  auto [free4, w4] = is_free_on_sphere(frame_group(frame_from_labels({1, 2, 3, 4})));
  CHECK_FALSE(free4);
  CHECK(w4.size() == 10);
  for (const FixedPointWitness& w : w4) CHECK(w.kernel.size() == 4);
}

TEST_CASE("freeness is conjugation invariant") {
  std::mt19937_64 rng(71);
  for (const std::vector<int>& labels : {std::vector<int>{1, 2}, std::vector<int>{1, 2, 3}}) {
    FiniteGroup g = frame_group(frame_from_labels(labels));
    OrthMap p = testutil::random_signed_permutation(8, rng);
    OrthMap p_inv = inverse(p);
    std::vector<OrthMap> conjugated;
    for (const OrthMap& e : g.elements) conjugated.push_back(p * e * p_inv);
    FiniteGroup h;
    h.dim = 8;
    h.elements = conjugated;
    h.labels = g.labels;
    CHECK(is_free_on_sphere(g).first == is_free_on_sphere(h).first);
  }
}

TEST_CASE("form preservation") {
  Form omega = g2_form();
  Form phi = spin7_form();
  Form phi_oct = spin7_form_octonionic();

  CHECK(preserves_form(OrthMap::identity(8), phi));
  CHECK_FALSE(preserves_form(-OrthMap::identity(7), omega));

  const CayleyTable& t = CayleyTable::standard();
  CHECK(preserves_form(t.right_mult_matrix(Octonion::basis(1)), phi_oct));

  CHECK_THROWS_AS(preserves_form(OrthMap::identity(7), phi), std::invalid_argument);
}

TEST_CASE("classification") {
  Form phi_oct = spin7_form_octonionic();

  ClassificationReport trivial = classify(closure({OrthMap::identity(8)}), phi_oct);
  CHECK(trivial.order == 1);
  CHECK(trivial.is_free_on_sphere);
  CHECK(trivial.preserves_spin7);

  ClassificationReport sigma4 =
      classify(frame_group(frame_from_labels({1, 2, 7, 3})), phi_oct);
  CHECK(sigma4.order == 32);
  CHECK(sigma4.preserves_spin7);

  CHECK_THROWS_AS(classify(closure({OrthMap::identity(7)}), phi_oct), std::invalid_argument);
  CHECK_THROWS_AS(classify(closure({OrthMap::identity(8)}), g2_form()), std::invalid_argument);
}

TEST_CASE("the quaternion-pair example group") {
  FiniteGroup g = sp2_example_group();
  CHECK(g.dim == 8);
  CHECK(g.order() == 8);

  ClassificationReport report = classify(g, spin7_form_octonionic());
  CHECK(report.order == 8);
  CHECK(report.is_free_on_sphere);
  CHECK(report.preserves_spin7);

  // quaternion group structure: -I is the only involution, every other
  // non-identity element has order 4, and the group is non-abelian
  const OrthMap id = OrthMap::identity(8);
  int involutions = 0, order4 = 0;
  for (const OrthMap& e : g.elements) {
    if (e.is_identity()) continue;
    OrthMap sq = e * e;
    if (sq.is_identity()) {
      ++involutions;
      CHECK(e == -id);
    } else {
      CHECK((sq * sq).is_identity());
      CHECK(sq == -id);
      ++order4;
    }
  }
  CHECK(involutions == 1);
  CHECK(order4 == 6);

  bool nonabelian = false;
  for (const OrthMap& a : g.elements)
    for (const OrthMap& b : g.elements)
      if (!(a * b == b * a)) nonabelian = true;
  CHECK(nonabelian);
}
