#pragma once

#include "octoform/exterior.hpp"
#include "octoform/linalg.hpp"
#include "octoform/octonion.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octoform {

/// Closure exceeded its cap, or a closed group violates a structural
/// expectation (e.g. a frame group whose order differs from 2^(m+1)).
class structural_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Finite set of exact orthogonal matrices, closed under multiplication,
/// with generator provenance. Element 0 is the identity; ordering is the
/// deterministic breadth-first word order.
struct FiniteGroup {
  int dim = 0;
  std::vector<OrthMap> generators;
  std::vector<OrthMap> elements;
  std::vector<std::string> labels;  // word in generators, "I" for the identity

  std::size_t order() const { return elements.size(); }
};

inline constexpr std::size_t default_closure_cap = 10000;

/// Breadth-first closure of exact orthogonal generators under
/// multiplication. Deterministic element ordering (word length, then
/// generator sequence). Throws structural_error when the closure exceeds
/// `cap` ("not finite within cap").
FiniteGroup closure(const std::vector<OrthMap>& generators, std::size_t cap = default_closure_cap);

/// Group generated by right multiplications R_σ1 .. R_σm for an exact
/// orthonormal frame of imaginary octonions (1 <= m <= 7). Verifies the
/// order against 2^(m+1) and throws structural_error on mismatch unless
/// `enforce_order` is false (the closed group is well-defined either way;
/// for m = 7 the Clifford volume relation R_σ1···R_σ7 = ±I halves the
/// count to 2^7).
FiniteGroup frame_group(const std::vector<Octonion>& frame, std::size_t cap = default_closure_cap,
                        bool enforce_order = true);

/// Fixed locus data for one non-identity element with eigenvalue 1.
struct FixedPointWitness {
  std::size_t element_index;
  std::string label;
  std::vector<Vector> kernel;  // rational basis of ker(g - I)
};

/// g ∈ G \ {I} has a fixed point on the unit sphere iff det(g - I) = 0
/// (exact). Returns (free, witnesses); free iff the witness list is empty.
std::pair<bool, std::vector<FixedPointWitness>> is_free_on_sphere(const FiniteGroup& g);

/// Exact pullback equality pullback(g, f) = f.
bool preserves_form(const OrthMap& g, const Form& f);

struct ClassificationReport {
  std::size_t order = 0;
  bool is_free_on_sphere = false;
  std::vector<FixedPointWitness> fixed_point_witnesses;
  bool preserves_spin7 = false;
  std::vector<std::string> violating_elements;
};

/// Order, freeness on S^7 with witnesses, and per-element preservation of
/// the given Spin(7) 4-form.
ClassificationReport classify(const FiniteGroup& g, const Form& phi);

/// The order-8 group of block-diagonal right multiplications
/// (q, q') -> (q a, q' a), a in {1, i, j, k}, on O = H ⊕ H·l with the
/// designated quaternion frame; realized as exact 8x8 matrices.
FiniteGroup sp2_example_group(const CayleyTable& table);
FiniteGroup sp2_example_group();

/// Basis frame helper: labels in 1..7 -> imaginary basis octonions.
std::vector<Octonion> frame_from_labels(const std::vector<int>& labels);

/// Deterministic random exact orthonormal frame of m imaginary octonions
/// (columns of a Cayley-transform rotation of R^7).
std::vector<Octonion> random_frame(int m, std::mt19937_64& rng);

} // namespace octoform
