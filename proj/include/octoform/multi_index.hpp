#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace octoform {

/// Basis monomials e_{i1} ∧ ... ∧ e_{ik} (i1 < ... < ik) are stored as index
/// bitmasks over the 0-based internal indices 0..dim-1.
///
/// Display/IO labels follow the ambient convention used throughout: e1..en in
/// general (so R^7 is e1..e7), except R^8 which is labelled e0..e7, with e0
/// the octonion real unit.
using Mask = std::uint16_t;

inline constexpr int max_dim = 8;

constexpr int degree_of(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

constexpr Mask full_mask(int dim) { return static_cast<Mask>((1u << dim) - 1u); }

/// (-1)^inversions for concatenating two sorted index lists a, b into one
/// sorted list; counts pairs (i in a, j in b) with i > j.
constexpr int merge_sign(Mask a, Mask b) {
  int inversions = 0;
  for (int j = 0; j < max_dim; ++j) {
    if (b & (Mask{1} << j)) inversions += std::popcount(static_cast<unsigned>(a) >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

/// Sign of e_a ∧ e_b relative to e_{a ∪ b}; 0 when the masks overlap.
constexpr int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  return merge_sign(a, b);
}

/// Sign s with e_m ∧ e_{complement} = s · e_{0..dim-1} (the volume monomial).
/// Orientation is the increasing basis order.
constexpr int hodge_sign(Mask m, int dim) {
  return merge_sign(m, static_cast<Mask>(full_mask(dim) & ~m));
}

/// Sign (-1)^{#indices of m below j}, the cost of pulling e_j to the front.
constexpr int removal_sign(Mask m, int j) {
  int below = std::popcount(static_cast<unsigned>(m & ((Mask{1} << j) - 1u)));
  return (below & 1) ? -1 : 1;
}

int label_of_index(int index, int dim);
int index_of_label(int label, int dim);

std::vector<int> labels_of(Mask m, int dim);

/// Strictly increasing labels -> mask; throws std::invalid_argument on
/// out-of-range, unsorted or repeated labels.
Mask mask_of_labels(const std::vector<int>& labels, int dim);

/// "e127"-style name; degree 0 renders as "1".
std::string monomial_name(Mask m, int dim);

} // namespace octoform
