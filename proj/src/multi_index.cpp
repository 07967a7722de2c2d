#include "octoform/multi_index.hpp"

#include <stdexcept>

namespace octoform {

int label_of_index(int index, int dim) { return dim == 8 ? index : index + 1; }

int index_of_label(int label, int dim) { return dim == 8 ? label : label - 1; }

std::vector<int> labels_of(Mask m, int dim) {
  std::vector<int> out;
  for (int i = 0; i < dim; ++i) {
    if (m & (Mask{1} << i)) out.push_back(label_of_index(i, dim));
  }
  return out;
}

Mask mask_of_labels(const std::vector<int>& labels, int dim) {
  if (dim < 1 || dim > max_dim) throw std::invalid_argument("mask_of_labels: dimension out of range");
  Mask m = 0;
  int previous = -1;
  for (int label : labels) {
    int index = index_of_label(label, dim);
    if (index < 0 || index >= dim) throw std::invalid_argument("mask_of_labels: label out of range");
    if (index <= previous) throw std::invalid_argument("mask_of_labels: labels must be strictly increasing");
    previous = index;
    m |= (Mask{1} << index);
  }
  return m;
}

std::string monomial_name(Mask m, int dim) {
  if (m == 0) return "1";
  std::string s = "e";
  for (int label : labels_of(m, dim)) s += std::to_string(label);
  return s;
}

} // namespace octoform
