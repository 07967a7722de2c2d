#include "octoform/groups.hpp"

#include <deque>
#include <map>

namespace octoform {

FiniteGroup closure(const std::vector<OrthMap>& generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("closure: no generators");
  const int n = generators.front().dim();
  for (const OrthMap& g : generators) {
    if (g.dim() != n) throw std::invalid_argument("closure: generator dimension mismatch");
    if (!g.is_orthogonal()) throw std::invalid_argument("closure: generator not exactly orthogonal");
  }

  FiniteGroup group;
  group.dim = n;
  group.generators = generators;

  std::map<OrthMap, std::size_t, OrthMapLess> seen;
  std::deque<std::size_t> todo;

  auto push = [&](OrthMap m, std::string label) -> bool {
    auto [it, inserted] = seen.emplace(std::move(m), group.elements.size());
    if (!inserted) return false;
    group.elements.push_back(it->first);
    group.labels.push_back(std::move(label));
    todo.push_back(it->second);
    return true;
  };

  push(OrthMap::identity(n), "I");
  while (!todo.empty()) {
    std::size_t cur = todo.front();
    todo.pop_front();
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      OrthMap next = group.elements[cur] * generators[gi];
      std::string label = group.labels[cur] == "I" ? "g" + std::to_string(gi + 1)
                                                   : group.labels[cur] + "*g" + std::to_string(gi + 1);
      if (push(std::move(next), std::move(label)) && group.elements.size() > cap) {
        throw structural_error("closure: not finite within cap of " + std::to_string(cap) + " elements");
      }
    }
  }
  return group;
}

FiniteGroup frame_group(const std::vector<Octonion>& frame, std::size_t cap, bool enforce_order) {
  const std::size_t m = frame.size();
  if (m < 1 || m > 7) throw std::invalid_argument("frame_group: frame size must be in 1..7");
  for (std::size_t i = 0; i < m; ++i) {
    if (!frame[i].is_imaginary()) throw std::invalid_argument("frame_group: frame element not imaginary");
    if (frame[i].norm_sq() != 1) throw std::invalid_argument("frame_group: frame element not unit");
    for (std::size_t j = i + 1; j < m; ++j) {
      if (inner(frame[i], frame[j]) != 0)
        throw std::invalid_argument("frame_group: frame not exactly orthogonal");
    }
  }

  const CayleyTable& table = CayleyTable::standard();
  std::vector<OrthMap> generators;
  generators.reserve(m);
  for (const Octonion& s : frame) generators.push_back(table.right_mult_matrix(s));

  FiniteGroup group = closure(generators, cap);
  const std::size_t expected = std::size_t{1} << (m + 1);
  if (enforce_order && group.order() != expected) {
    throw structural_error("frame_group: closure has order " + std::to_string(group.order()) +
                           ", expected 2^(m+1) = " + std::to_string(expected));
  }
  return group;
}

std::pair<bool, std::vector<FixedPointWitness>> is_free_on_sphere(const FiniteGroup& g) {
  std::vector<FixedPointWitness> witnesses;
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    const OrthMap& e = g.elements[i];
    if (e.is_identity()) continue;
    OrthMap shifted = e - OrthMap::identity(g.dim);
    if (det(shifted) != 0) continue;
    witnesses.push_back({i, g.labels[i], kernel_basis(shifted)});
  }
  return {witnesses.empty(), std::move(witnesses)};
}

bool preserves_form(const OrthMap& g, const Form& f) {
  if (g.dim() != f.dim()) throw std::invalid_argument("preserves_form: dimension mismatch");
  return pullback(g, f) == f;
}

ClassificationReport classify(const FiniteGroup& g, const Form& phi) {
  if (g.dim != 8) throw std::invalid_argument("classify: expected an 8-dimensional group");
  if (phi.dim() != 8 || phi.degree() != 4)
    throw std::invalid_argument("classify: expected a 4-form on R^8");

  ClassificationReport report;
  report.order = g.order();
  auto [free, witnesses] = is_free_on_sphere(g);
  report.is_free_on_sphere = free;
  report.fixed_point_witnesses = std::move(witnesses);

  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    if (!preserves_form(g.elements[i], phi)) report.violating_elements.push_back(g.labels[i]);
  }
  report.preserves_spin7 = report.violating_elements.empty();
  return report;
}

FiniteGroup sp2_example_group(const CayleyTable& table) {
  QuaternionFrame frame = designated_quaternion_frame(table);
  const Octonion unit_i = Octonion::basis(frame.i);
  const Octonion unit_j = Octonion::basis(frame.j);
  const Octonion unit_k = Octonion::basis(frame.k);
  const Octonion unit_l = Octonion::basis(frame.l);
  const Octonion h_basis[4] = {Octonion::basis(0), unit_i, unit_j, unit_k};

  // Split o = q + q'·l with q, q' in H = span{e0, i, j, k}; since l is unit
  // imaginary, (q'l)l = -q' gives q' = -(o - q)·l.
  auto split = [&](const Octonion& o) {
    Octonion q;
    for (const Octonion& h : h_basis) q = q + h * inner(o, h);
    Octonion rest = o - q;
    Octonion qp = -table.mul(rest, unit_l);
    if (!(table.mul(qp, unit_l) == rest))
      throw std::logic_error("sp2_example_group: Cayley-Dickson split failed");
    return std::pair<Octonion, Octonion>(q, qp);
  };

  auto block_right_mult = [&](const Octonion& a) {
    OrthMap m(8);
    for (int col = 0; col < 8; ++col) {
      auto [q, qp] = split(Octonion::basis(col));
      Octonion image = table.mul(q, a) + table.mul(table.mul(qp, a), unit_l);
      for (int row = 0; row < 8; ++row) m.at(row, col) = image.c[static_cast<std::size_t>(row)];
    }
    return m;
  };

  FiniteGroup group = closure({block_right_mult(unit_i), block_right_mult(unit_j)});
  if (group.order() != 8)
    throw structural_error("sp2_example_group: closure has order " + std::to_string(group.order()) +
                           ", expected 8");
  return group;
}

FiniteGroup sp2_example_group() { return sp2_example_group(CayleyTable::standard()); }

std::vector<Octonion> frame_from_labels(const std::vector<int>& labels) {
  std::vector<Octonion> frame;
  for (int l : labels) {
    if (l < 1 || l > 7) throw std::invalid_argument("frame_from_labels: label out of range 1..7");
    frame.push_back(Octonion::basis(l));
  }
  return frame;
}

std::vector<Octonion> random_frame(int m, std::mt19937_64& rng) {
  if (m < 1 || m > 7) throw std::invalid_argument("random_frame: m out of range 1..7");
  OrthMap q = random_rotation(7, rng);
  std::vector<Octonion> frame;
  for (int col = 0; col < m; ++col) {
    Vector v(7);
    for (int row = 0; row < 7; ++row) v[row] = q.at(row, col);
    frame.push_back(Octonion::imaginary(v));
  }
  return frame;
}

} // namespace octoform
