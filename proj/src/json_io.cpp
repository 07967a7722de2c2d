#include "octoform/json_io.hpp"

#include <stdexcept>

namespace octoform {

using nlohmann::json;

namespace {

Rational rational_field(const json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string(what) + ": expected a rational string");
  auto q = parse_rational(j.get<std::string>());
  if (!q) throw std::invalid_argument(std::string(what) + ": malformed rational '" + j.get<std::string>() + "'");
  return *q;
}

} // namespace

json form_to_json(const Form& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({{"idx", labels_of(m, f.dim())}, {"coef", to_string(c)}});
  }
  return {{"dim", f.dim()}, {"degree", f.degree()}, {"terms", terms}};
}

Form form_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("degree") || !j.contains("terms"))
    throw std::invalid_argument("form: expected {dim, degree, terms}");
  Form f(j.at("dim").get<int>(), j.at("degree").get<int>());
  for (const json& term : j.at("terms")) {
    std::vector<int> labels = term.at("idx").get<std::vector<int>>();
    if (static_cast<int>(labels.size()) != f.degree())
      throw std::invalid_argument("form: term index length differs from degree");
    Mask m = mask_of_labels(labels, f.dim());
    if (f.coef(m) != 0) throw std::invalid_argument("form: duplicate term index");
    f.add_term(m, rational_field(term.at("coef"), "form coefficient"));
  }
  return f;
}

json orthmap_to_json(const OrthMap& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"rows", rows}};
}

OrthMap orthmap_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("rows"))
    throw std::invalid_argument("matrix: expected {dim, rows}");
  const int n = j.at("dim").get<int>();
  if (n < 1 || n > max_dim) throw std::invalid_argument("matrix: dimension out of range");
  const json& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("matrix: wrong row count");
  OrthMap m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix: ragged row");
    for (int c = 0; c < n; ++c) m.at(i, c) = rational_field(rows[i][c], "matrix entry");
  }
  return m;
}

json octonion_to_json(const Octonion& o) {
  json out = json::array();
  for (int i = 0; i < 8; ++i) out.push_back(to_string(o.c[static_cast<std::size_t>(i)]));
  return out;
}

Octonion octonion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8) throw std::invalid_argument("octonion: expected 8 rational strings");
  Octonion o;
  for (int i = 0; i < 8; ++i) o.c[static_cast<std::size_t>(i)] = rational_field(j[i], "octonion component");
  return o;
}

json group_to_json(const FiniteGroup& g) {
  json gens = json::array();
  for (const OrthMap& m : g.generators) gens.push_back(orthmap_to_json(m));
  json elements = json::array();
  for (const OrthMap& m : g.elements) elements.push_back(orthmap_to_json(m));
  return {{"dim", g.dim},
          {"order", g.order()},
          {"generators", gens},
          {"labels", g.labels},
          {"elements", elements}};
}

FiniteGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("elements"))
    throw std::invalid_argument("group: expected {dim, elements, ...}");
  FiniteGroup g;
  g.dim = j.at("dim").get<int>();
  for (const json& e : j.at("elements")) {
    OrthMap m = orthmap_from_json(e);
    if (m.dim() != g.dim) throw std::invalid_argument("group: element dimension mismatch");
    if (!m.is_orthogonal()) throw std::invalid_argument("group: element not exactly orthogonal");
    g.elements.push_back(std::move(m));
  }
  if (j.contains("generators")) {
    for (const json& e : j.at("generators")) g.generators.push_back(orthmap_from_json(e));
  }
  if (j.contains("labels")) {
    g.labels = j.at("labels").get<std::vector<std::string>>();
    if (g.labels.size() != g.elements.size()) throw std::invalid_argument("group: labels/elements mismatch");
  } else {
    for (std::size_t i = 0; i < g.elements.size(); ++i) g.labels.push_back("#" + std::to_string(i));
  }
  return g;
}

json classification_to_json(const ClassificationReport& r) {
  json witnesses = json::array();
  for (const FixedPointWitness& w : r.fixed_point_witnesses) {
    json basis = json::array();
    for (const Vector& v : w.kernel) {
      json vec = json::array();
      for (int i = 0; i < v.dim(); ++i) vec.push_back(to_string(v[i]));
      basis.push_back(std::move(vec));
    }
    witnesses.push_back({{"element", w.label}, {"kernel_basis", basis}});
  }
  return {{"order", r.order},
          {"is_free_on_sphere", r.is_free_on_sphere},
          {"fixed_point_witnesses", witnesses},
          {"preserves_spin7", r.preserves_spin7},
          {"violating_elements", r.violating_elements}};
}

json residual_to_json(const ResidualReport& r) {
  return {{"test", r.test},
          {"samples", r.samples},
          {"h", r.h},
          {"max_residual", r.max_residual},
          {"residual_half_h", r.residual_half_h},
          {"convergence_order", r.convergence_order},
          {"pass", r.pass},
          {"details", r.details}};
}

} // namespace octoform
