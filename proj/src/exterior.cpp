#include "octoform/exterior.hpp"

#include <cassert>
#include <stdexcept>

namespace octoform {

namespace {

void require_same_dim(int a, int b, const char* who) {
  if (a != b) throw std::invalid_argument(std::string(who) + ": ambient dimension mismatch");
}

} // namespace

Form::Form(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 1 || dim > max_dim) throw std::invalid_argument("Form: dimension out of range");
  if (degree < 0) throw std::invalid_argument("Form: negative degree");
}

Form Form::monomial(int dim, const std::vector<int>& labels, const Rational& coef) {
  Form f(dim, static_cast<int>(labels.size()));
  f.add_term(mask_of_labels(labels, dim), coef);
  return f;
}

Rational Form::coef(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Form::coef(const std::vector<int>& labels) const { return coef(mask_of_labels(labels, dim_)); }

void Form::add_term(Mask m, const Rational& c) {
  assert(degree_of(m) == degree_ && m < (Mask{1} << dim_));
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& other) {
  require_same_dim(dim_, other.dim_, "Form::operator+=");
  if (degree_ != other.degree_) throw std::invalid_argument("Form::operator+=: degree mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& other) {
  require_same_dim(dim_, other.dim_, "Form::operator-=");
  if (degree_ != other.degree_) throw std::invalid_argument("Form::operator-=: degree mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Form Form::operator+(const Form& other) const {
  Form out = *this;
  out += other;
  return out;
}

Form Form::operator-(const Form& other) const {
  Form out = *this;
  out -= other;
  return out;
}

Form Form::operator-() const {
  Form out(dim_, degree_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Form& Form::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

bool Form::operator==(const Form& other) const {
  return dim_ == other.dim_ && degree_ == other.degree_ && terms_ == other.terms_;
}

Form operator*(const Rational& s, const Form& a) {
  Form out = a;
  out *= s;
  return out;
}

Form flat(const Vector& v) {
  Form out(v.dim(), 1);
  for (int i = 0; i < v.dim(); ++i) out.add_term(Mask{1} << i, v[i]);
  return out;
}

Rational inner(const Form& a, const Form& b) {
  require_same_dim(a.dim(), b.dim(), "inner");
  if (a.degree() != b.degree()) return Rational(0);
  Rational s(0);
  for (const auto& [m, c] : a.terms()) {
    Rational cb = b.coef(m);
    if (cb != 0) s += c * cb;
  }
  return s;
}

Form wedge(const Form& a, const Form& b) {
  require_same_dim(a.dim(), b.dim(), "wedge");
  Form out(a.dim(), a.degree() + b.degree());
  if (a.degree() + b.degree() > a.dim()) return out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Rational c = ca * cb;
      out.add_term(static_cast<Mask>(ma | mb), s > 0 ? c : Rational(-c));
    }
  }
  return out;
}

Form hodge(const Form& a) {
  if (a.degree() > a.dim()) throw std::invalid_argument("hodge: degree exceeds dimension");
  Form out(a.dim(), a.dim() - a.degree());
  for (const auto& [m, c] : a.terms()) {
    Mask comp = static_cast<Mask>(full_mask(a.dim()) & ~m);
    out.add_term(comp, hodge_sign(m, a.dim()) > 0 ? c : Rational(-c));
  }
  return out;
}

Form interior(const Vector& v, const Form& a) {
  require_same_dim(v.dim(), a.dim(), "interior");
  if (a.degree() == 0) return Form(a.dim(), 0);
  Form out(a.dim(), a.degree() - 1);
  for (const auto& [m, c] : a.terms()) {
    for (int j = 0; j < a.dim(); ++j) {
      if (!(m & (Mask{1} << j)) || v[j] == 0) continue;
      Rational contrib = c * v[j];
      out.add_term(static_cast<Mask>(m ^ (Mask{1} << j)),
                   removal_sign(m, j) > 0 ? contrib : Rational(-contrib));
    }
  }
  return out;
}

Form pullback(const OrthMap& l, const Form& a) {
  require_same_dim(l.dim(), a.dim(), "pullback");
  const int n = a.dim();

  // L* e^i is row i of L as a covector; extend as a ring morphism.
  std::vector<Form> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Form row(n, 1);
    for (int j = 0; j < n; ++j) row.add_term(Mask{1} << j, l.at(i, j));
    rows.push_back(std::move(row));
  }

  Form out(n, a.degree());
  for (const auto& [m, c] : a.terms()) {
    Form acc(n, 0);
    acc.add_term(0, Rational(1));
    for (int i = 0; i < n; ++i) {
      if (m & (Mask{1} << i)) acc = wedge(acc, rows[static_cast<std::size_t>(i)]);
    }
    acc *= c;
    out += acc;
  }
  return out;
}

Form so_action(const OrthMap& a_mat, const Form& a) {
  require_same_dim(a_mat.dim(), a.dim(), "so_action");
  if (!a_mat.is_skew()) throw std::invalid_argument("so_action: matrix not skew-symmetric");
  const int n = a.dim();
  Form out(n, a.degree());
  for (const auto& [m, c] : a.terms()) {
    for (int i = 0; i < n; ++i) {
      if (!(m & (Mask{1} << i))) continue;
      Mask rest = static_cast<Mask>(m ^ (Mask{1} << i));
      int lift = removal_sign(m, i);
      // slot e^i picks up ρ(A) e^i = -Σ_j A_{ij} e^j
      for (int j = 0; j < n; ++j) {
        const Rational& aij = a_mat.at(i, j);
        if (aij == 0 || (rest & (Mask{1} << j))) continue;
        int s = lift * wedge_sign(Mask{1} << j, rest);
        Rational contrib = c * aij;
        out.add_term(static_cast<Mask>(rest | (Mask{1} << j)),
                     s > 0 ? Rational(-contrib) : contrib);
      }
    }
  }
  return out;
}

int stabilizer_dim(const Form& a) {
  const int n = a.dim();
  const int pairs = n * (n - 1) / 2;

  std::vector<Mask> masks;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (degree_of(m) == a.degree()) masks.push_back(m);
  }
  std::map<Mask, int> row_of;
  for (int i = 0; i < static_cast<int>(masks.size()); ++i) row_of[masks[i]] = i;

  std::vector<std::vector<Rational>> system(masks.size(),
                                            std::vector<Rational>(static_cast<std::size_t>(pairs), Rational(0)));
  int col = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q, ++col) {
      OrthMap basis(n);
      basis.at(p, q) = 1;
      basis.at(q, p) = -1;
      Form action = so_action(basis, a);
      for (const auto& [m, c] : action.terms()) system[static_cast<std::size_t>(row_of[m])][static_cast<std::size_t>(col)] = c;
    }
  }
  return pairs - rank(std::move(system));
}

} // namespace octoform
