#include "manin/lie.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "scratch.hpp"

namespace manin {

DegreeSet merge_degrees(const DegreeSet& a, const DegreeSet& b) {
  DegreeSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_degree(const DegreeSet& s, int d) { return std::binary_search(s.begin(), s.end(), d); }

std::string Grading::window_str() const {
  std::ostringstream os;
  os << "[" << lo << ", " << hi << "]";
  return os.str();
}

namespace {

const DegreeSet kNoEscape;

using detail::Scratch;

std::string idx_str(std::initializer_list<uint32_t> ids, const SuperSpace& s) {
  std::string out = "(";
  bool first = true;
  for (uint32_t i : ids) {
    if (!first) out += ", ";
    out += s.label(i);
    first = false;
  }
  return out + ")";
}

}  // namespace

// ---------------------------------------------------------------- LieSuperAlgebra

LieSuperAlgebra::LieSuperAlgebra(std::string name, SuperSpace space, std::vector<Vector> table)
    : name_(std::move(name)), space_(std::move(space)), table_(std::move(table)) {
  const size_t d = space_.dim();
  if (table_.size() != d * d) throw DimensionMismatch("LieSuperAlgebra: table must be dim x dim");
  for (const auto& v : table_) {
    if (!v.is_zero() && v.max_index() >= d) {
      throw DimensionMismatch("LieSuperAlgebra: structure constant outside basis");
    }
  }
}

LieSuperAlgebra::LieSuperAlgebra(std::string name, SuperSpace space, std::vector<Vector> table,
                                 Grading grading, std::vector<DegreeSet> escapes)
    : LieSuperAlgebra(std::move(name), std::move(space), std::move(table)) {
  const size_t d = dim();
  if (grading.degree.size() != d) throw DimensionMismatch("LieSuperAlgebra: grading size");
  for (int deg : grading.degree) {
    if (!grading.in_window(deg)) throw std::invalid_argument("LieSuperAlgebra: degree outside window");
  }
  if (!escapes.empty() && escapes.size() != d * d) {
    throw DimensionMismatch("LieSuperAlgebra: escape ledger must be dim x dim");
  }
  grading_ = std::move(grading);
  escapes_ = std::move(escapes);
}

LieSuperAlgebra LieSuperAlgebra::from_basis_bracket(
    std::string name, SuperSpace space, const std::function<Vector(uint32_t, uint32_t)>& f) {
  const auto d = static_cast<uint32_t>(space.dim());
  std::vector<Vector> table(size_t(d) * d);
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = 0; j < d; ++j) table[size_t(i) * d + j] = f(i, j);
  return {std::move(name), std::move(space), std::move(table)};
}

const DegreeSet& LieSuperAlgebra::escapes(uint32_t i, uint32_t j) const {
  if (escapes_.empty()) return kNoEscape;
  return escapes_[size_t(i) * dim() + j];
}

const Grading& LieSuperAlgebra::grading() const {
  if (!grading_) throw std::logic_error(name_ + " carries no grading");
  return *grading_;
}

int LieSuperAlgebra::degree_of(const Vector& v) const {
  const auto& g = grading();
  if (v.is_zero()) throw std::invalid_argument("degree_of: zero vector has no degree");
  int deg = g.degree[v.leading_index()];
  for (const auto& [i, c] : v) {
    if (g.degree[i] != deg) throw std::invalid_argument("degree_of: vector is not homogeneous");
  }
  return deg;
}

Bracket LieSuperAlgebra::bracket(const Vector& x, const Vector& y) const {
  const size_t d = dim();
  if ((!x.is_zero() && x.max_index() >= d) || (!y.is_zero() && y.max_index() >= d)) {
    throw DimensionMismatch("bracket: argument outside " + name_);
  }
  VectorAccumulator acc;
  DegreeSet esc;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) {
      const Vector& s = table_[size_t(i) * d + j];
      if (!s.is_zero()) acc.add(s, a * b);
      if (!escapes_.empty()) {
        const auto& e = escapes_[size_t(i) * d + j];
        if (!e.empty()) esc = merge_degrees(esc, e);
      }
    }
  }
  return {acc.take(), std::move(esc)};
}

Vector LieSuperAlgebra::exact_bracket(const Vector& x, const Vector& y) const {
  Bracket b = bracket(x, y);
  if (!b.exact()) {
    throw std::out_of_range("bracket in " + name_ + " leaves the truncation window " +
                            grading().window_str());
  }
  return std::move(b.value);
}

LieSuperAlgebra LieSuperAlgebra::with_structure(uint32_t i, uint32_t j, Vector value) const {
  if (i >= dim() || j >= dim()) throw DimensionMismatch("with_structure: index out of range");
  LieSuperAlgebra out = *this;
  out.table_[size_t(i) * dim() + j] = std::move(value);
  return out;
}

LieSuperAlgebra LieSuperAlgebra::renamed(std::string name) const {
  LieSuperAlgebra out = *this;
  out.name_ = std::move(name);
  return out;
}

// ---------------------------------------------------------------- BilinearForm

BilinearForm::BilinearForm(std::string name, Parity parity, std::vector<Vector> rows)
    : name_(std::move(name)), parity_(parity), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (!r.is_zero() && r.max_index() >= rows_.size()) {
      throw DimensionMismatch("BilinearForm: Gram matrix is not square");
    }
  }
}

BilinearForm BilinearForm::from_matrix(std::string name, Parity parity, const Matrix& gram) {
  if (gram.rows() != gram.cols()) throw DimensionMismatch("BilinearForm: Gram matrix is not square");
  return {std::move(name), parity, gram.sparse_rows()};
}

Vector BilinearForm::left(const Vector& x) const {
  VectorAccumulator acc;
  for (const auto& [i, c] : x) {
    if (i >= rows_.size()) throw DimensionMismatch("BilinearForm: argument outside basis");
    acc.add(rows_[i], c);
  }
  return acc.take();
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  Vector l = left(x);
  Scalar s;
  auto a = l.begin();
  auto b = y.begin();
  while (a != l.end() && b != y.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      s += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return s;
}

Matrix BilinearForm::matrix() const {
  Matrix m(dim(), dim());
  for (size_t i = 0; i < dim(); ++i)
    for (const auto& [j, c] : rows_[i]) m(i, j) = c;
  return m;
}

bool BilinearForm::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Vector& r) { return r.is_zero(); });
}

BilinearForm BilinearForm::scaled(const Scalar& c) const {
  std::vector<Vector> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back(r.scaled(c));
  return {name_, parity_, std::move(rows)};
}

// ---------------------------------------------------------------- checks

CheckReport check_super_antisymmetry(const LieSuperAlgebra& g) {
  CheckReport r;
  r.name = "super-antisymmetry";
  const auto d = static_cast<uint32_t>(g.dim());
  for (uint32_t i = 0; i < d; ++i) {
    for (uint32_t j = i; j < d; ++j) {
      ++r.checked;
      const Vector& a = g.structure(i, j);
      const Vector& b = g.structure(j, i);
      Vector sum = a;
      sum.axpy(sign_of(g.parity(i) * g.parity(j)), b);
      bool ok = sum.is_zero() && g.escapes(i, j) == g.escapes(j, i);
      if (ok) {
        // Parity compatibility is part of the same structural contract.
        Parity p = g.parity(i) ^ g.parity(j);
        auto q = a.parity(g.space());
        ok = q && (a.is_zero() || *q == p);
      }
      if (!ok) {
        r.record_violation({i, j}, "[" + g.space().label(i) + ", " + g.space().label(j) + "] = " +
                                       a.str(g.space()) + " vs [" + g.space().label(j) + ", " +
                                       g.space().label(i) + "] = " + b.str(g.space()));
      }
    }
  }
  return r;
}

CheckReport check_super_jacobi(const LieSuperAlgebra& g) {
  CheckReport r;
  r.name = "super-Jacobi";
  const auto d = static_cast<uint32_t>(g.dim());
  const bool alternating = check_super_antisymmetry(g).ok();
  if (!alternating) r.note = "antisymmetry fails; all ordered triples visited";

  // [e_i, v] with escape detection; returns false if any term escapes.
  auto act_left = [&](uint32_t i, const Vector& v, const Scalar& s, Scratch& out) {
    for (const auto& [m, c] : v) {
      if (g.escaped(i, m)) return false;
      const Vector& b = g.structure(i, m);
      if (!b.is_zero()) out.add(b, s * c);
    }
    return true;
  };
  auto act_right = [&](const Vector& v, uint32_t k, const Scalar& s, Scratch& out) {
    for (const auto& [m, c] : v) {
      if (g.escaped(m, k)) return false;
      const Vector& b = g.structure(m, k);
      if (!b.is_zero()) out.add(b, s * c);
    }
    return true;
  };

  Scratch acc(d);
  for (uint32_t i = 0; i < d; ++i) {
    for (uint32_t j = alternating ? i : 0; j < d; ++j) {
      const Scalar sij = -sign_of(g.parity(i) * g.parity(j));
      for (uint32_t k = alternating ? j : 0; k < d; ++k) {
        if (g.escaped(j, k) || g.escaped(i, j) || g.escaped(i, k)) {
          ++r.skipped;
          continue;
        }
        // [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - (-1)^{p_i p_j} [e_j,[e_i,e_k]]
        bool ok = act_left(i, g.structure(j, k), Scalar(1), acc) &&
                  act_right(g.structure(i, j), k, Scalar(-1), acc) &&
                  act_left(j, g.structure(i, k), sij, acc);
        if (!ok) {
          acc.clear();
          ++r.skipped;
          continue;
        }
        ++r.checked;
        if (!acc.all_zero()) {
          Vector v = acc.take();
          r.record_violation({i, j, k}, idx_str({i, j, k}, g.space()) + ": " + v.str(g.space()));
        } else {
          acc.clear();
        }
      }
    }
  }
  return r;
}

BilinearForm killing_form(const LieSuperAlgebra& g) {
  if (g.truncated()) throw std::invalid_argument("killing_form: truncated algebras have no trace");
  const auto d = static_cast<uint32_t>(g.dim());
  // str(ad_i ad_j) = sum_k (-1)^{p_k} <e^k, [e_i, [e_j, e_k]]>
  std::vector<Vector> rows(d);
  for (uint32_t i = 0; i < d; ++i) {
    VectorAccumulator row;
    for (uint32_t j = 0; j < d; ++j) {
      Scalar s;
      for (uint32_t k = 0; k < d; ++k) {
        for (const auto& [m, c] : g.structure(j, k)) {
          Scalar x = g.structure(i, m).at(k);
          if (!x.is_zero()) s += sign_of(g.parity(k)) * c * x;
        }
      }
      row.add(j, s);
    }
    rows[i] = row.take();
  }
  return {"Killing(" + g.name() + ")", 0, std::move(rows)};
}

Subspace center(const LieSuperAlgebra& g) {
  const auto d = static_cast<uint32_t>(g.dim());
  // Unknown x_i; equation per (j, m): sum_i x_i c_{ij}^m = 0.
  std::map<std::pair<uint32_t, uint32_t>, VectorAccumulator> eqs;
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = 0; j < d; ++j)
      for (const auto& [m, c] : g.structure(i, j)) eqs[{j, m}].add(i, c);
  std::vector<Vector> rows;
  rows.reserve(eqs.size());
  for (auto& [key, acc] : eqs) rows.push_back(acc.take());
  return kernel(rows, d);
}

// ---------------------------------------------------------------- subalgebras

SubalgebraHandle::SubalgebraHandle(AlgebraPtr parent, Subspace subspace, LieSuperAlgebra induced,
                                   uint64_t skipped_pairs)
    : parent_(std::move(parent)),
      subspace_(std::move(subspace)),
      algebra_(share(std::move(induced))),
      skipped_pairs_(skipped_pairs) {}

SubalgebraHandle subalgebra_from_subspace(const AlgebraPtr& g, Subspace subspace,
                                          const std::string& name) {
  if (subspace.ambient_dim() != g->dim()) {
    throw DimensionMismatch("subalgebra: subspace lives outside " + g->name());
  }
  const auto& basis = subspace.basis();
  const auto n = static_cast<uint32_t>(basis.size());
  std::vector<std::string> labels;
  std::vector<Parity> parities;
  std::vector<int> degrees;
  for (uint32_t a = 0; a < n; ++a) {
    auto p = basis[a].parity(g->space());
    if (!p) throw std::invalid_argument("subalgebra: subspace is not parity-graded");
    parities.push_back(*p);
    labels.push_back(basis[a].nnz() == 1 && basis[a].leading_coeff().is_one()
                         ? g->space().label(basis[a].leading_index())
                         : "b" + std::to_string(a));
    if (g->truncated()) degrees.push_back(g->degree_of(basis[a]));
  }
  // Distinct labels are required; fall back to positional labels on clashes.
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      for (uint32_t a = 0; a < n; ++a) labels[a] = "b" + std::to_string(a);
    }
  }
  std::vector<Vector> table(size_t(n) * n);
  std::vector<DegreeSet> escapes;
  if (g->truncated()) escapes.resize(size_t(n) * n);
  uint64_t skipped = 0;
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = 0; b < n; ++b) {
      Bracket br = g->bracket(basis[a], basis[b]);
      auto coords = subspace.coordinates(br.value);
      if (!coords) {
        Vector esc = subspace.reduce(br.value);
        throw NotClosed(a, b, br.value,
                        "span is not closed in " + g->name() + ": [" + basis[a].str(g->space()) +
                            ", " + basis[b].str(g->space()) + "] = " + br.value.str(g->space()));
      }
      table[size_t(a) * n + b] = std::move(*coords);
      if (!br.exact()) {
        ++skipped;
        escapes[size_t(a) * n + b] = std::move(br.escaped);
      }
    }
  }
  std::string nm = name.empty() ? "sub(" + g->name() + ")" : name;
  SuperSpace space(std::move(labels), std::move(parities));
  if (g->truncated()) {
    Grading gr = g->grading();
    gr.degree = std::move(degrees);
    return {g, std::move(subspace),
            LieSuperAlgebra(nm, std::move(space), std::move(table), std::move(gr), std::move(escapes)),
            skipped};
  }
  return {g, std::move(subspace), LieSuperAlgebra(nm, std::move(space), std::move(table)), 0};
}

SubalgebraHandle subalgebra_from_span(const AlgebraPtr& g, const std::vector<Vector>& vectors,
                                      const std::string& name) {
  return subalgebra_from_subspace(g, span(vectors, g->space()), name);
}

SubalgebraHandle derived_subalgebra(const AlgebraPtr& g, const std::string& name) {
  Subspace s(g->dim());
  const auto d = static_cast<uint32_t>(g->dim());
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = i; j < d; ++j) s.insert(g->structure(i, j));
  return subalgebra_from_subspace(g, std::move(s), name.empty() ? "[" + g->name() + "," + g->name() + "]" : name);
}

SubalgebraHandle generated_subalgebra(const AlgebraPtr& g, const std::vector<Vector>& generators,
                                      const std::string& name, size_t max_dim) {
  Subspace s(g->dim());
  std::vector<Vector> found;  // independent, homogeneous spanning list
  auto add = [&](Vector v) {
    if (!v.is_zero() && !v.parity(g->space())) {
      throw std::invalid_argument("generated_subalgebra: generators must be parity-homogeneous");
    }
    if (s.insert(v)) {
      found.push_back(std::move(v));
      if (found.size() > max_dim) {
        throw std::length_error("generated subalgebra exceeds dimension " + std::to_string(max_dim));
      }
    }
  };
  for (const auto& v : generators) add(v);
  // Each new element is bracketed against everything found before it.
  for (size_t k = 0; k < found.size(); ++k) {
    for (size_t l = 0; l <= k; ++l) {
      Vector v = g->exact_bracket(found[l], found[k]);
      add(std::move(v));
    }
  }
  return subalgebra_from_subspace(g, std::move(s), name);
}

// ---------------------------------------------------------------- quotients

Vector Quotient::project(const Vector& v) const {
  Vector r = ideal.reduce(v);
  VectorAccumulator acc;
  for (const auto& [i, c] : r) {
    auto it = std::lower_bound(complement.begin(), complement.end(), i);
    if (it == complement.end() || *it != i) {
      throw std::logic_error("Quotient::project: reduced vector hit a pivot column");
    }
    acc.add(static_cast<uint32_t>(it - complement.begin()), c);
  }
  return acc.take();
}

Vector Quotient::lift(const Vector& coords) const {
  VectorAccumulator acc;
  for (const auto& [k, c] : coords) {
    if (k >= complement.size()) throw DimensionMismatch("Quotient::lift: coordinate out of range");
    acc.add(complement[k], c);
  }
  return acc.take();
}

Quotient quotient(const AlgebraPtr& g, const Subspace& ideal, const std::string& name) {
  if (g->truncated()) throw std::invalid_argument("quotient: truncated algebras are not supported");
  if (ideal.ambient_dim() != g->dim()) throw DimensionMismatch("quotient: ideal outside algebra");
  const auto d = static_cast<uint32_t>(g->dim());
  for (uint32_t r = 0; r < ideal.dim(); ++r) {
    for (uint32_t j = 0; j < d; ++j) {
      Vector v = g->exact_bracket(ideal.basis()[r], Vector::unit(j));
      if (!ideal.contains(v)) {
        throw NotAnIdeal(r, j, v,
                         "not an ideal of " + g->name() + ": [" + ideal.basis()[r].str(g->space()) +
                             ", " + g->space().label(j) + "] = " + v.str(g->space()));
      }
    }
  }
  Quotient q;
  q.parent = g;
  q.ideal = ideal;
  size_t p = 0;
  for (uint32_t i = 0; i < d; ++i) {
    if (p < ideal.pivots().size() && ideal.pivots()[p] == i) {
      ++p;
      continue;
    }
    q.complement.push_back(i);
  }
  std::vector<std::string> labels;
  std::vector<Parity> parities;
  for (uint32_t i : q.complement) {
    labels.push_back(g->space().label(i));
    parities.push_back(g->parity(i));
  }
  const auto n = static_cast<uint32_t>(q.complement.size());
  std::vector<Vector> table(size_t(n) * n);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      table[size_t(a) * n + b] = q.project(g->structure(q.complement[a], q.complement[b]));
  q.algebra = share(LieSuperAlgebra(name.empty() ? g->name() + "/I" : name,
                                    SuperSpace(std::move(labels), std::move(parities)),
                                    std::move(table)));
  return q;
}

// ---------------------------------------------------------------- forms

namespace {

/// For each basis j: column view of ad_j, i.e. per m the list (k, c_{jk}^m).
std::vector<std::vector<std::vector<std::pair<uint32_t, Scalar>>>> ad_columns(
    const LieSuperAlgebra& g) {
  const auto d = static_cast<uint32_t>(g.dim());
  std::vector<std::vector<std::vector<std::pair<uint32_t, Scalar>>>> out(d);
  for (uint32_t j = 0; j < d; ++j) {
    out[j].resize(d);
    for (uint32_t k = 0; k < d; ++k)
      for (const auto& [m, c] : g.structure(j, k)) out[j][m].emplace_back(k, c);
  }
  return out;
}

}  // namespace

FormReport form_properties(const LieSuperAlgebra& g, const BilinearForm& b) {
  if (b.dim() != g.dim()) throw DimensionMismatch("form_properties: form and algebra differ in size");
  FormReport r;
  r.parity = b.parity();
  r.parity_consistent.name = "form parity";
  r.supersymmetric.name = "supersymmetry";
  r.invariant.name = "invariance";
  r.nondegenerate.name = "nondegeneracy";
  const auto d = static_cast<uint32_t>(g.dim());
  const auto& space = g.space();

  for (uint32_t i = 0; i < d; ++i) {
    for (const auto& [j, c] : b.rows()[i]) {
      ++r.parity_consistent.checked;
      if ((g.parity(i) ^ g.parity(j)) != b.parity()) {
        r.parity_consistent.record_violation(
            {i, j}, "B" + idx_str({i, j}, space) + " = " + c.str() + " but parities disagree");
      }
    }
  }

  for (uint32_t i = 0; i < d; ++i) {
    for (uint32_t j = i; j < d; ++j) {
      ++r.supersymmetric.checked;
      Scalar a = b.at(i, j), c = b.at(j, i);
      if (a != sign_of(g.parity(i) * g.parity(j)) * c) {
        r.supersymmetric.record_violation({i, j}, "B" + idx_str({i, j}, space) + " = " + a.str() +
                                                      ", B" + idx_str({j, i}, space) + " = " +
                                                      c.str());
      }
    }
  }

  // B([e_i,e_j], e_k) = B(e_i, [e_j,e_k]) for all k at once, per pair (i,j).
  const bool trunc = g.truncated();
  const Grading* gr = trunc ? &g.grading() : nullptr;
  auto cols = ad_columns(g);
  Scratch lhs(d);
  for (uint32_t i = 0; i < d; ++i) {
    for (uint32_t j = 0; j < d; ++j) {
      lhs.clear();
      for (const auto& [m, c] : g.structure(i, j)) lhs.add(b.rows()[m], c);
      for (const auto& [m, c] : b.rows()[i])
        for (const auto& [k, x] : cols[j][m]) lhs.add(k, -(c * x));
      Vector diff = lhs.take();
      if (!trunc) {
        r.invariant.checked += d;
        for (const auto& [k, c] : diff) {
          r.invariant.record_violation({i, j, k}, idx_str({i, j, k}, space) + ": B([x,y],z) - B(x,[y,z]) = " + c.str());
        }
        continue;
      }
      // Window-conditional: (i,j,k) is decided only if no escaped degree of
      // [e_i,e_j] pairs with e_k and none of [e_j,e_k] pairs with e_i.
      const DegreeSet& eij = g.escapes(i, j);
      auto bad = [&](uint32_t k) {
        for (int e : eij)
          if (gr->pair_sum - e == gr->degree[k]) return true;
        for (int e : g.escapes(j, k))
          if (gr->pair_sum - e == gr->degree[i]) return true;
        return false;
      };
      for (uint32_t k = 0; k < d; ++k) {
        if (bad(k)) {
          ++r.invariant.skipped;
        } else {
          ++r.invariant.checked;
        }
      }
      for (const auto& [k, c] : diff) {
        if (!bad(k)) {
          r.invariant.record_violation({i, j, k}, idx_str({i, j, k}, space) + ": B([x,y],z) - B(x,[y,z]) = " + c.str());
        }
      }
    }
  }

  // Rank of the Gram block on paired elements (everything when untruncated).
  std::vector<uint32_t> keep;
  for (uint32_t i = 0; i < d; ++i) {
    if (!trunc || gr->paired(gr->degree[i])) keep.push_back(i);
  }
  std::vector<int64_t> pos(d, -1);
  for (size_t a = 0; a < keep.size(); ++a) pos[keep[a]] = static_cast<int64_t>(a);
  std::vector<Vector> rows;
  rows.reserve(keep.size());
  for (uint32_t i : keep) {
    VectorAccumulator acc;
    for (const auto& [j, c] : b.rows()[i]) {
      if (pos[j] >= 0) acc.add(static_cast<uint32_t>(pos[j]), c);
    }
    rows.push_back(acc.take());
  }
  Subspace rs(keep.size());
  for (const auto& row : rows) rs.insert(row);
  r.rank = rs.dim();
  r.paired_dim = keep.size();
  r.nondegenerate.checked = keep.size();
  r.nondegenerate.skipped = d - keep.size();
  if (r.rank < keep.size()) {
    // Report a radical vector as the witness.
    std::vector<Vector> eqs(keep.size());
    std::vector<VectorAccumulator> colacc(keep.size());
    for (size_t a = 0; a < rows.size(); ++a)
      for (const auto& [c, x] : rows[a]) colacc[c].add(static_cast<uint32_t>(a), x);
    for (size_t c = 0; c < keep.size(); ++c) eqs[c] = colacc[c].take();
    Subspace rad = kernel(eqs, keep.size());
    for (const auto& v : rad.basis()) {
      VectorAccumulator lifted;
      for (const auto& [a, x] : v) lifted.add(keep[a], x);
      Vector w = lifted.take();
      std::vector<uint32_t> ids;
      for (const auto& [k, x] : w) ids.push_back(k);
      r.nondegenerate.record_violation(ids, "radical vector " + w.str(space));
    }
    r.nondegenerate.note = "rank " + std::to_string(r.rank) + " < " + std::to_string(keep.size());
  }
  return r;
}

Subspace radical(const BilinearForm& b) {
  const size_t d = b.dim();
  std::vector<VectorAccumulator> cols(d);
  for (size_t i = 0; i < d; ++i)
    for (const auto& [j, c] : b.rows()[i]) cols[j].add(static_cast<uint32_t>(i), c);
  std::vector<Vector> eqs;
  for (auto& c : cols) {
    if (!c.empty()) eqs.push_back(c.take());
  }
  return kernel(eqs, d);
}

BilinearForm restrict_form(const BilinearForm& b, const SubalgebraHandle& h, const std::string& name) {
  if (b.dim() != h.parent()->dim()) throw DimensionMismatch("restrict_form: form lives elsewhere");
  const auto n = static_cast<uint32_t>(h.dim());
  std::vector<Vector> lefts;
  lefts.reserve(n);
  for (uint32_t a = 0; a < n; ++a) lefts.push_back(b.left(h.basis_vector(a)));
  std::vector<Vector> rows(n);
  for (uint32_t a = 0; a < n; ++a) {
    VectorAccumulator acc;
    for (uint32_t c = 0; c < n; ++c) {
      Scalar s;
      const Vector& l = lefts[a];
      for (const auto& [k, x] : h.basis_vector(c)) {
        Scalar y = l.at(k);
        if (!y.is_zero()) s += y * x;
      }
      acc.add(c, s);
    }
    rows[a] = acc.take();
  }
  return {name.empty() ? b.name() : name, b.parity(), std::move(rows)};
}

BilinearForm representative_form(const BilinearForm& b, const Quotient& q, const std::string& name) {
  const auto n = static_cast<uint32_t>(q.complement.size());
  std::vector<int64_t> pos(b.dim(), -1);
  for (uint32_t a = 0; a < n; ++a) pos[q.complement[a]] = a;
  std::vector<Vector> rows(n);
  for (uint32_t a = 0; a < n; ++a) {
    VectorAccumulator acc;
    for (const auto& [j, c] : b.rows()[q.complement[a]]) {
      if (pos[j] >= 0) acc.add(static_cast<uint32_t>(pos[j]), c);
    }
    rows[a] = acc.take();
  }
  return {name.empty() ? b.name() : name, b.parity(), std::move(rows)};
}

BilinearForm pushdown_form(const BilinearForm& b, const Quotient& q, const std::string& name) {
  Subspace rad = radical(b);
  if (!q.ideal.is_subspace_of(rad)) {
    throw std::invalid_argument("pushdown_form: ideal is not in the radical of " + b.name());
  }
  return representative_form(b, q, name);
}

std::vector<BilinearForm> invariant_forms(const LieSuperAlgebra& g, Parity parity) {
  if (g.truncated()) throw std::invalid_argument("invariant_forms: truncated algebra");
  const auto d = static_cast<uint32_t>(g.dim());
  // Unknown per unordered pair {i <= j} of matching parity; G_ji = (-1)^{p_i p_j} G_ij.
  std::vector<int64_t> var(size_t(d) * d, -1);
  std::vector<std::pair<uint32_t, uint32_t>> vars;
  for (uint32_t i = 0; i < d; ++i) {
    for (uint32_t j = i; j < d; ++j) {
      if ((g.parity(i) ^ g.parity(j)) != parity) continue;
      if (i == j && g.parity(i) == 1) continue;  // forced zero
      var[size_t(i) * d + j] = static_cast<int64_t>(vars.size());
      vars.emplace_back(i, j);
    }
  }
  auto entry = [&](uint32_t a, uint32_t b, const Scalar& c, VectorAccumulator& acc) {
    if (a <= b) {
      int64_t v = var[size_t(a) * d + b];
      if (v >= 0) acc.add(static_cast<uint32_t>(v), c);
    } else {
      int64_t v = var[size_t(b) * d + a];
      if (v >= 0) acc.add(static_cast<uint32_t>(v), sign_of(g.parity(a) * g.parity(b)) * c);
    }
  };
  Subspace eqs(vars.size());
  for (uint32_t i = 0; i < d; ++i) {
    for (uint32_t j = 0; j < d; ++j) {
      for (uint32_t k = 0; k < d; ++k) {
        VectorAccumulator acc;
        for (const auto& [m, c] : g.structure(i, j)) entry(m, k, c, acc);
        for (const auto& [m, c] : g.structure(j, k)) entry(i, m, -c, acc);
        if (!acc.empty()) eqs.insert(acc.take());
      }
    }
  }
  // Kernel of the accumulated equations.
  Subspace sol = kernel(eqs.basis(), vars.size());
  std::vector<BilinearForm> out;
  for (const auto& s : sol.basis()) {
    std::vector<VectorAccumulator> rows(d);
    for (const auto& [v, c] : s) {
      auto [i, j] = vars[v];
      rows[i].add(j, c);
      if (i != j) rows[j].add(i, sign_of(g.parity(i) * g.parity(j)) * c);
    }
    std::vector<Vector> rr;
    for (auto& r : rows) rr.push_back(r.take());
    out.emplace_back("inv" + std::to_string(out.size()), parity, std::move(rr));
  }
  return out;
}

std::string vector_label(const Vector& v, const SuperSpace& space) { return v.str(space); }

}  // namespace manin
