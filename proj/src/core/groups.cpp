#include "core/groups.hpp"

#include <algorithm>
#include <map>

#include "core/errors.hpp"

namespace focal {

void FiniteGroup::finish_validation() {
  int n = order();
  if (n == 0) fail(Errc::not_a_group, "empty multiplication table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table_[i].size()) != n) fail(Errc::not_a_group, "table is not square");
    for (int j = 0; j < n; ++j)
      if (table_[i][j] < 0 || table_[i][j] >= n) fail(Errc::not_a_group, "table entry out of range");
  }
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table_[c][x] == x && table_[x][c] == x;
    if (ok) e = c;
  }
  if (e < 0) fail(Errc::not_a_group, "table has no identity");
  identity_ = e;
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == e && table_[b][a] == e) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) fail(Errc::not_a_group, "element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          fail(Errc::not_a_group, "table is not associative at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  FiniteGroup g;
  g.table_ = std::move(table);
  g.finish_validation();
  g.words_.assign(g.order(), {});
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators, int cap) {
  if (generators.empty()) fail(Errc::not_a_group, "no generators given");
  size_t m = generators[0].size();
  for (const auto& g : generators) {
    if (g.size() != m) fail(Errc::shape_mismatch, "generators act on different point counts");
    std::vector<bool> seen(m, false);
    for (int x : g) {
      if (x < 0 || x >= static_cast<int>(m) || seen[x])
        fail(Errc::not_a_group, "generator is not a permutation");
      seen[x] = true;
    }
  }

  std::vector<int> id(m);
  for (size_t i = 0; i < m; ++i) id[i] = static_cast<int>(i);
  std::vector<std::vector<int>> elements{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  std::vector<std::vector<int>> words{{}};
  // Breadth-first closure; left-multiplying by generators keeps words short.
  for (size_t head = 0; head < elements.size(); ++head) {
    for (size_t gi = 0; gi < generators.size(); ++gi) {
      std::vector<int> next(m);
      for (size_t x = 0; x < m; ++x) next[x] = generators[gi][elements[head][x]];
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        if (static_cast<int>(elements.size()) >= cap)
          fail(Errc::size_cap_exceeded, "permutation closure exceeded " + std::to_string(cap) + " elements");
        std::vector<int> w{static_cast<int>(gi)};
        w.insert(w.end(), words[head].begin(), words[head].end());
        elements.push_back(std::move(next));
        words.push_back(std::move(w));
      }
    }
  }

  int n = static_cast<int>(elements.size());
  FiniteGroup g;
  g.table_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(m);
      for (size_t x = 0; x < m; ++x) prod[x] = elements[a][elements[b][x]];
      auto it = index.find(prod);
      if (it == index.end()) fail(Errc::internal, "permutation closure was not closed");
      g.table_[a][b] = it->second;
    }
  g.finish_validation();
  g.words_ = std::move(words);
  g.generator_count_ = static_cast<int>(generators.size());
  return g;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  int n = order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    int id = static_cast<int>(classes.size());
    std::vector<int> members;
    for (int g = 0; g < n; ++g) {
      int conj = mul(mul(g, a), inv(g));
      if (cls[conj] < 0) {
        cls[conj] = id;
        members.push_back(conj);
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

std::vector<Matrix> FiniteGroup::matrices_from_generator_images(const std::vector<Matrix>& images) const {
  if (static_cast<int>(images.size()) != generator_count_)
    fail(Errc::shape_mismatch, "one image per generator required");
  if (generator_count_ == 0) fail(Errc::shape_mismatch, "group was not built from generators");
  int dim = images.empty() ? 0 : images[0].rows();
  std::vector<Matrix> out;
  out.reserve(order());
  for (int e = 0; e < order(); ++e) {
    Matrix m = Matrix::identity(dim);
    for (int gi : words_[e]) m = m * images[gi];
    out.push_back(std::move(m));
  }
  return out;
}

ActionOnAlgebra make_action(std::shared_ptr<const FiniteGroup> group,
                            std::shared_ptr<const Algebra> algebra, std::vector<Matrix> matrices) {
  if (!group || !algebra) fail(Errc::internal, "action needs a group and an algebra");
  const FiniteGroup& g = *group;
  const Algebra& alg = *algebra;
  if (static_cast<int>(matrices.size()) != g.order())
    fail(Errc::not_an_action, "need one matrix per group element");
  int d = alg.dim();
  for (int e = 0; e < g.order(); ++e) {
    const Matrix& m = matrices[e];
    if (m.rows() != d || m.cols() != d)
      fail(Errc::not_an_action, "matrix for element " + std::to_string(e) + " has wrong shape");
    if (!m.try_inverse())
      fail(Errc::not_an_action, "matrix for element " + std::to_string(e) + " is singular");
    if (m.apply(alg.one()) != alg.one())
      fail(Errc::not_an_action, "element " + std::to_string(e) + " does not fix the unit");
  }
  if (matrices[g.identity()] != Matrix::identity(d))
    fail(Errc::not_an_action, "identity element does not act as the identity matrix");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (matrices[a] * matrices[b] != matrices[g.mul(a, b)])
        fail(Errc::not_an_action, "matrices break the group law at (" + std::to_string(a) + "," +
                                      std::to_string(b) + ")");
  // Automorphism property on basis pairs.
  std::vector<std::vector<Scalar>> basis(d, std::vector<Scalar>(d, Scalar(0)));
  for (int i = 0; i < d; ++i) basis[i][i] = Scalar(1);
  for (int e = 0; e < g.order(); ++e)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::vector<Scalar> lhs = matrices[e].apply(alg.multiply(basis[i], basis[j]));
        std::vector<Scalar> rhs = alg.multiply(matrices[e].apply(basis[i]), matrices[e].apply(basis[j]));
        if (lhs != rhs)
          fail(Errc::not_an_action, "element " + std::to_string(e) +
                                        " is not an algebra automorphism on basis pair (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
      }
  ActionOnAlgebra action;
  action.group = std::move(group);
  action.algebra = std::move(algebra);
  action.matrices = std::move(matrices);
  return action;
}

ActionOnAlgebra conjugation_action(std::shared_ptr<const FiniteGroup> group,
                                   const std::vector<Matrix>& rep_matrices, FieldDescriptor field) {
  if (!group) fail(Errc::internal, "conjugation action needs a group");
  if (static_cast<int>(rep_matrices.size()) != group->order())
    fail(Errc::not_an_action, "need one representing matrix per group element");
  int n = rep_matrices.empty() ? 0 : rep_matrices[0].rows();
  if (n == 0) fail(Errc::not_an_action, "empty representation");
  auto algebra = std::make_shared<const Algebra>(Algebra::matrix_algebra(n, field));
  int d = n * n;
  std::vector<Matrix> action_matrices;
  action_matrices.reserve(group->order());
  for (int e = 0; e < group->order(); ++e) {
    const Matrix& r = rep_matrices[e];
    if (r.rows() != n || r.cols() != n)
      fail(Errc::not_an_action, "representation matrix " + std::to_string(e) + " has wrong shape");
    auto rinv = r.try_inverse();
    if (!rinv) fail(Errc::not_an_action, "representation matrix " + std::to_string(e) + " is singular");
    Matrix gamma(d, d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Matrix unit(n, n);
        unit.at(i, j) = Scalar(1);
        Matrix image = r * unit * *rinv;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) gamma.at(a * n + b, i * n + j) = image.at(a, b);
      }
    action_matrices.push_back(std::move(gamma));
  }
  return make_action(std::move(group), algebra, std::move(action_matrices));
}

IsotypicDecomposition isotypic_components(const ActionOnAlgebra& action,
                                          const std::vector<CharacterRow>& characters) {
  const FiniteGroup& g = *action.group;
  const Algebra& alg = *action.algebra;
  int d = alg.dim();
  IsotypicDecomposition out;
  for (const auto& chi : characters) {
    if (static_cast<int>(chi.values.size()) != g.order())
      fail(Errc::shape_mismatch, "character '" + chi.name + "' needs one value per group element");
    if (chi.degree < 1) fail(Errc::shape_mismatch, "character '" + chi.name + "' has nonpositive degree");
    for (const auto& v : chi.values)
      if (v.order() != 1 && v.order() != alg.field().order)
        fail(Errc::field_too_small, "character '" + chi.name + "' takes values of cyclotomic order " +
                                        std::to_string(v.order()) +
                                        " which the algebra field (order " +
                                        std::to_string(alg.field().order) + ") cannot represent");

    Matrix proj(d, d);
    for (int e = 0; e < g.order(); ++e) {
      const Scalar& weight = chi.values[g.inv(e)];
      if (weight.is_zero()) continue;
      proj = proj + action.matrices[e].scaled(weight);
    }
    proj = proj.scaled(Scalar(Rational(chi.degree, g.order())));
    // Image = column span.
    out.components.push_back(Subspace::span(proj.transpose(), d));
  }
  Subspace sum = Subspace::zero(d);
  for (const auto& c : out.components) sum = sum.sum(c);
  out.complete = sum.dim() == d;
  return out;
}

int trivial_multiplicity(const ActionOnAlgebra& action) {
  const FiniteGroup& g = *action.group;
  int d = action.algebra->dim();
  Matrix stacked(d * g.order(), d);
  for (int e = 0; e < g.order(); ++e) {
    Matrix diff = action.matrices[e] - Matrix::identity(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) stacked.at(e * d + i, j) = diff.at(i, j);
  }
  return stacked.kernel().rows();
}

OneSidedIdealCheck one_sided_ideal_check(const AtomSystem& sys) {
  Subspace top = top_subspace(sys);
  for (int i = 0; i < sys.atom_count(); ++i) {
    if (sys.algebra->product_span(top, sys.atoms[i].space) != top ||
        sys.algebra->product_span(sys.atoms[i].space, top) != top)
      return {false, i};
  }
  return {};
}

}  // namespace focal
