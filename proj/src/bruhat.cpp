#include "wg/bruhat.hpp"

#include <algorithm>

#include "wg/error.hpp"

namespace wg {

const std::vector<GroupElement> &BruhatData::cell(const Element &w) const {
  static const std::vector<GroupElement> empty;
  auto it = cells.find(w);
  return it == cells.end() ? empty : it->second;
}

BruhatData make_bruhat_data(FiniteGroup group, CoxeterSystem system, std::vector<Element> cell_of) {
  if (cell_of.size() != group.order())
    throw ValidationError("cell assignment has " + std::to_string(cell_of.size()) + " entries for a group of order " +
                          std::to_string(group.order()));
  BruhatData d{std::move(group), std::move(system), std::move(cell_of), {}, {}};
  d.borel.assign(d.cell_of.size(), false);
  for (GroupElement g = 0; g < d.cell_of.size(); ++g) {
    d.cell_of[g] = d.system.import(d.cell_of[g]);
    d.cells[d.cell_of[g]].push_back(g);
    d.borel[g] = d.cell_of[g].is_identity();
  }
  return d;
}

BruhatData from_one_chamber(const WGroupoid &g) {
  const auto &G = g.groupoid();
  if (G.vertex_count() != 1)
    throw HypothesisError("not one-chamber: " + std::to_string(G.vertex_count()) + " chambers");
  auto local = local_group(G, 0);
  const auto &grp = local.group;
  const std::size_t order = grp.order();
  std::vector<Element> cell_of(order);
  std::vector<bool> in_b(order, false);
  std::vector<GroupElement> borel;
  for (GroupElement k = 0; k < order; ++k) {
    cell_of[k] = g.delta(local.edges[k]);
    if (cell_of[k].is_identity()) {
      in_b[k] = true;
      borel.push_back(k);
    }
  }
  for (auto x : borel) {
    if (!in_b[grp.inverse(x)])
      throw ValidationError("B is not a subgroup: inverse of " + grp.label(x) + " has W-length " +
                            to_string(cell_of[grp.inverse(x)]));
    for (auto y : borel)
      if (!in_b[grp.mul(x, y)])
        throw ValidationError("B is not a subgroup: " + grp.label(x) + " * " + grp.label(y) + " has W-length " +
                              to_string(cell_of[grp.mul(x, y)]));
  }

  std::vector<bool> assigned(order, false);
  std::map<Element, GroupElement> coset_of_value;
  for (GroupElement x = 0; x < order; ++x) {
    if (assigned[x])
      continue;
    for (auto b1 : borel)
      for (auto b2 : borel) {
        const auto y = grp.mul(grp.mul(b1, x), b2);
        if (cell_of[y] != cell_of[x])
          throw ValidationError("W-length is not constant on the double coset of " + grp.label(x) + ": " +
                                to_string(cell_of[x]) + " at " + grp.label(x) + ", " + to_string(cell_of[y]) +
                                " at " + grp.label(y));
        assigned[y] = true;
      }
    auto [it, fresh] = coset_of_value.emplace(cell_of[x], x);
    if (!fresh)
      throw ValidationError("double cosets of " + grp.label(it->second) + " and " + grp.label(x) +
                            " share the value " + to_string(cell_of[x]));
  }
  return make_bruhat_data(grp, g.system(), std::move(cell_of));
}

WGroupoid bruhat_to_wgroupoid(const BruhatData &d) {
  return WGroupoid(group_groupoid(d.group), d.system, d.cell_of);
}

BruhatReport check_property_B(const BruhatData &d, const CheckOptions &options) {
  BruhatReport r;
  auto add = [&](bool &flag, Witness w) {
    flag = false;
    std::size_t count = 0;
    for (const auto &x : r.witnesses)
      count += x.check == w.check;
    if (count < options.max_witnesses)
      r.witnesses.push_back(std::move(w));
  };
  const auto &sys = d.system;
  const auto &grp = d.group;
  const std::size_t order = grp.order();
  using Mask = std::vector<bool>;
  auto mask = [&](const std::vector<GroupElement> &cell) {
    Mask m(order, false);
    for (auto x : cell)
      m[x] = true;
    return m;
  };
  auto product = [&](const std::vector<GroupElement> &a, const std::vector<GroupElement> &b) {
    Mask m(order, false);
    for (auto x : a)
      for (auto y : b)
        m[grp.mul(x, y)] = true;
    return m;
  };
  auto subset = [&](const Mask &a, const Mask &b) {
    for (std::size_t i = 0; i < order; ++i)
      if (a[i] && !b[i])
        return false;
    return true;
  };
  auto unite = [&](Mask a, const Mask &b) {
    for (std::size_t i = 0; i < order; ++i)
      a[i] = a[i] || b[i];
    return a;
  };

  const auto elements = sys.all_elements();
  for (const auto &w : elements)
    if (d.cell(w).empty())
      add(r.bijective, {"bijective", {to_string(w)}, "nonempty cell", "empty"});

  for (const auto &w : elements)
    for (Generator s = 0; s < sys.rank(); ++s) {
      const Element ws = sys.mult_generator(w, s);
      const std::vector<std::string> items{to_string(w), std::to_string(s)};
      const Mask cw = mask(d.cell(w));
      const Mask cws = mask(d.cell(ws));
      const Mask cw_cs = product(d.cell(w), d.cell(sys.generator(s)));
      if (ws.length() < w.length()) {
        const bool upper = subset(cw_cs, unite(cws, cw));
        const bool lower = subset(cws, cw_cs);
        if (!upper)
          add(r.b_prime, {"(B')", items, "C(w)C(s) in C(ws) u C(w)", "not contained"});
        if (!subset(cw, product(d.cell(ws), d.cell(sys.generator(s)))))
          add(r.b_double_prime, {"(B'')", items, "C(w) in C(ws)C(s)", "not contained"});
        if (!lower)
          add(r.prop, {"Prop", items, "C(ws) in C(w)C(s)", "not contained"});
        if (!upper || !lower)
          add(r.b, {"(B)", items, "C(ws) in C(w)C(s) in C(ws) u C(w)", "not satisfied"});
      } else {
        if (!subset(cw_cs, cws))
          add(r.b_prime, {"(B')", items, "C(w)C(s) in C(ws)", "not contained"});
        if (cw_cs != cws)
          add(r.b, {"(B)", items, "C(w)C(s) = C(ws)", "not equal"});
      }
    }
  return r;
}

Element bruhat_word_of_matrix(const Matrix &m, int q, const CoxeterSystem &system) {
  const int n = m.n;
  if (system.rank() != n - 1)
    throw ValidationError("Coxeter system of rank " + std::to_string(system.rank()) + " for " + std::to_string(n) +
                          "x" + std::to_string(n) + " matrices");
  if (rank(m, q) != n)
    throw ValidationError("matrix " + matrix_label(m) + " is singular");
  // r[i][j] = rank of the lower-left i x j corner
  std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      r[i][j] = submatrix_rank(m, n - i, i, 0, j, q);
  std::vector<int> perm(n, -1); // column -> row of the permutation matrix
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (r[i][j] - r[i - 1][j] - r[i][j - 1] + r[i - 1][j - 1] == 1)
        perm[j - 1] = n - i;
  Word swaps;
  for (bool moved = true; moved;) {
    moved = false;
    for (int j = 0; j + 1 < n; ++j)
      if (perm[j] > perm[j + 1]) {
        std::swap(perm[j], perm[j + 1]);
        swaps.push_back(n - 2 - j);
        moved = true;
      }
  }
  std::reverse(swaps.begin(), swaps.end());
  return system.canonicalize(swaps);
}

BruhatData gl_bruhat(int n, int q) {
  if (n < 2)
    throw ValidationError("gl_bruhat needs n >= 2");
  auto gl = general_linear_group(n, q);
  CoxeterSystem sys(CoxeterMatrix::type_a(n - 1));
  std::vector<Element> cell_of;
  cell_of.reserve(gl.matrices.size());
  for (const auto &m : gl.matrices)
    cell_of.push_back(bruhat_word_of_matrix(m, q, sys));
  return make_bruhat_data(gl.group, sys, std::move(cell_of));
}

} // namespace wg
