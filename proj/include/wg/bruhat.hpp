#pragma once

#include <map>
#include <vector>

#include "wg/group.hpp"
#include "wg/linear.hpp"
#include "wg/wmetric.hpp"

namespace wg {

/// A group with a subgroup B and an assignment of a Weyl-group element to
/// every group element; C(w) is the set of elements assigned w.
struct BruhatData {
  FiniteGroup group;
  CoxeterSystem system;
  std::vector<Element> cell_of;                       // per group element
  std::map<Element, std::vector<GroupElement>> cells; // w -> C(w), sorted
  std::vector<bool> borel;                            // membership in C(1)

  const std::vector<GroupElement> &cell(const Element &w) const;
};

/// Derives cells and B from the per-element assignment.
BruhatData make_bruhat_data(FiniteGroup group, CoxeterSystem system, std::vector<Element> cell_of);

/// Group element k is edge k of the single chamber's local group. Throws
/// HypothesisError for more than one chamber; ValidationError when B is not
/// a subgroup, W-length is not constant on a double coset, or two double
/// cosets share a value.
BruhatData from_one_chamber(const WGroupoid &g);

/// The one-chamber W-groupoid of the group with W-length g -> cell_of[g].
WGroupoid bruhat_to_wgroupoid(const BruhatData &d);

struct BruhatReport {
  bool b = true;
  bool b_prime = true;
  bool b_double_prime = true;
  bool prop = true;      // C(ws) in C(w)C(s) whenever ws < w
  bool bijective = true; // every w of the (finite) Weyl group has a nonempty cell
  std::vector<Witness> witnesses;

  bool all() const { return b && b_prime && b_double_prime && prop; }
};

/// Exhaustive set-product checks over every pair (w, s); W must be finite.
BruhatReport check_property_B(const BruhatData &d, const CheckOptions &options = {});

/// w with M in BwB (B upper triangular), read off the ranks of the
/// lower-left corners. Transposition (i, i+1) maps to generator n-1-i, which
/// matches the generator labels of gl_building for n = 3.
Element bruhat_word_of_matrix(const Matrix &m, int q, const CoxeterSystem &system);

/// BruhatData of GL_n(F_q) over A_{n-1}, group elements in the order of
/// general_linear_group(n, q).
BruhatData gl_bruhat(int n, int q);

} // namespace wg
