#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wg/config.hpp"
#include "wg/coxeter.hpp"
#include "wg/groupoid.hpp"

namespace wg {

/// A finite groupoid together with a W-length on its edges. Construction
/// does not check any axiom; see check_axioms().
class WGroupoid {
public:
  WGroupoid(std::shared_ptr<const FiniteGroupoid> base, CoxeterSystem system, std::vector<Element> delta);
  WGroupoid(FiniteGroupoid base, CoxeterSystem system, std::vector<Element> delta);

  const FiniteGroupoid &groupoid() const { return *base_; }
  const std::shared_ptr<const FiniteGroupoid> &groupoid_ptr() const { return base_; }
  const CoxeterSystem &system() const { return system_; }
  const Element &delta(EdgeId g) const { return delta_[g]; }
  const std::vector<Element> &deltas() const { return delta_; }

  std::size_t chamber_count() const { return base_->vertex_count(); }
  std::size_t edge_count() const { return base_->edge_count(); }

  /// Copy with one edge's W-length replaced.
  WGroupoid with_delta(EdgeId g, const Element &value) const;

private:
  std::shared_ptr<const FiniteGroupoid> base_;
  CoxeterSystem system_;
  std::vector<Element> delta_;
};

/// Builds a candidate from an edge-name -> word assignment; every edge must
/// be assigned.
WGroupoid make_wgroupoid(FiniteGroupoid base, CoxeterSystem system, const std::map<std::string, Word> &assignment);

/// A concrete counterexample found by a check.
struct Witness {
  std::string check;
  std::vector<std::string> items;
  std::string expected;
  std::string found;
};

std::string to_string(const Witness &w);

struct AxiomReport {
  bool wg1 = true;
  bool wg2 = true;
  bool wg2prime = true;
  bool wg3 = true;
  bool weak = true;
  bool strict = true;
  std::vector<Witness> witnesses;

  /// WG1, WG2, WG3 and weakness: the defining properties.
  bool is_wgroupoid() const { return wg1 && wg2 && wg3 && weak; }
  bool all() const { return is_wgroupoid() && wg2prime && strict; }
  std::size_t witness_count(std::string_view check) const;
};

struct CheckOptions {
  std::size_t max_witnesses = kDefaultMaxWitnesses;
};

/// Every axiom is decided independently and exhaustively.
AxiomReport check_axioms(const WGroupoid &g, const CheckOptions &options = {});

/// The J-residue containing `chamber`, as a W_J-groupoid (generator k of
/// the result is J[k] after sorting).
WGroupoid residue(const WGroupoid &g, std::vector<Generator> subset, VertexId chamber);
WGroupoid panel(const WGroupoid &g, Generator s, VertexId chamber);
/// The subgroupoid of all edges of W-length 1.
FiniteGroupoid borel(const WGroupoid &g);

struct Gallery {
  std::vector<EdgeId> steps;
  Word type;
};

/// Every factorization g = g_1 ... g_n with W-length(g_k) = type[k].
std::vector<Gallery> galleries(const WGroupoid &g, EdgeId edge, const Word &type);

struct GeodesicReport {
  struct Violation {
    Word type;
    std::size_t count = 0; // 0: no geodesic of this type; > 1: not unique
  };
  EdgeId edge = 0;
  /// One geodesic per reduced word of W-length(edge) (the first found).
  std::map<Word, Gallery> geodesics;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

GeodesicReport geodesics(const WGroupoid &g, EdgeId edge);

/// Verdicts for the consequences derived from the axioms: inverse laws,
/// the double-coset lemma, panel closure, the equivalence of the local and
/// global triangle inequalities, and the behaviour of geodesics. A line
/// whose hypotheses fail on the input is reported as not applicable.
struct ConsequenceReport {
  struct Line {
    std::string name;
    bool applicable = false;
    bool holds = true;
    std::size_t checked = 0;
    std::vector<Witness> witnesses;
  };
  std::vector<Line> lines;

  bool all_hold() const;
  const Line &line(std::string_view name) const;
};

ConsequenceReport check_consequences(const WGroupoid &g, const AxiomReport &axioms,
                                     const CheckOptions &options = {});
ConsequenceReport check_consequences(const WGroupoid &g, const CheckOptions &options = {});

} // namespace wg
