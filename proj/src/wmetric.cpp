#include "wg/wmetric.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace wg {

WGroupoid::WGroupoid(std::shared_ptr<const FiniteGroupoid> base, CoxeterSystem system, std::vector<Element> delta)
    : base_(std::move(base)), system_(std::move(system)), delta_(std::move(delta)) {
  if (!base_)
    throw ValidationError("W-groupoid needs a base groupoid");
  if (delta_.size() != base_->edge_count())
    throw ValidationError("W-length assigned to " + std::to_string(delta_.size()) + " edges, groupoid has " +
                          std::to_string(base_->edge_count()));
  for (EdgeId g = 0; g < delta_.size(); ++g)
    if (!system_.owns(delta_[g]))
      throw ValidationError("W-length of edge " + base_->edge_name(g) + " is not an element of the system");
}

WGroupoid::WGroupoid(FiniteGroupoid base, CoxeterSystem system, std::vector<Element> delta)
    : WGroupoid(std::make_shared<const FiniteGroupoid>(std::move(base)), std::move(system), std::move(delta)) {}

WGroupoid WGroupoid::with_delta(EdgeId g, const Element &value) const {
  auto d = delta_;
  d.at(g) = system_.import(value);
  return WGroupoid(base_, system_, std::move(d));
}

WGroupoid make_wgroupoid(FiniteGroupoid base, CoxeterSystem system, const std::map<std::string, Word> &assignment) {
  std::vector<Element> delta;
  delta.reserve(base.edge_count());
  for (EdgeId g = 0; g < base.edge_count(); ++g) {
    auto it = assignment.find(base.edge_name(g));
    if (it == assignment.end())
      throw ValidationError("no W-length assigned to edge '" + base.edge_name(g) + "'");
    delta.push_back(system.canonicalize(it->second));
  }
  for (const auto &[name, word] : assignment)
    if (!base.find_edge(name))
      throw ValidationError("W-length assigned to unknown edge '" + name + "'");
  return WGroupoid(std::move(base), std::move(system), std::move(delta));
}

std::string to_string(const Witness &w) {
  std::string out = w.check + " (";
  for (std::size_t i = 0; i < w.items.size(); ++i)
    out += (i ? ", " : "") + w.items[i];
  out += ")";
  if (!w.expected.empty() || !w.found.empty())
    out += ": expected " + w.expected + ", found " + w.found;
  return out;
}

std::size_t AxiomReport::witness_count(std::string_view check) const {
  return static_cast<std::size_t>(
      std::count_if(witnesses.begin(), witnesses.end(), [&](const Witness &w) { return w.check == check; }));
}

namespace {

class WitnessSink {
public:
  WitnessSink(std::vector<Witness> &out, std::size_t limit) : out_(out), limit_(limit) {}

  void add(const std::string &check, std::vector<std::string> items, std::string expected, std::string found) {
    if (counts_[check]++ < limit_)
      out_.push_back({check, std::move(items), std::move(expected), std::move(found)});
  }

private:
  std::vector<Witness> &out_;
  std::size_t limit_;
  std::map<std::string, std::size_t> counts_;
};

std::string set_string(const Element &a, const Element &b) {
  return a == b ? "{" + to_string(a) + "}" : "{" + to_string(a) + "," + to_string(b) + "}";
}

} // namespace

AxiomReport check_axioms(const WGroupoid &wg, const CheckOptions &options) {
  const FiniteGroupoid &g = wg.groupoid();
  const CoxeterSystem &W = wg.system();
  AxiomReport r;
  WitnessSink sink(r.witnesses, std::max<std::size_t>(1, options.max_witnesses));
  const auto &name = [&](EdgeId e) -> const std::string & { return g.edge_name(e); };
  const Element one = W.identity();

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const EdgeId id = g.identity(v);
    if (wg.delta(id) != one) {
      r.wg1 = false;
      sink.add("WG1", {name(id)}, "[]", to_string(wg.delta(id)));
    }
  }

  for (EdgeId a = 0; a < g.edge_count(); ++a)
    for (EdgeId b : g.out_edges(g.target(a))) {
      const EdgeId ab = g.compose_unchecked(a, b);
      const Element lower = W.mult(wg.delta(a), wg.delta(b));
      if (!W.bruhat_leq(lower, wg.delta(ab))) {
        r.wg2 = false;
        sink.add("WG2", {name(a), name(b), name(ab)}, ">= " + to_string(lower), to_string(wg.delta(ab)));
      }
    }

  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (EdgeId a : g.out_edges(v))
      for (EdgeId b : g.out_edges(v)) {
        const EdgeId k = g.compose_unchecked(g.inverse(a), b);
        const Element &s_elem = wg.delta(k);
        if (s_elem.length() != 1)
          continue;
        const Element &w = wg.delta(a);
        const Element ws = W.mult_generator(w, s_elem.word()[0]);
        const Element &found = wg.delta(b);
        const bool ok = ws.length() < w.length() ? (found == w || found == ws) : found == ws;
        if (!ok) {
          r.wg2prime = false;
          sink.add("WG2'", {name(a), name(b)}, ws.length() < w.length() ? set_string(w, ws) : to_string(ws),
                   to_string(found));
        }
      }

  for (EdgeId a = 0; a < g.edge_count(); ++a) {
    const Element &w = wg.delta(a);
    for (Generator s : W.right_descents(w)) {
      const Element ws = W.mult_generator(w, s);
      const Element gen = W.generator(s);
      bool found = false;
      for (EdgeId h : g.out_edges(g.source(a))) {
        if (wg.delta(h) == ws && wg.delta(g.compose_unchecked(g.inverse(h), a)) == gen) {
          found = true;
          break;
        }
      }
      if (!found) {
        r.wg3 = false;
        sink.add("WG3", {name(a), "s=" + std::to_string(s)}, "h with delta(h)=" + to_string(ws), "none");
      }
    }
  }

  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (Generator s = 0; s < W.rank(); ++s) {
      const Element gen = W.generator(s);
      const auto out = g.out_edges(v);
      if (std::none_of(out.begin(), out.end(), [&](EdgeId e) { return wg.delta(e) == gen; })) {
        r.weak = false;
        sink.add("weak", {g.vertex_name(v), "s=" + std::to_string(s)}, "edge of W-length " + to_string(gen),
                 "none");
      }
    }

  for (EdgeId a = 0; a < g.edge_count(); ++a)
    if (wg.delta(a) == one && !g.is_identity(a)) {
      r.strict = false;
      sink.add("strict", {name(a)}, "identity edge", "non-identity edge of W-length 1");
    }
  return r;
}

WGroupoid residue(const WGroupoid &wg, std::vector<Generator> subset, VertexId chamber) {
  const FiniteGroupoid &g = wg.groupoid();
  const CoxeterSystem &W = wg.system();
  if (chamber >= g.vertex_count())
    throw ValidationError("unknown chamber");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty())
    throw ValidationError("residue needs a nonempty generator set; use borel() for J = {}");
  for (Generator s : subset)
    if (s < 0 || s >= W.rank())
      throw ValidationError("unknown generator " + std::to_string(s));
  auto keep = [&](EdgeId e) { return W.in_parabolic(wg.delta(e), subset); };

  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{chamber};
  seen[chamber] = true;
  std::vector<VertexId> members;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    members.push_back(v);
    for (EdgeId e : g.out_edges(v))
      if (keep(e) && !seen[g.target(e)]) {
        seen[g.target(e)] = true;
        queue.push_back(g.target(e));
      }
  }
  std::sort(members.begin(), members.end());

  std::vector<EdgeId> parent;
  FiniteGroupoid sub = subgroupoid(g, members, keep, &parent);
  CoxeterSystem WJ = W.parabolic(subset);
  std::vector<Element> delta;
  delta.reserve(parent.size());
  for (EdgeId e : parent) {
    Word w = wg.delta(e).word();
    for (auto &letter : w)
      letter = static_cast<Generator>(std::lower_bound(subset.begin(), subset.end(), letter) - subset.begin());
    delta.push_back(WJ.canonicalize(w));
  }
  return WGroupoid(std::move(sub), std::move(WJ), std::move(delta));
}

WGroupoid panel(const WGroupoid &g, Generator s, VertexId chamber) { return residue(g, {s}, chamber); }

FiniteGroupoid borel(const WGroupoid &wg) {
  const FiniteGroupoid &g = wg.groupoid();
  std::vector<VertexId> all(g.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v)
    all[v] = v;
  return subgroupoid(g, all, [&](EdgeId e) { return wg.delta(e).is_identity(); });
}

namespace {

class GalleryEnumerator {
public:
  GalleryEnumerator(const WGroupoid &wg, const Word &type) : wg_(wg), type_(type) {
    for (Generator s : type) {
      if (s < 0 || s >= wg.system().rank())
        throw ValidationError("gallery type uses unknown generator " + std::to_string(s));
    }
    for (Generator s = 0; s < wg.system().rank(); ++s)
      gens_.push_back(wg.system().generator(s));
  }

  /// Factorizations of `rest` whose type is the suffix of type_ starting at k.
  const std::vector<std::vector<EdgeId>> &suffixes(std::size_t k, EdgeId rest) {
    auto key = std::make_pair(k, rest);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    const FiniteGroupoid &g = wg_.groupoid();
    std::vector<std::vector<EdgeId>> out;
    if (k == type_.size()) {
      if (g.is_identity(rest))
        out.emplace_back();
    } else {
      const Element &want = gens_[type_[k]];
      for (EdgeId e : g.out_edges(g.source(rest))) {
        if (wg_.delta(e) != want)
          continue;
        const EdgeId remaining = g.compose_unchecked(g.inverse(e), rest);
        for (const auto &tail : suffixes(k + 1, remaining)) {
          std::vector<EdgeId> steps{e};
          steps.insert(steps.end(), tail.begin(), tail.end());
          out.push_back(std::move(steps));
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

private:
  const WGroupoid &wg_;
  const Word &type_;
  std::vector<Element> gens_;
  std::map<std::pair<std::size_t, EdgeId>, std::vector<std::vector<EdgeId>>> memo_;
};

} // namespace

std::vector<Gallery> galleries(const WGroupoid &wg, EdgeId edge, const Word &type) {
  if (edge >= wg.edge_count())
    throw ValidationError("unknown edge");
  if (type.empty())
    return wg.groupoid().is_identity(edge) ? std::vector<Gallery>{Gallery{{}, {}}} : std::vector<Gallery>{};
  GalleryEnumerator en(wg, type);
  std::vector<Gallery> out;
  for (const auto &steps : en.suffixes(0, edge))
    out.push_back({steps, type});
  return out;
}

GeodesicReport geodesics(const WGroupoid &wg, EdgeId edge) {
  if (edge >= wg.edge_count())
    throw ValidationError("unknown edge");
  GeodesicReport report;
  report.edge = edge;
  if (wg.delta(edge).is_identity()) {
    if (wg.groupoid().is_identity(edge))
      report.geodesics.emplace(Word{}, Gallery{});
    return report;
  }
  for (const Word &f : wg.system().reduced_words(wg.delta(edge))) {
    auto found = galleries(wg, edge, f);
    if (found.size() != 1)
      report.violations.push_back({f, found.size()});
    if (!found.empty())
      report.geodesics.emplace(f, std::move(found.front()));
  }
  return report;
}

bool ConsequenceReport::all_hold() const {
  return std::all_of(lines.begin(), lines.end(), [](const Line &l) { return l.holds; });
}

const ConsequenceReport::Line &ConsequenceReport::line(std::string_view name) const {
  for (const auto &l : lines)
    if (l.name == name)
      return l;
  throw ValidationError("no consequence named " + std::string(name));
}

ConsequenceReport check_consequences(const WGroupoid &wg, const CheckOptions &options) {
  return check_consequences(wg, check_axioms(wg, options), options);
}

ConsequenceReport check_consequences(const WGroupoid &wg, const AxiomReport &ax, const CheckOptions &options) {
  const FiniteGroupoid &g = wg.groupoid();
  const CoxeterSystem &W = wg.system();
  const std::size_t limit = std::max<std::size_t>(1, options.max_witnesses);
  ConsequenceReport report;
  auto start = [&](std::string name, bool applicable) -> ConsequenceReport::Line & {
    report.lines.push_back({std::move(name), applicable, true, 0, {}});
    return report.lines.back();
  };
  auto fail = [&](ConsequenceReport::Line &line, std::vector<std::string> items, std::string expected,
                  std::string found) {
    line.holds = false;
    if (line.witnesses.size() < limit)
      line.witnesses.push_back({line.name, std::move(items), std::move(expected), std::move(found)});
  };
  const auto &name = [&](EdgeId e) -> const std::string & { return g.edge_name(e); };

  {
    auto &line = start("inverse of a generator edge", ax.wg1 && ax.wg2prime);
    if (line.applicable)
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (wg.delta(e).length() == 1) {
          ++line.checked;
          if (wg.delta(g.inverse(e)) != wg.delta(e))
            fail(line, {name(e)}, to_string(wg.delta(e)), to_string(wg.delta(g.inverse(e))));
        }
  }
  {
    auto &line = start("inverse law", (ax.wg1 && ax.wg2) || (ax.wg1 && ax.wg2prime && ax.wg3));
    if (line.applicable)
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        ++line.checked;
        const Element expected = W.inverse(wg.delta(e));
        if (wg.delta(g.inverse(e)) != expected)
          fail(line, {name(e)}, to_string(expected), to_string(wg.delta(g.inverse(e))));
      }
  }
  {
    auto &line = start("double coset", ax.wg1 && ax.wg2);
    if (line.applicable)
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (EdgeId a : g.out_edges(v))
          for (EdgeId b : g.out_edges(v))
            if (wg.delta(g.compose_unchecked(g.inverse(a), b)).is_identity()) {
              ++line.checked;
              if (wg.delta(a) != wg.delta(b))
                fail(line, {name(a), name(b)}, to_string(wg.delta(a)), to_string(wg.delta(b)));
            }
  }
  {
    auto &line = start("panel closure", ax.wg1 && ax.wg2);
    if (line.applicable)
      for (EdgeId a = 0; a < g.edge_count(); ++a) {
        if (wg.delta(a).length() != 1)
          continue;
        for (EdgeId b : g.out_edges(g.target(a))) {
          if (wg.delta(b).length() != 1)
            continue;
          ++line.checked;
          const Element &prod = wg.delta(g.compose_unchecked(a, b));
          if (wg.delta(a) == wg.delta(b)) {
            if (!prod.is_identity() && prod != wg.delta(a))
              fail(line, {name(a), name(b)}, set_string(W.identity(), wg.delta(a)), to_string(prod));
          } else {
            const Element st = W.mult(wg.delta(a), wg.delta(b));
            if (prod != st)
              fail(line, {name(a), name(b)}, to_string(st), to_string(prod));
          }
        }
      }
  }
  {
    auto &line = start("WG2 implies WG2'", ax.wg1 && ax.wg2);
    if (line.applicable) {
      line.checked = 1;
      if (!ax.wg2prime)
        fail(line, {}, "WG2' holds", "WG2' fails");
    }
  }
  {
    auto &line = start("WG1, WG2' and WG3 imply WG2", ax.wg1 && ax.wg2prime && ax.wg3);
    if (line.applicable) {
      line.checked = 1;
      if (!ax.wg2)
        fail(line, {}, "WG2 holds", "WG2 fails");
    }
  }
  {
    start("geodesic existence", ax.wg3);
    const std::size_t ei = report.lines.size() - 1;
    start("geodesic product law", ax.wg2prime && ax.wg3);
    const std::size_t pi = report.lines.size() - 1;
    start("geodesic uniqueness", ax.is_wgroupoid());
    const std::size_t ui = report.lines.size() - 1;
    auto &le = report.lines[ei];
    auto &lp = report.lines[pi];
    auto &lu = report.lines[ui];
    if (le.applicable || lp.applicable || lu.applicable)
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        // Galleries have at least one step, so edges of W-length 1 have none.
        if (wg.delta(e).is_identity())
          continue;
        const Element &w = wg.delta(e);
        for (const Word &f : W.reduced_words(w)) {
          auto found = galleries(wg, e, f);
          if (le.applicable) {
            ++le.checked;
            if (found.empty())
              fail(le, {name(e), to_string(f)}, "a geodesic", "none");
          }
          if (lu.applicable) {
            ++lu.checked;
            if (found.size() > 1)
              fail(lu, {name(e), to_string(f)}, "1 geodesic", std::to_string(found.size()) + " geodesics");
          }
          if (lp.applicable)
            for (const Gallery &gal : found) {
              ++lp.checked;
              EdgeId composed = gal.steps.front();
              Element prod = wg.delta(composed);
              for (std::size_t k = 1; k < gal.steps.size(); ++k) {
                composed = g.compose_unchecked(composed, gal.steps[k]);
                prod = W.mult(prod, wg.delta(gal.steps[k]));
              }
              if (composed != e || prod != w)
                fail(lp, {name(e), to_string(f)}, to_string(w), to_string(prod));
            }
        }
      }
  }
  return report;
}

} // namespace wg
