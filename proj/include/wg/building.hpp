#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wg/coxeter.hpp"
#include "wg/error.hpp"
#include "wg/wmetric.hpp"

namespace wg {

/// A set of chambers with a W-valued distance, stored densely.
class Building {
public:
  /// `dist` is row-major: dist[c * n + d] = W-distance from c to d.
  Building(CoxeterSystem system, std::vector<std::string> chambers, std::vector<Element> dist, bool partial = false);

  const CoxeterSystem &system() const { return system_; }
  std::size_t size() const { return names_.size(); }
  const Element &dist(std::size_t c, std::size_t d) const { return dist_[c * names_.size() + d]; }
  const std::string &name(std::size_t c) const { return names_[c]; }
  const std::vector<std::string> &chambers() const { return names_; }
  std::optional<std::size_t> find(const std::string &name) const;
  std::size_t chamber(const std::string &name) const;

  /// True when only a ball of the thin building was materialized; the
  /// building axioms are then only meaningful inside the ball.
  bool partial() const { return partial_; }

  /// Human-readable meaning of each generator (e.g. "moves the line").
  const std::vector<std::string> &generator_meaning() const { return meaning_; }
  void set_generator_meaning(std::vector<std::string> meaning) { meaning_ = std::move(meaning); }

  Building with_dist(std::size_t c, std::size_t d, const Element &value) const;

private:
  CoxeterSystem system_;
  std::vector<std::string> names_;
  std::vector<Element> dist_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> meaning_;
  bool partial_ = false;
};

struct BuildingReport {
  bool wd1 = true;
  bool wd2 = true;
  bool wd3 = true;
  std::vector<Witness> witnesses;

  bool ok() const { return wd1 && wd2 && wd3; }
};

BuildingReport check_building(const Building &b, const CheckOptions &options = {});

/// Number of chambers at each W-distance from `chamber`.
std::map<Element, std::size_t> sphere_census(const Building &b, std::size_t chamber);

/// W with dist(u, v) = u^-1 v; chamber names are the canonical words. With
/// `max_length` only the ball of that radius is built (marked partial when
/// it is not all of W). Without it, W must be finite.
Building thin_building(const CoxeterSystem &system, std::optional<int> max_length = std::nullopt);

/// Point-line incidence structure; a flag is an incident (point, line) pair.
struct IncidenceGeometry {
  std::vector<std::string> points;
  std::vector<std::string> lines;
  std::vector<std::pair<std::string, std::string>> flags;
};

struct PolygonShape {
  int girth = 0; // 0 when the incidence graph is a forest
  int diameter = 0;
  bool connected = true;
};

/// Girth and diameter of the bipartite incidence graph.
PolygonShape incidence_shape(const IncidenceGeometry &geom);

class NotAPolygonError : public ValidationError {
public:
  NotAPolygonError(PolygonShape shape, const std::string &message) : ValidationError(message), shape_(shape) {}
  const PolygonShape &shape() const { return shape_; }

private:
  PolygonShape shape_;
};

/// Flag name "point/line".
std::string flag_name(const std::string &point, const std::string &line);

/// The I2(m) building of flags of a generalized m-gon. Generator 0 keeps
/// the point and changes the line; generator 1 keeps the line and changes
/// the point. Throws NotAPolygonError unless girth = 2 * diameter.
Building rank2_building(const IncidenceGeometry &geom);

/// Projective plane of a planar difference set D mod n: points "0".."n-1",
/// lines "L0".."L{n-1}", with L_i = {i + d : d in D}.
IncidenceGeometry difference_set_plane(const std::vector<int> &residues, int modulus);

/// The pair groupoid of the chambers with delta(C -> D) = dist(C, D).
WGroupoid building_to_wgroupoid(const Building &b);

/// Inverse of building_to_wgroupoid; requires a connected, simply
/// connected, strict W-groupoid and throws HypothesisError naming the first
/// missing hypothesis.
Building wgroupoid_to_building(const WGroupoid &g);

} // namespace wg
