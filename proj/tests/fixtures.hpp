#pragma once

// Shared corpus objects, built once per process.

#include <memory>

#include "wg/action.hpp"
#include "wg/building.hpp"
#include "wg/quotient.hpp"

namespace fixture {

inline wg::IncidenceGeometry fano_geometry() { return wg::difference_set_plane({0, 1, 3}, 7); }

inline std::shared_ptr<const wg::Building> fano() {
  static const auto b = std::make_shared<const wg::Building>(wg::rank2_building(fano_geometry()));
  return b;
}

inline std::shared_ptr<const wg::Building> pg23() {
  static const auto b = std::make_shared<const wg::Building>(wg::rank2_building(wg::difference_set_plane({0, 1, 3, 9}, 13)));
  return b;
}

inline std::shared_ptr<const wg::ChamberAction> singer() {
  static const auto a = std::make_shared<const wg::ChamberAction>(wg::singer_action(fano(), 7));
  return a;
}

inline const wg::QuotientWGroupoid &singer_quotient() {
  static const auto q = wg::quotient(singer());
  return q;
}

inline const wg::GLBuilding &gl32() {
  static const auto g = wg::gl_building(3, 2);
  return g;
}

inline const wg::QuotientWGroupoid &gl_quotient() {
  static const auto q = wg::quotient(gl32().action);
  return q;
}

inline std::shared_ptr<const wg::WGroupoid> fano_wgroupoid() {
  static const auto g = std::make_shared<const wg::WGroupoid>(wg::building_to_wgroupoid(*fano()));
  return g;
}

} // namespace fixture
