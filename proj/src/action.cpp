#include "wg/action.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "wg/config.hpp"

namespace wg {

const char *to_string(ActionFault fault) {
  switch (fault) {
  case ActionFault::size_mismatch:
    return "size mismatch";
  case ActionFault::not_a_permutation:
    return "not a permutation";
  case ActionFault::identity_law:
    return "identity law";
  case ActionFault::compatibility:
    return "compatibility";
  case ActionFault::not_type_preserving:
    return "not type-preserving";
  }
  return "unknown";
}

ActionError::ActionError(ActionFault fault, const std::string &message, std::vector<std::string> witnesses)
    : ValidationError(std::string(to_string(fault)) + ": " + message), fault_(fault),
      witnesses_(std::move(witnesses)) {}

ChamberAction ChamberAction::make_trusted(std::shared_ptr<const Building> building, FiniteGroup group,
                                          std::vector<ChamberPermutation> perms) {
  const std::size_t n = building->size();
  if (perms.size() != group.order())
    throw ActionError(ActionFault::size_mismatch, std::to_string(perms.size()) + " permutations for a group of order " +
                                                      std::to_string(group.order()));
  for (GroupElement g = 0; g < perms.size(); ++g) {
    if (perms[g].size() != n)
      throw ActionError(ActionFault::size_mismatch,
                        "permutation of " + group.label(g) + " has " + std::to_string(perms[g].size()) + " entries",
                        {group.label(g)});
    std::vector<bool> hit(n, false);
    for (auto c : perms[g]) {
      if (c >= n || hit[c])
        throw ActionError(ActionFault::not_a_permutation, group.label(g) + " does not permute the chambers",
                          {group.label(g)});
      hit[c] = true;
    }
  }
  ChamberAction a;
  a.building_ = std::move(building);
  a.group_ = std::move(group);
  a.perms_ = std::move(perms);
  return a;
}

ChamberAction ChamberAction::make(std::shared_ptr<const Building> building, FiniteGroup group,
                                  std::vector<ChamberPermutation> perms) {
  auto a = make_trusted(std::move(building), std::move(group), std::move(perms));
  const auto &b = *a.building_;
  const auto &grp = a.group_;
  const std::size_t n = b.size();
  const auto &one = a.perms_[grp.identity()];
  for (std::uint32_t c = 0; c < n; ++c)
    if (one[c] != c)
      throw ActionError(ActionFault::identity_law, "identity moves " + b.name(c), {b.name(c)});
  for (GroupElement g = 0; g < grp.order(); ++g)
    for (GroupElement h = 0; h < grp.order(); ++h) {
      const auto &gh = a.perms_[grp.mul(g, h)];
      for (std::uint32_t c = 0; c < n; ++c)
        if (gh[c] != a.perms_[g][a.perms_[h][c]])
          throw ActionError(ActionFault::compatibility,
                            "(" + grp.label(g) + " " + grp.label(h) + ") . " + b.name(c) + " != " + grp.label(g) +
                                " . (" + grp.label(h) + " . " + b.name(c) + ")",
                            {grp.label(g), grp.label(h), b.name(c)});
    }
  for (GroupElement g = 0; g < grp.order(); ++g) {
    const auto &p = a.perms_[g];
    for (std::uint32_t c = 0; c < n; ++c)
      for (std::uint32_t d = 0; d < n; ++d)
        if (b.dist(p[c], p[d]) != b.dist(c, d))
          throw ActionError(ActionFault::not_type_preserving,
                            grp.label(g) + " changes the distance from " + b.name(c) + " to " + b.name(d),
                            {grp.label(g), b.name(c), b.name(d)});
  }
  return a;
}

ChamberAction singer_action(std::shared_ptr<const Building> plane, int modulus) {
  const auto &b = *plane;
  std::vector<std::pair<int, int>> flags; // (point, line index)
  for (const auto &name : b.chambers()) {
    const auto slash = name.find("/L");
    if (slash == std::string::npos)
      throw ValidationError("chamber '" + name + "' is not a difference-set flag");
    flags.emplace_back(std::stoi(name.substr(0, slash)), std::stoi(name.substr(slash + 2)));
  }
  auto group = FiniteGroup::cyclic(static_cast<std::size_t>(modulus));
  std::vector<ChamberPermutation> perms(modulus, ChamberPermutation(b.size()));
  for (int t = 0; t < modulus; ++t) {
    const auto g = *group.find(std::to_string(t));
    for (std::uint32_t c = 0; c < b.size(); ++c) {
      const auto [p, l] = flags[c];
      perms[g][c] = static_cast<std::uint32_t>(
          b.chamber(flag_name(std::to_string((p + t) % modulus), "L" + std::to_string((l + t) % modulus))));
    }
  }
  return ChamberAction::make_trusted(std::move(plane), std::move(group), std::move(perms));
}

ChamberAction regular_action(std::shared_ptr<const Building> thin) {
  const auto &b = *thin;
  if (b.partial())
    throw ValidationError("regular action needs the whole thin building");
  const auto &sys = b.system();
  std::vector<Element> elems;
  std::unordered_map<Element, std::uint32_t> index;
  for (std::uint32_t c = 0; c < b.size(); ++c) {
    elems.push_back(sys.canonicalize(parse_word(b.name(c))));
    index.emplace(elems.back(), c);
  }
  const std::size_t n = elems.size();
  if (n * n > table_budget())
    throw CapacityError("regular action table exceeds the table budget");
  std::vector<GroupElement> table(n * n);
  std::vector<ChamberPermutation> perms(n, ChamberPermutation(n));
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t c = 0; c < n; ++c) {
      const auto it = index.find(sys.mult(elems[g], elems[c]));
      if (it == index.end())
        throw ValidationError("thin building is not closed under multiplication");
      table[static_cast<std::size_t>(g) * n + c] = it->second;
      perms[g][c] = it->second;
    }
  auto group = FiniteGroup::from_table(b.chambers(), std::move(table));
  return ChamberAction::make_trusted(std::move(thin), std::move(group), std::move(perms));
}

namespace {

std::string padded(char prefix, std::size_t i) {
  std::string digits = std::to_string(i);
  if (digits.size() < 2)
    digits = "0" + digits;
  return prefix + digits;
}

int dot(const std::vector<int> &a, const std::vector<int> &b, int q) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s % q;
}

// Nonzero vectors of F_q^3 scaled so that the chosen pivot is 1.
std::vector<std::vector<int>> projective_points(int q, bool last_pivot) {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        std::vector<int> v{a, b, c};
        if (a == 0 && b == 0 && c == 0)
          continue;
        int pivot = last_pivot ? (c ? 2 : b ? 1 : 0) : (a ? 0 : b ? 1 : 2);
        if (v[pivot] == 1)
          out.push_back(v);
      }
  auto key = [&](const std::vector<int> &v) {
    const int pivot = last_pivot ? (v[2] ? 2 : v[1] ? 1 : 0) : (v[0] ? 0 : v[1] ? 1 : 2);
    return std::make_pair(last_pivot ? pivot : -pivot, v);
  };
  std::sort(out.begin(), out.end(), [&](const auto &x, const auto &y) { return key(x) < key(y); });
  return out;
}

std::vector<int> normalize_point(std::vector<int> v, int q) {
  int pivot = v[2] ? 2 : v[1] ? 1 : 0;
  const int inv = mod_inverse(v[pivot], q);
  for (auto &x : v)
    x = x * inv % q;
  return v;
}

} // namespace

GLBuilding gl_building(int n, int q) {
  if (n != 3)
    throw ValidationError("flag buildings are implemented for n = 3 only");
  auto gl = std::make_shared<const GeneralLinearGroup>(general_linear_group(3, q));
  GLBuilding out;
  out.q = q;
  out.gl = gl;
  // Points: last nonzero coordinate 1, <e1> first. Lines: kernels of
  // functionals with first nonzero coordinate 1, x3 = 0 first.
  out.point_vectors = projective_points(q, true);
  const auto functionals = projective_points(q, false);
  std::map<std::vector<int>, std::size_t> point_index;
  for (std::size_t i = 0; i < out.point_vectors.size(); ++i) {
    point_index[out.point_vectors[i]] = i;
    out.geometry.points.push_back(padded('P', i));
  }
  std::vector<std::vector<std::size_t>> line_points(functionals.size());
  std::map<std::vector<std::size_t>, std::size_t> line_index;
  for (std::size_t l = 0; l < functionals.size(); ++l) {
    out.geometry.lines.push_back(padded('L', l));
    for (std::size_t p = 0; p < out.point_vectors.size(); ++p)
      if (dot(functionals[l], out.point_vectors[p], q) == 0)
        line_points[l].push_back(p);
    line_index[line_points[l]] = l;
  }
  std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> flag_index;
  for (std::size_t p = 0; p < out.point_vectors.size(); ++p)
    for (std::size_t l = 0; l < functionals.size(); ++l)
      if (std::binary_search(line_points[l].begin(), line_points[l].end(), p)) {
        flag_index[{p, l}] = static_cast<std::uint32_t>(out.geometry.flags.size());
        out.geometry.flags.emplace_back(out.geometry.points[p], out.geometry.lines[l]);
      }
  auto building = std::make_shared<const Building>(rank2_building(out.geometry));
  out.standard_chamber = static_cast<std::uint32_t>(building->chamber(flag_name("P00", "L00")));

  const std::size_t order = gl->matrices.size();
  if (order * building->size() > table_budget())
    throw CapacityError("GL(3," + std::to_string(q) + ") action table exceeds the table budget");
  std::vector<ChamberPermutation> perms(order, ChamberPermutation(building->size()));
  std::vector<std::size_t> ppoint(out.point_vectors.size());
  for (std::size_t g = 0; g < order; ++g) {
    const auto &m = gl->matrices[g];
    for (std::size_t p = 0; p < out.point_vectors.size(); ++p)
      ppoint[p] = point_index.at(normalize_point(apply(m, out.point_vectors[p], q), q));
    for (const auto &[flag, c] : flag_index) {
      std::vector<std::size_t> image;
      for (auto p : line_points[flag.second])
        image.push_back(ppoint[p]);
      std::sort(image.begin(), image.end());
      perms[g][c] = flag_index.at({ppoint[flag.first], line_index.at(image)});
    }
  }
  out.action = std::make_shared<const ChamberAction>(ChamberAction::make_trusted(building, gl->group, std::move(perms)));
  out.building = std::move(building);
  return out;
}

} // namespace wg
