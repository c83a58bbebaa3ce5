#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "mtc/error.hpp"
#include "mtc/perm.hpp"

namespace mtc {

// Finite permutation group stored by full element enumeration; orders in
// scope are small enough that exhaustive closure beats anything cleverer.
class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup from_generators(std::size_t degree, std::vector<Perm> generators);
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements);
  static PermGroup cyclic(std::size_t n);
  static PermGroup symmetric(std::size_t n);
  // H8 as its degree-8 regular permutation representation.
  static PermGroup quaternion();

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }  // sorted
  const std::vector<Perm>& generators() const { return generators_; }
  bool contains(const Perm& p) const;
  std::size_t element_index(const Perm& p) const;  // throws data_invalid if absent

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
};

// Mini-language: `cyclic:n`, `sym:n`, `quaternion`,
// `gens:(0 1 2)(3 4);(0 1)`. Parse failures carry the offending position.
PermGroup build_group(const std::string& spec);

// Subgroup {h in G : h p = p h}. Throws data_invalid if p is not in G.
PermGroup centralizer(const PermGroup& g, const Perm& p);

// Partition of G into conjugacy classes; the class of the identity comes
// first, remaining classes ordered by their minimal element.
std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup& g);

template <class Point>
struct Orbit {
  Point representative;
  std::vector<Point> points;
  std::size_t stabilizer_order = 0;
};

// Orbits of a G-action on an explicit point list. The action axioms
// act(e,x) = x and act(gh,x) = act(g, act(h,x)) are spot-checked on the
// inputs; violations raise invalid_action. Orbit-stabilizer is enforced.
template <class Point, class Act>
std::vector<Orbit<Point>> orbits(const PermGroup& g, const std::vector<Point>& points, Act act) {
  const Perm e = Perm::identity(g.degree());
  std::size_t samples = 0;
  for (const auto& x : points) {
    if (!(act(e, x) == x)) fail(errc::invalid_action, "action does not fix points under identity");
    for (const auto& h1 : g.elements()) {
      for (const auto& h2 : g.elements()) {
        if (samples >= 64) break;
        if (!(act(h1 * h2, x) == act(h1, act(h2, x))))
          fail(errc::invalid_action, "action is not compatible with the group product");
        ++samples;
      }
      if (samples >= 64) break;
    }
    if (samples >= 64) break;
  }

  std::vector<Orbit<Point>> out;
  std::vector<Point> seen;
  auto known = [&](const Point& x) {
    return std::find(seen.begin(), seen.end(), x) != seen.end();
  };
  for (const auto& x : points) {
    if (known(x)) continue;
    Orbit<Point> orb;
    std::size_t stab = 0;
    for (const auto& h : g.elements()) {
      Point y = act(h, x);
      if (y == x) ++stab;
      if (std::find(orb.points.begin(), orb.points.end(), y) == orb.points.end())
        orb.points.push_back(y);
    }
    orb.representative = x;
    orb.stabilizer_order = stab;
    if (orb.points.size() * stab != g.order())
      fail(errc::inconsistency, "orbit-stabilizer identity violated");
    seen.insert(seen.end(), orb.points.begin(), orb.points.end());
    out.push_back(std::move(orb));
  }
  return out;
}

}  // namespace mtc
