#include "mtc/perm_group.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mtc/error.hpp"

namespace mtc {

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Perm> generators) {
  for (const Perm& g : generators)
    if (g.degree() != degree) fail(errc::shape_error, "generator degree mismatch");
  std::set<Perm> closed;
  std::vector<Perm> frontier;
  const Perm e = Perm::identity(degree);
  closed.insert(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    const Perm x = frontier.back();
    frontier.pop_back();
    for (const Perm& g : generators) {
      Perm y = g * x;
      if (closed.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  PermGroup out;
  out.degree_ = degree;
  out.generators_ = std::move(generators);
  out.elements_.assign(closed.begin(), closed.end());
  return out;
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup out;
  out.degree_ = degree;
  out.generators_ = elements;
  out.elements_ = std::move(elements);
  // trust but verify closure: these come from stabilizer computations
  for (const Perm& a : out.elements_)
    if (!out.contains(a.inverse())) fail(errc::data_invalid, "element set not closed");
  return out;
}

PermGroup PermGroup::cyclic(std::size_t n) {
  std::vector<std::size_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return from_generators(n, {Perm(std::move(im))});
}

PermGroup PermGroup::symmetric(std::size_t n) {
  if (n <= 1) return from_generators(n, {});
  std::vector<std::size_t> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::vector<std::size_t> swp(n);
  for (std::size_t i = 0; i < n; ++i) swp[i] = i;
  std::swap(swp[0], swp[1]);
  return from_generators(n, {Perm(std::move(cyc)), Perm(std::move(swp))});
}

PermGroup PermGroup::quaternion() {
  // Elements 1, -1, i, -i, j, -j, k, -k numbered 0..7; left multiplication
  // by i and j gives the regular representation.
  static constexpr int mul[8][8] = {
      // 1   -1   i   -i   j   -j   k   -k
      {0, 1, 2, 3, 4, 5, 6, 7},  // 1
      {1, 0, 3, 2, 5, 4, 7, 6},  // -1
      {2, 3, 1, 0, 6, 7, 5, 4},  // i   (i*j = k, i*k = -j)
      {3, 2, 0, 1, 7, 6, 4, 5},  // -i
      {4, 5, 7, 6, 1, 0, 2, 3},  // j   (j*i = -k, j*k = i)
      {5, 4, 6, 7, 0, 1, 3, 2},  // -j
      {6, 7, 4, 5, 3, 2, 1, 0},  // k   (k*i = j, k*j = -i)
      {7, 6, 5, 4, 2, 3, 0, 1},  // -k
  };
  auto left_mul = [&](int g) {
    std::vector<std::size_t> im(8);
    for (int x = 0; x < 8; ++x) im[x] = static_cast<std::size_t>(mul[g][x]);
    return Perm(std::move(im));
  };
  return from_generators(8, {left_mul(2), left_mul(4)});
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroup::element_index(const Perm& p) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) fail(errc::data_invalid, "element not in group");
  return static_cast<std::size_t>(it - elements_.begin());
}

namespace {

std::vector<Perm> parse_generator_list(const std::string& body, std::size_t offset) {
  // One generator per ';', each a product of cycles "(0 1 2)(3 4)".
  std::vector<std::vector<Cycle>> gens_cycles;
  std::vector<Cycle> current;
  Cycle cyc;
  bool in_cycle = false;
  std::size_t max_point = 0;
  bool any_point = false;
  std::size_t i = 0;
  auto err = [&](const std::string& what) {
    fail(errc::parse_error,
         "group spec parse error at position " + std::to_string(offset + i) + ": " + what);
  };
  while (i < body.size()) {
    const char ch = body[i];
    if (ch == '(') {
      if (in_cycle) err("nested '('");
      in_cycle = true;
      cyc.clear();
      ++i;
    } else if (ch == ')') {
      if (!in_cycle) err("unmatched ')'");
      if (cyc.empty()) err("empty cycle");
      in_cycle = false;
      current.push_back(cyc);
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (!in_cycle) err("point outside cycle");
      std::size_t j = i;
      while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
      const std::size_t pt = std::stoul(body.substr(i, j - i));
      cyc.push_back(pt);
      max_point = std::max(max_point, pt);
      any_point = true;
      i = j;
    } else if (ch == ' ' || ch == ',') {
      ++i;
    } else if (ch == ';') {
      if (in_cycle) err("';' inside cycle");
      gens_cycles.push_back(current);
      current.clear();
      ++i;
    } else {
      err(std::string("unexpected character '") + ch + "'");
    }
  }
  if (in_cycle) err("unterminated cycle");
  if (!current.empty()) gens_cycles.push_back(current);
  if (!any_point) err("no generators given");
  const std::size_t degree = max_point + 1;
  std::vector<Perm> gens;
  for (const auto& cycles : gens_cycles) {
    for (const Cycle& c : cycles) {
      std::set<std::size_t> seen(c.begin(), c.end());
      if (seen.size() != c.size()) err("repeated point inside a generator");
    }
    gens.push_back(from_cycles(degree, cycles));
  }
  return gens;
}

std::size_t parse_group_size(const std::string& spec, std::size_t offset) {
  if (offset >= spec.size())
    fail(errc::parse_error,
         "group spec parse error at position " + std::to_string(offset) + ": missing size");
  for (std::size_t i = offset; i < spec.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(spec[i])))
      fail(errc::parse_error,
           "group spec parse error at position " + std::to_string(i) + ": expected a digit");
  return std::stoul(spec.substr(offset));
}

}  // namespace

PermGroup build_group(const std::string& spec) {
  if (spec == "quaternion") return PermGroup::quaternion();
  if (spec.rfind("cyclic:", 0) == 0) {
    const std::size_t n = parse_group_size(spec, 7);
    if (n == 0) fail(errc::parse_error, "group spec parse error at position 7: size must be >= 1");
    return PermGroup::cyclic(n);
  }
  if (spec.rfind("sym:", 0) == 0) {
    const std::size_t n = parse_group_size(spec, 4);
    if (n == 0) fail(errc::parse_error, "group spec parse error at position 4: size must be >= 1");
    return PermGroup::symmetric(n);
  }
  if (spec.rfind("gens:", 0) == 0) {
    std::vector<Perm> gens = parse_generator_list(spec.substr(5), 5);
    std::size_t degree = 0;
    for (const Perm& g : gens) degree = std::max(degree, g.degree());
    for (Perm& g : gens) {
      if (g.degree() < degree) {
        std::vector<std::size_t> im(g.images());
        for (std::size_t i = im.size(); i < degree; ++i) im.push_back(i);
        g = Perm(std::move(im));
      }
    }
    return PermGroup::from_generators(degree, std::move(gens));
  }
  fail(errc::parse_error,
       "group spec parse error at position 0: expected cyclic:<n>, sym:<n>, gens:<cycles> or "
       "quaternion");
}

PermGroup centralizer(const PermGroup& g, const Perm& p) {
  if (!g.contains(p)) fail(errc::data_invalid, "centralizer: element not in group");
  std::vector<Perm> elems;
  for (const Perm& h : g.elements())
    if (h * p == p * h) elems.push_back(h);
  return PermGroup::from_elements(g.degree(), std::move(elems));
}

std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup& g) {
  std::vector<bool> used(g.order(), false);
  std::vector<std::vector<Perm>> classes;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (used[i]) continue;
    const Perm& x = g.elements()[i];
    std::set<Perm> cls;
    for (const Perm& h : g.elements()) cls.insert(conjugate(h, x));
    for (const Perm& y : cls) used[g.element_index(y)] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  // identity class (a singleton) sorts first because the identity is the
  // minimum of S_n in image order only when degree order matches; make it
  // explicit instead of relying on that.
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].size() == 1 && classes[i][0].is_identity()) {
      std::swap(classes[0], classes[i]);
      break;
    }
  }
  return classes;
}

}  // namespace mtc
