#include "mtc/fixedpoint.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"
#include "mtc/error.hpp"

namespace mtc {

namespace {

constexpr double kCharTol = 1e-6;

bool rows_equal(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kCharTol) return false;
  return true;
}

std::size_t match_row(const CharacterTable& table, const std::vector<Complex>& values,
                      const std::string& what) {
  for (std::size_t i = 0; i < table.num_classes(); ++i)
    if (rows_equal(table.chi[i], values)) return i;
  fail(errc::inconsistency, what + " does not match any irreducible character");
}

// row index of chi_a * chi_b when one factor is one-dimensional
std::size_t product_row(const CharacterTable& table, std::size_t a, std::size_t b) {
  std::vector<Complex> prod(table.num_classes());
  for (std::size_t c = 0; c < table.num_classes(); ++c)
    prod[c] = table.chi[a][c] * table.chi[b][c];
  return match_row(table, prod, "character product");
}

std::size_t identity_index(const ResolutionInput& inp) {
  for (std::size_t e = 0; e < inp.q.size(); ++e) {
    bool is_id = true;
    for (std::size_t x = 0; x < inp.q.size() && is_id; ++x)
      is_id = inp.compose[e][x] == x && inp.compose[x][e] == x;
    if (is_id) return e;
  }
  fail(errc::inconsistency, "Q composition table has no identity element");
}

void check_input(const ResolutionInput& inp) {
  const std::size_t k = inp.table.num_classes();
  const std::size_t q = inp.q.size();
  if (inp.sigma >= k) fail(errc::shape_error, "sigma index out of range");
  if (q == 0) fail(errc::inconsistency, "Q must contain at least the identity");
  if (inp.compose.size() != q)
    fail(errc::shape_error, "Q composition table size does not match the element list");
  for (const auto& row : inp.compose) {
    if (row.size() != q)
      fail(errc::shape_error, "Q composition table size does not match the element list");
    for (std::size_t v : row)
      if (v >= q) fail(errc::schema_error, "Q composition table entry out of range");
  }
  for (const QElement& e : inp.q) {
    if (e.action.size() != k) fail(errc::shape_error, "action permutation has wrong length");
    std::vector<bool> hit(k, false);
    for (std::size_t v : e.action) {
      if (v >= k || hit[v]) fail(errc::schema_error, "action is not a permutation of characters");
      hit[v] = true;
    }
    if (e.twist >= k) fail(errc::shape_error, "twist index out of range");
    if (inp.table.dims[e.twist] != 1)
      fail(errc::inconsistency, "twist character must be one-dimensional");
    for (std::size_t c = 0; c < k; ++c)
      if (inp.table.dims[e.action[c]] != inp.table.dims[c])
        fail(errc::inconsistency, "action does not preserve character dimensions");
  }
  identity_index(inp);
  // homomorphic-in-h invariants on every product (Q is tiny in scope):
  // action_{xy} = action_x . action_y and twist_{xy} = twist_x twist_y
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t y = 0; y < q; ++y) {
      const std::size_t xy = inp.compose[x][y];
      for (std::size_t c = 0; c < k; ++c)
        if (inp.q[xy].action[c] != inp.q[x].action[inp.q[y].action[c]])
          fail(errc::inconsistency, "action is not homomorphic on Q products");
      if (inp.q[xy].twist != product_row(inp.table, inp.q[x].twist, inp.q[y].twist))
        fail(errc::inconsistency, "twist is not homomorphic on Q products");
    }
  }
}

}  // namespace

std::vector<std::size_t> fixed_set(const ResolutionInput& inp) {
  check_input(inp);
  std::vector<std::size_t> fixed;
  for (std::size_t h = 0; h < inp.q.size(); ++h) {
    const std::size_t lhs = inp.q[h].action[inp.sigma];
    const std::size_t rhs = product_row(inp.table, inp.sigma, inp.q[h].twist);
    if (lhs == rhs) fixed.push_back(h);
  }
  for (std::size_t x : fixed)
    for (std::size_t y : fixed) {
      const std::size_t xy = inp.compose[x][y];
      bool inside = false;
      for (std::size_t z : fixed) inside = inside || z == xy;
      if (!inside) fail(errc::inconsistency, "fixed set is not closed under the Q product");
    }
  return fixed;
}

std::size_t resolution_count(const ResolutionInput& inp) {
  const std::vector<std::size_t> fixed = fixed_set(inp);
  const std::size_t order = fixed.size();
  const std::size_t e = identity_index(inp);
  // cyclic iff some element's powers run through the whole fixed set
  for (std::size_t x : fixed) {
    std::size_t cur = x;
    std::size_t element_order = 1;
    while (cur != e && element_order <= inp.q.size()) {
      cur = inp.compose[cur][x];
      ++element_order;
    }
    if (element_order == order) return order;
  }
  fail(errc::unsupported,
       "fixed set is not cyclic; the resolution count requires cocycle data not derivable here");
}

std::vector<H8Row> h8_example(std::int64_t k1) {
  if (k1 < 1) fail(errc::usage, "h8 example requires k1 >= 1");
  const PermGroup z4 = PermGroup::cyclic(4);
  const CharacterTable table = character_table(z4);

  // identify rows by exponent: chi_e(g^j) = i^{e j}, classes are singletons
  const Perm gen = z4.generators()[0];
  std::vector<std::size_t> power_of_class(4);
  for (std::size_t c = 0; c < 4; ++c) {
    Perm x = Perm::identity(4);
    std::size_t j = 0;
    while (!(x == table.class_reps[c])) {
      x = gen * x;
      ++j;
    }
    power_of_class[c] = j;
  }
  auto row_of_exponent = [&](int e) {
    std::vector<Complex> vals(4);
    for (std::size_t c = 0; c < 4; ++c) {
      const double ang = 2.0 * std::numbers::pi *
                         static_cast<double>(((e % 4 + 4) % 4) * power_of_class[c]) / 4.0;
      vals[c] = std::polar(1.0, ang);
    }
    return match_row(table, vals, "Z4 exponent character");
  };

  ResolutionInput inp;
  inp.gc = z4;
  inp.table = table;
  QElement identity;
  identity.action.resize(4);
  for (std::size_t c = 0; c < 4; ++c) identity.action[c] = c;
  identity.twist = row_of_exponent(0);
  QElement flip;
  flip.action.resize(4);
  for (int e : {0, 1, 2, 3}) flip.action[row_of_exponent(e)] = row_of_exponent(-e);
  flip.twist = row_of_exponent(static_cast<int>((2 * k1) % 4));
  inp.q = {identity, flip};
  inp.compose = {{0, 1}, {1, 0}};

  std::vector<H8Row> rows;
  for (int e : {0, +1, -1, 2}) {
    inp.sigma = row_of_exponent(e);
    rows.push_back({e, resolution_count(inp)});
  }
  return rows;
}

ResolutionInput parse_resolution_input(std::string_view text, std::uint64_t seed) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, "JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("group") || !doc.contains("sigma") ||
      !doc.contains("elements"))
    fail(errc::schema_error, "resolution input requires fields 'group', 'sigma', 'elements'");

  ResolutionInput inp;
  if (!doc["group"].is_string()) fail(errc::schema_error, "field 'group' must be a spec string");
  inp.gc = build_group(doc["group"].get<std::string>());
  inp.table = character_table(inp.gc, seed);
  const std::size_t k = inp.table.num_classes();

  auto parse_values = [&](const json& arr, const std::string& field) {
    if (!arr.is_array() || arr.size() != k)
      fail(errc::schema_error,
           "field '" + field + "' must list one [re, im] value per conjugacy class");
    std::vector<Complex> vals(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& e = arr[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        fail(errc::schema_error, "field '" + field + "' entries must be [re, im] pairs");
      vals[i] = Complex{e[0].get<double>(), e[1].get<double>()};
    }
    return vals;
  };

  inp.sigma = match_row(inp.table, parse_values(doc["sigma"], "sigma"), "sigma");

  if (!doc["elements"].is_array() || doc["elements"].empty())
    fail(errc::schema_error, "field 'elements' must be a non-empty array");
  for (const auto& el : doc["elements"]) {
    if (!el.is_object() || !el.contains("action") || !el.contains("twist"))
      fail(errc::schema_error, "each Q element needs 'action' and 'twist'");
    QElement q;
    const auto& act = el["action"];
    if (!act.is_array() || act.size() != k)
      fail(errc::schema_error, "field 'action' must be a permutation of character indices");
    for (const auto& v : act) {
      if (!v.is_number_unsigned() && !v.is_number_integer())
        fail(errc::schema_error, "field 'action' must contain indices");
      q.action.push_back(v.get<std::size_t>());
    }
    q.twist = match_row(inp.table, parse_values(el["twist"], "twist"), "twist");
    inp.q.push_back(std::move(q));
  }

  const std::size_t qn = inp.q.size();
  if (doc.contains("compose")) {
    const auto& comp = doc["compose"];
    if (!comp.is_array() || comp.size() != qn)
      fail(errc::schema_error, "field 'compose' must be a |Q| x |Q| index table");
    for (const auto& row : comp) {
      if (!row.is_array() || row.size() != qn)
        fail(errc::schema_error, "field 'compose' must be a |Q| x |Q| index table");
      std::vector<std::size_t> r;
      for (const auto& v : row) r.push_back(v.get<std::size_t>());
      inp.compose.push_back(std::move(r));
    }
  } else {
    // derive composition assuming distinct (action, twist) pairs
    auto find_pair = [&](const std::vector<std::size_t>& action, std::size_t twist) {
      for (std::size_t i = 0; i < qn; ++i)
        if (inp.q[i].action == action && inp.q[i].twist == twist) return i;
      fail(errc::inconsistency, "Q is not closed under composition of action and twist");
    };
    inp.compose.assign(qn, std::vector<std::size_t>(qn, 0));
    for (std::size_t x = 0; x < qn; ++x) {
      for (std::size_t y = 0; y < qn; ++y) {
        std::vector<std::size_t> action(k);
        for (std::size_t c = 0; c < k; ++c) action[c] = inp.q[x].action[inp.q[y].action[c]];
        inp.compose[x][y] = find_pair(action, product_row(inp.table, inp.q[x].twist, inp.q[y].twist));
      }
    }
  }
  return inp;
}

}  // namespace mtc
