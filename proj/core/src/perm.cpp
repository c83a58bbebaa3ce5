#include "mtc/perm.hpp"

#include <algorithm>
#include <sstream>

#include "mtc/error.hpp"

namespace mtc {

Perm::Perm(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || hit[v]) fail(errc::data_invalid, "image list is not a bijection");
    hit[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<std::size_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = i;
  return Perm(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<std::size_t> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = i;
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) fail(errc::shape_error, "permutation degree mismatch");
  std::vector<std::size_t> im(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) im[i] = a(b(i));
  return Perm(std::move(im));
}

std::vector<Cycle> cycle_decompose(const Perm& p) {
  const std::size_t n = p.degree();
  std::vector<bool> used(n, false);
  std::vector<Cycle> cycles;
  for (std::size_t start = 0; start < n; ++start) {
    if (used[start]) continue;
    Cycle c;
    std::size_t x = start;
    do {
      c.push_back(x);
      used[x] = true;
      x = p(x);
    } while (x != start);
    cycles.push_back(std::move(c));
  }
  // starts are already the cycle minima and appear in increasing order
  return cycles;
}

Perm from_cycles(std::size_t degree, const std::vector<Cycle>& cycles) {
  std::vector<std::size_t> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = i;
  for (const Cycle& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) fail(errc::data_invalid, "cycle entry exceeds degree");
      im[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(im));
}

Perm conjugate(const Perm& h, const Perm& p) {
  if (h.degree() != p.degree()) fail(errc::shape_error, "permutation degree mismatch");
  return h * p * h.inverse();
}

std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<std::size_t> lengths;
  for (const Cycle& c : cycle_decompose(p)) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string cycle_string(const Perm& p) {
  std::ostringstream os;
  for (const Cycle& c : cycle_decompose(p)) {
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ")";
  }
  return os.str();
}

}  // namespace mtc
