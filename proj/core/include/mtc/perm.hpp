#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace mtc {

// Permutation of {0..n-1}, stored as the image list.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::size_t> images);  // throws data_invalid if not a bijection

  static Perm identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t x) const { return images_[x]; }
  const std::vector<std::size_t>& images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;

  // (a * b)(x) = a(b(x))
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<std::size_t> images_;
};

using Cycle = std::vector<std::size_t>;

// Canonical cycle decomposition: each cycle starts at its minimum element,
// cycles sorted by their minima, fixed points kept as 1-cycles.
std::vector<Cycle> cycle_decompose(const Perm& p);

Perm from_cycles(std::size_t degree, const std::vector<Cycle>& cycles);

// h p h^{-1}. Throws shape_error on degree mismatch.
Perm conjugate(const Perm& h, const Perm& p);

// Sorted cycle lengths, fixed points included.
std::vector<std::size_t> cycle_type(const Perm& p);

// "(0 1 2)(3)" style, canonical order.
std::string cycle_string(const Perm& p);

}  // namespace mtc
