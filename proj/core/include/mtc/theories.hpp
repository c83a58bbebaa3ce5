#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mtc/modular_data.hpp"

namespace mtc {

// Where a theory comes from: a `builtin:` URI or a file path.
struct TheorySpec {
  enum class Kind { builtin, file };
  Kind kind = Kind::builtin;
  std::string builtin_name;  // one of su2, ising, trivial
  std::int64_t level = 0;    // su2 only
  std::string path;
};

// Accepts `builtin:ising`, `builtin:trivial`, `builtin:su2?k=3`, or a path.
TheorySpec parse_theory_spec(const std::string& text);

ModularData load_theory(const TheorySpec& spec, std::vector<std::string>* warnings = nullptr);

// SU(2) level-k WZW data: S_{jl} = sqrt(2/(k+2)) sin(pi (j+1)(l+1) / (k+2)),
// Delta_j = j(j+2)/(4(k+2)), c = 3k/(k+2), labels j = 0..k.
ModularData builtin_su2(std::int64_t k);
// Labels (1, psi, sigma), Delta = (0, 1/2, 1/16), c = 1/2.
ModularData builtin_ising();
// One label, S = [1].
ModularData builtin_trivial();

// Strict parser for the on-disk theory document. Weight integer parts are
// discarded mod 1 with a warning appended to `warnings`. Does not validate
// the modular axioms; that is a separate explicit step.
ModularData parse_theory(std::string_view text, std::vector<std::string>* warnings = nullptr);

// Deterministic serialization: fixed key order, floats at 17 significant
// digits, byte-identical across runs.
std::string serialize_theory(const ModularData& md);

}  // namespace mtc
