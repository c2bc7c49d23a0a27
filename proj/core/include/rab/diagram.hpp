#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rab {

// Errors raised by malformed configurations (bad thickness, non-bijective
// tables, mismatched buildings). The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Errors raised by misuse of otherwise valid objects (mixing buildings,
// evaluating a broken element, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The three generators, in the fixed total order i < j < k.
enum class Gen : int { i = 0, j = 1, k = 2 };

constexpr std::array<Gen, 3> kGens{Gen::i, Gen::j, Gen::k};

inline int index(Gen g) { return static_cast<int>(g); }

const char* name(Gen g);
std::optional<Gen> gen_from_name(std::string_view s);

// Right-angled Coxeter diagram on {i, j, k}: m_ij = 2, m_ik = m_jk = infinity.
// Kept as a type (rather than constants) so the generator set and commutation
// relation stay behind one interface.
class Diagram {
 public:
  static constexpr int rank = 3;
  bool commutes(Gen a, Gen b) const {
    return (a == Gen::i && b == Gen::j) || (a == Gen::j && b == Gen::i);
  }
  bool operator==(const Diagram&) const = default;
};

// Chambers per panel, by generator type. Finite and at least 3, no override.
class Thickness {
 public:
  Thickness(int qi, int qj, int qk);
  int q(Gen g) const { return q_[index(g)]; }
  bool operator==(const Thickness&) const = default;

 private:
  std::array<int, 3> q_;
};

// A semiregular right-angled building of this diagram type: the diagram, the
// thickness vector, and the colour alphabets X_g = {0, ..., q_g - 1}.
struct BuildingSpec {
  Diagram diagram;
  Thickness thickness;

  BuildingSpec(int qi, int qj, int qk) : diagram(), thickness(qi, qj, qk) {}
  int q(Gen g) const { return thickness.q(g); }
  int alphabet_size(Gen g) const { return thickness.q(g); }
  bool operator==(const BuildingSpec&) const = default;
};

}  // namespace rab
