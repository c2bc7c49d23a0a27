#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rab/diagram.hpp"

namespace rab {

// One letter of a chamber word: a non-identity element of the cyclic factor
// Z_{q_g}, written as (generator, colour) with colour in {1, ..., q_g - 1}.
struct Syllable {
  Gen g;
  int colour;
  bool operator==(const Syllable&) const = default;
  auto operator<=>(const Syllable&) const = default;
};

using RawWord = std::vector<std::pair<Gen, int>>;

// A chamber of the building, i.e. an element of the graph product
// (Z_{q_i} x Z_{q_j}) * Z_{q_k} in canonical normal form:
//   - no two adjacent syllables share a generator,
//   - adjacent commuting syllables appear in the order i < j.
// Immutable after construction.
class Chamber {
 public:
  // The base chamber (empty word / group identity).
  explicit Chamber(const BuildingSpec& spec) : spec_(spec) {}

  // Canonical form of an arbitrary word; colour 0 is accepted and dropped.
  static Chamber normalize(const BuildingSpec& spec, const RawWord& raw);

  const BuildingSpec& spec() const { return spec_; }
  const std::vector<Syllable>& syllables() const { return syl_; }
  std::size_t length() const { return syl_.size(); }
  bool is_base() const { return syl_.empty(); }

  Chamber multiply(const Chamber& other) const;
  Chamber inverse() const;

  // Sum of the g-coloured syllables mod q_g; a homomorphism onto Z_{q_g}.
  int syllable_sum(Gen g) const;

  bool operator==(const Chamber& o) const {
    return spec_ == o.spec_ && syl_ == o.syl_;
  }
  // Canonical order: by length, then lexicographic on (generator, colour).
  std::strong_ordering operator<=>(const Chamber& o) const;

  std::size_t hash() const;

  std::string str() const;
  nlohmann::json to_json() const;
  static Chamber from_json(const BuildingSpec& spec, const nlohmann::json& j);

 private:
  friend class ChamberBuilder;
  BuildingSpec spec_;
  std::vector<Syllable> syl_;
};

// Append-only construction of words that are already in normal form
// (used by enumeration and the walk engine; skips the bubble passes).
class ChamberBuilder {
 public:
  static Chamber adopt(const BuildingSpec& spec, std::vector<Syllable> syl) {
    Chamber c(spec);
    c.syl_ = std::move(syl);
    return c;
  }
};

struct ChamberHash {
  std::size_t operator()(const Chamber& c) const { return c.hash(); }
};

}  // namespace rab
