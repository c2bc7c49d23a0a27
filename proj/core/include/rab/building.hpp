#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rab/word.hpp"

namespace rab {

// A pair of colours; the k-colour alphabet X_k is a product of the two
// alphabets of the partner building.
using ColourPair = std::pair<int, int>;

struct ColourTuple {
  int i;
  int j;
  ColourPair k;
  bool operator==(const ColourTuple&) const = default;
};

// g-adjacency: c ~_g d iff c^{-1} d lies in <g>. Reflexive.
bool adjacent(const Chamber& c, const Chamber& d, Gen g);

// The g-panel through c: the coset c<g>, all q_g chambers, canonical order.
std::vector<Chamber> panel(const Chamber& c, Gen g);

// The unique member of panel(c, g) with no trailing g-syllable.
Chamber panel_rep(const Chamber& c, Gen g);

// The residue of spherical type J through c: the coset c<J>, enumerated in
// canonical order. J must be one of {}, {i}, {j}, {k}, {i,j}.
std::vector<Chamber> residue(const Chamber& c, const std::vector<Gen>& J);

// The unique member of the {i,j}-residue of c with no trailing i/j-block.
Chamber residue_rep_ij(const Chamber& c);

bool in_ij_residue(const Chamber& c, const Chamber& d);

// All chambers at gallery distance <= r from the base chamber, in canonical
// order. Gallery distance = normal-form syllable count.
std::vector<Chamber> ball(const BuildingSpec& spec, int r);

// The legal colouring: lambda_i and lambda_j are the syllable sums, the
// k-component is a pluggable rule (supplied by the chamber correspondence).
class Colouring {
 public:
  using KRule = std::function<ColourPair(const Chamber&)>;

  explicit Colouring(const BuildingSpec& spec, KRule k_rule = nullptr)
      : spec_(spec), k_rule_(std::move(k_rule)) {}

  const BuildingSpec& spec() const { return spec_; }
  bool has_k_rule() const { return static_cast<bool>(k_rule_); }

  int lambda(Gen g, const Chamber& c) const;  // g in {i, j}
  ColourPair lambda_k(const Chamber& c) const;
  ColourTuple colour(const Chamber& c) const;

 private:
  BuildingSpec spec_;
  KRule k_rule_;
};

struct LegalityViolation {
  Gen panel_type;
  Chamber rep;
  std::string detail;
};

struct LegalityReport {
  int panels_checked = 0;
  std::vector<LegalityViolation> violations;
  bool ok() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

// Checks, for every panel meeting the given chamber set (panels enumerated in
// full even where they leave the set), that the panel-type colour component is
// a bijection onto its alphabet and the other two components are constant.
LegalityReport verify_legal_colouring(const Colouring& colouring,
                                      const std::vector<Chamber>& chambers);

}  // namespace rab
