#include "rab/building.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rab {

bool adjacent(const Chamber& c, const Chamber& d, Gen g) {
  if (!(c.spec() == d.spec()))
    throw Error("adjacent: chambers belong to different buildings");
  Chamber diff = c.inverse().multiply(d);
  if (diff.is_base()) return true;
  return diff.length() == 1 && diff.syllables()[0].g == g;
}

std::vector<Chamber> panel(const Chamber& c, Gen g) {
  const BuildingSpec& spec = c.spec();
  std::vector<Chamber> out;
  out.reserve(spec.q(g));
  for (int a = 0; a < spec.q(g); ++a)
    out.push_back(c.multiply(Chamber::normalize(spec, {{g, a}})));
  std::sort(out.begin(), out.end());
  return out;
}

Chamber panel_rep(const Chamber& c, Gen g) {
  // Trailing g-colour: g-part of the final block, reachable by commutations.
  const auto& syl = c.syllables();
  int trailing = 0;
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    if (it->g == g) {
      trailing = it->colour;
      break;
    }
    if (!c.spec().diagram.commutes(it->g, g)) break;
  }
  if (trailing == 0) return c;
  return c.multiply(
      Chamber::normalize(c.spec(), {{g, c.spec().q(g) - trailing}}));
}

std::vector<Chamber> residue(const Chamber& c, const std::vector<Gen>& J) {
  const BuildingSpec& spec = c.spec();
  for (std::size_t s = 0; s < J.size(); ++s)
    for (std::size_t t = s + 1; t < J.size(); ++t) {
      if (J[s] == J[t]) throw Error("residue: repeated generator in type");
      if (!spec.diagram.commutes(J[s], J[t]))
        throw Error(std::string("residue: non-spherical type {") +
                    name(J[s]) + "," + name(J[t]) + "} is infinite");
    }
  std::vector<Chamber> out{c};
  for (Gen g : J) {
    std::vector<Chamber> next;
    next.reserve(out.size() * spec.q(g));
    for (const Chamber& d : out)
      for (int a = 0; a < spec.q(g); ++a)
        next.push_back(d.multiply(Chamber::normalize(spec, {{g, a}})));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Chamber residue_rep_ij(const Chamber& c) {
  return panel_rep(panel_rep(c, Gen::j), Gen::i);
}

bool in_ij_residue(const Chamber& c, const Chamber& d) {
  if (!(c.spec() == d.spec()))
    throw Error("residue membership: different buildings");
  for (const Syllable& s : c.inverse().multiply(d).syllables())
    if (s.g == Gen::k) return false;
  return true;
}

namespace {

void extend_ball(const BuildingSpec& spec, std::vector<Syllable>& word, int r,
                 std::vector<Chamber>& out) {
  out.push_back(ChamberBuilder::adopt(spec, word));
  if (static_cast<int>(word.size()) == r) return;
  for (Gen g : kGens) {
    if (!word.empty()) {
      Gen last = word.back().g;
      // Appending must keep the word canonical: never repeat a generator,
      // never place a commuting pair out of order.
      if (last == g) continue;
      if (spec.diagram.commutes(last, g) && last > g) continue;
    }
    for (int a = 1; a < spec.q(g); ++a) {
      word.push_back({g, a});
      extend_ball(spec, word, r, out);
      word.pop_back();
    }
  }
}

}  // namespace

std::vector<Chamber> ball(const BuildingSpec& spec, int r) {
  if (r < 0) throw Error("ball: negative radius");
  std::vector<Chamber> out;
  std::vector<Syllable> word;
  extend_ball(spec, word, r, out);
  std::sort(out.begin(), out.end());
  return out;
}

int Colouring::lambda(Gen g, const Chamber& c) const {
  if (g == Gen::k) throw Error("lambda: use lambda_k for the k-component");
  return c.syllable_sum(g);
}

ColourPair Colouring::lambda_k(const Chamber& c) const {
  if (!k_rule_) throw Error("colouring: k-rule missing");
  return k_rule_(c);
}

ColourTuple Colouring::colour(const Chamber& c) const {
  return {lambda(Gen::i, c), lambda(Gen::j, c), lambda_k(c)};
}

namespace {

std::string pair_str(ColourPair p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

LegalityReport verify_legal_colouring(const Colouring& colouring,
                                      const std::vector<Chamber>& chambers) {
  LegalityReport report;
  const BuildingSpec& spec = colouring.spec();

  for (Gen type : kGens) {
    std::set<Chamber> seen;
    for (const Chamber& c : chambers) {
      Chamber rep = panel_rep(c, type);
      if (!seen.insert(rep).second) continue;
      ++report.panels_checked;

      std::vector<Chamber> members = panel(rep, type);
      auto fail = [&](const std::string& detail) {
        report.violations.push_back({type, rep, detail});
      };

      if (type == Gen::i || type == Gen::j) {
        std::vector<bool> hit(spec.q(type), false);
        for (const Chamber& m : members) {
          int v = colouring.lambda(type, m);
          if (hit[v]) fail("own component not injective on the panel");
          hit[v] = true;
        }
        Gen other = type == Gen::i ? Gen::j : Gen::i;
        for (const Chamber& m : members) {
          if (colouring.lambda(other, m) != colouring.lambda(other, members[0]))
            fail(std::string("component ") + name(other) + " not constant");
          if (colouring.lambda_k(m) != colouring.lambda_k(members[0]))
            fail("component k not constant");
        }
      } else {
        std::set<ColourPair> values;
        for (const Chamber& m : members) values.insert(colouring.lambda_k(m));
        if (static_cast<int>(values.size()) != spec.q(Gen::k))
          fail("k-component not bijective: " +
               std::to_string(values.size()) + " distinct values, expected " +
               std::to_string(spec.q(Gen::k)));
        for (Gen other : {Gen::i, Gen::j})
          for (const Chamber& m : members)
            if (colouring.lambda(other, m) !=
                colouring.lambda(other, members[0]))
              fail(std::string("component ") + name(other) + " not constant");
      }
    }
  }
  return report;
}

nlohmann::json LegalityReport::to_json() const {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& viol : violations)
    v.push_back({{"panel_type", name(viol.panel_type)},
                 {"panel_rep", viol.rep.to_json()},
                 {"detail", viol.detail}});
  return {{"panels_checked", panels_checked},
          {"ok", ok()},
          {"violations", v}};
}

}  // namespace rab
