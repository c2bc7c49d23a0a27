#include "rab/word.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace rab {

Chamber Chamber::normalize(const BuildingSpec& spec, const RawWord& raw) {
  std::vector<Syllable> w;
  w.reserve(raw.size());
  for (const auto& [g, colour] : raw) {
    int q = spec.q(g);
    if (colour < 0 || colour >= q)
      throw Error("colour " + std::to_string(colour) + " out of range for q_" +
                  std::string(name(g)) + " = " + std::to_string(q));
    if (colour != 0) w.push_back({g, colour});
  }

  // Bubble to the fixpoint: merge same-generator neighbours (cancelling
  // colour 0), swap adjacent commuting syllables that are out of order.
  // Each pass strictly decreases (length, inversion count) lexicographically.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t + 1 < w.size();) {
      Syllable& s = w[t];
      Syllable& u = w[t + 1];
      if (s.g == u.g) {
        int merged = (s.colour + u.colour) % spec.q(s.g);
        if (merged == 0) {
          w.erase(w.begin() + t, w.begin() + t + 2);
          t = t > 0 ? t - 1 : 0;
        } else {
          s.colour = merged;
          w.erase(w.begin() + t + 1);
        }
        changed = true;
      } else if (spec.diagram.commutes(s.g, u.g) && s.g > u.g) {
        std::swap(s, u);
        changed = true;
        ++t;
      } else {
        ++t;
      }
    }
  }
  return ChamberBuilder::adopt(spec, std::move(w));
}

Chamber Chamber::multiply(const Chamber& other) const {
  if (!(spec_ == other.spec_))
    throw Error("multiply: chambers belong to different buildings");
  RawWord raw;
  raw.reserve(syl_.size() + other.syl_.size());
  for (const Syllable& s : syl_) raw.emplace_back(s.g, s.colour);
  for (const Syllable& s : other.syl_) raw.emplace_back(s.g, s.colour);
  return normalize(spec_, raw);
}

Chamber Chamber::inverse() const {
  RawWord raw;
  raw.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
    raw.emplace_back(it->g, spec_.q(it->g) - it->colour);
  return normalize(spec_, raw);
}

int Chamber::syllable_sum(Gen g) const {
  int total = 0;
  for (const Syllable& s : syl_)
    if (s.g == g) total += s.colour;
  return total % spec_.q(g);
}

std::strong_ordering Chamber::operator<=>(const Chamber& o) const {
  if (auto c = syl_.size() <=> o.syl_.size(); c != 0) return c;
  return syl_ <=> o.syl_;
}

std::size_t Chamber::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const Syllable& s : syl_) {
    h ^= static_cast<std::size_t>(index(s.g)) + 0x9e3779b9 + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(s.colour) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Chamber::str() const {
  if (syl_.empty()) return "[]";
  std::ostringstream os;
  os << '[';
  for (std::size_t t = 0; t < syl_.size(); ++t) {
    if (t) os << ' ';
    os << name(syl_[t].g) << syl_[t].colour;
  }
  os << ']';
  return os.str();
}

nlohmann::json Chamber::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const Syllable& s : syl_) j.push_back({name(s.g), s.colour});
  return j;
}

Chamber Chamber::from_json(const BuildingSpec& spec, const nlohmann::json& j) {
  if (!j.is_array()) throw Error("chamber: expected a JSON array of pairs");
  RawWord raw;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw Error("chamber: each syllable must be [generator, colour]");
    auto g = gen_from_name(entry[0].get<std::string>());
    if (!g) throw Error("chamber: unknown generator '" +
                        entry[0].get<std::string>() + "'");
    raw.emplace_back(*g, entry[1].get<int>());
  }
  return normalize(spec, raw);
}

}  // namespace rab
