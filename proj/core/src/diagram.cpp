#include "rab/diagram.hpp"

namespace rab {

const char* name(Gen g) {
  switch (g) {
    case Gen::i: return "i";
    case Gen::j: return "j";
    case Gen::k: return "k";
  }
  return "?";
}

std::optional<Gen> gen_from_name(std::string_view s) {
  if (s == "i") return Gen::i;
  if (s == "j") return Gen::j;
  if (s == "k") return Gen::k;
  return std::nullopt;
}

Thickness::Thickness(int qi, int qj, int qk) : q_{qi, qj, qk} {
  for (Gen g : kGens) {
    if (q(g) < 3)
      throw ConfigError("thickness q_" + std::string(name(g)) + " = " +
                        std::to_string(q(g)) + " violates q >= 3");
  }
}

}  // namespace rab
