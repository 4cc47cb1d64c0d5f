#include "coulomb/variables.hpp"

#include <cctype>

namespace coulomb {

std::string var_name(const Var& v) {
  switch (v.kind) {
    case VarKind::Mu: return "mu";
    case VarKind::H: return "h";
    case VarKind::M: return "m";
    case VarKind::Q: return "q";
    // The first coordinate prints bare ("t" == "t1"), matching the usual
    // rank-one notation; higher coordinates keep their 1-based index.
    case VarKind::Tau: return v.index == 0 ? "t" : "t" + std::to_string(v.index + 1);
    case VarKind::Z: return v.index == 0 ? "z" : "z" + std::to_string(v.index + 1);
    case VarKind::X: return v.index == 0 ? "x" : "x" + std::to_string(v.index + 1);
    case VarKind::U: return "u";
    case VarKind::V: return "v";
  }
  return "?";
}

std::optional<Var> var_from_name(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name == "mu") return var_mu();
  if (name == "h") return var_h();
  if (name == "m") return var_m();
  if (name == "q") return var_q();
  if (name == "u") return var_u();
  if (name == "v") return var_v();
  char head = name[0];
  VarKind kind;
  switch (head) {
    case 't': kind = VarKind::Tau; break;
    case 'z': kind = VarKind::Z; break;
    case 'x': kind = VarKind::X; break;
    default: return std::nullopt;
  }
  if (name.size() == 1) return Var{kind, 0};
  // Strictly digits after the letter, 1-based, no leading zero.
  if (name[1] == '0') return std::nullopt;
  long index = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    index = index * 10 + (name[i] - '0');
    if (index > 1'000'000) return std::nullopt;
  }
  return Var{kind, static_cast<std::int32_t>(index - 1)};
}

}  // namespace coulomb
