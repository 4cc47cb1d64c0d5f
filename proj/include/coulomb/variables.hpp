#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace coulomb {

// The fixed variable universe. Indexed kinds (Tau, Z, X) carry a 0-based
// index; scalar kinds use index 0. The enumerator order is the division
// order used for monomial comparisons: mu < h < m < q < t1..tr < z1..zr
// < x1..xr < u < v.
enum class VarKind : std::uint8_t { Mu, H, M, Q, Tau, Z, X, U, V };

struct Var {
  VarKind kind = VarKind::Mu;
  std::int32_t index = 0;

  friend auto operator<=>(const Var&, const Var&) = default;
};

inline constexpr bool kind_is_indexed(VarKind k) {
  return k == VarKind::Tau || k == VarKind::Z || k == VarKind::X;
}

// Negative exponents are permitted on the multiplicative coordinates
// (x, m, q), the winding variables z, and on tau (rank-1 generator
// denominators); mu, h and the auxiliary u, v stay polynomial.
inline constexpr bool kind_is_laurent(VarKind k) {
  switch (k) {
    case VarKind::M:
    case VarKind::Q:
    case VarKind::Tau:
    case VarKind::Z:
    case VarKind::X:
      return true;
    default:
      return false;
  }
}

inline Var var_mu() { return {VarKind::Mu, 0}; }
inline Var var_h() { return {VarKind::H, 0}; }
inline Var var_m() { return {VarKind::M, 0}; }
inline Var var_q() { return {VarKind::Q, 0}; }
inline Var var_tau(std::int32_t i) { return {VarKind::Tau, i}; }
inline Var var_z(std::int32_t i) { return {VarKind::Z, i}; }
inline Var var_x(std::int32_t i) { return {VarKind::X, i}; }
inline Var var_u() { return {VarKind::U, 0}; }
inline Var var_v() { return {VarKind::V, 0}; }

// "mu", "h", "m", "q", "t3", "z1", "x2", "u", "v". Indexed kinds print
// 1-based; bare "t"/"z"/"x" parse as index 1.
std::string var_name(const Var& v);
std::optional<Var> var_from_name(const std::string& name);

}  // namespace coulomb
