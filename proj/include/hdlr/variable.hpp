#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hdlr {

/// Variable kinds in canonical order: z_1 < ... < z_n < t_1 < ... < t_d < h,
/// then the auxiliaries H < rho < zeta_1 < ... < zeta_n < nu < eps.
enum class VarKind : std::uint8_t { Z = 0, T = 1, SmallH = 2, BigH = 3, Rho = 4, Zeta = 5, Nu = 6, Eps = 7 };

struct Var {
    VarKind kind{VarKind::SmallH};
    std::uint16_t index{0}; // 1-based for Z, T, Zeta; 0 otherwise

    friend auto operator<=>(const Var&, const Var&) = default;

    std::string name() const;
    static std::optional<Var> parse(std::string_view s);
};

inline Var var_z(int i) { return Var{VarKind::Z, static_cast<std::uint16_t>(i)}; }
inline Var var_t(int i) { return Var{VarKind::T, static_cast<std::uint16_t>(i)}; }
inline Var var_h() { return Var{VarKind::SmallH, 0}; }
inline Var var_H() { return Var{VarKind::BigH, 0}; }
inline Var var_rho() { return Var{VarKind::Rho, 0}; }
inline Var var_zeta(int i) { return Var{VarKind::Zeta, static_cast<std::uint16_t>(i)}; }
inline Var var_nu() { return Var{VarKind::Nu, 0}; }
inline Var var_eps() { return Var{VarKind::Eps, 0}; }

} // namespace hdlr
