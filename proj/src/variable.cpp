#include "hdlr/variable.hpp"

#include <charconv>

namespace hdlr {

std::string Var::name() const {
    switch (kind) {
        case VarKind::Z: return "z" + std::to_string(index);
        case VarKind::T: return "t" + std::to_string(index);
        case VarKind::SmallH: return "h";
        case VarKind::BigH: return "H";
        case VarKind::Rho: return "rho";
        case VarKind::Zeta: return "zeta" + std::to_string(index);
        case VarKind::Nu: return "nu";
        case VarKind::Eps: return "eps";
    }
    return "?";
}

std::optional<Var> Var::parse(std::string_view s) {
    auto indexed = [](std::string_view body) -> std::optional<std::uint16_t> {
        if (body.empty()) return std::nullopt;
        unsigned v = 0;
        auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
        if (ec != std::errc() || p != body.data() + body.size() || v == 0 || v > 0xffff) return std::nullopt;
        return static_cast<std::uint16_t>(v);
    };
    if (s == "h") return var_h();
    if (s == "H") return var_H();
    if (s == "rho") return var_rho();
    if (s == "nu") return var_nu();
    if (s == "eps") return var_eps();
    if (s.size() > 1 && s[0] == 'z') {
        if (s.substr(0, 4) == "zeta") {
            if (auto i = indexed(s.substr(4))) return var_zeta(*i);
            return std::nullopt;
        }
        if (auto i = indexed(s.substr(1))) return var_z(*i);
    }
    if (s.size() > 1 && s[0] == 't')
        if (auto i = indexed(s.substr(1))) return var_t(*i);
    return std::nullopt;
}

} // namespace hdlr
