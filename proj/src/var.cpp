#include "hmc/var.hpp"

#include <charconv>

namespace hmc {

std::string VarId::name() const {
    switch (family_) {
        case Family::A: return "a" + std::to_string(index_);
        case Family::ABar: return "abar" + std::to_string(index_);
        case Family::B: return "b" + std::to_string(index_);
        case Family::BBar: return "bbar" + std::to_string(index_);
        case Family::Z: return "z";
        case Family::Zeta: return "zeta";
        case Family::U: return "u";
        case Family::V: return "v";
        case Family::W: return "wbar";
    }
    return "?";
}

std::optional<VarId> VarId::parse(std::string_view name) {
    if (name == "z") return vars::z;
    if (name == "zeta") return vars::zeta;
    if (name == "u") return vars::u;
    if (name == "v") return vars::v;
    if (name == "wbar") return vars::wbar;

    static constexpr std::pair<std::string_view, Family> prefixes[] = {
        {"abar", Family::ABar}, {"bbar", Family::BBar}, {"a", Family::A}, {"b", Family::B}};
    for (const auto& [prefix, family] : prefixes) {
        if (!name.starts_with(prefix)) continue;
        auto digits = name.substr(prefix.size());
        if (digits.empty() || (digits.size() > 1 && digits[0] == '0')) return std::nullopt;
        int index = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
        if (index > (1 << 20)) return std::nullopt;
        return VarId(family, index);
    }
    return std::nullopt;
}

} // namespace hmc
