#ifndef HMC_VAR_HPP
#define HMC_VAR_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hmc {

/// Variable families of the graded ring. Declaration order is the family
/// order used inside a grade.
enum class Family : std::uint8_t { A, ABar, B, BBar, Z, Zeta, U, V, W };

/// A ring variable. A/ABar/B/BBar carry an index equal to their grade; the
/// remaining families are grade-0 "null variables".
///
/// ABar(0) and BBar(0) are normalized to A(0) and B(0): the leading
/// coefficients are real, so a0 is its own conjugate.
class VarId {
public:
    constexpr VarId(Family family = Family::Z, int index = 0) noexcept
        : family_(family), index_(indexed(family) ? index : 0) {
        if (index_ == 0 && family_ == Family::ABar) family_ = Family::A;
        if (index_ == 0 && family_ == Family::BBar) family_ = Family::B;
    }

    static constexpr bool indexed(Family f) noexcept {
        return f == Family::A || f == Family::ABar || f == Family::B || f == Family::BBar;
    }

    constexpr Family family() const noexcept { return family_; }
    constexpr int index() const noexcept { return index_; }
    constexpr int grade() const noexcept { return index_; }
    constexpr bool invertible() const noexcept { return !indexed(family_) || index_ == 0; }

    /// Involution: A<->ABar, B<->BBar (index >= 1), U<->V; Z, Zeta, W fixed.
    constexpr VarId star() const noexcept {
        switch (family_) {
            case Family::A: return {Family::ABar, index_};
            case Family::ABar: return {Family::A, index_};
            case Family::B: return {Family::BBar, index_};
            case Family::BBar: return {Family::B, index_};
            case Family::U: return {Family::V};
            case Family::V: return {Family::U};
            default: return *this;
        }
    }

    /// Ordering key: grade first, then family.
    constexpr std::uint32_t key() const noexcept {
        return (static_cast<std::uint32_t>(index_) << 4) | static_cast<std::uint32_t>(family_);
    }
    static constexpr VarId from_key(std::uint32_t key) noexcept {
        return {static_cast<Family>(key & 0xFu), static_cast<int>(key >> 4)};
    }

    std::string name() const;
    static std::optional<VarId> parse(std::string_view name);

    friend constexpr bool operator==(VarId x, VarId y) noexcept { return x.key() == y.key(); }
    friend constexpr auto operator<=>(VarId x, VarId y) noexcept { return x.key() <=> y.key(); }

private:
    Family family_;
    int index_;
};

namespace vars {
constexpr VarId a(int k) { return {Family::A, k}; }
constexpr VarId abar(int k) { return {Family::ABar, k}; }
constexpr VarId b(int k) { return {Family::B, k}; }
constexpr VarId bbar(int k) { return {Family::BBar, k}; }
inline constexpr VarId z{Family::Z};
inline constexpr VarId zeta{Family::Zeta};
inline constexpr VarId u{Family::U};
inline constexpr VarId v{Family::V};
inline constexpr VarId wbar{Family::W};
} // namespace vars

} // namespace hmc

#endif
