#ifndef TTM_ABELIAN_HH
#define TTM_ABELIAN_HH 1

#include <cstdint>
#include <string>
#include <vector>

namespace ttm
{
    struct TorsionFactor
    {
        std::int64_t modulus;      // >= 2
        int multiplicity;          // >= 1

        auto operator==(const TorsionFactor &) const -> bool = default;
    };

    /// Z^free_rank x prod Z_{modulus}^{multiplicity}. Empty means the trivial group Z_1.
    struct GroupSpec
    {
        int free_rank = 0;
        std::vector<TorsionFactor> torsion;

        auto operator==(const GroupSpec &) const -> bool = default;
    };

    /// Either infinite or a positive integer.
    struct Exponent
    {
        bool infinite = false;
        std::int64_t value = 1;

        auto operator==(const Exponent &) const -> bool = default;
    };

    /// Z (modulus 0) or Z_n (modulus n >= 1). Every TT question reduces to one of these.
    struct Cyclic
    {
        std::int64_t modulus = 0;

        auto is_integers() const -> bool { return modulus == 0; }
        auto operator==(const Cyclic &) const -> bool = default;

        /// Representative in 0..n-1 (identity over Z).
        auto normalise(std::int64_t x) const -> std::int64_t;
        auto is_zero(std::int64_t x) const -> bool { return normalise(x) == 0; }
        /// Distance from x to 0 in the group, i.e. min(r, n - r); |x| over Z.
        auto norm(std::int64_t x) const -> std::int64_t;
        auto to_string() const -> std::string;
    };

    auto validate(const GroupSpec & m) -> void;
    auto exponent(const GroupSpec & m) -> Exponent;
    auto reduce(const GroupSpec & m) -> Cyclic;
    auto as_spec(const Cyclic & c) -> GroupSpec;
    auto direct_product(const GroupSpec & a, const GroupSpec & b) -> GroupSpec;

    /// lcm with infinity absorbing.
    auto lcm(const Exponent & a, const Exponent & b) -> Exponent;

    auto divisors(std::int64_t n) -> std::vector<std::int64_t>;

    /// Syntax: "Z", "Z_n", products joined by 'x', powers by '^', e.g. "ZxZ_4^2xZ_2". "Z_1" is trivial.
    auto parse_group(const std::string & text) -> GroupSpec;
    auto format_group(const GroupSpec & m) -> std::string;
}

#endif
