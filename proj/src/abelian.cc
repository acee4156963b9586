#include <ttm/abelian.hh>

#include <numeric>
#include <sstream>
#include <algorithm>
#include <cctype>
#include <stdexcept>

using std::int64_t;
using std::string;
using std::vector;

namespace ttm
{
    auto Cyclic::normalise(int64_t x) const -> int64_t
    {
        if (modulus == 0)
            return x;
        auto r = x % modulus;
        return r < 0 ? r + modulus : r;
    }

    auto Cyclic::norm(int64_t x) const -> int64_t
    {
        if (modulus == 0)
            return x < 0 ? -x : x;
        auto r = normalise(x);
        return std::min(r, modulus - r);
    }

    auto Cyclic::to_string() const -> string
    {
        return modulus == 0 ? string("Z") : "Z_" + std::to_string(modulus);
    }

    auto validate(const GroupSpec & m) -> void
    {
        if (m.free_rank < 0)
            throw std::invalid_argument("negative free rank");
        for (auto & t : m.torsion)
            if (t.modulus < 2 || t.multiplicity < 1)
                throw std::invalid_argument("torsion factors need modulus >= 2 and multiplicity >= 1");
    }

    auto exponent(const GroupSpec & m) -> Exponent
    {
        validate(m);
        if (m.free_rank > 0)
            return {true, 0};
        int64_t result = 1;
        for (auto & t : m.torsion) {
            result = std::lcm(result, t.modulus);
            if (result <= 0 || result > (int64_t{1} << 40))
                throw std::overflow_error("group exponent too large");
        }
        return {false, result};
    }

    auto reduce(const GroupSpec & m) -> Cyclic
    {
        auto e = exponent(m);
        return Cyclic{e.infinite ? 0 : e.value};
    }

    auto as_spec(const Cyclic & c) -> GroupSpec
    {
        if (c.modulus == 0)
            return GroupSpec{1, {}};
        if (c.modulus == 1)
            return GroupSpec{};
        return GroupSpec{0, {{c.modulus, 1}}};
    }

    auto direct_product(const GroupSpec & a, const GroupSpec & b) -> GroupSpec
    {
        GroupSpec result = a;
        result.free_rank += b.free_rank;
        result.torsion.insert(result.torsion.end(), b.torsion.begin(), b.torsion.end());
        return result;
    }

    auto lcm(const Exponent & a, const Exponent & b) -> Exponent
    {
        if (a.infinite || b.infinite)
            return {true, 0};
        return {false, std::lcm(a.value, b.value)};
    }

    auto divisors(int64_t n) -> vector<int64_t>
    {
        if (n < 1)
            throw std::invalid_argument("divisors need n >= 1");
        vector<int64_t> small, large;
        for (int64_t d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                small.push_back(d);
                if (d != n / d)
                    large.push_back(n / d);
            }
        small.insert(small.end(), large.rbegin(), large.rend());
        return small;
    }

    auto parse_group(const string & text) -> GroupSpec
    {
        GroupSpec result;
        std::size_t pos = 0;
        auto fail = [&](const string & why) -> void {
            throw std::invalid_argument("bad group '" + text + "': " + why);
        };
        auto read_number = [&]() -> int64_t {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (start == pos || pos - start > 12)
                fail("expected a number");
            return std::stoll(text.substr(start, pos - start));
        };

        if (text.empty())
            fail("empty");
        while (true) {
            if (pos >= text.size() || text[pos] != 'Z')
                fail("expected 'Z'");
            ++pos;
            int64_t modulus = 0;
            if (pos < text.size() && text[pos] == '_') {
                ++pos;
                modulus = read_number();
                if (modulus < 1)
                    fail("modulus must be positive");
            }
            int64_t power = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                power = read_number();
                if (power < 1 || power > 64)
                    fail("power must be between 1 and 64");
            }
            if (modulus == 0)
                result.free_rank += static_cast<int>(power);
            else if (modulus >= 2)
                result.torsion.push_back({modulus, static_cast<int>(power)});
            if (pos == text.size())
                break;
            if (text[pos] != 'x')
                fail("expected 'x' between factors");
            ++pos;
        }
        return result;
    }

    auto format_group(const GroupSpec & m) -> string
    {
        std::ostringstream out;
        bool first = true;
        auto sep = [&] {
            if (! first)
                out << 'x';
            first = false;
        };
        if (m.free_rank > 0) {
            sep();
            out << 'Z';
            if (m.free_rank > 1)
                out << '^' << m.free_rank;
        }
        for (auto & t : m.torsion) {
            sep();
            out << "Z_" << t.modulus;
            if (t.multiplicity > 1)
                out << '^' << t.multiplicity;
        }
        if (first)
            out << "Z_1";
        return out.str();
    }
}
