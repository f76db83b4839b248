#include "chevalley/brauer.hpp"

#include <stdexcept>

namespace chevalley {

bool validate_class(const BrauerClass& c) {
    if (c.order_bound < 1) return false;
    Rational sum(0);
    for (const auto& [place, value] : c.invariants) {
        if (value.sign() < 0 || !(value < Rational(1))) return false;
        if (c.order_bound % value.den() != 0) return false;
        if (place.is_complex() && !value.is_zero()) return false;
        if (place.is_real() && !value.is_zero() && !(value == Rational(1, 2))) return false;
        sum = sum + value;
    }
    return sum.is_integer();
}

KerBDescription ker_b(const CartanType& t, const NumberFieldProfile& k) {
    if (!t.admissible())
        throw std::invalid_argument("inadmissible Cartan type " + t.to_string());
    FiniteAbelianGroup z = center(t);

    KerBDescription d;
    d.coordinate_count = static_cast<int>(z.invariant_factors.size()) == 2 ? 2 : 1;
    const bool even_exponent = z.exponent() % 2 == 0;
    d.f2_dimension_per_coordinate = (even_exponent && k.r1 >= 2) ? k.r1 - 1 : 0;
    d.total_count = 1ULL << (static_cast<unsigned>(d.coordinate_count) *
                             static_cast<unsigned>(d.f2_dimension_per_coordinate));
    for (int i = 1; i <= d.f2_dimension_per_coordinate; ++i)
        d.generators.push_back({0, i});
    return d;
}

bool is_b_injective(const CartanType& t, const NumberFieldProfile& k) {
    return center(t).exponent() % 2 != 0 || k.r1 <= 1;
}

std::vector<std::vector<int>> enumerate_even_supports(int r1) {
    if (r1 < 0 || r1 > 24) throw std::invalid_argument("support enumeration out of range");
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << r1); ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        std::vector<int> support;
        for (int i = 0; i < r1; ++i)
            if (mask & (1u << i)) support.push_back(i);
        out.push_back(std::move(support));
    }
    return out;
}

}  // namespace chevalley
