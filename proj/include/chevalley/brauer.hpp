#pragma once

#include <map>
#include <vector>

#include "chevalley/lie_data.hpp"
#include "chevalley/number_field.hpp"
#include "chevalley/rational.hpp"

namespace chevalley {

// A Brauer class of order dividing order_bound, stored as its finitely
// supported vector of local Hasse invariants in [0,1).
struct BrauerClass {
    long long order_bound = 1;
    std::map<Place, Rational> invariants;
};

// True iff the class is well formed: every value lies in [0,1) with
// denominator dividing order_bound, complex places carry 0, real places
// carry 0 or 1/2, and the sum of all invariants is an integer.
bool validate_class(const BrauerClass& c);

// Description of the classes in H^2(k, Z(G)) that vanish at every finite
// and complex place. Per cyclic coordinate of even order the kernel is
// the F_2-space of even-cardinality subsets of the real places.
struct KerBDescription {
    int coordinate_count = 1;             // 2 exactly for type D_{2k}
    int f2_dimension_per_coordinate = 0;  // max(r1 - 1, 0) when the exponent is even
    unsigned long long total_count = 1;   // 2^(coordinate_count * dimension)
    std::vector<std::vector<int>> generators;  // real-place index supports, even size

    unsigned long long nontrivial_count() const { return total_count - 1; }
};

KerBDescription ker_b(const CartanType& t, const NumberFieldProfile& k);

// True iff the center exponent is odd or k has at most one real place.
bool is_b_injective(const CartanType& t, const NumberFieldProfile& k);

// All even-cardinality subsets of {0, ..., r1-1} (the empty set first),
// as sorted index lists. These are the per-coordinate kernel supports.
std::vector<std::vector<int>> enumerate_even_supports(int r1);

}  // namespace chevalley
