#pragma once

#include <string>
#include <vector>

#include "chevalley/lie_data.hpp"

namespace chevalley {

// An inner real form of the split group of the given type, together with
// its real rank and its H^2(R, Z(G)) invariant (one bit per coordinate of
// the center written as a product of cyclic groups; length 2 exactly for
// type D_{2k}, length 1 otherwise).
struct RealFormRecord {
    CartanType type;
    std::string name;          // "Spin(8,1)", "Sp(1,1)", "SL_2(H)", "E6(-26)", "compact"
    int real_rank = 0;
    std::vector<int> h2_invariant;
    bool is_split = false;

    bool zero_invariant() const;

    friend bool operator==(const RealFormRecord&, const RealFormRecord&) = default;
};

// The inner real forms of the split group of type t that can appear as
// local components of a globally defined form with trivial behavior at
// the finite places. The split record comes first, the rest in order of
// decreasing real rank.
//
// Classical families are generated: Spin(p,q) invariants come from the
// real Hasse invariant of the corresponding diagonal form relative to the
// split one (computed through the qforms module), with the discriminant
// matched by sign flips for odd dimension. For type D only ordinary
// quadratic-form twists are enumerated and the second invariant
// coordinate is pinned to 0; quaternionic D-forms are out of the model.
// Exceptional types are fixed tables.
std::vector<RealFormRecord> inner_real_forms(const CartanType& t);

// True iff H^1(R, G) is trivial for the split simply-connected group,
// i.e. for the families A and C.
bool h1_real_trivial(const CartanType& t);

// Fixture file format, one record per line:
//   type;name;real_rank;inv_bits;is_split
// e.g. "E6;E6(-26);2;0;0". '#' starts a comment. Validated on load.
std::vector<RealFormRecord> parse_form_table(const std::string& text);
std::vector<RealFormRecord> load_form_table(const std::string& path);

// The built-in exceptional-type records (same content as the shipped
// data file).
const std::vector<RealFormRecord>& builtin_exceptional_forms();

}  // namespace chevalley
