#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chevalley/lie_data.hpp"
#include "chevalley/number_field.hpp"
#include "chevalley/real_forms.hpp"

namespace chevalley {

enum class PolicyChoice { assume_true, assume_false, unknown };

std::string policy_name(PolicyChoice c);

// Working hypotheses for the two congruence-subgroup-property gaps:
// anisotropic forms of type A1, and the rank-one form F4(-20) over Q.
struct CSPPolicy {
    PolicyChoice serre_conjecture_a1 = PolicyChoice::unknown;
    PolicyChoice f4_rank_one_csp = PolicyChoice::unknown;
};

// One inner real form per real place of k. Globally realizable with
// trivial finite behavior exactly when the coordinatewise sum of the
// invariant vectors vanishes.
struct Assignment {
    std::vector<RealFormRecord> forms;

    bool nontrivial() const;                // some coordinate is non-split
    std::vector<int> invariant_sum() const; // mod-2 componentwise sum
    bool realizable() const;                // invariant_sum() == 0
};

enum class Outcome {
    solitary_or_ngr,   // profinitely solitary, or not Grothendieck rigid
    not_solitary,
    csp_conditional,
    outside_theorems,
};

std::string outcome_name(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::outside_theorems;
    bool fsp = false;
    std::string witness;  // nonempty exactly for not_solitary
    Outcome branch_if_csp_holds = Outcome::outside_theorems;  // csp_conditional only
    Outcome branch_if_csp_fails = Outcome::outside_theorems;
    std::string reason;   // csp_conditional / outside_theorems
    std::vector<std::string> assumptions_used;
};

// The finite splitting principle: a form splitting at every finite place
// splits globally. Holds iff k is totally imaginary, or k has exactly one
// real place and the type is A_{2n+1} or C_n (including B_2 = C_2), or
// the type is A_{2n}.
bool finite_splitting_principle(const CartanType& t, const NumberFieldProfile& k);

inline constexpr int kKerGEnumerationBound = 8;  // max r1 for enumeration

// Visits every tuple of real-form table indices (one per real place)
// whose invariant vectors sum to zero, in lexicographic order starting
// with the all-split tuple. Return false from the callback to stop.
void for_each_ker_g(const CartanType& t, const NumberFieldProfile& k,
                    const std::function<bool(const std::vector<int>&)>& visit);

// Materialized assignments; throws if r1 exceeds the enumeration bound.
std::vector<Assignment> enumerate_ker_g(const CartanType& t, const NumberFieldProfile& k);

// Number of realizable assignments, by a character-sum count over the
// invariant group (agrees with the enumeration; see tests).
unsigned long long count_ker_g(const CartanType& t, const NumberFieldProfile& k);

// Sum of the real ranks of the assigned forms plus full rank for every
// complex place.
int archimedean_rank(const Assignment& a, const CartanType& t, const NumberFieldProfile& k);

// The classification decision tree.
Verdict solitude_verdict(const CartanType& t, const NumberFieldProfile& k,
                         const CSPPolicy& policy,
                         const LdRegistry& registry = default_ld_registry());

// Concrete witness description for a not_solitary verdict; nullopt when
// the verdict is anything else.
std::optional<std::string> witness_group(const CartanType& t, const NumberFieldProfile& k,
                                         const CSPPolicy& policy = {},
                                         const LdRegistry& registry = default_ld_registry());

// Independent verdict recomputed from the ker-g enumeration plus the
// low-rank resolution rules. Preconditions: r1 <= 8, rank <= 8, k locally
// determined.
Verdict resolution_oracle_verdict(const CartanType& t, const NumberFieldProfile& k,
                                  const CSPPolicy& policy);

// True iff the decision tree and the enumeration oracle agree.
bool cross_validate(const CartanType& t, const NumberFieldProfile& k, const CSPPolicy& policy,
                    const LdRegistry& registry = default_ld_registry());

}  // namespace chevalley
