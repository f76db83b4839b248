#include "chevalley/solitude.hpp"

#include <algorithm>
#include <stdexcept>

namespace chevalley {

std::string policy_name(PolicyChoice c) {
    switch (c) {
        case PolicyChoice::assume_true: return "assume_true";
        case PolicyChoice::assume_false: return "assume_false";
        case PolicyChoice::unknown: return "unknown";
    }
    return "unknown";
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::solitary_or_ngr: return "solitary_or_not_grothendieck_rigid";
        case Outcome::not_solitary: return "not_solitary";
        case Outcome::csp_conditional: return "csp_conditional";
        case Outcome::outside_theorems: return "outside_theorems";
    }
    return "?";
}

bool Assignment::nontrivial() const {
    return std::any_of(forms.begin(), forms.end(),
                       [](const RealFormRecord& r) { return !r.is_split; });
}

std::vector<int> Assignment::invariant_sum() const {
    std::vector<int> sum;
    for (const auto& f : forms) {
        if (sum.empty()) sum.assign(f.h2_invariant.size(), 0);
        if (f.h2_invariant.size() != sum.size())
            throw std::invalid_argument("mixed invariant lengths in assignment");
        for (size_t i = 0; i < sum.size(); ++i) sum[i] = (sum[i] + f.h2_invariant[i]) % 2;
    }
    return sum;
}

bool Assignment::realizable() const {
    auto s = invariant_sum();
    return std::all_of(s.begin(), s.end(), [](int b) { return b == 0; });
}

namespace {

bool is_family_a_even(const CartanType& t) {
    return t.family == Family::A && t.rank % 2 == 0;
}
bool is_family_a_odd(const CartanType& t) {
    return t.family == Family::A && t.rank % 2 == 1;
}
bool is_a1(const CartanType& t) { return t.family == Family::A && t.rank == 1; }

void require_admissible(const CartanType& t) {
    if (!t.admissible())
        throw std::invalid_argument("inadmissible Cartan type " + t.to_string());
}

}  // namespace

bool finite_splitting_principle(const CartanType& t, const NumberFieldProfile& k) {
    require_admissible(t);
    if (k.r1 == 0) return true;
    if (is_family_a_even(t)) return true;
    if (k.r1 == 1) {
        if (is_family_a_odd(t) || t.family == Family::C) return true;
        // B_2 is the type C_2 in disguise (Spin(5) = Sp_4), so the C_n
        // clause applies to it as well.
        if (t.family == Family::B && t.rank == 2) return true;
    }
    return false;
}

void for_each_ker_g(const CartanType& t, const NumberFieldProfile& k,
                    const std::function<bool(const std::vector<int>&)>& visit) {
    require_admissible(t);
    if (k.r1 > kKerGEnumerationBound)
        throw std::invalid_argument("ker g enumeration supports at most r1 = " +
                                    std::to_string(kKerGEnumerationBound) + ", got " +
                                    std::to_string(k.r1));
    const auto table = inner_real_forms(t);
    const int nforms = static_cast<int>(table.size());
    const int r1 = k.r1;
    const size_t coords = table.front().h2_invariant.size();

    std::vector<int> idx(r1, 0);
    std::vector<std::vector<int>> partial(r1 + 1, std::vector<int>(coords, 0));
    int depth = 0;
    for (;;) {
        if (depth == r1) {
            if (std::all_of(partial[r1].begin(), partial[r1].end(),
                            [](int b) { return b == 0; })) {
                if (!visit(idx)) return;
            }
            // step the odometer
            --depth;
            while (depth >= 0 && idx[depth] == nforms - 1) { idx[depth] = 0; --depth; }
            if (depth < 0) return;
            ++idx[depth];
        }
        const auto& inv = table[idx[depth]].h2_invariant;
        for (size_t c = 0; c < coords; ++c)
            partial[depth + 1][c] = (partial[depth][c] + inv[c]) % 2;
        ++depth;
    }
}

std::vector<Assignment> enumerate_ker_g(const CartanType& t, const NumberFieldProfile& k) {
    const auto table = inner_real_forms(t);
    std::vector<Assignment> out;
    for_each_ker_g(t, k, [&](const std::vector<int>& idx) {
        Assignment a;
        a.forms.reserve(idx.size());
        for (int i : idx) a.forms.push_back(table[i]);
        out.push_back(std::move(a));
        return true;
    });
    return out;
}

unsigned long long count_ker_g(const CartanType& t, const NumberFieldProfile& k) {
    require_admissible(t);
    if (k.r1 > kKerGEnumerationBound)
        throw std::invalid_argument("ker g count supports at most r1 = " +
                                    std::to_string(kKerGEnumerationBound));
    const auto table = inner_real_forms(t);
    const int coords = static_cast<int>(table.front().h2_invariant.size());
    const int classes = 1 << coords;

    // Character sum over (Z/2)^coords: the number of r1-tuples with zero
    // invariant sum is 2^-coords * sum_w (sum_v N_v (-1)^(w.v))^r1.
    std::vector<long long> counts(classes, 0);
    for (const auto& f : table) {
        int v = 0;
        for (int c = 0; c < coords; ++c) v |= f.h2_invariant[c] << c;
        ++counts[v];
    }
    __int128 total = 0;
    for (int w = 0; w < classes; ++w) {
        __int128 s = 0;
        for (int v = 0; v < classes; ++v)
            s += (__builtin_popcount(static_cast<unsigned>(w & v)) % 2 ? -1 : 1) * counts[v];
        __int128 pw = 1;
        for (int i = 0; i < k.r1; ++i) pw *= s;
        total += pw;
    }
    total /= classes;
    return static_cast<unsigned long long>(total);
}

int archimedean_rank(const Assignment& a, const CartanType& t, const NumberFieldProfile& k) {
    require_admissible(t);
    if (static_cast<int>(a.forms.size()) != k.r1)
        throw std::invalid_argument("assignment size does not match r1");
    int rank = k.r2 * t.rank;
    for (const auto& f : a.forms) rank += f.real_rank;
    return rank;
}

namespace {

struct WitnessPlan {
    std::string text;
    Assignment assignment;
    std::vector<std::string> assumptions;
};

RealFormRecord find_form(const std::vector<RealFormRecord>& table, const std::string& name) {
    for (const auto& r : table)
        if (r.name == name) return r;
    throw std::logic_error("real form not in table: " + name);
}

RealFormRecord split_form(const std::vector<RealFormRecord>& table) {
    for (const auto& r : table)
        if (r.is_split) return r;
    throw std::logic_error("no split record in table");
}

Assignment twist_at(const std::vector<RealFormRecord>& table, int r1,
                    const RealFormRecord& form, std::vector<int> places) {
    Assignment a;
    a.forms.assign(r1, split_form(table));
    for (int v : places) a.forms[v] = form;
    return a;
}

// Witness construction for the generic not-solitary branch. Callers
// guarantee r1 >= 1, and r1 >= 2 for the paired constructions.
WitnessPlan build_witness(const CartanType& t, const NumberFieldProfile& k) {
    const auto table = inner_real_forms(t);
    const int n = t.rank;
    WitnessPlan plan;

    auto one_place = [&](const std::string& display, const RealFormRecord& form) {
        plan.assignment = twist_at(table, k.r1, form, {0});
        plan.text = display + " at real place v0, split at all other places";
    };
    auto two_places = [&](const std::string& display, const RealFormRecord& form) {
        plan.assignment = twist_at(table, k.r1, form, {0, 1});
        plan.text = display + " at real places v0 and v1, split at all other places";
    };

    switch (t.family) {
        case Family::A: {
            const int m = (n + 1) / 2;  // quaternionic form SL_m(H)
            std::string name = "SL_" + std::to_string(m) + "(H)";
            two_places(name, find_form(table, name));
            break;
        }
        case Family::C: {
            const int q = n / 2, p = n - q;
            std::string name = "Sp(" + std::to_string(p) + "," + std::to_string(q) + ")";
            two_places(name, find_form(table, name));
            break;
        }
        case Family::B: {
            if (n == 2) {
                two_places("Spin(4,1)", find_form(table, "Spin(4,1)"));
            } else if (n == 3) {
                one_place("Spin(0,7)", find_form(table, "Spin(7,0)"));
                plan.assumptions.push_back("construction extrapolated to this type and field");
            } else {
                one_place("Spin(" + std::to_string(n - 3) + "," + std::to_string(n + 4) + ")",
                          find_form(table, "Spin(" + std::to_string(n + 4) + "," +
                                               std::to_string(n - 3) + ")"));
            }
            break;
        }
        case Family::D: {
            if (n == 4) {
                one_place("Spin(0,8)", find_form(table, "Spin(8,0)"));
                plan.assumptions.push_back("construction extrapolated to this type and field");
            } else {
                one_place("Spin(" + std::to_string(n - 4) + "," + std::to_string(n + 4) + ")",
                          find_form(table, "Spin(" + std::to_string(n + 4) + "," +
                                               std::to_string(n - 4) + ")"));
            }
            break;
        }
        case Family::E: {
            std::string name = n == 6 ? "E6(-26)" : n == 7 ? "E7(-25)" : "E8(-24)";
            one_place(name, find_form(table, name));
            break;
        }
        case Family::F:
            one_place("F4(-20)", find_form(table, "F4(-20)"));
            break;
        case Family::G:
            one_place("compact G2", find_form(table, "compact"));
            break;
    }
    if (!plan.assignment.realizable())
        throw std::logic_error("witness assignment not realizable for " + t.to_string());
    if (archimedean_rank(plan.assignment, t, k) < 2)
        throw std::logic_error("witness assignment has archimedean rank < 2 for " +
                               t.to_string() + " over " + k.to_string());
    return plan;
}

const char* kReasonNoCsp = "split group lacks CSP";
const char* kReasonA1NotLd = "type A1 over a field that is not locally determined";
const char* kReasonLdUndecided = "local determinacy undecided";
const char* kReasonF4Open = "CSP status of lattices in F4(-20) is open";
const char* kReasonA1Open = "CSP for anisotropic forms of type A1 is open";
const char* kReasonA1OpenNoCsp = "open: anisotropic A1 twists without CSP";

const char* kWitnessEquivField =
    "split form of the same type over an arithmetically equivalent number field";

}  // namespace

Verdict solitude_verdict(const CartanType& t, const NumberFieldProfile& k,
                         const CSPPolicy& policy, const LdRegistry& registry) {
    require_admissible(t);
    Verdict v;
    v.fsp = finite_splitting_principle(t, k);

    const bool a1 = is_a1(t);
    const bool over_q = k.is_rationals();
    const bool imaginary_quadratic = k.r1 == 0 && k.r2 == 1;

    // 1. Type A1 over Q or an imaginary quadratic field: the split group
    //    itself has infinite congruence kernel, so the machinery that the
    //    classification rests on does not start.
    if (a1 && (over_q || imaginary_quadratic)) {
        v.outcome = Outcome::outside_theorems;
        v.reason = kReasonNoCsp;
        return v;
    }

    // 2. Fields that are not locally determined.
    const TriState ld = local_determinacy(k, registry);
    if (ld == TriState::no) {
        if (a1) {
            v.outcome = Outcome::outside_theorems;
            v.reason = kReasonA1NotLd;
            return v;
        }
        v.outcome = Outcome::not_solitary;
        v.witness = kWitnessEquivField;
        return v;
    }

    // 3. Undecided local determinacy: report, do not guess.
    if (ld == TriState::unknown) {
        v.outcome = Outcome::outside_theorems;
        v.reason = kReasonLdUndecided;
        return v;
    }

    // 4. The finite-splitting-principle cases (totally imaginary; one real
    //    place with type A_{2n+1} or C_n; type A_{2n} anywhere). The A1
    //    exclusions were handled in step 1.
    if (k.r1 == 0 || is_family_a_even(t) ||
        (k.r1 == 1 && (is_family_a_odd(t) || t.family == Family::C ||
                       (t.family == Family::B && t.rank == 2)))) {
        v.outcome = Outcome::solitary_or_ngr;
        return v;
    }

    // 5. Low-rank quadratic and G2 cases over Q, resolved by the
    //    compactness / virtual-retraction arguments.
    if (over_q) {
        const std::string ts = t.to_string();
        if (ts == "B3" || ts == "B4" || ts == "D4" || ts == "D5" || ts == "G2") {
            v.outcome = Outcome::solitary_or_ngr;
            return v;
        }
    }

    // 6. Type A1 over signatures where every surviving twist is compact,
    //    Fuchsian or Kleinian.
    if (a1 && ((k.r1 == 2 && k.r2 == 0) || (k.r1 == 3 && k.r2 == 0) ||
               (k.r1 == 2 && k.r2 == 1))) {
        v.outcome = Outcome::solitary_or_ngr;
        return v;
    }

    // 7. F4 over Q: hinges on CSP for lattices in the rank-one form.
    if (t.family == Family::F && over_q) {
        switch (policy.f4_rank_one_csp) {
            case PolicyChoice::assume_true:
                v.outcome = Outcome::not_solitary;
                v.witness = "F4(-20) at real place v0, split at all other places";
                v.assumptions_used.push_back("f4_rank_one_csp=assume_true");
                return v;
            case PolicyChoice::assume_false:
                v.outcome = Outcome::solitary_or_ngr;
                v.assumptions_used.push_back("f4_rank_one_csp=assume_false");
                return v;
            case PolicyChoice::unknown:
                v.outcome = Outcome::csp_conditional;
                v.branch_if_csp_holds = Outcome::not_solitary;
                v.branch_if_csp_fails = Outcome::solitary_or_ngr;
                v.reason = kReasonF4Open;
                return v;
        }
    }

    // 8. Remaining A1 signatures: anisotropic higher-rank twists exist,
    //    gated on Serre's conjecture.
    if (a1) {
        switch (policy.serre_conjecture_a1) {
            case PolicyChoice::assume_true:
                v.outcome = Outcome::not_solitary;
                v.witness = "SL_1(H) at real places v0 and v1, split at all other places";
                v.assumptions_used.push_back("serre_conjecture_a1=assume_true");
                return v;
            case PolicyChoice::assume_false:
                v.outcome = Outcome::outside_theorems;
                v.reason = kReasonA1OpenNoCsp;
                v.assumptions_used.push_back("serre_conjecture_a1=assume_false");
                return v;
            case PolicyChoice::unknown:
                v.outcome = Outcome::csp_conditional;
                v.branch_if_csp_holds = Outcome::not_solitary;
                v.branch_if_csp_fails = Outcome::outside_theorems;
                v.reason = kReasonA1Open;
                return v;
        }
    }

    // 9. Everything else admits a higher-rank isotropic inner twist that
    //    is split at every finite place.
    WitnessPlan plan = build_witness(t, k);
    v.outcome = Outcome::not_solitary;
    v.witness = plan.text;
    v.assumptions_used = plan.assumptions;
    return v;
}

std::optional<std::string> witness_group(const CartanType& t, const NumberFieldProfile& k,
                                         const CSPPolicy& policy, const LdRegistry& registry) {
    Verdict v = solitude_verdict(t, k, policy, registry);
    if (v.outcome != Outcome::not_solitary) return std::nullopt;
    return v.witness;
}

Verdict resolution_oracle_verdict(const CartanType& t, const NumberFieldProfile& k,
                                  const CSPPolicy& policy) {
    require_admissible(t);
    if (k.r1 > kKerGEnumerationBound || t.rank > kKerGEnumerationBound)
        throw std::invalid_argument("resolution oracle bounds exceeded");
    if (local_determinacy(k) != TriState::yes)
        throw std::invalid_argument("resolution oracle needs a locally determined field");

    Verdict v;
    v.fsp = finite_splitting_principle(t, k);
    const bool a1 = is_a1(t);
    const bool over_q = k.is_rationals();

    // Same input-level exclusion as the decision tree: over Q and over
    // imaginary quadratic fields the split A1 group has infinite
    // congruence kernel, which no amount of ker-g data repairs.
    if (a1 && (over_q || (k.r1 == 0 && k.r2 == 1))) {
        v.outcome = Outcome::outside_theorems;
        v.reason = kReasonNoCsp;
        return v;
    }

    const auto table = inner_real_forms(t);
    bool any_nontrivial = false;
    int max_rank = -1;
    for_each_ker_g(t, k, [&](const std::vector<int>& idx) {
        bool nontrivial = false;
        int rank = k.r2 * t.rank;
        for (int i : idx) {
            nontrivial = nontrivial || !table[i].is_split;
            rank += table[i].real_rank;
        }
        if (nontrivial) {
            any_nontrivial = true;
            max_rank = std::max(max_rank, rank);
        }
        return true;
    });

    if (!any_nontrivial) {
        v.outcome = Outcome::solitary_or_ngr;
        return v;
    }

    if (!a1) {
        if (max_rank >= 2) {
            // Non-A1 inner twists split at the finite places are
            // k-isotropic, so a higher-rank twist has CSP and witnesses
            // non-solitude.
            v.outcome = Outcome::not_solitary;
            v.witness = "higher-rank twist found by enumeration";
            return v;
        }
        const std::string ts = t.to_string();
        if (over_q && (ts == "B4" || ts == "D5") && max_rank == 1) {
            // Rank-one hyperbolic lattices virtually retract onto their
            // geometrically finite subgroups; the twist cannot absorb a
            // profinitely equivalent group.
            v.outcome = Outcome::solitary_or_ngr;
            return v;
        }
        if (over_q && t.family == Family::F && max_rank == 1) {
            switch (policy.f4_rank_one_csp) {
                case PolicyChoice::assume_true:
                    v.outcome = Outcome::not_solitary;
                    v.witness = "F4(-20) lattice, assuming CSP";
                    return v;
                case PolicyChoice::assume_false:
                    v.outcome = Outcome::solitary_or_ngr;
                    return v;
                case PolicyChoice::unknown:
                    v.outcome = Outcome::csp_conditional;
                    v.branch_if_csp_holds = Outcome::not_solitary;
                    v.branch_if_csp_fails = Outcome::solitary_or_ngr;
                    v.reason = kReasonF4Open;
                    return v;
            }
        }
        if (over_q && (ts == "B3" || ts == "D4" || ts == "G2") && max_rank == 0) {
            // The only surviving twist is compact at infinity; its
            // arithmetic subgroups are finite.
            v.outcome = Outcome::solitary_or_ngr;
            return v;
        }
        throw std::logic_error("no resolution rule for " + ts + " over " + k.to_string());
    }

    // Type A1: all nontrivial twists are quaternionic, hence k-anisotropic.
    if (max_rank >= 2) {
        switch (policy.serre_conjecture_a1) {
            case PolicyChoice::assume_true:
                v.outcome = Outcome::not_solitary;
                v.witness = "anisotropic higher-rank A1 twist, assuming CSP";
                return v;
            case PolicyChoice::assume_false:
                v.outcome = Outcome::outside_theorems;
                v.reason = kReasonA1OpenNoCsp;
                return v;
            case PolicyChoice::unknown:
                v.outcome = Outcome::csp_conditional;
                v.branch_if_csp_holds = Outcome::not_solitary;
                v.branch_if_csp_fails = Outcome::outside_theorems;
                v.reason = kReasonA1Open;
                return v;
        }
    }
    // Signatures (2,0), (3,0), (2,1): every surviving twist lands in a
    // compact group, a Fuchsian lattice, or a Kleinian group, and each of
    // those is excluded by a first-Betti-number argument.
    if (!((k.r1 == 2 && k.r2 == 0) || (k.r1 == 3 && k.r2 == 0) || (k.r1 == 2 && k.r2 == 1)))
        throw std::logic_error("unexpected low-rank A1 case over " + k.to_string());
    v.outcome = Outcome::solitary_or_ngr;
    return v;
}

bool cross_validate(const CartanType& t, const NumberFieldProfile& k, const CSPPolicy& policy,
                    const LdRegistry& registry) {
    Verdict tree = solitude_verdict(t, k, policy, registry);
    Verdict oracle = resolution_oracle_verdict(t, k, policy);
    if (tree.outcome != oracle.outcome) return false;
    if (tree.outcome == Outcome::csp_conditional)
        return tree.branch_if_csp_holds == oracle.branch_if_csp_holds &&
               tree.branch_if_csp_fails == oracle.branch_if_csp_fails;
    return true;
}

}  // namespace chevalley
