#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "chevalley/real_forms.hpp"

using namespace chevalley;

namespace {

std::vector<CartanType> admissible_types(int max_rank) {
    std::vector<CartanType> out;
    for (char f : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
        for (int n = 1; n <= max_rank; ++n) {
            CartanType t{static_cast<Family>(f), n};
            if (t.admissible()) out.push_back(t);
        }
    return out;
}

const RealFormRecord* find(const std::vector<RealFormRecord>& table, const std::string& name) {
    for (const auto& r : table)
        if (r.name == name) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("exactly one split record per type, with zero invariant") {
    for (const auto& t : admissible_types(9)) {
        auto table = inner_real_forms(t);
        REQUIRE_FALSE(table.empty());
        int split_count = 0;
        for (const auto& r : table) {
            if (r.is_split) {
                ++split_count;
                CHECK(r.real_rank == t.rank);
                CHECK(r.zero_invariant());
            }
            CHECK(r.real_rank <= t.rank);
            CHECK(r.type == t);
            size_t want = (t.family == Family::D && t.rank % 2 == 0) ? 2 : 1;
            CHECK(r.h2_invariant.size() == want);
        }
        CHECK(split_count == 1);
        CHECK(table.front().is_split);
    }
}

TEST_CASE("A family tables") {
    auto a1 = inner_real_forms(make_type('A', 1));
    REQUIRE(a1.size() == 2);
    CHECK(a1[0].name == "SL_2(R)");
    CHECK(find(a1, "SL_1(H)") != nullptr);
    CHECK(find(a1, "SL_1(H)")->real_rank == 0);
    CHECK(find(a1, "SL_1(H)")->h2_invariant == std::vector<int>{1});

    // even rank: split only (odd center admits no nontrivial invariant)
    CHECK(inner_real_forms(make_type('A', 2)).size() == 1);
    CHECK(inner_real_forms(make_type('A', 4)).size() == 1);

    auto a3 = inner_real_forms(make_type('A', 3));
    REQUIRE(a3.size() == 2);
    CHECK(a3[1].name == "SL_2(H)");
    CHECK(a3[1].real_rank == 1);
}

TEST_CASE("C family tables") {
    auto c2 = inner_real_forms(make_type('C', 2));
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].name == "Sp_4(R)");
    CHECK(c2[0].real_rank == 2);
    CHECK(c2[1].name == "Sp(1,1)");
    CHECK(c2[1].real_rank == 1);
    CHECK(c2[1].h2_invariant == std::vector<int>{1});

    auto c4 = inner_real_forms(make_type('C', 4));
    REQUIRE(c4.size() == 3);
    CHECK(find(c4, "Sp(2,2)")->real_rank == 2);
    CHECK(find(c4, "Sp(3,1)")->real_rank == 1);
    for (const auto& r : c4)
        if (!r.is_split) CHECK(r.h2_invariant == std::vector<int>{1});
}

TEST_CASE("B family invariants from quadratic form data") {
    // B4: Spin(9,0) and Spin(8,1) carry the trivial class; the others do not.
    auto b4 = inner_real_forms(make_type('B', 4));
    REQUIRE(b4.size() == 5);
    CHECK(find(b4, "Spin(9,0)")->h2_invariant == std::vector<int>{0});
    CHECK(find(b4, "Spin(8,1)")->h2_invariant == std::vector<int>{0});
    CHECK(find(b4, "Spin(8,1)")->real_rank == 1);
    CHECK(find(b4, "Spin(7,2)")->h2_invariant == std::vector<int>{1});
    CHECK(find(b4, "Spin(6,3)")->h2_invariant == std::vector<int>{1});

    // B3: only the compact form joins the split one with zero invariant.
    auto b3 = inner_real_forms(make_type('B', 3));
    CHECK(find(b3, "Spin(7,0)")->h2_invariant == std::vector<int>{0});
    CHECK(find(b3, "Spin(6,1)")->h2_invariant == std::vector<int>{1});
    CHECK(find(b3, "Spin(5,2)")->h2_invariant == std::vector<int>{1});

    // B2 behaves like C2: no nontrivial form with zero invariant.
    auto b2 = inner_real_forms(make_type('B', 2));
    for (const auto& r : b2)
        if (!r.is_split) CHECK(r.h2_invariant == std::vector<int>{1});

    // B5: the four-sign swap Spin(9,2) keeps the trivial class at rank 2.
    auto b5 = inner_real_forms(make_type('B', 5));
    CHECK(find(b5, "Spin(9,2)")->h2_invariant == std::vector<int>{0});
    CHECK(find(b5, "Spin(9,2)")->real_rank == 2);
}

TEST_CASE("B family invariant pattern") {
    // Zero invariant exactly when q = n or q = n+1 (mod 4): the two scaled
    // representatives of Spin(p,q) reach the split signature by swapping
    // blocks of four signs exactly in those congruence classes.
    for (int n = 2; n <= 9; ++n) {
        auto table = inner_real_forms(make_type('B', n));
        for (const auto& r : table) {
            int q = r.real_rank;
            bool zero = r.zero_invariant();
            bool expected = (q % 4 == n % 4) || (q % 4 == (n + 1) % 4);
            CAPTURE(n);
            CAPTURE(q);
            CHECK(zero == expected);
        }
    }
}

TEST_CASE("D family tables") {
    auto d4 = inner_real_forms(make_type('D', 4));
    REQUIRE(d4.size() == 3);
    CHECK(find(d4, "Spin(8,0)")->h2_invariant == std::vector<int>{0, 0});
    CHECK(find(d4, "Spin(6,2)")->h2_invariant == std::vector<int>{1, 0});
    CHECK(find(d4, "Spin(7,1)") == nullptr);  // outer signature excluded

    auto d5 = inner_real_forms(make_type('D', 5));
    REQUIRE(d5.size() == 3);
    CHECK(find(d5, "Spin(9,1)")->h2_invariant == std::vector<int>{0});
    CHECK(find(d5, "Spin(9,1)")->real_rank == 1);
    CHECK(find(d5, "Spin(7,3)")->h2_invariant == std::vector<int>{1});
    CHECK(find(d5, "Spin(10,0)") == nullptr);  // outer: discriminant differs

    auto d6 = inner_real_forms(make_type('D', 6));
    CHECK(find(d6, "Spin(10,2)")->h2_invariant == std::vector<int>{0, 0});
    CHECK(find(d6, "Spin(10,2)")->real_rank == 2);

    for (int n = 4; n <= 9; ++n)
        for (const auto& r : inner_real_forms(make_type('D', n))) {
            int q = r.real_rank;
            CHECK((2 * n - 2 * q) % 4 == 0);  // inner condition p = q mod 4
            CHECK((r.h2_invariant[0] == 0) == (q % 4 == n % 4));
            if (r.h2_invariant.size() == 2) CHECK(r.h2_invariant[1] == 0);
        }
}

TEST_CASE("exceptional tables") {
    auto e6 = inner_real_forms(make_type('E', 6));
    REQUIRE(e6.size() == 2);
    CHECK(e6[1].name == "E6(-26)");
    CHECK(e6[1].real_rank == 2);

    auto e7 = inner_real_forms(make_type('E', 7));
    CHECK(find(e7, "E7(-25)")->real_rank == 3);

    auto e8 = inner_real_forms(make_type('E', 8));
    REQUIRE(e8.size() == 3);
    CHECK(find(e8, "E8(-24)")->real_rank == 4);
    CHECK(find(e8, "compact")->real_rank == 0);

    auto f4 = inner_real_forms(make_type('F', 4));
    CHECK(find(f4, "F4(-20)")->real_rank == 1);
    CHECK(find(f4, "compact") != nullptr);

    auto g2 = inner_real_forms(make_type('G', 2));
    REQUIRE(g2.size() == 2);
    CHECK(g2[1].name == "compact");
    CHECK(g2[1].real_rank == 0);
}

TEST_CASE("odd-center types carry only zero invariants") {
    for (const auto& t : admissible_types(9)) {
        bool odd_center = center(t).order() % 2 == 1;
        if (!odd_center) continue;
        for (const auto& r : inner_real_forms(t)) {
            CAPTURE(t.to_string());
            CAPTURE(r.name);
            CHECK(r.zero_invariant());
        }
    }
}

TEST_CASE("nonzero invariants appear in A exactly for odd rank, and always in C") {
    for (const auto& t : admissible_types(9)) {
        if (t.family != Family::A && t.family != Family::C) continue;
        bool has_nonzero = false;
        for (const auto& r : inner_real_forms(t)) has_nonzero |= !r.zero_invariant();
        bool expected = t.family == Family::C || t.rank % 2 == 1;
        CAPTURE(t.to_string());
        CHECK(has_nonzero == expected);
    }
}

TEST_CASE("h1_real_trivial by family") {
    CHECK(h1_real_trivial(make_type('A', 5)));
    CHECK(h1_real_trivial(make_type('C', 4)));
    CHECK_FALSE(h1_real_trivial(make_type('G', 2)));
    for (const auto& t : admissible_types(9)) {
        bool expected = t.family == Family::A || t.family == Family::C;
        CHECK(h1_real_trivial(t) == expected);
    }
}

TEST_CASE("fixture file matches the built-in exceptional table") {
    auto from_file = load_form_table(std::string(CHEVALLEY_DATA_DIR) + "/exceptional_forms.txt");
    CHECK(from_file == builtin_exceptional_forms());
}

TEST_CASE("form table parser validation") {
    CHECK(parse_form_table("# only comments\n\n").empty());
    CHECK(parse_form_table("G2;compact;0;0;0\n").size() == 1);
    CHECK_THROWS_AS(parse_form_table("G2;compact;0;0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form_table("X9;bad;0;0;0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form_table("G2;compact;7;0;0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form_table("G2;compact;0;2;0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form_table("G2;notsplit;0;0;1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form_table("G2;;0;0;0\n"), std::invalid_argument);
    CHECK_THROWS_AS(load_form_table("/nonexistent/table.txt"), std::invalid_argument);
}
