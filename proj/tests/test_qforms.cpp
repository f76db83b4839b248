#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "chevalley/qforms.hpp"
#include "oracles.hpp"

using namespace chevalley;

namespace {

const std::vector<long long> kSmallPrimes = {2, 3, 5, 7, 11, 13};

DiagonalForm ones_form(int pos, int neg) {
    std::vector<Rational> c;
    c.insert(c.end(), pos, Rational(1));
    c.insert(c.end(), neg, Rational(-1));
    return DiagonalForm(std::move(c));
}

Rational random_rational(std::mt19937& rng) {
    long long num = static_cast<long long>(rng() % 50) + 1;
    long long den = static_cast<long long>(rng() % 50) + 1;
    if (rng() % 2) num = -num;
    return Rational(num, den);
}

}  // namespace

TEST_CASE("hilbert symbol pinned values") {
    Place real = Place::real(0);
    // a = 1 is represented by z = x = 1, y = 0 at every place
    for (long long b : {-7, -1, 2, 3, 10})
        for (const Place& v : {real, Place::rational_prime(2), Place::rational_prime(7)})
            CHECK(hilbert_symbol(Rational(1), Rational(b), v) == 1);

    CHECK(hilbert_symbol(Rational(-1), Rational(-1), real) == -1);
    // frozen from the solvability search oracle
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), Place::rational_prime(2)) == -1);
    CHECK(oracles::HilbertSearchOracle(2).symbol(-1, -1) == -1);
    // 2 is a quadratic nonresidue mod 5
    CHECK(hilbert_symbol(Rational(2), Rational(5), Place::rational_prime(5)) == -1);
    CHECK(oracles::HilbertSearchOracle(5).symbol(2, 5) == -1);
}

TEST_CASE("hilbert symbol input validation") {
    CHECK_THROWS_AS(hilbert_symbol(Rational(0), Rational(1), Place::real(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hilbert_symbol(Rational(1), Rational(2), Place::rational_prime(6)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hilbert_symbol(Rational(1), Rational(2), Place::complex(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hilbert_symbol(Rational(1), Rational(2), Place::finite("q")),
                    std::invalid_argument);
}

TEST_CASE("formula agrees with the solvability oracle on small inputs") {
    for (long long p : kSmallPrimes) {
        oracles::HilbertSearchOracle oracle(p);
        Place v = Place::rational_prime(p);
        for (long long a = -20; a <= 20; ++a) {
            if (a == 0) continue;
            for (long long b = -20; b <= 20; ++b) {
                if (b == 0) continue;
                CAPTURE(p);
                CAPTURE(a);
                CAPTURE(b);
                REQUIRE(hilbert_symbol(Rational(a), Rational(b), v) == oracle.symbol(a, b));
            }
        }
    }
    for (long long a = -10; a <= 10; ++a)
        for (long long b = -10; b <= 10; ++b) {
            if (a == 0 || b == 0) continue;
            CHECK(hilbert_symbol(Rational(a), Rational(b), Place::real(0)) ==
                  oracles::hilbert_real_by_inspection(a, b));
        }
}

TEST_CASE("product formula over 200 seeded rational pairs") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        std::set<long long> primes{2};
        auto collect = [&](long long n) {
            if (n < 0) n = -n;
            for (long long d = 2; d * d <= n; ++d) {
                if (n % d) continue;
                while (n % d == 0) n /= d;
                primes.insert(d);
            }
            if (n > 1) primes.insert(n);
        };
        collect(a.num()); collect(a.den());
        collect(b.num()); collect(b.den());
        int product = hilbert_symbol(a, b, Place::real(0));
        for (long long p : primes) product *= hilbert_symbol(a, b, Place::rational_prime(p));
        CAPTURE(a.to_string());
        CAPTURE(b.to_string());
        CHECK(product == 1);
    }
}

TEST_CASE("symmetry and bimultiplicativity on the same seeded set") {
    std::mt19937 rng(424242);
    std::vector<Rational> pool;
    for (int i = 0; i < 60; ++i) pool.push_back(random_rational(rng));
    std::vector<Place> places{Place::real(0)};
    for (long long p : kSmallPrimes) places.push_back(Place::rational_prime(p));

    for (size_t i = 0; i + 2 < pool.size(); i += 3) {
        const Rational &a = pool[i], &a2 = pool[i + 1], &b = pool[i + 2];
        for (const Place& v : places) {
            CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
            CHECK(hilbert_symbol(a * a2, b, v) ==
                  hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v));
        }
    }
}

TEST_CASE("local invariants pinned values") {
    DiagonalForm plus = ones_form(4, 0);
    DiagonalForm minus = ones_form(0, 4);

    for (const Place& v : {Place::real(0), Place::rational_prime(2), Place::rational_prime(5)})
        CHECK(local_invariants(plus, v) == LocalInvariantTriple{4, 1, 1});

    // six pairwise (-1,-1) symbols at p=3 are all +1
    CHECK(local_invariants(minus, Place::rational_prime(3)) == LocalInvariantTriple{4, 1, 1});
    // over R: (-1,-1) = -1 and there are six pairs, so the product is +1
    CHECK(local_invariants(minus, Place::real(0)) == LocalInvariantTriple{4, 1, 1});
    CHECK(signature(minus) == std::pair<int, int>{0, 4});
}

TEST_CASE("signature counts") {
    CHECK(signature(ones_form(4, 0)) == std::pair<int, int>{4, 0});
    CHECK(signature(parse_diagonal_form("1,-1")) == std::pair<int, int>{1, 1});
    CHECK(signature(ones_form(2, 9)) == std::pair<int, int>{2, 9});
}

TEST_CASE("squarefree parts") {
    CHECK(squarefree_part(Rational(12)) == 3);
    CHECK(squarefree_part(Rational(-18, 5)) == -10);
    CHECK(squarefree_part(Rational(4, 9)) == 1);
    CHECK(squarefree_part(Rational(1)) == 1);
    CHECK_THROWS_AS(squarefree_part(Rational(0)), std::invalid_argument);
}

TEST_CASE("square tests agree between the two routes") {
    std::vector<long long> squarefree;
    for (long long d = -30; d <= 30; ++d) {
        if (d == 0) continue;
        if (squarefree_part(Rational(d)) == d) squarefree.push_back(d);
    }
    std::vector<Place> places{Place::real(0)};
    for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
        places.push_back(Place::rational_prime(p));
    for (long long d : squarefree)
        for (const Place& v : places) {
            CAPTURE(d);
            CAPTURE(v.to_string());
            CHECK(is_square_in_completion(d, v) == is_square_in_completion_via_symbols(d, v));
        }
}

TEST_CASE("local isometry of the definite pair") {
    DiagonalForm plus = ones_form(4, 0);
    DiagonalForm minus = ones_form(0, 4);
    for (long long p : {2, 3, 5, 7, 11, 97})
        CHECK(locally_isometric(plus, minus, Place::rational_prime(p)));
    CHECK_FALSE(locally_isometric(plus, minus, Place::real(0)));
    CHECK(locally_isometric(plus, plus, Place::real(0)));
    CHECK(locally_isometric(minus, minus, Place::rational_prime(3)));
}

TEST_CASE("local isometry is an equivalence relation") {
    std::vector<DiagonalForm> forms;
    const long long vals[] = {1, -1, 2, -2, 3, 5};
    for (long long a : vals)
        for (long long b : vals)
            for (long long c : {1LL, -1LL, 6LL})
                forms.push_back(DiagonalForm({Rational(a), Rational(b), Rational(c)}));
    std::vector<Place> places{Place::real(0), Place::rational_prime(2),
                              Place::rational_prime(3), Place::rational_prime(5)};
    std::mt19937 rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        const auto& q1 = forms[rng() % forms.size()];
        const auto& q2 = forms[rng() % forms.size()];
        const auto& q3 = forms[rng() % forms.size()];
        const Place& v = places[rng() % places.size()];
        CHECK(locally_isometric(q1, q1, v));
        CHECK(locally_isometric(q1, q2, v) == locally_isometric(q2, q1, v));
        if (locally_isometric(q1, q2, v) && locally_isometric(q2, q3, v))
            CHECK(locally_isometric(q1, q3, v));
    }
}

TEST_CASE("finite isometry for the sign-swap pairs") {
    // swapping four signs preserves every finite-place invariant
    DiagonalForm g5 = ones_form(6, 5);
    DiagonalForm h5 = ones_form(2, 9);
    CHECK(isometric_at_all_finite(g5, h5));
    CHECK(signature(g5) != signature(h5));

    CHECK_FALSE(isometric_at_all_finite(parse_diagonal_form("1,1"), parse_diagonal_form("1,-1")));
    CHECK(isometric_at_all_finite(g5, g5));
}

TEST_CASE("checking set covers the coefficient primes") {
    DiagonalForm q1 = parse_diagonal_form("1,15,-7/2");
    DiagonalForm q2 = parse_diagonal_form("3,5,-14");
    CHECK(finite_checking_set(q1, q2) == std::vector<long long>{2, 3, 5, 7});
}

TEST_CASE("form parsing") {
    CHECK(parse_diagonal_form("1,-1,3/5").dim() == 3);
    CHECK_THROWS_AS(parse_diagonal_form("1,0,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagonal_form(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagonal_form("1,x"), std::invalid_argument);
}
