#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chevalley/number_field.hpp"
#include "chevalley/rational.hpp"

namespace chevalley {

// A nondegenerate diagonal quadratic form <a1, ..., an> over Q.
struct DiagonalForm {
    std::vector<Rational> coefficients;

    explicit DiagonalForm(std::vector<Rational> coeffs);

    int dim() const { return static_cast<int>(coefficients.size()); }
    std::string to_string() const;  // "1,1,-1"
};

// Parses a comma-separated list of rationals, e.g. "1,-1,3/5".
DiagonalForm parse_diagonal_form(const std::string& text);

// Local classification data of a diagonal form: dimension, squarefree
// discriminant representative, and Hasse invariant at the given place.
struct LocalInvariantTriple {
    int dim = 0;
    long long disc_class = 1;  // squarefree integer with sign
    int hasse = 1;             // +1 or -1

    friend bool operator==(const LocalInvariantTriple&, const LocalInvariantTriple&) = default;
};

// Hilbert symbol (a,b)_v for nonzero rationals at the real place or at a
// rational prime: +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution
// over the completion. Computed by the valuation / Legendre-symbol
// formulas, with the separate p = 2 case.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

// Squarefree integer representative of the square class of a nonzero
// rational (trial-division factorization; inputs beyond 10^12 in
// numerator*denominator are rejected).
long long squarefree_part(const Rational& r);

// Whether the squarefree integer d is a square in the completion at v
// (real place or rational prime), decided by valuation and unit tests.
bool is_square_in_completion(long long d, const Place& v);

// Same question answered through Hilbert-symbol probes against a basis of
// the local square-class group. Kept as a second, independently derived
// route; the two are compared in the test suite.
bool is_square_in_completion_via_symbols(long long d, const Place& v);

// dim, squarefree discriminant, and the Hasse invariant
// prod_{i<j} (a_i, a_j)_v  (the product-over-pairs convention is fixed
// project-wide; only equality comparisons matter downstream).
LocalInvariantTriple local_invariants(const DiagonalForm& q, const Place& v);

// Counts of positive and negative coefficients.
std::pair<int, int> signature(const DiagonalForm& q);

// Isometry over the completion at v: at a finite place equal dimension,
// discriminant square class and Hasse invariant; at the real place equal
// signatures.
bool locally_isometric(const DiagonalForm& q1, const DiagonalForm& q2, const Place& v);

// The places that can tell two forms apart: 2 and every odd prime
// dividing a numerator or denominator of a coefficient of either form.
std::vector<long long> finite_checking_set(const DiagonalForm& q1, const DiagonalForm& q2);

// Isometry over Q_p for every finite prime p, decided on the finite
// checking set (see the note in the implementation).
bool isometric_at_all_finite(const DiagonalForm& q1, const DiagonalForm& q2);

}  // namespace chevalley
