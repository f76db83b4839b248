#pragma once

#include <compare>
#include <string>
#include <vector>

namespace chevalley {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A Cartan-Killing type, e.g. B3 or E7. Admissible ranks:
//   A: n >= 1,  B: n >= 2,  C: n >= 2,  D: n >= 4,
//   E: n in {6,7,8},  F: n = 4,  G: n = 2,
// all capped at rank 25. Low-rank aliases of other families (B_1, C_1,
// D_2, D_3, ...) are rejected rather than normalized.
struct CartanType {
    Family family{Family::A};
    int rank = 0;

    static constexpr int kMaxRank = 25;

    bool admissible() const;
    std::string to_string() const;  // "B3"

    auto operator<=>(const CartanType&) const = default;
};

// Validating constructor; throws std::invalid_argument on bad input.
CartanType make_type(char family, int rank);

// Square integer matrix indexed by the simple roots. Diagonal entries are
// 2, off-diagonal entries are <= 0 and vanish symmetrically, and the
// determinant is positive (finite type).
class CartanMatrix {
public:
    explicit CartanMatrix(std::vector<std::vector<long long>> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    long long at(int i, int j) const { return entries_[i][j]; }
    const std::vector<std::vector<long long>>& entries() const { return entries_; }

    long long determinant() const;

private:
    std::vector<std::vector<long long>> entries_;
};

// Finite abelian group given by its invariant factors d1 | d2 | ..., each
// >= 2. The empty list is the trivial group.
struct FiniteAbelianGroup {
    std::vector<long long> invariant_factors;

    unsigned long long order() const;
    long long exponent() const;  // 1 for the trivial group
    bool trivial() const { return invariant_factors.empty(); }
    std::string to_string() const;  // "Z/2 x Z/4", "1"

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

// The standard Cartan matrix of t under the Bourbaki numbering of simple
// roots (documented in the implementation and in the README).
CartanMatrix cartan_matrix(const CartanType& t);

// Invariant factors of coker(cartan_matrix(t) : Z^n -> Z^n), computed by
// Smith normal form over the integers. This is the fundamental group
// P/Q, i.e. the center of the simply-connected group of type t.
FiniteAbelianGroup center(const CartanType& t);

// Order of the group of permutations of the simple roots preserving the
// Cartan matrix, found by exhaustive backtracking search.
int dynkin_symmetry_order(const CartanType& t);

// Full Smith normal form diagonal d1 | d2 | ... | dn (nonnegative) of an
// arbitrary square integer matrix. Exact 64-bit arithmetic.
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);

// Exact integer determinant (Bareiss elimination).
long long integer_determinant(std::vector<std::vector<long long>> m);

}  // namespace chevalley
