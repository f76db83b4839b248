#include "chevalley/lie_data.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "chevalley/rational.hpp"

namespace chevalley {

bool CartanType::admissible() const {
    if (rank > kMaxRank) return false;
    switch (family) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 2;
        case Family::C: return rank >= 2;
        case Family::D: return rank >= 4;
        case Family::E: return rank >= 6 && rank <= 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

std::string CartanType::to_string() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanType make_type(char family, int rank) {
    const std::string families = "ABCDEFG";
    if (families.find(family) == std::string::npos)
        throw std::invalid_argument(std::string("unknown family: ") + family);
    CartanType t{static_cast<Family>(family), rank};
    if (!t.admissible())
        throw std::invalid_argument("inadmissible Cartan type " + t.to_string());
    return t;
}

CartanMatrix::CartanMatrix(std::vector<std::vector<long long>> entries)
    : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n == 0) throw std::invalid_argument("empty Cartan matrix");
    for (const auto& row : entries_)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("Cartan matrix is not square");
    for (int i = 0; i < n; ++i) {
        if (entries_[i][i] != 2)
            throw std::invalid_argument("Cartan matrix diagonal entry != 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (entries_[i][j] > 0)
                throw std::invalid_argument("positive off-diagonal Cartan entry");
            if ((entries_[i][j] == 0) != (entries_[j][i] == 0))
                throw std::invalid_argument("asymmetric zero pattern in Cartan matrix");
        }
    }
    if (determinant() <= 0)
        throw std::invalid_argument("Cartan matrix must have positive determinant");
}

long long CartanMatrix::determinant() const { return integer_determinant(entries_); }

unsigned long long FiniteAbelianGroup::order() const {
    unsigned long long o = 1;
    for (long long d : invariant_factors) o *= static_cast<unsigned long long>(d);
    return o;
}

long long FiniteAbelianGroup::exponent() const {
    return invariant_factors.empty() ? 1 : invariant_factors.back();
}

std::string FiniteAbelianGroup::to_string() const {
    if (invariant_factors.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + std::to_string(invariant_factors[i]);
    }
    return s;
}

// Bourbaki numbering of the simple roots:
//   A_n: path 1 - 2 - ... - n
//   B_n: path 1 - ... - (n-1) => n, node n short; entry (n-1,n) = -2
//   C_n: path 1 - ... - (n-1) <= n, node n long;  entry (n,n-1) = -2
//   D_n: path 1 - ... - (n-2), nodes n-1 and n both attached to n-2
//   E_n: path 1 - 3 - 4 - 5 - 6 (- 7 (- 8)), node 2 attached to 4
//   F_4: 1 - 2 => 3 - 4; entry (2,3) = -2
//   G_2: entry (1,2) = -1, entry (2,1) = -3
CartanMatrix cartan_matrix(const CartanType& t) {
    if (!t.admissible())
        throw std::invalid_argument("inadmissible Cartan type " + t.to_string());
    const int n = t.rank;
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 2;
    auto bond = [&](int i, int j) { m[i][j] = -1; m[j][i] = -1; };  // 1-based below

    auto path = [&](int upto) {
        for (int i = 1; i < upto; ++i) bond(i - 1, i);
    };

    switch (t.family) {
        case Family::A:
            path(n);
            break;
        case Family::B:
            path(n);
            m[n - 2][n - 1] = -2;
            break;
        case Family::C:
            path(n);
            m[n - 1][n - 2] = -2;
            break;
        case Family::D:
            path(n - 1);
            bond(n - 3, n - 1);
            break;
        case Family::E:
            // chain 1-3-4-5-6(-7)(-8) with 2 hanging off 4 (0-based: 0,2,3,4,5,6,7 and 1-3)
            bond(0, 2);
            for (int i = 2; i < n - 1; ++i) bond(i, i + 1);
            bond(1, 3);
            break;
        case Family::F:
            path(4);
            m[1][2] = -2;
            break;
        case Family::G:
            m[0][1] = -1;
            m[1][0] = -3;
            break;
    }
    return CartanMatrix(std::move(m));
}

long long integer_determinant(std::vector<std::vector<long long>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] -
                             static_cast<__int128>(m[i][k]) * m[k][j];
                m[i][j] = detail::narrow_i128(v / prev, "determinant overflow");
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

void checked_add_row(std::vector<std::vector<long long>>& m, int dst, int src, long long f) {
    for (auto j = 0u; j < m[dst].size(); ++j) {
        __int128 v = static_cast<__int128>(m[dst][j]) + static_cast<__int128>(f) * m[src][j];
        m[dst][j] = detail::narrow_i128(v, "Smith normal form overflow");
    }
}

void checked_add_col(std::vector<std::vector<long long>>& m, int dst, int src, long long f) {
    for (auto i = 0u; i < m.size(); ++i) {
        __int128 v = static_cast<__int128>(m[i][dst]) + static_cast<__int128>(f) * m[i][src];
        m[i][dst] = detail::narrow_i128(v, "Smith normal form overflow");
    }
}

}  // namespace

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("smith_diagonal expects a square matrix");

    for (int s = 0; s < n; ++s) {
        for (;;) {
            // Locate the smallest nonzero entry of the trailing block.
            int pi = -1, pj = -1;
            long long best = 0;
            for (int i = s; i < n; ++i)
                for (int j = s; j < n; ++j) {
                    long long a = m[i][j] < 0 ? -m[i][j] : m[i][j];
                    if (a != 0 && (pi < 0 || a < best)) { best = a; pi = i; pj = j; }
                }
            if (pi < 0) break;  // trailing block is zero
            std::swap(m[s], m[pi]);
            for (int i = 0; i < n; ++i) std::swap(m[i][s], m[i][pj]);

            bool reduced = true;
            for (int i = s + 1; i < n; ++i)
                if (m[i][s] != 0) { checked_add_row(m, i, s, -(m[i][s] / m[s][s])); reduced = false; }
            for (int j = s + 1; j < n; ++j)
                if (m[s][j] != 0) { checked_add_col(m, j, s, -(m[s][j] / m[s][s])); reduced = false; }
            if (!reduced) continue;

            bool clean = true;
            for (int i = s + 1; i < n && clean; ++i)
                if (m[i][s] != 0) clean = false;
            for (int j = s + 1; j < n && clean; ++j)
                if (m[s][j] != 0) clean = false;
            if (!clean) continue;

            // Pivot must divide the rest of the block; fold a bad row in and retry.
            int bi = -1;
            for (int i = s + 1; i < n && bi < 0; ++i)
                for (int j = s + 1; j < n; ++j)
                    if (m[i][j] % m[s][s] != 0) { bi = i; break; }
            if (bi < 0) break;
            checked_add_row(m, s, bi, 1);
        }
        if (m[s][s] < 0) m[s][s] = -m[s][s];
    }

    std::vector<long long> d(n);
    for (int i = 0; i < n; ++i) d[i] = m[i][i];
    // Zeros (rank deficiency) sort to the end of the divisibility chain.
    std::stable_partition(d.begin(), d.end(), [](long long x) { return x != 0; });
    return d;
}

FiniteAbelianGroup center(const CartanType& t) {
    auto d = smith_diagonal(cartan_matrix(t).entries());
    FiniteAbelianGroup g;
    for (long long x : d)
        if (x >= 2) g.invariant_factors.push_back(x);
    return g;
}

namespace {

bool extension_consistent(const CartanMatrix& m, const std::vector<int>& image, int next) {
    const int i = static_cast<int>(image.size());
    for (int k = 0; k < i; ++k) {
        if (m.at(image[k], next) != m.at(k, i)) return false;
        if (m.at(next, image[k]) != m.at(i, k)) return false;
    }
    return true;
}

int count_symmetries(const CartanMatrix& m, std::vector<int>& image, std::vector<bool>& used) {
    const int n = m.size();
    if (static_cast<int>(image.size()) == n) return 1;
    int total = 0;
    for (int j = 0; j < n; ++j) {
        if (used[j] || !extension_consistent(m, image, j)) continue;
        used[j] = true;
        image.push_back(j);
        total += count_symmetries(m, image, used);
        image.pop_back();
        used[j] = false;
    }
    return total;
}

}  // namespace

int dynkin_symmetry_order(const CartanType& t) {
    CartanMatrix m = cartan_matrix(t);
    std::vector<int> image;
    std::vector<bool> used(m.size(), false);
    return count_symmetries(m, image, used);
}

}  // namespace chevalley
