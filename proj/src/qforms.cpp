#include "chevalley/qforms.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chevalley {

DiagonalForm::DiagonalForm(std::vector<Rational> coeffs) : coefficients(std::move(coeffs)) {
    if (coefficients.empty()) throw std::invalid_argument("empty diagonal form");
    for (const auto& c : coefficients)
        if (c.is_zero()) throw std::invalid_argument("zero coefficient in diagonal form");
}

std::string DiagonalForm::to_string() const {
    std::string s;
    for (size_t i = 0; i < coefficients.size(); ++i) {
        if (i) s += ",";
        s += coefficients[i].to_string();
    }
    return s;
}

DiagonalForm parse_diagonal_form(const std::string& text) {
    std::vector<Rational> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        coeffs.push_back(Rational::parse(item));
    return DiagonalForm(std::move(coeffs));
}

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_q_place(const Place& v) {
    if (v.kind == Place::Kind::real) return;
    if (v.kind == Place::Kind::rational_prime) {
        if (!is_prime(v.prime))
            throw std::invalid_argument("place p=" + std::to_string(v.prime) + " is not prime");
        return;
    }
    throw std::invalid_argument("expected a place of Q (real or rational prime)");
}

int valuation(long long x, long long p) {
    int v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

long long powmod(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = static_cast<long long>(static_cast<__int128>(r) * base % mod);
        base = static_cast<long long>(static_cast<__int128>(base) * base % mod);
        exp >>= 1;
    }
    return r;
}

// Legendre symbol of a unit u mod an odd prime p, via Euler's criterion.
int legendre(long long u, long long p) {
    long long r = powmod(u, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

struct PadicParts {
    int val;          // p-adic valuation
    long long unum;   // numerator of the unit part (coprime to p)
    long long uden;   // denominator of the unit part (coprime to p)
};

PadicParts split_at(const Rational& a, long long p) {
    long long n = a.num(), d = a.den();
    int vn = valuation(n < 0 ? -n : n, p);
    int vd = valuation(d, p);
    for (int i = 0; i < vn; ++i) n /= p;
    for (int i = 0; i < vd; ++i) d /= p;
    return {vn - vd, n, d};
}

// Legendre symbol of the unit part n/d mod odd p: (n/d | p) = (n*d | p).
int legendre_unit(const PadicParts& u, long long p) {
    long long prod = static_cast<long long>(
        static_cast<__int128>(((u.unum % p) + p) % p) * (((u.uden % p) + p) % p) % p);
    return legendre(prod, p);
}

// u mod 8 for a 2-adic unit n/d: d is odd, so d^{-1} = d (mod 8) and
// n/d = n*d (mod 8).
int unit_mod8(const PadicParts& u) {
    long long m = ((u.unum % 8) + 8) % 8;
    m = m * (((u.uden % 8) + 8) % 8) % 8;
    return static_cast<int>(m);
}

int eps2(int u_mod8) { return (u_mod8 % 4 == 3) ? 1 : 0; }           // (u-1)/2 mod 2
int omega2(int u_mod8) { return (u_mod8 == 3 || u_mod8 == 5) ? 1 : 0; }  // (u^2-1)/8 mod 2

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("hilbert_symbol needs nonzero arguments");
    require_q_place(v);

    if (v.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;

    const long long p = v.prime;
    PadicParts pa = split_at(a, p);
    PadicParts pb = split_at(b, p);
    const int alpha = pa.val, beta = pb.val;

    if (p == 2) {
        int u = unit_mod8(pa), w = unit_mod8(pb);
        int e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
        return (e % 2 == 0) ? 1 : -1;
    }
    int sym = 1;
    if ((static_cast<long long>(alpha) * beta * ((p - 1) / 2)) % 2 != 0) sym = -sym;
    if (beta % 2 != 0) sym *= legendre_unit(pa, p);
    if (alpha % 2 != 0) sym *= legendre_unit(pb, p);
    return sym;
}

long long squarefree_part(const Rational& r) {
    if (r.is_zero()) throw std::invalid_argument("squarefree_part of zero");
    __int128 prod = static_cast<__int128>(r.num()) * r.den();
    __int128 abs_prod = prod < 0 ? -prod : prod;
    if (abs_prod > 1000000000000LL)
        throw std::invalid_argument("coefficient too large for exact factorization");
    long long n = static_cast<long long>(abs_prod);
    long long result = 1;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        if (e % 2) result *= d;
    }
    result *= n;  // leftover prime
    return prod < 0 ? -result : result;
}

bool is_square_in_completion(long long d, const Place& v) {
    if (d == 0) throw std::invalid_argument("square test of zero");
    require_q_place(v);
    if (v.is_real()) return d > 0;
    const long long p = v.prime;
    PadicParts parts = split_at(Rational(d), p);
    if (parts.val % 2 != 0) return false;
    if (p == 2) return unit_mod8(parts) == 1;
    return legendre_unit(parts, p) == 1;
}

bool is_square_in_completion_via_symbols(long long d, const Place& v) {
    if (d == 0) throw std::invalid_argument("square test of zero");
    require_q_place(v);
    if (v.is_real()) return hilbert_symbol(Rational(d), Rational(-1), v) == 1;
    const long long p = v.prime;
    // Probe against generators of Q_p^* / (Q_p^*)^2: {-1, 2, 5} for p = 2,
    // {p, u} with u a quadratic nonresidue unit for odd p. The Hilbert
    // pairing is nondegenerate on the square-class group, so d is a square
    // exactly when it pairs trivially with every generator.
    std::vector<Rational> probes;
    if (p == 2) {
        probes = {Rational(-1), Rational(2), Rational(5)};
    } else {
        long long u = 2;
        while (legendre(u, p) == 1) ++u;
        probes = {Rational(p), Rational(u)};
    }
    for (const auto& probe : probes)
        if (hilbert_symbol(Rational(d), probe, v) != 1) return false;
    return true;
}

LocalInvariantTriple local_invariants(const DiagonalForm& q, const Place& v) {
    require_q_place(v);
    LocalInvariantTriple t;
    t.dim = q.dim();
    Rational prod(1);
    for (const auto& c : q.coefficients) prod = prod * c;
    t.disc_class = squarefree_part(prod);
    t.hasse = 1;
    for (int i = 0; i < q.dim(); ++i)
        for (int j = i + 1; j < q.dim(); ++j)
            t.hasse *= hilbert_symbol(q.coefficients[i], q.coefficients[j], v);
    return t;
}

std::pair<int, int> signature(const DiagonalForm& q) {
    int pos = 0, neg = 0;
    for (const auto& c : q.coefficients) (c.sign() > 0 ? pos : neg)++;
    return {pos, neg};
}

bool locally_isometric(const DiagonalForm& q1, const DiagonalForm& q2, const Place& v) {
    require_q_place(v);
    if (v.is_real()) return signature(q1) == signature(q2);
    LocalInvariantTriple a = local_invariants(q1, v);
    LocalInvariantTriple b = local_invariants(q2, v);
    if (a.dim != b.dim || a.hasse != b.hasse) return false;
    if (a.disc_class == b.disc_class) return true;
    long long rel = squarefree_part(Rational(a.disc_class) * Rational(b.disc_class));
    return is_square_in_completion(rel, v);
}

std::vector<long long> finite_checking_set(const DiagonalForm& q1, const DiagonalForm& q2) {
    std::set<long long> primes{2};
    auto collect = [&](long long n) {
        if (n < 0) n = -n;
        for (long long d = 2; d * d <= n; ++d) {
            if (n % d) continue;
            while (n % d == 0) n /= d;
            if (d % 2) primes.insert(d);
        }
        if (n > 2) primes.insert(n);
    };
    for (const DiagonalForm* q : {&q1, &q2})
        for (const auto& c : q->coefficients) { collect(c.num()); collect(c.den()); }
    return {primes.begin(), primes.end()};
}

bool isometric_at_all_finite(const DiagonalForm& q1, const DiagonalForm& q2) {
    // The conjunction over {2} and the odd primes dividing some coefficient
    // decides isometry at every finite place: elsewhere all coefficients
    // are p-adic units, so both Hasse invariants are +1 and both
    // discriminants are units. Equality of the discriminant classes at
    // every checked place forces the squarefree discriminants to be equal
    // as integers (any difference survives at 2 or at one of its own odd
    // prime factors, and those are all checked), and equal discriminants
    // settle the remaining places.
    for (long long p : finite_checking_set(q1, q2))
        if (!locally_isometric(q1, q2, Place::rational_prime(p))) return false;
    return true;
}

}  // namespace chevalley
