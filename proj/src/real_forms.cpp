#include "chevalley/real_forms.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "chevalley/qforms.hpp"

namespace chevalley {

bool RealFormRecord::zero_invariant() const {
    return std::all_of(h2_invariant.begin(), h2_invariant.end(), [](int b) { return b == 0; });
}

namespace {

DiagonalForm pq_form(int p, int q) {
    std::vector<Rational> coeffs;
    coeffs.insert(coeffs.end(), p, Rational(1));
    coeffs.insert(coeffs.end(), q, Rational(-1));
    return DiagonalForm(std::move(coeffs));
}

int real_hasse(int p, int q) {
    return local_invariants(pq_form(p, q), Place::real(0)).hasse;
}

int real_disc_sign(int p, int q) {
    return local_invariants(pq_form(p, q), Place::real(0)).disc_class > 0 ? 1 : -1;
}

// Invariant bit of Spin(p,q) relative to the split form Spin(sp,sq):
// the real Hasse invariant difference of the diagonal forms, after
// scaling the (p,q) form by -1 if needed so the discriminants match.
// For odd dimension the scaling swaps p and q; for even dimension the
// inner condition p = q (mod 4) already matches the discriminants.
int spin_bit(int p, int q, int sp, int sq) {
    if (real_disc_sign(p, q) != real_disc_sign(sp, sq)) std::swap(p, q);
    if (real_disc_sign(p, q) != real_disc_sign(sp, sq))
        throw std::logic_error("discriminant mismatch in spin_bit");
    return real_hasse(p, q) != real_hasse(sp, sq) ? 1 : 0;
}

std::string spin_name(int p, int q) {
    return "Spin(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::vector<RealFormRecord> forms_A(const CartanType& t) {
    std::vector<RealFormRecord> out;
    const int n = t.rank;
    out.push_back({t, "SL_" + std::to_string(n + 1) + "(R)", n, {0}, true});
    if (n % 2 == 1) {
        const int m = (n + 1) / 2;  // SL_m(H), real rank m - 1
        out.push_back({t, "SL_" + std::to_string(m) + "(H)", m - 1, {1}, false});
    }
    return out;
}

std::vector<RealFormRecord> forms_B(const CartanType& t) {
    std::vector<RealFormRecord> out;
    const int n = t.rank;
    out.push_back({t, spin_name(n + 1, n), n, {0}, true});
    for (int q = n - 1; q >= 0; --q) {
        const int p = 2 * n + 1 - q;
        out.push_back({t, spin_name(p, q), q, {spin_bit(p, q, n + 1, n)}, false});
    }
    return out;
}

std::vector<RealFormRecord> forms_C(const CartanType& t) {
    std::vector<RealFormRecord> out;
    const int n = t.rank;
    out.push_back({t, "Sp_" + std::to_string(2 * n) + "(R)", n, {0}, true});
    for (int q = n / 2; q >= 1; --q) {
        const int p = n - q;
        if (p < q) continue;
        out.push_back({t, "Sp(" + std::to_string(p) + "," + std::to_string(q) + ")", q,
                       {1}, false});
    }
    return out;
}

std::vector<RealFormRecord> forms_D(const CartanType& t) {
    std::vector<RealFormRecord> out;
    const int n = t.rank;
    const bool two_coordinates = n % 2 == 0;
    auto inv = [&](int bit) {
        return two_coordinates ? std::vector<int>{bit, 0} : std::vector<int>{bit};
    };
    out.push_back({t, spin_name(n, n), n, inv(0), true});
    for (int q = n - 1; q >= 0; --q) {
        const int p = 2 * n - q;
        if ((p - q) % 4 != 0) continue;  // outer twist otherwise
        out.push_back({t, spin_name(p, q), q, inv(spin_bit(p, q, n, n)), false});
    }
    return out;
}

}  // namespace

const std::vector<RealFormRecord>& builtin_exceptional_forms() {
    static const std::vector<RealFormRecord> table = [] {
        std::vector<RealFormRecord> v;
        auto t = [](char f, int r) { return make_type(f, r); };
        v.push_back({t('E', 6), "E6(6)", 6, {0}, true});
        v.push_back({t('E', 6), "E6(-26)", 2, {0}, false});   // quasicompact inner form
        v.push_back({t('E', 7), "E7(7)", 7, {0}, true});
        v.push_back({t('E', 7), "E7(-25)", 3, {0}, false});   // hermitian inner form
        v.push_back({t('E', 8), "E8(8)", 8, {0}, true});
        v.push_back({t('E', 8), "E8(-24)", 4, {0}, false});
        v.push_back({t('E', 8), "compact", 0, {0}, false});
        v.push_back({t('F', 4), "F4(4)", 4, {0}, true});
        v.push_back({t('F', 4), "F4(-20)", 1, {0}, false});
        v.push_back({t('F', 4), "compact", 0, {0}, false});
        v.push_back({t('G', 2), "G2(2)", 2, {0}, true});
        v.push_back({t('G', 2), "compact", 0, {0}, false});
        return v;
    }();
    return table;
}

std::vector<RealFormRecord> inner_real_forms(const CartanType& t) {
    if (!t.admissible())
        throw std::invalid_argument("inadmissible Cartan type " + t.to_string());
    switch (t.family) {
        case Family::A: return forms_A(t);
        case Family::B: return forms_B(t);
        case Family::C: return forms_C(t);
        case Family::D: return forms_D(t);
        default: break;
    }
    std::vector<RealFormRecord> out;
    for (const auto& r : builtin_exceptional_forms())
        if (r.type == t) out.push_back(r);
    return out;
}

bool h1_real_trivial(const CartanType& t) {
    if (!t.admissible())
        throw std::invalid_argument("inadmissible Cartan type " + t.to_string());
    return t.family == Family::A || t.family == Family::C;
}

std::vector<RealFormRecord> parse_form_table(const std::string& text) {
    std::vector<RealFormRecord> out;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ';')) fields.push_back(field);
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("form table line " + std::to_string(lineno) + ": " + why);
        };
        if (fields.size() != 5) fail("expected 5 ';'-separated fields");

        const std::string& ts = fields[0];
        if (ts.size() < 2) fail("bad type " + ts);
        RealFormRecord r;
        try {
            r.type = make_type(ts[0], std::stoi(ts.substr(1)));
        } catch (const std::exception& e) {
            fail(e.what());
        }
        r.name = fields[1];
        if (r.name.empty()) fail("empty name");
        try {
            r.real_rank = std::stoi(fields[2]);
        } catch (const std::exception&) {
            fail("bad real rank " + fields[2]);
        }
        if (r.real_rank < 0 || r.real_rank > r.type.rank) fail("real rank out of range");
        if (fields[3].empty() || fields[3].size() > 2) fail("inv_bits must have 1 or 2 bits");
        for (char c : fields[3]) {
            if (c != '0' && c != '1') fail("inv_bits must be 0/1");
            r.h2_invariant.push_back(c - '0');
        }
        if (fields[4] != "0" && fields[4] != "1") fail("is_split must be 0 or 1");
        r.is_split = fields[4] == "1";
        if (r.is_split && (r.real_rank != r.type.rank || !r.zero_invariant()))
            fail("split record must have full rank and zero invariant");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RealFormRecord> load_form_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open form table: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_form_table(buffer.str());
}

}  // namespace chevalley
