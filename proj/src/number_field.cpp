#include "chevalley/number_field.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chevalley {

std::string tristate_name(TriState s) {
    switch (s) {
        case TriState::yes: return "yes";
        case TriState::no: return "no";
        case TriState::unknown: return "unknown";
    }
    return "unknown";
}

Place Place::real(int i) {
    Place p; p.kind = Kind::real; p.index = i; return p;
}
Place Place::complex(int i) {
    Place p; p.kind = Kind::complex; p.index = i; return p;
}
Place Place::rational_prime(long long q) {
    Place p; p.kind = Kind::rational_prime; p.prime = q; return p;
}
Place Place::finite(std::string label) {
    Place p; p.kind = Kind::finite_abstract; p.label = std::move(label); return p;
}

std::string Place::to_string() const {
    switch (kind) {
        case Kind::real: return "v" + std::to_string(index);
        case Kind::complex: return "w" + std::to_string(index);
        case Kind::rational_prime: return "p=" + std::to_string(prime);
        case Kind::finite_abstract: return label;
    }
    return "?";
}

NumberFieldProfile::NumberFieldProfile(int degree_, int r1_, int r2_, LdOverride ld_,
                                       std::string label_)
    : label(std::move(label_)), degree(degree_), r1(r1_), r2(r2_), ld(ld_) {
    if (degree < 1) throw std::invalid_argument("field degree must be >= 1");
    if (r1 < 0 || r2 < 0) throw std::invalid_argument("negative signature entry");
    if (degree != r1 + 2 * r2)
        throw std::invalid_argument("signature mismatch: deg=" + std::to_string(degree) +
                                    " but r1+2*r2=" + std::to_string(r1 + 2 * r2));
}

static std::string ld_name(LdOverride ld) {
    switch (ld) {
        case LdOverride::yes: return "yes";
        case LdOverride::no: return "no";
        case LdOverride::unknown: return "unknown";
        case LdOverride::auto_mode: return "auto";
    }
    return "auto";
}

std::string NumberFieldProfile::to_string() const {
    std::string s = "deg=" + std::to_string(degree) + ",r1=" + std::to_string(r1) +
                    ",r2=" + std::to_string(r2);
    if (ld != LdOverride::auto_mode) s += ",ld=" + ld_name(ld);
    if (!label.empty()) s += ",label=" + label;
    return s;
}

std::string NumberFieldProfile::signature_string() const {
    return "(" + std::to_string(r1) + "," + std::to_string(r2) + ")";
}

NumberFieldProfile parse_profile(const std::string& text) {
    int deg = -1, r1 = -1, r2 = -1;
    LdOverride ld = LdOverride::auto_mode;
    std::string label;
    bool seen_deg = false, seen_r1 = false, seen_r2 = false, seen_ld = false,
         seen_label = false;

    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("profile item without '=': " + item);
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        auto parse_nonneg = [&](const std::string& v) {
            try {
                size_t pos = 0;
                int n = std::stoi(v, &pos);
                if (pos != v.size() || n < 0) throw std::invalid_argument(v);
                return n;
            } catch (const std::exception&) {
                throw std::invalid_argument("bad integer in profile: " + item);
            }
        };
        if (key == "deg") {
            if (seen_deg) throw std::invalid_argument("duplicate key deg");
            deg = parse_nonneg(value); seen_deg = true;
        } else if (key == "r1") {
            if (seen_r1) throw std::invalid_argument("duplicate key r1");
            r1 = parse_nonneg(value); seen_r1 = true;
        } else if (key == "r2") {
            if (seen_r2) throw std::invalid_argument("duplicate key r2");
            r2 = parse_nonneg(value); seen_r2 = true;
        } else if (key == "ld") {
            if (seen_ld) throw std::invalid_argument("duplicate key ld");
            seen_ld = true;
            if (value == "yes") ld = LdOverride::yes;
            else if (value == "no") ld = LdOverride::no;
            else if (value == "unknown") ld = LdOverride::unknown;
            else if (value == "auto") ld = LdOverride::auto_mode;
            else throw std::invalid_argument("bad ld value: " + value);
        } else if (key == "label") {
            if (seen_label) throw std::invalid_argument("duplicate key label");
            label = value; seen_label = true;
        } else {
            throw std::invalid_argument("unknown profile key: " + key);
        }
    }
    if (!seen_deg || !seen_r1 || !seen_r2)
        throw std::invalid_argument("profile needs deg, r1 and r2");
    return NumberFieldProfile(deg, r1, r2, ld, label);
}

LdRegistry::LdRegistry() { labels_.insert("Q(8throot7)"); }

void LdRegistry::add(const std::string& label) { labels_.insert(label); }

bool LdRegistry::contains(const std::string& label) const {
    return labels_.count(label) > 0;
}

void LdRegistry::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open registry file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        labels_.insert(line.substr(start));
    }
}

const LdRegistry& default_ld_registry() {
    static const LdRegistry registry;
    return registry;
}

TriState local_determinacy(const NumberFieldProfile& p, const LdRegistry& registry) {
    switch (p.ld) {
        case LdOverride::yes: return TriState::yes;
        case LdOverride::no: return TriState::no;
        case LdOverride::unknown: return TriState::unknown;
        case LdOverride::auto_mode: break;
    }
    if (p.degree <= 6) return TriState::yes;
    if (!p.label.empty() && registry.contains(p.label)) return TriState::no;
    return TriState::unknown;
}

}  // namespace chevalley
