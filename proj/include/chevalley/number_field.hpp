#pragma once

#include <compare>
#include <set>
#include <string>

namespace chevalley {

enum class TriState { yes, no, unknown };
enum class LdOverride { yes, no, unknown, auto_mode };

std::string tristate_name(TriState s);

// A place of a number field. Real and complex places are indexed within
// the signature; finite places of Q are rational primes; finite places of
// other fields are opaque labels.
struct Place {
    enum class Kind { real, complex, rational_prime, finite_abstract };

    Kind kind{Kind::real};
    int index = 0;         // real / complex
    long long prime = 0;   // rational_prime
    std::string label;     // finite_abstract

    static Place real(int i);
    static Place complex(int i);
    static Place rational_prime(long long p);
    static Place finite(std::string label);

    bool is_real() const { return kind == Kind::real; }
    bool is_complex() const { return kind == Kind::complex; }
    bool is_finite() const {
        return kind == Kind::rational_prime || kind == Kind::finite_abstract;
    }

    std::string to_string() const;

    auto operator<=>(const Place&) const = default;
};

// A number field described by degree and signature. No field arithmetic
// happens anywhere; the profile is all the downstream code needs.
struct NumberFieldProfile {
    std::string label;  // optional, e.g. "Q(sqrt2)"
    int degree = 1;
    int r1 = 1;  // real places
    int r2 = 0;  // complex places
    LdOverride ld = LdOverride::auto_mode;

    NumberFieldProfile() = default;
    NumberFieldProfile(int degree, int r1, int r2, LdOverride ld = LdOverride::auto_mode,
                       std::string label = "");

    bool is_rationals() const { return degree == 1; }
    bool totally_imaginary() const { return r1 == 0; }

    // Canonical "deg=..,r1=..,r2=..[,ld=..][,label=..]" form.
    std::string to_string() const;
    std::string signature_string() const;  // "(2,1)"

    friend bool operator==(const NumberFieldProfile&, const NumberFieldProfile&) = default;
};

// Grammar: comma-separated key=value with keys deg, r1, r2,
// ld (yes|no|unknown|auto, default auto) and label (free text, optional).
// The signature identity deg = r1 + 2*r2 is enforced.
NumberFieldProfile parse_profile(const std::string& text);

// Registry of field labels known not to be locally determined. Ships with
// one built-in entry; more labels can be loaded from a file, one per line,
// '#' starts a comment.
class LdRegistry {
public:
    LdRegistry();  // seeded with the built-in entries

    void add(const std::string& label);
    bool contains(const std::string& label) const;
    size_t size() const { return labels_.size(); }

    void load_file(const std::string& path);  // throws on unreadable file

private:
    std::set<std::string> labels_;
};

const LdRegistry& default_ld_registry();

// Local determinacy policy: an explicit override wins; otherwise degree
// <= 6 fields are locally determined, registered labels are not, and
// everything else is unknown.
TriState local_determinacy(const NumberFieldProfile& p,
                           const LdRegistry& registry = default_ld_registry());

}  // namespace chevalley
