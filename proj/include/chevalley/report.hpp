#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chevalley/brauer.hpp"
#include "chevalley/solitude.hpp"

namespace chevalley {

// Everything the classify command reports for one (type, field, policy).
struct ClassifyReport {
    CartanType type;
    NumberFieldProfile field;
    CSPPolicy policy;
    Verdict verdict;
    KerBDescription kerb;
    std::optional<unsigned long long> ker_g_count;  // absent beyond the enumeration bound
};

ClassifyReport classify(const CartanType& t, const NumberFieldProfile& k,
                        const CSPPolicy& policy,
                        const LdRegistry& registry = default_ld_registry());

nlohmann::json to_json(const ClassifyReport& r);
std::string to_table(const ClassifyReport& r);

// One entry of the named-examples fixture. Format, one record per line:
//   display_name;family;rank;field-spec;expected
// with expected one of solitary_or_ngr / not_solitary. '#' comments.
struct NamedExample {
    std::string display_name;
    CartanType type;
    NumberFieldProfile field;
    Outcome expected;  // solitary_or_ngr or not_solitary
};

std::vector<NamedExample> parse_named_examples(const std::string& text);
std::vector<NamedExample> load_named_examples(const std::string& path);

struct ExampleResult {
    NamedExample example;
    Outcome got;
    bool pass = false;
};

std::vector<ExampleResult> run_examples(const std::vector<NamedExample>& examples,
                                        const CSPPolicy& policy,
                                        const LdRegistry& registry = default_ld_registry());

}  // namespace chevalley
