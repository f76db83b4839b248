#include "chevalley/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chevalley {

ClassifyReport classify(const CartanType& t, const NumberFieldProfile& k,
                        const CSPPolicy& policy, const LdRegistry& registry) {
    ClassifyReport r;
    r.type = t;
    r.field = k;
    r.policy = policy;
    r.verdict = solitude_verdict(t, k, policy, registry);
    r.kerb = ker_b(t, k);
    if (k.r1 <= kKerGEnumerationBound) r.ker_g_count = count_ker_g(t, k);
    return r;
}

nlohmann::json to_json(const ClassifyReport& r) {
    nlohmann::json j;
    j["type"] = std::string(1, static_cast<char>(r.type.family));
    j["rank"] = r.type.rank;
    j["field"] = r.field.to_string();
    j["fsp"] = r.verdict.fsp;
    j["outcome"] = outcome_name(r.verdict.outcome);
    if (r.verdict.outcome == Outcome::not_solitary)
        j["witness"] = r.verdict.witness;
    else
        j["witness"] = nullptr;
    if (r.verdict.outcome == Outcome::csp_conditional) {
        j["csp"] = {{"if_csp_holds", outcome_name(r.verdict.branch_if_csp_holds)},
                    {"if_csp_fails", outcome_name(r.verdict.branch_if_csp_fails)},
                    {"reason", r.verdict.reason}};
    }
    if (r.verdict.outcome == Outcome::outside_theorems) j["reason"] = r.verdict.reason;
    j["assumptions_used"] = r.verdict.assumptions_used;
    j["ker_b_count"] = r.kerb.total_count;
    if (r.ker_g_count)
        j["ker_g_count"] = *r.ker_g_count;
    else
        j["ker_g_count"] = nullptr;
    return j;
}

std::string to_table(const ClassifyReport& r) {
    std::ostringstream out;
    auto row = [&](const std::string& key, const std::string& value) {
        out << key;
        for (size_t i = key.size(); i < 14; ++i) out << ' ';
        out << value << "\n";
    };
    row("type", r.type.to_string());
    row("field", r.field.to_string() + " signature " + r.field.signature_string());
    row("fsp", r.verdict.fsp ? "true" : "false");
    row("outcome", outcome_name(r.verdict.outcome));
    if (r.verdict.outcome == Outcome::not_solitary) row("witness", r.verdict.witness);
    if (r.verdict.outcome == Outcome::csp_conditional) {
        row("if_csp_holds", outcome_name(r.verdict.branch_if_csp_holds));
        row("if_csp_fails", outcome_name(r.verdict.branch_if_csp_fails));
        row("reason", r.verdict.reason);
    }
    if (r.verdict.outcome == Outcome::outside_theorems) {
        row("reason", r.verdict.reason);
        if (r.verdict.reason == "local determinacy undecided")
            row("hint", "set ld=yes or ld=no on the field profile, or extend the registry");
    }
    std::string assumptions;
    for (size_t i = 0; i < r.verdict.assumptions_used.size(); ++i) {
        if (i) assumptions += "; ";
        assumptions += r.verdict.assumptions_used[i];
    }
    row("assumptions", assumptions.empty() ? "(none)" : assumptions);
    row("ker_b_count", std::to_string(r.kerb.total_count));
    row("ker_g_count", r.ker_g_count ? std::to_string(*r.ker_g_count)
                                     : std::string("(r1 beyond enumeration bound)"));
    return out.str();
}

std::vector<NamedExample> parse_named_examples(const std::string& text) {
    std::vector<NamedExample> out;
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
            throw std::invalid_argument("examples line " + std::to_string(lineno) + ": " + why);
        };
        if (fields.size() != 5) fail("expected 5 ';'-separated fields");
        NamedExample e;
        e.display_name = fields[0];
        if (e.display_name.empty()) fail("empty display name");
        if (fields[1].size() != 1) fail("family must be a single letter");
        try {
            e.type = make_type(fields[1][0], std::stoi(fields[2]));
            e.field = parse_profile(fields[3]);
        } catch (const std::exception& ex) {
            fail(ex.what());
        }
        if (fields[4] == "solitary_or_ngr")
            e.expected = Outcome::solitary_or_ngr;
        else if (fields[4] == "not_solitary")
            e.expected = Outcome::not_solitary;
        else
            fail("expected must be solitary_or_ngr or not_solitary");
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<NamedExample> load_named_examples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open examples fixture: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_named_examples(buffer.str());
}

std::vector<ExampleResult> run_examples(const std::vector<NamedExample>& examples,
                                        const CSPPolicy& policy, const LdRegistry& registry) {
    std::vector<ExampleResult> out;
    out.reserve(examples.size());
    for (const auto& e : examples) {
        ExampleResult r;
        r.example = e;
        r.got = solitude_verdict(e.type, e.field, policy, registry).outcome;
        r.pass = r.got == e.expected;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace chevalley
