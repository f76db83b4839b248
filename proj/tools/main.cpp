#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chevalley/qforms.hpp"
#include "chevalley/report.hpp"

using namespace chevalley;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelfcheck = 1;
constexpr int kExitArgs = 2;
constexpr int kExitMissingData = 3;

struct GlobalOpts {
    bool json = false;
    std::string policy_a1 = "unknown";
    std::string policy_f4 = "unknown";
    std::string registry_path;
};

struct TargetOpts {
    std::string family;
    int rank = 0;
    std::string field;
};

PolicyChoice parse_policy(const std::string& s) {
    if (s == "true") return PolicyChoice::assume_true;
    if (s == "false") return PolicyChoice::assume_false;
    return PolicyChoice::unknown;
}

CSPPolicy make_policy(const GlobalOpts& g) {
    return CSPPolicy{parse_policy(g.policy_a1), parse_policy(g.policy_f4)};
}

LdRegistry make_registry(const GlobalOpts& g) {
    LdRegistry registry;
    if (!g.registry_path.empty()) registry.load_file(g.registry_path);
    return registry;
}

CartanType parse_target_type(const TargetOpts& t) {
    if (t.family.size() != 1)
        throw std::invalid_argument("--type expects a single family letter A..G");
    return make_type(t.family[0], t.rank);
}

void add_target_options(CLI::App* cmd, TargetOpts& t) {
    cmd->add_option("--type", t.family, "Cartan family letter A..G")->required();
    cmd->add_option("--rank", t.rank, "rank of the type")->required();
    cmd->add_option("--field", t.field,
                    "number field profile, e.g. deg=2,r1=2,r2=0")->required();
}

void emit(const GlobalOpts& g, const nlohmann::json& j, const std::string& table) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << table;
}

int cmd_classify(const GlobalOpts& g, const TargetOpts& t) {
    CartanType type = parse_target_type(t);
    NumberFieldProfile field = parse_profile(t.field);
    ClassifyReport report = classify(type, field, make_policy(g), make_registry(g));
    emit(g, to_json(report), to_table(report));
    return kExitOk;
}

int cmd_fsp(const GlobalOpts& g, const TargetOpts& t) {
    CartanType type = parse_target_type(t);
    NumberFieldProfile field = parse_profile(t.field);
    bool fsp = finite_splitting_principle(type, field);
    nlohmann::json j{{"type", t.family}, {"rank", type.rank},
                     {"field", field.to_string()}, {"fsp", fsp}};
    emit(g, j, std::string("fsp           ") + (fsp ? "true" : "false") + "\n");
    return kExitOk;
}

int cmd_kerb(const GlobalOpts& g, const TargetOpts& t) {
    CartanType type = parse_target_type(t);
    NumberFieldProfile field = parse_profile(t.field);
    KerBDescription d = ker_b(type, field);

    nlohmann::json j;
    j["type"] = t.family;
    j["rank"] = type.rank;
    j["field"] = field.to_string();
    j["coordinate_count"] = d.coordinate_count;
    j["dimension_per_coordinate"] = d.f2_dimension_per_coordinate;
    j["total_count"] = d.total_count;
    j["nontrivial_count"] = d.nontrivial_count();
    j["injective"] = is_b_injective(type, field);
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& s : d.generators) gens.push_back(s);
    j["generators"] = gens;

    std::ostringstream out;
    out << "type               " << type.to_string() << "\n";
    out << "field              " << field.to_string() << "\n";
    out << "coordinate_count   " << d.coordinate_count << "\n";
    out << "dimension          " << d.f2_dimension_per_coordinate << "\n";
    out << "total_count        " << d.total_count << "\n";
    out << "nontrivial_count   " << d.nontrivial_count() << "\n";
    out << "injective          " << (is_b_injective(type, field) ? "true" : "false") << "\n";
    out << "generators         ";
    if (d.generators.empty()) out << "(none)";
    for (const auto& s : d.generators) {
        out << "{";
        for (size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << "v" << s[i];
        out << "} ";
    }
    out << "\n";
    emit(g, j, out.str());
    return kExitOk;
}

int cmd_witness(const GlobalOpts& g, const TargetOpts& t) {
    CartanType type = parse_target_type(t);
    NumberFieldProfile field = parse_profile(t.field);
    Verdict v = solitude_verdict(type, field, make_policy(g), make_registry(g));
    nlohmann::json j;
    j["outcome"] = outcome_name(v.outcome);
    j["witness"] = v.outcome == Outcome::not_solitary ? nlohmann::json(v.witness)
                                                      : nlohmann::json(nullptr);
    std::ostringstream out;
    out << "outcome       " << outcome_name(v.outcome) << "\n";
    if (v.outcome == Outcome::not_solitary)
        out << "witness       " << v.witness << "\n";
    else
        out << "witness       (only not_solitary verdicts carry a witness)\n";
    emit(g, j, out.str());
    return kExitOk;
}

int cmd_crossval(const GlobalOpts& g, const TargetOpts& t) {
    CartanType type = parse_target_type(t);
    NumberFieldProfile field = parse_profile(t.field);
    CSPPolicy policy = make_policy(g);
    LdRegistry registry = make_registry(g);
    Verdict tree = solitude_verdict(type, field, policy, registry);
    Verdict oracle = resolution_oracle_verdict(type, field, policy);
    bool agree = cross_validate(type, field, policy, registry);
    nlohmann::json j{{"agree", agree},
                     {"tree", outcome_name(tree.outcome)},
                     {"oracle", outcome_name(oracle.outcome)}};
    std::ostringstream out;
    out << "tree          " << outcome_name(tree.outcome) << "\n";
    out << "oracle        " << outcome_name(oracle.outcome) << "\n";
    out << "agree         " << (agree ? "true" : "false") << "\n";
    emit(g, j, out.str());
    return agree ? kExitOk : kExitSelfcheck;
}

int cmd_examples(const GlobalOpts& g, const std::string& fixtures) {
    std::vector<NamedExample> examples;
    try {
        examples = load_named_examples(fixtures);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissingData;
    }
    if (examples.empty()) {
        std::cerr << "error: no examples in fixture " << fixtures << "\n";
        return kExitMissingData;
    }
    auto results = run_examples(examples, make_policy(g), make_registry(g));
    int failed = 0;
    nlohmann::json items = nlohmann::json::array();
    std::ostringstream out;
    for (const auto& r : results) {
        if (!r.pass) ++failed;
        items.push_back({{"name", r.example.display_name},
                         {"expected", outcome_name(r.example.expected)},
                         {"got", outcome_name(r.got)},
                         {"pass", r.pass}});
        out << (r.pass ? "PASS " : "FAIL ") << r.example.display_name << " -> "
            << outcome_name(r.got);
        if (!r.pass) out << " (expected " << outcome_name(r.example.expected) << ")";
        out << "\n";
    }
    out << "passed " << (results.size() - failed) << " of " << results.size() << "\n";
    nlohmann::json j{{"results", items},
                     {"passed", results.size() - failed},
                     {"total", results.size()}};
    emit(g, j, out.str());
    return failed == 0 ? kExitOk : kExitSelfcheck;
}

int cmd_qform_check(const GlobalOpts& g, const std::string& f1, const std::string& f2) {
    DiagonalForm q1 = parse_diagonal_form(f1);
    DiagonalForm q2 = parse_diagonal_form(f2);

    std::vector<Place> places;
    for (long long p : finite_checking_set(q1, q2)) places.push_back(Place::rational_prime(p));
    places.push_back(Place::real(0));

    bool finite_ok = isometric_at_all_finite(q1, q2);
    bool real_ok = locally_isometric(q1, q2, Place::real(0));

    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream out;
    auto sig1 = signature(q1), sig2 = signature(q2);
    out << "form1   " << q1.to_string() << "   signature (" << sig1.first << ","
        << sig1.second << ")\n";
    out << "form2   " << q2.to_string() << "   signature (" << sig2.first << ","
        << sig2.second << ")\n";
    out << "place      dim  disc  hasse |  dim  disc  hasse |  isometric\n";
    for (const auto& v : places) {
        auto a = local_invariants(q1, v);
        auto b = local_invariants(q2, v);
        bool iso = locally_isometric(q1, q2, v);
        std::string pname = v.is_real() ? "real" : v.to_string();
        rows.push_back({{"place", pname},
                        {"form1", {{"dim", a.dim}, {"disc", a.disc_class}, {"hasse", a.hasse}}},
                        {"form2", {{"dim", b.dim}, {"disc", b.disc_class}, {"hasse", b.hasse}}},
                        {"isometric", iso}});
        out << pname;
        for (size_t i = pname.size(); i < 11; ++i) out << ' ';
        out << a.dim << "    " << a.disc_class << "     " << (a.hasse > 0 ? "+1" : "-1")
            << "   |  " << b.dim << "    " << b.disc_class << "     "
            << (b.hasse > 0 ? "+1" : "-1") << "   |  " << (iso ? "yes" : "no") << "\n";
    }
    out << "finite-isometric: " << (finite_ok ? "true" : "false") << "\n";
    out << "real-isometric:   " << (real_ok ? "true" : "false") << "\n";
    nlohmann::json j{{"form1", q1.to_string()},
                     {"form2", q2.to_string()},
                     {"places", rows},
                     {"finite_isometric", finite_ok},
                     {"real_isometric", real_ok}};
    emit(g, j, out.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"profinite-solitude classification for split simple groups over number fields"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "emit machine-readable JSON");
    app.add_option("--policy-a1", g.policy_a1, "CSP for anisotropic A1 forms")
        ->check(CLI::IsMember({"true", "false", "unknown"}));
    app.add_option("--policy-f4", g.policy_f4, "CSP for rank-one F4 lattices over Q")
        ->check(CLI::IsMember({"true", "false", "unknown"}));
    app.add_option("--registry", g.registry_path,
                   "extra not-locally-determined field labels, one per line");

    TargetOpts classify_t, fsp_t, kerb_t, witness_t, crossval_t;
    auto* classify_cmd = app.add_subcommand("classify", "full solitude verdict");
    add_target_options(classify_cmd, classify_t);
    auto* fsp_cmd = app.add_subcommand("fsp", "finite splitting principle");
    add_target_options(fsp_cmd, fsp_t);
    auto* kerb_cmd = app.add_subcommand("kerb", "kernel of the Brauer localization map");
    add_target_options(kerb_cmd, kerb_t);
    auto* witness_cmd = app.add_subcommand("witness", "witness group for not_solitary verdicts");
    add_target_options(witness_cmd, witness_t);
    auto* crossval_cmd = app.add_subcommand("crossval",
                                            "compare decision tree with enumeration oracle");
    add_target_options(crossval_cmd, crossval_t);

    std::string fixtures = "data/named_examples.txt";
    auto* examples_cmd = app.add_subcommand("examples", "run the named-examples fixture");
    examples_cmd->add_option("--fixtures", fixtures, "fixture file path");

    std::string form1, form2;
    auto* qform_cmd = app.add_subcommand("qform-check", "local invariants of two diagonal forms");
    qform_cmd->add_option("form1", form1, "first form, e.g. 1,1,1,1")->required();
    qform_cmd->add_option("form2", form2, "second form, e.g. -1,-1,-1,-1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitArgs;
    }

    try {
        if (app.got_subcommand(classify_cmd)) return cmd_classify(g, classify_t);
        if (app.got_subcommand(fsp_cmd)) return cmd_fsp(g, fsp_t);
        if (app.got_subcommand(kerb_cmd)) return cmd_kerb(g, kerb_t);
        if (app.got_subcommand(witness_cmd)) return cmd_witness(g, witness_t);
        if (app.got_subcommand(crossval_cmd)) return cmd_crossval(g, crossval_t);
        if (app.got_subcommand(examples_cmd)) return cmd_examples(g, fixtures);
        if (app.got_subcommand(qform_cmd)) return cmd_qform_check(g, form1, form2);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgs;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitSelfcheck;
    }
    return kExitArgs;
}
