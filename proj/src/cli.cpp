#include "caysum/cli.hpp"

#include <CLI11.hpp>

#include "caysum/json_io.hpp"
#include "caysum/parse.hpp"
#include "caysum/sweep.hpp"

namespace caysum {

namespace {

struct Args {
    std::string group;
    std::string set;
    std::string code;
    std::string subgroup_gen;
    std::string format = "human";
    long bound = 24;
    long classify_bound = 64;
    long max_order = 16;
    long sample = 10'000;
    std::uint64_t seed = 0;
    std::string which = "both";
    bool serial = false;
};

void emit(std::ostream& out, const std::string& format, const json& j,
          const std::string& human) {
    if (format == "json")
        out << j.dump(2) << "\n";
    else
        out << human;
}

std::string set_to_string(const GroupSpec& g, const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (const Element& e : s) {
        if (!first) out += ",";
        out += to_string(g, e);
        first = false;
    }
    return out + "}";
}

int cmd_check_code(const Args& a, std::ostream& out) {
    GroupSpec g = parse_group_spec(a.group);
    ConnectionSet t = validate_connection_set(g, parse_element_set(g, a.set));
    ElementSet x = parse_element_set(g, a.code);
    CriteriaReport rep = evaluate_criteria(g, t, x);
    PerfectCodeCertificate cert =
        brute_force_is_perfect_code(build_graph(g, t), x);
    json j;
    j["group"] = g.to_string();
    j["connection_set"] = to_json(g, t);
    j["criteria"] = to_json(g, rep);
    j["oracle"] = to_json(g, cert);
    std::ostringstream os;
    os << "group " << g.to_string() << ", T = " << set_to_string(g, t.elements)
       << ", X = " << set_to_string(g, x) << "\n"
       << "cardinality " << (rep.cardinality_ok ? "ok" : "FAIL")
       << ", independence " << (rep.independence_ok ? "ok" : "FAIL")
       << ", uniqueness " << (rep.uniqueness_ok ? "ok" : "FAIL")
       << ", partition " << (rep.partition_ok ? "ok" : "FAIL") << "\n"
       << "graph oracle: " << (cert.verdict ? "perfect code" : "not a perfect code")
       << "\n";
    emit(out, a.format, j, os.str());
    return rep.overall() && cert.verdict ? 0 : 1;
}

int cmd_find_codes(const Args& a, std::ostream& out) {
    GroupSpec g = parse_group_spec(a.group);
    ConnectionSet t = validate_connection_set(g, parse_element_set(g, a.set));
    EnumerationResult res =
        enumerate_perfect_codes(build_graph(g, t), a.bound,
                                a.serial ? ExecutionPolicy::serial
                                         : ExecutionPolicy::parallel);
    json j;
    j["group"] = g.to_string();
    j["connection_set"] = to_json(g, t);
    j["result"] = to_json(g, res);
    std::ostringstream os;
    if (res.cardinality_obstruction)
        os << "no perfect codes: |T|+1 does not divide |A|\n";
    else {
        os << res.codes.size() << " perfect code(s)\n";
        for (const ElementSet& c : res.codes)
            os << "  " << set_to_string(g, c) << "\n";
    }
    emit(out, a.format, j, os.str());
    return res.codes.empty() ? 1 : 0;
}

Subgroup subgroup_from_args(const GroupSpec& g, const Args& a) {
    return subgroup_generate(g, parse_element_set(g, a.subgroup_gen));
}

int cmd_check_subgroup(const Args& a, std::ostream& out) {
    GroupSpec g = parse_group_spec(a.group);
    SubgroupCodeVerdict v =
        is_subgroup_perfect_code(g, subgroup_from_args(g, a));
    json j;
    j["group"] = g.to_string();
    j["verdict"] = to_json(g, v);
    std::ostringstream os;
    os << "subgroup " << set_to_string(g, v.subgroup.elements) << ": "
       << (v.is_spc ? "subgroup perfect code" : "not a subgroup perfect code")
       << " (reason: " << to_string(v.reason) << ")\n";
    if (v.witness_connection_set)
        os << "witness T = "
           << set_to_string(g, v.witness_connection_set->elements) << "\n";
    emit(out, a.format, j, os.str());
    return v.is_spc ? 0 : 1;
}

int cmd_classify(const Args& a, std::ostream& out) {
    GroupSpec g = parse_group_spec(a.group);
    auto verdicts = classify_subgroup_codes(g, a.classify_bound);
    json j;
    j["group"] = g.to_string();
    json vs = json::array();
    for (const auto& v : verdicts) vs.push_back(to_json(g, v));
    j["subgroups"] = std::move(vs);
    std::ostringstream os;
    for (const auto& v : verdicts)
        os << set_to_string(g, v.subgroup.elements) << ": "
           << (v.is_spc ? "SPC" : "not SPC") << " (" << to_string(v.reason)
           << ")\n";
    emit(out, a.format, j, os.str());
    return 0;
}

int cmd_witness(const Args& a, std::ostream& out) {
    GroupSpec g = parse_group_spec(a.group);
    Subgroup h = subgroup_from_args(g, a);
    SubgroupCodeVerdict v = is_subgroup_perfect_code(g, h);
    json j;
    j["group"] = g.to_string();
    j["verdict"] = to_json(g, v);
    std::ostringstream os;
    if (v.witness_connection_set)
        os << "T = " << set_to_string(g, v.witness_connection_set->elements)
           << "\n";
    else
        os << "subgroup " << set_to_string(g, h.elements)
           << " is not a subgroup perfect code\n";
    emit(out, a.format, j, os.str());
    return v.is_spc ? 0 : 1;
}

int cmd_equivalences(const Args& a, std::ostream& out) {
    GroupSpec g = parse_group_spec(a.group);
    Subgroup h = subgroup_from_args(g, a);
    EquivalenceReport r = check_equivalences(
        g, h, a.bound,
        a.serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel);
    json j;
    j["group"] = g.to_string();
    j["subgroup"] = to_json(g, h);
    j["report"] = to_json(g, r);
    std::ostringstream os;
    os << "(i) code graph exists: " << r.exists_code_graph << "\n"
       << "(ii) square-free transversal: " << r.square_free_transversal << "\n"
       << "(iii) intersection condition: " << r.intersection_condition << "\n"
       << "(iv) supplementary decomposition: "
       << r.supplementary_decomposition << "\n"
       << "(v) code in every overgroup: " << r.code_in_every_overgroup << "\n"
       << "all agree: " << r.all_agree() << "\n";
    emit(out, a.format, j, os.str());
    return r.exists_code_graph ? 0 : 1;
}

int cmd_sweep(const Args& a, std::ostream& out) {
    SweepConfig cfg;
    cfg.max_order = a.max_order;
    cfg.sample = a.sample;
    cfg.seed = a.seed;
    cfg.policy =
        a.serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel;
    json j;
    long bad = 0;
    std::ostringstream os;
    if (a.which == "theorem" || a.which == "both") {
        SweepStats s = theorem_equivalence_sweep(cfg);
        bad += s.discrepancies;
        j["theorem_equivalence"] = to_json(s);
        os << "theorem equivalence: " << s.pairs << " pairs over "
           << s.groups << " groups, " << s.discrepancies
           << " discrepancies\n";
    }
    if (a.which == "subgroup" || a.which == "both") {
        SweepStats s = subgroup_ground_truth_sweep(cfg);
        bad += s.discrepancies;
        j["subgroup_ground_truth"] = to_json(s);
        os << "subgroup ground truth: " << s.pairs << " subgroups over "
           << s.groups << " groups, " << s.discrepancies
           << " discrepancies\n";
    }
    emit(out, a.format, j, os.str());
    return bad == 0 ? 0 : 1;
}

int cmd_export(const Args& a, std::ostream& out) {
    GroupSpec g = parse_group_spec(a.group);
    ConnectionSet t = validate_connection_set(g, parse_element_set(g, a.set));
    ExportFormat f;
    if (a.format == "dot")
        f = ExportFormat::dot;
    else if (a.format == "json")
        f = ExportFormat::json;
    else
        throw validation_error("export format must be dot or json, got '" +
                               a.format + "'");
    out << export_graph(build_graph(g, t), f);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"perfect codes in Cayley sum graphs of finite abelian groups"};
    app.require_subcommand(1);
    Args a;

    auto add_group = [&](CLI::App* sub) {
        sub->add_option("group", a.group, "group spec, e.g. Z12 or Z2xZ4xZ3")
            ->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", a.format, "output format")
            ->check(CLI::IsMember({"human", "json"}));
    };

    CLI::App* check = app.add_subcommand(
        "check-code", "evaluate the perfect-code criteria for a given code");
    add_group(check);
    check->add_option("--set", a.set, "connection set T")->required();
    check->add_option("--code", a.code, "candidate code X")->required();
    add_format(check);

    CLI::App* find = app.add_subcommand(
        "find-codes", "enumerate all perfect codes of CayS(A,T)");
    add_group(find);
    find->add_option("--set", a.set, "connection set T")->required();
    find->add_option("--bound", a.bound, "enumeration order bound");
    find->add_flag("--serial", a.serial, "disable the parallel search");
    add_format(find);

    CLI::App* chsub = app.add_subcommand(
        "check-subgroup", "is the generated subgroup a subgroup perfect code");
    add_group(chsub);
    chsub->add_option("--subgroup-gen", a.subgroup_gen,
                      "generators of the subgroup")
        ->required();
    add_format(chsub);

    CLI::App* classify =
        app.add_subcommand("classify", "classify every subgroup of the group");
    add_group(classify);
    classify->add_option("--bound", a.classify_bound,
                         "subgroup enumeration order bound");
    add_format(classify);

    CLI::App* witness = app.add_subcommand(
        "witness", "construct a witness connection set for a subgroup code");
    add_group(witness);
    witness
        ->add_option("--subgroup-gen", a.subgroup_gen,
                     "generators of the subgroup")
        ->required();
    add_format(witness);

    CLI::App* equiv = app.add_subcommand(
        "equivalences",
        "evaluate the five equivalent subgroup-code conditions");
    add_group(equiv);
    equiv
        ->add_option("--subgroup-gen", a.subgroup_gen,
                     "generators of the subgroup")
        ->required();
    equiv->add_option("--bound", a.bound, "search order bound");
    equiv->add_flag("--serial", a.serial, "disable the parallel search");
    add_format(equiv);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "run the criteria/classification cross-validation sweeps");
    sweep->add_option("--max-order", a.max_order, "largest group order");
    sweep->add_option("--sample", a.sample,
                      "sample size when a space is too large to exhaust");
    sweep->add_option("--seed", a.seed, "sampling seed");
    sweep->add_option("--which", a.which, "theorem, subgroup, or both")
        ->check(CLI::IsMember({"theorem", "subgroup", "both"}));
    sweep->add_flag("--serial", a.serial, "disable the parallel sweep");
    add_format(sweep);

    CLI::App* exp =
        app.add_subcommand("export", "export the graph as DOT or JSON");
    add_group(exp);
    exp->add_option("--set", a.set, "connection set T")->required();
    exp->add_option("--format", a.format, "dot or json")
        ->required()
        ->check(CLI::IsMember({"dot", "json"}));

    try {
        std::vector<std::string> argv_storage;
        argv_storage.push_back("caysum");
        argv_storage.insert(argv_storage.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& s : argv_storage) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check_code(a, out);
        if (find->parsed()) return cmd_find_codes(a, out);
        if (chsub->parsed()) return cmd_check_subgroup(a, out);
        if (classify->parsed()) return cmd_classify(a, out);
        if (witness->parsed()) return cmd_witness(a, out);
        if (equiv->parsed()) return cmd_equivalences(a, out);
        if (sweep->parsed()) return cmd_sweep(a, out);
        if (exp->parsed()) return cmd_export(a, out);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        err << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        err << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        err << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace caysum
