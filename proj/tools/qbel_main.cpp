#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbel/json_io.hpp"
#include "qbel/oracle.hpp"
#include "qbel/qbel.hpp"

namespace {

struct Options {
    bool json = false;
    bool cross_check = false;
    bool verbose = false;
    std::size_t max_frame_size = 0; // 0 = per-command default
    std::uint64_t seed = 12345;
};

void enforce_cap(const qbel::Frame& frame, std::size_t default_cap, const Options& opt) {
    const std::size_t cap = opt.max_frame_size ? opt.max_frame_size : default_cap;
    if (frame.size() > cap)
        throw qbel::input_error("frame size " + std::to_string(frame.size()) +
                                " exceeds the cap of " + std::to_string(cap) +
                                "; pass --max-frame-size=N to override");
    if (opt.max_frame_size && frame.size() > default_cap)
        std::cerr << "warning: frame size " << frame.size() << " is above the default cap of "
                  << default_cap << "; the axiom sweeps grow exponentially\n";
}

std::string fmt(const qbel::Rational& r) {
    return qbel::rational_string(r) + " (~" + qbel::decimal_string(r) + ")";
}

void print_axiom_table(const qbel::Frame& frame, const qbel::AxiomTable& table) {
    for (const auto& [id, result] : table.entries()) {
        std::cout << "  " << id;
        for (std::size_t i = id.size(); i < 4; ++i)
            std::cout << ' ';
        std::cout << (result.pass ? "PASS" : "FAIL");
        if (!result.note.empty())
            std::cout << "  (" << result.note << ")";
        if (result.witness) {
            std::cout << "  witness:";
            for (qbel::SubsetId a : result.witness->subsets)
                std::cout << " " << frame.subset_name(a);
            std::cout << " -- " << result.witness->detail;
        }
        std::cout << "\n";
    }
}

void print_values(const qbel::Frame& frame, const std::vector<qbel::Rational>& values,
                  const char* label) {
    std::cout << label << ":\n";
    for (std::uint32_t bits = 0; bits < frame.subset_count(); ++bits)
        std::cout << "  " << frame.subset_name({bits}) << " = " << fmt(values[bits]) << "\n";
}

int cmd_check_measure(const std::string& path, const Options& opt) {
    const qbel::Json doc = qbel::load_json_file(path);
    const qbel::SetFunction g = qbel::set_function_from_json(doc);
    enforce_cap(g.frame(), qbel::default_measure_side_frame_cap, opt);
    const qbel::Frame& frame = g.frame();

    const qbel::FullMeasureReport report = qbel::full_measure_report(g);

    std::string cross_check_note;
    bool cross_check_agrees = true;
    if (opt.cross_check) {
        if (frame.size() <= 3) {
            const auto direct = qbel::oracle::check_supadditivity_direct(g, 3);
            const bool direct_belief = report.merged.passes("B1") && report.merged.passes("B2") &&
                                       direct.pass;
            cross_check_agrees = (direct_belief == report.classes.belief.pass());
            cross_check_note = std::string("direct sup-additivity sweep (n <= 3): ") +
                               (direct.pass ? "pass" : "fail") +
                               (cross_check_agrees ? "; agrees with the Mobius route"
                                                   : "; DISAGREES with the Mobius route");
            if (!cross_check_agrees)
                throw qbel::internal_error("direct sup-additivity sweep disagrees with the "
                                           "Mobius-based belief check");
        } else {
            cross_check_note = "skipped: the direct sweep is limited to frames of size <= 3";
        }
    }

    if (opt.json) {
        qbel::Json out{{"frame", qbel::frame_to_json(frame)},
                       {"values", qbel::rational_values_to_json(frame, g.values())},
                       {"axioms", qbel::axiom_table_to_json(frame, report.merged)},
                       {"strongest_class", std::string(qbel::to_string(report.classes.strongest))},
                       {"mobius", qbel::Json{{"masses", qbel::rational_values_to_json(
                                                            frame, report.mobius.masses)},
                                             {"is_mass_function",
                                              report.mobius.is_mass_function()}}}};
        if (report.mobius.first_negative)
            out["mobius"]["first_negative"] =
                qbel::subset_to_json(frame, *report.mobius.first_negative);
        if (report.classes.generalized.inferred_empty_mass)
            out["inferred_empty_mass"] =
                qbel::rational_string(*report.classes.generalized.inferred_empty_mass);
        if (opt.cross_check)
            out["cross_check"] = cross_check_note;
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "measure over frame {";
    for (std::size_t i = 0; i < frame.size(); ++i)
        std::cout << (i ? ", " : "") << frame.element(i);
    std::cout << "}\n";
    print_values(frame, g.values(), "values");
    std::cout << "axioms:\n";
    print_axiom_table(frame, report.merged);
    print_values(frame, report.mobius.masses, "mobius masses (closed world)");
    if (report.classes.generalized.inferred_empty_mass)
        std::cout << "inferred open-world m({}) = "
                  << fmt(*report.classes.generalized.inferred_empty_mass) << "\n";
    if (opt.cross_check)
        std::cout << "cross-check: " << cross_check_note << "\n";
    std::cout << "strongest class: " << qbel::to_string(report.classes.strongest) << "\n";
    return 0;
}

int cmd_check_relation(const std::string& path, const Options& opt) {
    const qbel::Json doc = qbel::load_json_file(path);
    if (!doc.is_object() || !doc.contains("frame"))
        throw qbel::input_error("a relation file must be an object with a \"frame\"");
    enforce_cap(qbel::frame_from_json(doc["frame"]), qbel::default_relation_side_frame_cap, opt);
    const qbel::PreferenceRelation r = qbel::relation_from_json(doc);
    const qbel::Frame& frame = r.frame();

    const qbel::RelationReport report = qbel::full_relation_report(r);
    if (opt.verbose)
        std::cerr << "feasibility program:\n" << qbel::debug_dump(qbel::scott_system(r));
    const qbel::ScottConstruction scott = qbel::construct_probability_scott(r);

    std::vector<std::string> cross_notes;
    if (opt.cross_check) {
        if (frame.size() <= 3) {
            const auto grid = qbel::oracle::search_probability_grid(r, 60);
            if (grid.has_value() && !scott.representable())
                throw qbel::internal_error("grid oracle found a compatible probability but the "
                                           "LP says not representable");
            if (grid.has_value() == scott.representable())
                cross_notes.push_back("denominator-60 grid agrees with the LP verdict");
            else
                cross_notes.push_back("denominator-60 grid found no compatible point; consistent "
                                      "(the grid may be too coarse)");
        } else {
            cross_notes.push_back("grid oracle skipped: limited to frames of size <= 3");
        }
        if (frame.size() <= 2) {
            const auto direct = qbel::oracle::check_scott_axiom_direct(r, 3);
            if (!direct.pass && scott.representable())
                throw qbel::internal_error("balance-axiom refutation contradicts the LP verdict");
            cross_notes.push_back(std::string("bounded balance-axiom sweep (n <= 3): ") +
                                  (direct.pass ? "no violation found (refutation only; not a "
                                                 "proof of the axiom)"
                                               : "violation found, consistent with the verdict"));
        } else {
            const auto sampled =
                qbel::oracle::check_scott_axiom_sampled(r, 2, 20000, opt.seed);
            if (!sampled.pass && scott.representable())
                throw qbel::internal_error("sampled balance-axiom refutation contradicts the LP "
                                           "verdict");
            cross_notes.push_back(std::string("sampled balance-axiom probes: ") +
                                  (sampled.pass ? "no violation found" : "violation found"));
        }
    }

    if (opt.json) {
        qbel::Json out{{"frame", qbel::frame_to_json(frame)},
                       {"axioms", qbel::axiom_table_to_json(frame, report.axioms)},
                       {"structure_class", std::string(qbel::to_string(*report.structure_class))}};
        if (*report.structure_class != qbel::StructureClass::not_weak_order)
            out["ranking"] = qbel::relation_to_ranking_json(r)["ranking"];
        qbel::Json scott_json{{"representable", scott.representable()},
                              {"lp_status", std::string(qbel::to_string(scott.lp.status))}};
        if (scott.lp.status == qbel::LpStatus::optimal)
            scott_json["epsilon"] = qbel::rational_string(scott.lp.optimal_value);
        if (scott.representable())
            scott_json["probability"] = qbel::set_function_to_json(*scott.probability);
        out["scott"] = std::move(scott_json);
        if (!cross_notes.empty())
            out["cross_check"] = cross_notes;
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "relation over frame of size " << frame.size() << "\n";
    std::cout << "axioms:\n";
    print_axiom_table(frame, report.axioms);
    std::cout << "structure class: " << qbel::to_string(*report.structure_class) << "\n";
    if (scott.representable()) {
        std::cout << "probability-representable: yes (optimal slack "
                  << fmt(scott.lp.optimal_value) << ")\n";
        print_values(frame, scott.probability->values(), "witness probability");
    } else {
        std::cout << "probability-representable: no (LP "
                  << qbel::to_string(scott.lp.status);
        if (scott.lp.status == qbel::LpStatus::optimal)
            std::cout << ", optimal slack " << fmt(scott.lp.optimal_value);
        std::cout << ")\n";
    }
    for (const auto& note : cross_notes)
        std::cout << "cross-check: " << note << "\n";
    return 0;
}

qbel::Json measure_output(const qbel::SetFunction& g, const std::string& provenance,
                          const std::vector<qbel::Rational>* masses,
                          const std::vector<qbel::Rational>* class_values) {
    qbel::Json out = qbel::set_function_to_json(g);
    out["provenance"] = provenance;
    if (masses)
        out["mass"] = qbel::rational_values_to_json(g.frame(), *masses);
    if (class_values) {
        qbel::Json cv = qbel::Json::array();
        for (const auto& v : *class_values)
            cv.push_back(qbel::rational_string(v));
        out["class_values"] = std::move(cv);
    }
    return out;
}

int cmd_construct(const std::string& path, const std::string& target, const Options& opt) {
    const qbel::Json doc = qbel::load_json_file(path);
    if (!doc.is_object() || !doc.contains("frame"))
        throw qbel::input_error("a relation file must be an object with a \"frame\"");
    enforce_cap(qbel::frame_from_json(doc["frame"]), qbel::default_relation_side_frame_cap, opt);
    const qbel::PreferenceRelation r = qbel::relation_from_json(doc);

    qbel::Json out;
    if (target == "belief") {
        const qbel::BeliefConstruction built = qbel::construct_belief(r);
        out = measure_output(built.belief, "theorem3", &built.mass.masses(),
                             &built.class_values);
    } else if (target == "monotonic") {
        const qbel::BeliefConstruction built = qbel::construct_monotonic_belief(r);
        out = measure_output(built.belief, "theorem4", &built.mass.masses(),
                             &built.class_values);
    } else if (target == "generalized") {
        const qbel::GeneralizedConstruction built = qbel::construct_generalized_belief(r);
        out = measure_output(built.belief,
                             built.degenerate ? "theorem5-case-i" : "theorem5-case-ii",
                             &built.mass.masses(),
                             built.degenerate ? nullptr : &built.class_values);
    } else if (target == "probability") {
        if (opt.verbose)
            std::cerr << "feasibility program:\n" << qbel::debug_dump(qbel::scott_system(r));
        const qbel::ScottConstruction scott = qbel::construct_probability_scott(r);
        if (!scott.representable()) {
            std::cerr << "not representable by a probability function (LP "
                      << qbel::to_string(scott.lp.status);
            if (scott.lp.status == qbel::LpStatus::optimal)
                std::cerr << ", optimal slack " << qbel::rational_string(scott.lp.optimal_value);
            std::cerr << ")\n";
            return 4;
        }
        const qbel::MobiusTransform mobius =
            qbel::mass_from_set_function(*scott.probability, qbel::World::closed);
        out = measure_output(*scott.probability, "scott", &mobius.masses, nullptr);
        out["epsilon"] = qbel::rational_string(scott.lp.optimal_value);
    } else {
        throw qbel::input_error("unknown construction target '" + target +
                                "'; expected belief, probability, monotonic or generalized");
    }

    std::cout << out.dump(2) << "\n";
    if (!opt.json)
        std::cerr << "constructed " << target << " measure (provenance "
                  << out["provenance"].get<std::string>() << ")\n";
    return 0;
}

int cmd_induce(const std::string& path, const Options& opt) {
    const qbel::Json doc = qbel::load_json_file(path);
    const qbel::SetFunction g = qbel::set_function_from_json(doc);
    enforce_cap(g.frame(), qbel::default_measure_side_frame_cap, opt);

    const qbel::PreferenceRelation r = qbel::induce_relation(g);
    const qbel::RelationReport report = qbel::full_relation_report(r);

    qbel::Json out = qbel::relation_to_ranking_json(r);
    out["relation_report"] =
        qbel::Json{{"axioms", qbel::axiom_table_to_json(r.frame(), report.axioms)},
                   {"structure_class", std::string(qbel::to_string(*report.structure_class))}};
    std::cout << out.dump(2) << "\n";
    if (!opt.json)
        std::cerr << "induced relation structure class: "
                  << qbel::to_string(*report.structure_class) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"axiom classifier and converter between belief measures and preference "
                 "relations over finite frames"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "emit machine-readable JSON reports");
    app.add_flag("--cross-check", opt.cross_check,
                 "also run the brute-force oracles and report agreement");
    app.add_flag("--verbose", opt.verbose,
                 "dump the feasibility program to stderr, one constraint per line");
    app.add_option("--max-frame-size", opt.max_frame_size,
                   "override the default frame-size cap");
    app.add_option("--seed", opt.seed, "seed for sampled oracle checks");

    std::string path;
    std::string target;

    CLI::App* check_measure =
        app.add_subcommand("check-measure", "classify a measure file against the axiom classes");
    check_measure->add_option("file", path, "measure JSON file")->required();

    CLI::App* check_relation = app.add_subcommand(
        "check-relation", "check the relation axioms and probability representability");
    check_relation->add_option("file", path, "relation JSON file")->required();

    CLI::App* construct =
        app.add_subcommand("construct", "build a compatible measure from a relation file");
    construct->add_option("file", path, "relation JSON file")->required();
    construct->add_option("--target", target, "belief | probability | monotonic | generalized")
        ->required();

    CLI::App* induce =
        app.add_subcommand("induce", "derive the preference relation a measure induces");
    induce->add_option("file", path, "measure JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check_measure->parsed())
            return cmd_check_measure(path, opt);
        if (check_relation->parsed())
            return cmd_check_relation(path, opt);
        if (construct->parsed())
            return cmd_construct(path, target, opt);
        if (induce->parsed())
            return cmd_induce(path, opt);
        throw qbel::input_error("no subcommand given");
    } catch (const qbel::axiom_precondition_error& e) {
        std::cerr << "error (" << e.axiom() << "): " << e.what() << "\n";
        return 3;
    } catch (const qbel::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qbel::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
