#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qbel/frame.hpp"
#include "qbel/measures.hpp"
#include "qbel/relations.hpp"
#include "qbel/report.hpp"

namespace qbel {

// Insertion-ordered JSON keeps reports stable across runs.
using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw input_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

inline Frame frame_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("elements"))
        throw input_error("a frame must be an object with an \"elements\" array");
    const Json& elements = j["elements"];
    if (!elements.is_array())
        throw input_error("frame \"elements\" must be an array of labels");
    std::vector<std::string> labels;
    for (const Json& item : elements) {
        if (!item.is_string())
            throw input_error("frame element labels must be strings");
        labels.push_back(item.get<std::string>());
    }
    return Frame(std::move(labels));
}

inline Json frame_to_json(const Frame& frame) {
    return Json{{"elements", frame.elements()}};
}

// Subsets travel as label lists, e.g. ["theta1", "theta3"].
inline SubsetId subset_from_json(const Frame& frame, const Json& j) {
    if (!j.is_array())
        throw input_error("a subset must be an array of element labels");
    std::uint32_t bits = 0;
    for (const Json& item : j) {
        if (!item.is_string())
            throw input_error("subset entries must be element labels");
        const std::string label = item.get<std::string>();
        const auto idx = frame.index_of(label);
        if (!idx)
            throw input_error("unknown frame element: '" + label + "'");
        const std::uint32_t bit = std::uint32_t{1} << *idx;
        if (bits & bit)
            throw input_error("duplicate element '" + label + "' in subset");
        bits |= bit;
    }
    return {bits};
}

inline Json subset_to_json(const Frame& frame, SubsetId a) {
    return Json(frame.labels(a));
}

namespace json_detail {

inline Rational value_from_json(const Json& j) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number())
        throw input_error("non-integer numeric values are inexact; write \"" + j.dump() +
                          "\" as a string (\"p/q\" or a decimal literal)");
    throw input_error("a value must be a string rational or an integer");
}

// Parses {"values": [{"subset": [...], "value": ...}, ...]} into a total
// vector over all subsets; missing or duplicated subsets are errors.
inline std::vector<Rational> total_values_from_json(const Frame& frame, const Json& j) {
    if (!j.contains("values") || !j["values"].is_array())
        throw input_error("expected a \"values\" array");
    std::vector<std::optional<Rational>> staged(frame.subset_count());
    for (const Json& entry : j["values"]) {
        if (!entry.is_object() || !entry.contains("subset") || !entry.contains("value"))
            throw input_error("each values entry needs \"subset\" and \"value\"");
        const SubsetId sub = subset_from_json(frame, entry["subset"]);
        if (staged[sub.bits])
            throw input_error("duplicate value for subset " + frame.subset_name(sub));
        staged[sub.bits] = value_from_json(entry["value"]);
    }
    std::vector<Rational> values(frame.subset_count());
    for (std::uint32_t bits = 0; bits < frame.subset_count(); ++bits) {
        if (!staged[bits])
            throw input_error("missing value for subset " + frame.subset_name({bits}));
        values[bits] = std::move(*staged[bits]);
    }
    return values;
}

inline Json values_to_json(const Frame& frame, const std::vector<Rational>& values) {
    Json out = Json::array();
    for (std::uint32_t bits = 0; bits < frame.subset_count(); ++bits)
        out.push_back(Json{{"subset", subset_to_json(frame, {bits})},
                           {"value", rational_string(values[bits])},
                           {"decimal_approx", decimal_string(values[bits])}});
    return out;
}

} // namespace json_detail

inline SetFunction set_function_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("frame"))
        throw input_error("a measure file must be an object with \"frame\" and \"values\"");
    Frame frame = frame_from_json(j["frame"]);
    std::vector<Rational> values = json_detail::total_values_from_json(frame, j);
    return SetFunction(std::move(frame), std::move(values));
}

inline MassFunction mass_function_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("frame"))
        throw input_error("a mass file must be an object with \"frame\" and \"values\"");
    Frame frame = frame_from_json(j["frame"]);
    std::vector<Rational> masses = json_detail::total_values_from_json(frame, j);
    return MassFunction(std::move(frame), std::move(masses));
}

inline Json set_function_to_json(const SetFunction& g) {
    return Json{{"frame", frame_to_json(g.frame())},
                {"values", json_detail::values_to_json(g.frame(), g.values())}};
}

// Value-array rendering for any rational table (measure values, masses,
// signed Mobius entries).
inline Json rational_values_to_json(const Frame& frame, const std::vector<Rational>& values) {
    return json_detail::values_to_json(frame, values);
}

// Accepts both ingestion forms: {"strict": [[A, B], ...]} meaning A > B, or
// {"ranking": [[A, ...], ...]} listing indifference groups lowest first.
inline PreferenceRelation relation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("frame"))
        throw input_error("a relation file must be an object with a \"frame\"");
    Frame frame = frame_from_json(j["frame"]);
    const bool has_strict = j.contains("strict");
    const bool has_ranking = j.contains("ranking");
    if (has_strict == has_ranking)
        throw input_error("a relation file needs exactly one of \"strict\" or \"ranking\"");

    if (has_strict) {
        if (!j["strict"].is_array())
            throw input_error("\"strict\" must be an array of subset pairs");
        std::vector<std::pair<SubsetId, SubsetId>> statements;
        for (const Json& pair : j["strict"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw input_error("each strict statement must be a pair of subsets");
            statements.emplace_back(subset_from_json(frame, pair[0]),
                                    subset_from_json(frame, pair[1]));
        }
        return PreferenceRelation::from_statements(std::move(frame), statements);
    }

    if (!j["ranking"].is_array())
        throw input_error("\"ranking\" must be an array of subset groups");
    std::vector<std::vector<SubsetId>> groups;
    for (const Json& group : j["ranking"]) {
        if (!group.is_array())
            throw input_error("each ranking group must be an array of subsets");
        std::vector<SubsetId> members;
        for (const Json& sub : group)
            members.push_back(subset_from_json(frame, sub));
        groups.push_back(std::move(members));
    }
    return PreferenceRelation::from_ranking(std::move(frame), groups);
}

// Ranking-form rendering; requires a weak order.
inline Json relation_to_ranking_json(const PreferenceRelation& r) {
    const RankedPartition part = partition(r);
    Json ranking = Json::array();
    for (const auto& cls : part.classes) {
        Json group = Json::array();
        for (SubsetId a : cls)
            group.push_back(subset_to_json(r.frame(), a));
        ranking.push_back(std::move(group));
    }
    return Json{{"frame", frame_to_json(r.frame())}, {"ranking", std::move(ranking)}};
}

inline Json witness_to_json(const Frame& frame, const Witness& w) {
    Json subsets = Json::array();
    for (SubsetId a : w.subsets)
        subsets.push_back(subset_to_json(frame, a));
    return Json{{"subsets", std::move(subsets)}, {"detail", w.detail}};
}

inline Json axiom_table_to_json(const Frame& frame, const AxiomTable& table) {
    Json out = Json::object();
    for (const auto& [id, result] : table.entries()) {
        Json entry{{"pass", result.pass}};
        if (result.witness)
            entry["witness"] = witness_to_json(frame, *result.witness);
        if (!result.note.empty())
            entry["note"] = result.note;
        out[id] = std::move(entry);
    }
    return out;
}

} // namespace qbel
