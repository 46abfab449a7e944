#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbel/error.hpp"
#include "qbel/frame.hpp"
#include "qbel/report.hpp"

namespace qbel {

enum class Comparison : std::int8_t {
    second_preferred = -1,
    indifferent = 0,
    first_preferred = 1,
};

// Complete preference relation over all subsets, stored as a full
// antisymmetric verdict matrix. Asymmetry therefore holds by construction;
// contradictions can only arise, and are rejected, while ingesting raw
// statement lists.
class PreferenceRelation {
public:
    static PreferenceRelation all_indifferent(Frame frame) {
        return PreferenceRelation(std::move(frame));
    }

    // Listed pairs become strict verdicts, every unlisted pair stays
    // indifferent. Duplicates are tolerated; a pair listed in both
    // directions is a contradiction.
    static PreferenceRelation
    from_statements(Frame frame, const std::vector<std::pair<SubsetId, SubsetId>>& strict) {
        PreferenceRelation r(std::move(frame));
        for (const auto& [a, b] : strict) {
            r.frame_.require(a);
            r.frame_.require(b);
            if (a == b)
                throw contradiction_error("statement lists " + r.frame_.subset_name(a) +
                                          " as strictly preferred to itself");
            if (r.compare(a, b) == Comparison::second_preferred)
                throw contradiction_error("statements list both " + r.frame_.subset_name(a) +
                                          " > " + r.frame_.subset_name(b) + " and " +
                                          r.frame_.subset_name(b) + " > " +
                                          r.frame_.subset_name(a));
            r.set(a, b, Comparison::first_preferred);
        }
        return r;
    }

    // Groups listed lowest first; within-group pairs are indifferent and
    // cross-group pairs strict. The groups must partition the subset space.
    static PreferenceRelation
    from_ranking(Frame frame, const std::vector<std::vector<SubsetId>>& groups_lowest_first) {
        const std::uint32_t n = frame.subset_count();
        std::vector<int> group_of(n, -1);
        for (std::size_t c = 0; c < groups_lowest_first.size(); ++c) {
            if (groups_lowest_first[c].empty())
                throw coverage_error("ranking contains an empty group");
            for (SubsetId a : groups_lowest_first[c]) {
                frame.require(a);
                if (group_of[a.bits] != -1)
                    throw coverage_error("subset " + frame.subset_name(a) +
                                         " appears twice in the ranking");
                group_of[a.bits] = static_cast<int>(c);
            }
        }
        for (std::uint32_t bits = 0; bits < n; ++bits)
            if (group_of[bits] == -1)
                throw coverage_error("ranking misses subset " + frame.subset_name({bits}));

        PreferenceRelation r(std::move(frame));
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = a + 1; b < n; ++b) {
                if (group_of[a] > group_of[b])
                    r.set({a}, {b}, Comparison::first_preferred);
                else if (group_of[a] < group_of[b])
                    r.set({a}, {b}, Comparison::second_preferred);
            }
        return r;
    }

    // Low-level builder for callers that derive verdicts from values:
    // cmp(a, b) is invoked once per unordered pair a < b.
    template <typename Fn>
    static PreferenceRelation from_comparator(Frame frame, Fn&& cmp) {
        PreferenceRelation r(std::move(frame));
        for (std::uint32_t a = 0; a < r.n_; ++a)
            for (std::uint32_t b = a + 1; b < r.n_; ++b)
                r.set({a}, {b}, cmp(SubsetId{a}, SubsetId{b}));
        return r;
    }

    const Frame& frame() const noexcept { return frame_; }

    Comparison compare(SubsetId a, SubsetId b) const {
        frame_.require(a);
        frame_.require(b);
        return static_cast<Comparison>(cmp_[std::size_t{a.bits} * n_ + b.bits]);
    }

    // a is strictly preferred to b
    bool strictly_prefers(SubsetId a, SubsetId b) const {
        return compare(a, b) == Comparison::first_preferred;
    }

    bool indifferent(SubsetId a, SubsetId b) const {
        return compare(a, b) == Comparison::indifferent;
    }

    // a is weakly preferred to b, i.e. b is not strictly preferred to a
    bool weakly_prefers(SubsetId a, SubsetId b) const { return !strictly_prefers(b, a); }

    friend bool operator==(const PreferenceRelation& x, const PreferenceRelation& y) {
        return x.frame_ == y.frame_ && x.cmp_ == y.cmp_;
    }

private:
    explicit PreferenceRelation(Frame frame)
        : frame_(std::move(frame)), n_(frame_.subset_count()),
          cmp_(std::size_t{n_} * n_, 0) {}

    void set(SubsetId a, SubsetId b, Comparison c) {
        cmp_[std::size_t{a.bits} * n_ + b.bits] = static_cast<std::int8_t>(c);
        cmp_[std::size_t{b.bits} * n_ + a.bits] = static_cast<std::int8_t>(-static_cast<int>(c));
    }

    Frame frame_;
    std::uint32_t n_;
    std::vector<std::int8_t> cmp_;
};

enum class StructureClass {
    not_weak_order,
    weak_order,
    generalized_belief_structure,
    qualitative_belief,
    qualitative_probability,
};

inline std::string_view to_string(StructureClass c) {
    switch (c) {
    case StructureClass::not_weak_order: return "not_weak_order";
    case StructureClass::weak_order: return "weak_order";
    case StructureClass::generalized_belief_structure: return "generalized_belief_structure";
    case StructureClass::qualitative_belief: return "qualitative_belief";
    case StructureClass::qualitative_probability: return "qualitative_probability";
    }
    return "not_weak_order";
}

struct RelationReport {
    AxiomTable axioms;
    std::optional<StructureClass> structure_class;

    bool pass() const { return axioms.all_pass(); }
};

// (Q1) asymmetry holds by construction for matrix-stored relations and is
// recorded as such; (Q2) negative transitivity is swept over all ordered
// triples and the first violation in index order becomes the witness.
inline RelationReport check_weak_order(const PreferenceRelation& r) {
    const Frame& frame = r.frame();
    const std::uint32_t n = frame.subset_count();
    RelationReport rep;
    rep.axioms.add("Q1", pass_result("holds by construction: verdicts are stored antisymmetrically"));

    AxiomResult q2 = pass_result();
    for (std::uint32_t a = 0; a < n && q2.pass; ++a)
        for (std::uint32_t b = 0; b < n && q2.pass; ++b) {
            if (r.strictly_prefers({a}, {b}))
                continue;
            for (std::uint32_t c = 0; c < n; ++c) {
                if (r.strictly_prefers({b}, {c}))
                    continue;
                if (r.strictly_prefers({a}, {c})) {
                    q2 = fail_result({{SubsetId{a}, SubsetId{b}, SubsetId{c}},
                                      "not(" + frame.subset_name({a}) + " > " +
                                          frame.subset_name({b}) + ") and not(" +
                                          frame.subset_name({b}) + " > " + frame.subset_name({c}) +
                                          ") yet " + frame.subset_name({a}) + " > " +
                                          frame.subset_name({c})});
                    break;
                }
            }
        }
    rep.axioms.add("Q2", q2);
    return rep;
}

// Indifference classes of a weak order, least preferred first; members kept
// in index order.
struct RankedPartition {
    std::vector<std::vector<SubsetId>> classes;
    std::vector<std::size_t> class_index; // subset bits -> class position

    std::size_t rank(SubsetId a) const { return class_index.at(a.bits); }
    std::size_t class_count() const noexcept { return classes.size(); }
};

inline RankedPartition partition(const PreferenceRelation& r) {
    const RelationReport wo = check_weak_order(r);
    if (!wo.pass()) {
        const AxiomResult* q2 = wo.axioms.find("Q2");
        throw not_weak_order_error("Q2", "relation is not a weak order: " +
                                             (q2 && q2->witness ? q2->witness->detail
                                                                : std::string("Q2 fails")));
    }
    const std::uint32_t n = r.frame().subset_count();
    std::vector<SubsetId> order(n);
    for (std::uint32_t bits = 0; bits < n; ++bits)
        order[bits] = SubsetId{bits};
    std::stable_sort(order.begin(), order.end(),
                     [&](SubsetId x, SubsetId y) { return r.strictly_prefers(y, x); });

    RankedPartition part;
    part.class_index.assign(n, 0);
    for (SubsetId a : order) {
        if (part.classes.empty() || r.strictly_prefers(a, part.classes.back().front()))
            part.classes.emplace_back();
        part.classes.back().push_back(a);
        part.class_index[a.bits] = part.classes.size() - 1;
    }
    return part;
}

enum class RelationAxiom { Q3, Q4, Q4Prime, Q5, Q5Prime };

inline std::string_view axiom_id(RelationAxiom a) {
    switch (a) {
    case RelationAxiom::Q3: return "Q3";
    case RelationAxiom::Q4: return "Q4";
    case RelationAxiom::Q4Prime: return "Q4'";
    case RelationAxiom::Q5: return "Q5";
    case RelationAxiom::Q5Prime: return "Q5'";
    }
    return "Q3";
}

// One axiom, one exhaustive sweep in subset index order; the first violation
// found becomes the witness, which keeps reports deterministic.
inline AxiomResult check_axiom(const PreferenceRelation& r, RelationAxiom which) {
    const Frame& frame = r.frame();
    const std::uint32_t n = frame.subset_count();
    const SubsetId full = frame.full_set();

    switch (which) {
    case RelationAxiom::Q3: {
        if (r.strictly_prefers(full, empty_subset))
            return pass_result();
        return fail_result({{full, empty_subset},
                            frame.subset_name(full) + " is not strictly preferred to {}"});
    }
    case RelationAxiom::Q4: {
        for (std::uint32_t a = 0; a < n; ++a)
            if (r.strictly_prefers(empty_subset, {a}))
                return fail_result({{empty_subset, SubsetId{a}},
                                    "{} is strictly preferred to " + frame.subset_name({a})});
        return pass_result();
    }
    case RelationAxiom::Q4Prime: {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                if (!is_subset({b}, {a}))
                    continue;
                if (r.strictly_prefers({b}, {a}))
                    return fail_result({{SubsetId{a}, SubsetId{b}},
                                        frame.subset_name({a}) + " contains " +
                                            frame.subset_name({b}) + " yet " +
                                            frame.subset_name({b}) + " > " +
                                            frame.subset_name({a})});
            }
        return pass_result();
    }
    case RelationAxiom::Q5: {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c) {
                    if ((a | b) & c)
                        continue;
                    const bool left = r.strictly_prefers({a}, {b});
                    const bool right =
                        r.strictly_prefers(set_union({a}, {c}), set_union({b}, {c}));
                    if (left != right)
                        return fail_result(
                            {{SubsetId{a}, SubsetId{b}, SubsetId{c}},
                             frame.subset_name({a}) + " > " + frame.subset_name({b}) + " is " +
                                 (left ? "true" : "false") + " but " +
                                 frame.subset_name(set_union({a}, {c})) + " > " +
                                 frame.subset_name(set_union({b}, {c})) + " is " +
                                 (right ? "true" : "false")});
                }
        return pass_result();
    }
    case RelationAxiom::Q5Prime: {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                if (!is_proper_subset({b}, {a}))
                    continue;
                if (!r.strictly_prefers({a}, {b}))
                    continue;
                for (std::uint32_t c = 0; c < n; ++c) {
                    if (a & c)
                        continue;
                    if (!r.strictly_prefers(set_union({a}, {c}), set_union({b}, {c})))
                        return fail_result(
                            {{SubsetId{a}, SubsetId{b}, SubsetId{c}},
                             frame.subset_name({a}) + " > " + frame.subset_name({b}) + " but not " +
                                 frame.subset_name(set_union({a}, {c})) + " > " +
                                 frame.subset_name(set_union({b}, {c}))});
                }
            }
        return pass_result();
    }
    }
    throw internal_error("unknown relation axiom");
}

inline RelationReport check_axioms(const PreferenceRelation& r,
                                   std::initializer_list<RelationAxiom> which) {
    RelationReport rep;
    for (RelationAxiom ax : which)
        rep.axioms.add(std::string(axiom_id(ax)), check_axiom(r, ax));
    return rep;
}

namespace relation_detail {

inline StructureClass structure_from_axioms(bool q2, bool q3, bool q4, bool q4p, bool q5,
                                            bool q5p) {
    if (!q2)
        return StructureClass::not_weak_order;
    if (q3 && q4 && q5) {
        // qualitative probability entails qualitative belief
        if (!(q4p && q5p))
            throw internal_error("Q1-Q5 hold but Q4' or Q5' fails");
        return StructureClass::qualitative_probability;
    }
    if (q3 && q4p && q5p)
        return StructureClass::qualitative_belief;
    if (q4p && q5p)
        return StructureClass::generalized_belief_structure;
    return StructureClass::weak_order;
}

} // namespace relation_detail

inline StructureClass classify_relation(const PreferenceRelation& r) {
    if (!check_weak_order(r).pass())
        return StructureClass::not_weak_order;
    return relation_detail::structure_from_axioms(
        true, check_axiom(r, RelationAxiom::Q3).pass, check_axiom(r, RelationAxiom::Q4).pass,
        check_axiom(r, RelationAxiom::Q4Prime).pass, check_axiom(r, RelationAxiom::Q5).pass,
        check_axiom(r, RelationAxiom::Q5Prime).pass);
}

// All seven axioms plus the structure class, computed in one go.
inline RelationReport full_relation_report(const PreferenceRelation& r) {
    RelationReport rep = check_weak_order(r);
    for (RelationAxiom ax : {RelationAxiom::Q3, RelationAxiom::Q4, RelationAxiom::Q4Prime,
                             RelationAxiom::Q5, RelationAxiom::Q5Prime})
        rep.axioms.add(std::string(axiom_id(ax)), check_axiom(r, ax));
    rep.structure_class = relation_detail::structure_from_axioms(
        rep.axioms.passes("Q2"), rep.axioms.passes("Q3"), rep.axioms.passes("Q4"),
        rep.axioms.passes("Q4'"), rep.axioms.passes("Q5"), rep.axioms.passes("Q5'"));
    return rep;
}

} // namespace qbel
