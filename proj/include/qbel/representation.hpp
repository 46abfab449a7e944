#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbel/lp.hpp"
#include "qbel/measures.hpp"
#include "qbel/relations.hpp"

namespace qbel {

struct CompatibilityVerdict {
    bool compatible = true;
    std::optional<Witness> witness; // first disagreeing pair, strict side first
};

// A > B in the induced relation exactly when g(A) > g(B); equal values are
// indifferent. The result is always a weak order.
inline PreferenceRelation induce_relation(const SetFunction& g) {
    return PreferenceRelation::from_comparator(g.frame(), [&](SubsetId a, SubsetId b) {
        const int c = cmp(g.at(a), g.at(b));
        return c > 0   ? Comparison::first_preferred
               : c < 0 ? Comparison::second_preferred
                       : Comparison::indifferent;
    });
}

inline CompatibilityVerdict verify_compatibility(const SetFunction& g,
                                                 const PreferenceRelation& r) {
    require_same_frame(g.frame(), r.frame());
    const Frame& frame = g.frame();
    const std::uint32_t n = frame.subset_count();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b) {
            const int values = cmp(g.at({a}), g.at({b}));
            const Comparison verdict = r.compare({a}, {b});
            const bool match = (values > 0 && verdict == Comparison::first_preferred) ||
                               (values < 0 && verdict == Comparison::second_preferred) ||
                               (values == 0 && verdict == Comparison::indifferent);
            if (match)
                continue;
            Witness w;
            const std::string ga = rational_string(g.at({a}));
            const std::string gb = rational_string(g.at({b}));
            if (verdict == Comparison::first_preferred) {
                w.subsets = {SubsetId{a}, SubsetId{b}};
                w.detail = "relation has " + frame.subset_name({a}) + " > " +
                           frame.subset_name({b}) + " but the values give " + ga +
                           (values < 0 ? " < " : " = ") + gb;
            } else if (verdict == Comparison::second_preferred) {
                w.subsets = {SubsetId{b}, SubsetId{a}};
                w.detail = "relation has " + frame.subset_name({b}) + " > " +
                           frame.subset_name({a}) + " but the values give " + gb +
                           (values > 0 ? " < " : " = ") + ga;
            } else {
                w.subsets = values > 0 ? std::vector<SubsetId>{SubsetId{a}, SubsetId{b}}
                                       : std::vector<SubsetId>{SubsetId{b}, SubsetId{a}};
                w.detail = "relation has " + frame.subset_name({a}) + " ~ " +
                           frame.subset_name({b}) + " but the values give " + ga +
                           (values > 0 ? " > " : " < ") + gb;
            }
            return CompatibilityVerdict{false, std::move(w)};
        }
    return CompatibilityVerdict{true, std::nullopt};
}

// Rank function of a weak order: each subset maps to the index of its
// indifference class. Compatible with the relation by construction.
inline SetFunction ordinal_representation(const PreferenceRelation& r) {
    const RankedPartition part = partition(r);
    const std::uint32_t n = r.frame().subset_count();
    std::vector<Rational> values(n);
    for (std::uint32_t bits = 0; bits < n; ++bits)
        values[bits] = Rational(static_cast<unsigned long>(part.class_index[bits]));
    return SetFunction(r.frame(), std::move(values));
}

namespace repr_detail {

// First failing axiom among Q1, Q2 and `extra`, as (id, witness detail).
inline std::optional<std::pair<std::string, std::string>>
first_failure(const PreferenceRelation& r, std::initializer_list<RelationAxiom> extra) {
    const RelationReport wo = check_weak_order(r);
    for (const auto& [id, result] : wo.axioms.entries())
        if (!result.pass)
            return std::make_pair(id, result.witness ? result.witness->detail : std::string{});
    for (RelationAxiom ax : extra) {
        const AxiomResult result = check_axiom(r, ax);
        if (!result.pass)
            return std::make_pair(std::string(axiom_id(ax)),
                                  result.witness ? result.witness->detail : std::string{});
    }
    return std::nullopt;
}

} // namespace repr_detail

struct BeliefConstruction {
    SetFunction belief;
    MassFunction mass;
    std::vector<Rational> class_values; // recursion value per class, lowest first
};

// Compatible belief function for a qualitative belief relation. Classes get
// integer values bottom-up: each class takes the larger of (previous class
// value + 1) and, when no member properly contains another member of the
// same class, the largest alternating-sign sum over any member's proper
// subsets. Normalizing by the top class value yields the belief function.
inline BeliefConstruction construct_belief(const PreferenceRelation& r) {
    if (const auto fail = repr_detail::first_failure(
            r, {RelationAxiom::Q3, RelationAxiom::Q4Prime, RelationAxiom::Q5Prime}))
        throw not_qualitative_belief_error(
            fail->first, "relation is not a qualitative belief relation; " + fail->first +
                             " fails: " + fail->second);

    const Frame& frame = r.frame();
    const RankedPartition part = partition(r);
    const std::size_t k = part.class_count();

    std::vector<Rational> f(k, Rational(0));
    for (std::size_t c = 1; c < k; ++c) {
        bool subset_free = true;
        for (SubsetId a : part.classes[c]) {
            for (SubsetId b : part.classes[c])
                if (is_proper_subset(b, a)) {
                    subset_free = false;
                    break;
                }
            if (!subset_free)
                break;
        }

        Rational value = f[c - 1] + 1;
        if (subset_free) {
            for (SubsetId a : part.classes[c]) {
                Rational sum = 0;
                for (std::uint32_t sub = (a.bits - 1) & a.bits;; sub = (sub - 1) & a.bits) {
                    const std::size_t sub_class = part.class_index[sub];
                    if (sub_class >= c)
                        throw internal_error("proper subset ranked at or above its superset "
                                             "inside a subset-free class");
                    const int diff = cardinality(a) - cardinality({sub});
                    if (diff % 2 == 0)
                        sum += f[sub_class];
                    else
                        sum -= f[sub_class];
                    if (sub == 0)
                        break;
                }
                const Rational bound = -sum;
                if (bound > value)
                    value = bound;
            }
        }
        f[c] = value;
        if (f[c].get_den() != 1)
            throw internal_error("class values must stay integral");
    }

    const Rational& top = f[k - 1];
    if (top <= 0)
        throw internal_error("top class value must be positive");

    const std::uint32_t n = frame.subset_count();
    std::vector<Rational> values(n);
    for (std::uint32_t bits = 0; bits < n; ++bits)
        values[bits] = f[part.class_index[bits]] / top;
    SetFunction belief(frame, std::move(values));

    const MobiusTransform mobius = mass_from_set_function(belief, World::closed);
    if (!mobius.is_mass_function())
        throw internal_error("constructed function is not a belief function");
    if (!check_belief(belief).pass())
        throw internal_error("constructed function fails the belief axioms");
    if (const auto verdict = verify_compatibility(belief, r); !verdict.compatible)
        throw internal_error("constructed belief is not compatible with the relation: " +
                             verdict.witness->detail);

    return BeliefConstruction{std::move(belief), mobius.to_mass_function(), std::move(f)};
}

// The exact feasibility program behind probability representability: one
// nonnegative weight per frame element with unit total, every strict
// preference separated by a shared slack and every indifference forced to
// equality; the slack is then maximized (capped at 1 to keep the program
// bounded). The relation is representable exactly when the optimum is
// positive.
inline LinearSystem scott_system(const PreferenceRelation& r) {
    const Frame& frame = r.frame();
    const std::size_t s = frame.size();
    const std::uint32_t n = frame.subset_count();
    const std::size_t eps = s;

    LinearSystem sys;
    for (std::size_t i = 0; i < s; ++i)
        sys.variables.push_back("p_" + frame.element(i));
    sys.variables.push_back("epsilon");
    sys.objective.assign(s + 1, Rational(0));
    sys.objective[eps] = 1;

    const auto difference = [&](SubsetId hi, SubsetId lo) {
        std::vector<Rational> c(s + 1, Rational(0));
        for (std::size_t i = 0; i < s; ++i) {
            if (hi.bits & (std::uint32_t{1} << i))
                c[i] += 1;
            if (lo.bits & (std::uint32_t{1} << i))
                c[i] -= 1;
        }
        return c;
    };

    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b) {
            switch (r.compare({a}, {b})) {
            case Comparison::first_preferred: {
                auto c = difference({a}, {b});
                c[eps] = -1;
                sys.constraints.push_back({std::move(c), ConstraintSense::greater_equal, 0});
                break;
            }
            case Comparison::second_preferred: {
                auto c = difference({b}, {a});
                c[eps] = -1;
                sys.constraints.push_back({std::move(c), ConstraintSense::greater_equal, 0});
                break;
            }
            case Comparison::indifferent:
                sys.constraints.push_back(
                    {difference({a}, {b}), ConstraintSense::equal, 0});
                break;
            }
        }

    std::vector<Rational> unit(s + 1, Rational(1));
    unit[eps] = 0;
    sys.constraints.push_back({std::move(unit), ConstraintSense::equal, 1});

    std::vector<Rational> cap(s + 1, Rational(0));
    cap[eps] = 1;
    sys.constraints.push_back({std::move(cap), ConstraintSense::less_equal, 1});
    return sys;
}

struct ScottConstruction {
    std::optional<SetFunction> probability; // present iff representable
    LpOutcome lp;

    bool representable() const { return probability.has_value(); }
};

inline ScottConstruction construct_probability_scott(const PreferenceRelation& r) {
    ScottConstruction result{std::nullopt, solve(scott_system(r))};
    if (result.lp.status == LpStatus::unbounded)
        throw internal_error("the capped slack objective cannot be unbounded");
    if (result.lp.status != LpStatus::optimal || result.lp.optimal_value <= 0)
        return result;

    const Frame& frame = r.frame();
    const std::uint32_t n = frame.subset_count();
    std::vector<Rational> values(n, Rational(0));
    for (std::uint32_t bits = 0; bits < n; ++bits)
        for (std::size_t i = 0; i < frame.size(); ++i)
            if (bits & (std::uint32_t{1} << i))
                values[bits] += result.lp.assignment[i].second;

    SetFunction p(frame, std::move(values));
    if (!check_probability(p).pass())
        throw internal_error("LP solution is not a probability function");
    if (const auto verdict = verify_compatibility(p, r); !verdict.compatible)
        throw internal_error("LP solution is not compatible with the relation: " +
                             verdict.witness->detail);
    result.probability = std::move(p);
    return result;
}

// Qualitative probability in, order-preserving belief function out. The
// construction itself is the qualitative-belief one; the extra axioms make
// the result monotonic, which is re-asserted before returning.
inline BeliefConstruction construct_monotonic_belief(const PreferenceRelation& r) {
    if (const auto fail = repr_detail::first_failure(
            r, {RelationAxiom::Q3, RelationAxiom::Q4, RelationAxiom::Q5}))
        throw not_qualitative_probability_error(
            fail->first, "relation is not a qualitative probability relation; " + fail->first +
                             " fails: " + fail->second);

    BeliefConstruction built = [&] {
        try {
            return construct_belief(r);
        } catch (const axiom_precondition_error& e) {
            throw internal_error(std::string("qualitative probability failed the qualitative "
                                             "belief precondition: ") +
                                 e.what());
        }
    }();
    if (!check_monotonic(built.belief).pass())
        throw internal_error("constructed belief function is not monotonic");
    return built;
}

struct GeneralizedConstruction {
    SetFunction belief;
    MassFunction mass; // open-world mass; the empty set may carry weight
    bool degenerate = false;            // whole frame indifferent to the empty set
    std::vector<Rational> class_values; // empty in the degenerate case
};

// Works without nontriviality: either the whole frame beats the empty set
// and the qualitative-belief construction applies, or the two are
// indifferent, in which case the relation collapses to total indifference
// and all the weight goes to the empty set.
inline GeneralizedConstruction construct_generalized_belief(const PreferenceRelation& r) {
    if (const auto fail =
            repr_detail::first_failure(r, {RelationAxiom::Q4Prime, RelationAxiom::Q5Prime}))
        throw axiom_precondition_error(fail->first,
                                       "relation is not a generalized belief structure; " +
                                           fail->first + " fails: " + fail->second);

    const Frame& frame = r.frame();
    const std::uint32_t n = frame.subset_count();

    if (r.strictly_prefers(frame.full_set(), empty_subset)) {
        BeliefConstruction built = [&] {
            try {
                return construct_belief(r);
            } catch (const axiom_precondition_error& e) {
                throw internal_error(std::string("generalized-belief preconditions failed to "
                                                 "carry over: ") +
                                     e.what());
            }
        }();
        GeneralizedConstruction out{std::move(built.belief), std::move(built.mass), false,
                                    std::move(built.class_values)};
        if (!check_generalized(out.belief).pass())
            throw internal_error("constructed belief fails the generalized axioms");
        return out;
    }

    // Dominance rules out {} > frame, so the frame is indifferent to {},
    // which forces total indifference.
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
            if (!r.indifferent({a}, {b}))
                throw internal_error("frame indifferent to the empty set yet " +
                                     frame.subset_name({a}) + " and " + frame.subset_name({b}) +
                                     " are not indifferent");

    SetFunction belief(frame, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> masses(n, Rational(0));
    masses[0] = 1;
    GeneralizedConstruction out{std::move(belief), MassFunction(frame, std::move(masses)), true,
                                {}};
    if (!check_generalized(out.belief).pass())
        throw internal_error("degenerate construction fails the generalized axioms");
    if (const auto verdict = verify_compatibility(out.belief, r); !verdict.compatible)
        throw internal_error("degenerate construction is not compatible with the relation");
    return out;
}

} // namespace qbel
