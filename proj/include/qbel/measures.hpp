#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbel/frame.hpp"
#include "qbel/rational.hpp"
#include "qbel/report.hpp"

namespace qbel {

// Total map from subsets to nonnegative rationals. Deliberately not required
// to be normalized: unnormalized set functions are first-class values here.
class SetFunction {
public:
    SetFunction(Frame frame, std::vector<Rational> values)
        : frame_(std::move(frame)), values_(std::move(values)) {
        if (values_.size() != frame_.subset_count())
            throw input_error("a set function must assign a value to every subset (" +
                              std::to_string(frame_.subset_count()) + " expected, " +
                              std::to_string(values_.size()) + " given)");
        for (std::uint32_t bits = 0; bits < values_.size(); ++bits)
            if (values_[bits] < 0)
                throw input_error("set function value for " + frame_.subset_name({bits}) +
                                  " is negative: " + rational_string(values_[bits]));
    }

    const Frame& frame() const noexcept { return frame_; }

    const Rational& at(SubsetId a) const {
        frame_.require(a);
        return values_[a.bits];
    }
    const Rational& operator()(SubsetId a) const { return at(a); }

    const std::vector<Rational>& values() const noexcept { return values_; }

    friend bool operator==(const SetFunction& x, const SetFunction& y) {
        return x.frame_ == y.frame_ && x.values_ == y.values_;
    }

private:
    Frame frame_;
    std::vector<Rational> values_;
};

// Basic probability assignment: nonnegative masses summing to exactly one.
// A positive mass on the empty set is allowed; closed_world() tells whether
// it is zero.
class MassFunction {
public:
    MassFunction(Frame frame, std::vector<Rational> masses)
        : frame_(std::move(frame)), masses_(std::move(masses)) {
        if (masses_.size() != frame_.subset_count())
            throw input_error("a mass function must assign a mass to every subset");
        Rational total = 0;
        for (std::uint32_t bits = 0; bits < masses_.size(); ++bits) {
            if (masses_[bits] < 0)
                throw input_error("mass of " + frame_.subset_name({bits}) +
                                  " is negative: " + rational_string(masses_[bits]));
            total += masses_[bits];
        }
        if (total != 1)
            throw input_error("masses must sum to exactly 1, got " + rational_string(total));
    }

    const Frame& frame() const noexcept { return frame_; }
    bool closed_world() const { return masses_[0] == 0; }

    const Rational& at(SubsetId a) const {
        frame_.require(a);
        return masses_[a.bits];
    }
    const Rational& operator()(SubsetId a) const { return at(a); }

    const std::vector<Rational>& masses() const noexcept { return masses_; }

    friend bool operator==(const MassFunction& x, const MassFunction& y) {
        return x.frame_ == y.frame_ && x.masses_ == y.masses_;
    }

private:
    Frame frame_;
    std::vector<Rational> masses_;
};

enum class World { closed, open };

// Belief values from masses: sum of m over all subsets of each proposition
// (closed world) or over its non-empty subsets (open world).
inline SetFunction belief_from_mass(const MassFunction& m, World world) {
    if (world == World::closed && !m.closed_world())
        throw open_world_mass_error("closed-world belief requested but m({}) = " +
                                    rational_string(m.at(empty_subset)));
    const std::uint32_t n = m.frame().subset_count();
    std::vector<Rational> bel(n, Rational(0));
    for (std::uint32_t a = 0; a < n; ++a) {
        Rational sum = 0;
        for (std::uint32_t sub = a;; sub = (sub - 1) & a) {
            if (!(world == World::open && sub == 0))
                sum += m.at({sub});
            if (sub == 0)
                break;
        }
        bel[a] = sum;
    }
    return SetFunction(m.frame(), std::move(bel));
}

// Signed Mobius inversion of a set function. `masses` recovers the basic
// assignment whenever the input really is a belief (or generalized belief)
// function; otherwise some entry is negative and first_negative points at
// the smallest-index offender.
struct MobiusTransform {
    Frame frame;
    World world = World::closed;
    std::vector<Rational> masses;
    std::optional<SubsetId> first_negative;
    Rational total = 0; // exact sum of all masses

    bool is_mass_function() const { return !first_negative.has_value() && total == 1; }

    MassFunction to_mass_function() const {
        if (!is_mass_function())
            throw internal_error("signed Mobius transform is not a mass function");
        return MassFunction(frame, masses);
    }
};

namespace measure_detail {

// Raw alternating-sign inversion, no preconditions. In the open world the
// empty set's mass is defined as 1 - g(full frame) instead of the formula.
inline MobiusTransform signed_mobius(const SetFunction& g, World world) {
    const std::uint32_t n = g.frame().subset_count();
    std::vector<Rational> m(n, Rational(0));
    for (std::uint32_t a = 0; a < n; ++a) {
        Rational sum = 0;
        for (std::uint32_t sub = a;; sub = (sub - 1) & a) {
            const int diff = cardinality({a}) - cardinality({sub});
            if (diff % 2 == 0)
                sum += g.at({sub});
            else
                sum -= g.at({sub});
            if (sub == 0)
                break;
        }
        m[a] = sum;
    }
    if (world == World::open)
        m[0] = 1 - g.at(g.frame().full_set());

    MobiusTransform out{g.frame(), world, std::move(m), std::nullopt, 0};
    for (std::uint32_t a = 0; a < n; ++a) {
        out.total += out.masses[a];
        if (!out.first_negative && out.masses[a] < 0)
            out.first_negative = SubsetId{a};
    }
    return out;
}

} // namespace measure_detail

// Basic assignment from a set function via Mobius inversion. Requires
// g({}) = 0 in both worlds. Negative entries are reported, not thrown:
// callers use them to classify.
inline MobiusTransform mass_from_set_function(const SetFunction& g, World world) {
    if (g.at(empty_subset) != 0)
        throw nonzero_empty_value_error("g({}) = " + rational_string(g.at(empty_subset)) +
                                        ", expected 0");
    return measure_detail::signed_mobius(g, world);
}

enum class MeasureClass { probability, monotonic_belief, belief, generalized_belief, none };

inline std::string_view to_string(MeasureClass c) {
    switch (c) {
    case MeasureClass::probability: return "probability";
    case MeasureClass::monotonic_belief: return "monotonic_belief";
    case MeasureClass::belief: return "belief";
    case MeasureClass::generalized_belief: return "generalized_belief";
    case MeasureClass::none: return "none";
    }
    return "none";
}

struct MeasureReport {
    AxiomTable axioms;
    std::optional<Rational> inferred_empty_mass; // filled by the open-world check

    bool pass() const { return axioms.all_pass(); }
};

namespace measure_detail {

inline AxiomResult check_b1(const SetFunction& g) {
    if (g.at(empty_subset) == 0)
        return pass_result();
    return fail_result({{empty_subset},
                        "g({}) = " + rational_string(g.at(empty_subset)) + ", expected 0"});
}

inline AxiomResult check_b2(const SetFunction& g) {
    const SubsetId full = g.frame().full_set();
    if (g.at(full) == 1)
        return pass_result();
    return fail_result({{full},
                        "g(" + g.frame().subset_name(full) + ") = " + rational_string(g.at(full)) +
                            ", expected 1"});
}

} // namespace measure_detail

// Additivity: g({}) = 0, g(frame) = 1, and g(A u B) = g(A) + g(B) for every
// disjoint pair. The singleton-sum shortcut is evaluated as well and the two
// routes must agree.
inline MeasureReport check_probability(const SetFunction& g) {
    const Frame& frame = g.frame();
    const std::uint32_t n = frame.subset_count();
    MeasureReport rep;
    rep.axioms.add("B1", measure_detail::check_b1(g));
    rep.axioms.add("B2", measure_detail::check_b2(g));

    AxiomResult b3 = pass_result();
    for (std::uint32_t a = 0; a < n && b3.pass; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            if (!are_disjoint({a}, {b}))
                continue;
            const SubsetId ab = set_union({a}, {b});
            if (g.at(ab) != g.at({a}) + g.at({b})) {
                b3 = fail_result({{SubsetId{a}, SubsetId{b}},
                                  "g(" + frame.subset_name(ab) + ") = " + rational_string(g.at(ab)) +
                                      " but g(" + frame.subset_name({a}) + ") + g(" +
                                      frame.subset_name({b}) + ") = " +
                                      rational_string(g.at({a}) + g.at({b}))});
                break;
            }
        }
    rep.axioms.add("B3", b3);

    // singleton-sum route
    bool fast = true;
    Rational singleton_total = 0;
    for (std::size_t i = 0; i < frame.size(); ++i)
        singleton_total += g.at(frame.singleton(i));
    if (singleton_total != 1)
        fast = false;
    for (std::uint32_t a = 0; a < n && fast; ++a) {
        Rational sum = 0;
        for (std::size_t i = 0; i < frame.size(); ++i)
            if (a & (std::uint32_t{1} << i))
                sum += g.at(frame.singleton(i));
        if (g.at({a}) != sum)
            fast = false;
    }
    if (fast != rep.pass())
        throw internal_error("additivity check routes disagree");
    return rep;
}

// Belief-function test: g({}) = 0, g(frame) = 1, and a nonnegative
// closed-world Mobius transform. Sup-additivity is decided through the
// transform; the literal bounded check lives in the oracle module.
inline MeasureReport check_belief(const SetFunction& g) {
    MeasureReport rep;
    rep.axioms.add("B1", measure_detail::check_b1(g));
    rep.axioms.add("B2", measure_detail::check_b2(g));

    const MobiusTransform mobius = measure_detail::signed_mobius(g, World::closed);
    AxiomResult b3p = pass_result();
    if (mobius.first_negative) {
        const SubsetId bad = *mobius.first_negative;
        b3p = fail_result({{bad},
                           "Mobius mass of " + g.frame().subset_name(bad) + " is " +
                               rational_string(mobius.masses[bad.bits])});
    }
    rep.axioms.add("B3'", b3p);
    return rep;
}

// Order preservation under disjoint unions, swept over every triple (A,B,C)
// with (A u B) disjoint from C: g(A) > g(B) iff g(A u C) > g(B u C).
inline MeasureReport check_monotonic(const SetFunction& g) {
    const Frame& frame = g.frame();
    const std::uint32_t n = frame.subset_count();
    MeasureReport rep;
    AxiomResult b4 = pass_result();
    for (std::uint32_t a = 0; a < n && b4.pass; ++a)
        for (std::uint32_t b = 0; b < n && b4.pass; ++b)
            for (std::uint32_t c = 0; c < n; ++c) {
                if ((a | b) & c)
                    continue;
                const bool left = g.at({a}) > g.at({b});
                const bool right = g.at(set_union({a}, {c})) > g.at(set_union({b}, {c}));
                if (left != right) {
                    b4 = fail_result(
                        {{SubsetId{a}, SubsetId{b}, SubsetId{c}},
                         "g(" + frame.subset_name({a}) + ") > g(" + frame.subset_name({b}) +
                             ") is " + (left ? "true" : "false") + " but g(" +
                             frame.subset_name(set_union({a}, {c})) + ") > g(" +
                             frame.subset_name(set_union({b}, {c})) + ") is " +
                             (right ? "true" : "false")});
                    break;
                }
            }
    rep.axioms.add("B4", b4);
    return rep;
}

// Open-world test: g({}) = 0, nonnegative Mobius masses on non-empty
// subsets, and an inferred empty-set mass 1 - g(frame) inside [0, 1].
inline MeasureReport check_generalized(const SetFunction& g) {
    const Frame& frame = g.frame();
    MeasureReport rep;
    rep.axioms.add("B1", measure_detail::check_b1(g));

    const MobiusTransform mobius = measure_detail::signed_mobius(g, World::open);
    const Rational& empty_mass = mobius.masses[0];
    rep.inferred_empty_mass = empty_mass;
    if (empty_mass >= 0 && empty_mass <= 1)
        rep.axioms.add("B2'", pass_result("inferred m({}) = " + rational_string(empty_mass)));
    else
        rep.axioms.add("B2'",
                       fail_result({{frame.full_set()},
                                    "inferred m({}) = 1 - g(" + frame.subset_name(frame.full_set()) +
                                        ") = " + rational_string(empty_mass) + ", outside [0, 1]"}));

    AxiomResult b3p = pass_result();
    for (std::uint32_t a = 1; a < frame.subset_count(); ++a)
        if (mobius.masses[a] < 0) {
            b3p = fail_result({{SubsetId{a}},
                               "Mobius mass of " + frame.subset_name({a}) + " is " +
                                   rational_string(mobius.masses[a])});
            break;
        }
    rep.axioms.add("B3'", b3p);
    return rep;
}

struct MeasureClassification {
    MeasureReport probability;
    MeasureReport belief;
    MeasureReport monotonic;
    MeasureReport generalized;
    MeasureClass strongest = MeasureClass::none;
};

// Strongest class first; the inclusion chain probability < monotonic <
// belief < generalized is re-asserted on every call.
inline MeasureClassification classify_measure_detailed(const SetFunction& g) {
    MeasureClassification c{check_probability(g), check_belief(g), check_monotonic(g),
                            check_generalized(g), MeasureClass::none};
    const bool p = c.probability.pass();
    const bool bel = c.belief.pass();
    const bool mono = c.monotonic.pass();
    const bool gen = c.generalized.pass();
    if ((p && !(bel && mono && gen)) || (bel && !gen))
        throw internal_error("measure class inclusion chain violated");
    if (p)
        c.strongest = MeasureClass::probability;
    else if (bel && mono)
        c.strongest = MeasureClass::monotonic_belief;
    else if (bel)
        c.strongest = MeasureClass::belief;
    else if (gen)
        c.strongest = MeasureClass::generalized_belief;
    else
        c.strongest = MeasureClass::none;
    return c;
}

inline MeasureClass classify_measure(const SetFunction& g) {
    return classify_measure_detailed(g).strongest;
}

// Everything the CLI prints for one measure: the four class reports merged
// into a single axiom table, the signed Mobius masses, and the mass-side
// identities M1/M2 read off that transform.
struct FullMeasureReport {
    MeasureClassification classes;
    MobiusTransform mobius; // closed-world signed transform
    AxiomTable merged;
};

inline FullMeasureReport full_measure_report(const SetFunction& g) {
    FullMeasureReport out{classify_measure_detailed(g),
                          measure_detail::signed_mobius(g, World::closed),
                          {}};
    const auto copy = [&](const AxiomTable& from, std::string_view id) {
        if (const AxiomResult* r = from.find(id))
            out.merged.add(std::string(id), *r);
    };
    copy(out.classes.probability.axioms, "B1");
    copy(out.classes.probability.axioms, "B2");
    copy(out.classes.probability.axioms, "B3");
    copy(out.classes.belief.axioms, "B3'");
    copy(out.classes.monotonic.axioms, "B4");
    copy(out.classes.generalized.axioms, "B2'");

    if (out.mobius.masses[0] == 0)
        out.merged.add("M1", pass_result());
    else
        out.merged.add("M1", fail_result({{empty_subset},
                                          "closed-world Mobius mass of {} is " +
                                              rational_string(out.mobius.masses[0])}));
    if (out.mobius.total == 1)
        out.merged.add("M2", pass_result());
    else
        out.merged.add("M2", fail_result({{g.frame().full_set()},
                                          "closed-world Mobius masses sum to " +
                                              rational_string(out.mobius.total)}));
    return out;
}

} // namespace qbel
