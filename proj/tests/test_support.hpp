#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qbel/qbel.hpp"

namespace qbel::testing {

inline Frame frame2() { return Frame({"theta1", "theta2"}); }
inline Frame frame3() { return Frame({"theta1", "theta2", "theta3"}); }

inline SetFunction make_set_function(const Frame& frame,
                                     std::initializer_list<const char*> values) {
    std::vector<Rational> v;
    for (const char* s : values)
        v.push_back(parse_rational(s));
    return SetFunction(frame, std::move(v));
}

inline MassFunction make_mass(const Frame& frame, std::initializer_list<const char*> values) {
    std::vector<Rational> v;
    for (const char* s : values)
        v.push_back(parse_rational(s));
    return MassFunction(frame, std::move(v));
}

// Values indexed {}, {theta1}, {theta2}, {theta1,theta2}.
inline SetFunction example_p() { return make_set_function(frame2(), {"0", "2/5", "3/5", "1"}); }
inline SetFunction example_bel() { return make_set_function(frame2(), {"0", "1/5", "1/2", "1"}); }
inline SetFunction example_f() { return make_set_function(frame2(), {"0", "3/5", "7/10", "1"}); }
inline SetFunction vacuous_bel2() { return make_set_function(frame2(), {"0", "0", "0", "1"}); }

// {} < {theta1} < {theta2} < {theta1, theta2}
inline PreferenceRelation example_relation() {
    return PreferenceRelation::from_ranking(
        frame2(), {{SubsetId{0}}, {SubsetId{1}}, {SubsetId{2}}, {SubsetId{3}}});
}

inline PreferenceRelation trivial_relation(const Frame& frame) {
    return PreferenceRelation::all_indifferent(frame);
}

inline PreferenceRelation ranking2(std::initializer_list<std::initializer_list<unsigned>> groups) {
    std::vector<std::vector<SubsetId>> g;
    for (auto cls : groups) {
        std::vector<SubsetId> members;
        for (unsigned bits : cls)
            members.push_back(SubsetId{bits});
        g.push_back(std::move(members));
    }
    return PreferenceRelation::from_ranking(frame2(), g);
}

} // namespace qbel::testing
