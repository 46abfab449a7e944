// Walks one small frame end to end: three measures inducing the same
// ranking land in three different axiom classes, and the constructors
// rebuild compatible measures from the ranking alone.

#include <iostream>

#include "qbel/qbel.hpp"

namespace {

void show(const qbel::SetFunction& g, const char* name) {
    std::cout << name << ":";
    for (std::uint32_t bits = 0; bits < g.frame().subset_count(); ++bits)
        std::cout << "  " << g.frame().subset_name({bits}) << " = "
                  << qbel::rational_string(g.values()[bits]);
    std::cout << "\n  class: " << qbel::to_string(qbel::classify_measure(g)) << "\n";
}

} // namespace

int main() {
    using namespace qbel;

    const Frame frame({"rain", "sun"});
    const auto rat = [](const char* s) { return parse_rational(s); };

    const SetFunction p(frame, {rat("0"), rat("2/5"), rat("3/5"), rat("1")});
    const SetFunction bel(frame, {rat("0"), rat("1/5"), rat("1/2"), rat("1")});
    const SetFunction f(frame, {rat("0"), rat("3/5"), rat("7/10"), rat("1")});

    show(p, "additive measure ");
    show(bel, "belief measure   ");
    show(f, "plain ordinal fit");

    const PreferenceRelation order = induce_relation(p);
    std::cout << "\nall three induce the same order: "
              << (order == induce_relation(bel) && order == induce_relation(f) ? "yes" : "no")
              << "\nstructure class of that order: " << to_string(classify_relation(order))
              << "\n\n";

    const BeliefConstruction rebuilt = construct_belief(order);
    show(rebuilt.belief, "belief rebuilt from the order alone");

    const ScottConstruction scott = construct_probability_scott(order);
    if (scott.representable())
        show(*scott.probability, "probability rebuilt via the feasibility program");

    std::cout << "\ncompatibility of the rebuilt belief: "
              << (verify_compatibility(rebuilt.belief, order).compatible ? "verified" : "BROKEN")
              << "\n";
    return 0;
}
