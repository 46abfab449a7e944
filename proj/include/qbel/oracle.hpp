#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qbel/frame.hpp"
#include "qbel/measures.hpp"
#include "qbel/relations.hpp"
#include "qbel/representation.hpp"

// Brute-force verifiers and generators, kept apart from the fast paths they
// check. Production code never calls into this namespace; tests and the
// CLI's --cross-check flag do.
namespace qbel::oracle {

struct DirectCheckResult {
    bool pass = true;
    std::optional<Witness> witness;
};

namespace oracle_detail {

inline std::string collection_name(const Frame& frame, const std::vector<std::uint32_t>& ids) {
    std::string out = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i)
            out += ", ";
        out += frame.subset_name({ids[i]});
    }
    return out + "]";
}

} // namespace oracle_detail

// The inclusion-exclusion inequality checked literally over every collection
// of at most n_max subsets, enumerated as non-decreasing index tuples so
// both the multiset and the plain-set reading are covered; their verdicts
// must coincide. Exponential, intended for small frames only.
inline DirectCheckResult check_supadditivity_direct(const SetFunction& g, int n_max) {
    if (n_max < 1)
        throw input_error("n_max must be at least 1");
    const Frame& frame = g.frame();
    const std::uint32_t n = frame.subset_count();

    DirectCheckResult overall;  // first violation over all collections
    bool distinct_pass = true;  // verdict over duplicate-free collections only

    std::vector<std::uint32_t> ids;
    auto inspect = [&](const std::vector<std::uint32_t>& collection) {
        std::uint32_t united = 0;
        for (std::uint32_t id : collection)
            united |= id;
        Rational rhs = 0;
        for (std::uint32_t sel = 1; sel < (std::uint32_t{1} << collection.size()); ++sel) {
            std::uint32_t inter = frame.full_set().bits;
            for (std::size_t j = 0; j < collection.size(); ++j)
                if (sel & (std::uint32_t{1} << j))
                    inter &= collection[j];
            if (cardinality({sel}) % 2 == 1)
                rhs += g.at({inter});
            else
                rhs -= g.at({inter});
        }
        if (g.at({united}) >= rhs)
            return;
        const bool distinct =
            std::adjacent_find(collection.begin(), collection.end()) == collection.end();
        if (distinct)
            distinct_pass = false;
        if (overall.pass) {
            overall.pass = false;
            std::vector<SubsetId> subsets;
            for (std::uint32_t id : collection)
                subsets.push_back({id});
            overall.witness = Witness{std::move(subsets),
                                      "g(" + frame.subset_name({united}) + ") = " +
                                          rational_string(g.at({united})) +
                                          " is below the inclusion-exclusion bound " +
                                          rational_string(rhs) + " of the collection " +
                                          oracle_detail::collection_name(frame, collection)};
        }
    };

    auto recurse = [&](auto&& self, std::uint32_t from, int remaining) -> void {
        if (remaining == 0) {
            inspect(ids);
            return;
        }
        for (std::uint32_t id = from; id < n; ++id) {
            ids.push_back(id);
            self(self, id, remaining - 1);
            ids.pop_back();
        }
    };
    for (int len = 1; len <= n_max; ++len)
        recurse(recurse, 0, len);

    if (overall.pass != distinct_pass)
        throw internal_error("multiset and plain-set collection verdicts disagree");
    return overall;
}

namespace oracle_detail {

// One balance-axiom instance: equal per-element counts on both sides, the
// first len-1 positions weakly ordered left-over-right, and the last
// position required to come back the other way.
inline std::optional<Witness> scott_violation(const PreferenceRelation& r,
                                              const std::vector<std::uint32_t>& lhs,
                                              const std::vector<std::uint32_t>& rhs) {
    const Frame& frame = r.frame();
    for (std::size_t i = 0; i < frame.size(); ++i) {
        int balance = 0;
        for (std::size_t j = 0; j < lhs.size(); ++j) {
            balance += static_cast<int>((lhs[j] >> i) & 1u);
            balance -= static_cast<int>((rhs[j] >> i) & 1u);
        }
        if (balance != 0)
            return std::nullopt;
    }
    const std::size_t last = lhs.size() - 1;
    for (std::size_t j = 0; j < last; ++j)
        if (!r.weakly_prefers({lhs[j]}, {rhs[j]}))
            return std::nullopt;
    if (r.weakly_prefers({rhs[last]}, {lhs[last]}))
        return std::nullopt;

    std::vector<SubsetId> subsets;
    for (std::uint32_t id : lhs)
        subsets.push_back({id});
    for (std::uint32_t id : rhs)
        subsets.push_back({id});
    return Witness{std::move(subsets),
                   "sequences A = " + collection_name(frame, lhs) + " and B = " +
                       collection_name(frame, rhs) +
                       " use every element equally often and A_i is weakly preferred to B_i "
                       "for i < " +
                       std::to_string(last) + ", yet B_" + std::to_string(last) +
                       " is not weakly preferred to A_" + std::to_string(last)};
}

inline bool next_tuple(std::vector<std::uint32_t>& tuple, std::uint32_t base) {
    for (std::size_t i = tuple.size(); i-- > 0;) {
        if (++tuple[i] < base)
            return true;
        tuple[i] = 0;
    }
    return false;
}

} // namespace oracle_detail

// Bounded refutation check of the balance axiom over all sequence pairs of
// length up to n_max + 1. A witness disproves the axiom; a clean sweep
// proves nothing beyond the bound.
inline DirectCheckResult check_scott_axiom_direct(const PreferenceRelation& r, int n_max) {
    if (n_max < 1)
        throw input_error("n_max must be at least 1");
    const std::uint32_t n = r.frame().subset_count();
    for (int len = 2; len <= n_max + 1; ++len) {
        std::vector<std::uint32_t> lhs(static_cast<std::size_t>(len), 0);
        do {
            std::vector<std::uint32_t> rhs(static_cast<std::size_t>(len), 0);
            do {
                if (auto w = oracle_detail::scott_violation(r, lhs, rhs))
                    return DirectCheckResult{false, std::move(w)};
            } while (oracle_detail::next_tuple(rhs, n));
        } while (oracle_detail::next_tuple(lhs, n));
    }
    return DirectCheckResult{true, std::nullopt};
}

// Randomized variant for frames where the exhaustive sweep is too large.
inline DirectCheckResult check_scott_axiom_sampled(const PreferenceRelation& r, int n_max,
                                                   int samples, std::uint64_t seed) {
    if (n_max < 1)
        throw input_error("n_max must be at least 1");
    const std::uint32_t n = r.frame().subset_count();
    std::mt19937_64 rng(seed);
    for (int t = 0; t < samples; ++t) {
        const std::size_t len = 2 + static_cast<std::size_t>(rng() % static_cast<unsigned>(n_max));
        std::vector<std::uint32_t> lhs(len), rhs(len);
        for (std::size_t j = 0; j < len; ++j) {
            lhs[j] = static_cast<std::uint32_t>(rng() % n);
            rhs[j] = static_cast<std::uint32_t>(rng() % n);
        }
        if (auto w = oracle_detail::scott_violation(r, lhs, rhs))
            return DirectCheckResult{false, std::move(w)};
    }
    return DirectCheckResult{true, std::nullopt};
}

// Exhaustive denominator-limited probability search. Weights are enumerated
// with the first element's count descending, and compatibility is evaluated
// directly from the candidate values, independent of the LP path.
inline std::optional<SetFunction> search_probability_grid(const PreferenceRelation& r,
                                                          int denominator) {
    if (denominator < 1)
        throw input_error("denominator must be at least 1");
    const Frame& frame = r.frame();
    const std::size_t s = frame.size();
    const std::uint32_t n = frame.subset_count();

    std::vector<long> counts(s, 0);
    std::optional<SetFunction> found;

    auto compatible = [&]() -> bool {
        std::vector<Rational> values(n, Rational(0));
        for (std::uint32_t bits = 0; bits < n; ++bits) {
            long total = 0;
            for (std::size_t i = 0; i < s; ++i)
                if (bits & (std::uint32_t{1} << i))
                    total += counts[i];
            Rational v(total, denominator);
            v.canonicalize();
            values[bits] = std::move(v);
        }
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = a + 1; b < n; ++b) {
                const int diff = cmp(values[a], values[b]);
                const Comparison verdict = r.compare({a}, {b});
                const bool match = (diff > 0 && verdict == Comparison::first_preferred) ||
                                   (diff < 0 && verdict == Comparison::second_preferred) ||
                                   (diff == 0 && verdict == Comparison::indifferent);
                if (!match)
                    return false;
            }
        found = SetFunction(frame, std::move(values));
        return true;
    };

    auto recurse = [&](auto&& self, std::size_t pos, long remaining) -> bool {
        if (pos + 1 == s) {
            counts[pos] = remaining;
            return compatible();
        }
        for (long k = remaining; k >= 0; --k) {
            counts[pos] = k;
            if (self(self, pos + 1, remaining - k))
                return true;
        }
        return false;
    };
    recurse(recurse, 0, denominator);
    return found;
}

// Deterministic mass-function generator: a seed picks the support size, the
// focal sets, and small integer weights. Supports range from a single focal
// set to the full power set.
inline MassFunction random_mass(const Frame& frame, World world, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t n = frame.subset_count();

    std::vector<std::uint32_t> pool;
    pool.reserve(n);
    for (std::uint32_t bits = world == World::closed ? 1 : 0; bits < n; ++bits)
        pool.push_back(bits);

    const std::size_t support = 1 + static_cast<std::size_t>(rng() % pool.size());
    for (std::size_t i = 0; i < support; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
        std::swap(pool[i], pool[j]);
    }

    std::vector<long> weights(support);
    long total = 0;
    for (std::size_t i = 0; i < support; ++i) {
        weights[i] = 1 + static_cast<long>(rng() % 20);
        total += weights[i];
    }

    std::vector<Rational> masses(n, Rational(0));
    for (std::size_t i = 0; i < support; ++i) {
        Rational m(weights[i], total);
        m.canonicalize();
        masses[pool[i]] = std::move(m);
    }
    return MassFunction(frame, std::move(masses));
}

// Every ranking (ordered partition) of the subset space, each exactly once:
// for k = 1..2^s, all surjections onto k groups. 3 rankings at one element,
// 75 at two; anything larger is refused.
inline std::vector<PreferenceRelation> enumerate_rankings(const Frame& frame) {
    if (frame.size() > 2)
        throw input_error("full ranking enumeration is limited to frames of at most 2 elements");
    const std::uint32_t m = frame.subset_count();
    std::vector<PreferenceRelation> out;
    for (std::uint32_t k = 1; k <= m; ++k) {
        std::vector<std::uint32_t> label(m, 0);
        while (true) {
            std::uint32_t used = 0;
            for (std::uint32_t i = 0; i < m; ++i)
                used |= std::uint32_t{1} << label[i];
            if (used == (std::uint32_t{1} << k) - 1) {
                std::vector<std::vector<SubsetId>> groups(k);
                for (std::uint32_t i = 0; i < m; ++i)
                    groups[label[i]].push_back({i});
                out.push_back(PreferenceRelation::from_ranking(frame, groups));
            }
            if (!oracle_detail::next_tuple(label, k))
                break;
        }
    }
    return out;
}

// One random ranking; deterministic for a given seed.
inline PreferenceRelation random_ranking(const Frame& frame, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t m = frame.subset_count();
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % m);

    std::vector<std::uint32_t> items(m);
    std::iota(items.begin(), items.end(), 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        const std::uint32_t j = i + static_cast<std::uint32_t>(rng() % (m - i));
        std::swap(items[i], items[j]);
    }

    std::vector<std::vector<SubsetId>> groups(k);
    for (std::uint32_t idx = 0; idx < m; ++idx) {
        const std::uint32_t group =
            idx < k ? idx : static_cast<std::uint32_t>(rng() % k);
        groups[group].push_back({items[idx]});
    }
    return PreferenceRelation::from_ranking(frame, groups);
}

namespace oracle_detail {

// Heavy singleton weights with a sprinkle of small higher-order focal sets:
// the resulting beliefs pass the order-preservation sweep often enough to
// give the solver real candidates.
inline MassFunction near_additive_mass(const Frame& frame, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t n = frame.subset_count();
    std::vector<long> weights(n, 0);
    for (std::size_t i = 0; i < frame.size(); ++i)
        weights[std::uint32_t{1} << i] = 20 + static_cast<long>(rng() % 40);
    const int extras = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < extras; ++k) {
        const std::uint32_t bits = static_cast<std::uint32_t>(rng() % n);
        if (cardinality({bits}) >= 2)
            weights[bits] += 1 + static_cast<long>(rng() % 3);
    }
    long total = 0;
    for (long w : weights)
        total += w;
    std::vector<Rational> masses(n, Rational(0));
    for (std::uint32_t bits = 0; bits < n; ++bits)
        if (weights[bits]) {
            Rational m(weights[bits], total);
            m.canonicalize();
            masses[bits] = std::move(m);
        }
    return MassFunction(frame, std::move(masses));
}

} // namespace oracle_detail

// Randomized hunt for an order-preservation relation the LP rejects.
// Candidates are induced by random belief functions that happen to pass the
// order-preservation sweep; every such order qualifies, so each candidate
// goes straight to the solver. Plain random masses alternate with
// near-additive ones. Returns the first hit, if any.
inline std::optional<PreferenceRelation> search_scott_gap(const Frame& frame, int attempts,
                                                          std::uint64_t seed) {
    for (int t = 0; t < attempts; ++t) {
        const std::uint64_t attempt_seed = seed + static_cast<std::uint64_t>(t);
        const MassFunction mass = t % 2 == 0
                                      ? oracle_detail::near_additive_mass(frame, attempt_seed)
                                      : random_mass(frame, World::closed, attempt_seed);
        const SetFunction belief = belief_from_mass(mass, World::closed);
        if (!check_monotonic(belief).pass())
            continue;
        PreferenceRelation candidate = induce_relation(belief);
        if (const auto fail = repr_detail::first_failure(
                candidate, {RelationAxiom::Q3, RelationAxiom::Q4, RelationAxiom::Q5}))
            throw internal_error("order-preserving measure induced a relation failing " +
                                 fail->first);
        if (!construct_probability_scott(candidate).representable())
            return candidate;
    }
    return std::nullopt;
}

} // namespace qbel::oracle
