#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbel/frame.hpp"

namespace qbel {

// The subsets involved in an axiom violation plus a rendered explanation.
struct Witness {
    std::vector<SubsetId> subsets;
    std::string detail;
};

struct AxiomResult {
    bool pass = true;
    std::optional<Witness> witness; // present iff !pass
    std::string note;               // optional clarification on passing entries
};

inline AxiomResult pass_result(std::string note = {}) {
    return {true, std::nullopt, std::move(note)};
}

inline AxiomResult fail_result(Witness witness) {
    return {false, std::move(witness), {}};
}

// Ordered axiom-id -> result table; insertion order is the print order.
class AxiomTable {
public:
    void add(std::string id, AxiomResult result) {
        entries_.emplace_back(std::move(id), std::move(result));
    }

    const AxiomResult* find(std::string_view id) const {
        for (const auto& [key, result] : entries_)
            if (key == id)
                return &result;
        return nullptr;
    }

    bool passes(std::string_view id) const {
        const AxiomResult* r = find(id);
        return r != nullptr && r->pass;
    }

    bool all_pass() const {
        for (const auto& [key, result] : entries_)
            if (!result.pass)
                return false;
        return true;
    }

    const std::vector<std::pair<std::string, AxiomResult>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, AxiomResult>> entries_;
};

} // namespace qbel
