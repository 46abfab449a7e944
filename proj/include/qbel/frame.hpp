#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbel/error.hpp"

namespace qbel {

// A proposition over the frame, encoded as a bit mask: bit i is set iff the
// i-th frame element belongs to the subset. Mask 0 is the empty set and
// 2^s - 1 the whole frame, so masks double as indices into value tables.
struct SubsetId {
    std::uint32_t bits = 0;

    friend constexpr auto operator<=>(SubsetId, SubsetId) = default;
};

inline constexpr SubsetId empty_subset{0};

constexpr SubsetId set_union(SubsetId a, SubsetId b) noexcept { return {a.bits | b.bits}; }
constexpr SubsetId set_intersection(SubsetId a, SubsetId b) noexcept { return {a.bits & b.bits}; }
constexpr SubsetId set_difference(SubsetId a, SubsetId b) noexcept { return {a.bits & ~b.bits}; }

// a is contained in b
constexpr bool is_subset(SubsetId a, SubsetId b) noexcept { return (a.bits & ~b.bits) == 0; }
constexpr bool is_proper_subset(SubsetId a, SubsetId b) noexcept {
    return a.bits != b.bits && is_subset(a, b);
}
constexpr bool are_disjoint(SubsetId a, SubsetId b) noexcept { return (a.bits & b.bits) == 0; }

inline int cardinality(SubsetId a) noexcept { return std::popcount(a.bits); }

// Finite frame of discernment. Immutable after construction.
class Frame {
public:
    static constexpr std::size_t max_size = 20;

    explicit Frame(std::vector<std::string> elements) : elements_(std::move(elements)) {
        if (elements_.empty())
            throw input_error("a frame needs at least one element");
        if (elements_.size() > max_size)
            throw input_error("frame has " + std::to_string(elements_.size()) +
                              " elements; at most " + std::to_string(max_size) + " are supported");
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (elements_[i].empty())
                throw input_error("frame element labels must be non-empty");
            for (std::size_t j = i + 1; j < elements_.size(); ++j)
                if (elements_[i] == elements_[j])
                    throw input_error("duplicate frame element label: '" + elements_[i] + "'");
        }
    }

    std::size_t size() const noexcept { return elements_.size(); }
    std::uint32_t subset_count() const noexcept { return std::uint32_t{1} << elements_.size(); }

    const std::vector<std::string>& elements() const noexcept { return elements_; }
    const std::string& element(std::size_t i) const { return elements_.at(i); }

    std::optional<std::size_t> index_of(std::string_view label) const {
        for (std::size_t i = 0; i < elements_.size(); ++i)
            if (elements_[i] == label)
                return i;
        return std::nullopt;
    }

    bool contains(SubsetId a) const noexcept { return a.bits < subset_count(); }

    void require(SubsetId a) const {
        if (!contains(a))
            throw invalid_subset_error("subset mask " + std::to_string(a.bits) +
                                       " is out of range for a frame of size " +
                                       std::to_string(size()));
    }

    SubsetId full_set() const noexcept { return {subset_count() - 1}; }

    SubsetId singleton(std::size_t i) const {
        if (i >= size())
            throw invalid_subset_error("element index " + std::to_string(i) + " out of range");
        return {std::uint32_t{1} << i};
    }

    SubsetId complement(SubsetId a) const {
        require(a);
        return {full_set().bits & ~a.bits};
    }

    // Labels of the subset's members, in frame element order.
    std::vector<std::string> labels(SubsetId a) const {
        require(a);
        std::vector<std::string> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (a.bits & (std::uint32_t{1} << i))
                out.push_back(elements_[i]);
        return out;
    }

    // "{theta1, theta2}" rendering for reports; "{}" for the empty set.
    std::string subset_name(SubsetId a) const {
        std::string out = "{";
        bool first = true;
        for (const auto& label : labels(a)) {
            if (!first)
                out += ", ";
            out += label;
            first = false;
        }
        return out + "}";
    }

    friend bool operator==(const Frame& x, const Frame& y) { return x.elements_ == y.elements_; }

private:
    std::vector<std::string> elements_;
};

inline void require_same_frame(const Frame& a, const Frame& b) {
    if (!(a == b))
        throw frame_mismatch_error("operands belong to different frames");
}

// 0/1 membership vector of a subset, one entry per frame element.
inline std::vector<int> characteristic_vector(const Frame& frame, SubsetId a) {
    frame.require(a);
    std::vector<int> v(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i)
        v[i] = static_cast<int>((a.bits >> i) & 1u);
    return v;
}

enum class SubsetOrder { by_index, by_cardinality };

// Every subset exactly once. by_cardinality yields the empty set first and
// the whole frame last, ties broken by index.
inline std::vector<SubsetId> enumerate_subsets(const Frame& frame,
                                               SubsetOrder order = SubsetOrder::by_index) {
    std::vector<SubsetId> out(frame.subset_count());
    for (std::uint32_t bits = 0; bits < frame.subset_count(); ++bits)
        out[bits] = SubsetId{bits};
    if (order == SubsetOrder::by_cardinality)
        std::stable_sort(out.begin(), out.end(), [](SubsetId a, SubsetId b) {
            return cardinality(a) < cardinality(b);
        });
    return out;
}

// Default caps for the exhaustive sweeps; the CLI exposes an override.
inline constexpr std::size_t default_relation_side_frame_cap = 5;
inline constexpr std::size_t default_measure_side_frame_cap = 10;

} // namespace qbel
