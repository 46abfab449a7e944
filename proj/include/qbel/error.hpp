#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qbel {

// Bad or inconsistent input: unparseable files, non-total value maps,
// contradictory preference statements, subsets outside the frame.
// The CLI maps these to exit code 2.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_subset_error : public input_error {
public:
    using input_error::input_error;
};

class frame_mismatch_error : public input_error {
public:
    using input_error::input_error;
};

class open_world_mass_error : public input_error {
public:
    using input_error::input_error;
};

class nonzero_empty_value_error : public input_error {
public:
    using input_error::input_error;
};

class contradiction_error : public input_error {
public:
    using input_error::input_error;
};

class coverage_error : public input_error {
public:
    using input_error::input_error;
};

// A construction was asked for a relation that lacks a required axiom.
// `axiom()` names the first failing axiom; the message carries the witness.
// The CLI maps these to exit code 3.
class axiom_precondition_error : public std::runtime_error {
public:
    axiom_precondition_error(std::string axiom, const std::string& message)
        : std::runtime_error(message), axiom_(std::move(axiom)) {}

    const std::string& axiom() const noexcept { return axiom_; }

private:
    std::string axiom_;
};

class not_weak_order_error : public axiom_precondition_error {
public:
    using axiom_precondition_error::axiom_precondition_error;
};

class not_qualitative_belief_error : public axiom_precondition_error {
public:
    using axiom_precondition_error::axiom_precondition_error;
};

class not_qualitative_probability_error : public axiom_precondition_error {
public:
    using axiom_precondition_error::axiom_precondition_error;
};

// A guaranteed postcondition failed; indicates a bug rather than bad input.
// The CLI maps these to exit code 5.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qbel
