#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kempe {

// input text that does not conform to an expected format
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a search ran out of its node budget before reaching an exact answer
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an enumeration grew past its configured result cap
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a stated mathematical expectation failed on concrete input
struct hypothesis_refuted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a class certificate promised colorability that the solver disproved
struct certificate_refuted : hypothesis_refuted {
    using hypothesis_refuted::hypothesis_refuted;
};

// an internal invariant of the transformation engine broke; always a bug
struct engine_invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

// counts search nodes and aborts once the limit is passed
class budget {
public:
    static constexpr std::uint64_t default_node_limit = 10'000'000;

    explicit budget(std::uint64_t node_limit = default_node_limit) : limit_(node_limit) {}

    void tick(std::uint64_t nodes = 1) {
        used_ += nodes;
        if (used_ > limit_)
            throw budget_exceeded("node budget of " + std::to_string(limit_) + " exhausted");
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

} // namespace kempe
