#pragma once

#include <cstddef>

namespace locus {

/// Hard resource bounds for the Groebner engine and the iterative
/// saturation/contraction chains.  Exceeding a bound raises BoundExceeded;
/// there is no silent truncation.
struct Limits {
    std::size_t max_spairs = 200000;      ///< S-pairs processed per basis computation
    std::size_t max_total_degree = 120;   ///< degree of any polynomial seen during reduction
    std::size_t max_chain_steps = 64;     ///< saturation / contraction chain length
};

/// Process-wide bounds.  Set once at startup (the CLI's --bound flag);
/// individual computations only read them.
Limits& global_limits();

/// Scoped override for tests that exercise the bound-exceeded paths.
class LimitsGuard {
public:
    explicit LimitsGuard(const Limits& tmp) : saved_(global_limits()) { global_limits() = tmp; }
    ~LimitsGuard() { global_limits() = saved_; }
    LimitsGuard(const LimitsGuard&) = delete;
    LimitsGuard& operator=(const LimitsGuard&) = delete;

private:
    Limits saved_;
};

} // namespace locus
