#pragma once

#include <stdexcept>
#include <string>

namespace beattykit {

// A decimal literal ran out of certified digits mid-computation.
struct precision_exhausted : std::runtime_error {
    explicit precision_exhausted(const std::string& what) : std::runtime_error(what) {}
};

// Requested table size exceeds the configured memory budget.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace beattykit
