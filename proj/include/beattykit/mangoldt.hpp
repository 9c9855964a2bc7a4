#pragma once

#include <cstdint>
#include <vector>

namespace beattykit::arith {

// Smallest-prime-factor table for 2..N.  Lambda(n) is evaluated on demand
// as log of an integer, so nothing lossy is ever stored.
class MangoldtTable {
public:
    static constexpr std::uint64_t kDefaultBudgetBytes = std::uint64_t(1) << 33;
    // Construction switches to segment-wise marking above this resident size.
    static constexpr std::uint64_t kSegmentThresholdBytes = std::uint64_t(1) << 27;

    explicit MangoldtTable(std::uint64_t limit,
                           std::uint64_t budget_bytes = kDefaultBudgetBytes);

    std::uint64_t limit() const { return limit_; }

    // smallest prime factor of n (n itself when prime); 0 for n < 2
    std::uint32_t spf(std::uint64_t n) const;

    // von Mangoldt function: log p when n = p^k, else 0
    double lambda(std::uint64_t n) const;

    // n = p^k for some k >= 1?  Sets p on success.
    bool prime_power(std::uint64_t n, std::uint32_t& p) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;  // index n, 0 = prime sentinel (or n < 2)
};

MangoldtTable build_mangoldt_table(std::uint64_t limit,
                                   std::uint64_t budget_bytes =
                                       MangoldtTable::kDefaultBudgetBytes);

// sum of Lambda(n) over n <= x, n == c (mod d), compensated accumulation
double chebyshev_sum(const MangoldtTable& table, std::uint64_t x, std::uint64_t c,
                     std::uint64_t d);

}  // namespace beattykit::arith
