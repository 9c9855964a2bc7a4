#include "beattykit/mangoldt.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "beattykit/errors.hpp"
#include "beattykit/kahan.hpp"

namespace beattykit::arith {

MangoldtTable::MangoldtTable(std::uint64_t limit, std::uint64_t budget_bytes)
    : limit_(limit) {
    if (limit < 1) throw std::invalid_argument("MangoldtTable: limit must be >= 1");
    std::uint64_t bytes = (limit + 1) * sizeof(std::uint32_t);
    if (bytes > budget_bytes)
        throw capacity_error("MangoldtTable: " + std::to_string(bytes) +
                             " bytes exceeds budget of " + std::to_string(budget_bytes));
    if (limit >= (std::uint64_t(1) << 32))
        throw capacity_error("MangoldtTable: limit exceeds 32-bit spf range");

    spf_.assign(limit + 1, 0);
    if (limit < 4) return;

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(double(limit)));
    while ((root + 1) * (root + 1) <= limit) ++root;
    while (root * root > limit) --root;

    // base primes up to sqrt(limit)
    std::vector<std::uint32_t> base;
    {
        std::vector<bool> comp(root + 1, false);
        for (std::uint64_t p = 2; p <= root; ++p) {
            if (comp[p]) continue;
            base.push_back(static_cast<std::uint32_t>(p));
            for (std::uint64_t m = p * p; m <= root; m += p) comp[m] = true;
        }
    }

    std::uint64_t seg = limit + 1;
    if ((limit + 1) * sizeof(std::uint32_t) > kSegmentThresholdBytes)
        seg = std::uint64_t(1) << 24;

    for (std::uint64_t lo = 2; lo <= limit; lo += seg) {
        std::uint64_t hi = std::min(limit, lo + seg - 1);
        for (std::uint32_t p : base) {
            std::uint64_t start = std::max<std::uint64_t>(std::uint64_t(p) * 2,
                                                          ((lo + p - 1) / p) * p);
            for (std::uint64_t m = start; m <= hi; m += p)
                if (spf_[m] == 0) spf_[m] = p;  // p ascending, first hit is smallest
        }
    }
}

MangoldtTable build_mangoldt_table(std::uint64_t limit, std::uint64_t budget_bytes) {
    return MangoldtTable(limit, budget_bytes);
}

std::uint32_t MangoldtTable::spf(std::uint64_t n) const {
    if (n < 2) return 0;
    if (n > limit_) throw std::out_of_range("spf: n exceeds table limit");
    std::uint32_t s = spf_[n];
    return s == 0 ? static_cast<std::uint32_t>(n) : s;
}

bool MangoldtTable::prime_power(std::uint64_t n, std::uint32_t& p) const {
    if (n < 2) return false;
    if (n > limit_) throw std::out_of_range("prime_power: n exceeds table limit");
    std::uint32_t s = spf_[n];
    if (s == 0) {  // prime
        p = static_cast<std::uint32_t>(n);
        return true;
    }
    std::uint64_t m = n;
    while (m % s == 0) m /= s;
    if (m != 1) return false;
    p = s;
    return true;
}

double MangoldtTable::lambda(std::uint64_t n) const {
    std::uint32_t p;
    if (!prime_power(n, p)) return 0.0;
    return std::log(static_cast<double>(p));
}

double chebyshev_sum(const MangoldtTable& table, std::uint64_t x, std::uint64_t c,
                     std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("chebyshev_sum: d must be positive");
    if (c >= d) throw std::invalid_argument("chebyshev_sum: need 0 <= c < d");
    if (x > table.limit()) throw std::out_of_range("chebyshev_sum: x exceeds table limit");
    KahanSum acc;
    std::uint64_t n = (c == 0) ? d : c;
    for (; n <= x; n += d) {
        std::uint32_t p;
        if (table.prime_power(n, p)) acc.add(std::log(static_cast<double>(p)));
    }
    return acc.value();
}

}  // namespace beattykit::arith
