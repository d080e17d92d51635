// Test-only reference implementations, kept deliberately naive and
// independent of the library code paths they check.
#ifndef BWCA_TESTS_ORACLES_HPP
#define BWCA_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oracles {

// Materializes all n rotations as strings, stable-sorts them, and reads the
// last column. Returns (last column, row of the offset-0 rotation).
inline std::pair<std::string, std::size_t> naive_bwt(const std::string& s) {
    const std::size_t n = s.size();
    std::vector<std::pair<std::string, std::size_t>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows.emplace_back(s.substr(i) + s.substr(0, i), i);
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) {
                         return std::lexicographical_compare(
                             a.first.begin(), a.first.end(),
                             b.first.begin(), b.first.end(),
                             [](char x, char y) {
                                 return static_cast<unsigned char>(x) <
                                        static_cast<unsigned char>(y);
                             });
                     });
    std::string last;
    last.reserve(n);
    std::size_t primary = 0;
    for (std::size_t i = 0; i < n; ++i) {
        last.push_back(rows[i].first.back());
        if (rows[i].second == 0) primary = i;
    }
    return {last, primary};
}

// Exhaustive optimal prefix-code search for small alphabets: enumerates every
// length vector over 1..k-1 (k = symbol count) that satisfies the Kraft
// inequality and keeps the ones minimizing total encoded bits. A single
// symbol conventionally gets length 1.
inline std::vector<std::vector<unsigned>>
optimal_prefix_lengths(const std::vector<std::uint64_t>& counts) {
    const std::size_t k = counts.size();
    if (k == 1) return {{1}};
    const unsigned max_len = static_cast<unsigned>(k - 1);
    std::vector<std::vector<unsigned>> best;
    std::uint64_t best_cost = UINT64_MAX;
    std::vector<unsigned> lens(k, 1);
    while (true) {
        // Kraft sum in units of 2^-max_len.
        std::uint64_t kraft = 0;
        for (unsigned l : lens) kraft += std::uint64_t{1} << (max_len - l);
        if (kraft <= (std::uint64_t{1} << max_len)) {
            std::uint64_t cost = 0;
            for (std::size_t i = 0; i < k; ++i) cost += counts[i] * lens[i];
            if (cost < best_cost) {
                best_cost = cost;
                best.clear();
            }
            if (cost == best_cost) best.push_back(lens);
        }
        // Next length vector, odometer style.
        std::size_t pos = 0;
        while (pos < k && lens[pos] == max_len) lens[pos++] = 1;
        if (pos == k) break;
        ++lens[pos];
    }
    return best;
}

} // namespace oracles

#endif
