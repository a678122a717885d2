#pragma once

// Shared test oracles. Everything here is deliberately independent of the
// production code paths it is used to check: plain recursive enumeration and
// integer recurrences only.

#include "qident/series.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace testsupport {

// p(n) by the classic two-variable recursion over largest part
inline std::vector<long long> partition_numbers(int nmax) {
    std::vector<std::vector<long long>> p(nmax + 1, std::vector<long long>(nmax + 1, 0));
    for (int k = 0; k <= nmax; ++k) p[0][k] = 1;
    for (int n = 1; n <= nmax; ++n)
        for (int k = 1; k <= nmax; ++k)
            p[n][k] = p[n][k - 1] + (n >= k ? p[n - k][k] : 0);
    std::vector<long long> out(nmax + 1);
    for (int n = 0; n <= nmax; ++n) out[n] = p[n][nmax];
    return out;
}

// partitions of each n <= nmax into parts from the given allowed-part list
inline std::vector<long long> restricted_partition_counts(const std::vector<int>& parts,
                                                          int nmax) {
    std::vector<long long> count(nmax + 1, 0);
    count[0] = 1;
    for (int part : parts) {
        if (part < 1 || part > nmax) continue;
        for (int n = part; n <= nmax; ++n) count[n] += count[n - part];
    }
    return count;
}

// partitions of n into parts avoiding the residues {0, r1, r2} mod m, listed
// explicitly by backtracking (the slowest, most literal oracle)
inline long long count_by_listing(int n, int modulus, int r1, int r2) {
    std::function<long long(int, int)> rec = [&](int remaining, int max_part) -> long long {
        if (remaining == 0) return 1;
        long long total = 0;
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            const int r = part % modulus;
            if (r == 0 || r == r1 || r == r2) continue;
            total += rec(remaining - part, part);
        }
        return total;
    };
    return rec(n, n);
}

// small random series for property tests; deterministic seed per call site
inline qident::Series random_series(std::mt19937& rng, int qbound, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> qe(0, qbound);
    std::uniform_int_distribution<int> ze(0, 3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    qident::Series s(qbound);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) s.add_term(ze(rng), qe(rng), coeff(rng));
    return s;
}

} // namespace testsupport
