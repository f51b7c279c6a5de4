#pragma once

// Deterministic work sharding over the combinations of r items out of n.
// Worker w handles combinations whose lexicographic ordinal is congruent to
// w modulo the worker count, so results merge by ordinal.

#include "discrimlab/index_set.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

namespace discrimlab::detail {

inline constexpr std::uint64_t kNoOrdinal = std::numeric_limits<std::uint64_t>::max();

/// Each worker calls make_visitor(worker) once and feeds it combinations in
/// lexicographic order. A visitor returns true to report a hit; the earliest
/// hit across all workers is returned as an ordinal. Each worker stops at
/// its own first hit.
template <class MakeVisitor>
std::uint64_t first_hit(std::size_t n, std::size_t r, std::size_t jobs, MakeVisitor make_visitor) {
    if (r > n || r == 0) return kNoOrdinal;
    jobs = std::max<std::size_t>(jobs, 1);
    std::vector<std::uint64_t> hits(jobs, kNoOrdinal);
    auto work = [&](std::size_t w) {
        auto visit = make_visitor(w);
        std::vector<std::size_t> idx(r);
        for (std::size_t i = 0; i < r; ++i) idx[i] = i;
        std::uint64_t ordinal = 0;
        do {
            if (ordinal % jobs == w && visit(idx)) {
                hits[w] = ordinal;
                return;
            }
            ++ordinal;
        } while (next_combination(idx, n));
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    }
    return *std::min_element(hits.begin(), hits.end());
}

/// Decodes the ordinal-th r-combination of [n] in lexicographic order.
inline std::vector<std::size_t> combination_at(std::size_t n, std::size_t r, std::uint64_t ordinal) {
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    for (std::uint64_t o = 0; o < ordinal; ++o) next_combination(idx, n);
    return idx;
}

}  // namespace discrimlab::detail
