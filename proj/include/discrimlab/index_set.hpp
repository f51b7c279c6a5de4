#pragma once

// Subsets of [n] = {0, ..., n-1} packed into a 64-bit mask.
// Indices are 0-based here; the CLI and JSON layers translate to the
// 1-based numbering used when talking about hyperplanes H_1..H_n.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace discrimlab {

inline constexpr std::size_t kMaxHyperplanes = 64;

class IndexSet {
public:
    constexpr IndexSet() = default;
    IndexSet(std::initializer_list<std::size_t> idxs);
    explicit IndexSet(const std::vector<std::size_t>& idxs);

    static constexpr IndexSet from_mask(std::uint64_t mask) {
        IndexSet s;
        s.bits_ = mask;
        return s;
    }
    static IndexSet full(std::size_t n);

    constexpr std::uint64_t mask() const { return bits_; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1U) != 0; }
    constexpr bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
    /// One past the largest element (0 for the empty set).
    constexpr std::size_t bound() const { return bits_ == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(bits_)); }

    IndexSet with(std::size_t i) const;
    IndexSet without(std::size_t i) const;

    std::vector<std::size_t> elements() const;

    /// Elements shifted to 1-based numbering, e.g. "{1,2,3}".
    std::string to_string() const;

    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return from_mask(a.bits_ | b.bits_); }
    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return from_mask(a.bits_ & b.bits_); }
    friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return from_mask(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(IndexSet, IndexSet) = default;

    /// Lexicographic order on the sorted element lists.
    friend bool operator<(IndexSet a, IndexSet b);

private:
    std::uint64_t bits_ = 0;
};

using Family = std::vector<IndexSet>;

/// Advances idx (strictly increasing, values < n) to the next combination in
/// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n);

/// All size-m subsets of [n], in lexicographic order.
std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t m);

/// Union of all members.
IndexSet family_union(const Family& f);
/// Intersection of all members (empty for an empty family).
IndexSet family_intersection(const Family& f);

/// Sorts members lexicographically.
Family canonical(Family f);

/// Lexicographic comparison of canonical families.
bool family_less(const Family& a, const Family& b);

std::string to_string(const Family& f);

}  // namespace discrimlab
