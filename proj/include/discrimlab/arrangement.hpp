#pragma once

#include "discrimlab/exact_linalg.hpp"
#include "discrimlab/index_set.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace discrimlab {

/// Raised when some k normals fail to be linearly independent.
class NotGeneric : public std::invalid_argument {
public:
    explicit NotGeneric(IndexSet offending);
    IndexSet offending() const { return offending_; }

private:
    IndexSet offending_;
};

class ZeroNormal : public std::invalid_argument {
public:
    explicit ZeroNormal(std::size_t index);
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// A central generic arrangement of n hyperplanes a_i . x = 0 in Q^k.
///
/// Construction validates that 1 <= k < n, that no normal is zero and that
/// every k of the normals are linearly independent.
class CentralArrangement {
public:
    static CentralArrangement create(std::size_t k, std::vector<Vec> normals);

    std::size_t n() const { return normals_.size(); }
    std::size_t k() const { return k_; }
    const std::vector<Vec>& normals() const { return normals_; }
    const Vec& normal(std::size_t i) const { return normals_.at(i); }

    /// The n x k matrix whose rows are the normals.
    Mat normal_matrix() const { return Mat::from_rows(normals_, k_); }
    /// Rows a_p for p in idxs, in increasing index order.
    Mat normal_rows(IndexSet idxs) const;

    friend bool operator==(const CentralArrangement&, const CentralArrangement&) = default;

private:
    CentralArrangement(std::size_t k, std::vector<Vec> normals) : k_(k), normals_(std::move(normals)) {}

    std::size_t k_ = 0;
    std::vector<Vec> normals_;
};

/// A point of the space of translates: hyperplane i becomes a_i . x = t_i.
struct Translate {
    Vec values;

    friend bool operator==(const Translate&, const Translate&) = default;
};

bool is_generic_subset(const CentralArrangement& a, IndexSet idxs);

/// Column space of the normal matrix: the translates through a common point.
Subspace central_subspace(const CentralArrangement& a);

/// Solves {a_p . x = t_p : p in idxs}. Returns the witness point if the
/// translated hyperplanes meet.
std::optional<Vec> common_point(const CentralArrangement& a, const Translate& t, IndexSet idxs);

}  // namespace discrimlab
