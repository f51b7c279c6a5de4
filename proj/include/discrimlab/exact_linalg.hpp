#pragma once

// Exact rational linear algebra. No floating point anywhere in here.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace discrimlab {

using Integer = mpz_class;
using Rational = mpq_class;
using Vec = std::vector<Rational>;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Canonical "p/q" form, or "p" when q = 1. The sign lives on the numerator.
std::string to_string(const Rational& q);

/// Accepts "p" and "p/q", either part signed, with optional surrounding
/// whitespace. The result is canonicalized, so "2/-4" parses to -1/2.
Rational parse_rational(std::string_view text);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

bool is_zero(std::span<const Rational> v);

/// Dense row-major rational matrix.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Mat from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    Vec row_vec(std::size_t r) const;

    Mat transpose() const;
    Vec apply(std::span<const Rational> x) const;

    /// Appends v as a new last row.
    void push_row(std::span<const Rational> v);

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Determinant by Bareiss elimination on an integer lift of m.
/// Each row is scaled by the lcm of its denominators first.
Rational det(const Mat& m);

/// Rank over Q, again fraction-free on the integer lift.
std::size_t rank(const Mat& m);

/// Reduced row echelon form with zero rows dropped.
Mat rref(const Mat& m);

/// A linear subspace of Q^ambient_dim, stored as the RREF of its row span.
/// Two equal subspaces therefore have identical representations.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

    /// Span of the rows of m (the rows need not be independent).
    static Subspace span_of(const Mat& m);
    static Subspace span_of(const std::vector<Vec>& vectors, std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }

    /// The orthogonal complement {c : c.v = 0 for all v in this}.
    Subspace annihilator() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_dim_ = 0;
    Mat basis_;
};

Subspace kernel_basis(const Mat& m);

struct SolveResult {
    bool consistent = false;
    std::optional<Vec> witness;
};

/// Decides m x = b. Free variables of the witness are set to zero.
SolveResult solve_consistent(const Mat& m, std::span<const Rational> b);

bool subspace_equal(const Subspace& a, const Subspace& b);
bool in_span(std::span<const Rational> v, const Subspace& s);
/// True iff every basis vector of inner lies in outer.
bool contains(const Subspace& outer, const Subspace& inner);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

}  // namespace discrimlab
