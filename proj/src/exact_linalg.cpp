#include "discrimlab/exact_linalg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace discrimlab {

std::string to_string(const Rational& q) {
    // mpq_class keeps itself canonical; get_str omits "/1".
    return q.get_str();
}

Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw ParseError("malformed rational: '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j) {
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw ParseError("malformed rational: '" + std::string(text) + "'");
        }
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return Integer(digits, 10);
    };

    const auto slash = text.find('/');
    Rational q;
    if (slash == std::string_view::npos) {
        q = Rational(parse_int(text));
    } else {
        Integer num = parse_int(text.substr(0, slash));
        Integer den = parse_int(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
        q = Rational(num, den);
        q.canonicalize();
    }
    return q;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("from_rows: ragged rows");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) throw DimensionError("from_rows: cannot infer column count of an empty list");
    return from_rows(rows, rows.front().size());
}

Vec Mat::row_vec(std::size_t r) const {
    auto s = row(r);
    return Vec(s.begin(), s.end());
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vec Mat::apply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw DimensionError("apply: length mismatch");
    Vec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) y[r] = dot(row(r), x);
    return y;
}

void Mat::push_row(std::span<const Rational> v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw DimensionError("push_row: length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

struct IntegerLift {
    std::vector<Integer> cells;  // row-major
    std::size_t rows = 0;
    std::size_t cols = 0;
    Integer scale = 1;  // product of the per-row multipliers

    Integer& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }
};

IntegerLift lift(const Mat& m) {
    IntegerLift out{std::vector<Integer>(m.rows() * m.cols()), m.rows(), m.cols(), 1};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (const auto& x : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& x = m(r, c);
            out.at(r, c) = x.get_num() * (l / x.get_den());
        }
        out.scale *= l;
    }
    return out;
}

// Bareiss forward elimination. Returns the number of pivots found and
// flips `sign` for every row swap.
std::size_t bareiss(IntegerLift& a, int& sign) {
    Integer prev = 1;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols && pivot_row < a.rows; ++c) {
        std::size_t p = pivot_row;
        while (p < a.rows && a.at(p, c) == 0) ++p;
        if (p == a.rows) continue;
        if (p != pivot_row) {
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(p, j), a.at(pivot_row, j));
            sign = -sign;
        }
        const Integer pivot = a.at(pivot_row, c);
        for (std::size_t i = pivot_row + 1; i < a.rows; ++i) {
            const Integer lead = a.at(i, c);
            for (std::size_t j = c + 1; j < a.cols; ++j) {
                Integer& x = a.at(i, j);
                x = pivot * x - lead * a.at(pivot_row, j);
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, c) = 0;
        }
        prev = pivot;
        ++pivot_row;
    }
    return pivot_row;
}

}  // namespace

Rational det(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionError("det: matrix is not square");
    if (m.rows() == 0) return 1;
    auto a = lift(m);
    int sign = 1;
    if (bareiss(a, sign) < a.rows) return 0;
    Rational d(a.at(a.rows - 1, a.cols - 1) * sign, a.scale);
    d.canonicalize();
    return d;
}

std::size_t rank(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto a = lift(m);
    int sign = 1;
    return bareiss(a, sign);
}

Mat rref(const Mat& m) {
    Mat a = m;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        std::size_t p = pivot_row;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != pivot_row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(pivot_row, j));
        const Rational inv = 1 / a(pivot_row, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pivot_row || sgn(a(i, c)) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(pivot_row, j);
        }
        ++pivot_row;
    }
    Mat out(pivot_row, a.cols());
    for (std::size_t r = 0; r < pivot_row; ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    return out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span_of(const Mat& m) {
    Subspace s(m.cols());
    s.basis_ = rref(m);
    return s;
}

Subspace Subspace::span_of(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
    return span_of(Mat::from_rows(vectors, ambient_dim));
}

Subspace Subspace::annihilator() const { return kernel_basis(basis_); }

Subspace kernel_basis(const Mat& m) {
    const Mat r = rref(m);
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivot_col(r.rows());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t c = 0;
        while (sgn(r(i, c)) == 0) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < r.rows(); ++i) v[pivot_col[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span_of(basis, n);
}

SolveResult solve_consistent(const Mat& m, std::span<const Rational> b) {
    if (b.size() != m.rows()) throw DimensionError("solve_consistent: rhs length mismatch");
    const std::size_t n = m.cols();
    Mat aug(m.rows(), n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    const Mat r = rref(aug);
    Vec x(n);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t c = 0;
        while (sgn(r(i, c)) == 0) ++c;
        if (c == n) return {false, std::nullopt};
        x[c] = r(i, n);
    }
    return {true, std::move(x)};
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_equal: ambient dimension mismatch");
    return a == b;
}

bool in_span(std::span<const Rational> v, const Subspace& s) {
    if (v.size() != s.ambient_dim()) throw DimensionError("in_span: length mismatch");
    // Reduce v against the RREF basis; the pivot entries fix the coefficients.
    Vec rest(v.begin(), v.end());
    const Mat& basis = s.basis();
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::size_t c = 0;
        while (sgn(basis(i, c)) == 0) ++c;
        if (sgn(rest[c]) == 0) continue;
        const Rational f = rest[c];
        for (std::size_t j = c; j < rest.size(); ++j) rest[j] -= f * basis(i, j);
    }
    return is_zero(rest);
}

bool contains(const Subspace& outer, const Subspace& inner) {
    if (outer.ambient_dim() != inner.ambient_dim()) throw DimensionError("contains: ambient dimension mismatch");
    for (std::size_t i = 0; i < inner.dim(); ++i)
        if (!in_span(inner.basis().row(i), outer)) return false;
    return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_sum: ambient dimension mismatch");
    Mat stacked = a.basis();
    for (std::size_t i = 0; i < b.dim(); ++i) stacked.push_row(b.basis().row(i));
    return Subspace::span_of(stacked);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_intersect: ambient dimension mismatch");
    // a ∩ b is cut out by the constraints of both annihilators.
    Mat constraints = a.annihilator().basis();
    const Subspace bb = b.annihilator();
    for (std::size_t i = 0; i < bb.dim(); ++i) constraints.push_row(bb.basis().row(i));
    if (constraints.rows() == 0) return Subspace::span_of(Mat::identity(a.ambient_dim()));
    return kernel_basis(constraints);
}

}  // namespace discrimlab
