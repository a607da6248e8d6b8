#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qalg/field.hpp"

namespace qalg {

// Dense matrix over a field object F. Entries row-major, all arithmetic exact.
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(F f, size_t rows, size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

    static Matrix identity(F f, size_t n) {
        Matrix m(f, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Elem& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t k = 0; k < a_.size(); ++k)
            if (!field_.eq(a_[k], o.a_[k])) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw error("matrix product dimension mismatch");
        Matrix r(field_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const Elem& x = at(i, k);
                if (field_.is_zero(x)) continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    const Elem& y = o.at(k, j);
                    if (field_.is_zero(y)) continue;
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(x, y));
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix sum dimension mismatch");
        Matrix r(field_, rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.add(a_[k], o.a_[k]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix difference dimension mismatch");
        Matrix r(field_, rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.sub(a_[k], o.a_[k]);
        return r;
    }

    Matrix scaled(const Elem& c) const {
        Matrix r(field_, rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.mul(a_[k], c);
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<Elem> col(size_t j) const {
        std::vector<Elem> v(rows_, field_.zero());
        for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    void set_col(size_t j, const std::vector<Elem>& v) {
        if (v.size() != rows_) throw error("set_col length mismatch");
        for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    std::vector<Elem> apply(const std::vector<Elem>& v) const {
        if (v.size() != cols_) throw error("matrix apply dimension mismatch");
        std::vector<Elem> r(rows_, field_.zero());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!field_.is_zero(at(i, j)) && !field_.is_zero(v[j]))
                    r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
        return r;
    }

    // Columns j for which pick[j] is true, in order.
    Matrix select_cols(const std::vector<size_t>& idx) const {
        Matrix r(field_, rows_, idx.size());
        for (size_t j = 0; j < idx.size(); ++j)
            for (size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
        return r;
    }

private:
    F field_;
    size_t rows_, cols_;
    std::vector<Elem> a_;
};

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw error("hstack row mismatch");
    Matrix<F> r(a.field(), a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::vector<size_t> pivots;  // strictly increasing column indices
    size_t rank = 0;
};

// Unique reduced row echelon form. Pivot = first nonzero entry scanning rows
// top-down, columns left-right; deterministic for identical inputs.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
    const F& f = m.field();
    size_t r = 0;
    std::vector<size_t> pivots;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t sel = m.rows();
        for (size_t i = r; i < m.rows(); ++i)
            if (!f.is_zero(m.at(i, c))) {
                sel = i;
                break;
            }
        if (sel == m.rows()) continue;
        if (sel != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        auto piv_inv = f.inv(m.at(r, c));
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), piv_inv);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            auto factor = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

template <class F>
size_t rank(const Matrix<F>& m) {
    return rref(m).rank;
}

// Basis of the right null space, one column per free variable; m * result = 0.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    const F& f = m.field();
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<F> ker(f, m.cols(), free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        ker.at(fc, k) = f.one();
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            ker.at(rr.pivots[i], k) = f.neg(rr.reduced.at(i, fc));
    }
    return ker;
}

// Solve m * X = rhs exactly; std::nullopt iff some column of rhs is outside
// the column space. With several RHS columns, all must be solvable.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& m, const Matrix<F>& rhs) {
    const F& f = m.field();
    if (rhs.rows() != m.rows()) throw error("solve: rhs length mismatch");
    auto rr = rref(hstack(m, rhs));
    Matrix<F> x(f, m.cols(), rhs.cols());
    // any pivot in the rhs block means inconsistency
    for (size_t p : rr.pivots)
        if (p >= m.cols()) return std::nullopt;
    for (size_t i = 0; i < rr.pivots.size(); ++i)
        for (size_t j = 0; j < rhs.cols(); ++j) x.at(rr.pivots[i], j) = rr.reduced.at(i, m.cols() + j);
    return x;
}

template <class F>
std::optional<std::vector<typename F::Elem>> solve(const Matrix<F>& m,
                                                   const std::vector<typename F::Elem>& b) {
    Matrix<F> rhs(m.field(), m.rows(), 1);
    rhs.set_col(0, b);
    auto x = solve(m, rhs);
    if (!x) return std::nullopt;
    return x->col(0);
}

// Incremental row-space builder: rows kept in reduced echelon form, supporting
// membership tests and closure iterations.
template <class F>
class SpanBuilder {
public:
    using Elem = typename F::Elem;

    SpanBuilder(F f, size_t width) : field_(std::move(f)), width_(width) {}

    // Returns true if the vector enlarged the span.
    bool add(std::vector<Elem> v) {
        if (v.size() != width_) throw error("SpanBuilder width mismatch");
        reduce(v);
        size_t lead = leading(v);
        if (lead == width_) return false;
        auto inv = field_.inv(v[lead]);
        for (auto& x : v) x = field_.mul(x, inv);
        // back-substitute into existing rows
        for (auto& row : rows_) {
            auto& c = row.second[lead];
            if (!field_.is_zero(c)) {
                auto factor = c;
                for (size_t j = 0; j < width_; ++j)
                    row.second[j] = field_.sub(row.second[j], field_.mul(factor, v[j]));
            }
        }
        rows_.emplace_back(lead, std::move(v));
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return true;
    }

    bool contains(std::vector<Elem> v) const {
        reduce(v);
        return leading(v) == width_;
    }

    size_t dim() const { return rows_.size(); }
    size_t width() const { return width_; }

    std::vector<size_t> pivots() const {
        std::vector<size_t> p;
        for (const auto& r : rows_) p.push_back(r.first);
        return p;
    }

    // Span basis as columns of a width x dim matrix.
    Matrix<F> basis_cols() const {
        Matrix<F> m(field_, width_, rows_.size());
        for (size_t k = 0; k < rows_.size(); ++k)
            for (size_t j = 0; j < width_; ++j) m.at(j, k) = rows_[k].second[j];
        return m;
    }

private:
    size_t leading(const std::vector<Elem>& v) const {
        for (size_t j = 0; j < width_; ++j)
            if (!field_.is_zero(v[j])) return j;
        return width_;
    }

    void reduce(std::vector<Elem>& v) const {
        for (const auto& row : rows_) {
            const auto& c = v[row.first];
            if (field_.is_zero(c)) continue;
            auto factor = c;
            for (size_t j = row.first; j < width_; ++j)
                v[j] = field_.sub(v[j], field_.mul(factor, row.second[j]));
        }
    }

    F field_;
    size_t width_;
    std::vector<std::pair<size_t, std::vector<Elem>>> rows_;  // (pivot, row)
};

}  // namespace qalg
