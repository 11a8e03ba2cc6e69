#pragma once

// Sparse integer matrices with exact arithmetic.  Dimensions here are tiny
// (at most a few hundred), so the representation favors clarity: an ordered
// (row, col) -> value map that never stores zeros.

#include <map>
#include <utility>
#include <vector>

#include "a2zeta/bigint.hpp"
#include "a2zeta/errors.hpp"

namespace a2zeta {

class SparseMat {
public:
    using Index = std::pair<int, int>;

    SparseMat() = default;
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {}

    static SparseMat identity(int n) {
        SparseMat m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, Int(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Int& v) {
        check_index(r, c);
        if (v == 0)
            e_.erase({r, c});
        else
            e_[{r, c}] = v;
    }

    void add_at(int r, int c, const Int& v) {
        check_index(r, c);
        auto it = e_.find({r, c});
        if (it == e_.end()) {
            if (v != 0) e_[{r, c}] = v;
        } else {
            it->second += v;
            if (it->second == 0) e_.erase(it);
        }
    }

    Int at(int r, int c) const {
        check_index(r, c);
        auto it = e_.find({r, c});
        return it == e_.end() ? Int(0) : it->second;
    }

    const std::map<Index, Int>& entries() const { return e_; }

    bool operator==(const SparseMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const SparseMat& o) const { return !(*this == o); }

    bool is_zero() const { return e_.empty(); }

    SparseMat operator+(const SparseMat& o) const {
        require_same_shape(o);
        SparseMat r = *this;
        for (const auto& [idx, v] : o.e_) r.add_at(idx.first, idx.second, v);
        return r;
    }

    SparseMat operator-(const SparseMat& o) const {
        require_same_shape(o);
        SparseMat r = *this;
        for (const auto& [idx, v] : o.e_) r.add_at(idx.first, idx.second, -v);
        return r;
    }

    SparseMat operator*(const Int& s) const {
        SparseMat r(rows_, cols_);
        if (s == 0) return r;
        for (const auto& [idx, v] : e_) r.e_[idx] = v * s;
        return r;
    }

    SparseMat operator*(const SparseMat& o) const {
        if (cols_ != o.rows_)
            throw PreconditionFailed("matrix product shape mismatch");
        // row-major adjacency of o for cache-friendly accumulation
        std::vector<std::vector<std::pair<int, const Int*>>> rows_of_o(
            static_cast<size_t>(o.rows_));
        for (const auto& [idx, v] : o.e_)
            rows_of_o[static_cast<size_t>(idx.first)].emplace_back(idx.second, &v);
        SparseMat r(rows_, o.cols_);
        for (const auto& [idx, v] : e_) {
            for (const auto& [c2, pv] : rows_of_o[static_cast<size_t>(idx.second)])
                r.add_at(idx.first, c2, v * *pv);
        }
        return r;
    }

    SparseMat transpose() const {
        SparseMat r(cols_, rows_);
        for (const auto& [idx, v] : e_) r.e_[{idx.second, idx.first}] = v;
        return r;
    }

    Int trace() const {
        if (rows_ != cols_) throw NonSquare("trace of a non-square matrix");
        Int t(0);
        for (const auto& [idx, v] : e_)
            if (idx.first == idx.second) t += v;
        return t;
    }

    std::vector<Int> col_sums() const {
        std::vector<Int> s(static_cast<size_t>(cols_), Int(0));
        for (const auto& [idx, v] : e_) s[static_cast<size_t>(idx.second)] += v;
        return s;
    }

    std::vector<Int> row_sums() const {
        std::vector<Int> s(static_cast<size_t>(rows_), Int(0));
        for (const auto& [idx, v] : e_) s[static_cast<size_t>(idx.first)] += v;
        return s;
    }

    // Traces of M, M^2, ..., M^n_max in one sweep.
    std::vector<Int> power_traces(int n_max) const {
        if (rows_ != cols_) throw NonSquare("power traces of a non-square matrix");
        std::vector<Int> out;
        out.reserve(static_cast<size_t>(n_max));
        SparseMat p = *this;
        for (int n = 1; n <= n_max; ++n) {
            out.push_back(p.trace());
            if (n < n_max) p = p * *this;
        }
        return out;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::map<Index, Int> e_;

    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw PreconditionFailed("matrix index out of range");
    }

    void require_same_shape(const SparseMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw PreconditionFailed("matrix shape mismatch");
    }
};

}  // namespace a2zeta
