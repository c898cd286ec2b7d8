#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "delpezzo/field.hpp"

namespace dp {

template <class K>
using Vec = std::vector<typename K::Elem>;

template <class K>
using Mat = std::vector<Vec<K>>;

template <class K>
Mat<K> transpose(const Mat<K>& m) {
    if (m.empty()) return {};
    Mat<K> t(m[0].size(), Vec<K>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            t[j][i] = m[i][j];
    return t;
}

/// In-place reduced row echelon form. Returns the pivot columns in order.
template <class K>
std::vector<std::size_t> rref(const K& k, Mat<K>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && k.is_zero(m[sel][col])) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        auto scale = k.inv(m[row][col]);
        for (std::size_t j = col; j < cols; ++j) m[row][j] = k.mul(m[row][j], scale);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || k.is_zero(m[i][col])) continue;
            auto f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = k.sub(m[i][j], k.mul(f, m[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
std::size_t rank(const K& k, Mat<K> m) {
    return rref(k, m).size();
}

/// Basis of {x : m x = 0}, one row per free column, in reduced echelon form
/// (each basis vector has a 1 in its free column and zeros in the others).
template <class K>
Mat<K> nullspace(const K& k, Mat<K> m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    auto pivots = rref(k, m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Mat<K> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec<K> v(cols, k.zero());
        v[free] = k.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = k.neg(m[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Canonical kernel basis: the nullspace put into reduced row echelon form.
template <class K>
Mat<K> kernel_rref(const K& k, const Mat<K>& m) {
    auto basis = nullspace(k, m);
    rref(k, basis);
    return basis;
}

template <class K>
Mat<K> left_kernel_rref(const K& k, const Mat<K>& m) {
    return kernel_rref(k, transpose<K>(m));
}

template <class K>
typename K::Elem det(const K& k, Mat<K> m) {
    std::size_t n = m.size();
    auto d = k.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && k.is_zero(m[sel][col])) ++sel;
        if (sel == n) return k.zero();
        if (sel != col) {
            std::swap(m[sel], m[col]);
            d = k.neg(d);
        }
        d = k.mul(d, m[col][col]);
        auto scale = k.inv(m[col][col]);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (k.is_zero(m[i][col])) continue;
            auto f = k.mul(m[i][col], scale);
            for (std::size_t j = col; j < n; ++j)
                m[i][j] = k.sub(m[i][j], k.mul(f, m[col][j]));
        }
    }
    return d;
}

/// Rank accumulator for matrices too tall to materialize comfortably.
/// Rows are folded into a normalized echelon, keyed by pivot column.
template <class K>
class RankAccumulator {
public:
    explicit RankAccumulator(const K& k, std::size_t cols)
        : k_(k), echelon_(cols) {}

    void add(Vec<K> row) {
        for (std::size_t col = 0; col < row.size(); ++col) {
            if (k_.is_zero(row[col])) continue;
            if (!echelon_[col]) {
                auto scale = k_.inv(row[col]);
                for (std::size_t j = col; j < row.size(); ++j)
                    row[j] = k_.mul(row[j], scale);
                echelon_[col] = std::move(row);
                ++rank_;
                return;
            }
            const auto& e = *echelon_[col];
            auto f = row[col];
            for (std::size_t j = col; j < row.size(); ++j)
                row[j] = k_.sub(row[j], k_.mul(f, e[j]));
        }
    }

    std::size_t rank() const { return rank_; }

private:
    K k_;
    std::vector<std::optional<Vec<K>>> echelon_;
    std::size_t rank_ = 0;
};

/// Rank of a sparse matrix given as rows of (column, value) pairs sorted by
/// column. Echelon rows stay sparse, keyed by pivot column.
template <class K>
class SparseRankAccumulator {
public:
    using Row = std::vector<std::pair<long, typename K::Elem>>;

    explicit SparseRankAccumulator(const K& k) : k_(k) {}

    void add(Row row) {
        while (!row.empty()) {
            long piv = row.front().first;
            auto it = echelon_.find(piv);
            if (it == echelon_.end()) {
                auto scale = k_.inv(row.front().second);
                for (auto& [c, v] : row) v = k_.mul(v, scale);
                echelon_.emplace(piv, std::move(row));
                ++rank_;
                return;
            }
            row = axpy(row, k_.neg(k_.div(row.front().second, it->second.front().second)),
                       it->second);
        }
    }

    std::size_t rank() const { return rank_; }

private:
    // row + f * other, merged by column, zeros dropped
    Row axpy(const Row& row, const typename K::Elem& f, const Row& other) const {
        Row out;
        out.reserve(row.size() + other.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < other.size()) {
            if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || other[j].first < row[i].first) {
                out.emplace_back(other[j].first, k_.mul(f, other[j].second));
                ++j;
            } else {
                auto v = k_.add(row[i].second, k_.mul(f, other[j].second));
                if (!k_.is_zero(v)) out.emplace_back(row[i].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    }

    K k_;
    std::map<long, Row> echelon_;
    std::size_t rank_ = 0;
};

}  // namespace dp
