#include "sag/linalg.hpp"

#include <algorithm>

#include "sag/error.hpp"

namespace sag {

QMat QMat::identity(size_t n) {
    QMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols != o.rows) fail(errc::internal, "QMat dims");
    QMat r(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (size_t j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

namespace {
// row echelon in place; returns pivot columns
std::vector<size_t> echelon(QMat& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t p = r;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) continue;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Q inv = 1 / m.at(r, c);
        for (size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Q f = m.at(i, c);
            for (size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}
} // namespace

size_t rank(QMat m) { return echelon(m).size(); }

Q det(QMat m) {
    if (m.rows != m.cols) fail(errc::internal, "det: not square");
    Q d(1);
    size_t n = m.rows;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m.at(p, c) == 0) ++p;
        if (p == n) return Q(0);
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Q inv = 1 / m.at(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            Q f = m.at(i, c) * inv;
            for (size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

std::optional<std::vector<Q>> solve(QMat m, std::vector<Q> b) {
    if (b.size() != m.rows) fail(errc::internal, "solve dims");
    QMat aug(m.rows, m.cols + 1);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto pivots = echelon(aug);
    for (size_t i = 0; i < aug.rows; ++i) {
        bool zero = true;
        for (size_t j = 0; j < m.cols; ++j)
            if (aug.at(i, j) != 0) { zero = false; break; }
        if (zero && aug.at(i, m.cols) != 0) return std::nullopt;
    }
    std::vector<Q> x(m.cols, Q(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols) return std::nullopt; // pivot in augmented column
        x[pivots[i]] = aug.at(i, m.cols);
    }
    return x;
}

DependencyResult first_dependency(size_t dim, const std::function<std::vector<Q>(size_t)>& vec) {
    struct Row {
        std::vector<Q> v;
        std::vector<Q> combo; // expression in terms of inputs
        size_t pivot;
    };
    std::vector<Row> basis;
    for (size_t k = 0;; ++k) {
        std::vector<Q> v = vec(k);
        if (v.size() != dim) fail(errc::internal, "first_dependency dims");
        std::vector<Q> combo(k + 1, Q(0));
        combo[k] = 1;
        for (auto& row : basis) {
            if (v[row.pivot] == 0) continue;
            Q f = v[row.pivot] / row.v[row.pivot];
            for (size_t j = 0; j < dim; ++j) v[j] -= f * row.v[j];
            for (size_t j = 0; j < row.combo.size(); ++j) combo[j] -= f * row.combo[j];
        }
        size_t p = 0;
        while (p < dim && v[p] == 0) ++p;
        if (p == dim) {
            std::vector<Q> coeffs(k);
            for (size_t i = 0; i < k; ++i) coeffs[i] = -combo[i];
            return {k, std::move(coeffs)};
        }
        basis.push_back({std::move(v), std::move(combo), p});
        if (k > dim) fail(errc::internal, "first_dependency: no dependency found");
    }
}

std::vector<Z> smith_diagonal(ZMat m) {
    // standard elementary-operation SNF; fine at the sizes used here
    size_t r = m.rows, c = m.cols;
    std::vector<Z> diag;
    size_t top = 0;
    while (top < r && top < c) {
        // find nonzero pivot with minimal |value|
        size_t pi = top, pj = top;
        bool found = false;
        Z best;
        for (size_t i = top; i < r; ++i)
            for (size_t j = top; j < c; ++j) {
                if (m.at(i, j) == 0) continue;
                Z a = abs(m.at(i, j));
                if (!found || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        for (size_t j = 0; j < c; ++j) std::swap(m.at(pi, j), m.at(top, j));
        for (size_t i = 0; i < r; ++i) std::swap(m.at(i, pj), m.at(i, top));
        bool clean = true;
        for (size_t i = top + 1; i < r; ++i) {
            if (m.at(i, top) == 0) continue;
            Z q = m.at(i, top) / m.at(top, top);
            for (size_t j = 0; j < c; ++j) m.at(i, j) -= q * m.at(top, j);
            if (m.at(i, top) != 0) clean = false;
        }
        for (size_t j = top + 1; j < c; ++j) {
            if (m.at(top, j) == 0) continue;
            Z q = m.at(top, j) / m.at(top, top);
            for (size_t i = 0; i < r; ++i) m.at(i, j) -= q * m.at(i, top);
            if (m.at(top, j) != 0) clean = false;
        }
        if (!clean) continue; // smaller remainders appeared; redo this pivot
        // divisibility fix-up: pivot must divide all remaining entries
        bool fixed = true;
        for (size_t i = top + 1; i < r && fixed; ++i)
            for (size_t j = top + 1; j < c && fixed; ++j)
                if (m.at(i, j) % m.at(top, top) != 0) {
                    for (size_t jj = 0; jj < c; ++jj) m.at(top, jj) += m.at(i, jj);
                    fixed = false;
                }
        if (!fixed) continue;
        diag.push_back(abs(m.at(top, top)));
        ++top;
    }
    return diag;
}

ColumnLattice::ColumnLattice(ZMat m) : dim_(m.rows) {
    std::vector<std::vector<Z>> cols(m.cols, std::vector<Z>(m.rows));
    for (size_t j = 0; j < m.cols; ++j)
        for (size_t i = 0; i < m.rows; ++i) cols[j][i] = m.at(i, j);
    size_t row = 0;
    std::vector<std::vector<Z>> active = std::move(cols);
    while (row < dim_ && !active.empty()) {
        // Euclid among columns with nonzero entry at `row`
        while (true) {
            // pick the column with minimal nonzero |entry| at row
            size_t best = active.size();
            for (size_t j = 0; j < active.size(); ++j) {
                if (active[j][row] == 0) continue;
                if (best == active.size() || abs(active[j][row]) < abs(active[best][row])) best = j;
            }
            if (best == active.size()) break; // all zero at this row
            bool others = false;
            for (size_t j = 0; j < active.size(); ++j) {
                if (j == best || active[j][row] == 0) continue;
                others = true;
                Z q = active[j][row] / active[best][row];
                for (size_t i = 0; i < dim_; ++i) active[j][i] -= q * active[best][i];
            }
            if (!others) {
                // extract pivot column
                std::vector<Z> piv = active[best];
                if (piv[row] < 0)
                    for (auto& v : piv) v = -v;
                basis_.emplace_back(row, std::move(piv));
                active.erase(active.begin() + best);
                break;
            }
        }
        ++row;
    }
}

bool ColumnLattice::contains(std::vector<Z> b) const {
    if (b.size() != dim_) fail(errc::internal, "lattice dims");
    for (auto& [row, col] : basis_) {
        if (b[row] == 0) continue;
        if (b[row] % col[row] != 0) return false;
        Z q = b[row] / col[row];
        for (size_t i = 0; i < dim_; ++i) b[i] -= q * col[i];
    }
    for (auto& v : b)
        if (v != 0) return false;
    return true;
}

} // namespace sag
