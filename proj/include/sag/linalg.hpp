#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sag/rat.hpp"

namespace sag {

/// Dense matrix over Q, row-major.
struct QMat {
    size_t rows = 0, cols = 0;
    std::vector<Q> a;

    QMat() = default;
    QMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, Q(0)) {}
    Q& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Q& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static QMat identity(size_t n);
    QMat operator*(const QMat&) const;
};

size_t rank(QMat m);
Q det(QMat m);

/// Solve M x = b; empty optional if inconsistent. Returns one solution
/// (free variables set to 0).
std::optional<std::vector<Q>> solve(QMat m, std::vector<Q> b);

/// Least k >= 1 such that vectors v_0..v_k are linearly dependent, together
/// with coefficients c_0..c_{k-1} expressing v_k = sum c_i v_i.
/// Vectors are fed through a callback producing v_i on demand.
struct DependencyResult {
    size_t k;
    std::vector<Q> coeffs;
};
DependencyResult first_dependency(size_t dim,
                                  const std::function<std::vector<Q>(size_t)>& vec);

/// Integer matrix, row-major.
struct ZMat {
    size_t rows = 0, cols = 0;
    std::vector<Z> a;

    ZMat() = default;
    ZMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, Z(0)) {}
    Z& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Z& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

/// Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form.
std::vector<Z> smith_diagonal(ZMat m);

/// Column-style Hermite normal form of the lattice spanned by the columns,
/// for membership tests: is b in the column lattice of m?
class ColumnLattice {
  public:
    explicit ColumnLattice(ZMat m);
    bool contains(std::vector<Z> b) const;

  private:
    size_t dim_;
    // pivoted echelon columns (pivot row -> column vector)
    std::vector<std::pair<size_t, std::vector<Z>>> basis_;
};

} // namespace sag
