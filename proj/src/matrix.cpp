#include "locus/matrix.hpp"

#include <map>

#include "locus/errors.hpp"

namespace locus {

std::vector<std::size_t> ScalarMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && a_[piv][c].is_zero()) ++piv;
        if (piv == rows_) continue;
        std::swap(a_[r], a_[piv]);
        Scalar inv = a_[r][c].inv();
        for (std::size_t j = c; j < cols_; ++j) a_[r][j] = a_[r][j] * inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || a_[i][c].is_zero()) continue;
            Scalar f = a_[i][c];
            for (std::size_t j = c; j < cols_; ++j) a_[i][j] = a_[i][j] - f * a_[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t ScalarMatrix::rank() const {
    ScalarMatrix copy = *this;
    return copy.rref().size();
}

bool ScalarMatrix::row_space_contains(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw UsageError("row_space_contains: arity mismatch");
    ScalarMatrix aug(rows_ + 1, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) aug.a_[i] = a_[i];
    aug.a_[rows_] = v;
    return aug.rank() == rank();
}

std::optional<std::vector<Scalar>> ScalarMatrix::solve(const std::vector<Scalar>& b) const {
    if (b.size() != rows_) throw UsageError("solve: arity mismatch");
    ScalarMatrix aug(rows_, cols_ + 1, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.a_[i][j] = a_[i][j];
        aug.a_[i][cols_] = b[i];
    }
    auto pivots = aug.rref();
    for (std::size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] == cols_) return std::nullopt; // inconsistent
    std::vector<Scalar> x(cols_, Scalar::zero(field_));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.a_[k][cols_];
    return x;
}

std::vector<std::vector<Scalar>> ScalarMatrix::kernel() const {
    ScalarMatrix copy = *this;
    auto pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(field_));
        v[free] = Scalar::one(field_);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -copy.a_[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar ScalarMatrix::determinant() const {
    if (rows_ != cols_) throw UsageError("determinant of a non-square matrix");
    ScalarMatrix copy = *this;
    Scalar det = Scalar::one(field_);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t piv = c;
        while (piv < rows_ && copy.a_[piv][c].is_zero()) ++piv;
        if (piv == rows_) return Scalar::zero(field_);
        if (piv != c) {
            std::swap(copy.a_[c], copy.a_[piv]);
            det = -det;
        }
        det = det * copy.a_[c][c];
        Scalar inv = copy.a_[c][c].inv();
        for (std::size_t i = c + 1; i < rows_; ++i) {
            if (copy.a_[i][c].is_zero()) continue;
            Scalar f = copy.a_[i][c] * inv;
            for (std::size_t j = c; j < cols_; ++j) copy.a_[i][j] = copy.a_[i][j] - f * copy.a_[c][j];
        }
    }
    return det;
}

namespace {

// det of the lower-right minor with row offset determined by |mask|
Polynomial det_memo(const std::vector<std::vector<Polynomial>>& m, std::uint32_t colmask,
                    const std::function<Polynomial(const Polynomial&)>& reduce,
                    std::map<std::uint32_t, Polynomial>& memo) {
    std::size_t n = m.size();
    std::size_t k = static_cast<std::size_t>(__builtin_popcount(colmask));
    std::size_t row = n - k;
    if (k == 0) return Polynomial::one(m[0][0].ring());
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    Polynomial acc(m[0][0].ring());
    int sign = 1;
    for (std::size_t c = 0, seen = 0; c < n; ++c) {
        if (!(colmask & (1u << c))) continue;
        ++seen;
        if (!m[row][c].is_zero()) {
            Polynomial sub = det_memo(m, colmask & ~(1u << c), reduce, memo);
            Polynomial term = reduce(m[row][c] * sub);
            acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
        (void)seen;
    }
    acc = reduce(acc);
    memo.emplace(colmask, acc);
    return acc;
}

} // namespace

Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m,
                            const std::function<Polynomial(const Polynomial&)>& reduce) {
    std::size_t n = m.size();
    if (n == 0) throw UsageError("determinant of an empty matrix");
    if (n > 20) throw BoundExceeded("poly_determinant limited to 20 x 20");
    for (const auto& row : m)
        if (row.size() != n) throw UsageError("determinant of a non-square matrix");
    std::map<std::uint32_t, Polynomial> memo;
    std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
    return det_memo(m, full, reduce, memo);
}

namespace {

void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                  std::size_t start, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (cur.size() == k) {
        fn(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        combinations(n, k, cur, i + 1, fn);
        cur.pop_back();
    }
}

} // namespace

std::vector<Polynomial> poly_minors(const std::vector<std::vector<Polynomial>>& m, std::size_t k,
                                    const std::function<Polynomial(const Polynomial&)>& reduce) {
    std::vector<Polynomial> out;
    if (m.empty()) return out;
    std::size_t R = m.size(), C = m[0].size();
    if (k == 0 || k > R || k > C) return out;
    std::vector<std::size_t> rows, cols;
    combinations(R, k, rows, 0, [&](const std::vector<std::size_t>& rsel) {
        combinations(C, k, cols, 0, [&](const std::vector<std::size_t>& csel) {
            std::vector<std::vector<Polynomial>> sub(k, std::vector<Polynomial>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rsel[i]][csel[j]];
            out.push_back(poly_determinant(sub, reduce));
        });
    });
    return out;
}

} // namespace locus
