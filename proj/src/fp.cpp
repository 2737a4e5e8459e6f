#include "coho/fp.hpp"

#include <algorithm>
#include <cassert>

namespace coho {

Coeff invm(Coeff a, Coeff p) {
    assert(a % p != 0);
    a %= p;
    /* p is tiny here (3, 5, 7); a linear scan beats bookkeeping */
    for (Coeff x = 1; x < p; ++x)
        if (mulm(a, x, p) == 1)
            return x;
    return 0; /* unreachable for prime p */
}

namespace {

/* Subtract f * row r1 from row r2 of m, in place. */
void row_axpy(FpMatrix& m, std::size_t r2, std::size_t r1, Coeff f) {
    if (f == 0)
        return;
    Coeff p = m.p;
    Coeff* a = m.a.data() + r2 * m.cols;
    const Coeff* b = m.a.data() + r1 * m.cols;
    for (std::size_t j = 0; j < m.cols; ++j)
        a[j] = subm(a[j], mulm(f, b[j], p), p);
}

}  // namespace

RrefResult rref(const FpMatrix& m) {
    FpMatrix w = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols && r < w.rows; ++c) {
        std::size_t sel = r;
        while (sel < w.rows && w.at(sel, c) == 0)
            ++sel;
        if (sel == w.rows)
            continue;
        if (sel != r)
            for (std::size_t j = 0; j < w.cols; ++j)
                std::swap(w.at(sel, j), w.at(r, j));
        Coeff inv = invm(w.at(r, c), w.p);
        for (std::size_t j = 0; j < w.cols; ++j)
            w.at(r, j) = mulm(w.at(r, j), inv, w.p);
        for (std::size_t i = 0; i < w.rows; ++i)
            if (i != r)
                row_axpy(w, i, r, w.at(i, c));
        pivots.push_back(c);
        ++r;
    }
    RrefResult out;
    out.rank = r;
    out.pivots = std::move(pivots);
    out.reduced = FpMatrix(w.p, r, w.cols);
    for (std::size_t i = 0; i < r; ++i)
        std::copy_n(w.a.begin() + i * w.cols, w.cols, out.reduced.a.begin() + i * w.cols);
    return out;
}

std::vector<CoeffVec> kernel(const FpMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : r.pivots)
        is_pivot[c] = true;
    std::vector<CoeffVec> basis;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c])
            continue;
        CoeffVec v(m.cols, 0);
        v[c] = 1;
        /* pivot row i has 1 in column pivots[i]; solve backwards */
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = negm(r.reduced.at(i, c), m.p);
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve(const FpMatrix& m, std::span<const Coeff> b) {
    if (b.size() != m.rows)
        throw DimensionMismatch("solve: rhs length " + std::to_string(b.size()) +
                                " != rows " + std::to_string(m.rows));
    /* row-reduce the augmented matrix */
    FpMatrix aug(m.p, m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::copy_n(m.a.begin() + i * m.cols, m.cols, aug.a.begin() + i * aug.cols);
        aug.at(i, m.cols) = b[i] % m.p;
    }
    RrefResult r = rref(aug);
    LinearSolution out;
    for (std::size_t i = 0; i < r.rank; ++i)
        if (r.pivots[i] == m.cols)
            return out; /* 0 = nonzero: inconsistent */
    out.consistent = true;
    out.particular.assign(m.cols, 0);
    for (std::size_t i = 0; i < r.rank; ++i)
        out.particular[r.pivots[i]] = r.reduced.at(i, m.cols);
    /* kernel of m from the reduced rows (last column dropped) */
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : r.pivots)
        is_pivot[c] = true;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c])
            continue;
        CoeffVec v(m.cols, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = negm(r.reduced.at(i, c), m.p);
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

CoeffVec matvec(const FpMatrix& m, std::span<const Coeff> x) {
    assert(x.size() == m.cols);
    CoeffVec y(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::uint64_t acc = 0;
        const Coeff* row = m.a.data() + i * m.cols;
        for (std::size_t j = 0; j < m.cols; ++j)
            acc += std::uint64_t(row[j]) * x[j];
        y[i] = Coeff(acc % m.p);
    }
    return y;
}

bool RowSpan::is_zero(const CoeffVec& v) {
    return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
}

CoeffVec RowSpan::reduce(CoeffVec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Coeff f = v[pivots_[i]];
        if (f == 0)
            continue;
        const CoeffVec& r = rows_[i];
        for (std::size_t j = 0; j < cols_; ++j)
            v[j] = subm(v[j], mulm(f, r[j], p_), p_);
    }
    return v;
}

bool RowSpan::add(CoeffVec v) {
    v = reduce(std::move(v));
    std::size_t piv = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (v[j] != 0) {
            piv = j;
            break;
        }
    if (piv == cols_)
        return false;
    Coeff inv = invm(v[piv], p_);
    for (std::size_t j = 0; j < cols_; ++j)
        v[j] = mulm(v[j], inv, p_);
    /* keep existing rows reduced against the new one */
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Coeff f = rows_[i][piv];
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < cols_; ++j)
            rows_[i][j] = subm(rows_[i][j], mulm(f, v[j], p_), p_);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

}  // namespace coho
