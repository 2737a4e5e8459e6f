#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coho/errors.hpp"

namespace coho {

using Coeff = std::uint32_t;
using CoeffVec = std::vector<Coeff>;

/* Residue arithmetic mod a small odd prime. Inputs are assumed reduced. */
inline Coeff addm(Coeff a, Coeff b, Coeff p) { Coeff s = a + b; return s >= p ? s - p : s; }
inline Coeff subm(Coeff a, Coeff b, Coeff p) { return a >= b ? a - b : a + p - b; }
inline Coeff mulm(Coeff a, Coeff b, Coeff p) { return (a * b) % p; }
inline Coeff negm(Coeff a, Coeff p) { return a == 0 ? 0 : p - a; }

Coeff invm(Coeff a, Coeff p);

/* Dense row-major matrix over F_p, p an odd prime >= 3. */
struct FpMatrix {
    Coeff p = 3;
    std::size_t rows = 0, cols = 0;
    CoeffVec a;

    FpMatrix() = default;
    FpMatrix(Coeff p_, std::size_t rows_, std::size_t cols_)
        : p(p_), rows(rows_), cols(cols_), a(rows_ * cols_, 0) {}

    Coeff& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Coeff at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    std::span<Coeff> row(std::size_t i) { return {a.data() + i * cols, cols}; }
    std::span<const Coeff> row(std::size_t i) const { return {a.data() + i * cols, cols}; }

    bool operator==(const FpMatrix&) const = default;
};

struct RrefResult {
    std::size_t rank = 0;
    FpMatrix reduced;                 /* rank nonzero rows, RREF */
    std::vector<std::size_t> pivots;  /* pivot column per row */
};

RrefResult rref(const FpMatrix& m);

/* Basis of the null space {x : m x = 0}; dimension cols - rank. */
std::vector<CoeffVec> kernel(const FpMatrix& m);

struct LinearSolution {
    bool consistent = false;
    CoeffVec particular;                /* one solution of m x = b */
    std::vector<CoeffVec> kernel_basis; /* basis of the homogeneous solutions */
};

/* Full solution set of m x = b; throws DimensionMismatch if |b| != rows. */
LinearSolution solve(const FpMatrix& m, std::span<const Coeff> b);

CoeffVec matvec(const FpMatrix& m, std::span<const Coeff> x);

/* Incrementally maintained row space in reduced echelon form.
 * add() returns true when the vector enlarged the span. */
class RowSpan {
public:
    explicit RowSpan(Coeff p, std::size_t cols) : p_(p), cols_(cols) {}

    bool add(CoeffVec v);
    CoeffVec reduce(CoeffVec v) const;
    bool contains(CoeffVec v) const { return is_zero(reduce(std::move(v))); }
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    Coeff p() const { return p_; }
    const std::vector<CoeffVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    static bool is_zero(const CoeffVec& v);

private:
    Coeff p_;
    std::size_t cols_;
    std::vector<CoeffVec> rows_;        /* kept reduced against each other */
    std::vector<std::size_t> pivots_;
};

}  // namespace coho
