#include "coho/algebra.hpp"

#include <algorithm>
#include <cassert>

#include "coho/errors.hpp"

namespace coho {

Algebra::Algebra(Presentation pres, int cap) : pres_(std::move(pres)), cap_(cap) {
    pres_.refresh_derived();
    effective_p1_ = pres_.p1;
    for (std::size_t i = 0; i < pres_.ngens(); ++i) {
        if (effective_p1_[i])
            continue;
        if (pres_.degrees[i] == 1)
            effective_p1_[i] = Polynomial();
        else if (pres_.degrees[i] == 2)
            effective_p1_[i] =
                Polynomial::mono(Monomial::generator(pres_.ngens(), i, Expo(pres_.p)), 1);
    }
}

std::vector<Monomial> Algebra::free_monomials(int d) const {
    /* Ascending exponent-lex enumeration: generator 0 varies slowest. */
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    Monomial cur(ngens());
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (i == ngens())
            return;
        int dg = pres_.degrees[i];
        int maxe = pres_.parity_odd[i] ? 1 : remaining / dg;
        for (int e = 0; e <= maxe && e * dg <= remaining; ++e) {
            cur.e[i] = Expo(e);
            self(self, i + 1, remaining - e * dg);
        }
        cur.e[i] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

DegreeBasis Algebra::compute_degree_basis(int d) const {
    DegreeBasis basis;
    basis.degree = d;
    basis.free_monomials = free_monomials(d);
    const std::size_t ncols = basis.free_monomials.size();

    auto col_of = [&](const Monomial& m) -> std::size_t {
        auto it = std::lower_bound(basis.free_monomials.begin(), basis.free_monomials.end(), m);
        assert(it != basis.free_monomials.end() && *it == m);
        return std::size_t(it - basis.free_monomials.begin());
    };

    RowSpan span(p(), ncols);
    for (const Polynomial& rel : pres_.relations) {
        auto rd = degree(rel);
        if (!rd || *rd > d)
            continue;
        for (const Monomial& m : free_monomials(d - *rd)) {
            Polynomial prod = mul(Polynomial::mono(m, 1), rel);
            if (prod.is_zero())
                continue;
            CoeffVec row(ncols, 0);
            for (const Term& t : prod.terms())
                row[col_of(t.mon)] = t.c;
            span.add(std::move(row));
        }
    }

    basis.ideal_rref = FpMatrix(p(), span.rank(), ncols);
    for (std::size_t i = 0; i < span.rank(); ++i)
        std::copy(span.rows()[i].begin(), span.rows()[i].end(),
                  basis.ideal_rref.a.begin() + std::ptrdiff_t(i * ncols));
    basis.pivot_cols = span.pivots();
    /* RowSpan appends rows as they arrive; sort into echelon order */
    std::vector<std::size_t> order(span.rank());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return span.pivots()[a] < span.pivots()[b]; });
    FpMatrix sorted(p(), span.rank(), ncols);
    std::vector<std::size_t> sorted_pivots(span.rank());
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::copy_n(basis.ideal_rref.a.begin() + std::ptrdiff_t(order[i] * ncols), ncols,
                    sorted.a.begin() + std::ptrdiff_t(i * ncols));
        sorted_pivots[i] = span.pivots()[order[i]];
    }
    basis.ideal_rref = std::move(sorted);
    basis.pivot_cols = std::move(sorted_pivots);

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : basis.pivot_cols)
        is_pivot[c] = true;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!is_pivot[c]) {
            basis.quotient_basis.push_back(basis.free_monomials[c]);
            basis.quotient_cols.push_back(c);
        }
    return basis;
}

const DegreeBasis& Algebra::degree_basis(int d) const {
    if (d < 0 || d > cap_)
        throw CapExceeded(d, cap_);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(d);
    if (it == cache_.end())
        it = cache_.emplace(d, std::make_unique<DegreeBasis>(compute_degree_basis(d))).first;
    return *it->second;
}

Polynomial Algebra::normal_form(const Polynomial& q) const {
    if (q.is_zero())
        return q;
    int d = *degree(q);
    const DegreeBasis& basis = degree_basis(d);
    CoeffVec v(basis.free_monomials.size(), 0);
    for (const Term& t : q.terms()) {
        auto it = std::lower_bound(basis.free_monomials.begin(), basis.free_monomials.end(), t.mon);
        assert(it != basis.free_monomials.end() && *it == t.mon);
        v[std::size_t(it - basis.free_monomials.begin())] = t.c;
    }
    for (std::size_t i = 0; i < basis.pivot_cols.size(); ++i) {
        Coeff f = v[basis.pivot_cols[i]];
        if (f == 0)
            continue;
        const Coeff* row = basis.ideal_rref.a.data() + i * basis.ideal_rref.cols;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = subm(v[j], mulm(f, row[j], p()), p());
    }
    PolyBuilder acc(p());
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j])
            acc.add(basis.free_monomials[j], v[j]);
    return acc.build();
}

std::vector<int> Algebra::hilbert(int cap) const {
    if (cap > cap_)
        throw CapExceeded(cap, cap_);
    std::vector<int> dims;
    for (int d = 0; d <= cap; ++d)
        dims.push_back(dim(d));
    return dims;
}

CoeffVec Algebra::coords(const Polynomial& q, int d) const {
    const DegreeBasis& basis = degree_basis(d);
    Polynomial nf = normal_form(q);
    CoeffVec v(basis.dim(), 0);
    for (const Term& t : nf.terms()) {
        auto it =
            std::lower_bound(basis.quotient_basis.begin(), basis.quotient_basis.end(), t.mon);
        assert(it != basis.quotient_basis.end() && *it == t.mon);
        v[std::size_t(it - basis.quotient_basis.begin())] = t.c;
    }
    return v;
}

Polynomial Algebra::from_coords(std::span<const Coeff> v, int d) const {
    const DegreeBasis& basis = degree_basis(d);
    assert(v.size() == basis.dim());
    PolyBuilder acc(p());
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] % p())
            acc.add(basis.quotient_basis[j], v[j]);
    return acc.build();
}

}  // namespace coho
