#include "coho/poly.hpp"

#include <algorithm>
#include <cassert>

namespace coho {

Coeff Polynomial::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& mm) { return t.mon < mm; });
    if (it != terms_.end() && it->mon == m)
        return it->c;
    return 0;
}

void PolyBuilder::add(Monomial m, Coeff c) {
    c %= p_;
    if (c)
        acc_.push_back({std::move(m), c});
}

void PolyBuilder::add(const Polynomial& q, Coeff scale) {
    scale %= p_;
    if (!scale)
        return;
    for (const Term& t : q.terms())
        acc_.push_back({t.mon, mulm(t.c, scale, p_)});
}

Polynomial PolyBuilder::build() {
    std::sort(acc_.begin(), acc_.end(),
              [](const Term& a, const Term& b) { return a.mon < b.mon; });
    Polynomial out;
    for (Term& t : acc_) {
        if (!out.terms_.empty() && out.terms_.back().mon == t.mon) {
            out.terms_.back().c = addm(out.terms_.back().c, t.c, p_);
        } else {
            out.terms_.push_back(std::move(t));
        }
    }
    std::erase_if(out.terms_, [](const Term& t) { return t.c == 0; });
    acc_.clear();
    return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b, Coeff p) {
    /* sorted merge */
    Polynomial out;
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() && j != b.terms_.end()) {
        if (i->mon < j->mon)
            out.terms_.push_back(*i++);
        else if (j->mon < i->mon)
            out.terms_.push_back(*j++);
        else {
            Coeff c = addm(i->c, j->c, p);
            if (c)
                out.terms_.push_back({i->mon, c});
            ++i, ++j;
        }
    }
    out.terms_.insert(out.terms_.end(), i, a.terms_.end());
    out.terms_.insert(out.terms_.end(), j, b.terms_.end());
    return out;
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b, Coeff p) {
    return poly_add(a, poly_scale(b, p - 1, p), p);
}

Polynomial poly_scale(const Polynomial& a, Coeff c, Coeff p) {
    c %= p;
    Polynomial out;
    if (c == 0)
        return out;
    out.terms_ = a.terms_;
    for (Term& t : out.terms_)
        t.c = mulm(t.c, c, p);
    return out;
}

std::optional<MonProd> mon_mul(const Monomial& a, const Monomial& b, std::span<const bool> odd) {
    assert(a.e.size() == b.e.size());
    std::size_t n = a.e.size();
    unsigned swaps = 0;
    unsigned odd_tail = 0; /* odd factors of a with index > j, counted descending */
    MonProd out{Monomial(n), false};
    for (std::size_t j = n; j-- > 0;) {
        if (odd[j]) {
            if (a.e[j] && b.e[j])
                return std::nullopt; /* odd square */
            if (b.e[j])
                swaps += odd_tail;
            if (a.e[j])
                ++odd_tail;
        }
        out.mon.e[j] = Expo(a.e[j] + b.e[j]);
    }
    out.negative = (swaps % 2) != 0;
    return out;
}

Polynomial mul(const Polynomial& a, const Polynomial& b, std::span<const bool> odd, Coeff p) {
    PolyBuilder acc(p);
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms()) {
            auto prod = mon_mul(ta.mon, tb.mon, odd);
            if (!prod)
                continue;
            Coeff c = mulm(ta.c, tb.c, p);
            acc.add(std::move(prod->mon), prod->negative ? negm(c, p) : c);
        }
    return acc.build();
}

Polynomial pow(const Polynomial& a, unsigned n, std::span<const bool> odd, Coeff p) {
    Polynomial out = Polynomial::mono(Monomial(odd.size()), 1);
    for (unsigned k = 0; k < n; ++k)
        out = mul(out, a, odd, p);
    return out;
}

int mon_degree(const Monomial& m, std::span<const int> degrees) {
    int d = 0;
    for (std::size_t i = 0; i < m.e.size(); ++i)
        d += int(m.e[i]) * degrees[i];
    return d;
}

bool mon_parity_odd(const Monomial& m, std::span<const bool> odd) {
    unsigned n = 0;
    for (std::size_t i = 0; i < m.e.size(); ++i)
        if (odd[i])
            n += m.e[i];
    return (n % 2) != 0;
}

std::optional<int> poly_degree(const Polynomial& q, std::span<const int> degrees) {
    if (q.is_zero())
        return std::nullopt;
    int d = mon_degree(q.terms().front().mon, degrees);
    for (const Term& t : q.terms())
        if (mon_degree(t.mon, degrees) != d)
            throw CohoError("polynomial is not homogeneous");
    return d;
}

}  // namespace coho
