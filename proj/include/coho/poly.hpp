#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coho/fp.hpp"

namespace coho {

using Expo = std::uint16_t;

/* Exponent-vector monomial; index i refers to the i-th declared generator.
 * Invariant (enforced by the arithmetic below): odd generators have exponent 0 or 1. */
struct Monomial {
    std::vector<Expo> e;

    explicit Monomial(std::size_t ngens = 0) : e(ngens, 0) {}

    static Monomial generator(std::size_t ngens, std::size_t i, Expo exp = 1) {
        Monomial m(ngens);
        m.e[i] = exp;
        return m;
    }

    bool is_unit() const {
        for (Expo x : e)
            if (x)
                return false;
        return true;
    }

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial& o) const {
        return std::lexicographical_compare_three_way(e.begin(), e.end(), o.e.begin(), o.e.end());
    }
};

struct Term {
    Monomial mon;
    Coeff c = 0;
    bool operator==(const Term&) const = default;
};

/* Homogeneous F_p-linear combination of monomials.
 * Canonical: terms sorted ascending by exponent vector, no zero coefficients. */
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial mono(Monomial m, Coeff c = 1) {
        Polynomial q;
        if (c != 0)
            q.terms_.push_back({std::move(m), c});
        return q;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    bool operator==(const Polynomial&) const = default;

    /* Coefficient of a monomial (0 when absent). */
    Coeff coeff(const Monomial& m) const;

    friend Polynomial poly_add(const Polynomial& a, const Polynomial& b, Coeff p);
    friend Polynomial poly_scale(const Polynomial& a, Coeff c, Coeff p);
    friend class PolyBuilder;

private:
    std::vector<Term> terms_;
};

/* Accumulates terms in any order, then emits a canonical polynomial. */
class PolyBuilder {
public:
    explicit PolyBuilder(Coeff p) : p_(p) {}
    void add(Monomial m, Coeff c);
    void add(const Polynomial& q, Coeff scale = 1);
    Polynomial build();

private:
    Coeff p_;
    std::vector<Term> acc_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b, Coeff p);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b, Coeff p);
Polynomial poly_scale(const Polynomial& a, Coeff c, Coeff p);

/* Graded-commutative monomial product: collects a*b into declared order,
 * counting one transposition per pair of odd factors that cross. Returns
 * nullopt when an odd generator would square. */
struct MonProd {
    Monomial mon;
    bool negative; /* Koszul sign */
};
std::optional<MonProd> mon_mul(const Monomial& a, const Monomial& b, std::span<const bool> odd);

Polynomial mul(const Polynomial& a, const Polynomial& b, std::span<const bool> odd, Coeff p);
Polynomial pow(const Polynomial& a, unsigned n, std::span<const bool> odd, Coeff p);

int mon_degree(const Monomial& m, std::span<const int> degrees);
bool mon_parity_odd(const Monomial& m, std::span<const bool> odd);

/* Degree common to all terms; nullopt for 0, throws CohoError if mixed. */
std::optional<int> poly_degree(const Polynomial& q, std::span<const int> degrees);

}  // namespace coho
