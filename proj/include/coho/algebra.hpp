#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "coho/presentation.hpp"

namespace coho {

/* Degree-d slice of the ring: free monomials, the rref'd degree-d component
 * of the relation ideal, and a monomial basis of the quotient. */
struct DegreeBasis {
    int degree = 0;
    std::vector<Monomial> free_monomials; /* ascending exponent-lex order */
    FpMatrix ideal_rref;                  /* rows span the ideal slice */
    std::vector<std::size_t> pivot_cols;
    std::vector<Monomial> quotient_basis; /* non-pivot free monomials */
    std::vector<std::size_t> quotient_cols;

    std::size_t dim() const { return quotient_basis.size(); }
};

/* Evaluation engine around an immutable presentation. Degree bases are
 * computed once per degree and shared; all queries are degree-bounded
 * by the cap fixed at construction. */
class Algebra {
public:
    Algebra(Presentation pres, int cap);

    const Presentation& pres() const { return pres_; }
    Coeff p() const { return pres_.p; }
    int cap() const { return cap_; }
    std::size_t ngens() const { return pres_.ngens(); }

    /* free graded-commutative arithmetic */
    Polynomial add(const Polynomial& a, const Polynomial& b) const { return poly_add(a, b, p()); }
    Polynomial sub(const Polynomial& a, const Polynomial& b) const { return poly_sub(a, b, p()); }
    Polynomial scale(const Polynomial& a, Coeff c) const { return poly_scale(a, c, p()); }
    Polynomial mul(const Polynomial& a, const Polynomial& b) const {
        return coho::mul(a, b, pres_.parity_odd, p());
    }
    Polynomial pow(const Polynomial& a, unsigned n) const {
        return coho::pow(a, n, pres_.parity_odd, p());
    }
    Polynomial unit() const { return Polynomial::mono(Monomial(ngens()), 1); }
    Polynomial gen_poly(std::size_t i) const {
        return Polynomial::mono(Monomial::generator(ngens(), i), 1);
    }

    int degree(const Monomial& m) const { return mon_degree(m, pres_.degrees); }
    std::optional<int> degree(const Polynomial& q) const { return poly_degree(q, pres_.degrees); }

    const DegreeBasis& degree_basis(int d) const; /* throws CapExceeded */
    std::vector<Monomial> free_monomials(int d) const;

    /* unique representative supported on the quotient basis of its degree */
    Polynomial normal_form(const Polynomial& q) const;
    bool is_zero_mod_ideal(const Polynomial& q) const { return normal_form(q).is_zero(); }

    int dim(int d) const { return int(degree_basis(d).dim()); }
    std::vector<int> hilbert(int cap) const;

    /* coordinates over the quotient basis of degree d */
    CoeffVec coords(const Polynomial& q, int d) const;
    Polynomial from_coords(std::span<const Coeff> v, int d) const;

    /* P1 table with instability defaults materialized:
     * degree 1 -> 0, degree 2 -> g^p; higher degrees only if listed. */
    const std::optional<Polynomial>& effective_p1(std::size_t gen) const {
        return effective_p1_[gen];
    }

private:
    Presentation pres_;
    int cap_;
    std::vector<std::optional<Polynomial>> effective_p1_;
    mutable std::mutex mu_;
    mutable std::map<int, std::unique_ptr<DegreeBasis>> cache_;

    DegreeBasis compute_degree_basis(int d) const;
};

}  // namespace coho
