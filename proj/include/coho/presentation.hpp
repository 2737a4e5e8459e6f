#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coho/poly.hpp"

namespace coho {

struct GeneratorInfo {
    std::string name;
    int degree = 1;
    bool odd() const { return degree % 2 != 0; }
};

struct HigherBockstein {
    int page = 2;   /* i >= 2; beta_i acts on page i */
    int gen = 0;
    Polynomial value;
};

/* A finitely presented graded-commutative F_p-algebra together with its
 * primary Bockstein, first Steenrod power and higher Bockstein tables.
 * This mirrors the on-disk file; evaluation defaults live in Algebra. */
struct Presentation {
    Coeff p = 3;
    std::vector<GeneratorInfo> gens;
    std::vector<Polynomial> relations;
    std::vector<std::optional<Polynomial>> beta; /* indexed by generator */
    std::vector<std::optional<Polynomial>> p1;
    std::vector<HigherBockstein> higher;
    std::vector<std::string> header; /* leading comment lines, kept verbatim */

    /* caches derived from gens */
    std::vector<int> degrees;
    std::vector<bool> parity_odd;

    void refresh_derived();
    int gen_index(std::string_view name) const; /* -1 when absent */
    std::size_t ngens() const { return gens.size(); }
};

/* Line-oriented text format:
 *   # header comment
 *   prime 3
 *   generator y 1
 *   relation y*y'
 *   beta y = x
 *   p1 X = x^2*X + z*y
 *   bockstein 2 u = y*y'
 * Term factors may appear in any order; they are collected into declared
 * order with Koszul signs. Rejects non-homogeneous relations, odd squares,
 * coefficients outside [1, p) and table values of the wrong degree. */
Presentation parse_presentation(std::string_view text);
std::string serialize(const Presentation& pres);

std::string poly_to_string(const Presentation& pres, const Polynomial& q);
std::string mon_to_string(const Presentation& pres, const Monomial& m);
Polynomial poly_from_string(const Presentation& pres, std::string_view text);

}  // namespace coho
