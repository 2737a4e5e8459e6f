#pragma once

#include <string>

#include "coho/algebra.hpp"

namespace coho {

enum class OpKind { Beta, P1 };
const char* op_name(OpKind op);

/* Extend a generator table to polynomials as a derivation. With koszul_signs
 * the rule is d(ab) = d(a)b + (-1)^{|a|} a d(b) (degree-one operators);
 * without it the plain Cartan rule d(ab) = d(a)b + a d(b). The result is in
 * normal form. Throws UndefinedAction for a needed missing entry. */
Polynomial eval_derivation(const Algebra& alg,
                           std::span<const std::optional<Polynomial>> table,
                           const Polynomial& q, bool koszul_signs, const char* opname);

/* Primary Bockstein from the presentation's beta table. */
Polynomial eval_beta(const Algebra& alg, const Polynomial& q);

/* First Steenrod power: table entries plus instability-forced values
 * (degree 1 -> 0, degree 2 -> p-th power), Cartan rule on products. */
Polynomial eval_p1(const Algebra& alg, const Polynomial& q);

struct ClosureEntry {
    std::size_t relation = 0; /* index into pres().relations */
    OpKind op = OpKind::Beta;
    enum Status { Pass, Fail, SkippedUndefined, SkippedCap } status = Pass;
    std::string detail;
};

struct ClosureReport {
    std::vector<ClosureEntry> entries;
    int failures = 0;
    bool passed() const { return failures == 0; }
};

/* Applies beta and P1 to every relation and checks the image dies in the
 * quotient; undefined actions and over-cap images are reported, not failed. */
ClosureReport check_closure(const Algebra& alg, int cap);

struct BetaSquaredReport {
    int checked = 0;
    int skipped = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/* beta(beta(m)) = 0 for every quotient basis monomial with room below cap. */
BetaSquaredReport check_beta_squared(const Algebra& alg, int cap);

}  // namespace coho
