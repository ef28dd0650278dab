#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gml/rational.hpp"
#include "gml/ring.hpp"

namespace gml {

using Expvec = std::vector<int>;

int expvec_total(const Expvec& e);

// graded lexicographic, variable 0 strongest; returns <0, 0, >0
int mono_cmp(const Expvec& a, const Expvec& b);

struct Term {
    Expvec exp;
    Rat coef;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept sorted in descending graded-lex order with no zero
// coefficients, so equal polynomials have identical term vectors.
class Poly {
public:
    Poly() = default;
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}

    static Poly constant(const Ring& ring, const Rat& c);
    static Poly variable(const Ring& ring, size_t var);
    static Poly variable(const Ring& ring, const std::string& name);
    // terms need not be sorted or nonzero; they get normalized
    static Poly from_terms(const Ring& ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // zero polynomial reports 0
    Rat constant_value() const;

    int total_degree() const; // -1 for zero
    int degree_in(size_t var) const;
    bool depends_on(size_t var) const { return degree_in(var) > 0; }
    std::vector<size_t> present_vars() const;

    const Term& lead() const; // highest term; error on zero
    Rat lead_coef() const { return is_zero() ? Rat(0) : lead().coef; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const Rat& c) const;
    Poly pow(unsigned n) const;
    Poly derivative(size_t var) const;

    // substitute values for a subset of variables (others stay symbolic)
    Poly eval_partial(const std::map<size_t, Rat>& values) const;
    // full evaluation; requires a value for every present variable
    Rat eval(const std::vector<Rat>& values) const;
    // substitute a polynomial (over the target ring) for each variable
    Poly subst(const Ring& target, const std::vector<Poly>& images) const;
    // rename variables into another ring by position map
    Poly map_ring(const Ring& target, const std::vector<size_t>& var_map) const;

    // coefficients with respect to one variable: result[k] has var's
    // exponent stripped and does not depend on var
    std::vector<Poly> coeffs_in(size_t var) const;
    static Poly assemble_in(size_t var, const std::vector<Poly>& coeffs, const Ring& ring);

    // positive rational c with p/c integer-coefficient and content 1;
    // error on zero
    Rat rational_content() const;
    // p / rational_content(), sign kept
    Poly primitive_scaled() const;
    // integer-primitive with positive leading coefficient
    Poly unit_normal() const;

    // exact multivariate division; nullopt if not divisible
    std::optional<Poly> divide_exact(const Poly& o) const;

    std::string to_string() const;

    // total order for canonical sorting of polynomial sets
    static int compare(const Poly& a, const Poly& b);

private:
    void normalize();

    Ring ring_;
    std::vector<Term> terms_;
};

Poly operator*(const Rat& c, const Poly& p);

// generic evaluation over any field element type F supporting
// f + f, f * f, F::from(Rat)-style construction via the supplied maker
template <typename F, typename Maker>
F eval_poly(const Poly& p, const std::vector<F>& values, Maker from_rat) {
    F acc = from_rat(Rat(0));
    for (const auto& t : p.terms()) {
        F m = from_rat(t.coef);
        for (size_t v = 0; v < t.exp.size(); ++v)
            for (int k = 0; k < t.exp[v]; ++k) m = m * values[v];
        acc = acc + m;
    }
    return acc;
}

} // namespace gml
