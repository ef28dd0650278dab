#include "gml/polyops.hpp"

#include <algorithm>

namespace gml {

Int integer_content(const Poly& p) {
    Int g(0);
    for (const auto& t : p.terms()) {
        if (!is_integer(t.coef)) fail("core/poly", "integer_content on non-integer polynomial");
        g = int_gcd(g, t.coef.get_num());
    }
    return g;
}

namespace {

Int height(const Poly& p) {
    Int h(0);
    for (const auto& t : p.terms()) {
        Int a = abs(t.coef.get_num());
        if (a > h) h = a;
    }
    return h;
}

// balanced remainder in [-m/2, m/2)
Int smod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r >= m) r -= m;
    return r;
}

Poly eval_var(const Poly& p, size_t var, const Int& xi) {
    std::map<size_t, Rat> vals;
    vals[var] = Rat(xi);
    return p.eval_partial(vals);
}

Poly poly_smod(const Poly& p, const Int& m) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Int c = smod(t.coef.get_num(), m);
        if (c != 0) terms.push_back({t.exp, Rat(c)});
    }
    return Poly::from_terms(p.ring(), std::move(terms));
}

// GCDHEU (Char/Geddes/Gonnet): evaluate one variable at a large
// integer, take the gcd of the images recursively, and read the gcd
// back off the xi-adic digits. The recursion keeps integer contents:
// they carry digits of the reconstruction. Candidates are verified by
// trial division, so failures only cost time.
bool gcd_heuristic(const Poly& a, const Poly& b, Poly& out, int depth) {
    if (depth > 16) return false;
    if (a.is_constant() && b.is_constant()) {
        out = Poly::constant(a.ring(), Rat(int_gcd(a.constant_value().get_num(),
                                                   b.constant_value().get_num())));
        return !out.is_zero();
    }
    size_t var = a.ring().size();
    for (size_t v = 0; v < a.ring().size(); ++v)
        if (a.depends_on(v) || b.depends_on(v)) { var = v; break; }

    int deg_cap = std::max(a.degree_in(var), 0) + std::max(b.degree_in(var), 0) + 1;
    Int xi = 2 * std::min(height(a), height(b)) + 29;

    for (int attempt = 0; attempt < 6; ++attempt, xi = xi * 73794 / 27011 + 1) {
        Poly ea = eval_var(a, var, xi);
        Poly eb = eval_var(b, var, xi);
        if (ea.is_zero() || eb.is_zero()) continue;
        Poly gamma;
        if (!gcd_heuristic(ea, eb, gamma, depth + 1)) continue;

        Poly g(a.ring());
        Poly cur = gamma;
        int power = 0;
        bool bad = false;
        while (!cur.is_zero()) {
            if (power > deg_cap) { bad = true; break; }
            Poly digit = poly_smod(cur, xi);
            if (!digit.is_zero())
                g += digit * Poly::variable(a.ring(), var).pow(static_cast<unsigned>(power));
            Poly rem = cur - digit;
            std::vector<Term> scaled;
            for (const auto& t : rem.terms())
                scaled.push_back({t.exp, Rat(t.coef.get_num() / xi)});
            cur = Poly::from_terms(a.ring(), std::move(scaled));
            ++power;
        }
        if (bad || g.is_zero()) continue;
        if (a.divide_exact(g).has_value() && b.divide_exact(g).has_value()) {
            out = g;
            return true;
        }
    }
    return false;
}

Poly gcd_dispatch(const Poly& a, const Poly& b);

// primitive PRS, the guaranteed fallback
Poly gcd_prs(const Poly& a, const Poly& b) {
    size_t var = a.ring().size();
    for (size_t v = 0; v < a.ring().size(); ++v)
        if (a.depends_on(v) && b.depends_on(v)) { var = v; break; }
    if (var == a.ring().size())
        return Poly::constant(a.ring(), Rat(1)); // disjoint variables

    Poly ca = content_in(a, var), cb = content_in(b, var);
    Poly c = gcd_dispatch(ca, cb);
    Poly A = *a.divide_exact(ca);
    Poly B = *b.divide_exact(cb);
    if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
    while (true) {
        Poly r = pseudo_rem(A, B, var);
        if (r.is_zero()) return c * primitive_part_in(B, var).unit_normal();
        if (r.degree_in(var) == 0) return c;
        A = B;
        B = primitive_part_in(r, var);
    }
}

// one gcd of unit-normal inputs; result divides both but heuristic
// results may not be maximal, the caller certifies
Poly gcd_dispatch(const Poly& a, const Poly& b) {
    if (a.is_constant() || b.is_constant())
        return Poly::constant(a.ring(), Rat(1));
    if (a == b) return a;
    Poly g;
    if (gcd_heuristic(a, b, g, 0)) return g.unit_normal();
    return gcd_prs(a, b).unit_normal();
}

} // namespace

Poly content_in(const Poly& p, size_t var) {
    auto coeffs = p.coeffs_in(var);
    Poly g(p.ring());
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.unit_normal() : poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Poly primitive_part_in(const Poly& p, size_t var) {
    if (p.is_zero()) return p;
    Poly c = content_in(p, var);
    return *p.divide_exact(c);
}

Poly pseudo_rem(const Poly& a, const Poly& b, size_t var) {
    int da = a.degree_in(var), db = b.degree_in(var);
    if (db < 0) fail("core/poly", "pseudo_rem by zero");
    if (da < db) return a;
    auto bc = b.coeffs_in(var);
    Poly lb = bc.back();
    Poly r = a;
    int e = da - db + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        auto rc = r.coeffs_in(var);
        int dr = static_cast<int>(rc.size()) - 1;
        Poly lead = rc.back();
        Poly xshift = Poly::variable(a.ring(), var).pow(static_cast<unsigned>(dr - db));
        r = lb * r - lead * xshift * b;
        --e;
    }
    for (; e > 0; --e) r = lb * r;
    return r;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) fail("core/poly", "gcd(0,0)");
    if (a.is_zero()) return b.unit_normal();
    if (b.is_zero()) return a.unit_normal();
    Poly x = a.unit_normal();
    Poly y = b.unit_normal();
    // certify maximality: grow g until the cofactors are coprime;
    // valuation-wise gcd(a,b) = g * gcd(a/g, b/g)
    Poly g = Poly::constant(a.ring(), Rat(1));
    while (true) {
        Poly h = gcd_dispatch(x, y);
        g = (g * h).unit_normal();
        if (h.is_constant()) return g;
        x = x.divide_exact(h)->unit_normal();
        y = y.divide_exact(h)->unit_normal();
        if (x.is_constant() || y.is_constant()) return g;
    }
}

} // namespace gml
