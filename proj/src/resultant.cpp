#include "gml/polyops.hpp"

#include <algorithm>

namespace gml {

namespace {

Poly constant_one(const Ring& r) { return Poly::constant(r, Rat(1)); }

} // namespace

Poly poly_resultant(const Poly& a, const Poly& b, size_t var) {
    const Ring& ring = a.ring();
    int da = a.degree_in(var), db = b.degree_in(var);
    if (da <= 0 && db <= 0)
        fail("core/degenerate-input",
             "resultant: both inputs constant in " + ring.name(var));
    if (a.is_zero() || b.is_zero()) return Poly(ring);

    Poly A = a, B = b;
    bool negate = false;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if ((da % 2) == 1 && (db % 2) == 1) negate = !negate;
    }
    if (db == 0) {
        // Res(A, c) = c^degA
        Poly r = B.pow(static_cast<unsigned>(da));
        return negate ? -r : r;
    }

    // subresultant PRS (Brown-Traub)
    Poly g = constant_one(ring), h = constant_one(ring);
    while (true) {
        int dA = A.degree_in(var), dB = B.degree_in(var);
        int delta = dA - dB;
        if ((dA % 2) == 1 && (dB % 2) == 1) negate = !negate;
        Poly R = pseudo_rem(A, B, var);
        if (R.is_zero()) return Poly(ring);
        A = B;
        Poly divisor = g * h.pow(static_cast<unsigned>(delta));
        B = *R.divide_exact(divisor);
        g = A.coeffs_in(var).back();
        if (delta > 0) {
            // h = g^delta / h^(delta-1)
            Poly num = g.pow(static_cast<unsigned>(delta));
            Poly den = h.pow(static_cast<unsigned>(delta - 1));
            h = *num.divide_exact(den);
        }
        if (B.degree_in(var) == 0) {
            int e = A.degree_in(var);
            // res = B^e / h^(e-1)
            Poly num = B.pow(static_cast<unsigned>(e));
            Poly den = h.pow(static_cast<unsigned>(std::max(e - 1, 0)));
            Poly res = *num.divide_exact(den);
            return negate ? -res : res;
        }
    }
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> m, const Ring& ring) {
    size_t n = m.size();
    if (n == 0) return constant_one(ring);
    for (auto& row : m)
        if (row.size() != n) fail("core/poly", "determinant of non-square matrix");
    bool negate = false;
    Poly prev = constant_one(ring);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly(ring);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = *num.divide_exact(prev);
            }
            m[i][k] = Poly(ring);
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

Poly sylvester_resultant(const Poly& a, const Poly& b, size_t var) {
    const Ring& ring = a.ring();
    int da = a.degree_in(var), db = b.degree_in(var);
    if (da <= 0 && db <= 0)
        fail("core/degenerate-input",
             "resultant: both inputs constant in " + ring.name(var));
    if (a.is_zero() || b.is_zero()) return Poly(ring);
    if (da < 0 || db < 0) return Poly(ring);
    auto ac = a.coeffs_in(var);
    auto bc = b.coeffs_in(var);
    size_t n = static_cast<size_t>(da + db);
    if (n == 0) return constant_one(ring);
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(ring)));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = ac[static_cast<size_t>(da - j)];
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j)
            m[static_cast<size_t>(db + i)][static_cast<size_t>(i + j)] = bc[static_cast<size_t>(db - j)];
    return bareiss_determinant(std::move(m), ring);
}

SquarefreeDecomposition squarefree_decompose(const Poly& p) {
    if (p.is_zero()) fail("core/poly", "squarefree decomposition of zero");
    SquarefreeDecomposition out;
    Poly u = p.unit_normal();
    out.constant = p.lead_coef() / u.lead_coef();

    // peel off plain variable powers first
    Poly rest = u;
    for (size_t v = 0; v < p.ring().size(); ++v) {
        int e = rest.degree_in(v);
        for (const auto& t : rest.terms()) e = std::min(e, t.exp[v]);
        if (e > 0) {
            Poly xv = Poly::variable(p.ring(), v);
            rest = *rest.divide_exact(xv.pow(static_cast<unsigned>(e)));
            out.parts.push_back({xv, e});
        }
    }
    if (rest.is_constant()) {
        out.constant *= rest.constant_value();
        return out;
    }

    // recurse on the content of the first present variable, then run
    // Yun's algorithm on the primitive part
    size_t var = rest.present_vars().front();
    Poly cont = content_in(rest, var);
    if (!cont.is_constant()) {
        auto sub = squarefree_decompose(cont);
        out.constant *= sub.constant;
        for (auto& part : sub.parts) out.parts.push_back(std::move(part));
    } else {
        out.constant *= cont.constant_value();
    }
    Poly f = *rest.divide_exact(cont);

    Poly fp = f.derivative(var);
    Poly a0 = poly_gcd(f, fp);
    Poly c = *f.divide_exact(a0);
    Poly d = *fp.divide_exact(a0) - c.derivative(var);
    for (int mult = 1; !c.is_constant(); ++mult) {
        Poly part = poly_gcd(c, d);
        if (!part.is_constant()) out.parts.push_back({part.unit_normal(), mult});
        c = *c.divide_exact(part);
        d = *d.divide_exact(part) - c.derivative(var);
    }

    // normalize the recorded constant: product of parts^mult times it
    // must reproduce p exactly; recompute it from the leading data
    Poly prod = Poly::constant(p.ring(), Rat(1));
    for (const auto& part : out.parts)
        prod *= part.part.pow(static_cast<unsigned>(part.multiplicity));
    out.constant = p.lead_coef() / prod.lead_coef();
    return out;
}

} // namespace gml
