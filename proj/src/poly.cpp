#include "gml/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gml {

int expvec_total(const Expvec& e) {
    int t = 0;
    for (int x : e) t += x;
    return t;
}

int mono_cmp(const Expvec& a, const Expvec& b) {
    int ta = expvec_total(a), tb = expvec_total(b);
    if (ta != tb) return ta < tb ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
        return mono_cmp(x.exp, y.exp) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && mono_cmp(out.back().exp, t.exp) == 0)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coef == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

Poly Poly::constant(const Ring& ring, const Rat& c) {
    Poly p(ring);
    if (c != 0) p.terms_.push_back({Expvec(ring.size(), 0), c});
    return p;
}

Poly Poly::variable(const Ring& ring, size_t var) {
    Poly p(ring);
    Expvec e(ring.size(), 0);
    e.at(var) = 1;
    p.terms_.push_back({std::move(e), Rat(1)});
    return p;
}

Poly Poly::variable(const Ring& ring, const std::string& name) {
    return variable(ring, ring.index(name));
}

Poly Poly::from_terms(const Ring& ring, std::vector<Term> terms) {
    Poly p(ring);
    for (auto& t : terms)
        if (t.exp.size() != ring.size())
            fail("core/poly", "term exponent arity mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && expvec_total(terms_[0].exp) == 0);
}

bool Poly::is_one() const {
    return terms_.size() == 1 && expvec_total(terms_[0].exp) == 0 && terms_[0].coef == 1;
}

Rat Poly::constant_value() const {
    if (is_zero()) return Rat(0);
    if (!is_constant()) fail("core/poly", "constant_value on non-constant polynomial");
    return terms_[0].coef;
}

int Poly::total_degree() const {
    if (is_zero()) return -1;
    return expvec_total(terms_[0].exp); // graded order: lead has max degree
}

int Poly::degree_in(size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.exp[var]);
    return is_zero() ? -1 : std::max(d, 0);
}

std::vector<size_t> Poly::present_vars() const {
    std::vector<size_t> out;
    for (size_t v = 0; v < ring_.size(); ++v)
        if (degree_in(v) > 0) out.push_back(v);
    return out;
}

const Term& Poly::lead() const {
    if (is_zero()) fail("core/poly", "lead term of zero polynomial");
    return terms_[0];
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    if (ring_ != o.ring_) {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        fail("core/poly", "ring mismatch in +");
    }
    Poly out(ring_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].exp, o.terms_[j].exp);
        if (c > 0) out.terms_.push_back(terms_[i++]);
        else if (c < 0) out.terms_.push_back(o.terms_[j++]);
        else {
            Rat s = terms_[i].coef + o.terms_[j].coef;
            if (s != 0) out.terms_.push_back({terms_[i].exp, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (ring_ != o.ring_) {
        if (is_zero() || o.is_zero()) return Poly(is_zero() ? ring_ : o.ring_);
        fail("core/poly", "ring mismatch in *");
    }
    struct Cmp {
        bool operator()(const Expvec& a, const Expvec& b) const { return mono_cmp(a, b) > 0; }
    };
    std::map<Expvec, Rat, Cmp> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Expvec e(a.exp);
            for (size_t v = 0; v < e.size(); ++v) e[v] += b.exp[v];
            auto [it, fresh] = acc.emplace(std::move(e), a.coef * b.coef);
            if (!fresh) it->second += a.coef * b.coef;
        }
    }
    Poly out(ring_);
    out.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) out.terms_.push_back({e, c});
    return out;
}

bool Poly::operator==(const Poly& o) const {
    if (ring_ != o.ring_) return is_zero() && o.is_zero();
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coef != o.terms_[i].coef || mono_cmp(terms_[i].exp, o.terms_[i].exp) != 0)
            return false;
    return true;
}

Poly Poly::scaled(const Rat& c) const {
    if (c == 0) return Poly(ring_);
    Poly p(*this);
    for (auto& t : p.terms_) t.coef *= c;
    return p;
}

Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }

Poly Poly::pow(unsigned n) const {
    Poly acc = Poly::constant(ring_, Rat(1));
    Poly base = *this;
    while (n) {
        if (n & 1) acc *= base;
        base = (n >>= 1) ? base * base : base;
    }
    return acc;
}

Poly Poly::derivative(size_t var) const {
    Poly out(ring_);
    for (const auto& t : terms_) {
        if (t.exp[var] == 0) continue;
        Term d{t.exp, t.coef * t.exp[var]};
        d.exp[var] -= 1;
        out.terms_.push_back(std::move(d));
    }
    out.normalize();
    return out;
}

Poly Poly::eval_partial(const std::map<size_t, Rat>& values) const {
    Poly out(ring_);
    std::vector<Term> terms;
    for (const auto& t : terms_) {
        Rat c = t.coef;
        Expvec e = t.exp;
        for (const auto& [v, val] : values) {
            for (int k = 0; k < e[v]; ++k) c *= val;
            e[v] = 0;
        }
        if (c != 0) terms.push_back({std::move(e), std::move(c)});
    }
    return from_terms(ring_, std::move(terms));
}

Rat Poly::eval(const std::vector<Rat>& values) const {
    if (values.size() != ring_.size()) fail("core/poly", "eval arity mismatch");
    Rat acc(0);
    for (const auto& t : terms_) {
        Rat m = t.coef;
        for (size_t v = 0; v < t.exp.size(); ++v)
            for (int k = 0; k < t.exp[v]; ++k) m *= values[v];
        acc += m;
    }
    return acc;
}

Poly Poly::subst(const Ring& target, const std::vector<Poly>& images) const {
    if (images.size() != ring_.size()) fail("core/poly", "subst arity mismatch");
    Poly acc(target);
    for (const auto& t : terms_) {
        Poly m = Poly::constant(target, t.coef);
        for (size_t v = 0; v < t.exp.size(); ++v)
            if (t.exp[v] > 0) m *= images[v].pow(static_cast<unsigned>(t.exp[v]));
        acc += m;
    }
    return acc;
}

Poly Poly::map_ring(const Ring& target, const std::vector<size_t>& var_map) const {
    Poly out(target);
    std::vector<Term> terms;
    for (const auto& t : terms_) {
        Expvec e(target.size(), 0);
        for (size_t v = 0; v < t.exp.size(); ++v) {
            if (t.exp[v] == 0) continue;
            e.at(var_map[v]) += t.exp[v];
        }
        terms.push_back({std::move(e), t.coef});
    }
    return from_terms(target, std::move(terms));
}

std::vector<Poly> Poly::coeffs_in(size_t var) const {
    int d = degree_in(var);
    std::vector<Poly> out(static_cast<size_t>(std::max(d, -1) + 1), Poly(ring_));
    if (d < 0) return out; // zero polynomial: empty coefficient list
    std::vector<std::vector<Term>> buckets(out.size());
    for (const auto& t : terms_) {
        Term s = t;
        int k = s.exp[var];
        s.exp[var] = 0;
        buckets[static_cast<size_t>(k)].push_back(std::move(s));
    }
    for (size_t k = 0; k < out.size(); ++k)
        out[k] = from_terms(ring_, std::move(buckets[k]));
    return out;
}

Poly Poly::assemble_in(size_t var, const std::vector<Poly>& coeffs, const Ring& ring) {
    std::vector<Term> terms;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& t : coeffs[k].terms()) {
            Term s = t;
            s.exp[var] += static_cast<int>(k);
            terms.push_back(std::move(s));
        }
    }
    return from_terms(ring, std::move(terms));
}

Rat Poly::rational_content() const {
    if (is_zero()) fail("core/poly", "content of zero polynomial");
    Int num_gcd(0), den_lcm(1);
    for (const auto& t : terms_) {
        num_gcd = int_gcd(num_gcd, t.coef.get_num());
        den_lcm = int_lcm(den_lcm, t.coef.get_den());
    }
    return make_rat(num_gcd, den_lcm);
}

Poly Poly::primitive_scaled() const {
    if (is_zero()) return *this;
    Rat c = rational_content();
    return scaled(Rat(1) / c);
}

Poly Poly::unit_normal() const {
    if (is_zero()) return *this;
    Poly p = primitive_scaled();
    if (p.lead_coef() < 0) p = -p;
    return p;
}

std::optional<Poly> Poly::divide_exact(const Poly& o) const {
    if (o.is_zero()) fail("core/zero-denominator", "division by zero polynomial");
    if (is_zero()) return Poly(ring_);
    if (o.is_constant()) return scaled(Rat(1) / o.constant_value());
    Poly rem = *this;
    Poly quot(ring_);
    const Term& dl = o.lead();
    while (!rem.is_zero()) {
        const Term& rl = rem.lead();
        Expvec q(rl.exp);
        bool ok = true;
        for (size_t v = 0; v < q.size(); ++v) {
            q[v] -= dl.exp[v];
            if (q[v] < 0) { ok = false; break; }
        }
        if (!ok) return std::nullopt; // stuck: not exactly divisible
        Poly qt = from_terms(ring_, {{std::move(q), rl.coef / dl.coef}});
        quot += qt;
        rem -= qt * o;
    }
    return quot;
}

int Poly::compare(const Poly& a, const Poly& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = mono_cmp(a.terms_[i].exp, b.terms_[i].exp);
        if (c != 0) return c;
        if (a.terms_[i].coef != b.terms_[i].coef)
            return a.terms_[i].coef < b.terms_[i].coef ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size())
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coef;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool has_vars = expvec_total(t.exp) > 0;
        bool coef_shown = !(c == 1 && has_vars);
        if (coef_shown) out << c.get_str();
        bool lead_done = coef_shown;
        for (size_t v = 0; v < t.exp.size(); ++v) {
            if (t.exp[v] == 0) continue;
            if (lead_done) out << "*";
            out << ring_.name(v);
            if (t.exp[v] > 1) out << "^" << t.exp[v];
            lead_done = true;
        }
    }
    return out.str();
}

} // namespace gml
