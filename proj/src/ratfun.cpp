#include "gml/ratfun.hpp"

namespace gml {

void RatFun::assign(Poly num, Poly den) {
    if (den.is_zero()) fail("core/zero-denominator", "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly(num.ring());
        den_ = Poly::constant(num.ring(), Rat(1));
        return;
    }
    if (!den.is_constant() && !num.is_constant()) {
        Poly g = poly_gcd(num, den);
        if (!g.is_constant()) {
            num = *num.divide_exact(g);
            den = *den.divide_exact(g);
        }
    }
    // both sides integer with coprime contents, den lead positive
    Rat cn = num.rational_content();
    Rat cd = den.rational_content();
    Rat ratio = cn / cd; // positive
    num_ = num.scaled(ratio.get_num() / cn);
    den_ = den.scaled(ratio.get_den() / cd);
    if (den_.lead_coef() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Poly g = poly_gcd(den_, o.den_);
    Poly db = *den_.divide_exact(g);
    Poly dd = *o.den_.divide_exact(g);
    return RatFun(num_ * dd + o.num_ * db, den_ * dd);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    if (is_zero() || o.is_zero()) return RatFun(ring());
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    Poly n = *num_.divide_exact(g1) * *o.num_.divide_exact(g2);
    Poly d = *den_.divide_exact(g2) * *o.den_.divide_exact(g1);
    return RatFun(std::move(n), std::move(d));
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) fail("core/zero-denominator", "division by zero rational function");
    return *this * RatFun(o.den_, o.num_);
}

RatFun RatFun::derivative(size_t var) const {
    if (is_zero()) return *this;
    Poly dn = num_.derivative(var);
    Poly dd = den_.derivative(var);
    if (dd.is_zero()) return RatFun(std::move(dn), den_);
    return RatFun(dn * den_ - num_ * dd, den_ * den_);
}

Rat RatFun::eval(const std::vector<Rat>& values) const {
    Rat d = den_.eval(values);
    if (d == 0) fail("core/zero-denominator", "evaluation hits a pole");
    return num_.eval(values) / d;
}

RatFun RatFun::subst(const Ring& target, const std::vector<Poly>& images) const {
    return RatFun(num_.subst(target, images), den_.subst(target, images));
}

std::string RatFun::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

int RatFun::compare(const RatFun& a, const RatFun& b) {
    int c = Poly::compare(a.den_, b.den_);
    if (c != 0) return c;
    return Poly::compare(a.num_, b.num_);
}

RatFun operator*(const Rat& c, const RatFun& f) { return f.scaled(c); }

} // namespace gml
