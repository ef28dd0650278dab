#pragma once

#include "gml/poly.hpp"
#include "gml/polyops.hpp"

namespace gml {

// Normalized quotient of polynomials: gcd(num, den) = 1, both sides
// have integer coefficients with coprime contents, den has positive
// leading coefficient, zero is 0/1.
class RatFun {
public:
    RatFun() = default;
    explicit RatFun(const Ring& ring)
        : num_(Poly(ring)), den_(Poly::constant(ring, Rat(1))) {}
    RatFun(Poly num, Poly den) { assign(std::move(num), std::move(den)); }

    static RatFun from_poly(Poly p) {
        Ring r = p.ring();
        return RatFun(std::move(p), Poly::constant(r, Rat(1)));
    }
    static RatFun constant(const Ring& ring, const Rat& c) {
        return from_poly(Poly::constant(ring, c));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Ring& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // valid when is_polynomial()
    Poly as_poly() const { return num_.scaled(Rat(1) / den_.constant_value()); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun scaled(const Rat& c) const { return RatFun(num_.scaled(c), den_); }
    RatFun derivative(size_t var) const;
    Rat eval(const std::vector<Rat>& values) const;
    // substitute polynomials for every variable
    RatFun subst(const Ring& target, const std::vector<Poly>& images) const;

    std::string to_string() const;

    static int compare(const RatFun& a, const RatFun& b);

private:
    void assign(Poly num, Poly den);

    Poly num_, den_;
};

RatFun operator*(const Rat& c, const RatFun& f);

// spec-level entry point: canonical representative of num/den
inline RatFun ratfun_normalize(Poly num, Poly den) {
    return RatFun(std::move(num), std::move(den));
}

} // namespace gml
