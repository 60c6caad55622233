#pragma once

#include <string>

#include <gmpxx.h>

#include "pmat/error.hpp"
#include "pmat/numtheory.hpp"

namespace pmat {

// Coefficient domains. Matrix<D> and Poly<D> are parameterized over these
// descriptors; an instance travels with every matrix/polynomial so that
// prime-field moduli and empty objects are always well defined.

struct ZDomain {
    using Element = mpz_class;
    static constexpr bool is_field = false;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long long v) const { return Element(static_cast<long>(v)); }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    // Quotient a/b for exactly divisible pairs only.
    Element divexact(const Element& a, const Element& b) const {
        Element q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    bool divides(const Element& b, const Element& a) const {
        return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
    }
    bool same(const ZDomain&) const { return true; }
    std::string tag() const { return "Z"; }
    std::string str(const Element& a) const { return a.get_str(); }
};

struct QDomain {
    using Element = mpq_class;
    static constexpr bool is_field = true;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long long v) const { return Element(static_cast<long>(v)); }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const {
        if (is_zero(a)) throw division_error("QDomain: inverse of zero");
        return 1 / a;
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    bool same(const QDomain&) const { return true; }
    std::string tag() const { return "Q"; }
    std::string str(const Element& a) const { return a.get_str(); }
};

struct FpDomain {
    using Element = long long;
    static constexpr bool is_field = true;

    long long p = 2;

    FpDomain() = default;
    explicit FpDomain(long long prime) : p(prime) {
        if (!is_prime(p)) throw invalid_modulus_error("FpDomain: " + std::to_string(prime) + " is not prime");
    }

    Element zero() const { return 0; }
    Element one() const { return 1 % p; }
    Element from_int(long long v) const {
        long long r = v % p;
        return r < 0 ? r + p : r;
    }
    bool is_zero(Element a) const { return a == 0; }
    bool equal(Element a, Element b) const { return a == b; }
    Element add(Element a, Element b) const {
        long long r = a + b;
        return r >= p ? r - p : r;
    }
    Element sub(Element a, Element b) const {
        long long r = a - b;
        return r < 0 ? r + p : r;
    }
    Element mul(Element a, Element b) const { return (a * b) % p; }
    Element neg(Element a) const { return a == 0 ? 0 : p - a; }
    Element pow(Element a, long long e) const {
        Element r = one(), base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Element inv(Element a) const {
        if (a == 0) throw division_error("FpDomain: inverse of zero mod " + std::to_string(p));
        return pow(a, p - 2);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    bool same(const FpDomain& other) const { return p == other.p; }
    std::string tag() const { return "Fp:" + std::to_string(p); }
    std::string str(Element a) const { return std::to_string(a); }
};

} // namespace pmat
