#pragma once

#include <utility>
#include <vector>

#include "pmat/domain.hpp"
#include "pmat/error.hpp"

namespace pmat {

// Dense univariate polynomial, coeffs[i] = coefficient of t^i, canonical
// (no trailing zeros). The zero polynomial has an empty coefficient vector
// and degree() == -1.
template <class D>
class Poly {
public:
    using Element = typename D::Element;

    explicit Poly(D dom = D{}) : dom_(std::move(dom)) {}
    Poly(D dom, std::vector<Element> coeffs) : dom_(std::move(dom)), c_(std::move(coeffs)) { trim(); }

    static Poly zero(D dom) { return Poly(std::move(dom)); }
    static Poly one(D dom) {
        Poly f(dom);
        f.c_.push_back(dom.one());
        return f;
    }
    static Poly constant(D dom, Element v) {
        Poly f(std::move(dom));
        if (!f.dom_.is_zero(v)) f.c_.push_back(std::move(v));
        return f;
    }
    // c0 + c1 t + ... from integer literals.
    static Poly from_ints(D dom, std::vector<long long> cs) {
        Poly f(std::move(dom));
        f.c_.reserve(cs.size());
        for (long long v : cs) f.c_.push_back(f.dom_.from_int(v));
        f.trim();
        return f;
    }
    // Monomial t^e.
    static Poly t_power(D dom, long long e) {
        Poly f(dom);
        f.c_.assign(static_cast<size_t>(e) + 1, dom.zero());
        f.c_.back() = dom.one();
        return f;
    }

    const D& domain() const { return dom_; }
    const std::vector<Element>& coeffs() const { return c_; }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && dom_.equal(c_[0], dom_.one()); }
    bool is_monic() const { return !c_.empty() && dom_.equal(c_.back(), dom_.one()); }

    Element coeff(long long i) const {
        if (i < 0 || i >= static_cast<long long>(c_.size())) return dom_.zero();
        return c_[static_cast<size_t>(i)];
    }
    Element lc() const {
        if (c_.empty()) return dom_.zero();
        return c_.back();
    }

    bool operator==(const Poly& o) const {
        if (!dom_.same(o.dom_) || c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!dom_.equal(c_[i], o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        check_domain(o);
        Poly r(dom_);
        r.c_.resize(std::max(c_.size(), o.c_.size()), dom_.zero());
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = dom_.add(coeff_at(i), o.coeff_at(i));
        r.trim();
        return r;
    }
    Poly operator-(const Poly& o) const {
        check_domain(o);
        Poly r(dom_);
        r.c_.resize(std::max(c_.size(), o.c_.size()), dom_.zero());
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = dom_.sub(coeff_at(i), o.coeff_at(i));
        r.trim();
        return r;
    }
    Poly operator-() const {
        Poly r(dom_);
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(dom_.neg(a));
        return r;
    }
    Poly operator*(const Poly& o) const {
        check_domain(o);
        if (c_.empty() || o.c_.empty()) return Poly(dom_);
        Poly r(dom_);
        r.c_.assign(c_.size() + o.c_.size() - 1, dom_.zero());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (dom_.is_zero(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] = dom_.add(r.c_[i + j], dom_.mul(c_[i], o.c_[j]));
        }
        r.trim();
        return r;
    }

    // Over a field g may be any nonzero polynomial; over Z g must be monic.
    std::pair<Poly, Poly> divrem(const Poly& g) const {
        check_domain(g);
        if (g.is_zero()) throw division_error("divrem: division by zero polynomial");
        if constexpr (!D::is_field) {
            if (!g.is_monic()) throw nonmonic_divisor_error("divrem: divisor must be monic over Z");
        }
        if (degree() < g.degree()) return {Poly(dom_), *this};
        std::vector<Element> rem = c_;
        size_t qlen = c_.size() - g.c_.size() + 1;
        std::vector<Element> quo(qlen, dom_.zero());
        Element lg = g.c_.back();
        for (size_t i = qlen; i-- > 0;) {
            Element top = rem[i + g.c_.size() - 1];
            if (dom_.is_zero(top)) continue;
            Element q;
            if constexpr (D::is_field)
                q = dom_.div(top, lg);
            else
                q = top; // monic divisor
            quo[i] = q;
            for (size_t j = 0; j < g.c_.size(); ++j)
                rem[i + j] = dom_.sub(rem[i + j], dom_.mul(q, g.c_[j]));
        }
        Poly qq(dom_, std::move(quo));
        Poly rr(dom_, std::move(rem));
        return {std::move(qq), std::move(rr)};
    }

    // Exact quotient; throws if the division leaves a remainder.
    Poly divexact(const Poly& g) const {
        auto [q, r] = divrem(g);
        if (!r.is_zero()) throw division_error("divexact: division is not exact");
        return q;
    }

    Poly pow(long long e) const {
        if (e < 0) throw parameter_error("Poly::pow: negative exponent");
        Poly r = one(dom_);
        Poly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // this^e mod g, field domains.
    Poly powmod(long long e, const Poly& g) const {
        static_assert(D::is_field, "powmod requires a field domain");
        Poly r = one(dom_).divrem(g).second;
        Poly base = divrem(g).second;
        while (e > 0) {
            if (e & 1) r = (r * base).divrem(g).second;
            base = (base * base).divrem(g).second;
            e >>= 1;
        }
        return r;
    }

    Poly derivative() const {
        Poly r(dom_);
        if (c_.size() <= 1) return r;
        r.c_.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) {
            Element k = dom_.from_int(static_cast<long long>(i));
            r.c_.push_back(dom_.mul(k, c_[i]));
        }
        r.trim();
        return r;
    }

    Element eval(const Element& x) const {
        Element r = dom_.zero();
        for (size_t i = c_.size(); i-- > 0;) r = dom_.add(dom_.mul(r, x), c_[i]);
        return r;
    }

    Poly monic() const {
        static_assert(D::is_field, "monic() requires a field domain");
        if (is_zero()) throw division_error("monic: zero polynomial");
        Element s = dom_.inv(c_.back());
        Poly r(dom_);
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(dom_.mul(s, a));
        return r;
    }

    // f(-t)
    Poly compose_neg_t() const {
        Poly r = *this;
        for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = dom_.neg(r.c_[i]);
        r.trim();
        return r;
    }

    // f(t^m)
    Poly compose_t_power(long long m) const {
        if (m < 1) throw parameter_error("compose_t_power: m must be >= 1");
        if (is_zero()) return *this;
        Poly r(dom_);
        r.c_.assign((c_.size() - 1) * static_cast<size_t>(m) + 1, dom_.zero());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<size_t>(m)] = c_[i];
        r.trim();
        return r;
    }

    // Largest m with g^m | f, together with f / g^m.
    std::pair<long long, Poly> extract_multiplicity(const Poly& g) const {
        check_domain(g);
        if (is_zero()) throw undefined_multiplicity_error("extract_multiplicity: f = 0");
        if (g.degree() < 1) throw parameter_error("extract_multiplicity: divisor must be nonconstant");
        if (!g.is_monic()) throw parameter_error("extract_multiplicity: divisor must be monic");
        long long m = 0;
        Poly f = *this;
        while (true) {
            auto [q, r] = f.divrem(g);
            if (!r.is_zero()) break;
            f = std::move(q);
            ++m;
        }
        return {m, f};
    }

    bool is_palindromic(int sign) const {
        if (sign != 1 && sign != -1) throw parameter_error("is_palindromic: sign must be +1 or -1");
        if (is_zero()) throw parameter_error("is_palindromic: zero polynomial");
        size_t n = c_.size();
        for (size_t i = 0; i < n; ++i) {
            Element mirror = c_[n - 1 - i];
            if (sign == -1) mirror = dom_.neg(mirror);
            if (!dom_.equal(c_[i], mirror)) return false;
        }
        return true;
    }

private:
    D dom_;
    std::vector<Element> c_;

    Element coeff_at(size_t i) const { return i < c_.size() ? c_[i] : dom_.zero(); }
    void trim() {
        while (!c_.empty() && dom_.is_zero(c_.back())) c_.pop_back();
    }
    void check_domain(const Poly& o) const {
        if (!dom_.same(o.dom_)) throw domain_mismatch_error("Poly: domain mismatch");
    }
};

using PolyZ = Poly<ZDomain>;
using PolyQ = Poly<QDomain>;
using PolyFp = Poly<FpDomain>;

// Monic gcd over a field; gcd(0, 0) = 0.
template <class D>
Poly<D> poly_gcd(Poly<D> f, Poly<D> g) {
    static_assert(D::is_field, "poly_gcd requires a field domain");
    while (!g.is_zero()) {
        Poly<D> r = f.divrem(g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return f;
    return f.monic();
}

// Product of the distinct irreducible factors of f (monic). Handles
// vanishing derivatives via the t^p decimation f = h(t^p).
PolyFp radical(const PolyFp& f);

// Reduce an integer polynomial mod p.
PolyFp reduce_mod(const PolyZ& f, const FpDomain& dom);

// Lift monic degree-d residues to the unique integer polynomial with
// coefficients in the symmetric range for the product of the moduli.
PolyZ crt_lift(const std::vector<std::pair<PolyFp, long long>>& residues, long long degree);

// True iff every root of f (in an algebraic closure of F_p) has
// multiplicative order a power of two: t^(2^M) = 1 mod radical(f) for the
// smallest M with 2^M >= p^deg(radical).
bool roots_have_two_power_order(const PolyFp& f);

} // namespace pmat
