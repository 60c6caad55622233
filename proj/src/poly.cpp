#include "pmat/poly.hpp"

namespace pmat {

namespace {

// For f with vanishing derivative over F_p every exponent carrying a
// nonzero coefficient is a multiple of p, and f(t) = h(t)^p with
// h(t) = sum f_{ip} t^i (Frobenius fixes the prime field).
PolyFp undecimate(const PolyFp& f) {
    const FpDomain& dom = f.domain();
    std::vector<long long> cs;
    cs.reserve(static_cast<size_t>(f.degree() / dom.p) + 1);
    for (long long i = 0; i <= f.degree(); i += dom.p) cs.push_back(f.coeff(i));
    return PolyFp(dom, std::move(cs));
}

} // namespace

PolyFp radical(const PolyFp& f) {
    if (f.is_zero()) throw parameter_error("radical: zero polynomial");
    const FpDomain& dom = f.domain();
    PolyFp g = f.monic();
    if (g.degree() == 0) return g;
    PolyFp d = g.derivative();
    if (d.is_zero()) return radical(undecimate(g));
    PolyFp s = poly_gcd(g, d);
    if (s.is_one()) return g;
    // w carries each factor whose multiplicity is prime to p exactly once.
    PolyFp w = g.divexact(s);
    PolyFp rest = g;
    while (true) {
        PolyFp c = poly_gcd(rest, w);
        if (c.is_one()) break;
        rest = rest.divexact(c);
    }
    // rest is the part with p | multiplicity; its derivative vanishes.
    if (rest.degree() == 0) return w;
    return w * radical(rest);
}

PolyFp reduce_mod(const PolyZ& f, const FpDomain& dom) {
    std::vector<long long> cs;
    cs.reserve(static_cast<size_t>(f.degree()) + 1);
    for (long long i = 0; i <= f.degree(); ++i) {
        mpz_class v = f.coeff(i) % static_cast<long>(dom.p);
        long long w = v.get_si();
        cs.push_back(w < 0 ? w + dom.p : w);
    }
    return PolyFp(dom, std::move(cs));
}

PolyZ crt_lift(const std::vector<std::pair<PolyFp, long long>>& residues, long long degree) {
    if (residues.empty()) throw parameter_error("crt_lift: no residues");
    for (size_t i = 0; i < residues.size(); ++i) {
        if (residues[i].first.domain().p != residues[i].second)
            throw parameter_error("crt_lift: residue domain does not match its stated prime");
        for (size_t j = i + 1; j < residues.size(); ++j)
            if (residues[i].second == residues[j].second)
                throw parameter_error("crt_lift: moduli must be pairwise distinct");
        if (residues[i].first.degree() != degree || !residues[i].first.is_monic())
            throw degree_mismatch_error("crt_lift: residue mod " + std::to_string(residues[i].second) +
                                        " is not monic of degree " + std::to_string(degree));
    }
    mpz_class modulus(1);
    for (const auto& [r, p] : residues) modulus *= static_cast<long>(p);
    ZDomain zd;
    std::vector<mpz_class> lifted(static_cast<size_t>(degree) + 1);
    for (long long i = 0; i <= degree; ++i) {
        mpz_class x(0), m(1);
        for (const auto& [r, p] : residues) {
            FpDomain dom(p);
            long long xi = dom.from_int(mpz_class(x % static_cast<long>(p)).get_si());
            long long mi = dom.from_int(mpz_class(m % static_cast<long>(p)).get_si());
            long long step = dom.mul(dom.sub(r.coeff(i), xi), dom.inv(mi));
            x += m * static_cast<long>(step);
            m *= static_cast<long>(p);
        }
        if (2 * x > modulus) x -= modulus;
        lifted[static_cast<size_t>(i)] = x;
    }
    return PolyZ(zd, std::move(lifted));
}

bool roots_have_two_power_order(const PolyFp& f) {
    if (f.is_zero() || f.domain().is_zero(f.coeff(0)))
        throw zero_root_error("roots_have_two_power_order: polynomial vanishes at 0");
    PolyFp g = radical(f);
    if (g.degree() == 0) return true;
    const FpDomain& dom = f.domain();
    // Smallest M with 2^M >= p^deg: every root lies in F_{p^deg}, whose
    // multiplicative group has order < p^deg, so a two-power order divides
    // 2^M; conversely t^(2^M) = 1 mod g forces every root order into {2^j}.
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(dom.p),
                  static_cast<unsigned long>(g.degree()));
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    size_t M = (mpz_popcount(bound.get_mpz_t()) == 1) ? bits - 1 : bits;
    PolyFp x = PolyFp::t_power(dom, 1).divrem(g).second;
    for (size_t i = 0; i < M; ++i) x = (x * x).divrem(g).second;
    return x == PolyFp::one(dom);
}

} // namespace pmat
