#include "pmat/families.hpp"

#include "pmat/numtheory.hpp"

namespace pmat {

MatZ pascal_symmetric(long long n) {
    MatZ m(n, n, ZDomain{});
    for (long long j = 0; j < n; ++j) m.at(0, j) = 1;
    for (long long i = 1; i < n; ++i) {
        m.at(i, 0) = 1;
        for (long long j = 1; j < n; ++j) m.at(i, j) = m.at(i - 1, j) + m.at(i, j - 1);
    }
    return m;
}

MatFp pascal_symmetric_fp(long long n, const FpDomain& dom) {
    MatFp m(n, n, dom);
    for (long long i = 0; i < n; ++i)
        for (long long j = i; j < n; ++j) {
            long long v = binomial_mod_p(i + j, i, dom.p);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

MatZ pascal_reduced(long long n, long long p) {
    if (p != 2 && p != 3)
        throw unsupported_reduction_error("pascal_reduced: reduction only defined for p in {2,3}");
    MatZ m(n, n, ZDomain{});
    for (long long i = 0; i < n; ++i)
        for (long long j = i; j < n; ++j) {
            long long v = binomial_mod_p(i + j, i, p);
            if (2 * v > p) v -= p;
            m.at(i, j) = static_cast<long>(v);
            m.at(j, i) = static_cast<long>(v);
        }
    return m;
}

namespace {

long long tri_sign(TriKind kind, long long i, long long j) {
    switch (kind) {
    case TriKind::T: return 1;
    case TriKind::L: return (i % 2 == 0) ? 1 : -1;
    default: return (j % 2 == 0) ? 1 : -1;
    }
}

} // namespace

MatZ triangular(TriKind kind, long long n) {
    MatZ m(n, n, ZDomain{});
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j <= i; ++j)
            m.at(i, j) = static_cast<long>(tri_sign(kind, i, j)) * binomial_z(i, j);
    return m;
}

MatFp triangular_fp(TriKind kind, long long n, const FpDomain& dom) {
    MatFp m(n, n, dom);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j <= i; ++j)
            m.at(i, j) = dom.mul(dom.from_int(tri_sign(kind, i, j)), binomial_mod_p(i, j, dom.p));
    return m;
}

MatZ shifted_pascal(long long n, long long k) {
    MatZ m(n, n, ZDomain{});
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) m.at(i, j) = binomial_z(i + j + 2 * k, i + k);
    return m;
}

MatFp shifted_pascal_fp(long long n, long long k, const FpDomain& dom) {
    MatFp m(n, n, dom);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) m.at(i, j) = binomial_mod_p(i + j + 2 * k, i + k, dom.p);
    return m;
}

MatZ shifted_unit_pascal(long long r, long long k) {
    MatZ m(r, r, ZDomain{});
    for (long long i = 0; i < r; ++i)
        for (long long j = 0; j < r; ++j) m.at(i, j) = binomial_z(i + j + k, i);
    return m;
}

MatFp sympower(long long a, long long b, long long c, long long d, long long n, const FpDomain& dom) {
    if (n < 1) throw parameter_error("sympower: size must be at least 1");
    long long aa = dom.from_int(a), bb = dom.from_int(b);
    long long cc = dom.from_int(c), dd = dom.from_int(d);
    if (dom.is_zero(dom.sub(dom.mul(aa, dd), dom.mul(bb, cc))))
        throw singular_generator_error("sympower: 2x2 generator is singular");
    // pows_u[m] holds the coefficients of (aX+bY)^m, likewise pows_v for
    // (cX+dY)^m; each row of the result is one cross convolution.
    auto powers = [&](long long x, long long y) {
        std::vector<std::vector<long long>> pw(static_cast<size_t>(n));
        pw[0] = {1};
        for (long long m = 1; m < n; ++m) {
            const auto& prev = pw[static_cast<size_t>(m - 1)];
            std::vector<long long> cur(static_cast<size_t>(m) + 1, 0);
            for (size_t t = 0; t < prev.size(); ++t) {
                cur[t] = dom.add(cur[t], dom.mul(x, prev[t]));
                cur[t + 1] = dom.add(cur[t + 1], dom.mul(y, prev[t]));
            }
            pw[static_cast<size_t>(m)] = std::move(cur);
        }
        return pw;
    };
    auto pu = powers(aa, bb);
    auto pv = powers(cc, dd);
    MatFp m(n, n, dom);
    for (long long i = 0; i < n; ++i) {
        const auto& u = pu[static_cast<size_t>(n - 1 - i)];
        const auto& v = pv[static_cast<size_t>(i)];
        for (size_t s = 0; s < u.size(); ++s)
            for (size_t t = 0; t < v.size(); ++t) {
                long long& cell = m.at(i, static_cast<long long>(s + t));
                cell = dom.add(cell, dom.mul(u[s], v[t]));
            }
    }
    return m;
}

} // namespace pmat
