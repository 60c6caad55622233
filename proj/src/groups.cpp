#include "pmat/groups.hpp"

#include <deque>
#include <string>
#include <unordered_set>

#include "pmat/families.hpp"
#include "pmat/numtheory.hpp"
#include "pmat/spectra.hpp"

namespace pmat {

namespace {

std::string raw_key(const MatFp& m, bool wide) {
    std::string key;
    key.reserve(static_cast<size_t>(m.rows() * m.cols()) * (wide ? 8 : 1));
    for (long long i = 0; i < m.rows(); ++i)
        for (long long j = 0; j < m.cols(); ++j) {
            long long v = m.at(i, j);
            if (!wide) {
                key.push_back(static_cast<char>(static_cast<unsigned char>(v)));
            } else {
                for (int b = 0; b < 8; ++b)
                    key.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
            }
        }
    return key;
}

MatFp canonical_rep(MatFp m, ClosureKey kind, bool wide, std::string& key_out) {
    switch (kind) {
    case ClosureKey::plain:
        key_out = raw_key(m, wide);
        return m;
    case ClosureKey::mod_sign: {
        MatFp neg = -m;
        std::string a = raw_key(m, wide);
        std::string b = raw_key(neg, wide);
        if (b < a) {
            key_out = std::move(b);
            return neg;
        }
        key_out = std::move(a);
        return m;
    }
    default: { // projective
        const FpDomain& dom = m.domain();
        long long lead = 0;
        for (long long i = 0; i < m.rows() && lead == 0; ++i)
            for (long long j = 0; j < m.cols(); ++j)
                if (!dom.is_zero(m.at(i, j))) {
                    lead = m.at(i, j);
                    break;
                }
        long long s = dom.inv(lead); // invertible input, so lead != 0
        for (long long i = 0; i < m.rows(); ++i)
            for (long long j = 0; j < m.cols(); ++j) m.at(i, j) = dom.mul(s, m.at(i, j));
        key_out = raw_key(m, wide);
        return m;
    }
    }
}

} // namespace

GroupClosure closure(const std::vector<MatFp>& gens, long long cap, ClosureKey key) {
    if (gens.empty()) throw parameter_error("closure: no generators");
    if (cap < 1) throw parameter_error("closure: cap must be >= 1");
    const FpDomain& dom = gens.front().domain();
    long long n = gens.front().rows();
    for (const auto& g : gens) {
        if (!g.is_square()) throw shape_error("closure: generators must be square");
        if (g.rows() != n || !dom.same(g.domain()))
            throw domain_mismatch_error("closure: generators must share size and domain");
        if (dom.is_zero(g.det_exact()))
            throw singular_generator_error("closure: singular generator");
    }
    bool wide = dom.p >= 256;
    GroupClosure out;
    std::unordered_set<std::string> seen;
    std::deque<size_t> queue;
    std::string key0;
    MatFp id = canonical_rep(MatFp::identity(n, dom), key, wide, key0);
    seen.insert(std::move(key0));
    out.elements.push_back(std::move(id));
    queue.push_back(0);
    while (!queue.empty()) {
        size_t cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            std::string k;
            MatFp next = canonical_rep(out.elements[cur] * g, key, wide, k);
            if (!seen.insert(std::move(k)).second) continue;
            if (static_cast<long long>(out.elements.size()) >= cap) {
                out.truncated = true;
                out.order = static_cast<long long>(out.elements.size());
                return out;
            }
            out.elements.push_back(std::move(next));
            queue.push_back(out.elements.size() - 1);
        }
    }
    out.order = static_cast<long long>(out.elements.size());
    return out;
}

std::pair<MatFp, MatFp> small_generators(const FpDomain& dom) {
    MatFp a(2, 2, dom), b(2, 2, dom);
    a.at(0, 0) = dom.one();
    a.at(0, 1) = dom.from_int(-1);
    a.at(1, 0) = dom.one();
    b.at(0, 0) = dom.one();
    b.at(1, 0) = dom.from_int(-1);
    b.at(1, 1) = dom.from_int(-1);
    return {std::move(a), std::move(b)};
}

long long predicted_image_order(long long p) {
    if (p < 5 || !is_prime(p))
        throw parameter_error("predicted_image_order: need a prime >= 5");
    if (p == 5) return 12;
    if (p == 7) return 42;
    if (p == 29) return 60;
    long long full = p * (p * p - 1);
    return p % 4 == 1 ? full / 2 : full;
}

CheckReport dihedral6_check(long long q) {
    nlohmann::ordered_json params{{"q", q}};
    if (q == 1) return CheckReport::na("dihedral6", params);
    auto [p, l] = prime_power_split(q);
    (void)l;
    params["p"] = p;
    FpDomain dom(p);
    MatFp pas = pascal_symmetric_fp(q, dom);
    MatFp lt = triangular_fp(TriKind::Ltilde, q, dom);
    MatFp id = MatFp::identity(q, dom);
    if (pas.power(3) != id)
        return CheckReport::failed("dihedral6", params, {{"relation", "P^3 != I"}});
    if (lt * lt != id)
        return CheckReport::failed("dihedral6", params, {{"relation", "Ltilde^2 != I"}});
    if (lt * pas * lt != pas * pas)
        return CheckReport::failed("dihedral6", params, {{"relation", "Ltilde P Ltilde != P^2"}});
    GroupClosure c = closure({pas, lt}, 64, ClosureKey::plain);
    if (c.truncated || c.order != 6)
        return CheckReport::failed("dihedral6", params, {{"order", c.order}});
    return CheckReport::passed("dihedral6", params);
}

CheckReport trace_check(long long p) {
    nlohmann::ordered_json params{{"p", p}};
    FpDomain dom(p);
    long long tr = pascal_symmetric_fp(p, dom).trace();
    long long want = dom.from_int(epsilon(p));
    if (tr == want) return CheckReport::passed("trace-epsilon", params);
    return CheckReport::failed("trace-epsilon", params, {{"trace", tr}, {"expected", want}});
}

} // namespace pmat
