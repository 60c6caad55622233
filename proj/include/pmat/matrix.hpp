#pragma once

#include <utility>
#include <vector>

#include "pmat/domain.hpp"
#include "pmat/error.hpp"
#include "pmat/poly.hpp"

namespace pmat {

// Dense row-major matrix over an exact coefficient domain. Immutable in
// spirit: operations return fresh matrices. 0x0 matrices are fully
// supported (det = 1, charpoly = 1).
template <class D>
class Matrix {
public:
    using Element = typename D::Element;

    explicit Matrix(D dom = D{}) : dom_(std::move(dom)) {}
    Matrix(long long rows, long long cols, D dom)
        : dom_(std::move(dom)), rows_(rows), cols_(cols),
          e_(static_cast<size_t>(rows * cols), dom_.zero()) {
        if (rows < 0 || cols < 0) throw shape_error("Matrix: negative dimension");
    }

    static Matrix identity(long long n, D dom) {
        Matrix m(n, n, std::move(dom));
        for (long long i = 0; i < n; ++i) m.at(i, i) = m.dom_.one();
        return m;
    }

    const D& domain() const { return dom_; }
    long long rows() const { return rows_; }
    long long cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Element& at(long long i, long long j) { return e_[static_cast<size_t>(i * cols_ + j)]; }
    const Element& at(long long i, long long j) const { return e_[static_cast<size_t>(i * cols_ + j)]; }

    bool operator==(const Matrix& o) const {
        if (!dom_.same(o.dom_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < e_.size(); ++i)
            if (!dom_.equal(e_[i], o.e_[i])) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_, dom_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = dom_.add(e_[i], o.e_[i]);
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_, dom_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = dom_.sub(e_[i], o.e_[i]);
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_, dom_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = dom_.neg(e_[i]);
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        check_domain(o);
        if (cols_ != o.rows_) throw shape_error("Matrix multiply: inner dimensions differ");
        Matrix r(rows_, o.cols_, dom_);
        for (long long i = 0; i < rows_; ++i)
            for (long long k = 0; k < cols_; ++k) {
                const Element& a = at(i, k);
                if (dom_.is_zero(a)) continue;
                for (long long j = 0; j < o.cols_; ++j)
                    r.at(i, j) = dom_.add(r.at(i, j), dom_.mul(a, o.at(k, j)));
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, dom_);
        for (long long i = 0; i < rows_; ++i)
            for (long long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix kron(const Matrix& o) const {
        check_domain(o);
        Matrix r(rows_ * o.rows_, cols_ * o.cols_, dom_);
        for (long long i = 0; i < rows_; ++i)
            for (long long j = 0; j < cols_; ++j) {
                const Element& a = at(i, j);
                if (dom_.is_zero(a)) continue;
                for (long long k = 0; k < o.rows_; ++k)
                    for (long long l = 0; l < o.cols_; ++l)
                        r.at(i * o.rows_ + k, j * o.cols_ + l) = dom_.mul(a, o.at(k, l));
            }
        return r;
    }

    Matrix power(long long e) const {
        if (!is_square()) throw shape_error("Matrix power: matrix not square");
        if (e < 0) throw parameter_error("Matrix power: negative exponent");
        Matrix r = identity(rows_, dom_);
        Matrix base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Element trace() const {
        if (!is_square()) throw shape_error("trace: matrix not square");
        Element t = dom_.zero();
        for (long long i = 0; i < rows_; ++i) t = dom_.add(t, at(i, i));
        return t;
    }

    // Exact determinant. Fields: Gaussian elimination. Z: fraction-free
    // Bareiss with row pivoting (intermediate entries are exact minors).
    Element det_exact() const {
        if (!is_square()) throw shape_error("det_exact: matrix not square");
        if (rows_ == 0) return dom_.one();
        if constexpr (D::is_field)
            return det_gauss();
        else
            return det_bareiss();
    }

    // Pivot-free Bareiss sweep returning all n leading principal minors;
    // throws zero_pivot_error when some leading minor vanishes (callers
    // fall back to per-size det_exact).
    std::vector<Element> leading_principal_minors() const {
        static_assert(!D::is_field, "leading_principal_minors is for the integer domain");
        if (!is_square()) throw shape_error("leading_principal_minors: matrix not square");
        std::vector<Element> mem = e_;
        auto idx = [this](long long i, long long j) { return static_cast<size_t>(i * cols_ + j); };
        std::vector<Element> minors;
        minors.reserve(static_cast<size_t>(rows_));
        Element prev = dom_.one();
        for (long long k = 0; k < rows_; ++k) {
            Element piv = mem[idx(k, k)];
            if (dom_.is_zero(piv))
                throw zero_pivot_error("leading_principal_minors: zero leading minor at size " + std::to_string(k + 1));
            minors.push_back(piv);
            for (long long i = k + 1; i < rows_; ++i)
                for (long long j = k + 1; j < cols_; ++j)
                    mem[idx(i, j)] = dom_.divexact(
                        dom_.sub(dom_.mul(piv, mem[idx(i, j)]), dom_.mul(mem[idx(i, k)], mem[idx(k, j)])), prev);
            prev = piv;
        }
        return minors;
    }

    // Monic characteristic polynomial det(tI - M). Fields: Hessenberg
    // reduction plus the standard recurrence. Z: Berkowitz, division-free.
    Poly<D> charpoly() const {
        if (!is_square()) throw shape_error("charpoly: matrix not square");
        if constexpr (D::is_field)
            return charpoly_hessenberg();
        else
            return charpoly_berkowitz();
    }

    // Exact inverse. Fields: Gauss-Jordan. Z: requires det in {+1, -1};
    // computed over Q and checked integral.
    Matrix inverse() const {
        if (!is_square()) throw shape_error("inverse: matrix not square");
        if constexpr (D::is_field) {
            return inverse_gauss_jordan();
        } else {
            Element d = det_exact();
            if (!dom_.equal(d, dom_.one()) && !dom_.equal(d, dom_.neg(dom_.one())))
                throw non_unimodular_error("inverse: integer matrix with determinant not in {+1,-1}");
            Matrix<QDomain> q(rows_, cols_, QDomain{});
            for (long long i = 0; i < rows_; ++i)
                for (long long j = 0; j < cols_; ++j) q.at(i, j) = mpq_class(at(i, j));
            Matrix<QDomain> qinv = q.inverse();
            Matrix r(rows_, cols_, dom_);
            for (long long i = 0; i < rows_; ++i)
                for (long long j = 0; j < cols_; ++j) {
                    const mpq_class& v = qinv.at(i, j);
                    if (v.get_den() != 1)
                        throw non_unimodular_error("inverse: non-integral entry in unimodular inverse");
                    r.at(i, j) = v.get_num();
                }
            return r;
        }
    }

    // Row rank by Gaussian elimination; field domains only.
    long long rank() const {
        if constexpr (!D::is_field) {
            throw unsupported_domain_error("rank: integer domain unsupported, convert to rationals");
        } else {
            std::vector<Element> mem = e_;
            auto idx = [this](long long i, long long j) { return static_cast<size_t>(i * cols_ + j); };
            long long r = 0;
            for (long long c = 0; c < cols_ && r < rows_; ++c) {
                long long piv = -1;
                for (long long i = r; i < rows_; ++i)
                    if (!dom_.is_zero(mem[idx(i, c)])) {
                        piv = i;
                        break;
                    }
                if (piv < 0) continue;
                for (long long j = 0; j < cols_; ++j) std::swap(mem[idx(r, j)], mem[idx(piv, j)]);
                Element s = dom_.inv(mem[idx(r, c)]);
                for (long long j = c; j < cols_; ++j) mem[idx(r, j)] = dom_.mul(s, mem[idx(r, j)]);
                for (long long i = r + 1; i < rows_; ++i) {
                    Element f = mem[idx(i, c)];
                    if (dom_.is_zero(f)) continue;
                    for (long long j = c; j < cols_; ++j)
                        mem[idx(i, j)] = dom_.sub(mem[idx(i, j)], dom_.mul(f, mem[idx(r, j)]));
                }
                ++r;
            }
            return r;
        }
    }

private:
    D dom_;
    long long rows_ = 0;
    long long cols_ = 0;
    std::vector<Element> e_;

    void check_domain(const Matrix& o) const {
        if (!dom_.same(o.dom_)) throw domain_mismatch_error("Matrix: domain mismatch");
    }
    void check_same_shape(const Matrix& o) const {
        check_domain(o);
        if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("Matrix: shape mismatch");
    }

    Element det_gauss() const {
        std::vector<Element> mem = e_;
        auto idx = [this](long long i, long long j) { return static_cast<size_t>(i * cols_ + j); };
        Element det = dom_.one();
        for (long long k = 0; k < rows_; ++k) {
            long long piv = -1;
            for (long long i = k; i < rows_; ++i)
                if (!dom_.is_zero(mem[idx(i, k)])) {
                    piv = i;
                    break;
                }
            if (piv < 0) return dom_.zero();
            if (piv != k) {
                for (long long j = k; j < cols_; ++j) std::swap(mem[idx(k, j)], mem[idx(piv, j)]);
                det = dom_.neg(det);
            }
            det = dom_.mul(det, mem[idx(k, k)]);
            Element s = dom_.inv(mem[idx(k, k)]);
            for (long long i = k + 1; i < rows_; ++i) {
                Element f = dom_.mul(s, mem[idx(i, k)]);
                if (dom_.is_zero(f)) continue;
                for (long long j = k; j < cols_; ++j)
                    mem[idx(i, j)] = dom_.sub(mem[idx(i, j)], dom_.mul(f, mem[idx(k, j)]));
            }
        }
        return det;
    }

    Element det_bareiss() const {
        std::vector<Element> mem = e_;
        auto idx = [this](long long i, long long j) { return static_cast<size_t>(i * cols_ + j); };
        Element prev = dom_.one();
        bool negate = false;
        for (long long k = 0; k < rows_; ++k) {
            if (dom_.is_zero(mem[idx(k, k)])) {
                long long piv = -1;
                for (long long i = k + 1; i < rows_; ++i)
                    if (!dom_.is_zero(mem[idx(i, k)])) {
                        piv = i;
                        break;
                    }
                if (piv < 0) return dom_.zero();
                for (long long j = k; j < cols_; ++j) std::swap(mem[idx(k, j)], mem[idx(piv, j)]);
                negate = !negate;
            }
            Element piv = mem[idx(k, k)];
            for (long long i = k + 1; i < rows_; ++i)
                for (long long j = k + 1; j < cols_; ++j)
                    mem[idx(i, j)] = dom_.divexact(
                        dom_.sub(dom_.mul(piv, mem[idx(i, j)]), dom_.mul(mem[idx(i, k)], mem[idx(k, j)])), prev);
            prev = piv;
        }
        Element d = mem[idx(rows_ - 1, cols_ - 1)];
        return negate ? dom_.neg(d) : d;
    }

    // Berkowitz 1984: characteristic polynomial by iterated Toeplitz
    // products, no divisions.
    Poly<D> charpoly_berkowitz() const {
        long long n = rows_;
        std::vector<Element> c{dom_.one()}; // highest-degree first
        for (long long r = 1; r <= n; ++r) {
            std::vector<Element> toep;
            toep.reserve(static_cast<size_t>(r) + 1);
            toep.push_back(dom_.one());
            toep.push_back(dom_.neg(at(r - 1, r - 1)));
            std::vector<Element> w(static_cast<size_t>(r - 1));
            for (long long i = 0; i < r - 1; ++i) w[static_cast<size_t>(i)] = at(i, r - 1);
            for (long long j = 2; j <= r && r > 1; ++j) {
                Element dot = dom_.zero();
                for (long long i = 0; i < r - 1; ++i)
                    dot = dom_.add(dot, dom_.mul(at(r - 1, i), w[static_cast<size_t>(i)]));
                toep.push_back(dom_.neg(dot));
                if (j < r) {
                    std::vector<Element> wn(static_cast<size_t>(r - 1), dom_.zero());
                    for (long long i = 0; i < r - 1; ++i)
                        for (long long t = 0; t < r - 1; ++t)
                            wn[static_cast<size_t>(i)] =
                                dom_.add(wn[static_cast<size_t>(i)], dom_.mul(at(i, t), w[static_cast<size_t>(t)]));
                    w = std::move(wn);
                }
            }
            toep.resize(static_cast<size_t>(r) + 1, dom_.zero());
            std::vector<Element> cn(static_cast<size_t>(r) + 1, dom_.zero());
            for (size_t i = 0; i < cn.size(); ++i)
                for (size_t j = 0; j < c.size() && j <= i; ++j)
                    cn[i] = dom_.add(cn[i], dom_.mul(toep[i - j], c[j]));
            c = std::move(cn);
        }
        std::vector<Element> low(c.rbegin(), c.rend());
        return Poly<D>(dom_, std::move(low));
    }

    // Reduce to Hessenberg form by similarity, then the classic leading
    // principal minor recurrence.
    Poly<D> charpoly_hessenberg() const {
        long long n = rows_;
        std::vector<Element> mem = e_;
        auto idx = [this](long long i, long long j) { return static_cast<size_t>(i * cols_ + j); };
        for (long long k = 0; k + 2 < n; ++k) {
            long long piv = -1;
            for (long long r = k + 1; r < n; ++r)
                if (!dom_.is_zero(mem[idx(r, k)])) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            if (piv != k + 1) {
                for (long long j = 0; j < n; ++j) std::swap(mem[idx(k + 1, j)], mem[idx(piv, j)]);
                for (long long i = 0; i < n; ++i) std::swap(mem[idx(i, k + 1)], mem[idx(i, piv)]);
            }
            Element inv = dom_.inv(mem[idx(k + 1, k)]);
            for (long long i = k + 2; i < n; ++i) {
                if (dom_.is_zero(mem[idx(i, k)])) continue;
                Element f = dom_.mul(mem[idx(i, k)], inv);
                for (long long j = 0; j < n; ++j)
                    mem[idx(i, j)] = dom_.sub(mem[idx(i, j)], dom_.mul(f, mem[idx(k + 1, j)]));
                for (long long r = 0; r < n; ++r)
                    mem[idx(r, k + 1)] = dom_.add(mem[idx(r, k + 1)], dom_.mul(f, mem[idx(r, i)]));
            }
        }
        std::vector<std::vector<Element>> polys;
        polys.reserve(static_cast<size_t>(n) + 1);
        polys.push_back({dom_.one()});
        for (long long m = 1; m <= n; ++m) {
            const auto& prev = polys[static_cast<size_t>(m - 1)];
            std::vector<Element> pm(static_cast<size_t>(m) + 1, dom_.zero());
            for (size_t i = 0; i < prev.size(); ++i) pm[i + 1] = prev[i];
            Element a = mem[idx(m - 1, m - 1)];
            for (size_t i = 0; i < prev.size(); ++i) pm[i] = dom_.sub(pm[i], dom_.mul(a, prev[i]));
            Element prod = dom_.one();
            for (long long i = 1; i < m; ++i) {
                prod = dom_.mul(prod, mem[idx(m - i, m - i - 1)]);
                Element coef = dom_.mul(mem[idx(m - 1 - i, m - 1)], prod);
                if (dom_.is_zero(coef)) continue;
                const auto& q = polys[static_cast<size_t>(m - 1 - i)];
                for (size_t t = 0; t < q.size(); ++t) pm[t] = dom_.sub(pm[t], dom_.mul(coef, q[t]));
            }
            polys.push_back(std::move(pm));
        }
        return Poly<D>(dom_, std::move(polys.back()));
    }

    Matrix inverse_gauss_jordan() const {
        std::vector<Element> mem = e_;
        auto idx = [this](long long i, long long j) { return static_cast<size_t>(i * cols_ + j); };
        Matrix inv = identity(rows_, dom_);
        for (long long c = 0; c < cols_; ++c) {
            long long piv = -1;
            for (long long i = c; i < rows_; ++i)
                if (!dom_.is_zero(mem[idx(i, c)])) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw singular_matrix_error("inverse: singular matrix");
            if (piv != c)
                for (long long j = 0; j < cols_; ++j) {
                    std::swap(mem[idx(c, j)], mem[idx(piv, j)]);
                    std::swap(inv.at(c, j), inv.at(piv, j));
                }
            Element s = dom_.inv(mem[idx(c, c)]);
            for (long long j = 0; j < cols_; ++j) {
                mem[idx(c, j)] = dom_.mul(s, mem[idx(c, j)]);
                inv.at(c, j) = dom_.mul(s, inv.at(c, j));
            }
            for (long long i = 0; i < rows_; ++i) {
                if (i == c) continue;
                Element f = mem[idx(i, c)];
                if (dom_.is_zero(f)) continue;
                for (long long j = 0; j < cols_; ++j) {
                    mem[idx(i, j)] = dom_.sub(mem[idx(i, j)], dom_.mul(f, mem[idx(c, j)]));
                    inv.at(i, j) = dom_.sub(inv.at(i, j), dom_.mul(f, inv.at(c, j)));
                }
            }
        }
        return inv;
    }
};

using MatZ = Matrix<ZDomain>;
using MatQ = Matrix<QDomain>;
using MatFp = Matrix<FpDomain>;

inline MatFp reduce_mod(const MatZ& m, const FpDomain& dom) {
    MatFp r(m.rows(), m.cols(), dom);
    for (long long i = 0; i < m.rows(); ++i)
        for (long long j = 0; j < m.cols(); ++j) {
            mpz_class v = m.at(i, j) % static_cast<long>(dom.p);
            long long w = v.get_si();
            r.at(i, j) = w < 0 ? w + dom.p : w;
        }
    return r;
}

inline MatQ to_rational(const MatZ& m) {
    MatQ r(m.rows(), m.cols(), QDomain{});
    for (long long i = 0; i < m.rows(); ++i)
        for (long long j = 0; j < m.cols(); ++j) r.at(i, j) = mpq_class(m.at(i, j));
    return r;
}

} // namespace pmat
