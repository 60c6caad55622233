#pragma once

#include <string>

#include <json.hpp>

#include "pmat/matrix.hpp"
#include "pmat/poly.hpp"

namespace pmat {

// Matrix JSON: {"rows", "cols", "domain", "entries": row-major decimal
// strings ("a/b" for rationals)}.
template <class D>
nlohmann::ordered_json matrix_to_json(const Matrix<D>& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["domain"] = m.domain().tag();
    auto entries = nlohmann::ordered_json::array();
    for (long long i = 0; i < m.rows(); ++i)
        for (long long k = 0; k < m.cols(); ++k) entries.push_back(m.domain().str(m.at(i, k)));
    j["entries"] = std::move(entries);
    return j;
}

// Polynomial JSON: array of decimal coefficient strings, index = degree.
template <class D>
nlohmann::ordered_json poly_to_json(const Poly<D>& f) {
    auto j = nlohmann::ordered_json::array();
    for (long long i = 0; i <= f.degree(); ++i) j.push_back(f.domain().str(f.coeff(i)));
    return j;
}

// Human-readable form, highest degree first: "t^4 - 2t^3 - 2t + 1".
template <class D>
std::string poly_to_string(const Poly<D>& f) {
    if (f.is_zero()) return "0";
    const D& dom = f.domain();
    std::string out;
    for (long long i = f.degree(); i >= 0; --i) {
        auto c = f.coeff(i);
        if (dom.is_zero(c)) continue;
        std::string cs = dom.str(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string abs = neg ? cs.substr(1) : cs;
        if (i == 0) {
            out += abs;
        } else {
            if (abs != "1") out += abs;
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string matrix_to_plain(const MatZ& m);
std::string matrix_to_plain(const MatQ& m);
std::string matrix_to_plain(const MatFp& m);

} // namespace pmat
