#include "pmat/io.hpp"

#include <sstream>

namespace pmat {

namespace {

template <class D>
std::string grid(const Matrix<D>& m) {
    std::ostringstream out;
    for (long long i = 0; i < m.rows(); ++i) {
        for (long long j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.domain().str(m.at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

} // namespace

std::string matrix_to_plain(const MatZ& m) { return grid(m); }
std::string matrix_to_plain(const MatQ& m) { return grid(m); }
std::string matrix_to_plain(const MatFp& m) { return grid(m); }

} // namespace pmat
