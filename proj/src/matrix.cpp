#include <dlrev/matrix.hpp>

namespace dlrev {

Rational det_gauss(Matrix<Rational> m)
{
    if (!m.is_square()) {
        throw Error(ErrorCode::NonSquare, "determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) {
            ++p;
        }
        if (p == n) {
            return Rational(0);
        }
        if (p != k) {
            m.swap_rows(k, p);
            det = -det;
        }
        det *= m(k, k);
        const Rational inv = m(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) {
                continue;
            }
            const Rational f = m(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) {
                m(i, j) -= f * m(k, j);
            }
        }
    }
    return det;
}

} // namespace dlrev
