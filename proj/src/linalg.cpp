#include "ggc/linalg.hpp"

#include "ggc/errors.hpp"

namespace ggc {

QMatrix identity_matrix(int n)
{
    QMatrix m(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

QMatrix inverse(const QMatrix& a)
{
    int n = int(a.size());
    QMatrix m = a, inv = identity_matrix(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (sgn(m[r][col]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error("SINGULAR_SYSTEM", "matrix of size " + std::to_string(n) + " is singular");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = m[col][col];
        if (p != 1) {
            for (int c = 0; c < n; ++c) {
                m[col][c] /= p;
                inv[col][c] /= p;
            }
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col];
            for (int c = 0; c < n; ++c) {
                if (sgn(m[col][c]) != 0) m[r][c] -= f * m[col][c];
                if (sgn(inv[col][c]) != 0) inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

int rank(QMatrix m)
{
    if (m.empty()) return 0;
    int rows = int(m.size()), cols = int(m[0].size()), r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(m[i][c]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (int k = c; k < cols; ++k)
                m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

QMatrix transpose(const QMatrix& a)
{
    if (a.empty()) return {};
    QMatrix t(a[0].size(), std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            t[j][i] = a[i][j];
    return t;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b)
{
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMatrix c(n, std::vector<Rational>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (sgn(a[i][l]) == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

} // namespace ggc
