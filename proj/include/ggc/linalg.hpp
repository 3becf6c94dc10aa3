#pragma once

#include "ggc/rational.hpp"

#include <vector>

namespace ggc {

using QMatrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan over Q; Error SINGULAR_SYSTEM if not invertible
QMatrix inverse(const QMatrix& a);
int rank(QMatrix a);
QMatrix transpose(const QMatrix& a);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
QMatrix identity_matrix(int n);

} // namespace ggc
