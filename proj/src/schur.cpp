#include "hecke/schur.hpp"

namespace hecke {

namespace {

void require_q(const Scalar& q) {
    if (q <= 0 || q == 1) throw Error("Schur specialization needs q > 0 and q != 1");
}

// 1 - q^k
Scalar one_minus(const Scalar& q, int k) { return 1 - power(q, k); }

}  // namespace

Scalar schur_principal(const Partition& alpha, int r, const Scalar& q) {
    require_q(q);
    if (static_cast<int>(alpha.length()) > r) return 0;
    Scalar value = power(q, n_stat(alpha));
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            const int ai = alpha.part(static_cast<std::size_t>(i - 1));
            const int aj = alpha.part(static_cast<std::size_t>(j - 1));
            value *= one_minus(q, ai - aj + j - i);
            value /= one_minus(q, j - i);
        }
    return value;
}

Scalar schur_normalized(const Partition& alpha, int r, const Scalar& q) {
    if (static_cast<int>(alpha.length()) > r) return 0;
    const Scalar one_row = schur_principal(Partition{1}, r, q);
    return schur_principal(alpha, r, q) / power(one_row, alpha.size());
}

Scalar rectangle_schur(int m, int r1, int r2, const Scalar& q) {
    require_q(q);
    const int r = r1 + r2;
    Scalar value = power(q, m * r1 * (r1 - 1) / 2);
    for (int i = 1; i <= r1; ++i)
        for (int j = 1; j <= r2; ++j) value *= one_minus(q, m + r1 + j - i) / one_minus(q, r1 + j - i);
    const Scalar one_row = schur_principal(Partition{1}, r, q);
    return value / power(one_row, m * r1);
}

Scalar schur_embedded_factorized(const DoublePartition& shape, int m, int r1, int r2, const Scalar& q) {
    require_q(q);
    const auto& a = shape.first;
    const auto& b = shape.second;
    if (static_cast<int>(a.length()) > r1 || static_cast<int>(b.length()) > r2) return 0;
    const int r = r1 + r2;
    const int mu_size = m * r1 + shape.size();
    Scalar value = power(q, m * r1 * (r1 - 1) / 2 + r1 * b.size());
    value *= power((1 - q) / one_minus(q, r), mu_size);
    value *= schur_principal(a, r1, q) * schur_principal(b, r2, q);
    for (int i = 1; i <= r1; ++i)
        for (int j = 1; j <= r2; ++j) {
            const int ai = a.part(static_cast<std::size_t>(i - 1));
            const int bj = b.part(static_cast<std::size_t>(j - 1));
            value *= one_minus(q, m + r1 + ai - bj + j - i) / one_minus(q, r1 + j - i);
        }
    return value;
}

}  // namespace hecke
