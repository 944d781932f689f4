#include "fixspace/qseries.hpp"

#include <stdexcept>

namespace fixspace {

Rational qpoch(const Rational& A, const Rational& q, long n) {
    if (n < 0) throw std::invalid_argument("qpoch: negative length");
    Rational result = 1;
    Rational term = A;
    for (long i = 0; i < n; ++i) {
        result *= Rational(1) - term;
        term *= q;
    }
    return result;
}

Rational qbinom(long n, long k, const Rational& q) {
    if (k < 0) throw std::invalid_argument("qbinom: negative k");
    if (q.is_zero()) throw std::domain_error("qbinom: base must be nonzero");
    Rational num = 1;
    Rational den = 1;
    for (long i = 0; i < k; ++i) {
        const Rational d = q.pow(i + 1) - 1;
        if (d.is_zero()) throw std::domain_error("qbinom: vanishing denominator q^i - 1");
        num *= q.pow(n - i) - 1;
        den *= d;
        if (num.is_zero()) return 0;
    }
    return num / den;
}

Rational galois_by_sum(long j, const Rational& q) {
    Rational total = 0;
    for (long J = 0; J <= j; ++J) total += qbinom(j, J, q);
    return total;
}

Rational galois_by_recurrence(long j, const Rational& q) {
    if (j < 0) throw std::invalid_argument("galois: negative index");
    Rational prev = 1;  // G_0
    if (j == 0) return prev;
    Rational cur = 2;  // G_1
    for (long i = 1; i < j; ++i) {
        Rational next = 2 * cur + (q.pow(i) - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace fixspace
