#include "oracles.hpp"

#include <set>
#include <stdexcept>

namespace oracle {

SmallField::SmallField(int q) : q_(q), p_(q == 4 ? 2 : q), add_(q * q), mul_(q * q) {
    if (q == 4) {
        // elements a0 + a1 t encoded as a0 + 2 a1
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                add_[a * 4 + b] = a ^ b;
                const int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
                // (a0 + a1 t)(b0 + b1 t) with t^2 = t + 1
                const int c0 = (a0 * b0 + a1 * b1) & 1;
                const int c1 = (a0 * b1 + a1 * b0 + a1 * b1) & 1;
                mul_[a * 4 + b] = c0 | (c1 << 1);
            }
        return;
    }
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) throw std::invalid_argument("oracle field: prime or 4 only");
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            add_[a * q + b] = (a + b) % q;
            mul_[a * q + b] = (a * b) % q;
        }
}

int SmallField::neg(int a) const {
    for (int b = 0; b < q_; ++b)
        if (add(a, b) == 0) return b;
    throw std::logic_error("no negative");
}

int SmallField::inv(int a) const {
    for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw std::domain_error("zero has no inverse");
}

int SmallField::conj(int a) const { return q_ == 4 ? mul(a, a) : a; }

int rank(const SmallField& f, Mat m, int rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i * cols + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(m[r * cols + j], m[piv * cols + j]);
        const int s = f.inv(m[r * cols + c]);
        for (int j = 0; j < cols; ++j) m[r * cols + j] = f.mul(s, m[r * cols + j]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i * cols + c] == 0) continue;
            const int factor = m[i * cols + c];
            for (int j = 0; j < cols; ++j)
                m[i * cols + j] = f.sub(m[i * cols + j], f.mul(factor, m[r * cols + j]));
        }
        ++r;
    }
    return r;
}

int fixed_dim(const SmallField& f, const Mat& g, int d) {
    Mat h = g;
    for (int i = 0; i < d; ++i) h[i * d + i] = f.sub(h[i * d + i], 1);
    return d - rank(f, h, d, d);
}

Census brute_force(const SmallField& f, int d, const std::function<bool(const Mat&)>& member) {
    Census census;
    census.by_fixed_dim.assign(d + 1, 0);
    const int cells = d * d;
    Mat g(cells, 0);
    while (true) {
        if (rank(f, g, d, d) == d && member(g)) {
            ++census.order;
            ++census.by_fixed_dim[fixed_dim(f, g, d)];
        }
        int i = 0;
        while (i < cells && ++g[i] == f.order()) g[i++] = 0;
        if (i == cells) break;
    }
    return census;
}

namespace {

/// g^T G conj(g) == G
bool preserves(const SmallField& f, const Mat& g, const Mat& G, int d, bool hermitian) {
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int s = 0;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    const int gb = hermitian ? f.conj(g[b * d + j]) : g[b * d + j];
                    s = f.add(s, f.mul(f.mul(g[a * d + i], G[a * d + b]), gb));
                }
            if (s != G[i * d + j]) return false;
        }
    return true;
}

}  // namespace

Census gl(int d, int q) {
    const SmallField f(q);
    return brute_force(f, d, [](const Mat&) { return true; });
}

Census sp(int d, int q) {
    const SmallField f(q);
    Mat J(d * d, 0);
    for (int b = 0; b + 1 < d; b += 2) {
        J[b * d + b + 1] = 1;
        J[(b + 1) * d + b] = f.neg(1);
    }
    return brute_force(f, d, [&](const Mat& g) { return preserves(f, g, J, d, false); });
}

Census unitary(int d) {
    const SmallField f(4);
    Mat I(d * d, 0);
    for (int i = 0; i < d; ++i) I[i * d + i] = 1;
    return brute_force(f, d, [&](const Mat& g) { return preserves(f, g, I, d, true); });
}

Census orthogonal_gram(int q, int d, const Mat& gram) {
    const SmallField f(q);
    return brute_force(f, d, [&](const Mat& g) { return preserves(f, g, gram, d, false); });
}

Census orthogonal_quadratic(int q, int d, const Mat& upper) {
    const SmallField f(q);
    // every vector of F_q^d
    std::vector<std::vector<int>> vectors;
    std::vector<int> v(d, 0);
    while (true) {
        vectors.push_back(v);
        int i = 0;
        while (i < d && ++v[i] == q) v[i++] = 0;
        if (i == d) break;
    }
    const auto Q = [&](const std::vector<int>& x) {
        int s = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) s = f.add(s, f.mul(upper[i * d + j], f.mul(x[i], x[j])));
        return s;
    };
    return brute_force(f, d, [&](const Mat& g) {
        std::vector<int> w(d);
        for (const auto& x : vectors) {
            for (int i = 0; i < d; ++i) {
                int s = 0;
                for (int j = 0; j < d; ++j) s = f.add(s, f.mul(g[i * d + j], x[j]));
                w[i] = s;
            }
            if (Q(w) != Q(x)) return false;
        }
        return true;
    });
}

std::uint64_t count_subspaces(int n, int k, int q) {
    if (k == 0) return 1;
    const SmallField f(q);
    std::set<Mat> echelon;
    const int cells = k * n;
    Mat m(cells, 0);
    while (true) {
        if (rank(f, m, k, n) == k) {
            // reduce to RREF
            Mat r = m;
            int row = 0;
            for (int c = 0; c < n && row < k; ++c) {
                int piv = -1;
                for (int i = row; i < k; ++i)
                    if (r[i * n + c] != 0) {
                        piv = i;
                        break;
                    }
                if (piv < 0) continue;
                for (int j = 0; j < n; ++j) std::swap(r[row * n + j], r[piv * n + j]);
                const int s = f.inv(r[row * n + c]);
                for (int j = 0; j < n; ++j) r[row * n + j] = f.mul(s, r[row * n + j]);
                for (int i = 0; i < k; ++i) {
                    if (i == row || r[i * n + c] == 0) continue;
                    const int factor = r[i * n + c];
                    for (int j = 0; j < n; ++j) r[i * n + j] = f.sub(r[i * n + j], f.mul(factor, r[row * n + j]));
                }
                ++row;
            }
            echelon.insert(r);
        }
        int i = 0;
        while (i < cells && ++m[i] == q) m[i++] = 0;
        if (i == cells) break;
    }
    return echelon.size();
}

}  // namespace oracle
