#include "ptorder/order_engine.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ptorder {

using Rational = boost::multiprecision::cpp_rational;

OrderResult finite_order(const IntMatrix& a) {
    OrderResult r;
    r.characteristic = char_poly(a);
    // A product of cyclotomics has constant term +-1; anything else cannot
    // have finite order (it is not even invertible over Z).
    const Int& c0 = r.characteristic.coeff(0);
    if (c0 != 1 && c0 != -1) return r;
    r.char_factors = factor_into_cyclotomics(r.characteristic);
    if (!r.char_factors) return r;

    IntPolynomial radical = IntPolynomial::one();
    for (const auto& [d, mult] : r.char_factors->factors) radical = radical * cyclotomic(d);
    if (!poly_eval_matrix(radical, a).is_zero()) return r;

    // The radical is the minimum polynomial: every irreducible factor of the
    // characteristic polynomial divides it, and it annihilates. The per-factor
    // drop test re-establishes minimality computationally.
    unsigned long long order = 1;
    for (const auto& [d, mult] : r.char_factors->factors) {
        if (poly_eval_matrix(*divide_exact(radical, cyclotomic(d)), a).is_zero())
            throw std::logic_error("finite_order: radical is not minimal");
        order = std::lcm(order, static_cast<unsigned long long>(d));
    }
    r.finite = true;
    r.order = order;
    r.min_poly = std::move(radical);
    return r;
}

std::optional<unsigned long long> brute_force_order(const IntMatrix& a, unsigned long long bound) {
    if (bound < 1) throw std::invalid_argument("brute_force_order: bound must be positive");
    const IntMatrix id = IntMatrix::identity(a.size());
    IntMatrix power = a;
    for (unsigned long long k = 1; k <= bound; ++k) {
        if (power == id) return k;
        if (k < bound) power = power * a;
    }
    return std::nullopt;
}

namespace {

void gl_order_search(const std::vector<std::pair<int, int>>& cands, std::size_t i, int remaining,
                     unsigned long long l, std::set<unsigned long long>& out) {
    if (remaining == 0) {
        out.insert(l);
        return;
    }
    if (i == cands.size()) return;
    gl_order_search(cands, i + 1, remaining, l, out);
    const auto [d, tot] = cands[i];
    if (tot <= remaining)
        gl_order_search(cands, i, remaining - tot, std::lcm(l, static_cast<unsigned long long>(d)), out);
}

void partition_lcms(int max_part, int remaining, unsigned long long l, std::set<unsigned long long>& out) {
    if (remaining == 0) {
        out.insert(l);
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p)
        partition_lcms(p, remaining - p, std::lcm(l, static_cast<unsigned long long>(p)), out);
}

}  // namespace

std::vector<unsigned long long> possible_gl_orders(int n) {
    if (n < 1 || n > 30) throw std::invalid_argument("possible_gl_orders: n must be in 1..30");
    std::vector<std::pair<int, int>> cands;  // (d, phi(d))
    for (int d = 1; d <= 2 * n * n + 1; ++d) {
        const int tot = euler_totient(d);
        if (tot <= n) cands.emplace_back(d, tot);
    }
    std::set<unsigned long long> out;
    gl_order_search(cands, 0, n, 1, out);
    return {out.begin(), out.end()};
}

std::vector<unsigned long long> permutation_orders(int n) {
    if (n < 1 || n > 30) throw std::invalid_argument("permutation_orders: n must be in 1..30");
    std::set<unsigned long long> out;
    partition_lcms(n, n, 1, out);
    return {out.begin(), out.end()};
}

unsigned long long default_order_bound(int n) { return possible_gl_orders(n).back(); }

int integer_rank(std::vector<std::vector<Int>> rows) {
    const int nr = static_cast<int>(rows.size());
    if (nr == 0) return 0;
    const int nc = static_cast<int>(rows[0].size());
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int pivot = -1;
        for (int r = rank; r < nr; ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < nr; ++r) {
            for (int c = col + 1; c < nc; ++c)
                rows[r][c] = (rows[rank][col] * rows[r][c] - rows[r][col] * rows[rank][c]) / prev;
            rows[r][col] = 0;
        }
        prev = rows[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Int>> right_nullspace(const IntMatrix& a) {
    const int n = a.size();
    // Rational RREF, then read one basis vector per free column and clear
    // denominators to get integer vectors.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int r = row; r < n; ++r)
            if (m[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[row], m[p]);
        const Rational lead = m[row][col];
        for (int c = 0; c < n; ++c) m[row][c] /= lead;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (int c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<std::vector<Int>> basis;
    std::vector<char> is_pivot(n, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
        Int denom = 1;
        for (const auto& x : v) denom = boost::multiprecision::lcm(denom, Int(boost::multiprecision::denominator(x)));
        std::vector<Int> w(n);
        for (int i = 0; i < n; ++i)
            w[i] = Int(boost::multiprecision::numerator(v[i])) * (denom / Int(boost::multiprecision::denominator(v[i])));
        basis.push_back(std::move(w));
    }
    return basis;
}

bool in_column_space(const IntMatrix& a, const std::vector<Int>& v) {
    const int n = a.size();
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("in_column_space: dimension mismatch");
    std::vector<std::vector<Int>> cols(n, std::vector<Int>(n));
    std::vector<std::vector<Int>> extended(n + 1, std::vector<Int>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) cols[j][i] = extended[j][i] = a(i, j);
    for (int i = 0; i < n; ++i) extended[n][i] = v[i];
    return integer_rank(std::move(cols)) == integer_rank(std::move(extended));
}

IntMatrix assemble_block_triangular(const IntMatrix& p, const std::vector<std::vector<Int>>& m,
                                    const IntMatrix& q) {
    const int np = p.size(), nq = q.size();
    if (static_cast<int>(m.size()) != np) throw std::invalid_argument("assemble: M must have p rows");
    IntMatrix a(np + nq);
    for (int i = 0; i < np; ++i) {
        if (static_cast<int>(m[i].size()) != nq) throw std::invalid_argument("assemble: M must have q columns");
        for (int j = 0; j < np; ++j) a(i, j) = p(i, j);
        for (int j = 0; j < nq; ++j) a(i, np + j) = m[i][j];
    }
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < nq; ++j) a(np + i, np + j) = q(i, j);
    return a;
}

bool block_diagonalizable(const IntMatrix& p_block, const IntMatrix& q_block,
                          const std::vector<std::vector<Int>>& m_block) {
    const OrderResult op = finite_order(p_block);
    if (!op.finite) throw std::invalid_argument("block_diagonalizable: P block is not of finite order");
    const OrderResult oq = finite_order(q_block);
    if (!oq.finite) throw std::invalid_argument("block_diagonalizable: Q block is not of finite order");

    const IntMatrix a = assemble_block_triangular(p_block, m_block, q_block);
    const IntPolynomial g = poly_gcd(*op.min_poly, *oq.min_poly);
    const IntMatrix ga = poly_eval_matrix(g, a);
    const int np = p_block.size(), nq = q_block.size();

    const IntMatrix gp = poly_eval_matrix(g, p_block);
    const IntMatrix gq = poly_eval_matrix(g, q_block);
    for (const auto& v : right_nullspace(gq)) {
        std::vector<Int> nv(np, 0);
        for (int i = 0; i < np; ++i)
            for (int j = 0; j < nq; ++j) nv[i] += ga(i, np + j) * v[j];
        if (!in_column_space(gp, nv)) return false;
    }
    return true;
}

}  // namespace ptorder
