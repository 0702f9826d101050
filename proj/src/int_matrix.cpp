#include "ptorder/int_matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ptorder {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("from_rows: matrix is not square");
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v == 0; });
}

bool IntMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_sign_matrix() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v >= -1 && v <= 1; });
}

Int IntMatrix::trace() const {
    Int t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
    if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
    if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    const int n = a.size();
    if (n != b.size()) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Int& v = a(i, k);
            if (v == 0) continue;
            for (int j = 0; j < n; ++j) c(i, j) += v * b(k, j);
        }
    return c;
}

IntMatrix transpose(const IntMatrix& a) {
    const int n = a.size();
    IntMatrix t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(j, i) = a(i, j);
    return t;
}

IntMatrix mat_pow(const IntMatrix& a, unsigned long long k) {
    IntMatrix result = IntMatrix::identity(a.size());
    IntMatrix base = a;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("permutation images are not a bijection on {1..n}");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>(image(i)) - 1] = i;
    return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size() + 1, 0);
    for (int s = 1; s <= size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        for (int v = s; !seen[v]; v = image(v)) {
            seen[v] = 1;
            cyc.push_back(v);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Permutation::cycle_lengths() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return lens;
}

IntMatrix permutation_matrix(const Permutation& p) {
    IntMatrix m(p.size());
    for (int i = 1; i <= p.size(); ++i) m(i - 1, p.image(i) - 1) = 1;
    return m;
}

IntMatrix cycle_companion(int k) {
    if (k < 1) throw std::invalid_argument("cycle_companion: k must be positive");
    IntMatrix m(k);
    for (int i = 1; i < k; ++i) m(i, i - 1) = 1;
    m(0, k - 1) = 1;
    return m;
}

IntMatrix t_block(int n, const TBlockSpec& s) {
    if (s.i1 < 1 || s.i1 > n || s.i2 < 1 || s.i2 > n || s.j1 < 1 || s.j1 > n || s.j2 < 1 || s.j2 > n)
        throw std::out_of_range("t_block: index out of range");
    if (s.i1 == s.i2 || s.j1 == s.j2) throw std::invalid_argument("t_block: degenerate spec (i1 == i2 or j1 == j2)");
    IntMatrix m(n);
    m(s.i1 - 1, s.j1 - 1) += 1;
    m(s.i2 - 1, s.j2 - 1) += 1;
    m(s.i1 - 1, s.j2 - 1) -= 1;
    m(s.i2 - 1, s.j1 - 1) -= 1;
    return m;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.size() + b.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) m(i, j) = a(i, j);
    const int o = a.size();
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j) m(o + i, o + j) = b(i, j);
    return m;
}

IntMatrix conjugate(const IntMatrix& a, const Permutation& p) {
    const int n = a.size();
    if (n != p.size()) throw std::invalid_argument("conjugate: dimension mismatch");
    IntMatrix b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) b(i - 1, j - 1) = a(p.image(i) - 1, p.image(j) - 1);
    return b;
}

std::optional<Permutation> as_permutation(const IntMatrix& a) {
    const int n = a.size();
    std::vector<int> img(n, 0);
    for (int i = 0; i < n; ++i) {
        int ones = 0;
        for (int j = 0; j < n; ++j) {
            const Int& v = a(i, j);
            if (v == 1) {
                ++ones;
                img[i] = j + 1;
            } else if (v != 0) {
                return std::nullopt;
            }
        }
        if (ones != 1) return std::nullopt;
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : img) {
        if (seen[v]) return std::nullopt;
        seen[v] = 1;
    }
    return Permutation(std::move(img));
}

bool is_permutation_matrix(const IntMatrix& a) { return as_permutation(a).has_value(); }

bool is_asm(const IntMatrix& a) {
    const int n = a.size();
    if (!a.is_sign_matrix()) return false;
    for (int i = 0; i < n; ++i) {
        Int s = 0;
        for (int j = 0; j < n; ++j) {
            s += a(i, j);
            if (s < 0 || s > 1) return false;
        }
        if (s != 1) return false;
    }
    for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int i = 0; i < n; ++i) {
            s += a(i, j);
            if (s < 0 || s > 1) return false;
        }
        if (s != 1) return false;
    }
    return true;
}

std::optional<PTDecomposition> decompose_pt(const IntMatrix& a) {
    const int n = a.size();
    if (!a.is_sign_matrix()) return std::nullopt;
    std::vector<std::pair<int, int>> neg;  // 1-based
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a(i, j) == -1) neg.emplace_back(i + 1, j + 1);

    if (neg.empty()) {
        auto p = as_permutation(a);
        if (!p) return std::nullopt;
        return PTDecomposition{*p, std::nullopt};
    }
    if (neg.size() != 2) return std::nullopt;  // one -1 is singular, three or more is not P+T

    auto [r1, c1] = neg[0];
    auto [r2, c2] = neg[1];
    if (r1 == r2 || c1 == c2) return std::nullopt;
    // The two -1 positions force T = T(r1, c2, r2, c1); its +1 entries must be
    // present in a and must not coincide with entries of P.
    if (a(r1 - 1, c2 - 1) != 1 || a(r2 - 1, c1 - 1) != 1) return std::nullopt;
    TBlockSpec t = TBlockSpec{r1, c2, r2, c1}.normalized();
    IntMatrix p = a - t_block(n, t);
    auto perm = as_permutation(p);
    if (!perm) return std::nullopt;
    return PTDecomposition{*perm, t};
}

namespace {

void asm_backtrack(int n, int r, std::vector<int>& colsum, std::vector<std::vector<int>>& rows,
                   const std::function<void()>& emit) {
    if (r == n) {
        emit();
        return;
    }
    // Fill row r cell by cell; keep the row prefix sum and every column
    // prefix sum inside {0,1}. The row buffer is per level: deeper rows must
    // not clobber it between sibling branches.
    std::vector<int> row(n, 0);
    std::function<void(int, int)> cell = [&](int j, int psum) {
        if (j == n) {
            if (psum == 1) {
                rows.push_back(row);
                asm_backtrack(n, r + 1, colsum, rows, emit);
                rows.pop_back();
            }
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            const int np = psum + v;
            const int nc = colsum[j] + v;
            if (np < 0 || np > 1 || nc < 0 || nc > 1) continue;
            // A column must still be able to reach sum 1 with the rows left.
            if (r == n - 1 && nc != 1) continue;
            colsum[j] = nc;
            row[j] = v;
            cell(j + 1, np);
            colsum[j] -= v;
        }
    };
    cell(0, 0);
}

}  // namespace

std::vector<IntMatrix> enumerate_asms(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("enumerate_asms: n must be in 1..5");
    std::vector<IntMatrix> out;
    std::vector<int> colsum(n, 0);
    std::vector<std::vector<int>> rows;
    asm_backtrack(n, 0, colsum, rows, [&] {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
        out.push_back(std::move(m));
    });
    return out;
}

}  // namespace ptorder
