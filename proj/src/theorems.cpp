#include "ptorder/theorems.hpp"

#include "ptorder/asm_permute.hpp"
#include "ptorder/order_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ptorder {

unsigned long long two_adic(unsigned long long t) {
    if (t == 0) throw std::invalid_argument("two_adic: t must be positive");
    return t & (~t + 1);  // lowest set bit
}

std::optional<unsigned long long> type1_order(int d, int j) {
    if (d < 2 || j < 1 || j >= d) throw std::invalid_argument("type1_order: need d >= 2 and 1 <= j < d");
    if (two_adic(j) == two_adic(d - j)) return std::nullopt;
    return std::lcm(std::lcm(2ull * j, 2ull * (d - j)), static_cast<unsigned long long>(d));
}

namespace {

IntPolynomial signed_monomial_sum(int degree_bound, const std::vector<std::pair<int, int>>& terms) {
    std::vector<Int> c(static_cast<std::size_t>(degree_bound) + 1);
    for (const auto& [e, s] : terms) c[static_cast<std::size_t>(e)] += s;
    return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial type1_charpoly(int n, int j1, int j2, int d) {
    if (2 * d > n || d < 1 || j1 < 1 || j1 > n || j2 < 1 || j2 > n || j1 == j2)
        throw std::invalid_argument("type1_charpoly: invalid parameters");
    auto mod_n = [n](int t) { return ((t % n) + n) % n; };
    return signed_monomial_sum(n, {{n, 1},
                                   {n - j1, -1},
                                   {mod_n(n - j1 + d), 1},
                                   {n - j2, 1},
                                   {mod_n(n - j2 + d), -1},
                                   {0, -1}});
}

IntPolynomial type2b_charpoly(int m1, int m2, int k1, int k2) {
    if (k1 < 1 || k1 > m1 || k2 < 1 || k2 > m2) throw std::invalid_argument("type2b_charpoly: invalid parameters");
    const int n = m1 + m2;
    return signed_monomial_sum(n, {{n, 1},
                                   {n - k1, 1},
                                   {n - k2, 1},
                                   {m1, -1},
                                   {m2, -1},
                                   {m1 - k1, -1},
                                   {m2 - k2, -1},
                                   {0, 1}});
}

std::optional<unsigned long long> type2c_order(int p, int q, int h, int l) {
    if (p < 2 || q < 2 || h < 1 || h >= p || l < 1 || l >= q)
        throw std::invalid_argument("type2c_order: need p,q >= 2, 1 <= h < p, 1 <= l < q");
    const int g = std::gcd(p, q);
    if (h % g != 0 && l % g != 0) return std::nullopt;
    return std::lcm<unsigned long long>(p, q);
}

std::optional<unsigned long long> type2d_order(int p, int q, int i1, int i2) {
    if (p < 2 || q < 1 || i1 < 1 || i1 > p || i2 < 1 || i2 > p || i1 == i2)
        throw std::invalid_argument("type2d_order: need p >= 2, q >= 1 and distinct i1, i2 in 1..p");
    if (i1 + i2 != p + 2) return std::nullopt;
    if (two_adic(i2 - 1) < two_adic(p - i2 + 1)) return std::nullopt;
    const int g = std::gcd(q, p - i2 + 1);
    if (p % g != 0) return std::nullopt;
    if (two_adic(q) > two_adic(i2 - 1)) {
        const int d = std::gcd(q / 2, i2 - 1);
        if (p % d != 0 || (p / d) % 2 != 0) return std::nullopt;
    }
    return std::lcm(std::lcm<unsigned long long>(p - i2 + 1, 2ull * (i2 - 1)), static_cast<unsigned long long>(q));
}

std::optional<unsigned long long> type3c_order(int p, int q, int m, int i) {
    if (p < 2 || q < 1 || m < 1 || i <= 1 || i > p)
        throw std::invalid_argument("type3c_order: need p >= 2, q,m >= 1, 1 < i <= p");
    if ((i - 1) % std::gcd(p, q) != 0 || (i - 1) % std::gcd(p, m) != 0) return std::nullopt;
    return std::lcm(std::lcm<unsigned long long>(p, q), static_cast<unsigned long long>(m));
}

IntMatrix standard_matrix(GraphType type, const std::vector<int>& params) {
    if (params.size() != 4) throw std::invalid_argument("standard_matrix: expected 4 parameters");
    const int a = params[0], b = params[1], c = params[2], d = params[3];
    switch (type) {
        case GraphType::Type1:  // {n, d, j1, j2}
            return cycle_companion(a) + t_block(a, {1, c, b + 1, d});
        case GraphType::Type2b:  // {m1, m2, k1, k2}
            return type2b_matrix(a, b, c, d);
        case GraphType::Type2c:  // {p, q, h, l}
            return direct_sum(cycle_companion(a), cycle_companion(b)) + t_block(a + b, {1, a + b, c + 1, a + b - d});
        case GraphType::Type2d:  // {p, q, i1, i2}
            return direct_sum(cycle_companion(a), cycle_companion(b)) + t_block(a + b, {c, a + b, d, a});
        case GraphType::Type3c:  // {p, q, m, i}
            return direct_sum(direct_sum(cycle_companion(a), cycle_companion(b)), cycle_companion(c)) +
                   t_block(a + b + c, {1, a + b, d, a + b + c});
        default:
            throw std::invalid_argument("standard_matrix: type has no standard form");
    }
}

namespace {

IntMatrix checked_sign_sum(IntMatrix base, int n, const TBlockSpec& t, int required_negatives,
                           const char* what) {
    IntMatrix m = std::move(base) + t_block(n, t);
    if (!m.is_sign_matrix()) throw std::invalid_argument(std::string(what) + ": an entry of 2 appears");
    int negatives = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m(i, j) == -1) ++negatives;
    if (negatives != required_negatives)
        throw std::invalid_argument(std::string(what) + ": a -1 entry cancels the permutation part");
    return m;
}

}  // namespace

IntMatrix type2a_matrix(int a, int b, int alpha, int beta) {
    if (a < 2 || b < 2 || alpha < 1 || alpha > a || beta <= a || beta > a + b)
        throw std::invalid_argument("type2a_matrix: invalid parameters");
    // Blue loops of the T-block lie inside the two cycles, red arcs cross.
    return checked_sign_sum(direct_sum(cycle_companion(a), cycle_companion(b)), a + b,
                            {1, alpha, a + 1, beta}, 2, "type2a_matrix");
}

IntMatrix type2b_matrix(int m1, int m2, int k1, int k2) {
    if (k1 < 1 || k1 > m1 || k2 < 1 || k2 > m2) throw std::invalid_argument("type2b_matrix: invalid parameters");
    IntMatrix m = direct_sum(cycle_companion(m1), cycle_companion(m2)) +
                  t_block(m1 + m2, {1, m1 + k2, m1 + 1, k1});
    if (!m.is_sign_matrix()) throw std::invalid_argument("type2b_matrix: an entry of 2 appears");
    return m;  // k1 = m1 or k2 = m2 cancel -1s; callers filter by negative count
}

IntMatrix type3a_matrix(int a, int b, int c, int alpha) {
    if (a < 2 || b < 1 || c < 1 || alpha < 1 || alpha > a)
        throw std::invalid_argument("type3a_matrix: invalid parameters");
    return checked_sign_sum(direct_sum(direct_sum(cycle_companion(a), cycle_companion(b)), cycle_companion(c)),
                            a + b + c, {1, alpha, a + 1, a + b + 1}, 2, "type3a_matrix");
}

IntMatrix type3b_matrix(int a, int b, int c, int alpha) {
    if (a < 2 || b < 1 || c < 1 || alpha < 1 || alpha > a)
        throw std::invalid_argument("type3b_matrix: invalid parameters");
    return checked_sign_sum(direct_sum(direct_sum(cycle_companion(a), cycle_companion(b)), cycle_companion(c)),
                            a + b + c, {1, a + b + 1, a + 1, alpha}, 2, "type3b_matrix");
}

IntMatrix type4_matrix(int a, int b, int c, int d) {
    if (a < 1 || b < 1 || c < 1 || d < 1) throw std::invalid_argument("type4_matrix: invalid parameters");
    IntMatrix base = direct_sum(direct_sum(cycle_companion(a), cycle_companion(b)),
                                direct_sum(cycle_companion(c), cycle_companion(d)));
    return checked_sign_sum(std::move(base), a + b + c + d, {1, a + b + c + 1, a + 1, a + b + 1}, 2,
                            "type4_matrix");
}

namespace {

struct Candidate {
    GraphType type;
    std::vector<int> raw_params;
    unsigned long long order;
};

void visit_candidates(int n, const std::function<void(const Candidate&)>& sink) {
    if (n % 2 == 0) {
        const int d = n / 2;
        for (int j = 1; j < d; ++j)
            if (auto o = type1_order(d, j)) sink({GraphType::Type1, {n, d, n - j, j}, *o});
    }
    for (int p = 2; p <= n - 2; ++p) {
        const int q = n - p;
        if (q < 2) continue;
        for (int h = 1; h < p; ++h)
            for (int l = 1; l < q; ++l)
                if (auto o = type2c_order(p, q, h, l)) sink({GraphType::Type2c, {p, q, h, l}, *o});
    }
    for (int p = 2; p <= n - 1; ++p) {
        const int q = n - p;
        if (q < 1) continue;
        // i = 1 either cancels a -1 of the T-block or doubles the (1, p)
        // entry, so genuine type 2(d) matrices have i1, i2 >= 2.
        for (int i1 = 2; i1 <= p; ++i1)
            for (int i2 = 2; i2 <= p; ++i2) {
                if (i1 == i2) continue;
                if (auto o = type2d_order(p, q, i1, i2)) sink({GraphType::Type2d, {p, q, i1, i2}, *o});
            }
    }
    for (int p = 2; p <= n - 2; ++p)
        for (int q = 1; q <= n - p - 1; ++q) {
            const int m = n - p - q;
            if (m < 1) continue;
            for (int i = 2; i <= p; ++i)
                if (auto o = type3c_order(p, q, m, i)) sink({GraphType::Type3c, {p, q, m, i}, *o});
        }
}

}  // namespace

std::vector<FiniteOrderRecord> enumerate_finite_order(int n) {
    if (n < 2 || n > 14) throw std::invalid_argument("enumerate_finite_order: n must be in 2..14");
    const auto perm_orders = permutation_orders(n);
    std::map<std::pair<GraphType, std::vector<int>>, FiniteOrderRecord> dedup;
    visit_candidates(n, [&](const Candidate& cand) {
        IntMatrix m = standard_matrix(cand.type, cand.raw_params);
        Classification cls = classify(build_graph(m));
        Classification cls_t = classify(build_graph(transpose(m)));
        if (cls.type != cand.type || cls_t.type != cand.type)
            throw std::logic_error("enumerate_finite_order: a standard matrix did not classify as its own type");
        const std::vector<int>& key = std::min(cls.params, cls_t.params);
        auto id = std::make_pair(cand.type, key);
        if (dedup.contains(id)) return;
        FiniteOrderRecord rec;
        rec.type = cand.type;
        rec.params = key;
        rec.standard = standard_matrix(cand.type, key);
        rec.order = cand.order;
        rec.exotic = !std::binary_search(perm_orders.begin(), perm_orders.end(), rec.order);
        Classification canonical = classify(build_graph(rec.standard));
        rec.asm_permutable = asm_permutable_theorem(canonical);
        dedup.emplace(std::move(id), std::move(rec));
    });
    std::vector<FiniteOrderRecord> out;
    out.reserve(dedup.size());
    for (auto& [key, rec] : dedup) out.push_back(std::move(rec));
    return out;
}

std::vector<unsigned long long> exotic_orders(int n) {
    std::vector<unsigned long long> out;
    for (const auto& rec : enumerate_finite_order(n))
        if (rec.exotic) out.push_back(rec.order);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace ptorder
