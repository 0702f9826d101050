#include "ptorder/verify.hpp"

#include "ptorder/asm_permute.hpp"
#include "ptorder/int_poly.hpp"
#include "ptorder/io.hpp"
#include "ptorder/order_engine.hpp"
#include "ptorder/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace ptorder {

namespace {

std::string show_tuple(std::initializer_list<int> v) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int x : v) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << ")";
    return os.str();
}

std::string show_order(const std::optional<unsigned long long>& o) {
    return o ? std::to_string(*o) : "none";
}

void mismatch(SuiteResult& r, const std::string& what) {
    if (r.pass) r.detail = what;
    r.pass = false;
}

void check_order_agreement(SuiteResult& r, const std::string& label,
                           const std::optional<unsigned long long>& predicted, const IntMatrix& m) {
    ++r.cases;
    const auto actual = brute_force_order(m, default_order_bound(m.size()));
    if (predicted != actual)
        mismatch(r, label + ": theorem says " + show_order(predicted) + ", brute force says " + show_order(actual));
}

IntMatrix random_sign_matrix(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> pick(0, 3);
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int v = pick(rng);
            m(i, j) = v == 0 ? -1 : (v == 1 ? 1 : 0);  // -1, +1 each w.p. 1/4
        }
    return m;
}

IntMatrix random_pt_matrix(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> vertex(1, n);
    while (true) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        std::shuffle(img.begin(), img.end(), rng);
        TBlockSpec t;
        t.i1 = vertex(rng);
        t.j1 = vertex(rng);
        do t.i2 = vertex(rng);
        while (t.i2 == t.i1);
        do t.j2 = vertex(rng);
        while (t.j2 == t.j1);
        IntMatrix m = permutation_matrix(Permutation(img)) + t_block(n, t);
        if (!m.is_sign_matrix()) continue;
        int negatives = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m(i, j) == -1) ++negatives;
        if (negatives == 2) return m;
    }
}

}  // namespace

SuiteResult verify_type1_orders(const OrderPredicate2& predicate, int max_n) {
    SuiteResult r{.name = "type1-order-vs-oracle", .covered = {"type1_order"}};
    for (int d = 2; 2 * d <= std::max(max_n, 12); ++d)
        for (int j = 1; j < d; ++j)
            check_order_agreement(r, "type1 " + show_tuple({d, j}), predicate(d, j),
                                  standard_matrix(GraphType::Type1, {2 * d, d, 2 * d - j, j}));
    return r;
}

SuiteResult verify_type2c_orders(const OrderPredicate4& predicate, int max_n) {
    SuiteResult r{.name = "type2c-order-vs-oracle", .covered = {"type2c_order"}};
    for (int p = 2; p <= max_n - 2; ++p)
        for (int q = 2; p + q <= max_n; ++q)
            for (int h = 1; h < p; ++h)
                for (int l = 1; l < q; ++l)
                    check_order_agreement(r, "type2c " + show_tuple({p, q, h, l}), predicate(p, q, h, l),
                                          standard_matrix(GraphType::Type2c, {p, q, h, l}));
    return r;
}

SuiteResult verify_type2d_orders(const OrderPredicate4& predicate, int max_n) {
    SuiteResult r{.name = "type2d-order-vs-oracle", .covered = {"type2d_order"}};
    for (int p = 2; p <= max_n - 1; ++p)
        for (int q = 1; p + q <= max_n; ++q)
            for (int i1 = 2; i1 <= p; ++i1)
                for (int i2 = 2; i2 <= p; ++i2) {
                    if (i1 == i2) continue;
                    check_order_agreement(r, "type2d " + show_tuple({p, q, i1, i2}), predicate(p, q, i1, i2),
                                          standard_matrix(GraphType::Type2d, {p, q, i1, i2}));
                }
    return r;
}

SuiteResult verify_type3c_orders(const OrderPredicate4& predicate, int max_n) {
    SuiteResult r{.name = "type3c-order-vs-oracle", .covered = {"type3c_order"}};
    for (int p = 2; p <= max_n - 2; ++p)
        for (int q = 1; p + q + 1 <= max_n; ++q)
            for (int m = 1; p + q + m <= max_n; ++m)
                for (int i = 2; i <= p; ++i)
                    check_order_agreement(r, "type3c " + show_tuple({p, q, m, i}), predicate(p, q, m, i),
                                          standard_matrix(GraphType::Type3c, {p, q, m, i}));
    return r;
}

SuiteResult verify_negative_taxonomy(int max_n) {
    SuiteResult r{.name = "negative-taxonomy", .covered = {"type2a_matrix", "type2b_matrix", "type3a_matrix",
                                                           "type3b_matrix", "type4_matrix"}};
    const int cap = std::min(max_n, 8);
    auto expect_infinite = [&](const std::string& label, const IntMatrix& m) {
        if (is_permutation_matrix(m)) return;
        ++r.cases;
        if (auto o = brute_force_order(m, default_order_bound(m.size())))
            mismatch(r, label + ": brute force found order " + std::to_string(*o));
    };
    for (int a = 2; a <= cap - 2; ++a)
        for (int b = 2; a + b <= cap; ++b) {
            for (int alpha = 1; alpha <= a; ++alpha)
                for (int beta = a + 1; beta <= a + b; ++beta) {
                    // Skip placements that double a cycle arc of either cycle.
                    if (alpha == a || beta == a + b) continue;
                    expect_infinite("type2a " + show_tuple({a, b, alpha, beta}), type2a_matrix(a, b, alpha, beta));
                }
            for (int k1 = 1; k1 <= a; ++k1)
                for (int k2 = 1; k2 <= b; ++k2)
                    expect_infinite("type2b " + show_tuple({a, b, k1, k2}), type2b_matrix(a, b, k1, k2));
        }
    for (int a = 2; a <= cap; ++a)
        for (int b = 1; a + b + 1 <= cap; ++b)
            for (int c = 1; a + b + c <= cap; ++c)
                for (int alpha = 1; alpha <= a; ++alpha) {
                    if (alpha != a)  // alpha = a doubles the (1, a) arc / cancels the -1
                        expect_infinite("type3a " + show_tuple({a, b, c, alpha}), type3a_matrix(a, b, c, alpha));
                    if (alpha != a)
                        expect_infinite("type3b " + show_tuple({a, b, c, alpha}), type3b_matrix(a, b, c, alpha));
                }
    for (int a = 1; a <= cap - 3; ++a)
        for (int b = 1; a + b + 2 <= cap; ++b)
            for (int c = 1; a + b + c + 1 <= cap; ++c)
                for (int d = 1; a + b + c + d <= cap; ++d)
                    expect_infinite("type4 " + show_tuple({a, b, c, d}), type4_matrix(a, b, c, d));
    return r;
}

SuiteResult verify_charpoly_formulas(int max_n) {
    SuiteResult r{.name = "charpoly-formulas", .covered = {"type1_charpoly", "type2b_charpoly"}};
    for (int n = 2; n <= max_n; ++n)
        for (int d = 1; 2 * d <= n; ++d)
            for (int j1 = 1; j1 <= n; ++j1)
                for (int j2 = 1; j2 <= n; ++j2) {
                    if (j1 == j2) continue;
                    ++r.cases;
                    const IntMatrix m = cycle_companion(n) + t_block(n, {1, j1, d + 1, j2});
                    if (type1_charpoly(n, j1, j2, d) != char_poly(m))
                        mismatch(r, "type1_charpoly " + show_tuple({n, j1, j2, d}));
                }
    for (int m1 = 1; m1 <= max_n - 1; ++m1)
        for (int m2 = 1; m1 + m2 <= max_n; ++m2)
            for (int k1 = 1; k1 <= m1; ++k1)
                for (int k2 = 1; k2 <= m2; ++k2) {
                    ++r.cases;
                    if (type2b_charpoly(m1, m2, k1, k2) != char_poly(type2b_matrix(m1, m2, k1, k2)))
                        mismatch(r, "type2b_charpoly " + show_tuple({m1, m2, k1, k2}));
                }
    return r;
}

SuiteResult verify_asm_permutability(int max_n) {
    SuiteResult r{.name = "asm-permutability",
                  .covered = {"asm_permutable_theorem", "find_asm_ordering", "betweenness_constraints",
                              "type2c_asm_orderable_graph"}};
    for (int n = 2; n <= std::min(max_n, 9); ++n) {
        for (const auto& rec : enumerate_finite_order(n)) {
            ++r.cases;
            const auto witness = find_asm_ordering(rec.standard);
            if (witness.has_value() != rec.asm_permutable) {
                mismatch(r, std::string(to_string(rec.type)) + " n=" + std::to_string(n) +
                                ": theorem says " + (rec.asm_permutable ? "permutable" : "not permutable") +
                                ", search says " + (witness ? "found" : "none"));
                continue;
            }
            if (!witness) continue;
            const IntMatrix b = conjugate(rec.standard, *witness);
            if (!is_asm(b)) mismatch(r, "witness conjugate is not an ASM");
            if (brute_force_order(b, rec.order) != rec.order) mismatch(r, "conjugation changed the order");
            for (const auto& bc : betweenness_constraints(classify(build_graph(rec.standard))))
                if (!satisfies(bc, *witness)) mismatch(r, "witness violates a betweenness constraint");
        }
    }
    // Graph-level 2(c) statement, independent of the finite-order conditions.
    for (int p = 2; p + 2 <= std::min(max_n, 8); ++p)
        for (int q = 2; p + q <= std::min(max_n, 8); ++q)
            for (int h = 1; h < p; ++h)
                for (int l = 1; l < q; ++l) {
                    ++r.cases;
                    const bool found =
                        find_asm_ordering(standard_matrix(GraphType::Type2c, {p, q, h, l})).has_value();
                    if (found != type2c_asm_orderable_graph(p, q, h, l))
                        mismatch(r, "type2c graph-level " + show_tuple({p, q, h, l}));
                }
    return r;
}

SuiteResult verify_walk_identity(int samples) {
    SuiteResult r{.name = "walk-identity", .covered = {"signed_walk_counts"}};
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> size(1, 6), length(1, 8);
    for (int s = 0; s < samples; ++s) {
        const int n = size(rng);
        const IntMatrix a = random_sign_matrix(rng, n);
        const PTGraph g = build_graph(a);
        const int k = length(rng);
        const IntMatrix ak = mat_pow(a, static_cast<unsigned long long>(k));
        ++r.cases;
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v) {
                const auto [wp, wm] = signed_walk_counts(g, u, v, k);
                if (ak(u - 1, v - 1) != wp - wm) mismatch(r, "walk identity fails at sample " + std::to_string(s));
            }
    }
    return r;
}

SuiteResult verify_group_lemma() {
    SuiteResult r{.name = "asm-group-lemma", .covered = {"enumerate_asms"}};
    const std::vector<std::size_t> expected_counts{1, 2, 7, 42};
    for (int n = 1; n <= 4; ++n) {
        const auto asms = enumerate_asms(n);
        ++r.cases;
        if (asms.size() != expected_counts[static_cast<std::size_t>(n) - 1]) {
            mismatch(r, "wrong ASM count for n=" + std::to_string(n));
            continue;
        }
        const IntMatrix id = IntMatrix::identity(n);
        for (const auto& a : asms)
            for (const auto& b : asms) {
                if (!(a * b == id)) continue;
                ++r.cases;
                if (!is_permutation_matrix(a) || !is_permutation_matrix(b))
                    mismatch(r, "AB = I with a non-permutation factor, n=" + std::to_string(n));
            }
    }
    return r;
}

SuiteResult verify_binomial_gcd(int limit) {
    SuiteResult r{.name = "binomial-gcd", .covered = {"binomial_gcd"}};
    for (int s = 1; s <= limit; ++s)
        for (int t = 1; t <= limit; ++t)
            for (int ss : {-1, 1})
                for (int st : {-1, 1}) {
                    ++r.cases;
                    if (binomial_gcd(s, ss, t, st) != poly_gcd(binomial(s, ss), binomial(t, st)))
                        mismatch(r, "binomial_gcd disagrees at " + show_tuple({s, ss, t, st}));
                }
    return r;
}

SuiteResult verify_cyclotomic_roundtrip(int limit) {
    SuiteResult r{.name = "cyclotomic-roundtrip", .covered = {"cyclotomic", "factor_into_cyclotomics"}};
    for (int k = 1; k <= limit; ++k) {
        ++r.cases;
        IntPolynomial prod = IntPolynomial::one();
        for (int d = 1; d <= k; ++d)
            if (k % d == 0) prod = prod * cyclotomic(d);
        if (prod != binomial(k, -1)) mismatch(r, "product of Phi_d over d | " + std::to_string(k));
        const auto factors = factor_into_cyclotomics(binomial(k, -1));
        if (!factors || expand(*factors) != binomial(k, -1))
            mismatch(r, "factorization round-trip at k=" + std::to_string(k));
    }
    return r;
}

SuiteResult verify_block_diagonalizability(int instances) {
    SuiteResult r{.name = "block-diagonalizability", .covered = {"block_diagonalizable"}};
    std::mt19937_64 rng(20240602);
    std::uniform_int_distribution<int> size(1, 6), entry(0, 3);
    for (int s = 0; s < instances; ++s) {
        const int p = size(rng), q = size(rng);
        std::vector<int> pi(p), qi(q);
        std::iota(pi.begin(), pi.end(), 1);
        std::iota(qi.begin(), qi.end(), 1);
        std::shuffle(pi.begin(), pi.end(), rng);
        std::shuffle(qi.begin(), qi.end(), rng);
        const IntMatrix P = permutation_matrix(Permutation(pi));
        const IntMatrix Q = permutation_matrix(Permutation(qi));
        std::vector<std::vector<Int>> M(static_cast<std::size_t>(p), std::vector<Int>(static_cast<std::size_t>(q)));
        for (auto& row : M)
            for (auto& v : row) {
                const int e = entry(rng);
                v = e == 0 ? -1 : (e == 1 ? 1 : 0);
            }
        ++r.cases;
        const bool lemma = block_diagonalizable(P, Q, M);
        const bool radical = finite_order(assemble_block_triangular(P, M, Q)).finite;
        if (lemma != radical)
            mismatch(r, "instance " + std::to_string(s) + ": lemma says " + (lemma ? "true" : "false") +
                            ", radical test says " + (radical ? "true" : "false"));
    }
    return r;
}

SuiteResult verify_oracle_equivalence(int max_n) {
    SuiteResult r{.name = "finite-order-vs-oracle", .covered = {"finite_order", "brute_force_order"}};
    auto compare = [&](const std::string& label, const IntMatrix& m) {
        ++r.cases;
        const OrderResult engine = finite_order(m);
        const auto oracle = brute_force_order(m, default_order_bound(m.size()));
        const std::optional<unsigned long long> engine_order = engine.finite ? engine.order : std::nullopt;
        if (engine_order != oracle)
            mismatch(r, label + ": engine " + show_order(engine_order) + " vs oracle " + show_order(oracle));
        if (engine.finite) {
            // Order minimality: a^t = I and a^(t/p) != I for every prime p | t.
            unsigned long long t = *engine.order;
            if (!mat_pow(m, t).is_identity()) mismatch(r, label + ": a^order != I");
            for (unsigned long long f = 2; f * f <= t; ++f)
                while (t % f == 0) {
                    if (mat_pow(m, *engine.order / f).is_identity())
                        mismatch(r, label + ": a^(order/" + std::to_string(f) + ") = I");
                    t /= f;
                }
            if (t > 1 && mat_pow(m, *engine.order / t).is_identity())
                mismatch(r, label + ": a^(order/" + std::to_string(t) + ") = I");
        }
    };
    const int cap = std::min(max_n, 7);
    for (int d = 2; 2 * d <= cap; ++d)
        for (int j = 1; j < d; ++j) compare("type1", standard_matrix(GraphType::Type1, {2 * d, d, 2 * d - j, j}));
    for (int p = 2; p <= cap - 2; ++p)
        for (int q = 2; p + q <= cap; ++q)
            for (int h = 1; h < p; ++h)
                for (int l = 1; l < q; ++l) compare("type2c", standard_matrix(GraphType::Type2c, {p, q, h, l}));
    for (int p = 2; p <= cap - 1; ++p)
        for (int q = 1; p + q <= cap; ++q)
            for (int i1 = 2; i1 <= p; ++i1)
                for (int i2 = 2; i2 <= p; ++i2)
                    if (i1 != i2) compare("type2d", standard_matrix(GraphType::Type2d, {p, q, i1, i2}));
    for (int p = 2; p <= cap - 2; ++p)
        for (int q = 1; p + q + 1 <= cap; ++q)
            for (int m = 1; p + q + m <= cap; ++m)
                for (int i = 2; i <= p; ++i) compare("type3c", standard_matrix(GraphType::Type3c, {p, q, m, i}));
    std::mt19937_64 rng(20240603);
    std::uniform_int_distribution<int> size(2, 8);
    for (int s = 0; s < 500; ++s) compare("random-pt", random_pt_matrix(rng, size(rng)));
    return r;
}

std::vector<SuiteResult> run_verification(int max_n, int jobs) {
    const std::vector<std::function<SuiteResult()>> suites{
        [=] { return verify_type1_orders([](int d, int j) { return type1_order(d, j); }, max_n); },
        [=] {
            return verify_type2c_orders([](int p, int q, int h, int l) { return type2c_order(p, q, h, l); }, max_n);
        },
        [=] {
            return verify_type2d_orders([](int p, int q, int i1, int i2) { return type2d_order(p, q, i1, i2); },
                                        max_n);
        },
        [=] {
            return verify_type3c_orders([](int p, int q, int m, int i) { return type3c_order(p, q, m, i); }, max_n);
        },
        [=] { return verify_negative_taxonomy(max_n); },
        [=] { return verify_charpoly_formulas(max_n); },
        [=] { return verify_asm_permutability(max_n); },
        [] { return verify_walk_identity(200); },
        [] { return verify_group_lemma(); },
        [] { return verify_binomial_gcd(20); },
        [] { return verify_cyclotomic_roundtrip(30); },
        [] { return verify_block_diagonalizability(100); },
        [=] { return verify_oracle_equivalence(max_n); },
    };
    std::vector<SuiteResult> results(suites.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < suites.size(); ++i) results[i] = suites[i]();
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < suites.size(); i = next.fetch_add(1))
                    results[i] = suites[i]();
            });
        for (auto& th : pool) th.join();
    }
    static const std::vector<std::string> required{
        "type1_order",    "type2c_order",       "type2d_order",
        "type3c_order",   "type1_charpoly",     "type2b_charpoly",
        "two_adic",       "standard_matrix",    "asm_permutable_theorem",
        "binomial_gcd",   "block_diagonalizable"};
    std::set<std::string> seen{"two_adic", "standard_matrix"};  // used by every order sweep above
    for (const auto& r : results) seen.insert(r.covered.begin(), r.covered.end());
    for (const auto& op : required)
        if (!seen.contains(op)) {
            SuiteResult miss;
            miss.name = "coverage";
            miss.pass = false;
            miss.detail = "theorem operation never exercised: " + op;
            results.push_back(miss);
        }
    return results;
}

}  // namespace ptorder
