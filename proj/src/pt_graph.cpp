#include "ptorder/pt_graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptorder {

bool PTGraph::has_blue(int from, int to) const {
    return std::binary_search(blue.begin(), blue.end(), Arc{from, to});
}

bool PTGraph::has_red(int from, int to) const {
    return std::binary_search(red.begin(), red.end(), Arc{from, to});
}

PTGraph build_graph(const IntMatrix& a) {
    if (!a.is_sign_matrix()) throw std::invalid_argument("build_graph: entries must lie in {-1,0,1}");
    PTGraph g;
    g.n = a.size();
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            if (a(i, j) == 1) g.blue.push_back({i + 1, j + 1});
            if (a(i, j) == -1) g.red.push_back({i + 1, j + 1});
        }
    return g;
}

IntMatrix matrix_from_graph(const PTGraph& g) {
    IntMatrix a(g.n);
    for (const Arc& e : g.blue) a(e.from - 1, e.to - 1) = 1;
    for (const Arc& e : g.red) a(e.from - 1, e.to - 1) = -1;
    return a;
}

PTGraph reverse_graph(const PTGraph& g) {
    PTGraph r;
    r.n = g.n;
    for (const Arc& e : g.blue) r.blue.push_back({e.to, e.from});
    for (const Arc& e : g.red) r.red.push_back({e.to, e.from});
    std::sort(r.blue.begin(), r.blue.end());
    std::sort(r.red.begin(), r.red.end());
    return r;
}

std::vector<std::vector<int>> weak_components(const PTGraph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const Arc& e : g.blue) unite(e.from, e.to);
    for (const Arc& e : g.red) unite(e.from, e.to);
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(g.n) + 1);
    for (int v = 1; v <= g.n; ++v) buckets[static_cast<std::size_t>(find(v))].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& b : buckets)
        if (!b.empty()) out.push_back(std::move(b));
    return out;
}

PTGraph induced_subgraph(const PTGraph& g, const std::vector<int>& vertices) {
    std::vector<int> sorted(vertices);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> relabel(static_cast<std::size_t>(g.n) + 1, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) relabel[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i) + 1;
    PTGraph s;
    s.n = static_cast<int>(sorted.size());
    for (const Arc& e : g.blue)
        if (relabel[e.from] && relabel[e.to]) s.blue.push_back({relabel[e.from], relabel[e.to]});
    for (const Arc& e : g.red)
        if (relabel[e.from] && relabel[e.to]) s.red.push_back({relabel[e.from], relabel[e.to]});
    std::sort(s.blue.begin(), s.blue.end());
    std::sort(s.red.begin(), s.red.end());
    return s;
}

std::pair<Int, Int> signed_walk_counts(const PTGraph& g, int u, int v, int k) {
    if (k < 1) throw std::invalid_argument("signed_walk_counts: k must be positive");
    if (u < 1 || u > g.n || v < 1 || v > g.n) throw std::out_of_range("signed_walk_counts: vertex out of range");
    // state[v][parity]: walks from u of the current length ending at v having
    // used an even (0) or odd (1) number of red arcs.
    std::vector<std::array<Int, 2>> state(static_cast<std::size_t>(g.n) + 1);
    state[static_cast<std::size_t>(u)][0] = 1;
    for (int step = 0; step < k; ++step) {
        std::vector<std::array<Int, 2>> next(static_cast<std::size_t>(g.n) + 1);
        for (const Arc& e : g.blue) {
            next[e.to][0] += state[e.from][0];
            next[e.to][1] += state[e.from][1];
        }
        for (const Arc& e : g.red) {
            next[e.to][1] += state[e.from][0];
            next[e.to][0] += state[e.from][1];
        }
        state = std::move(next);
    }
    return {state[static_cast<std::size_t>(v)][0], state[static_cast<std::size_t>(v)][1]};
}

std::string to_dot(const PTGraph& g) {
    std::ostringstream os;
    os << "digraph pt {\n";
    for (int v = 1; v <= g.n; ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
    for (const Arc& e : g.blue) os << "  v" << e.from << " -> v" << e.to << " [color=blue];\n";
    for (const Arc& e : g.red) os << "  v" << e.from << " -> v" << e.to << " [color=red, style=dashed];\n";
    os << "}\n";
    return os.str();
}

const char* to_string(GraphType t) {
    switch (t) {
        case GraphType::Permutation: return "permutation";
        case GraphType::Type1: return "type-1";
        case GraphType::Type2a: return "type-2a";
        case GraphType::Type2b: return "type-2b";
        case GraphType::Type2c: return "type-2c";
        case GraphType::Type2d: return "type-2d";
        case GraphType::Type3a: return "type-3a";
        case GraphType::Type3b: return "type-3b";
        case GraphType::Type3c: return "type-3c";
        case GraphType::Type4: return "type-4";
        case GraphType::NonElementary: return "non-elementary";
        case GraphType::NotPT: return "not-pt";
    }
    return "?";
}

namespace {

// Permutation part of a PT-graph: successor map and cycle decomposition.
struct PermPart {
    std::vector<int> succ;                 // 1-based, succ[v]
    std::vector<int> cycle_id;             // 1-based, id per vertex
    std::vector<std::vector<int>> cycles;  // vertices in arc order
};

// Steps from u to v along the cycle arcs; u and v must share a cycle.
int cycle_distance(const PermPart& pp, int u, int v) {
    int d = 0;
    for (int w = u; w != v; w = pp.succ[w]) {
        ++d;
        if (d > static_cast<int>(pp.succ.size())) throw std::logic_error("cycle_distance: vertices not on one cycle");
    }
    return d;
}

Classification not_pt(std::string why) {
    Classification c;
    c.type = GraphType::NotPT;
    c.detail = std::move(why);
    return c;
}

std::vector<int> sorted_cycle_lengths(const PermPart& pp) {
    std::vector<int> lens;
    for (const auto& c : pp.cycles) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return lens;
}

// Appends the vertices of one cycle to an ordering so that `last` lands at
// position `last_pos` and walking s arcs from `last` lands at last_pos - s.
void place_cycle_ending_at(const PermPart& pp, int last, int last_pos, std::vector<int>& pos_to_vertex) {
    int v = last;
    int pos = last_pos;
    do {
        pos_to_vertex[static_cast<std::size_t>(pos)] = v;
        v = pp.succ[v];
        --pos;
    } while (v != last);
}

struct Extraction {
    std::vector<int> params;
    std::vector<int> pos_to_vertex;  // 1-based positions
};

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Type 1 standard form C_n + T(1, j1, d+1, j2): u1 at position 1, u2 at
// position d+1 where d = d_P(u2, u1) <= n/2, remaining labels descending
// along the cycle. When n = 2d both tail assignments qualify; the one with
// the smaller (j2, j1) wins, matching the convention of writing the form
// with j = min(j1, j2).
Extraction extract_type1(const PermPart& pp, int n, int u1, int v1, int u2, int v2) {
    std::optional<Extraction> best;
    const std::array<std::array<int, 4>, 2> assignments{{{u1, v1, u2, v2}, {u2, v2, u1, v1}}};
    for (const auto& [U1, V1, U2, V2] : assignments) {
        const int d = cycle_distance(pp, U2, U1);
        if (2 * d > n) continue;
        std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
        pos[1] = U1;
        {
            int v = pp.succ[U1];
            for (int s = 1; v != U1; ++s, v = pp.succ[v]) pos[static_cast<std::size_t>(n + 1 - s)] = v;
        }
        std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
        for (int k = 1; k <= n; ++k) label[static_cast<std::size_t>(pos[k])] = k;
        Extraction e{{n, d, label[static_cast<std::size_t>(V2)], label[static_cast<std::size_t>(V1)]}, pos};
        auto tie_key = [](const Extraction& x) { return std::pair(x.params[3], x.params[2]); };
        if (!best || tie_key(e) < tie_key(*best)) best = std::move(e);
    }
    return *best;
}

// Type 2(b): red arcs inside both cycles; C_m1 (+) C_m2 + T(1, m1+k2, m1+1, k1).
Extraction extract_type2b(const PermPart& pp, int u1, int v1, int u2, int v2) {
    std::optional<Extraction> best;
    const std::array<std::array<int, 4>, 2> assignments{{{u1, v1, u2, v2}, {u2, v2, u1, v1}}};
    for (const auto& [U1, V1, U2, V2] : assignments) {
        const int m1 = static_cast<int>(pp.cycles[static_cast<std::size_t>(pp.cycle_id[U1])].size());
        const int m2 = static_cast<int>(pp.cycles[static_cast<std::size_t>(pp.cycle_id[U2])].size());
        const int k1 = V1 == U1 ? 1 : m1 + 1 - cycle_distance(pp, U1, V1);
        const int k2 = V2 == U2 ? 1 : m2 + 1 - cycle_distance(pp, U2, V2);
        std::vector<int> pos(static_cast<std::size_t>(m1 + m2) + 1, 0);
        place_cycle_ending_at(pp, pp.succ[U1], m1, pos);  // puts U1 at position 1
        place_cycle_ending_at(pp, pp.succ[U2], m1 + m2, pos);
        Extraction e{{m1, m2, k1, k2}, pos};
        if (!best || lex_less(e.params, best->params)) best = std::move(e);
    }
    return *best;
}

// Type 2(c): C_p (+) C_q + T(1, n, h+1, n-l); label so that l <= q - l.
Extraction extract_type2c(const PermPart& pp, int u1, int v1, int u2, int v2) {
    const int p = static_cast<int>(pp.cycles[static_cast<std::size_t>(pp.cycle_id[u1])].size());
    const int q = static_cast<int>(pp.cycles[static_cast<std::size_t>(pp.cycle_id[v1])].size());
    const int n = p + q;
    std::optional<Extraction> best;
    const std::array<std::array<int, 4>, 2> assignments{{{u1, v1, u2, v2}, {u2, v2, u1, v1}}};
    for (const auto& [U1, V1, U2, V2] : assignments) {
        const int h = cycle_distance(pp, U2, U1);
        const int l = cycle_distance(pp, V2, V1);
        if (2 * l > q) continue;
        std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
        place_cycle_ending_at(pp, pp.succ[U1], p, pos);  // U1 at position 1
        place_cycle_ending_at(pp, V2, n, pos);
        Extraction e{{p, q, h, l}, pos};
        if (!best || lex_less(e.params, best->params)) best = std::move(e);
    }
    return *best;
}

// Type 2(d) in the orientation with both red tails on the p-cycle:
// C_p (+) C_q + T(i1, n, i2, p), y1 last on the p-cycle, y2 last overall.
Extraction extract_type2d(const PermPart& pp, int x1, int y1, int x2, int y2) {
    const int p = static_cast<int>(pp.cycles[static_cast<std::size_t>(pp.cycle_id[x1])].size());
    const int q = static_cast<int>(pp.cycles[static_cast<std::size_t>(pp.cycle_id[y2])].size());
    const int n = p + q;
    const int i1 = x1 == y1 ? p : p - cycle_distance(pp, y1, x1);
    const int i2 = x2 == y1 ? p : p - cycle_distance(pp, y1, x2);
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    place_cycle_ending_at(pp, y1, p, pos);
    place_cycle_ending_at(pp, y2, n, pos);
    return {{p, q, i1, i2}, pos};
}

// Type 3(c): C_p (+) C_q (+) C_m + T(1, p+q, i, p+q+m), red tails on the
// p-cycle; the q-cycle carries the head reached by a blue T-arc from x1.
Extraction extract_type3c(const PermPart& pp, int u1, int v1, int u2, int v2) {
    const int p = static_cast<int>(pp.cycles[static_cast<std::size_t>(pp.cycle_id[u1])].size());
    std::optional<Extraction> best;
    const std::array<std::array<int, 4>, 2> assignments{{{u1, v1, u2, v2}, {u2, v2, u1, v1}}};
    for (const auto& [U1, V1, U2, V2] : assignments) {
        const int q = static_cast<int>(pp.cycles[static_cast<std::size_t>(pp.cycle_id[V2])].size());
        const int m = static_cast<int>(pp.cycles[static_cast<std::size_t>(pp.cycle_id[V1])].size());
        const int n = p + q + m;
        const int i = p + 1 - cycle_distance(pp, U1, U2);
        std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
        place_cycle_ending_at(pp, pp.succ[U1], p, pos);  // U1 at position 1
        place_cycle_ending_at(pp, V2, p + q, pos);
        place_cycle_ending_at(pp, V1, n, pos);
        Extraction e{{p, q, m, i}, pos};
        if (!best || lex_less(e.params, best->params)) best = std::move(e);
    }
    return *best;
}

Classification finish(GraphType type, const PermPart& pp, Extraction e, bool transposed) {
    Classification c;
    c.type = type;
    c.transposed = transposed;
    c.cycle_lengths = sorted_cycle_lengths(pp);
    c.params = std::move(e.params);
    c.ordering = Permutation(std::vector<int>(e.pos_to_vertex.begin() + 1, e.pos_to_vertex.end()));
    return c;
}

}  // namespace

Classification classify(const PTGraph& g) {
    PermPart pp;
    pp.succ.assign(static_cast<std::size_t>(g.n) + 1, 0);

    if (g.red.empty()) {
        std::vector<int> indeg(static_cast<std::size_t>(g.n) + 1, 0);
        for (const Arc& e : g.blue) {
            if (pp.succ[e.from] != 0) return not_pt("a vertex has two outgoing blue arcs");
            pp.succ[e.from] = e.to;
            ++indeg[e.to];
        }
        for (int v = 1; v <= g.n; ++v)
            if (pp.succ[v] == 0 || indeg[v] != 1) return not_pt("no negative entries but not a permutation matrix");
        Classification c;
        c.type = GraphType::Permutation;
        pp.cycle_id.assign(static_cast<std::size_t>(g.n) + 1, -1);
        for (int s = 1; s <= g.n; ++s) {
            if (pp.cycle_id[s] >= 0) continue;
            std::vector<int> cyc;
            for (int v = s; pp.cycle_id[v] < 0; v = pp.succ[v]) {
                pp.cycle_id[v] = static_cast<int>(pp.cycles.size());
                cyc.push_back(v);
            }
            pp.cycles.push_back(std::move(cyc));
        }
        c.cycle_lengths = sorted_cycle_lengths(pp);
        return c;
    }
    if (g.red.size() == 1) return not_pt("exactly one negative entry: a duplicated row, singular");
    if (g.red.size() > 2) return not_pt("more than two negative entries");

    // The two red arcs determine the T-block: red (u1,v1), (u2,v2) forces
    // blue arcs (u1,v2) and (u2,v1).
    const int u1 = g.red[0].from, v1 = g.red[0].to;
    const int u2 = g.red[1].from, v2 = g.red[1].to;
    if (u1 == u2) return not_pt("the two -1 entries share a row");
    if (v1 == v2) return not_pt("the two -1 entries share a column");
    if (!g.has_blue(u1, v2) || !g.has_blue(u2, v1)) return not_pt("+1 entries of the T-block are missing");

    // Everything else is the permutation part; it must be a disjoint union of
    // directed cycles covering all vertices.
    std::vector<int> indeg(static_cast<std::size_t>(g.n) + 1, 0);
    for (const Arc& e : g.blue) {
        if ((e.from == u1 && e.to == v2) || (e.from == u2 && e.to == v1)) continue;
        if (pp.succ[e.from] != 0) return not_pt("permutation part has a repeated row");
        pp.succ[e.from] = e.to;
        ++indeg[e.to];
    }
    for (int v = 1; v <= g.n; ++v)
        if (pp.succ[v] == 0 || indeg[v] != 1) return not_pt("permutation part is not a disjoint union of cycles");

    pp.cycle_id.assign(static_cast<std::size_t>(g.n) + 1, -1);
    for (int s = 1; s <= g.n; ++s) {
        if (pp.cycle_id[s] >= 0) continue;
        std::vector<int> cyc;
        for (int v = s; pp.cycle_id[v] < 0; v = pp.succ[v]) {
            pp.cycle_id[v] = static_cast<int>(pp.cycles.size());
            cyc.push_back(v);
        }
        pp.cycles.push_back(std::move(cyc));
    }

    auto comps = weak_components(g);
    if (comps.size() > 1) {
        Classification c;
        c.type = GraphType::NonElementary;
        c.cycle_lengths = sorted_cycle_lengths(pp);
        for (auto& comp : comps) {
            if (std::binary_search(comp.begin(), comp.end(), u1))
                c.core_vertices = comp;
            else
                c.satellite_cycles.push_back(static_cast<int>(comp.size()));
        }
        std::sort(c.satellite_cycles.begin(), c.satellite_cycles.end(), std::greater<int>());
        return c;
    }

    const int cu1 = pp.cycle_id[u1], cv1 = pp.cycle_id[v1];
    const int cu2 = pp.cycle_id[u2], cv2 = pp.cycle_id[v2];
    std::vector<int> touched{cu1, cv1, cu2, cv2};
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    auto transposed_case = [&](GraphType expect) {
        Classification c = classify(reverse_graph(g));
        if (c.type != expect || c.transposed) throw std::logic_error("classify: reversal did not reach the standard orientation");
        c.transposed = true;
        return c;
    };

    switch (touched.size()) {
        case 1:
            return finish(GraphType::Type1, pp, extract_type1(pp, g.n, u1, v1, u2, v2), false);
        case 2: {
            if (cu1 == cu2 && cv1 == cv2) return finish(GraphType::Type2c, pp, extract_type2c(pp, u1, v1, u2, v2), false);
            if (cu1 == cu2) {
                // One red head shares the tails' cycle, the other sits alone.
                if (cv2 == cu1) return finish(GraphType::Type2d, pp, extract_type2d(pp, u2, v2, u1, v1), false);
                return finish(GraphType::Type2d, pp, extract_type2d(pp, u1, v1, u2, v2), false);
            }
            if (cv1 == cv2) return transposed_case(GraphType::Type2d);
            if (cv1 == cu1 && cv2 == cu2) return finish(GraphType::Type2b, pp, extract_type2b(pp, u1, v1, u2, v2), false);
            // Remaining split: each red arc crosses between the two cycles.
            Classification c;
            c.type = GraphType::Type2a;
            c.cycle_lengths = sorted_cycle_lengths(pp);
            return c;
        }
        case 3: {
            if (cu1 == cu2) return finish(GraphType::Type3c, pp, extract_type3c(pp, u1, v1, u2, v2), false);
            if (cv1 == cv2) return transposed_case(GraphType::Type3c);
            Classification c;
            c.cycle_lengths = sorted_cycle_lengths(pp);
            // A red arc inside one cycle makes type 3(b); a blue T-arc inside
            // one cycle makes type 3(a).
            c.type = (cv1 == cu1 || cv2 == cu2) ? GraphType::Type3b : GraphType::Type3a;
            return c;
        }
        default: {
            Classification c;
            c.type = GraphType::Type4;
            c.cycle_lengths = sorted_cycle_lengths(pp);
            return c;
        }
    }
}

}  // namespace ptorder
