#include "tevtrop/covers.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace tevtrop {

namespace {

struct RVertex {
    std::vector<int> marks;
    bool alive = true;
};

struct REdge {
    int u = -1;
    int v = -1;
    std::vector<BigInt> len;
    bool alive = true;
};

struct RGraph {
    std::vector<RVertex> vs;
    std::vector<REdge> es;
};

std::vector<int> max_factors(const TropicalCover& c) {
    std::vector<int> mf(c.target_edges.size(), 1);
    for (const auto& e : c.source_edges)
        mf[e.over_edge] = std::max(mf[e.over_edge], e.factor);
    return mf;
}

// Source lengths: the widest strand over a target edge has length y_k; a
// strand of factor f spans the same target edge, so its length is
// (max_factor / f) * y_k.
RGraph source_graph(const TropicalCover& c) {
    const auto mf = max_factors(c);
    RGraph G;
    G.vs.resize(c.source_vertices.size());
    for (const auto& e : c.source_ends)
        if (e.mark != 0) G.vs[e.vertex].marks.push_back(e.mark);
    G.es.reserve(c.source_edges.size());
    for (const auto& e : c.source_edges) {
        if (mf[e.over_edge] % e.factor != 0)
            throw ConstructionFault("stabilize: source edge length is not integral");
        REdge re;
        re.u = e.u;
        re.v = e.v;
        re.len.assign(c.target_edges.size(), BigInt(0));
        re.len[e.over_edge] = mf[e.over_edge] / e.factor;
        G.es.push_back(std::move(re));
    }
    return G;
}

// Target lengths: edge k has length max_factor_k * y_k.
RGraph target_graph(const TropicalCover& c) {
    const auto mf = max_factors(c);
    RGraph G;
    G.vs.resize(c.num_target_vertices);
    for (const auto& e : c.target_ends)
        if (e.is_mark) G.vs[e.vertex].marks.push_back(e.label);
    G.es.reserve(c.target_edges.size());
    for (std::size_t k = 0; k < c.target_edges.size(); ++k) {
        REdge re;
        re.u = c.target_edges[k].u;
        re.v = c.target_edges[k].v;
        re.len.assign(c.target_edges.size(), BigInt(0));
        re.len[k] = mf[k];
        G.es.push_back(std::move(re));
    }
    return G;
}

int other_end(const REdge& e, int v) { return e.u == v ? e.v : e.u; }

// Iterates the three reductions to a fixpoint:
//   - an unmarked vertex of valence 0 or 1 is pruned (with its edge),
//   - an unmarked 2-valent vertex is smoothed (lengths add),
//   - a vertex holding one mark and one edge is absorbed into the mark
//     (the edge vanishes, the mark moves to the far endpoint).
void reduce(RGraph& G) {
    const int V = static_cast<int>(G.vs.size());
    std::vector<std::vector<int>> adj(V);
    for (int k = 0; k < static_cast<int>(G.es.size()); ++k) {
        adj[G.es[k].u].push_back(k);
        adj[G.es[k].v].push_back(k);
    }
    std::vector<int> stack(V);
    for (int v = 0; v < V; ++v) stack[v] = v;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (!G.vs[v].alive) continue;
        std::set<int> ids;
        for (int k : adj[v])
            if (G.es[k].alive && (G.es[k].u == v || G.es[k].v == v)) ids.insert(k);
        adj[v].assign(ids.begin(), ids.end());
        int deg = 0;
        for (int k : adj[v]) deg += (G.es[k].u == v && G.es[k].v == v) ? 2 : 1;
        const int marks = static_cast<int>(G.vs[v].marks.size());

        if (deg == 0 && marks == 0) {
            G.vs[v].alive = false;
        } else if (deg == 1 && marks == 0) {
            int k = adj[v][0];
            int o = other_end(G.es[k], v);
            G.es[k].alive = false;
            G.vs[v].alive = false;
            stack.push_back(o);
        } else if (deg == 1 && marks == 1) {
            int k = adj[v][0];
            int o = other_end(G.es[k], v);
            G.vs[o].marks.push_back(G.vs[v].marks[0]);
            G.es[k].alive = false;
            G.vs[v].alive = false;
            stack.push_back(o);
        } else if (deg == 2 && marks == 0 && adj[v].size() == 2) {
            int k1 = adj[v][0];
            int k2 = adj[v][1];
            int a = other_end(G.es[k1], v);
            int b = other_end(G.es[k2], v);
            for (std::size_t t = 0; t < G.es[k1].len.size(); ++t)
                G.es[k1].len[t] += G.es[k2].len[t];
            G.es[k1].u = a;
            G.es[k1].v = b;
            G.es[k2].alive = false;
            G.vs[v].alive = false;
            adj[a].push_back(k1);
            adj[b].push_back(k1);
            stack.push_back(a);
            if (b != a) stack.push_back(b);
        }
        // anything else is stable
    }
}

[[noreturn]] void mismatch(const std::string& what) {
    throw StabilizationMismatch("stabilize: " + what);
}

std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

struct Walker {
    const RGraph& G;
    std::vector<std::vector<int>> adj;   // alive incident edges, deduplicated
    std::vector<bool> edge_used;
    StableGraph out;
    std::vector<int> vertex_index;       // original -> output index

    explicit Walker(const RGraph& g, int num_symbols) : G(g) {
        adj.resize(G.vs.size());
        edge_used.assign(G.es.size(), false);
        vertex_index.assign(G.vs.size(), -1);
        out.num_symbols = num_symbols;
        for (int k = 0; k < static_cast<int>(G.es.size()); ++k) {
            if (!G.es[k].alive) continue;
            adj[G.es[k].u].push_back(k);
            if (G.es[k].v != G.es[k].u) adj[G.es[k].v].push_back(k);
        }
    }

    int emit_vertex(int v) {
        if (vertex_index[v] < 0) {
            vertex_index[v] = static_cast<int>(out.vertices.size());
            out.vertices.push_back({sorted_desc(G.vs[v].marks)});
        }
        return vertex_index[v];
    }

    void emit_edge(int k) {
        edge_used[k] = true;
        out.edges.push_back({emit_vertex(G.es[k].u), emit_vertex(G.es[k].v), G.es[k].len});
    }

    std::vector<int> fresh_edges(int v) const {
        std::vector<int> r;
        for (int k : adj[v])
            if (!edge_used[k]) r.push_back(k);
        return r;
    }

    void check_all_consumed() const {
        for (int k = 0; k < static_cast<int>(G.es.size()); ++k)
            if (G.es[k].alive && !edge_used[k])
                mismatch("the stable graph has extra edges beyond the canonical shape");
        for (int v = 0; v < static_cast<int>(G.vs.size()); ++v)
            if (G.vs[v].alive && vertex_index[v] < 0)
                mismatch("the stable graph has extra components");
    }
};

// The n-mark caterpillar [n,n-1] - [n-2] - ... - [3] - [2,1]; for n == 3 a
// single vertex holding all three marks.
StableGraph walk_caterpillar(const RGraph& G, int n, int num_symbols) {
    Walker w(G, num_symbols);
    int start = -1;
    if (n == 3) {
        for (int v = 0; v < static_cast<int>(G.vs.size()); ++v)
            if (G.vs[v].alive && sorted_desc(G.vs[v].marks) == std::vector<int>{3, 2, 1})
                start = v;
        if (start < 0) mismatch("no vertex carries the marks {3,2,1}");
        w.emit_vertex(start);
        w.check_all_consumed();
        return w.out;
    }
    for (int v = 0; v < static_cast<int>(G.vs.size()); ++v)
        if (G.vs[v].alive && sorted_desc(G.vs[v].marks) == std::vector<int>{n, n - 1})
            start = v;
    if (start < 0) mismatch("no vertex carries the marks {n, n-1}");
    w.emit_vertex(start);
    int cur = start;
    for (int r = n - 2; r >= 3; --r) {
        auto next = w.fresh_edges(cur);
        if (next.size() != 1) mismatch("caterpillar spine is not a path");
        int k = next[0];
        int o = other_end(G.es[k], cur);
        if (sorted_desc(G.vs[o].marks) != std::vector<int>{r})
            mismatch("caterpillar vertex does not carry mark " + std::to_string(r));
        w.emit_edge(k);
        cur = o;
    }
    auto last = w.fresh_edges(cur);
    if (last.size() != 1) mismatch("caterpillar spine is not a path");
    int k = last[0];
    int o = other_end(G.es[k], cur);
    if (sorted_desc(G.vs[o].marks) != std::vector<int>{2, 1})
        mismatch("caterpillar does not end at the marks {2,1}");
    w.emit_edge(k);
    w.check_all_consumed();
    return w.out;
}

// Source shape for g >= 1: one self-loop vertex, a chain of g-1 two-edge
// loops, then the marked chain [n] - [n-1] - ... - [3] - [2,1].
StableGraph walk_source(const RGraph& G, int g, int n, int num_symbols) {
    Walker w(G, num_symbols);
    std::vector<int> loops;
    for (int k = 0; k < static_cast<int>(G.es.size()); ++k)
        if (G.es[k].alive && G.es[k].u == G.es[k].v) loops.push_back(k);
    if (loops.size() != 1) mismatch("expected exactly one self-loop in the stable source");
    int loop = loops[0];
    int cur = G.es[loop].u;
    if (!G.vs[cur].marks.empty()) mismatch("the self-loop vertex must be unmarked");
    w.emit_vertex(cur);
    w.emit_edge(loop);
    for (int t = 1; t <= g - 1; ++t) {
        auto bridges = w.fresh_edges(cur);
        if (bridges.size() != 1) mismatch("expected a single bridge into the next loop");
        int bk = bridges[0];
        int left = other_end(G.es[bk], cur);
        if (!G.vs[left].marks.empty()) mismatch("loop vertices must be unmarked");
        w.emit_edge(bk);
        auto arcs = w.fresh_edges(left);
        if (arcs.size() != 2) mismatch("expected two parallel arcs in a loop");
        int a1 = arcs[0];
        int a2 = arcs[1];
        int right = other_end(G.es[a1], left);
        if (right == left || other_end(G.es[a2], left) != right)
            mismatch("loop arcs are not parallel");
        if (!G.vs[right].marks.empty()) mismatch("loop vertices must be unmarked");
        if (G.es[a2].len < G.es[a1].len) std::swap(a1, a2);
        w.emit_edge(a1);
        w.emit_edge(a2);
        cur = right;
    }
    for (int r = n; r >= 3; --r) {
        auto next = w.fresh_edges(cur);
        if (next.size() != 1) mismatch("marked chain is not a path");
        int k = next[0];
        int o = other_end(G.es[k], cur);
        if (sorted_desc(G.vs[o].marks) != std::vector<int>{r})
            mismatch("chain vertex does not carry mark " + std::to_string(r));
        w.emit_edge(k);
        cur = o;
    }
    auto last = w.fresh_edges(cur);
    if (last.size() != 1) mismatch("marked chain is not a path");
    int k = last[0];
    int o = other_end(G.es[k], cur);
    if (sorted_desc(G.vs[o].marks) != std::vector<int>{2, 1})
        mismatch("marked chain does not end at the marks {2,1}");
    w.emit_edge(k);
    w.check_all_consumed();
    return w.out;
}

} // namespace

StabilizedCover stabilize(const TropicalCover& cover) {
    const int num_symbols = static_cast<int>(cover.target_edges.size());
    RGraph S = source_graph(cover);
    reduce(S);
    RGraph T = target_graph(cover);
    reduce(T);
    StabilizedCover out;
    out.source = (cover.g >= 1) ? walk_source(S, cover.g, cover.n, num_symbols)
                                : walk_caterpillar(S, cover.n, num_symbols);
    out.target = walk_caterpillar(T, cover.n, num_symbols);
    return out;
}

DilationMatrix dilation_matrix(const TropicalCover& cover) {
    StabilizedCover st = stabilize(cover);
    DilationMatrix M;
    int idx = 1;
    for (const auto& e : st.source.edges) {
        M.row_labels.push_back("x" + std::to_string(idx++));
        M.rows.push_back(e.length);
    }
    idx = 1;
    for (const auto& e : st.target.edges) {
        M.row_labels.push_back("L" + std::to_string(idx++));
        M.rows.push_back(e.length);
    }
    const std::size_t cols = cover.target_edges.size();
    if (M.rows.size() != cols)
        throw NonSquareFault("dilation matrix has " + std::to_string(M.rows.size()) +
                             " rows for " + std::to_string(cols) + " length symbols");
    return M;
}

DilationMatrix genus_block(const DilationMatrix& m, int g) {
    if (g < 1) throw DomainError("genus_block needs g >= 1");
    const std::size_t k = static_cast<std::size_t>(3 * g - 2);
    if (m.rows.size() < k)
        throw DomainError("genus_block: matrix smaller than the requested block");
    for (std::size_t r = 0; r < k; ++r) {
        if (m.rows[r].size() < k)
            throw NonSquareFault("genus_block: short row");
        for (std::size_t c = k; c < m.rows[r].size(); ++c)
            if (m.rows[r][c] != 0)
                throw ConstructionFault(
                    "genus_block: a loop-chain row has support outside the block");
    }
    DilationMatrix out;
    for (std::size_t r = 0; r < k; ++r) {
        out.row_labels.push_back(m.row_labels[r]);
        out.rows.push_back({m.rows[r].begin(), m.rows[r].begin() + k});
    }
    return out;
}

BigInt exact_determinant(const DilationMatrix& m) {
    const std::size_t nsz = m.rows.size();
    for (const auto& r : m.rows)
        if (r.size() != nsz)
            throw NonSquareFault("determinant of a non-square matrix");
    if (nsz == 0) return BigInt(1);
    auto a = m.rows;
    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < nsz; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < nsz && a[pivot][k] == 0) ++pivot;
            if (pivot == nsz) return BigInt(0);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < nsz; ++i)
            for (std::size_t jj = k + 1; jj < nsz; ++jj)
                a[i][jj] = (a[i][jj] * a[k][k] - a[i][k] * a[k][jj]) / prev;
        prev = a[k][k];
    }
    BigInt det = a[nsz - 1][nsz - 1];
    return sign < 0 ? BigInt(-det) : det;
}

} // namespace tevtrop
