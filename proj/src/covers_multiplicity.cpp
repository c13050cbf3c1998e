#include "tevtrop/covers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace tevtrop {

namespace {

BigInt factorial_big(int n) {
    BigInt r(1);
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// Per-vertex local degree: the common direction weight at every source
// vertex.  Requires a harmonic cover.
std::vector<int> local_degrees(const TropicalCover& c) {
    std::vector<std::map<std::pair<bool, int>, int>> weight(c.source_vertices.size());
    for (const auto& e : c.source_edges) {
        weight[e.u][{false, e.over_edge}] += e.factor;
        weight[e.v][{false, e.over_edge}] += e.factor;
    }
    for (const auto& e : c.source_ends) weight[e.vertex][{true, e.over_end}] += e.factor;
    std::vector<int> deg(c.source_vertices.size(), 0);
    for (std::size_t v = 0; v < c.source_vertices.size(); ++v) {
        int dv = -1;
        for (const auto& [dir, w] : weight[v]) {
            (void)dir;
            if (dv < 0) dv = w;
            else if (dv != w)
                throw ConstructionFault("multiplicity: cover is not harmonic");
        }
        if (dv <= 0) throw ConstructionFault("multiplicity: isolated source vertex");
        deg[v] = dv;
    }
    return deg;
}

// |Aut| of the stabilized source curve: 2 per self-loop, times (size)! for
// every class of parallel edges with identical length vectors.
BigInt aut_stable_source(const StableGraph& G) {
    BigInt aut(1);
    std::map<std::pair<int, int>, std::vector<const StableEdge*>> parallel;
    for (const auto& e : G.edges) {
        if (e.u == e.v) {
            aut *= 2;
            continue;
        }
        parallel[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(&e);
    }
    for (const auto& [key, group] : parallel) {
        (void)key;
        std::map<std::vector<BigInt>, int> by_length;
        for (const auto* e : group) ++by_length[e->length];
        for (const auto& [len, count] : by_length) {
            (void)len;
            aut *= factorial_big(count);
        }
    }
    return aut;
}

// |Aut| of the cover map: interchangeable branch ends at a common target
// vertex (identical fiber signature at every source vertex), and parallel
// source edges (same endpoints, target edge, and factor).
BigInt aut_cover(const TropicalCover& c) {
    BigInt aut(1);

    // (a) branch-end swaps
    std::map<int, std::vector<int>> ends_at; // target vertex -> branch end ids
    for (std::size_t k = 0; k < c.target_ends.size(); ++k)
        if (!c.target_ends[k].is_mark)
            ends_at[c.target_ends[k].vertex].push_back(static_cast<int>(k));
    for (const auto& [tv, ends] : ends_at) {
        (void)tv;
        if (ends.size() < 2) continue;
        // signature of an end: per source vertex, the sorted (factor, mark)
        // multiset of its source ends over it
        std::map<std::string, int> classes;
        for (int end_id : ends) {
            std::map<int, std::vector<std::pair<int, int>>> sig;
            for (const auto& se : c.source_ends)
                if (se.over_end == end_id) sig[se.vertex].push_back({se.factor, se.mark});
            std::ostringstream os;
            for (auto& [v, mult] : sig) {
                std::sort(mult.begin(), mult.end());
                os << v << ":";
                for (auto& [f, m] : mult) os << f << "," << m << ";";
                os << "|";
            }
            ++classes[os.str()];
        }
        for (const auto& [sig, count] : classes) {
            (void)sig;
            aut *= factorial_big(count);
        }
    }

    // (b) parallel source edges
    std::map<std::tuple<int, int, int, int>, int> parallel;
    for (const auto& e : c.source_edges)
        ++parallel[{std::min(e.u, e.v), std::max(e.u, e.v), e.over_edge, e.factor}];
    for (const auto& [key, count] : parallel) {
        (void)key;
        aut *= factorial_big(count);
    }
    return aut;
}

} // namespace

MultiplicityReport multiplicity(const TropicalCover& cover) {
    const auto deg = local_degrees(cover);

    // directions at each target vertex
    std::vector<std::vector<std::pair<bool, int>>> dirs(cover.num_target_vertices);
    for (std::size_t k = 0; k < cover.target_edges.size(); ++k) {
        dirs[cover.target_edges[k].u].push_back({false, static_cast<int>(k)});
        dirs[cover.target_edges[k].v].push_back({false, static_cast<int>(k)});
    }
    for (std::size_t k = 0; k < cover.target_ends.size(); ++k)
        dirs[cover.target_ends[k].vertex].push_back({true, static_cast<int>(k)});

    // local profile of each source vertex in each target direction
    std::vector<std::map<std::pair<bool, int>, std::vector<int>>> parts(
        cover.source_vertices.size());
    for (const auto& e : cover.source_edges) {
        parts[e.u][{false, e.over_edge}].push_back(e.factor);
        parts[e.v][{false, e.over_edge}].push_back(e.factor);
    }
    for (const auto& e : cover.source_ends)
        parts[e.vertex][{true, e.over_end}].push_back(e.factor);

    // a vertex is "marked" when it reaches a marked point through the source
    // graph; on a connected cover that is every vertex
    std::vector<int> comp(cover.source_vertices.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& e : cover.source_edges) comp[find(e.u)] = find(e.v);
    std::vector<bool> leads_to_mark(cover.source_vertices.size(), false);
    for (const auto& e : cover.source_ends)
        if (e.mark != 0) leads_to_mark[find(e.vertex)] = true;

    MultiplicityReport rep;
    rep.vertex_factor = BigRat(1);
    for (std::size_t v = 0; v < cover.source_vertices.size(); ++v) {
        const auto& vd = dirs[cover.source_vertices[v].over];
        if (vd.size() != 3)
            throw DomainError("multiplicity: every target vertex must be trivalent");
        LocalHurwitzQuery q;
        q.d = deg[v];
        q.marked = leads_to_mark[find(static_cast<int>(v))];
        for (int s = 0; s < 3; ++s) {
            auto it = parts[v].find(vd[s]);
            std::vector<int> p = (it == parts[v].end()) ? std::vector<int>{} : it->second;
            std::sort(p.begin(), p.end(), std::greater<int>());
            q.profiles[s] = Profile{p};
        }
        rep.vertex_factor *= local_hurwitz(q);
    }

    // edge normalization: (product of fiber factors) / lcm of fiber factors
    rep.edge_factor = BigRat(1);
    for (std::size_t k = 0; k < cover.target_edges.size(); ++k) {
        BigInt prod(1);
        long long l = 1;
        for (const auto& e : cover.source_edges)
            if (e.over_edge == static_cast<int>(k)) {
                prod *= e.factor;
                l = std::lcm(l, static_cast<long long>(e.factor));
            }
        rep.edge_factor *= BigRat(prod, BigInt(l));
    }

    StabilizedCover st = stabilize(cover);
    rep.automorphism_factor = BigRat(aut_stable_source(st.source), aut_cover(cover));

    DilationMatrix M = dilation_matrix(cover);
    BigInt det = exact_determinant(M);
    rep.det_abs = det < 0 ? BigInt(-det) : det;

    rep.value = rep.automorphism_factor * rep.vertex_factor * rep.edge_factor;
    rep.value *= BigRat(rep.det_abs);
    return rep;
}

std::string cover_fingerprint(const TropicalCover& cover) {
    const auto deg = local_degrees(cover);

    // fiber factors per target edge, branch profiles per end, marks and
    // local degrees per vertex -- all as sorted multisets
    std::vector<std::vector<int>> edge_fiber(cover.target_edges.size());
    for (const auto& e : cover.source_edges) edge_fiber[e.over_edge].push_back(e.factor);
    for (auto& f : edge_fiber) std::sort(f.begin(), f.end(), std::greater<int>());

    std::vector<std::vector<int>> end_fiber(cover.target_ends.size());
    for (const auto& e : cover.source_ends) end_fiber[e.over_end].push_back(e.factor);
    for (auto& f : end_fiber) std::sort(f.begin(), f.end(), std::greater<int>());

    std::vector<std::vector<int>> vertex_marks(cover.num_target_vertices);
    std::vector<std::vector<std::string>> vertex_end_tokens(cover.num_target_vertices);
    for (std::size_t k = 0; k < cover.target_ends.size(); ++k) {
        const auto& te = cover.target_ends[k];
        if (te.is_mark) {
            vertex_marks[te.vertex].push_back(te.label);
        } else {
            std::ostringstream os;
            os << "b(";
            for (int f : end_fiber[k]) os << f << ",";
            os << ")";
            vertex_end_tokens[te.vertex].push_back(os.str());
        }
    }
    std::vector<std::vector<int>> vertex_degrees(cover.num_target_vertices);
    for (std::size_t v = 0; v < cover.source_vertices.size(); ++v)
        vertex_degrees[cover.source_vertices[v].over].push_back(deg[v]);

    std::vector<std::vector<std::pair<int, int>>> adj(cover.num_target_vertices);
    for (std::size_t k = 0; k < cover.target_edges.size(); ++k) {
        adj[cover.target_edges[k].u].push_back({cover.target_edges[k].v, static_cast<int>(k)});
        adj[cover.target_edges[k].v].push_back({cover.target_edges[k].u, static_cast<int>(k)});
    }

    auto vertex_token = [&](int tv) {
        std::ostringstream os;
        auto marks = vertex_marks[tv];
        std::sort(marks.begin(), marks.end(), std::greater<int>());
        os << "m[";
        for (int r : marks) os << r << ",";
        os << "]";
        auto ends = vertex_end_tokens[tv];
        std::sort(ends.begin(), ends.end());
        for (const auto& t : ends) os << t;
        auto dd = vertex_degrees[tv];
        std::sort(dd.begin(), dd.end(), std::greater<int>());
        os << "d[";
        for (int x : dd) os << x << ",";
        os << "]";
        return os.str();
    };

    // root: the target vertex carrying mark 1 (unique on a valid cover)
    int root = -1;
    for (int tv = 0; tv < cover.num_target_vertices; ++tv)
        for (int r : vertex_marks[tv])
            if (r == 1) root = tv;
    if (root < 0) throw DomainError("cover_fingerprint: no vertex carries mark 1");

    // iterative DFS with child-sorting via recursion on a small tree
    std::function<std::string(int, int)> serialize = [&](int tv, int in_edge) {
        std::vector<std::string> children;
        for (const auto& [o, k] : adj[tv]) {
            if (k == in_edge) continue;
            std::ostringstream os;
            os << "e(";
            for (int f : edge_fiber[k]) os << f << ",";
            os << "|" << serialize(o, k) << ")";
            children.push_back(os.str());
        }
        std::sort(children.begin(), children.end());
        std::string s = vertex_token(tv);
        for (const auto& ch : children) s += ch;
        return "{" + s + "}";
    };
    return serialize(root, -1);
}

} // namespace tevtrop
