#include "tevtrop/covers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tevtrop/paths.hpp"

namespace tevtrop {

namespace {

enum class Role { InitPassive, Float, Residual, CutTree, CutLate, FinalSheet };

// A passive sheet: a degree-1 strand running along the spine.  `tree_mark`
// is the mark it carries via its witness-tree copy; `late_mark` is a mark it
// carries as a straight marked end further right.
struct Sheet {
    int frontier = -1;
    Role role = Role::InitPassive;
    int tree_mark = 0;
    int late_mark = 0;
    bool alive = true;
};

struct ActiveStrand {
    int frontier = -1;
    int factor = 1;
};

struct PendingTree {
    bool armed = false;
    int attach_tv = -1;                      // the tree vertex on the spine
    int levels = 0;                          // number of tree levels (M - 1)
    int low_mark = 0;                        // mark at level 1
    int n = 0;
    // copies to hang: (source vertex over the attach vertex, designated mark)
    std::vector<std::pair<int, int>> copies;
};

struct Builder {
    TropicalCover c;
    int branch_label = 0;

    int new_target_vertex() { return c.num_target_vertices++; }
    int add_target_edge(int u, int v) {
        c.target_edges.push_back({u, v});
        return static_cast<int>(c.target_edges.size()) - 1;
    }
    int add_branch_end(int vertex, bool genus_part) {
        c.target_ends.push_back({vertex, false, ++branch_label, genus_part});
        return static_cast<int>(c.target_ends.size()) - 1;
    }
    int add_mark_end(int vertex, int mark) {
        c.target_ends.push_back({vertex, true, mark, false});
        return static_cast<int>(c.target_ends.size()) - 1;
    }
    int new_source_vertex(int over) {
        c.source_vertices.push_back({over, 0});
        return static_cast<int>(c.source_vertices.size()) - 1;
    }
    void add_source_edge(int u, int v, int over_edge, int factor) {
        c.source_edges.push_back({u, v, over_edge, factor});
    }
    void add_source_end(int vertex, int over_end, int factor, int mark) {
        c.source_ends.push_back({vertex, over_end, factor, mark});
    }
};

// Builds the witness tree hanging at `p.attach_tv` together with one
// degree-1 copy per entry of `p.copies`.  Level t (1-based) carries mark
// low_mark + t - 1 for t < levels and the pair {n-1, n} at the top level.
void fire_tree(Builder& b, PendingTree& p) {
    std::vector<int> level_tv(p.levels);
    std::vector<int> level_edge(p.levels);
    int below = p.attach_tv;
    for (int t = 0; t < p.levels; ++t) {
        level_tv[t] = b.new_target_vertex();
        level_edge[t] = b.add_target_edge(below, level_tv[t]);
        below = level_tv[t];
    }
    std::vector<std::vector<int>> level_marks(p.levels);
    for (int t = 0; t + 1 < p.levels; ++t)
        level_marks[t].push_back(b.add_mark_end(level_tv[t], p.low_mark + t));
    level_marks[p.levels - 1].push_back(b.add_mark_end(level_tv[p.levels - 1], p.n - 1));
    level_marks[p.levels - 1].push_back(b.add_mark_end(level_tv[p.levels - 1], p.n));

    for (const auto& [base, designated] : p.copies) {
        int cur = base;
        for (int t = 0; t < p.levels; ++t) {
            int nv = b.new_source_vertex(level_tv[t]);
            b.add_source_edge(cur, nv, level_edge[t], 1);
            for (int end_idx : level_marks[t]) {
                int mark = b.c.target_ends[end_idx].label;
                b.add_source_end(nv, end_idx, 1, mark == designated ? mark : 0);
            }
            cur = nv;
        }
    }
    p.armed = false;
}

struct Spine {
    Builder& b;
    std::vector<Sheet>& sheets;
    ActiveStrand& active;
    int prev_tv = -1;
    PendingTree pending;

    // Opens the next spine vertex: allocates the outgoing edge of the
    // previous vertex, fires a deferred witness tree, and moves every strand
    // forward.  `merge_with` lands that sheet on the active's new vertex and
    // retires it.
    int open(int merge_with = -1) {
        int tv = b.new_target_vertex();
        int edge = b.add_target_edge(prev_tv, tv);
        if (pending.armed) fire_tree(b, pending);
        int av = b.new_source_vertex(tv);
        b.add_source_edge(active.frontier, av, edge, active.factor);
        for (int s = 0; s < static_cast<int>(sheets.size()); ++s) {
            if (!sheets[s].alive) continue;
            if (s == merge_with) {
                b.add_source_edge(sheets[s].frontier, av, edge, 1);
                sheets[s].alive = false;
            } else {
                int nv = b.new_source_vertex(tv);
                b.add_source_edge(sheets[s].frontier, nv, edge, 1);
                sheets[s].frontier = nv;
            }
        }
        active.frontier = av;
        prev_tv = tv;
        return tv;
    }

    // Simple branch point on the spine: one factor-2 end on the active,
    // unit ends on everything else.
    int branch_here(int tv, bool genus_part) {
        int te = b.add_branch_end(tv, genus_part);
        b.add_source_end(active.frontier, te, 2, 0);
        for (int r = 0; r < active.factor - 2; ++r)
            b.add_source_end(active.frontier, te, 1, 0);
        for (const auto& s : sheets)
            if (s.alive) b.add_source_end(s.frontier, te, 1, 0);
        return te;
    }

    // Hanging edge with its far vertex: the active and the sheet `partner`
    // each send one unit edge to a shared degree-2 vertex carrying the two
    // branch ends; every other strand bounces on its own degree-1 vertex.
    void hang(int tvB, int partner) {
        int tvC = b.new_target_vertex();
        int h = b.add_target_edge(tvB, tvC);
        int tb = b.add_branch_end(tvC, true);
        int tc = b.add_branch_end(tvC, true);
        int e1 = b.new_source_vertex(tvC);
        b.add_source_edge(active.frontier, e1, h, 1);
        b.add_source_edge(sheets[partner].frontier, e1, h, 1);
        b.add_source_end(e1, tb, 2, 0);
        b.add_source_end(e1, tc, 2, 0);
        auto bounce = [&](int from) {
            int bv = b.new_source_vertex(tvC);
            b.add_source_edge(from, bv, h, 1);
            b.add_source_end(bv, tb, 1, 0);
            b.add_source_end(bv, tc, 1, 0);
        };
        for (int r = 0; r < active.factor - 1; ++r) bounce(active.frontier);
        for (int s = 0; s < static_cast<int>(sheets.size()); ++s)
            if (sheets[s].alive && s != partner) bounce(sheets[s].frontier);
    }
};

} // namespace

TropicalCover build_cover(const GridCell& cell, const Params& params) {
    require_valid(params);
    const int g = params.g();
    const int ell = params.ell();
    const int d = params.d();
    const int n = params.n();
    if (g < 1)
        throw DomainError("build_cover: the construction needs at least one loop (g >= 1)");
    for (const auto& p : params.profiles())
        if (!p.is_simple())
            throw DomainError("build_cover: only simple profiles are supported");
    if (cell.merge_size != 1)
        throw DomainError("build_cover: cell carries a merged fragment class");
    if (static_cast<int>(cell.word.size()) != g - 1)
        throw DomainError("build_cover: word length must be g - 1");
    const int i = word_d_count(cell.word);
    const int m = i + ell;
    if (cell.joined_ends != m || cell.delta != g + 1 - 2 * i)
        throw DomainError("build_cover: cell data inconsistent with its word");
    const int j = cell.j;
    if (j < m + 1 || j > n - 2 - m)
        throw DomainError("build_cover: mark column outside the admissible band");

    const int delta = cell.delta;
    const int c1 = n - j - 2 - m;          // cut vertices before the witness tree
    const int c2 = (j >= 2) ? j - 2 : 0;   // cut vertices after the column mark
    const int levels = n - j - 2;          // witness-tree levels (M - 1)
    const int w = delta - c1;              // active factor across the tree vertex
    if (c1 < 0 || w < 1 || w + m != j)
        throw ConstructionFault("build_cover: fragment bookkeeping out of range");

    Builder b;
    b.c.g = g;
    b.c.ell = ell;
    b.c.d = d;
    b.c.n = n;
    b.c.cell = cell;

    // --- initial loop -------------------------------------------------------
    int p0 = b.new_target_vertex();
    int t1 = b.add_branch_end(p0, true);
    int t2 = b.add_branch_end(p0, true);
    int p1 = b.new_target_vertex();
    int eA = b.add_target_edge(p0, p1);
    int t3 = b.add_branch_end(p1, true);

    int A = b.new_source_vertex(p0);
    b.add_source_end(A, t1, 2, 0);
    b.add_source_end(A, t2, 2, 0);
    int B = b.new_source_vertex(p1);
    b.add_source_edge(A, B, eA, 1);
    b.add_source_edge(A, B, eA, 1);
    b.add_source_end(B, t3, 2, 0);

    ActiveStrand active{B, 2};
    std::vector<Sheet> sheets;
    const int num_init = (g - 1) - i;  // consumed by the joining letters
    for (int s = 0; s < d - 2; ++s) {
        int pv0 = b.new_source_vertex(p0);
        b.add_source_end(pv0, t1, 1, 0);
        b.add_source_end(pv0, t2, 1, 0);
        int pv1 = b.new_source_vertex(p1);
        b.add_source_edge(pv0, pv1, eA, 1);
        b.add_source_end(pv1, t3, 1, 0);
        Sheet sh;
        sh.frontier = pv1;
        if (s < num_init) {
            sh.role = Role::InitPassive;
        } else {
            sh.role = Role::Float;
            sh.tree_mark = n - c1 - (s - num_init + 1);
        }
        sheets.push_back(sh);
    }

    Spine spine{b, sheets, active, p1, {}};

    // --- loop chain: one letter per loop after the first --------------------
    for (char letter : cell.word) {
        if (letter == 'D') {
            int tvC = spine.open();
            spine.branch_here(tvC, true);
            Sheet residual;
            residual.frontier = active.frontier;
            residual.role = Role::Residual;
            sheets.push_back(residual);
            int residual_idx = static_cast<int>(sheets.size()) - 1;
            active.factor -= 1;
            int tvB = spine.open();
            spine.hang(tvB, residual_idx);
        } else { // 'U'
            int init_idx = -1;
            for (int s = 0; s < static_cast<int>(sheets.size()); ++s)
                if (sheets[s].alive && sheets[s].role == Role::InitPassive) {
                    init_idx = s;
                    break;
                }
            if (init_idx < 0)
                throw ConstructionFault("build_cover: no sheet available to join");
            int tvB = spine.open();
            spine.hang(tvB, init_idx);
            int tvC = spine.open(init_idx);
            active.factor += 1;
            spine.branch_here(tvC, true);
        }
    }
    if (active.factor != delta)
        throw ConstructionFault("build_cover: loop chain ended at the wrong factor");

    // --- cuts before the witness tree ---------------------------------------
    for (int q = 1; q <= c1; ++q) {
        int tv = spine.open();
        spine.branch_here(tv, false);
        Sheet cut;
        cut.frontier = active.frontier;
        cut.role = Role::CutTree;
        cut.tree_mark = n - q + 1;
        sheets.push_back(cut);
        active.factor -= 1;
    }

    // --- witness tree --------------------------------------------------------
    int tvW = spine.open();
    if (active.factor != w)
        throw ConstructionFault("build_cover: wrong factor at the witness tree");
    if (levels == 0) {
        // the top of the tree sits on the spine itself
        int me = b.add_mark_end(tvW, n);
        b.add_source_end(active.frontier, me, 1, n);
        for (int r = 1; r < w; ++r) b.add_source_end(active.frontier, me, 1, 0);
        for (const auto& s : sheets)
            if (s.alive) b.add_source_end(s.frontier, me, 1, 0);
    } else {
        spine.pending.armed = true;
        spine.pending.attach_tv = tvW;
        spine.pending.levels = levels;
        spine.pending.low_mark = j + 2;
        spine.pending.n = n;
        spine.pending.copies.push_back({active.frontier, n - c1});
        for (int r = 1; r < w; ++r) spine.pending.copies.push_back({active.frontier, 0});
        for (const auto& s : sheets)
            if (s.alive) spine.pending.copies.push_back({s.frontier, s.tree_mark});
    }

    if (j == 1) {
        // --- short right end: both low marks on the active strand ------------
        int tv = spine.open();
        int me2 = b.add_mark_end(tv, 2);
        int me1 = b.add_mark_end(tv, 1);
        b.add_source_end(active.frontier, me2, 1, 2);
        b.add_source_end(active.frontier, me1, 1, 1);
        for (const auto& s : sheets)
            if (s.alive) {
                b.add_source_end(s.frontier, me2, 1, 0);
                b.add_source_end(s.frontier, me1, 1, 0);
            }
    } else {
        // --- joins ------------------------------------------------------------
        for (int q = 1; q <= m; ++q) {
            int float_idx = -1;
            for (int s = 0; s < static_cast<int>(sheets.size()); ++s)
                if (sheets[s].alive && sheets[s].role == Role::Float &&
                    sheets[s].tree_mark == n - c1 - q) {
                    float_idx = s;
                    break;
                }
            if (float_idx < 0)
                throw ConstructionFault("build_cover: missing strand at a join");
            int tv = spine.open(float_idx);
            active.factor += 1;
            spine.branch_here(tv, false);
        }

        // --- column mark ------------------------------------------------------
        int tvX = spine.open();
        if (active.factor != j)
            throw ConstructionFault("build_cover: wrong factor at the column mark");
        int meX = b.add_mark_end(tvX, j + 1);
        b.add_source_end(active.frontier, meX, 1, j + 1);
        for (int r = 1; r < j; ++r) b.add_source_end(active.frontier, meX, 1, 0);
        for (const auto& s : sheets)
            if (s.alive) b.add_source_end(s.frontier, meX, 1, 0);

        // --- cuts after the column mark ---------------------------------------
        for (int q = 1; q <= c2; ++q) {
            int tv = spine.open();
            spine.branch_here(tv, false);
            Sheet cut;
            cut.frontier = active.frontier;
            cut.role = Role::CutLate;
            cut.late_mark = j + 1 - q;
            sheets.push_back(cut);
            active.factor -= 1;
        }

        // --- final cut ----------------------------------------------------------
        if (active.factor != 2)
            throw ConstructionFault("build_cover: wrong factor at the final cut");
        int tvF = spine.open();
        spine.branch_here(tvF, false);
        Sheet final_sheet;
        final_sheet.frontier = active.frontier;
        final_sheet.role = Role::FinalSheet;
        final_sheet.late_mark = 2;
        sheets.push_back(final_sheet);
        active.factor -= 1;

        // --- straight marks j .. 3 ---------------------------------------------
        for (int r = j; r >= 3; --r) {
            int tv = spine.open();
            int me = b.add_mark_end(tv, r);
            b.add_source_end(active.frontier, me, 1, 0);
            for (const auto& s : sheets)
                if (s.alive) b.add_source_end(s.frontier, me, 1, s.late_mark == r ? r : 0);
        }

        // --- right end -----------------------------------------------------------
        int tv = spine.open();
        int me2 = b.add_mark_end(tv, 2);
        int me1 = b.add_mark_end(tv, 1);
        b.add_source_end(active.frontier, me1, 1, 1);
        b.add_source_end(active.frontier, me2, 1, 0);
        for (const auto& s : sheets)
            if (s.alive) {
                b.add_source_end(s.frontier, me2, 1, s.late_mark == 2 ? 2 : 0);
                b.add_source_end(s.frontier, me1, 1, 0);
            }
    }

    if (static_cast<int>(b.c.target_edges.size()) != 5 * g + 4 * ell)
        throw ConstructionFault("build_cover: length-symbol count is off");

    ValidityReport report = validate_cover(b.c);
    if (!report.ok) {
        std::ostringstream os;
        os << "build_cover: invariant check failed:";
        for (const auto& msg : report.violations) os << " [" << msg << "]";
        throw ConstructionFault(os.str());
    }
    return b.c;
}

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

ValidityReport validate_cover(const TropicalCover& cover) {
    ValidityReport report;
    auto fail = [&](const std::string& code, const std::string& msg) {
        report.fail(code + ": " + msg);
    };

    const int ntv = cover.num_target_vertices;
    const int nte = static_cast<int>(cover.target_edges.size());
    const int nsv = static_cast<int>(cover.source_vertices.size());

    // --- index sanity ---------------------------------------------------------
    bool indices_ok = true;
    for (const auto& e : cover.target_edges)
        if (e.u < 0 || e.u >= ntv || e.v < 0 || e.v >= ntv || e.u == e.v) indices_ok = false;
    for (const auto& e : cover.target_ends)
        if (e.vertex < 0 || e.vertex >= ntv) indices_ok = false;
    for (const auto& v : cover.source_vertices)
        if (v.over < 0 || v.over >= ntv || v.genus < 0) indices_ok = false;
    for (const auto& e : cover.source_edges)
        if (e.u < 0 || e.u >= nsv || e.v < 0 || e.v >= nsv || e.over_edge < 0 ||
            e.over_edge >= nte || e.factor < 1)
            indices_ok = false;
    for (const auto& e : cover.source_ends)
        if (e.vertex < 0 || e.vertex >= nsv || e.over_end < 0 ||
            e.over_end >= static_cast<int>(cover.target_ends.size()) || e.factor < 1)
            indices_ok = false;
    if (!indices_ok) {
        fail("cover-indices", "a reference is out of range, a factor is < 1, or a target edge is a loop");
        return report; // everything below needs valid indices
    }

    // --- target is a tree --------------------------------------------------------
    {
        std::vector<int> parent(ntv);
        for (int v = 0; v < ntv; ++v) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int merges = 0;
        bool cycle = false;
        for (const auto& e : cover.target_edges) {
            int a = find(e.u), b = find(e.v);
            if (a == b) cycle = true;
            else { parent[a] = b; ++merges; }
        }
        if (cycle || merges != ntv - 1)
            fail("target-tree", "target graph is not a tree");
    }

    // --- source edges sit over their target edges -----------------------------
    for (std::size_t k = 0; k < cover.source_edges.size(); ++k) {
        const auto& e = cover.source_edges[k];
        const auto& te = cover.target_edges[e.over_edge];
        int fu = cover.source_vertices[e.u].over;
        int fv = cover.source_vertices[e.v].over;
        bool straight = (fu == te.u && fv == te.v) || (fu == te.v && fv == te.u);
        if (!straight)
            fail("edge-over", "source edge " + std::to_string(k) +
                                  " does not span its target edge");
    }
    for (std::size_t k = 0; k < cover.source_ends.size(); ++k) {
        const auto& e = cover.source_ends[k];
        if (cover.source_vertices[e.vertex].over != cover.target_ends[e.over_end].vertex)
            fail("end-over", "source end " + std::to_string(k) +
                                 " is not attached over its target end");
    }
    if (!report.ok) return report;

    // --- constant fiber degree --------------------------------------------------
    {
        std::vector<long long> edge_weight(nte, 0);
        for (const auto& e : cover.source_edges) edge_weight[e.over_edge] += e.factor;
        for (int k = 0; k < nte; ++k)
            if (edge_weight[k] != cover.d)
                fail("fiber-degree", "fiber over target edge " + std::to_string(k) +
                                         " has total weight " + std::to_string(edge_weight[k]) +
                                         ", expected " + std::to_string(cover.d));
        std::vector<long long> end_weight(cover.target_ends.size(), 0);
        for (const auto& e : cover.source_ends) end_weight[e.over_end] += e.factor;
        for (std::size_t k = 0; k < cover.target_ends.size(); ++k)
            if (end_weight[k] != cover.d)
                fail("fiber-degree", "fiber over target end " + std::to_string(k) +
                                         " has total weight " + std::to_string(end_weight[k]) +
                                         ", expected " + std::to_string(cover.d));
    }

    // --- harmonicity and local degrees -------------------------------------------
    // direction key: (false, target edge index) or (true, target end index)
    std::vector<std::map<std::pair<bool, int>, long long>> weight(nsv);
    std::vector<int> valence(nsv, 0);
    for (const auto& e : cover.source_edges) {
        weight[e.u][{false, e.over_edge}] += e.factor;
        weight[e.v][{false, e.over_edge}] += e.factor;
        ++valence[e.u];
        ++valence[e.v];
    }
    for (const auto& e : cover.source_ends) {
        weight[e.vertex][{true, e.over_end}] += e.factor;
        ++valence[e.vertex];
    }
    std::vector<std::vector<std::pair<bool, int>>> target_directions(ntv);
    for (int k = 0; k < nte; ++k) {
        target_directions[cover.target_edges[k].u].push_back({false, k});
        target_directions[cover.target_edges[k].v].push_back({false, k});
    }
    for (std::size_t k = 0; k < cover.target_ends.size(); ++k)
        target_directions[cover.target_ends[k].vertex].push_back({true, static_cast<int>(k)});

    std::vector<long long> local_degree(nsv, 0);
    for (int v = 0; v < nsv; ++v) {
        const int tv = cover.source_vertices[v].over;
        const auto& dirs = target_directions[tv];
        long long dv = -1;
        bool harmonic = true;
        for (const auto& dir : dirs) {
            auto it = weight[v].find(dir);
            long long wgt = (it == weight[v].end()) ? 0 : it->second;
            if (dv < 0) dv = wgt;
            else if (wgt != dv) harmonic = false;
        }
        if (!harmonic || dv <= 0) {
            fail("harmonic", "source vertex " + std::to_string(v) +
                                 " has unbalanced direction weights");
            continue;
        }
        local_degree[v] = dv;
        const int target_valence = static_cast<int>(dirs.size());
        long long lhs = valence[v] + 2LL * cover.source_vertices[v].genus - 2;
        long long rhs = dv * (target_valence - 2);
        if (lhs != rhs)
            fail("riemann-hurwitz", "source vertex " + std::to_string(v) +
                                        " violates the local count (" + std::to_string(lhs) +
                                        " != " + std::to_string(rhs) + ")");
    }

    // --- branch and mark fibers ----------------------------------------------------
    int branch_total = 0;
    int branch_genus = 0;
    std::map<int, int> mark_seen;
    for (std::size_t k = 0; k < cover.target_ends.size(); ++k) {
        const auto& te = cover.target_ends[k];
        std::vector<int> factors;
        int marked_count = 0;
        int marked_label = 0;
        for (const auto& e : cover.source_ends)
            if (e.over_end == static_cast<int>(k)) {
                factors.push_back(e.factor);
                if (e.mark != 0) {
                    ++marked_count;
                    marked_label = e.mark;
                }
            }
        std::sort(factors.begin(), factors.end(), std::greater<int>());
        if (te.is_mark) {
            ++mark_seen[te.label];
            bool units = std::all_of(factors.begin(), factors.end(),
                                     [](int f) { return f == 1; });
            if (!units || static_cast<int>(factors.size()) != cover.d ||
                marked_count != 1 || marked_label != te.label)
                fail("mark-fiber", "mark " + std::to_string(te.label) +
                                       " does not have d unit preimages with one marked point");
        } else {
            ++branch_total;
            if (te.genus_part) ++branch_genus;
            bool simple = !factors.empty() && factors[0] == 2 &&
                          std::all_of(factors.begin() + 1, factors.end(),
                                      [](int f) { return f == 1; });
            if (!simple || marked_count != 0)
                fail("branch-simple", "branch end " + std::to_string(te.label) +
                                          " is not simple");
        }
    }
    for (int r = 1; r <= cover.n; ++r)
        if (mark_seen[r] != 1)
            fail("mark-set", "mark " + std::to_string(r) + " appears " +
                                 std::to_string(mark_seen[r]) + " times");
    if (branch_total != 4 * cover.g + 2 * cover.ell || branch_genus != 3 * cover.g)
        fail("branch-count", "expected " + std::to_string(4 * cover.g + 2 * cover.ell) +
                                 " branch ends with " + std::to_string(3 * cover.g) +
                                 " in the loop chain, found " + std::to_string(branch_total) +
                                 "/" + std::to_string(branch_genus));

    // --- source connectivity and first Betti number --------------------------------
    if (nsv > 0) {
        std::vector<int> parent(nsv);
        for (int v = 0; v < nsv; ++v) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int merges = 0;
        for (const auto& e : cover.source_edges) {
            int a = find(e.u), b = find(e.v);
            if (a != b) { parent[a] = b; ++merges; }
        }
        if (merges != nsv - 1) fail("connected", "source graph is not connected");
        else {
            long long b1 = static_cast<long long>(cover.source_edges.size()) - nsv + 1;
            long long genus_sum = 0;
            for (const auto& v : cover.source_vertices) genus_sum += v.genus;
            if (b1 + genus_sum != cover.g)
                fail("betti", "source genus is " + std::to_string(b1 + genus_sum) +
                                  ", expected " + std::to_string(cover.g));
        }
    }

    return report;
}

} // namespace tevtrop
