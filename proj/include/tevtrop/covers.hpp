#pragma once

#include <string>
#include <vector>

#include "tevtrop/core.hpp"
#include "tevtrop/grid.hpp"
#include "tevtrop/hurwitz.hpp"

namespace tevtrop {

// ---------------------------------------------------------------------------
// Raw covers.
//
// The target is a metric tree: vertices 0..num_target_vertices-1, compact
// edges (one length symbol y_k per edge, k = position in target_edges), and
// labelled infinite ends (marks and simple branch points).  The source is a
// graph mapped onto the target edge-by-edge with integer expansion factors;
// infinite source ends lie over target ends.  Lengths are formal: a source
// edge over target edge k with factor f has length (max_factor_k / f) * y_k,
// where max_factor_k is the largest expansion factor in the fiber over k.
// ---------------------------------------------------------------------------

struct TargetEnd {
    int vertex = -1;
    bool is_mark = false;   // mark end (label = mark index) vs branch end
    int label = 0;          // mark index, or branch-point index
    bool genus_part = false; // branch ends only: lies in the genus part
};

struct TargetEdge {
    int u = -1;
    int v = -1;
};

struct SourceVertex {
    int over = -1;  // target vertex
    int genus = 0;  // always 0 for built covers; mutations may set it
};

struct SourceEdge {
    int u = -1;
    int v = -1;
    int over_edge = -1; // index into target_edges
    int factor = 1;     // expansion factor
};

struct SourceEnd {
    int vertex = -1;
    int over_end = -1;  // index into target_ends
    int factor = 1;
    int mark = 0;       // mark index carried by this end; 0 = unmarked
};

struct TropicalCover {
    int g = 0;
    int ell = 0;
    int d = 1;
    int n = 3;
    GridCell cell;
    int num_target_vertices = 0;
    std::vector<TargetEdge> target_edges; // index == length symbol y
    std::vector<TargetEnd> target_ends;
    std::vector<SourceVertex> source_vertices;
    std::vector<SourceEdge> source_edges;
    std::vector<SourceEnd> source_ends;
};

// Build the explicit cover realizing a grid cell (simple profiles, g >= 1).
// The genus part realizes cell.word left to right; the marked part places
// the cell's fragment as cuts, then joins, then the remaining cuts.  Length
// symbols are allocated in construction order and number exactly 5g + 4*ell.
TropicalCover build_cover(const GridCell& cell, const Params& params);

// Checks harmonicity, local Riemann-Hurwitz, fiber-degree constancy over
// every target edge and end, and branch-end counts; lists every violation.
ValidityReport validate_cover(const TropicalCover& cover);

// ---------------------------------------------------------------------------
// Stabilization.
// ---------------------------------------------------------------------------

struct StableVertex {
    std::vector<int> marks; // descending
};

struct StableEdge {
    int u = -1;
    int v = -1;
    std::vector<BigInt> length; // coefficients over y_0..y_{num_symbols-1}
};

struct StableGraph {
    std::vector<StableVertex> vertices;
    std::vector<StableEdge> edges; // canonical row order
    int num_symbols = 0;
};

struct StabilizedCover {
    StableGraph source; // chain of g loops, then the marked caterpillar
    StableGraph target; // the n-mark caterpillar
};

// Removes unmarked ends and branch ends, prunes and smooths the resulting
// <= 2-valent unmarked vertices, absorbs 2-valent marked joints into their
// mark, and verifies both canonical shapes.  Edge order: source self-loop,
// then per genus banana (bridge, short arc, long arc), then the marked chain
// left to right; target caterpillar left to right.
// Throws StabilizationMismatch when the stable type deviates.
StabilizedCover stabilize(const TropicalCover& cover);

// ---------------------------------------------------------------------------
// Dilation matrix and multiplicity.
// ---------------------------------------------------------------------------

struct DilationMatrix {
    std::vector<std::string> row_labels; // x1..x_{3g-3+n}, then L1..L_{n-3}
    std::vector<std::vector<BigInt>> rows;
};

// Rows: stabilized source edge lengths, then stabilized target edge lengths,
// as integer linear functions of the y symbols.  Square of size 5g + 4*ell;
// NonSquareFault otherwise.
DilationMatrix dilation_matrix(const TropicalCover& cover);

// Leading principal block of size 3g - 2 covering the genus-part rows and
// columns; verifies that those rows have no support outside the block.
DilationMatrix genus_block(const DilationMatrix& m, int g);

// Signed determinant by fraction-free (Bareiss) elimination.
BigInt exact_determinant(const DilationMatrix& m);

struct MultiplicityReport {
    BigRat automorphism_factor; // |Aut(stable source)| / |Aut(cover)|
    BigRat vertex_factor;       // product of local Hurwitz numbers
    BigInt det_abs;             // |det| of the dilation matrix
    BigRat edge_factor;         // prod over target edges: (prod m_e') / lcm
    BigRat value;               // product of the four factors
};

// The local-degree product for the cover.  Every cover built from a simple-
// profile grid cell evaluates to exactly 1.
MultiplicityReport multiplicity(const TropicalCover& cover);

// Isomorphism-invariant fingerprint: a serialization of the marked target
// tree together with fiber data (expansion factors, local degrees) rooted at
// the {2,1} end vertex.  Distinct fingerprints certify non-isomorphic covers.
std::string cover_fingerprint(const TropicalCover& cover);

} // namespace tevtrop
