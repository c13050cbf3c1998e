#pragma once
// Serialization of instances, grids, and covers: JSON, CSV, and DOT.
//
// All numeric payloads are rendered as exact decimal strings so that output
// is independent of platform integer widths and byte-identical across runs.

#include "tevtrop/core.hpp"
#include "tevtrop/covers.hpp"
#include "tevtrop/grid.hpp"

#include <json.hpp>

#include <string>

namespace tevtrop {

// Exact decimal rendering.  rat_string prints "p" when the denominator is
// one and "p/q" otherwise, always in lowest terms.
std::string int_string(const BigInt& v);
std::string rat_string(const BigRat& r);

// {"g": ..., "ell": ..., "mu": [[...], ...]}
nlohmann::json instance_json(const Params& params);

// {"cells": [{"word", "j", "delta", "joined_ends", "merge_size"}, ...]}
nlohmann::json grid_json(const Grid& grid);

// Structure of one cover: the target tree and the source curve with
// vertices, edges (carrying expansion factors), and labelled ends.
nlohmann::json cover_json(const TropicalCover& cover);

// Multiplicity ledger: the automorphism, vertex, determinant, and edge
// factors together with their product.
nlohmann::json multiplicity_json(const MultiplicityReport& rep);

// Dilation matrix as {"rows": [{"label", "entries": ["0", "1", ...]}, ...]}.
nlohmann::json matrix_json(const DilationMatrix& matrix);

// Standard envelope: {"instance": ..., "result": ..., "meta": {"version",
// "provenance"}}.  Every CLI JSON document goes through this function.
nlohmann::json envelope_json(const Params& params, nlohmann::json result,
                             const std::string& provenance);

// CSV with header "word,j,delta,joined_ends,merge_size"; the empty word is
// rendered as "-".
std::string grid_csv(const Grid& grid);

// One undirected DOT graph of the source curve.  Edges are labelled with
// their expansion factors; vertices are labelled with the marks whose ends
// they carry.  `index` numbers the graph (cover1, cover2, ...).
std::string cover_dot(const TropicalCover& cover, int index);

}  // namespace tevtrop
