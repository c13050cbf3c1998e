#include "tevtrop/io.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace tevtrop {

namespace {

constexpr const char* kVersion = "1.0.0";

nlohmann::json cell_json(const GridCell& cell) {
  nlohmann::json c;
  c["word"] = cell.word;
  c["j"] = cell.j;
  c["delta"] = cell.delta;
  c["joined_ends"] = cell.joined_ends;
  c["merge_size"] = cell.merge_size;
  return c;
}

}  // namespace

std::string int_string(const BigInt& v) { return v.str(); }

std::string rat_string(const BigRat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

nlohmann::json instance_json(const Params& params) {
  nlohmann::json j;
  j["g"] = params.g();
  j["ell"] = params.ell();
  nlohmann::json mu = nlohmann::json::array();
  for (const Profile& p : params.profiles()) {
    mu.push_back(p.parts);
  }
  j["mu"] = mu;
  return j;
}

nlohmann::json grid_json(const Grid& grid) {
  nlohmann::json j;
  nlohmann::json cells = nlohmann::json::array();
  for (const GridCell& cell : grid.cells) cells.push_back(cell_json(cell));
  j["cells"] = cells;
  return j;
}

nlohmann::json cover_json(const TropicalCover& cover) {
  nlohmann::json j;
  j["cell"] = cell_json(cover.cell);

  nlohmann::json target;
  target["num_vertices"] = cover.num_target_vertices;
  nlohmann::json tedges = nlohmann::json::array();
  for (const TargetEdge& e : cover.target_edges) {
    tedges.push_back(nlohmann::json::array({e.u, e.v}));
  }
  target["edges"] = tedges;
  nlohmann::json tends = nlohmann::json::array();
  for (const TargetEnd& e : cover.target_ends) {
    nlohmann::json t;
    t["vertex"] = e.vertex;
    if (e.is_mark) {
      t["mark"] = e.label;
    } else {
      t["branch"] = e.label;
      t["genus_part"] = e.genus_part;
    }
    tends.push_back(t);
  }
  target["ends"] = tends;
  j["target"] = target;

  nlohmann::json source;
  nlohmann::json svertices = nlohmann::json::array();
  for (const SourceVertex& v : cover.source_vertices) {
    nlohmann::json t;
    t["over"] = v.over;
    t["genus"] = v.genus;
    svertices.push_back(t);
  }
  source["vertices"] = svertices;
  nlohmann::json sedges = nlohmann::json::array();
  for (const SourceEdge& e : cover.source_edges) {
    nlohmann::json t;
    t["u"] = e.u;
    t["v"] = e.v;
    t["over_edge"] = e.over_edge;
    t["factor"] = e.factor;
    sedges.push_back(t);
  }
  source["edges"] = sedges;
  nlohmann::json sends = nlohmann::json::array();
  for (const SourceEnd& e : cover.source_ends) {
    nlohmann::json t;
    t["vertex"] = e.vertex;
    t["over_end"] = e.over_end;
    t["factor"] = e.factor;
    if (e.mark != 0) t["mark"] = e.mark;
    sends.push_back(t);
  }
  source["ends"] = sends;
  j["source"] = source;
  return j;
}

nlohmann::json multiplicity_json(const MultiplicityReport& rep) {
  nlohmann::json j;
  j["automorphism_factor"] = rat_string(rep.automorphism_factor);
  j["vertex_factor"] = rat_string(rep.vertex_factor);
  j["determinant"] = int_string(rep.det_abs);
  j["edge_factor"] = rat_string(rep.edge_factor);
  j["value"] = rat_string(rep.value);
  return j;
}

nlohmann::json matrix_json(const DilationMatrix& matrix) {
  nlohmann::json j;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < matrix.rows.size(); ++r) {
    nlohmann::json row;
    row["label"] = matrix.row_labels[r];
    nlohmann::json entries = nlohmann::json::array();
    for (const BigInt& e : matrix.rows[r]) entries.push_back(int_string(e));
    row["entries"] = entries;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

nlohmann::json envelope_json(const Params& params, nlohmann::json result,
                             const std::string& provenance) {
  nlohmann::json j;
  j["instance"] = instance_json(params);
  j["result"] = std::move(result);
  j["meta"] = {{"version", kVersion}, {"provenance", provenance}};
  return j;
}

std::string grid_csv(const Grid& grid) {
  std::ostringstream out;
  out << "word,j,delta,joined_ends,merge_size\n";
  for (const GridCell& cell : grid.cells) {
    out << (cell.word.empty() ? "-" : cell.word) << ',' << cell.j << ','
        << cell.delta << ',' << cell.joined_ends << ',' << cell.merge_size
        << '\n';
  }
  return out.str();
}

std::string cover_dot(const TropicalCover& cover, int index) {
  std::ostringstream out;
  out << "graph cover" << index << " {\n";
  out << "  // source curve over cell word="
      << (cover.cell.word.empty() ? "-" : cover.cell.word)
      << " j=" << cover.cell.j << "\n";

  std::map<int, std::vector<int>> marks;
  for (const SourceEnd& e : cover.source_ends) {
    if (e.mark != 0) marks[e.vertex].push_back(e.mark);
  }
  for (int v = 0; v < static_cast<int>(cover.source_vertices.size()); ++v) {
    out << "  s" << v;
    auto it = marks.find(v);
    if (it != marks.end()) {
      out << " [label=\"";
      for (std::size_t k = 0; k < it->second.size(); ++k) {
        if (k) out << ',';
        out << it->second[k];
      }
      out << "\"]";
    } else {
      out << " [label=\"\"]";
    }
    out << ";\n";
  }
  for (const SourceEdge& e : cover.source_edges) {
    out << "  s" << e.u << " -- s" << e.v << " [label=\"" << e.factor
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tevtrop
