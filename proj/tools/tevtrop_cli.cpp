// tevtrop: tropical Tevelev degrees three ways (formula, grid, covers),
// plus local Hurwitz evaluation and cross-route consistency scans.
//
// Exit codes: 0 success, 1 internal fault or failed check, 2 invalid input,
// 3 query outside the oracle's range.

#include "tevtrop/core.hpp"
#include "tevtrop/covers.hpp"
#include "tevtrop/formulas.hpp"
#include "tevtrop/grid.hpp"
#include "tevtrop/hurwitz.hpp"
#include "tevtrop/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace tevtrop;

// --------------------------------------------------------------------------
// Shared helpers.
// --------------------------------------------------------------------------

std::vector<Profile> parse_profiles(const std::string& text) {
  std::vector<Profile> out;
  std::istringstream stream(text);
  std::string group;
  while (std::getline(stream, group, ';')) {
    std::vector<int> parts;
    std::istringstream group_stream(group);
    std::string token;
    while (std::getline(group_stream, token, ',')) {
      const std::size_t a = token.find_first_not_of(" \t");
      const std::size_t b = token.find_last_not_of(" \t");
      if (a == std::string::npos) {
        throw DomainError("profiles: empty part in \"" + text + "\"");
      }
      token = token.substr(a, b - a + 1);
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = std::string::npos;
      }
      if (used != token.size()) {
        throw DomainError("profiles: cannot parse part \"" + token + "\"");
      }
      parts.push_back(value);
    }
    if (parts.empty()) {
      throw DomainError("profiles: empty profile in \"" + text + "\"");
    }
    out.emplace_back(std::move(parts));
  }
  if (out.empty()) {
    throw DomainError("profiles: no profiles in \"" + text + "\"");
  }
  return out;
}

// Parts within each profile and profiles by magnitude are put in descending
// order; a warning is printed when the input was not already ordered.
std::vector<Profile> normalize_profiles(std::vector<Profile> mus) {
  bool changed = false;
  for (Profile& mu : mus) {
    if (!std::is_sorted(mu.parts.begin(), mu.parts.end(),
                        std::greater<int>())) {
      std::sort(mu.parts.begin(), mu.parts.end(), std::greater<int>());
      changed = true;
    }
  }
  for (std::size_t h = 1; h < mus.size(); ++h) {
    if (mus[h].magnitude() > mus[h - 1].magnitude()) {
      std::stable_sort(mus.begin(), mus.end(),
                       [](const Profile& a, const Profile& b) {
                         return a.magnitude() > b.magnitude();
                       });
      changed = true;
      break;
    }
  }
  if (changed) {
    std::cerr << "warning: profiles normalized to descending order\n";
  }
  return mus;
}

Params make_params(int g, int ell, const std::string& mu_text) {
  if (mu_text.empty()) return Params::all_simple(g, ell);
  return Params(g, ell, normalize_profiles(parse_profiles(mu_text)));
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file: " + out_path);
  file << payload;
}

std::string json_text(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

std::string show_word(const std::string& word) {
  return word.empty() ? "-" : word;
}

// --------------------------------------------------------------------------
// deg
// --------------------------------------------------------------------------

struct DegOpts {
  int g = 0;
  int ell = 0;
  std::string mu;
  std::string format = "text";
  std::string out;
};

int run_deg(const DegOpts& o) {
  Params params = make_params(o.g, o.ell, o.mu);
  const DegreeValue dv =
      o.mu.empty() ? tev_ell(o.g, o.ell) : tev_general(params);
  std::string payload;
  if (o.format == "text") {
    payload = int_string(dv.value) + "\n";
  } else {
    nlohmann::json result;
    result["value"] = int_string(dv.value);
    payload = json_text(
        envelope_json(params, std::move(result), to_string(dv.provenance)));
  }
  emit(o.out, payload);
  return 0;
}

// --------------------------------------------------------------------------
// grid
// --------------------------------------------------------------------------

struct GridOpts {
  int g = 0;
  int ell = 0;
  std::string mu;
  std::string format = "text";
  std::string out;
};

int run_grid(const GridOpts& o) {
  if (o.g < 1) {
    throw DomainError("grid enumeration requires g >= 1");
  }
  Params params = make_params(o.g, o.ell, o.mu);
  require_valid(params);
  const Grid grid =
      o.mu.empty() ? build_grid(o.g, o.ell) : build_grid_general(params);
  std::string payload;
  if (o.format == "csv") {
    payload = grid_csv(grid);
  } else if (o.format == "json") {
    nlohmann::json result = grid_json(grid);
    result["count"] = grid.cells.size();
    payload = json_text(
        envelope_json(params, std::move(result), "grid-enumeration"));
  } else {
    std::ostringstream text;
    for (const GridCell& cell : grid.cells) {
      text << "word=" << show_word(cell.word) << " j=" << cell.j
           << " delta=" << cell.delta << " joined_ends=" << cell.joined_ends
           << " merge_size=" << cell.merge_size << "\n";
    }
    payload = text.str();
  }
  emit(o.out, payload);
  return 0;
}

// --------------------------------------------------------------------------
// covers
// --------------------------------------------------------------------------

struct CoversOpts {
  int g = 0;
  int ell = 0;
  std::string mu;
  std::string format = "text";
  std::string out;
};

int run_covers(const CoversOpts& o) {
  if (!o.mu.empty()) {
    const std::vector<Profile> mus = parse_profiles(o.mu);
    const bool simple = std::all_of(mus.begin(), mus.end(),
                                    [](const Profile& p) { return p.is_simple(); });
    if (!simple) {
      throw DomainError(
          "cover construction handles only all-simple profiles; "
          "generalized profiles are resolved by deg and grid");
    }
  }
  if (o.g < 1) {
    throw DomainError("cover construction requires g >= 1");
  }
  Params params = Params::all_simple(o.g, o.ell);
  require_valid(params);

  const Grid grid = build_grid(o.g, o.ell);
  std::vector<TropicalCover> covers;
  std::vector<MultiplicityReport> reports;
  covers.reserve(grid.cells.size());
  for (const GridCell& cell : grid.cells) {
    covers.push_back(build_cover(cell, params));
    reports.push_back(multiplicity(covers.back()));
  }

  if (o.format == "dot") {
    if (o.out.empty()) {
      std::string payload;
      for (std::size_t i = 0; i < covers.size(); ++i) {
        payload += cover_dot(covers[i], static_cast<int>(i) + 1);
      }
      std::cout << payload;
    } else {
      for (std::size_t i = 0; i < covers.size(); ++i) {
        const std::string path = o.out + std::to_string(i + 1) + ".dot";
        emit(path, cover_dot(covers[i], static_cast<int>(i) + 1));
      }
    }
    return 0;
  }

  if (o.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    BigRat total = 0;
    for (std::size_t i = 0; i < covers.size(); ++i) {
      nlohmann::json entry = cover_json(covers[i]);
      entry["multiplicity"] = rat_string(reports[i].value);
      entry["factors"] = multiplicity_json(reports[i]);
      list.push_back(std::move(entry));
      total += reports[i].value;
    }
    nlohmann::json result;
    result["covers"] = std::move(list);
    result["count"] = covers.size();
    result["sum"] = rat_string(total);
    emit(o.out, json_text(envelope_json(params, std::move(result),
                                        "cover-construction")));
    return 0;
  }

  std::ostringstream text;
  BigRat total = 0;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const GridCell& cell = covers[i].cell;
    const MultiplicityReport& rep = reports[i];
    text << "cover " << (i + 1) << ": word=" << show_word(cell.word)
         << " j=" << cell.j << " delta=" << cell.delta
         << " joined_ends=" << cell.joined_ends
         << " multiplicity=" << rat_string(rep.value) << " (aut="
         << rat_string(rep.automorphism_factor)
         << ", vertex=" << rat_string(rep.vertex_factor)
         << ", det=" << int_string(rep.det_abs)
         << ", edge=" << rat_string(rep.edge_factor) << ")\n";
    total += rep.value;
  }
  text << "covers: " << covers.size() << ", multiplicity sum: "
       << rat_string(total) << "\n";
  emit(o.out, text.str());
  return 0;
}

// --------------------------------------------------------------------------
// check
// --------------------------------------------------------------------------

struct CheckOpts {
  std::string lemma;
  int d_max = 30;
  int g_max = 8;
  std::string format = "text";
  std::string out;
};

struct ScanResult {
  std::string name;
  std::string bound;
  bool pass = false;
  std::string detail;  // counterexample or error text when failing
  long long count = 0; // instances examined
};

// Descending magnitude tuples (>= 3 entries, each <= cap, summing to n).
void magnitude_tuples(int remaining, int cap, std::vector<int>& current,
                      const std::function<void(const std::vector<int>&)>& fn) {
  if (remaining == 0) {
    if (current.size() >= 3) fn(current);
    return;
  }
  for (int m = std::min(cap, remaining); m >= 1; --m) {
    current.push_back(m);
    magnitude_tuples(remaining - m, m, current, fn);
    current.pop_back();
  }
}

ScanResult scan_formula_grid(int g_max) {
  ScanResult r{"formula-grid",
               "g <= " + std::to_string(g_max) + ", |ell| <= 3"};
  r.pass = true;
  for (int g = 1; g <= g_max && r.pass; ++g) {
    for (int ell = -3; ell <= 3 && r.pass; ++ell) {
      const int d = g + 1 + ell;
      const int n = g + 3 + 2 * ell;
      if (d < 1 || n < 3) continue;
      const BigInt formula = tev_ell(g, ell).value;
      const Grid grid = build_grid(g, ell);
      ++r.count;
      if (formula != BigInt(grid.cells.size())) {
        r.pass = false;
        r.detail = "g=" + std::to_string(g) + " ell=" + std::to_string(ell) +
                   ": formula " + formula.str() + " vs " +
                   std::to_string(grid.cells.size()) + " cells";
      }
    }
  }
  return r;
}

ScanResult scan_general_grid(int g_max) {
  ScanResult r{"general-grid",
               "g <= " + std::to_string(g_max) + ", |ell| <= 2"};
  r.pass = true;
  for (int g = 1; g <= g_max && r.pass; ++g) {
    for (int ell = -2; ell <= 2 && r.pass; ++ell) {
      const int d = g + 1 + ell;
      const int n = g + 3 + 2 * ell;
      if (d < 1 || n < 3) continue;
      std::vector<int> tuple;
      magnitude_tuples(n, d, tuple, [&](const std::vector<int>& mags) {
        if (!r.pass) return;
        std::vector<Profile> mus;
        for (int m : mags) mus.emplace_back(std::vector<int>{m});
        Params params(g, ell, std::move(mus));
        const BigInt formula = tev_general(params).value;
        const Grid grid = build_grid_general(params);
        ++r.count;
        if (formula != BigInt(grid.cells.size())) {
          r.pass = false;
          std::string tag;
          for (int m : mags) tag += std::to_string(m) + ";";
          r.detail = "g=" + std::to_string(g) + " ell=" +
                     std::to_string(ell) + " mu=" + tag + " formula " +
                     formula.str() + " vs " +
                     std::to_string(grid.cells.size()) + " classes";
        }
      });
    }
  }
  return r;
}

ScanResult scan_multiplicity(int g_max) {
  ScanResult r{"multiplicity-one",
               "g <= " + std::to_string(g_max) + ", |ell| <= 2"};
  r.pass = true;
  for (int g = 1; g <= g_max && r.pass; ++g) {
    for (int ell = -2; ell <= 2 && r.pass; ++ell) {
      const int d = g + 1 + ell;
      const int n = g + 3 + 2 * ell;
      if (d < 1 || n < 3) continue;
      Params params = Params::all_simple(g, ell);
      for (const GridCell& cell : build_grid(g, ell).cells) {
        const TropicalCover cover = build_cover(cell, params);
        const MultiplicityReport rep = multiplicity(cover);
        ++r.count;
        if (rep.value != 1) {
          r.pass = false;
          r.detail = "g=" + std::to_string(g) + " ell=" +
                     std::to_string(ell) + " word=" + show_word(cell.word) +
                     " j=" + std::to_string(cell.j) + ": multiplicity " +
                     rat_string(rep.value);
          break;
        }
      }
    }
  }
  return r;
}

ScanResult scan_hurwitz(int d_max) {
  ScanResult r{"hurwitz-catalog", "d <= " + std::to_string(d_max)};
  r.pass = true;
  for (int d = 1; d <= d_max && r.pass; ++d) {
    const auto parts = partitions_of(d);
    for (const auto& p1 : parts) {
      for (const auto& p2 : parts) {
        for (const auto& p3 : parts) {
          for (int marked = 0; marked <= 1 && r.pass; ++marked) {
            LocalHurwitzQuery q;
            q.d = d;
            q.profiles = {Profile(p1), Profile(p2), Profile(p3)};
            q.marked = marked != 0;
            const auto catalogued = local_hurwitz_catalog(q);
            if (!catalogued) continue;
            ++r.count;
            const BigRat oracle = local_hurwitz_oracle(q);
            if (*catalogued != oracle) {
              r.pass = false;
              r.detail = "d=" + std::to_string(d) + " marked=" +
                         std::to_string(marked) + ": catalog " +
                         rat_string(*catalogued) + " vs oracle " +
                         rat_string(oracle);
            }
          }
          if (!r.pass) break;
        }
        if (!r.pass) break;
      }
      if (!r.pass) break;
    }
  }
  return r;
}

ScanResult scan_l2(int d_max) {
  ScanResult r{"l2-bound", "d <= " + std::to_string(d_max)};
  r.pass = true;
  for (int d = 2; d <= d_max; ++d) {
    for (int j1 = 0; 2 * (j1) <= d - 1; ++j1) {
      for (int j2 = 0; 2 * (j1 + j2) <= d - 1; ++j2) {
        for (int L2 = 4; L2 <= d - 2; ++L2) {
          for (int L3 = L2; L2 + L3 <= d - 2; ++L3) {
            const int L1 = d - 2 - L2 - L3;
            ++r.count;
            if (l2_decomposition_exists(d, j1, j2, L1, L2, L3)) {
              r.pass = false;
              r.detail = "L2 >= 4 is feasible: d=" + std::to_string(d) +
                         " j1=" + std::to_string(j1) + " j2=" +
                         std::to_string(j2) + " lengths=(" +
                         std::to_string(L1) + "," + std::to_string(L2) +
                         "," + std::to_string(L3) + ")";
              return r;
            }
          }
        }
      }
    }
  }
  return r;
}

int run_check(const CheckOpts& o) {
  std::vector<ScanResult> scans;
  const bool all = o.lemma.empty();
  try {
    if (all) {
      scans.push_back(scan_formula_grid(o.g_max));
      scans.push_back(scan_general_grid(std::min(o.g_max, 5)));
      scans.push_back(scan_multiplicity(std::min(o.g_max, 4)));
      scans.push_back(scan_hurwitz(5));
    }
    if (all || o.lemma == "l2") {
      scans.push_back(scan_l2(o.d_max));
    }
  } catch (const std::exception& e) {
    ScanResult r{"aborted", ""};
    r.pass = false;
    r.detail = e.what();
    scans.push_back(r);
  }

  int passed = 0;
  for (const ScanResult& s : scans) passed += s.pass ? 1 : 0;
  const bool ok = passed == static_cast<int>(scans.size());

  std::string payload;
  if (o.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const ScanResult& s : scans) {
      nlohmann::json entry;
      entry["name"] = s.name;
      entry["bound"] = s.bound;
      entry["status"] = s.pass ? "pass" : "fail";
      entry["instances"] = s.count;
      if (!s.detail.empty()) entry["detail"] = s.detail;
      list.push_back(std::move(entry));
    }
    nlohmann::json doc;
    doc["instance"] = nullptr;
    doc["result"] = {{"scans", std::move(list)},
                     {"passed", passed},
                     {"total", scans.size()}};
    doc["meta"] = {{"version", "1.0.0"}, {"provenance", "feasibility-scan"}};
    payload = json_text(doc);
  } else {
    std::ostringstream text;
    for (const ScanResult& s : scans) {
      text << "scan " << s.name << " (" << s.bound << "): "
           << (s.pass ? "PASS" : "FAIL") << " (" << s.count << " instances";
      if (!s.detail.empty()) text << "; " << s.detail;
      text << ")\n";
    }
    text << passed << "/" << scans.size() << " scans passed\n";
    payload = text.str();
  }
  emit(o.out, payload);
  return ok ? 0 : 1;
}

// --------------------------------------------------------------------------
// hurwitz
// --------------------------------------------------------------------------

struct HurwitzOpts {
  int d = 1;
  std::string profiles;
  bool marked = true;
  std::string format = "text";
  std::string out;
};

int run_hurwitz(const HurwitzOpts& o) {
  std::vector<Profile> mus = parse_profiles(o.profiles);
  if (mus.size() != 3) {
    throw DomainError("hurwitz: exactly three profiles required, got " +
                      std::to_string(mus.size()));
  }
  for (Profile& mu : mus) {
    std::sort(mu.parts.begin(), mu.parts.end(), std::greater<int>());
    for (int part : mu.parts) {
      if (part < 1) throw DomainError("hurwitz: parts must be positive");
    }
    if (mu.magnitude() != o.d) {
      throw DomainError("hurwitz: every profile must have magnitude d = " +
                        std::to_string(o.d));
    }
  }
  LocalHurwitzQuery q;
  q.d = o.d;
  q.profiles = {mus[0], mus[1], mus[2]};
  q.marked = o.marked;

  const auto catalogued = local_hurwitz_catalog(q);
  BigRat value;
  std::string provenance;
  if (catalogued) {
    value = *catalogued;
    provenance = "catalog";
  } else {
    value = local_hurwitz_oracle(q);
    provenance = "oracle";
  }

  std::string payload;
  if (o.format == "json") {
    nlohmann::json instance;
    instance["d"] = o.d;
    nlohmann::json profs = nlohmann::json::array();
    for (const Profile& mu : mus) profs.push_back(mu.parts);
    instance["profiles"] = profs;
    instance["marked"] = o.marked;
    nlohmann::json doc;
    doc["instance"] = std::move(instance);
    doc["result"] = {{"value", rat_string(value)}};
    doc["meta"] = {{"version", "1.0.0"}, {"provenance", provenance}};
    payload = json_text(doc);
  } else {
    payload = rat_string(value) + "\n";
  }
  emit(o.out, payload);
  return 0;
}

}  // namespace

// --------------------------------------------------------------------------

int main(int argc, char** argv) {
  CLI::App app{
      "tropical Tevelev degrees: closed formulas, grid enumeration, and "
      "explicit cover construction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tevtrop 1.0.0");

  DegOpts deg_opts;
  CLI::App* deg = app.add_subcommand(
      "deg", "degree of one instance via the closed formulas");
  deg->add_option("--g", deg_opts.g, "genus")->required();
  deg->add_option("--ell", deg_opts.ell, "excess ell (d = g+1+ell)")
      ->required();
  deg->add_option("--mu", deg_opts.mu,
                  "profiles \"e,e;e;...\" (default: all simple)");
  deg->add_option("--format", deg_opts.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  deg->add_option("--out", deg_opts.out, "write output to file");

  GridOpts grid_opts;
  CLI::App* grid = app.add_subcommand(
      "grid", "enumerate the combinatorial grid (g >= 1)");
  grid->add_option("--g", grid_opts.g, "genus")->required();
  grid->add_option("--ell", grid_opts.ell, "excess ell")->required();
  grid->add_option("--mu", grid_opts.mu,
                   "profiles \"e,e;e;...\" (default: all simple)");
  grid->add_option("--format", grid_opts.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  grid->add_option("--out", grid_opts.out, "write output to file");

  CoversOpts covers_opts;
  CLI::App* covers = app.add_subcommand(
      "covers", "build and verify one explicit cover per grid cell "
                "(all-simple profiles, g >= 1)");
  covers->add_option("--g", covers_opts.g, "genus")->required();
  covers->add_option("--ell", covers_opts.ell, "excess ell")->required();
  covers->add_option("--mu", covers_opts.mu,
                     "profiles (must be all simple)");
  covers->add_option("--format", covers_opts.format, "text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  covers->add_option("--out", covers_opts.out,
                     "output file; for dot, a prefix producing "
                     "<prefix><k>.dot per cover");

  CheckOpts check_opts;
  CLI::App* check = app.add_subcommand(
      "check", "cross-route consistency scans; exits 1 on any failure");
  check->add_option("--lemma", check_opts.lemma,
                    "run a single scan (choices: l2)")
      ->check(CLI::IsMember({"l2"}));
  check->add_option("--d-max", check_opts.d_max,
                    "degree bound for the l2 scan (default 30)");
  check->add_option("--g-max", check_opts.g_max,
                    "genus bound for the grid scans (default 8)");
  check->add_option("--format", check_opts.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--out", check_opts.out, "write output to file");

  HurwitzOpts hurwitz_opts;
  CLI::App* hurwitz = app.add_subcommand(
      "hurwitz", "one local Hurwitz number (catalog, else oracle)");
  hurwitz->add_option("--d", hurwitz_opts.d, "local degree")->required();
  hurwitz->add_option("--profiles", hurwitz_opts.profiles,
                      "three profiles \"a,b;c;d,e\"")
      ->required();
  hurwitz->add_flag("--marked,!--unmarked", hurwitz_opts.marked,
                    "marked-strand convention (default: marked)");
  hurwitz->add_option("--format", hurwitz_opts.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  hurwitz->add_option("--out", hurwitz_opts.out, "write output to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto guarded = [](auto&& body) -> int {
    try {
      return body();
    } catch (const OracleRangeError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
    } catch (const DomainError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::logic_error& e) {
      std::cerr << "internal fault: " << e.what() << "\n";
      return 1;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  };

  if (deg->parsed()) return guarded([&] { return run_deg(deg_opts); });
  if (grid->parsed()) return guarded([&] { return run_grid(grid_opts); });
  if (covers->parsed()) return guarded([&] { return run_covers(covers_opts); });
  if (check->parsed()) return guarded([&] { return run_check(check_opts); });
  if (hurwitz->parsed()) return guarded([&] { return run_hurwitz(hurwitz_opts); });
  return 2;
}
