#include "nodal/report.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "nodal/errors.hpp"

namespace nodal {

namespace {

using ordered_json = nlohmann::ordered_json;

Int json_to_int(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw input_error(where + ": not an integer: '" + s + "'");
    for (; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i])))
        throw input_error(where + ": not an integer: '" + s + "'");
    return Int(s);
  }
  throw input_error(where + ": expected an integer (number or decimal string)");
}

const Int kJsonSafe = (Int(1) << 53);

ordered_json int_to_json(const Int& v) {
  if (v >= -kJsonSafe && v <= kJsonSafe) return static_cast<long long>(v);
  return v.str();
}

ordered_json vector_to_json(const IntVector& v) {
  ordered_json a = ordered_json::array();
  for (const Int& e : v) a.push_back(int_to_json(e));
  return a;
}

std::vector<IntVector> parse_point_list(const nlohmann::json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty())
    throw input_error(where + ": expected a nonempty array of points");
  std::vector<IntVector> pts;
  for (const auto& p : arr) {
    if (!p.is_array()) throw input_error(where + ": each point must be an array");
    IntVector v;
    for (const auto& c : p) v.push_back(json_to_int(c, where));
    pts.push_back(std::move(v));
  }
  return pts;
}

std::string sequence_to_text(const IndexSequence& seq) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < seq.values.size(); ++i) {
    if (i) os << ',';
    os << seq.values[i].to_string();
  }
  os << ']';
  if (seq.shift_r > 0) os << " R=" << seq.shift_r;
  return os.str();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }
const char* okbad(bool b) { return b ? "ok" : "VIOLATED"; }

}  // namespace

InputDocument parse_input(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("input is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw input_error("input: top level must be an object");
  if (!doc.contains("points")) throw input_error("input: missing 'points'");

  InputDocument out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw input_error("input: 'name' must be a string");
    out.name = doc["name"].get<std::string>();
  }
  std::vector<IntVector> pts = parse_point_list(doc["points"], "input points");
  const size_t width = pts[0].size();
  for (const auto& p : pts)
    if (p.size() != width) throw input_error("input points: inconsistent dimensions");
  if (width < 3) throw input_error("input points: need dimension >= 3 (n >= 1)");

  std::sort(pts.begin(), pts.end());
  size_t before = pts.size();
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() != before) out.notes.push_back("duplicate input points were merged");

  out.support = SupportSet(std::move(pts), static_cast<int>(width) - 2);
  return out;
}

std::pair<std::string, PolytopeTuple> parse_bodies(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("input is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("polytopes"))
    throw input_error("input: expected an object with 'polytopes'");
  std::string name;
  if (doc.contains("name") && doc["name"].is_string()) name = doc["name"].get<std::string>();
  if (!doc["polytopes"].is_array() || doc["polytopes"].empty())
    throw input_error("input: 'polytopes' must be a nonempty array");
  std::vector<std::vector<IntVector>> bodies;
  for (const auto& b : doc["polytopes"]) bodies.push_back(parse_point_list(b, "polytope"));
  const size_t dim = bodies[0][0].size();
  for (const auto& b : bodies)
    for (const auto& p : b)
      if (p.size() != dim) throw input_error("input: polytopes of mixed dimensions");
  return {name, PolytopeTuple(static_cast<int>(dim), std::move(bodies))};
}

std::string render_assumptions_text(const AssumptionReport& rep) {
  std::ostringstream os;
  os << "assumptions: origin=" << yesno(rep.contains_origin)
     << " vertical_index=" << (rep.vertical_index_one ? "1" : "VIOLATED")
     << " primitive=" << okbad(rep.primitive_ok)
     << " horizontal_lattice=" << okbad(rep.horizontal_lattice_ok)
     << " horizontal_depth=" << okbad(rep.horizontal_depth_ok)
     << " developed=" << yesno(rep.developed);
  return os.str();
}

std::string render_fiber_text(const FiberPolygon& p) {
  std::ostringstream os;
  os << "fiber polygon: area = " << p.norm_area << "\n";
  os << "vertices:";
  for (const auto& v : p.vertices) os << ' ' << vec_to_string(v);
  os << "\nedges (outer normal x length):";
  for (const auto& [gamma, len] : p.edges) os << ' ' << vec_to_string(gamma) << 'x' << len;
  os << "\n";
  return os.str();
}

std::string render_text(const AnalysisReport& rep, const std::string& formula) {
  const bool all = formula == "all";
  std::ostringstream os;
  os << "analysis: " << (rep.name.empty() ? "(unnamed)" : rep.name) << "\n";
  os << "n = " << rep.n << " | newton volume = " << rep.volume
     << " | fiber area = " << rep.fiber_area << "\n";
  os << render_assumptions_text(rep.assumptions) << "\n";
  os << "fiber polygon vertices:";
  for (const auto& v : rep.polygon.vertices) os << ' ' << vec_to_string(v);
  os << "\n";

  std::vector<std::array<std::string, 8>> lines;
  lines.push_back({"normal", "offset", "class", "volume", "mult", "sequence", "excess", "edge"});
  for (const FacetReport& f : rep.facets) {
    std::array<std::string, 8> row;
    row[0] = vec_to_string(f.normal);
    row[1] = f.offset.str();
    row[2] = f.horizontal ? "horiz" : "slant";
    row[3] = f.volume.str();
    row[4] = f.horizontal ? "-" : f.multiplier.str();
    row[5] = sequence_to_text(f.sequence);
    row[6] = f.excess.str();
    row[7] = f.horizontal ? "-" : f.edge_contribution.str();
    lines.push_back(std::move(row));
  }
  std::array<size_t, 8> width{};
  for (const auto& row : lines)
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  os << "facets:\n";
  for (const auto& row : lines) {
    os << " ";
    for (size_t c = 0; c < row.size(); ++c)
      os << ' ' << std::left << std::setw(static_cast<int>(width[c])) << row[c];
    os << "\n";
  }

  if (all || formula == "closure") os << "D_closure = " << rep.d_closure << "\n";
  if (all || formula == "punctured") {
    if (rep.d_punctured)
      os << "D_punctured = " << *rep.d_punctured << "\n";
    else
      os << "D_punctured = n/a\n";
  }
  if (all || formula == "conjecture") {
    if (rep.d_conjecture)
      os << "D_conjecture = " << *rep.d_conjecture << " (CONJECTURAL)\n";
    else
      os << "D_conjecture = n/a\n";
  }
  os << "chi_curve = " << rep.chi_curve << "\n";
  if (!rep.notes.empty()) {
    os << "notes:\n";
    for (const auto& note : rep.notes) os << "  - " << note << "\n";
  }
  return os.str();
}

std::string render_json(const AnalysisReport& rep) {
  ordered_json j;
  j["schema"] = "1";
  j["name"] = rep.name;
  j["n"] = rep.n;
  j["volume"] = int_to_json(rep.volume);
  j["fiber_area"] = int_to_json(rep.fiber_area);
  j["facets"] = ordered_json::array();
  for (const FacetReport& f : rep.facets) {
    ordered_json jf;
    jf["normal"] = vector_to_json(f.normal);
    jf["offset"] = int_to_json(f.offset);
    jf["horizontal"] = f.horizontal;
    jf["volume"] = int_to_json(f.volume);
    jf["multiplier"] = int_to_json(f.multiplier);
    ordered_json seq = ordered_json::array();
    for (const auto& v : f.sequence.values) {
      if (v.is_infinite())
        seq.push_back("inf");
      else
        seq.push_back(int_to_json(v.value()));
    }
    jf["sequence"] = seq;
    jf["shift_r"] = int_to_json(f.sequence.shift_r);
    jf["excess"] = int_to_json(f.excess);
    j["facets"].push_back(std::move(jf));
  }
  ordered_json ja;
  ja["contains_origin"] = rep.assumptions.contains_origin;
  ja["vertical_index_one"] = rep.assumptions.vertical_index_one;
  ja["primitive_ok"] = rep.assumptions.primitive_ok;
  ja["primitive_offenders"] = rep.assumptions.primitive_offenders;
  ja["horizontal_lattice_ok"] = rep.assumptions.horizontal_lattice_ok;
  ja["horizontal_lattice_offenders"] = rep.assumptions.horizontal_lattice_offenders;
  ja["horizontal_depth_ok"] = rep.assumptions.horizontal_depth_ok;
  ja["horizontal_depth_offenders"] = rep.assumptions.horizontal_depth_offenders;
  ja["developed"] = rep.assumptions.developed;
  j["assumptions"] = std::move(ja);
  ordered_json jd;
  jd["closure"] = int_to_json(rep.d_closure);
  jd["punctured"] = rep.d_punctured ? int_to_json(*rep.d_punctured) : ordered_json(nullptr);
  jd["conjecture"] = rep.d_conjecture ? int_to_json(*rep.d_conjecture) : ordered_json(nullptr);
  j["D"] = std::move(jd);
  j["chi_curve"] = int_to_json(rep.chi_curve);
  j["notes"] = rep.notes;
  return j.dump(2) + "\n";
}

}  // namespace nodal
