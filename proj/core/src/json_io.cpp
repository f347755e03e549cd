#include "quivernc/json_io.hpp"

#include <sstream>

#include "quivernc/errors.hpp"

namespace quivernc {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(ParseErrorKind::syntax, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

DimVector root_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError(ParseErrorKind::syntax, "root must be an array of integers");
  std::vector<std::int64_t> c;
  for (const auto& x : j) c.push_back(x.get<std::int64_t>());
  return DimVector(std::move(c));
}

Json labelled(const FinitePoset& p, const std::vector<std::size_t>& ids) {
  Json out = Json::array();
  for (auto i : ids) out.push_back(p.label(i));
  return out;
}

}  // namespace

Json quiver_to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back({a.source, a.target});
  return Json{{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j) {
  try {
    std::vector<Arrow> arrows;
    for (const auto& a : require(j, "arrows")) arrows.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    return Quiver(require(j, "vertices").get<int>(), std::move(arrows));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ParseErrorKind::syntax, e.what());
  }
}

Json root_to_json(const DimVector& v) { return Json(v.coords()); }

Json rational_to_json(const Rational& r) {
  if (r.is_integer()) return Json(r.num());
  return Json(r.to_string());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError(ParseErrorKind::syntax, "scalar must be an integer or an \"a/b\" string");
}

Json rep_to_json(const Representation& m) {
  Json maps = Json::object();
  for (std::size_t k = 0; k < m.maps().size(); ++k) {
    const Matrix& a = m.map(k);
    Json rows = Json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(rational_to_json(a(r, c)));
      rows.push_back(row);
    }
    maps[std::to_string(k)] = rows;
  }
  return Json{{"dims", root_to_json(m.dims())}, {"maps", maps}, {"field", std::string(m.field().name())}};
}

Representation rep_from_json(const Quiver& q, const Json& j) {
  try {
    const Field f = j.contains("field") ? Field::from_name(j.at("field").get<std::string>()) : Field::rationals();
    const DimVector dims = root_from_json(require(j, "dims"));
    if (dims.size() != q.size()) throw DomainError("dimension vector length does not match the quiver");
    const Json& maps = require(j, "maps");
    std::vector<Matrix> mats;
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
      const auto& a = q.arrows()[k];
      const auto rows = static_cast<std::size_t>(dims[static_cast<std::size_t>(a.target - 1)]);
      const auto cols = static_cast<std::size_t>(dims[static_cast<std::size_t>(a.source - 1)]);
      Matrix m(rows, cols);
      const std::string key = std::to_string(k);
      if (maps.contains(key)) {
        const Json& data = maps.at(key);
        if (data.size() != rows) throw DomainError("map " + key + " has the wrong number of rows");
        for (std::size_t r = 0; r < rows; ++r) {
          if (data.at(r).size() != cols) throw DomainError("map " + key + " has the wrong number of columns");
          for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.reduce(rational_from_json(data.at(r).at(c)));
        }
      } else if (rows * cols != 0) {
        throw DomainError("missing map for arrow " + key);
      }
      mats.push_back(std::move(m));
    }
    return Representation(q, f, dims, std::move(mats));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ParseErrorKind::syntax, e.what());
  }
}

Json group_element_to_json(const Quiver& q, const GroupElement& w) {
  Json matrix = Json::array();
  for (std::size_t r = 0; r < w.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < w.dim(); ++c) row.push_back(w(r, c));
    matrix.push_back(row);
  }
  return Json{{"word", reduced_word(q, w)}, {"description", describe(q, w)}, {"matrix", matrix}};
}

Json indec_set_to_json(const IndecSet& s) {
  Json out = Json::array();
  for (const auto& r : s) out.push_back(root_to_json(r));
  return out;
}

IndecSet indec_set_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError(ParseErrorKind::syntax, "root set must be an array");
  std::vector<Root> roots;
  for (const auto& r : j) roots.push_back(root_from_json(r));
  return IndecSet(std::move(roots));
}

Json cluster_to_json(const ClusterTilting& t) {
  Json summands = Json::array();
  for (const auto& x : t.summands()) {
    if (x.is_rep()) summands.push_back(Json{{"rep", root_to_json(x.root)}});
    else summands.push_back(Json{{"shift", x.vertex}});
  }
  return Json{{"summands", summands}};
}

ClusterTilting cluster_from_json(const Json& j) {
  std::vector<CCIndec> out;
  for (const auto& s : require(j, "summands")) {
    if (s.contains("rep")) out.push_back(CCIndec::rep(root_from_json(s.at("rep"))));
    else out.push_back(CCIndec::shift(require(s, "shift").get<int>()));
  }
  return ClusterTilting(std::move(out));
}

Json stability_to_json(const Stability& theta) { return Json(theta.coeffs); }

Json poset_to_json(const FinitePoset& p) {
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  return Json{{"elements", p.labels()}, {"cover_relations", covers}};
}

Json lattice_report_to_json(const FinitePoset& p, const LatticeReport& r) {
  Json out{{"is_lattice", r.is_lattice},
           {"join_irreducibles", labelled(p, r.join_irreducibles)},
           {"meet_irreducibles", labelled(p, r.meet_irreducibles)},
           {"longest_chain", r.longest_chain},
           {"left_modular_elements", labelled(p, r.left_modular_elements)},
           {"left_modular_chain", nullptr},
           {"is_extremal", r.is_extremal},
           {"is_trim", r.is_trim}};
  if (r.left_modular_chain) out["left_modular_chain"] = labelled(p, *r.left_modular_chain);
  return out;
}

Json report_to_json(const Report& r) {
  return Json{{"check", r.check}, {"instances", r.instances}, {"failures", r.failures}};
}

std::string ar_quiver_dot(const ARQuiver& ar) {
  std::ostringstream os;
  os << "digraph AR {\n  rankdir=LR;\n";
  for (std::size_t v = 0; v < ar.vertices.size(); ++v)
    os << "  n" << v << " [label=\"" << ar.vertices[v].to_string() << "\"];\n";
  for (auto [a, b] : ar.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace quivernc
