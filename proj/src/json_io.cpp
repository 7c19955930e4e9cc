#include "crystal/json_io.hpp"

#include <algorithm>

#include "crystal/errors.hpp"

namespace crystal {

namespace {

template <class F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed ") + what + ": " + e.what());
  }
}

DimVector dims_from(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array()) throw DomainError(std::string("missing array \"") + field + "\"");
  DimVector v = j.at(field).get<DimVector>();
  if (std::any_of(v.begin(), v.end(), [](int x) { return x < 0; }))
    throw DomainError(std::string("\"") + field + "\" has a negative entry");
  return v;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertices;
  j["arrows"] = Json::array();
  for (const auto& a : q.arrows) j["arrows"].push_back({{"id", a.id}, {"src", a.src}, {"dst", a.dst}});
  return j;
}

Quiver quiver_from_json(const Json& j) {
  return guarded("quiver", [&] {
    Quiver q;
    q.vertices = j.at("vertices").get<std::vector<int>>();
    for (const auto& a : j.at("arrows"))
      q.arrows.push_back({a.at("id").get<std::string>(), a.at("src").get<int>(), a.at("dst").get<int>()});
    q.validate();
    return q;
  });
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    j.push_back(row);
  }
  return j;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  return guarded("matrix", [&] {
    Matrix m(rows, cols);
    // a 0 x k or k x 0 matrix may be written as []
    if (j.is_array() && j.empty() && (rows == 0 || cols == 0)) return m;
    if (!j.is_array() || j.size() != rows) throw DomainError("matrix must have " + std::to_string(rows) + " rows");
    for (std::size_t r = 0; r < rows; ++r) {
      const auto& row = j.at(r);
      if (!row.is_array() || row.size() != cols)
        throw DomainError("matrix row must have " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c) {
        const auto& x = row.at(c);
        if (x.is_string())
          m(r, c) = parse_rational(x.get<std::string>());
        else if (x.is_number_integer())
          m(r, c) = x.get<long>();
        else
          throw DomainError("matrix entries must be integers or \"p/q\" strings");
      }
    }
    return m;
  });
}

Json rep_to_json(const RepPoint& p) {
  Json j;
  j["dims"] = p.dims;
  j["maps"] = Json::object();
  for (std::size_t a = 0; a < p.maps.size(); ++a) j["maps"][p.quiver.quiver.arrows[a].id] = matrix_to_json(p.maps[a]);
  return j;
}

RepPoint rep_from_json(const Json& j) {
  return guarded("representation", [&] {
    const auto dims = dims_from(j, "dims");
    if (dims.empty()) throw DomainError("\"dims\" must be non-empty");
    RepPoint p = RepPoint::zero(DoubleQuiver::type_a(static_cast<int>(dims.size())), dims);
    if (j.contains("maps")) {
      for (const auto& [id, value] : j.at("maps").items()) {
        const auto a = p.quiver.quiver.arrow_index(id);
        if (!a) throw DomainError("unknown arrow \"" + id + "\"");
        const auto& arrow = p.quiver.quiver.arrows[*a];
        p.maps[*a] = matrix_from_json(value, p.dim(arrow.dst), p.dim(arrow.src));
      }
    }
    p.validate();
    return p;
  });
}

FramedPoint framed_from_json(const Json& j) {
  return guarded("framed point", [&] {
    RepPoint rep = rep_from_json(j);
    const auto w = dims_from(j, "wdims");
    if (w.size() != rep.dims.size()) throw DomainError("\"wdims\" and \"dims\" have different lengths");
    FramedPoint fp = FramedPoint::zero(rep, w);
    if (j.contains("t")) {
      const auto& t = j.at("t");
      if (!t.is_array() || t.size() != w.size()) throw DomainError("\"t\" must hold one matrix per vertex");
      for (std::size_t v = 0; v < w.size(); ++v)
        fp.framing[v] = matrix_from_json(t.at(v), w[v], rep.dims[v]);
    }
    fp.validate();
    return fp;
  });
}

Json multisegment_to_json(const Multisegment& m) {
  Json segs = Json::array();
  for (const auto& s : m.segments()) segs.push_back({s.i, s.j});
  return Json{{"n", m.rank()}, {"segments", segs}};
}

Multisegment multisegment_from_json(const Json& j) {
  return guarded("multisegment", [&] {
    std::vector<Segment> segs;
    for (const auto& s : j.at("segments")) {
      if (!s.is_array() || s.size() != 2) throw DomainError("a segment is a pair [i,j]");
      segs.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
    }
    return Multisegment(j.at("n").get<int>(), std::move(segs));
  });
}

Json tableau_to_json(const Tableau& t) { return Json{{"rows", t.rows}}; }

Tableau tableau_from_json(const Json& j) {
  return guarded("tableau", [&] { return Tableau{j.at("rows").get<std::vector<std::vector<int>>>()}; });
}

Json matching_report(const std::vector<std::pair<Multisegment, Tableau>>& pairs) {
  auto sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  Json j = Json::array();
  for (const auto& [m, t] : sorted)
    j.push_back({{"multisegment", multisegment_to_json(m)}, {"tableau", t.to_string()}, {"rows", t.rows}});
  return j;
}

}  // namespace crystal
