#include "qdesigns/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qdesigns/errors.hpp"

namespace qdesigns {

namespace {

const Json& field(const Json& j, const char* name, const char* what) {
  if (!j.is_object() || !j.contains(name))
    throw InputError(std::string(what) + ": missing field '" + name + "'");
  return j.at(name);
}

std::size_t positive_size(const Json& j, const char* name, const char* what) {
  const Json& v = field(j, name, what);
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    throw InputError(std::string(what) + ": field '" + name + "' must be a positive integer");
  return v.get<std::size_t>();
}

std::vector<double> number_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : j) {
    if (!x.is_number()) throw InputError(std::string(what) + ": expected a number");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<double> weights_or_unit(const Json& j, std::size_t n, const char* what) {
  if (!j.contains("weights")) return std::vector<double>(n, 1.0);
  auto w = number_list(j.at("weights"), what);
  if (w.size() != n)
    throw InputError(std::string(what) + ": weights length " + std::to_string(w.size()) +
                     " does not match " + std::to_string(n) + " entries");
  return w;
}

Json real_vector(const RealVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

RealVector real_vector_from(const Json& j, const char* what) {
  const auto xs = number_list(j, what);
  RealVector v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

std::string cycle_key(const std::vector<int>& type) {
  std::string s = "[";
  for (std::size_t i = 0; i < type.size(); ++i) s += (i ? "," : "") + std::to_string(type[i]);
  return s + "]";
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      data.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = positive_size(j, "rows", "matrix");
  const std::size_t cols = positive_size(j, "cols", "matrix");
  const Json& data = field(j, "data", "matrix");
  if (!data.is_array() || data.size() != rows * cols)
    throw InputError("matrix: 'data' must hold rows*cols = " + std::to_string(rows * cols) +
                     " entries");
  ComplexMatrix m(rows, cols);
  std::size_t idx = 0;
  for (const auto& e : data) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw InputError("matrix: entry " + std::to_string(idx) + " is not a [re, im] pair");
    m(static_cast<Eigen::Index>(idx / cols), static_cast<Eigen::Index>(idx % cols)) =
        Complex(e[0].get<double>(), e[1].get<double>());
    ++idx;
  }
  return m;
}

Json to_json(const WeightedStateSet& s) {
  Json states = Json::array();
  for (const auto& v : s.states) states.push_back(to_json(ComplexMatrix(v)));
  return {{"dim", s.dim}, {"states", states}, {"weights", s.weights}};
}

WeightedStateSet state_set_from_json(const Json& j) {
  WeightedStateSet s;
  s.dim = positive_size(j, "dim", "state set");
  const Json& states = field(j, "states", "state set");
  if (!states.is_array() || states.empty())
    throw InputError("state set: 'states' must be a non-empty array");
  for (const auto& m : states) {
    const ComplexMatrix v = matrix_from_json(m);
    if (v.cols() != 1 || static_cast<std::size_t>(v.rows()) != s.dim)
      throw InputError("state set: each state must be a dim x 1 matrix");
    s.states.push_back(v.col(0));
  }
  s.weights = weights_or_unit(j, s.states.size(), "state set");
  try {
    s.validate();
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return s;
}

Json to_json(const UnitarySet& s) {
  Json elems = Json::array();
  for (const auto& u : s.elements) elems.push_back(to_json(u));
  return {{"dim", s.dim}, {"elements", elems}, {"weights", s.weights}};
}

UnitarySet unitary_set_from_json(const Json& j) {
  UnitarySet s;
  s.dim = positive_size(j, "dim", "unitary set");
  const Json& elems = field(j, "elements", "unitary set");
  if (!elems.is_array() || elems.empty())
    throw InputError("unitary set: 'elements' must be a non-empty array");
  for (const auto& m : elems) s.elements.push_back(matrix_from_json(m));
  s.weights = weights_or_unit(j, s.elements.size(), "unitary set");
  try {
    s.validate();
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return s;
}

Json to_json(const SimplexDesign& s) {
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back(real_vector(p));
  return {{"dim", s.d}, {"points", pts}, {"weights", s.weights}};
}

SimplexDesign simplex_design_from_json(const Json& j) {
  SimplexDesign s;
  s.d = positive_size(j, "dim", "simplex design");
  const Json& pts = field(j, "points", "simplex design");
  if (!pts.is_array() || pts.empty())
    throw InputError("simplex design: 'points' must be a non-empty array");
  for (const auto& p : pts) s.points.push_back(real_vector_from(p, "simplex design point"));
  s.weights = weights_or_unit(j, s.points.size(), "simplex design");
  try {
    s.validate();
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return s;
}

Json to_json(const Triangulation& t) {
  Json verts = Json::array();
  for (const auto& v : t.vertices) verts.push_back(real_vector(v));
  return {{"vertices", verts}, {"simplices", t.simplices}};
}

Triangulation triangulation_from_json(const Json& j) {
  Triangulation t;
  const Json& verts = field(j, "vertices", "triangulation");
  const Json& simps = field(j, "simplices", "triangulation");
  if (!verts.is_array() || !simps.is_array())
    throw InputError("triangulation: 'vertices' and 'simplices' must be arrays");
  for (const auto& v : verts) t.vertices.push_back(real_vector_from(v, "triangulation vertex"));
  for (const auto& s : simps) {
    if (!s.is_array()) throw InputError("triangulation: each simplex must be an array");
    std::vector<std::size_t> idx;
    for (const auto& i : s) {
      if (!i.is_number_integer() || i.get<long long>() < 0)
        throw InputError("triangulation: vertex indices must be non-negative integers");
      idx.push_back(i.get<std::size_t>());
    }
    t.simplices.push_back(std::move(idx));
  }
  for (std::size_t v = 1; v < t.vertices.size(); ++v)
    if (t.vertices[v].size() != t.vertices[0].size())
      throw InputError("triangulation: vertices have inconsistent dimension");
  return t;
}

Json to_json(const WeightedChannelSet& s) {
  Json chans = Json::array();
  for (const auto& ch : s.channels) {
    Json kraus = Json::array();
    for (const auto& k : ch.kraus) kraus.push_back(to_json(k));
    chans.push_back({{"kraus", kraus}});
  }
  Json j = {{"dim", s.dim}, {"channels", chans}, {"weights", s.weights}};
  if (!s.tags.empty()) j["tags"] = s.tags;
  j["signed_weights"] = s.has_signed_weights();
  return j;
}

WeightedChannelSet channel_set_from_json(const Json& j) {
  WeightedChannelSet s;
  s.dim = positive_size(j, "dim", "channel set");
  const Json& chans = field(j, "channels", "channel set");
  if (!chans.is_array() || chans.empty())
    throw InputError("channel set: 'channels' must be a non-empty array");
  for (const auto& c : chans) {
    const Json& kraus = field(c, "kraus", "channel");
    if (!kraus.is_array() || kraus.empty())
      throw InputError("channel: 'kraus' must be a non-empty array");
    QuantumChannel ch;
    ch.dim = s.dim;
    for (const auto& k : kraus) ch.kraus.push_back(matrix_from_json(k));
    s.channels.push_back(std::move(ch));
  }
  s.weights = weights_or_unit(j, s.channels.size(), "channel set");
  if (j.contains("tags")) {
    if (!j.at("tags").is_array()) throw InputError("channel set: 'tags' must be an array");
    for (const auto& t : j.at("tags")) {
      if (!t.is_string()) throw InputError("channel set: tags must be strings");
      s.tags.push_back(t.get<std::string>());
    }
  }
  try {
    s.validate();
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return s;
}

Json to_json(const ChoiState& c) {
  return {{"dim", c.dim}, {"copies", c.copies}, {"matrix", to_json(c.matrix)}};
}

Json to_json(const WeingartenTable& t) {
  Json values = Json::object();
  for (const auto& [type, v] : t.values) values[cycle_key(type)] = v;
  return {{"t", t.t}, {"D", t.D}, {"values", values}};
}

Polynomial polynomial_from_json(const Json& j) {
  Polynomial p;
  const Json& terms = field(j, "terms", "polynomial");
  if (!terms.is_array()) throw InputError("polynomial: 'terms' must be an array");
  for (const auto& t : terms) {
    Polynomial::Term term;
    const Json& ex = field(t, "exponents", "polynomial term");
    if (!ex.is_array()) throw InputError("polynomial term: 'exponents' must be an array");
    for (const auto& e : ex) {
      if (!e.is_number_integer() || e.get<long long>() < 0)
        throw InputError("polynomial term: exponents must be non-negative integers");
      term.exponents.push_back(e.get<int>());
    }
    const Json& c = field(t, "coefficient", "polynomial term");
    if (!c.is_number()) throw InputError("polynomial term: 'coefficient' must be a number");
    term.coefficient = c.get<double>();
    p.terms.push_back(std::move(term));
  }
  return p;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump() << '\n';
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace qdesigns
