#include "mvgeo/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mvgeo {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::vector<Vec> read_vector_list(const json& arr, int dim,
                                  const char* what) {
  if (!arr.is_array())
    throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<Vec> out;
  out.reserve(arr.size());
  for (const auto& row : arr) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw Error(ErrorCode::ParseError,
                  std::string(what) + " entries must have length dim");
    Vec v(dim);
    for (int i = 0; i < dim; ++i) {
      if (!row[i].is_number())
        throw Error(ErrorCode::ParseError,
                    std::string(what) + " entries must be numeric");
      v(i) = row[i].get<double>();
    }
    out.push_back(std::move(v));
  }
  return out;
}

int read_dim(const json& doc) {
  if (!doc.is_object() || !doc.contains("dim") ||
      !doc["dim"].is_number_integer())
    throw Error(ErrorCode::ParseError, "missing integer field \"dim\"");
  int dim = doc["dim"].get<int>();
  if (dim < 1) throw Error(ErrorCode::ParseError, "\"dim\" must be positive");
  return dim;
}

void append_vector(std::string& out, const Vec& v) {
  out += '[';
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_double(v(i));
  }
  out += ']';
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Polytope polytope_from_json(const std::string& text) {
  json doc = parse(text);
  int dim = read_dim(doc);
  if (!doc.contains("vertices"))
    throw Error(ErrorCode::ParseError, "missing field \"vertices\"");
  auto pts = read_vector_list(doc["vertices"], dim, "\"vertices\"");
  if (pts.empty())
    throw Error(ErrorCode::ParseError, "\"vertices\" must be nonempty");
  return convex_hull(pts);
}

std::string polytope_to_json(const Polytope& K) {
  std::string out = "{\"dim\":" + std::to_string(K.ambient_dim()) +
                    ",\"vertices\":[";
  for (size_t i = 0; i < K.vertices().size(); ++i) {
    if (i) out += ',';
    append_vector(out, K.vertices()[i]);
  }
  out += "]}";
  return out;
}

Zonotope zonotope_from_json(const std::string& text) {
  json doc = parse(text);
  int dim = read_dim(doc);
  if (!doc.contains("generators"))
    throw Error(ErrorCode::ParseError, "missing field \"generators\"");
  auto gens = read_vector_list(doc["generators"], dim, "\"generators\"");
  return Zonotope::from_generators(dim, std::move(gens));
}

std::string zonotope_to_json(const Zonotope& z) {
  std::string out =
      "{\"dim\":" + std::to_string(z.dim()) + ",\"generators\":[";
  for (size_t i = 0; i < z.generators().size(); ++i) {
    if (i) out += ',';
    append_vector(out, z.generators()[i]);
  }
  out += "]}";
  return out;
}

std::string measure_to_json(const DiscreteSphericalMeasure& m) {
  std::string out = "{\"dim\":" + std::to_string(m.dim) + ",\"atoms\":[";
  for (size_t i = 0; i < m.atoms.size(); ++i) {
    if (i) out += ',';
    out += "{\"u\":";
    append_vector(out, m.atoms[i].direction);
    out += ",\"w\":" + format_double(m.atoms[i].weight) + "}";
  }
  out += "]}";
  return out;
}

std::string report_to_json(const CheckReport& r) {
  json j;
  j["schema"] = "check-report/1";
  j["name"] = r.name;
  j["params"] = r.params;
  j["pass"] = r.pass;
  j["inconclusive"] = r.inconclusive;
  j["witness"] = r.witness;
  j["seed"] = r.seed;
  std::string out = j.dump();
  // numbers carry 17 significant digits; splice them in as raw tokens
  out.pop_back();  // trailing '}'
  out += ",\"residual\":" + format_double(r.residual) +
         ",\"tolerance\":" + format_double(r.tolerance) + "}";
  return out;
}

std::string reports_to_jsonl(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += report_to_json(r);
    out += '\n';
  }
  return out;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    q += '"';
    return q;
  };
  std::string out = "name,params,residual,tolerance,pass,inconclusive,witness,seed\n";
  for (const auto& r : reports) {
    out += quote(r.name) + ',' + quote(r.params) + ',' +
           format_double(r.residual) + ',' + format_double(r.tolerance) + ',' +
           (r.pass ? "1" : "0") + ',' + (r.inconclusive ? "1" : "0") + ',' +
           quote(r.witness) + ',' + std::to_string(r.seed) + '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error(ErrorCode::Internal, "cannot write file: " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

}  // namespace mvgeo
