#include "multiflag/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "multiflag/error.hpp"

namespace multiflag {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

void check_fields(const json& obj, const std::set<std::string>& allowed) {
  if (!obj.is_object()) fail("expected a JSON object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) fail("unknown field \"" + key + "\"");
  }
  for (const auto& key : allowed) {
    if (!obj.contains(key)) fail("missing field \"" + key + "\"");
  }
}

int get_int(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

Eigen::VectorXd get_vector(const json& v, int len, const std::string& what) {
  if (!v.is_array() || static_cast<int>(v.size()) != len) {
    fail(what + " must be an array of " + std::to_string(len) + " numbers");
  }
  Eigen::VectorXd out(len);
  for (int i = 0; i < len; ++i) {
    if (!v[i].is_number()) fail(what + " must contain numbers");
    out[i] = v[i].get<double>();
  }
  return out;
}

const json& get_list(const json& obj, const char* key, int len) {
  const json& v = obj.at(key);
  if (!v.is_array() || static_cast<int>(v.size()) != len) {
    fail(std::string("\"") + key + "\" must hold " + std::to_string(len) + " entries");
  }
  return v;
}

std::vector<json> objects(const json& doc) {
  if (doc.is_array()) {
    if (doc.empty()) fail("empty configuration list");
    return std::vector<json>(doc.begin(), doc.end());
  }
  return {doc};
}

ArmConfig config_from(const json& obj, double tol) {
  check_fields(obj, {"m", "k", "points"});
  const int m = get_int(obj, "m"), k = get_int(obj, "k");
  if (m < 1 || k < 0) fail("m must be >= 1 and k >= 0");
  const json& pts = get_list(obj, "points", k + 1);
  std::vector<Eigen::VectorXd> points;
  for (int i = 0; i <= k; ++i) points.push_back(get_vector(pts[i], m + 1, "point " + std::to_string(i)));
  try {
    return make_config(m, k, points, tol);
  } catch (const Error& e) {
    fail(std::string("invalid configuration: ") + e.what());
  }
}

HsPoint hs_from(const json& obj) {
  check_fields(obj, {"m", "k", "x0", "thetas"});
  HsPoint h;
  h.m = get_int(obj, "m");
  h.k = get_int(obj, "k");
  if (h.m < 1 || h.k < 1) fail("m and k must be >= 1");
  h.x0 = get_vector(obj.at("x0"), h.m + 1, "x0");
  const json& th = get_list(obj, "thetas", h.k);
  for (int l = 0; l < h.k; ++l) h.thetas.push_back(get_vector(th[l], h.m, "theta block " + std::to_string(l)));
  return h;
}

json vector_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

std::string dump_list(const std::vector<json>& items) {
  if (items.size() == 1) return items.front().dump(2) + "\n";
  return json(items).dump(2) + "\n";
}

}  // namespace

std::vector<ArmConfig> parse_configs(const std::string& text, double tol) {
  std::vector<ArmConfig> out;
  for (const auto& obj : objects(parse_document(text))) out.push_back(config_from(obj, tol));
  return out;
}

std::vector<ArmConfig> load_configs(const std::string& path, double tol) {
  return parse_configs(read_file(path), tol);
}

std::string dump_configs(const std::vector<ArmConfig>& cs) {
  std::vector<json> items;
  for (const auto& c : cs) {
    json pts = json::array();
    for (int i = 0; i <= c.k(); ++i) pts.push_back(vector_json(c.point(i)));
    items.push_back(json{{"m", c.m()}, {"k", c.k()}, {"points", pts}});
  }
  return dump_list(items);
}

std::vector<HsPoint> parse_hs_points(const std::string& text) {
  std::vector<HsPoint> out;
  for (const auto& obj : objects(parse_document(text))) out.push_back(hs_from(obj));
  return out;
}

std::string dump_hs_points(const std::vector<HsPoint>& hs) {
  std::vector<json> items;
  for (const auto& h : hs) {
    json th = json::array();
    for (const auto& t : h.thetas) th.push_back(vector_json(t));
    items.push_back(json{{"m", h.m}, {"k", h.k}, {"x0", vector_json(h.x0)}, {"thetas", th}});
  }
  return dump_list(items);
}

std::vector<ArmConfig> parse_any(const std::string& text, double tol) {
  const json doc = parse_document(text);
  const auto objs = objects(doc);
  if (objs.front().is_object() && objs.front().contains("thetas")) {
    std::vector<ArmConfig> out;
    for (const auto& h : parse_hs_points(text)) out.push_back(hs_forward(h));
    return out;
  }
  std::vector<ArmConfig> out;
  for (const auto& obj : objs) out.push_back(config_from(obj, tol));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path);
  out << text;
}

}  // namespace multiflag
