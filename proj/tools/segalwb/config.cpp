#include "config.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace segalwb {

using nlohmann::json;
using namespace segal;

namespace {

void only_keys(const json& j, const std::string& where, std::set<std::string> allowed) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ConfigError(where + ": unknown key '" + k + "'");
}

template <class T>
T get(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + ": wrong type (" + std::string(j.type_name()) + ")");
  }
}

int positive(const json& j, const std::string& where, int lo = 0) {
  int v = get<int>(j, where);
  if (v < lo) throw ConfigError(where + " must be at least " + std::to_string(lo));
  return v;
}

FinGroup group_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return *parse_group_name(j.get<std::string>());
  only_keys(j, where, {"kind", "order", "degree", "table", "name", "factors"});
  if (!j.contains("kind")) throw ConfigError(where + ": missing 'kind'");
  auto kind = get<std::string>(j["kind"], where + ".kind");
  try {
    if (kind == "cyclic") return FinGroup::cyclic(positive(j.value("order", json(1)), where + ".order", 1));
    if (kind == "symmetric") return FinGroup::symmetric(positive(j.value("degree", json(1)), where + ".degree", 1));
    if (kind == "table")
      return FinGroup::from_table(get<std::vector<std::vector<int>>>(j.at("table"), where + ".table"),
                                  j.value("name", std::string("table")));
    if (kind == "product") {
      std::optional<FinGroup> g;
      int i = 0;
      for (const auto& f : j.at("factors")) {
        FinGroup h = group_from_json(f, where + ".factors[" + std::to_string(i++) + "]");
        g = g ? FinGroup::product(*g, h) : h;
      }
      return g ? *g : FinGroup::trivial();
    }
  } catch (const segal::Error& e) {
    throw ConfigError(where + ": " + e.what());
  } catch (const json::out_of_range& e) {
    throw ConfigError(where + ": " + e.what());
  }
  throw ConfigError(where + ": unknown group kind '" + kind + "'");
}

DiagramSpec diagram_from_json(const json& j) {
  only_keys(j, "diagram", {"kind", "factors", "action", "sphere"});
  DiagramSpec d;
  if (j.contains("kind")) d.kind = get<std::string>(j["kind"], "diagram.kind");
  if (d.kind != "R" && d.kind != "unit" && d.kind != "point" && d.kind != "free")
    throw ConfigError("diagram.kind: expected R, unit, point or free");
  if (j.contains("factors")) d.factors = get<std::vector<long long>>(j["factors"], "diagram.factors");
  if (j.contains("action"))
    d.action = get<std::vector<std::vector<std::vector<long long>>>>(j["action"], "diagram.action");
  if (j.contains("sphere")) d.sphere = positive(j["sphere"], "diagram.sphere");
  return d;
}

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

GroupPtr parse_group_name(const std::string& s) {
  if (s.empty()) throw ConfigError("empty group name");
  std::optional<FinGroup> g;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, 'x')) {
    if (part == "e" || part == "1") continue;
    if (part.size() < 2 || (part[0] != 'C' && part[0] != 'S'))
      throw ConfigError("group '" + s + "': expected factors like e, C2, S3 joined by x");
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(part.substr(1), &used);
      if (used != part.size() - 1 || n < 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ConfigError("group '" + s + "': bad factor '" + part + "'");
    }
    if (part[0] == 'S' && n > 8) throw ConfigError("group '" + s + "': symmetric degree above 8");
    FinGroup f = part[0] == 'C' ? FinGroup::cyclic(n) : FinGroup::symmetric(n);
    g = g ? FinGroup::product(*g, f) : f;
  }
  return make_group(g ? *g : FinGroup::trivial());
}

MachineTag parse_machine_tag(const std::string& s) {
  if (s == "Sigma") return MachineTag::Sigma;
  if (s == "SigmaG") return MachineTag::SigmaG;
  if (s == "NGSmash") return MachineTag::NGSmash;
  if (s == "NGProduct") return MachineTag::NGProduct;
  throw ConfigError("machine.tag '" + s + "': expected one of Sigma, SigmaG, NGSmash, NGProduct");
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    throw ConfigError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                      (pos == std::string::npos ? msg : msg.substr(pos)));
  }
  only_keys(j, "config", {"group", "diagram", "machine", "suite", "output"});
  RunConfig c;
  if (j.contains("group")) {
    c.group = make_group(group_from_json(j["group"], "group"));
    c.group_name = j["group"].is_string() ? j["group"].get<std::string>() : (*c.group)->name();
  }
  if (j.contains("diagram")) c.diagram = diagram_from_json(j["diagram"]);
  if (j.contains("machine")) {
    const json& m = j["machine"];
    only_keys(m, "machine", {"tag", "truncation", "pair_truncation", "qmax", "dmax", "spheres"});
    if (m.contains("tag")) c.tag = parse_machine_tag(get<std::string>(m["tag"], "machine.tag"));
    if (m.contains("truncation")) c.truncation = positive(m["truncation"], "machine.truncation", 1);
    if (m.contains("pair_truncation")) c.pair_truncation = positive(m["pair_truncation"], "machine.pair_truncation", 1);
    if (m.contains("qmax")) c.qmax = positive(m["qmax"], "machine.qmax");
    if (m.contains("dmax")) c.dmax = positive(m["dmax"], "machine.dmax");
    if (m.contains("spheres")) {
      std::vector<SphereSpec> s;
      for (const auto& e : get<json::array_t>(m["spheres"], "machine.spheres")) {
        if (e.is_number_integer()) {
          s.emplace_back(positive(e, "machine.spheres[]"));
        } else if (e.is_string() && e.get<std::string>() == "regular") {
          s.emplace_back(std::string("regular"));
        } else {
          throw ConfigError("machine.spheres: entries are dimensions or \"regular\"");
        }
      }
      c.spheres = std::move(s);
    }
  }
  if (j.contains("suite")) c.suite = get<std::vector<std::string>>(j["suite"], "suite");
  if (j.contains("output")) c.output = get<std::string>(j["output"], "output");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace segalwb
