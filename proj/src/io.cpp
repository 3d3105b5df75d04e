#include "edgeposet/io.hpp"

#include <fstream>
#include <sstream>

#include "edgeposet/error.hpp"

namespace edgeposet {

nlohmann::json to_json(const GradedPoset& p) {
  nlohmann::json j;
  j["ranks"] = std::vector<int>(p.ranks().begin(), p.ranks().end());
  auto covers = nlohmann::json::array();
  for (const auto& [x, y] : p.covers()) covers.push_back({x, y});
  j["covers"] = std::move(covers);
  if (!p.labels().empty()) j["labels"] = p.labels();
  return j;
}

nlohmann::json to_json(const EdgePoset& e) {
  nlohmann::json j = to_json(e.poset());
  auto edges = nlohmann::json::array();
  for (const auto& [low, high] : e.edges()) edges.push_back({low, high});
  j["edges"] = std::move(edges);
  return j;
}

GradedPoset poset_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("ranks") || !j.contains("covers"))
      throw Error(ErrorKind::InvalidInput, "poset JSON needs \"ranks\" and \"covers\"");
    auto ranks = j.at("ranks").get<std::vector<int>>();
    std::vector<Cover> covers;
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2)
        throw Error(ErrorKind::InvalidInput, "each cover must be a [low, high] pair");
      covers.emplace_back(c[0].get<Element>(), c[1].get<Element>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return GradedPoset::build(std::move(ranks), std::move(covers), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

namespace {

nlohmann::json parse_json_text(const std::string& text, const std::filesystem::path& path) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, path.string() + ": " + e.what());
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

GradedPoset read_poset_file(const std::filesystem::path& path) {
  return poset_from_json(parse_json_text(read_text_file(path), path));
}

std::string to_dot(const GradedPoset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  const auto levels = p.levels();
  for (std::size_t r = 0; r < levels.size(); ++r) {
    if (levels[r].empty()) continue;
    out << "  { rank=same;";
    for (Element x : levels[r]) out << " n" << x << " [label=\"" << dot_escape(p.label(x)) << "\"];";
    out << " }\n";
  }
  for (const auto& [x, y] : p.covers()) out << "  n" << x << " -> n" << y << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const Permutation& g) {
  return std::vector<int>(g.images().begin(), g.images().end());
}

Permutation permutation_from_json(const nlohmann::json& j) {
  try {
    return Permutation(j.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, e.what());
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidInput, e.what());
  }
}

std::vector<Permutation> parse_generator_lines(std::string_view text, int degree) {
  std::vector<Permutation> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_cycles(line, degree));
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidInput, "line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Permutation> read_generator_file(const std::filesystem::path& path, int degree) {
  return parse_generator_lines(read_text_file(path), degree);
}

TreeShape tree_shape_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "tree node must be an object");
  TreeShape shape;
  if (j.contains("children")) {
    const auto& kids = j.at("children");
    if (!kids.is_array()) throw Error(ErrorKind::InvalidInput, "\"children\" must be an array");
    for (const auto& k : kids) shape.children.push_back(tree_shape_from_json(k));
  }
  return shape;
}

RootedTree read_tree_file(const std::filesystem::path& path) {
  return rooted_tree(tree_shape_from_json(parse_json_text(read_text_file(path), path)));
}

}  // namespace edgeposet
