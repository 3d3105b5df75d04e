#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "edgeposet/edge.hpp"
#include "edgeposet/perm.hpp"
#include "edgeposet/poset.hpp"

namespace edgeposet {

/// {"ranks": [...], "covers": [[low, high], ...], "labels": [...]}; labels are
/// written only when the poset has them.
nlohmann::json to_json(const GradedPoset& p);

/// to_json(e.poset()) plus "edges": [[low, high], ...] in element order.
nlohmann::json to_json(const EdgePoset& e);

/// Throws Error{InvalidInput} on schema errors and the build errors of GradedPoset.
GradedPoset poset_from_json(const nlohmann::json& j);
GradedPoset read_poset_file(const std::filesystem::path& path);

/// One node per element, same-rank nodes on one level, covers drawn upward.
std::string to_dot(const GradedPoset& p);

/// One-line notation, 0-indexed.
nlohmann::json to_json(const Permutation& g);
Permutation permutation_from_json(const nlohmann::json& j);

/// One permutation per line in 1-indexed cycle notation; blank lines and lines
/// starting with '#' are skipped. Throws Error{InvalidInput} with the line number.
std::vector<Permutation> parse_generator_lines(std::string_view text, int degree);
std::vector<Permutation> read_generator_file(const std::filesystem::path& path, int degree);

/// {"children": [{...}, ...]}; an object without children is a leaf.
TreeShape tree_shape_from_json(const nlohmann::json& j);
RootedTree read_tree_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace edgeposet
