#pragma once

// Canonical JSON formats.
//
// Instance:  {"tree":{"vertices":N,"edges":[[u,v],...]},"subtrees":[{"root":r,"arcs":[[t,h],...]},...]}
// Coloring:  {"colors":[c1,...,cn],"num_colors":k}
//            plus "original_colors" and "original_num_colors" for a run on a
//            normalized instance.
//
// Serialization is compact (no whitespace), keys in the order above, and
// newline-terminated.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lightcolor/greedy.hpp"
#include "lightcolor/instance.hpp"

namespace lightcolor {

using ordered_json = nlohmann::ordered_json;

std::string instance_to_json(const Instance& inst);
/// Throws InvalidInput on malformed documents or invalid instances.
Instance instance_from_json(std::string_view text);

ordered_json coloring_json(const Coloring& c);
ordered_json padded_coloring_json(const Coloring& padded, const Coloring& original);
ordered_json trace_json(const std::vector<RoundState>& trace);

/// Reads "colors" when it has `expected_size` entries, otherwise
/// "original_colors". Throws InvalidInput if neither fits.
Coloring coloring_from_json(std::string_view text, std::size_t expected_size);

/// Compact dump plus trailing newline.
std::string to_line(const ordered_json& doc);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace lightcolor
