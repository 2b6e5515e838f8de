#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "biclique/biclique.hpp"
#include "biclique/certify.hpp"
#include "biclique/graph.hpp"

namespace biclique::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_error = 2;

// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// A certificate as stored on disk; ids are 0-based in memory, 1-based in JSON.
struct Certificate {
	std::optional<Bipartition> partition;
	std::vector<Edge> edges;
	bool balanced = false;
};

std::string certificate_json(const Graph &g, const Bipartition &p, bool balanced, long budget);
std::string edge_certificate_json(const std::vector<Edge> &edges, bool balanced);
// Throws parse_error on malformed JSON and malformed_partition on ids outside [1, capacity].
Certificate parse_certificate(const std::string &text, std::size_t capacity);

std::string sha256_hex(const std::string &bytes);

} // namespace biclique::cli
