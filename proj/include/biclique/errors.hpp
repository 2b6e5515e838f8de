#pragma once

#include <stdexcept>
#include <string>

namespace biclique {

struct invalid_edge : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

struct malformed_partition : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

// Input violates an operation's documented precondition (e.g. disconnected graph).
struct precondition_error : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

struct size_limit_exceeded : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
	parse_error(std::size_t line, const std::string &what)
		: std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
	std::size_t line;
};

struct generator_error : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

} // namespace biclique
