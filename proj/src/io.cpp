#include "biclique/io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "biclique/errors.hpp"

namespace biclique {

namespace {

class LineReader {
public:
	explicit LineReader(std::istream &in) : in_(in) {}

	// Next line that is neither blank nor a comment, split into tokens.
	std::optional<std::vector<std::string>> next() {
		std::string line;
		while (std::getline(in_, line)) {
			++line_;
			std::istringstream ss(line);
			std::vector<std::string> tokens;
			for (std::string t; ss >> t;)
				tokens.push_back(t);
			if (tokens.empty() || tokens[0][0] == 'c')
				continue;
			return tokens;
		}
		return std::nullopt;
	}

	int line() const { return line_; }

	[[noreturn]] void fail(const std::string &what) const { throw parse_error(line_, what); }

	long number(const std::string &token, long lo, long hi) const {
		std::size_t used = 0;
		long v = 0;
		try {
			v = std::stol(token, &used);
		} catch (const std::exception &) {
			fail("expected an integer, got '" + token + "'");
		}
		if (used != token.size())
			fail("expected an integer, got '" + token + "'");
		if (v < lo || v > hi)
			fail("value " + token + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
		return v;
	}

private:
	std::istream &in_;
	int line_ = 0;
};

constexpr long max_count = 1L << 24;

} // namespace

Graph read_edge_list(std::istream &in) {
	LineReader r(in);
	auto header = r.next();
	if (!header)
		throw parse_error(r.line(), "missing 'p <n> <m>' header");
	if ((*header)[0] != "p" || header->size() != 3)
		r.fail("expected 'p <n> <m>' header");
	long n = r.number((*header)[1], 0, max_count);
	long m = r.number((*header)[2], 0, max_count);
	Graph g(static_cast<std::size_t>(n));
	for (long i = 0; i < m; ++i) {
		auto t = r.next();
		if (!t)
			r.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
		if ((*t)[0] != "e" || t->size() != 3)
			r.fail("expected 'e <u> <v>'");
		Vertex u = static_cast<Vertex>(r.number((*t)[1], 1, n) - 1);
		Vertex v = static_cast<Vertex>(r.number((*t)[2], 1, n) - 1);
		if (u == v)
			r.fail("self-loop on vertex " + (*t)[1]);
		if (g.has_edge(u, v))
			r.fail("duplicate edge " + (*t)[1] + " " + (*t)[2]);
		g.add_edge(u, v);
	}
	if (r.next())
		r.fail("more edge lines than declared");
	return g;
}

Graph read_edge_list_file(const std::string &path) {
	std::ifstream in(path);
	if (!in)
		throw parse_error(0, "cannot open " + path);
	return read_edge_list(in);
}

void write_edge_list(std::ostream &out, const Graph &g, const std::string &comment) {
	std::vector<Vertex> index(g.capacity(), 0);
	Vertex next = 1;
	for (Vertex v : g.vertices())
		index[v] = next++;
	if (!comment.empty()) {
		std::istringstream lines(comment);
		for (std::string line; std::getline(lines, line);)
			out << "c " << line << '\n';
	}
	out << "p " << g.order() << ' ' << g.size() << '\n';
	for (const Edge &e : g.edges())
		out << "e " << index[e.u] << ' ' << index[e.v] << '\n';
}

RbdsInstance read_rbds(std::istream &in) {
	LineReader r(in);
	auto header = r.next();
	if (!header || header->size() != 6 || (*header)[0] != "p" || (*header)[1] != "rbds")
		r.fail("expected 'p rbds <red> <blue> <m> <kappa>' header");
	RbdsInstance inst;
	inst.red = static_cast<std::size_t>(r.number((*header)[2], 0, max_count));
	inst.blue = static_cast<std::size_t>(r.number((*header)[3], 0, max_count));
	long m = r.number((*header)[4], 0, max_count);
	inst.kappa = r.number((*header)[5], 0, max_count);
	for (long i = 0; i < m; ++i) {
		auto t = r.next();
		if (!t || t->size() != 3 || (*t)[0] != "e")
			r.fail("expected 'e <red> <blue>'");
		Vertex red = static_cast<Vertex>(r.number((*t)[1], 1, static_cast<long>(inst.red)) - 1);
		Vertex blue = static_cast<Vertex>(r.number((*t)[2], 1, static_cast<long>(inst.blue)) - 1);
		inst.edges.emplace_back(red, blue);
	}
	if (r.next())
		r.fail("more edge lines than declared");
	return inst;
}

Hypergraph read_hypergraph(std::istream &in) {
	LineReader r(in);
	auto header = r.next();
	if (!header || header->size() != 3 || (*header)[0] != "h")
		r.fail("expected 'h <N> <M>' header");
	Hypergraph hg;
	hg.n = static_cast<std::size_t>(r.number((*header)[1], 0, max_count));
	long m = r.number((*header)[2], 0, max_count);
	for (long i = 0; i < m; ++i) {
		auto t = r.next();
		if (!t)
			r.fail("expected " + std::to_string(m) + " hyperedges, found " + std::to_string(i));
		std::vector<Vertex> e;
		for (const auto &token : *t)
			e.push_back(static_cast<Vertex>(r.number(token, 1, static_cast<long>(hg.n)) - 1));
		hg.edges.push_back(std::move(e));
	}
	if (r.next())
		r.fail("more hyperedge lines than declared");
	return hg;
}

} // namespace biclique
