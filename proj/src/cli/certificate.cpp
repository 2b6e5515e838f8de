#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "biclique/cli.hpp"
#include "biclique/errors.hpp"

namespace biclique::cli {

using json = nlohmann::ordered_json;

namespace {

json ids(const VertexSet &s) {
	json a = json::array();
	for (Vertex v : s)
		a.push_back(v + 1);
	return a;
}

json edge_array(const std::vector<Edge> &edges) {
	json a = json::array();
	for (const Edge &e : edges)
		a.push_back({e.u + 1, e.v + 1});
	return a;
}

Vertex to_vertex(const json &j, std::size_t capacity) {
	if (!j.is_number_integer())
		throw parse_error(0, "certificate ids must be integers");
	long v = j.get<long>();
	if (v < 1 || static_cast<std::size_t>(v) > capacity)
		throw malformed_partition("certificate id " + std::to_string(v) + " is not a vertex of the graph");
	return static_cast<Vertex>(v - 1);
}

} // namespace

std::string certificate_json(const Graph &g, const Bipartition &p, bool balanced, long budget) {
	std::vector<Edge> edges = solution_from_partition(g, p).edges;
	std::sort(edges.begin(), edges.end());
	json j;
	j["kind"] = "partition";
	j["balanced"] = balanced;
	j["budget"] = budget;
	j["L"] = ids(p.left);
	j["R"] = ids(p.right);
	j["edges"] = edge_array(edges);
	return j.dump(2) + "\n";
}

std::string edge_certificate_json(const std::vector<Edge> &edges, bool balanced) {
	std::vector<Edge> sorted = edges;
	std::sort(sorted.begin(), sorted.end());
	json j;
	j["kind"] = "edges";
	j["balanced"] = balanced;
	j["edges"] = edge_array(sorted);
	return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string &text, std::size_t capacity) {
	json j;
	try {
		j = json::parse(text);
	} catch (const json::parse_error &e) {
		throw parse_error(0, std::string("certificate is not valid JSON: ") + e.what());
	}
	if (!j.is_object())
		throw parse_error(0, "certificate must be a JSON object");
	Certificate c;
	c.balanced = j.value("balanced", false);
	std::string kind = j.value("kind", j.contains("L") ? "partition" : "edges");
	if (kind == "partition") {
		if (!j.contains("L") || !j.contains("R") || !j["L"].is_array() || !j["R"].is_array())
			throw parse_error(0, "partition certificate needs arrays L and R");
		Bipartition p{VertexSet(capacity), VertexSet(capacity)};
		for (const auto &v : j["L"])
			p.left.insert(to_vertex(v, capacity));
		for (const auto &v : j["R"])
			p.right.insert(to_vertex(v, capacity));
		c.partition = std::move(p);
	} else if (kind == "edges") {
		if (!j.contains("edges") || !j["edges"].is_array())
			throw parse_error(0, "edge certificate needs an array 'edges'");
		for (const auto &e : j["edges"]) {
			if (!e.is_array() || e.size() != 2)
				throw parse_error(0, "each certificate edge must be a pair");
			c.edges.emplace_back(to_vertex(e[0], capacity), to_vertex(e[1], capacity));
		}
	} else {
		throw parse_error(0, "unknown certificate kind '" + kind + "'");
	}
	return c;
}

std::string sha256_hex(const std::string &bytes) {
	unsigned char digest[EVP_MAX_MD_SIZE];
	unsigned int length = 0;
	EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
	std::ostringstream out;
	for (unsigned int i = 0; i < length; ++i)
		out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
	return out.str();
}

} // namespace biclique::cli
