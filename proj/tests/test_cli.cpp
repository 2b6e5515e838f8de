#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "biclique/cli.hpp"
#include "biclique/errors.hpp"

using namespace biclique;
namespace fs = std::filesystem;

namespace {

struct Sandbox {
	fs::path dir;
	Sandbox() {
		dir = fs::temp_directory_path() / ("biclique-cli-" + std::to_string(::getpid()));
		fs::create_directories(dir);
	}
	~Sandbox() { fs::remove_all(dir); }
	std::string put(const std::string &name, const std::string &text) const {
		std::ofstream(dir / name) << text;
		return (dir / name).string();
	}
	std::string at(const std::string &name) const { return (dir / name).string(); }
};

struct Result {
	int code;
	std::string out;
	std::string err;
};

Result call(std::vector<std::string> args) {
	std::ostringstream out, err;
	int code = cli::run(args, out, err);
	return {code, out.str(), err.str()};
}

std::string slurp(const std::string &path) {
	std::ifstream in(path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

const char *triangle = "p 3 3\ne 1 2\ne 2 3\ne 1 3\n";
const char *c4 = "p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
const char *c5 = "p 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";

} // namespace

TEST_CASE("solve exit codes") {
	Sandbox box;
	std::string tri = box.put("tri.txt", triangle);
	CHECK(call({"solve", tri, "--budget", "1"}).code == cli::exit_yes);
	CHECK(call({"solve", tri, "--budget", "0"}).code == cli::exit_no);
	CHECK(call({"solve", tri, "--budget", "1", "--engine", "oracle"}).code == cli::exit_yes);
	CHECK(call({"solve", box.put("bad.txt", "p 3\n"), "--budget", "1"}).code == cli::exit_error);
	CHECK(call({"solve", box.put("split.txt", "p 3 1\ne 1 2\n"), "--budget", "1"}).code == cli::exit_error);
	CHECK(call({"solve", tri, "--budget", "-1"}).code == cli::exit_error);
	CHECK(call({"solve", box.at("missing.txt"), "--budget", "1"}).code == cli::exit_error);
	CHECK(call({"frobnicate"}).code == cli::exit_error);
}

TEST_CASE("solve report and certificate") {
	Sandbox box;
	std::string tri = box.put("tri.txt", triangle);
	std::string cert = box.at("tri.json");
	Result r = call({"solve", tri, "--budget", "1", "--certificate", cert, "--trace"});
	REQUIRE(r.code == cli::exit_yes);
	auto j = nlohmann::json::parse(r.out);
	CHECK(j["answer"] == "yes");
	CHECK(j["certificate"] == cert);
	CHECK(j.contains("trace"));
	CHECK(j["input_sha256"].get<std::string>().size() == 64);
	CHECK(call({"verify", tri, cert, "--budget", "1"}).code == cli::exit_yes);
	CHECK(call({"verify", tri, cert, "--budget", "0"}).code == cli::exit_no);
	std::string first = slurp(cert);
	call({"solve", tri, "--budget", "1", "--certificate", cert});
	CHECK(slurp(cert) == first);
}

TEST_CASE("verify examples") {
	Sandbox box;
	std::string c4_path = box.put("c4.txt", c4);
	std::string c5_path = box.put("c5.txt", c5);
	std::string part = box.put("part.json", R"({"kind": "partition", "L": [1, 3], "R": [2, 4]})");
	CHECK(call({"verify", c4_path, part, "--budget", "0"}).code == cli::exit_yes);
	CHECK(call({"verify", c5_path, part, "--budget", "0"}).code == cli::exit_error);
	std::string edge = box.put("edge.json", R"({"kind": "edges", "edges": [[1, 2]]})");
	CHECK(call({"verify", c5_path, edge, "--budget", "1", "--balanced"}).code == cli::exit_yes);
	CHECK(call({"verify", c5_path, edge, "--budget", "0"}).code == cli::exit_no);
	std::string stray = box.put("stray.json", R"({"edges": [[1, 3]]})");
	CHECK(call({"verify", c5_path, stray, "--budget", "1"}).code == cli::exit_error);
	std::string junk = box.put("junk.json", "{not json");
	CHECK(call({"verify", c5_path, junk}).code == cli::exit_error);
	std::string range = box.put("range.json", R"({"L": [1, 9], "R": [2, 3, 4, 5]})");
	CHECK(call({"verify", c5_path, range}).code == cli::exit_error);
}

TEST_CASE("kernelize writes the reduced instance and sidecar") {
	Sandbox box;
	std::string tri = box.put("tri.txt", triangle);
	std::string out = box.at("kernel.txt");
	Result r = call({"kernelize", tri, "--budget", "0", "--output", out});
	CHECK(r.code == cli::exit_no);
	auto side = nlohmann::json::parse(slurp(out + ".json"));
	CHECK(side["outcome"] == "trivial-no");
	CHECK(side["original_n"] == 3);
	CHECK(side["rule_applications"].size() == 1);

	std::string c5_path = box.put("c5.txt", c5);
	CHECK(call({"kernelize", c5_path, "--budget", "1", "--output", out}).code == cli::exit_yes);
	auto side2 = nlohmann::json::parse(slurp(out + ".json"));
	CHECK(side2["outcome"] != "trivial-no");
	CHECK(side2["final_k"].is_number_integer());
}

TEST_CASE("generate writes instances with provenance") {
	Sandbox box;
	std::string rbds = box.put("r.txt", "p rbds 2 1 2 1\ne 1 1\ne 2 1\n");
	std::string out = box.at("gen.txt");
	REQUIRE(call({"generate", "rbds", rbds, "--output", out}).code == cli::exit_yes);
	CHECK(slurp(out).find("p 8 8\n") != std::string::npos);
	auto side = nlohmann::json::parse(slurp(out + ".json"));
	CHECK(side["budget"] == 2);
	CHECK(side["source_answer"] == "yes");
	CHECK(call({"solve", out, "--budget", "2"}).code == cli::exit_yes);

	std::string hg = box.put("h.txt", "h 2 2\n1 2\n1 2\n");
	REQUIRE(call({"generate", "h2c", hg, "--output", out}).code == cli::exit_yes);
	auto hside = nlohmann::json::parse(slurp(out + ".json"));
	CHECK(hside["budget"] == 8);
	CHECK(hside["vertices"] == 36);
	CHECK(hside["counts"]["intermediate_vertices"] == 32);

	std::string src = box.put("k3.txt", triangle);
	REQUIRE(call({"generate", "is", src, "--budget", "1", "--output", out}).code == cli::exit_yes);
	CHECK(nlohmann::json::parse(slurp(out + ".json"))["target_size"] == 2);
	CHECK(call({"generate", "is", src, "--output", out}).code == cli::exit_error);
	CHECK(call({"generate", "rbds", box.put("bad.txt", "p rbds 2 1 0 1\n"), "--output", out}).code ==
		  cli::exit_error);
}

TEST_CASE("oracle and selftest subcommands") {
	Sandbox box;
	std::string c5_path = box.put("c5.txt", c5);
	Result r = call({"oracle", c5_path, "--budget", "1", "--balanced", "--min-k"});
	CHECK(r.code == cli::exit_yes);
	CHECK(nlohmann::json::parse(r.out)["min_k"] == 1);
	CHECK(call({"oracle", c5_path, "--budget", "0"}).code == cli::exit_no);
	Result s = call({"selftest", "--max-n", "4"});
	CHECK(s.code == cli::exit_yes);
	CHECK(nlohmann::json::parse(s.out)["disagreements"] == 0);
}
