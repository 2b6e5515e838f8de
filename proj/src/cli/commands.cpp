#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "biclique/cli.hpp"
#include "biclique/errors.hpp"
#include "biclique/fpt.hpp"
#include "biclique/io.hpp"
#include "biclique/kernel.hpp"
#include "biclique/oracle.hpp"
#include "biclique/reductions.hpp"

namespace biclique::cli {

using json = nlohmann::ordered_json;

namespace {

// Thrown for usage problems that should map to exit code 2.
struct usage_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

std::string slurp(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw usage_error("cannot open " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void spill(const std::string &path, const std::string &text) {
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw usage_error("cannot write " + path);
	out << text;
}

struct Input {
	std::string path;
	std::string digest;
	Graph graph;
};

Input load_graph(const std::string &path) {
	std::string bytes = slurp(path);
	std::istringstream in(bytes);
	return {path, sha256_hex(bytes), read_edge_list(in)};
}

class Clock {
public:
	double ms() const {
		return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
	}

private:
	std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json report(const std::string &command, const Input &in) {
	json j;
	j["command"] = command;
	j["input"] = in.path;
	j["input_sha256"] = in.digest;
	j["n"] = in.graph.order();
	j["m"] = in.graph.size();
	return j;
}

json stats_json(const FptStats &s) {
	json j;
	j["modulator_size"] = s.modulator_size;
	j["z_partitions"] = s.z_partitions;
	j["z_partitions_pruned"] = s.z_partitions_pruned;
	j["branching_rule_applications"] = s.branching_applications;
	j["preprocessing_rule_applications"] = s.preprocessing_applications;
	j["split_solver_calls"] = s.split_solver_calls;
	j["candidates_checked"] = s.candidates_checked;
	j["whole_graph_enumerations"] = s.whole_graph_enumerations;
	j["rejected_certificates"] = s.rejected_certificates;
	j["max_depth"] = s.max_depth;
	j["winning_case"] = s.winning_case;
	return j;
}

struct DecisionFlags {
	std::string path;
	long budget = 0;
	bool balanced = false;
	std::string certificate;
	unsigned threads = 1;
};

void add_decision_flags(CLI::App *cmd, DecisionFlags &f) {
	cmd->add_option("graph", f.path, "edge-list file")->required();
	cmd->add_option("-k,--budget", f.budget, "contraction budget")->required();
	cmd->add_flag("--balanced", f.balanced, "target a balanced biclique");
	cmd->add_option("--certificate", f.certificate, "write the certificate JSON here on a yes answer");
	cmd->add_option("--threads", f.threads, "worker threads")->check(CLI::Range(1u, 256u));
}

int emit(std::ostream &out, const json &j, int code) {
	out << j.dump(2) << '\n';
	return code;
}

int cmd_solve(const DecisionFlags &f, const std::string &engine, bool trace, std::uint64_t node_limit,
			  double timeout, std::ostream &out) {
	Clock clock;
	Input in = load_graph(f.path);
	if (f.budget < 0)
		throw usage_error("budget must be non-negative");
	if (!is_connected(in.graph))
		throw precondition_error("input graph is disconnected");
	json j = report("solve", in);
	j["engine"] = engine;
	j["balanced"] = f.balanced;
	j["budget"] = f.budget;
	std::optional<Bipartition> certificate;
	std::string answer;
	if (engine == "oracle") {
		OracleOptions opts = OracleOptions::from_environment();
		opts.threads = f.threads;
		OracleResult r = f.balanced ? oracle_bbc(in.graph, f.budget, opts) : oracle_bc(in.graph, f.budget, opts);
		answer = r.answer ? "yes" : "no";
		certificate = r.certificate;
		j["counters"] = json::object();
	} else {
		FptOptions opts;
		opts.threads = f.threads;
		opts.node_limit = node_limit;
		if (timeout > 0)
			opts.deadline = std::chrono::steady_clock::now() +
							std::chrono::duration_cast<std::chrono::steady_clock::duration>(
								std::chrono::duration<double>(timeout));
		Verdict v = f.balanced ? fpt_bbc(in.graph, f.budget, opts) : fpt_bc(in.graph, f.budget, opts);
		answer = to_string(v.outcome);
		certificate = v.partition;
		json counters = stats_json(v.stats);
		j["counters"] = {{"z_partitions", counters["z_partitions"]},
						 {"branching_rule_applications", counters["branching_rule_applications"]},
						 {"preprocessing_rule_applications", counters["preprocessing_rule_applications"]},
						 {"candidates_checked", counters["candidates_checked"]}};
		if (trace)
			j["trace"] = counters;
	}
	j["answer"] = answer;
	j["certificate"] = nullptr;
	if (certificate && !f.certificate.empty()) {
		spill(f.certificate, certificate_json(in.graph, *certificate, f.balanced, f.budget));
		j["certificate"] = f.certificate;
	}
	j["wall_time_ms"] = clock.ms();
	int code = answer == "yes" ? exit_yes : answer == "no" ? exit_no : exit_error;
	return emit(out, j, code);
}

int cmd_oracle(const DecisionFlags &f, bool min_k, std::ostream &out) {
	Clock clock;
	Input in = load_graph(f.path);
	OracleOptions opts = OracleOptions::from_environment();
	opts.threads = f.threads;
	OracleResult r = f.balanced ? oracle_bbc(in.graph, f.budget, opts) : oracle_bc(in.graph, f.budget, opts);
	json j = report("oracle", in);
	j["balanced"] = f.balanced;
	j["budget"] = f.budget;
	j["answer"] = r.answer ? "yes" : "no";
	if (min_k) {
		auto best = oracle_min_k(in.graph, f.balanced, opts);
		j["min_k"] = best ? json(*best) : json(nullptr);
	}
	j["certificate"] = nullptr;
	if (r.certificate && !f.certificate.empty()) {
		spill(f.certificate, certificate_json(in.graph, *r.certificate, f.balanced, f.budget));
		j["certificate"] = f.certificate;
	}
	j["wall_time_ms"] = clock.ms();
	return emit(out, j, r.answer ? exit_yes : exit_no);
}

int cmd_verify(const std::string &path, const std::string &cert_path, std::optional<long> budget,
			   bool force_balanced, std::ostream &out) {
	Clock clock;
	Input in = load_graph(path);
	Certificate c = parse_certificate(slurp(cert_path), in.graph.capacity());
	bool balanced = force_balanced || c.balanced;
	json j = report("verify", in);
	j["certificate"] = cert_path;
	j["balanced"] = balanced;
	bool valid = false;
	if (c.partition) {
		require_partition(in.graph, *c.partition);
		long k = budget.value_or(std::numeric_limits<long>::max());
		PartitionVerdict v = balanced ? check_valid_balanced_partition(in.graph, *c.partition, k)
									  : check_valid_partition(in.graph, *c.partition, k);
		valid = v.valid;
		j["kind"] = "partition";
		j["sf_total"] = v.sf_total;
		static const char *names[] = {"none", "budget", "adjacency", "balance"};
		j["failed_condition"] = names[static_cast<int>(v.failed_condition)];
	} else {
		for (const Edge &e : c.edges)
			if (!in.graph.has_edge(e.u, e.v))
				throw malformed_partition("certificate edge " + std::to_string(e.u + 1) + " " +
										  std::to_string(e.v + 1) + " is not in the graph");
		long k = budget.value_or(static_cast<long>(c.edges.size()));
		valid = verify_solution(in.graph, ContractionSolution{c.edges, balanced}, k);
		j["kind"] = "edges";
		j["edge_count"] = c.edges.size();
	}
	if (budget)
		j["budget"] = *budget;
	j["answer"] = valid ? "valid" : "invalid";
	j["wall_time_ms"] = clock.ms();
	return emit(out, j, valid ? exit_yes : exit_no);
}

int cmd_kernelize(const std::string &path, long budget, const std::string &output, std::ostream &out) {
	Clock clock;
	Input in = load_graph(path);
	KernelState st = kernelize_bbc(in.graph, budget);
	std::ostringstream graph_text;
	write_edge_list(graph_text, st.graph, "kernel of " + path + "\nk " + std::to_string(st.k));
	json side;
	side["original_n"] = st.original_n;
	side["original_k"] = st.original_k;
	side["reduced_n"] = st.graph.order();
	side["reduced_m"] = st.graph.size();
	side["final_k"] = st.k;
	side["outcome"] = to_string(st.outcome);
	json rules = json::array();
	for (const RuleApplication &r : st.log)
		rules.push_back({{"rule", r.rule}, {"n", r.n}, {"k", r.k}, {"z", r.z}, {"x", r.x}, {"y", r.y},
						 {"detail", r.detail}});
	side["rule_applications"] = std::move(rules);
	spill(output, graph_text.str());
	spill(output + ".json", side.dump(2) + "\n");
	json j = report("kernelize", in);
	j["budget"] = budget;
	j["output"] = output;
	j["sidecar"] = output + ".json";
	j["outcome"] = side["outcome"];
	j["reduced_n"] = side["reduced_n"];
	j["final_k"] = st.k;
	j["counters"] = {{"rule_applications", st.log.size()}};
	j["wall_time_ms"] = clock.ms();
	return emit(out, j, st.outcome == KernelOutcome::trivial_no ? exit_no : exit_yes);
}

int cmd_generate(const std::string &kind, const std::string &path, const std::string &output,
				 std::optional<long> k_is, bool solve, std::ostream &out) {
	Clock clock;
	std::string bytes = slurp(path);
	std::istringstream in(bytes);
	Generated g;
	std::optional<bool> source_answer;
	std::string parameter_name = "budget";
	if (kind == "rbds") {
		RbdsInstance inst = read_rbds(in);
		g = gen_bc_from_rbds(inst);
		if (solve && inst.red <= 20)
			source_answer = solve_rbds_brute(inst);
	} else if (kind == "h2c") {
		Hypergraph hg = read_hypergraph(in);
		g = gen_bbc_from_h2c(hg);
		if (solve && hg.n <= 20)
			source_answer = solve_h2c_brute(normalize(hg));
	} else {
		if (!k_is)
			throw usage_error("generate is needs --budget (the independent set size)");
		Graph h = read_edge_list(in);
		g = gen_bc_from_is(h, *k_is);
		parameter_name = "target_size";
		if (solve && h.order() <= 20)
			source_answer = solve_is_brute(h, *k_is);
	}
	std::ostringstream graph_text;
	write_edge_list(graph_text, g.graph, "generated by " + kind + " reduction\n" + parameter_name + " " +
											 std::to_string(g.parameter));
	json side;
	side["kind"] = kind;
	side["source"] = path;
	side["source_sha256"] = sha256_hex(bytes);
	side[parameter_name] = g.parameter;
	side["vertices"] = g.graph.order();
	side["edges"] = g.graph.size();
	json counts;
	for (const auto &[name, value] : g.counts)
		counts[name] = value;
	side["counts"] = std::move(counts);
	side["normalization"] = g.normalization;
	side["source_answer"] = source_answer ? json(*source_answer ? "yes" : "no") : json(nullptr);
	spill(output, graph_text.str());
	spill(output + ".json", side.dump(2) + "\n");
	json j;
	j["command"] = "generate";
	j["kind"] = kind;
	j["input"] = path;
	j["input_sha256"] = side["source_sha256"];
	j["output"] = output;
	j["sidecar"] = output + ".json";
	j[parameter_name] = g.parameter;
	j["vertices"] = g.graph.order();
	j["wall_time_ms"] = clock.ms();
	return emit(out, j, exit_yes);
}

int cmd_selftest(std::size_t max_n, long max_k, std::ostream &out) {
	Clock clock;
	std::size_t graphs = 0, checks = 0, disagreements = 0, bad_certificates = 0;
	for (std::size_t n = 1; n <= max_n; ++n) {
		std::vector<Edge> pairs;
		for (Vertex i = 0; i < n; ++i)
			for (Vertex j = i + 1; j < n; ++j)
				pairs.emplace_back(i, j);
		for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
			Graph g(n);
			for (std::size_t i = 0; i < pairs.size(); ++i)
				if ((mask >> i) & 1)
					g.add_edge(pairs[i].u, pairs[i].v);
			if (!is_connected(g))
				continue;
			++graphs;
			for (long k = 0; k <= max_k; ++k)
				for (bool balanced : {false, true}) {
					++checks;
					bool expected = (balanced ? oracle_bbc(g, k) : oracle_bc(g, k)).answer;
					Verdict v = balanced ? fpt_bbc(g, k) : fpt_bc(g, k);
					bool got = v.outcome == Outcome::yes;
					if (got != expected)
						++disagreements;
					if (got && !verify_solution(g, *v.solution, k))
						++bad_certificates;
				}
		}
	}
	json j;
	j["command"] = "selftest";
	j["max_n"] = max_n;
	j["max_k"] = max_k;
	j["graphs"] = graphs;
	j["checks"] = checks;
	j["disagreements"] = disagreements;
	j["bad_certificates"] = bad_certificates;
	j["answer"] = disagreements == 0 && bad_certificates == 0 ? "pass" : "fail";
	j["wall_time_ms"] = clock.ms();
	return emit(out, j, disagreements == 0 && bad_certificates == 0 ? exit_yes : exit_no);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
	CLI::App app{"Exact solvers for (balanced) biclique contraction"};
	app.require_subcommand(1);

	DecisionFlags solve_flags;
	std::string engine = "fpt";
	bool trace = false;
	std::uint64_t node_limit = 0;
	double timeout = 0;
	auto *solve = app.add_subcommand("solve", "decide whether k contractions reach a (balanced) biclique");
	add_decision_flags(solve, solve_flags);
	solve->add_option("--engine", engine, "fpt or oracle")->check(CLI::IsMember({"fpt", "oracle"}));
	solve->add_flag("--trace", trace, "include full search statistics");
	solve->add_option("--node-limit", node_limit, "give up after this many search nodes");
	solve->add_option("--timeout", timeout, "give up after this many seconds");

	DecisionFlags oracle_flags;
	bool min_k = false;
	auto *oracle = app.add_subcommand("oracle", "exhaustive partition search");
	add_decision_flags(oracle, oracle_flags);
	oracle->add_flag("--min-k", min_k, "also report the smallest sufficient budget");

	std::string verify_graph, verify_cert;
	std::optional<long> verify_budget;
	bool verify_balanced = false;
	auto *verify = app.add_subcommand("verify", "check a certificate against a graph");
	verify->add_option("graph", verify_graph, "edge-list file")->required();
	verify->add_option("certificate", verify_cert, "certificate JSON")->required();
	verify->add_option("-k,--budget", verify_budget, "contraction budget");
	verify->add_flag("--balanced", verify_balanced, "require a balanced biclique");

	std::string kernel_graph, kernel_output;
	long kernel_budget = 0;
	auto *kernelize = app.add_subcommand("kernelize", "kernelize a balanced biclique contraction instance");
	kernelize->add_option("graph", kernel_graph, "edge-list file")->required();
	kernelize->add_option("-k,--budget", kernel_budget, "contraction budget")->required();
	kernelize->add_option("-o,--output", kernel_output, "reduced edge list; sidecar goes to <output>.json")
		->required();

	std::string gen_kind, gen_source, gen_output;
	std::optional<long> gen_budget;
	bool gen_no_solve = false;
	auto *generate = app.add_subcommand("generate", "build a contraction instance from a source problem");
	generate->add_option("kind", gen_kind, "rbds, h2c or is")
		->required()
		->check(CLI::IsMember({"rbds", "h2c", "is"}));
	generate->add_option("source", gen_source, "source instance file")->required();
	generate->add_option("-o,--output", gen_output, "edge list; sidecar goes to <output>.json")->required();
	generate->add_option("-k,--budget", gen_budget, "independent set size (is only)");
	generate->add_flag("--no-solve", gen_no_solve, "skip the brute-force source solver");

	std::size_t self_n = 5;
	long self_k = 4;
	auto *selftest = app.add_subcommand("selftest", "compare the fpt solver with the oracle on small graphs");
	selftest->add_option("-n,--max-n", self_n, "largest vertex count")->check(CLI::Range(1, 7));
	selftest->add_option("-k,--max-k", self_k, "largest budget")->check(CLI::Range(0, 10));

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e, out, err);
		return code == 0 ? exit_yes : exit_error;
	}

	try {
		if (*solve)
			return cmd_solve(solve_flags, engine, trace, node_limit, timeout, out);
		if (*oracle)
			return cmd_oracle(oracle_flags, min_k, out);
		if (*verify)
			return cmd_verify(verify_graph, verify_cert, verify_budget, verify_balanced, out);
		if (*kernelize)
			return cmd_kernelize(kernel_graph, kernel_budget, kernel_output, out);
		if (*generate)
			return cmd_generate(gen_kind, gen_source, gen_output, gen_budget, !gen_no_solve, out);
		if (*selftest)
			return cmd_selftest(self_n, self_k, out);
	} catch (const std::exception &e) {
		err << "error: " << e.what() << '\n';
		return exit_error;
	}
	return exit_error;
}

} // namespace biclique::cli
