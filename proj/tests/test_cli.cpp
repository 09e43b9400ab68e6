#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#ifdef _WIN32
#error "the CLI tests assume a POSIX shell"
#endif
#include <sys/wait.h>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
    const char* env = std::getenv("NETRESIL_CLI");
    REQUIRE_MESSAGE(env != nullptr, "NETRESIL_CLI must point at the netresil binary");
    return env;
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("netresil_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

// Runs `args` through the shell with stdout/stderr captured to files.
RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;
    const std::string cmd =
        args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return RunResult{code, slurp(out), slurp(err)};
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

}  // namespace

TEST_CASE("attack subcommand emits a JSON report") {
    const auto input = write_file("c6.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    const auto r = run(cli_path() + " attack " + input.string() + " --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"rows\"") != std::string::npos);
    CHECK(r.out.find("\"avg_path_length_largest\"") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("attack runs are byte-identical") {
    const auto input = write_file("net.txt", "a b\nb c\nc d\nd a\na c\nd e\ne f\nf g\ng e\n");
    const std::string cmd =
        cli_path() + " attack " + input.string() + " --fraction 0.3 --seed 5";
    const auto r1 = run(cmd);
    const auto r2 = run(cmd);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK_FALSE(r1.out.empty());
}

TEST_CASE("attack respects --format csv and --output") {
    const auto input = write_file("csv_in.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    const auto out_path = scratch_dir() / "report.csv";
    const auto r = run(cli_path() + " attack " + input.string() +
                       " --seed 7 --format csv --output " + out_path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());  // everything went to the file
    const std::string csv = slurp(out_path);
    CHECK(csv.find("metric,before,after_targeted,after_random\n") == 0);
    CHECK(csv.find("component_count,1,") != std::string::npos);
}

TEST_CASE("attack supports trials, adaptive mode and centrality choice") {
    const auto input = write_file("t.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3\n");
    const auto r = run(cli_path() + " attack " + input.string() +
                       " --seed 2 --trials 3 --adaptive --centrality degree");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"trials\": 3") != std::string::npos);
    CHECK(r.out.find("\"mode\": \"adaptive\"") != std::string::npos);
    CHECK(r.out.find("\"centrality\": \"degree\"") != std::string::npos);
}

TEST_CASE("analyze reports centralities, communities and metrics") {
    const auto input = write_file("tt.txt", "0 1\n0 2\n1 2\n2 3\n3 4\n3 5\n4 5\n");
    const auto r = run(cli_path() + " analyze " + input.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"centrality\"") != std::string::npos);
    CHECK(r.out.find("\"communities\"") != std::string::npos);
    CHECK(r.out.find("\"metrics\"") != std::string::npos);

    const auto csv = run(cli_path() + " analyze " + input.string() + " --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("node,degree,closeness,betweenness,community") != std::string::npos);
}

TEST_CASE("communities picks the requested algorithm") {
    const auto input = write_file("comm.txt", "0 1\n0 2\n1 2\n2 3\n3 4\n3 5\n4 5\n");
    const auto louvain = run(cli_path() + " communities " + input.string());
    CHECK(louvain.exit_code == 0);
    CHECK(louvain.out.find("\"algorithm\": \"louvain\"") != std::string::npos);
    CHECK(louvain.out.find("\"community_count\": 2") != std::string::npos);

    const auto gn = run(cli_path() + " communities " + input.string() +
                        " --algorithm girvan-newman");
    CHECK(gn.exit_code == 0);
    CHECK(gn.out.find("\"algorithm\": \"girvan-newman\"") != std::string::npos);
    CHECK(gn.out.find("\"community_count\": 2") != std::string::npos);

    const auto csv = run(cli_path() + " communities " + input.string() + " --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("node,community\n") == 0);
}

TEST_CASE("communities writes a DOT companion file") {
    const auto input = write_file("dot_in.txt", "0 1\n0 2\n1 2\n2 3\n3 4\n3 5\n4 5\n");
    const auto dot_path = scratch_dir() / "comm.dot";
    const auto r = run(cli_path() + " communities " + input.string() + " --dot " +
                       dot_path.string());
    CHECK(r.exit_code == 0);
    const std::string dot = slurp(dot_path);
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(dot.find("style=filled") != std::string::npos);
}

TEST_CASE("generate emits an edge list by default") {
    const auto r = run(cli_path() + " generate --model ba --n 100 --m 2 --seed 1");
    CHECK(r.exit_code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 196);

    const auto er = run(cli_path() + " generate --model er --n 10 --p 0.3 --seed 1");
    CHECK(er.exit_code == 0);
    CHECK(er.out.find("0 9\n") != std::string::npos);
}

TEST_CASE("generate supports json and csv formats") {
    const auto j = run(cli_path() + " generate --model er --n 6 --p 1.0 --seed 1 --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"model\": \"er\"") != std::string::npos);
    CHECK(j.out.find("\"edges\"") != std::string::npos);

    const auto c = run(cli_path() + " generate --model er --n 6 --p 1.0 --seed 1 --format csv");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("source,target\n") == 0);
    CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 16);  // header + 15 edges
}

TEST_CASE("generate pipes into attack via stdin") {
    const auto r = run(cli_path() + " generate --model ba --n 100 --m 2 --seed 1 | " +
                       cli_path() + " attack - --fraction 0.3333 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"metric\": \"component_count\"") != std::string::npos);
    CHECK(r.out.find("\"metric\": \"largest_component_size\"") != std::string::npos);
    CHECK(r.out.find("\"metric\": \"avg_path_length_largest\"") != std::string::npos);
}

TEST_CASE("input errors exit 1 with a clean stdout") {
    const auto missing = run(cli_path() + " attack /nonexistent/net.txt --seed 1");
    CHECK(missing.exit_code == 1);
    CHECK(missing.out.empty());
    CHECK_FALSE(missing.err.empty());

    const auto selfloop = write_file("bad.txt", "x x\n");
    const auto loop = run(cli_path() + " attack " + selfloop.string() + " --seed 1");
    CHECK(loop.exit_code == 1);
    CHECK(loop.out.empty());

    const auto malformed = write_file("bad2.txt", "a b c\n");
    const auto mal = run(cli_path() + " analyze " + malformed.string());
    CHECK(mal.exit_code == 1);
    CHECK(mal.out.empty());

    const auto tiny = write_file("tiny.txt", "a b\n");
    const auto frac = run(cli_path() + " attack " + tiny.string() + " --fraction 0.1 --seed 1");
    CHECK(frac.exit_code == 1);  // floor(0.1 * 2) = 0 victims
    CHECK(frac.out.empty());
}

TEST_CASE("usage errors exit 2 with a clean stdout") {
    const auto nocmd = run(cli_path());
    CHECK(nocmd.exit_code == 2);
    CHECK(nocmd.out.empty());

    const auto badflag = run(cli_path() + " attack net.txt --bogus");
    CHECK(badflag.exit_code == 2);
    CHECK(badflag.out.empty());

    const auto badformat = run(cli_path() + " generate --model ba --n 10 --m 2 --format yaml");
    CHECK(badformat.exit_code == 2);
    CHECK(badformat.out.empty());

    const auto missing_m = run(cli_path() + " generate --model ba --n 10");
    CHECK(missing_m.exit_code == 2);
    CHECK(missing_m.out.empty());

    const auto wrong_param = run(cli_path() + " generate --model er --n 10 --m 2");
    CHECK(wrong_param.exit_code == 2);
    CHECK(wrong_param.out.empty());

    const auto bad_algo = run(cli_path() + " communities x.txt --algorithm kmeans");
    CHECK(bad_algo.exit_code == 2);
    CHECK(bad_algo.out.empty());
}

TEST_CASE("semantically invalid parameter values exit 1") {
    const auto input = write_file("c4.txt", "0 1\n1 2\n2 3\n3 0\n");
    const auto bad_fraction = run(cli_path() + " attack " + input.string() +
                                  " --fraction 1.5 --seed 1");
    CHECK(bad_fraction.exit_code == 1);
    CHECK(bad_fraction.out.empty());

    const auto bad_ba = run(cli_path() + " generate --model ba --n 3 --m 7 --seed 1");
    CHECK(bad_ba.exit_code == 1);
    CHECK(bad_ba.out.empty());

    const auto bad_p = run(cli_path() + " generate --model er --n 3 --p 1.5 --seed 1");
    CHECK(bad_p.exit_code == 1);
    CHECK(bad_p.out.empty());
}

TEST_CASE("help is available and exits 0") {
    const auto r = run(cli_path() + " --help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("attack") != std::string::npos);
    CHECK(r.out.find("generate") != std::string::npos);
}
