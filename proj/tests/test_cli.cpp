// Drives the installed binary end to end through std::system.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;

const char* kCli = RULERAG_CLI_PATH;

int run(const std::string& args, const fs::path& stdout_file = {}) {
    std::string cmd = std::string(kCli) + " " + args + " 2>/dev/null";
    if (!stdout_file.empty()) cmd += " > " + stdout_file.string();
    else cmd += " > /dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path setup_workspace() {
    const fs::path base = fs::temp_directory_path() / "rl_cli";
    fs::remove_all(base);
    fs::create_directories(base);

    std::ofstream data(base / "toy.csv", std::ios::binary);
    data << "Severity,Sex,Area\n";
    for (int i = 0; i < 40; ++i) {
        data << (i % 5 == 0 ? "Fatal" : "Slight") << ','
             << (i % 2 == 0 ? "Male" : "Female") << ','
             << (i % 4 < 2 ? "Rural" : "Urban") << '\n';
    }

    std::ofstream cfg(base / "config.json", std::ios::binary);
    cfg << R"({
      "data": {"path": ")" << (base / "toy.csv").string() << R"(",
               "delimiter": ",",
               "columns": [{"name": "Severity", "kind": "ordinal",
                            "order": ["Fatal", "Slight"]},
                           {"name": "Sex"}, {"name": "Area"}]},
      "task": {"quantifiers": {"Base": 1},
               "ante": {"attributes": [{"name": "Sex", "type": "subset"},
                                       {"name": "Area", "type": "subset"}],
                        "minlen": 1, "maxlen": 2},
               "succ": {"attributes": [{"name": "Severity", "type": "lcut"}],
                        "minlen": 1, "maxlen": 1}},
      "chunking": {"chunk_size": 4, "overlap": 1},
      "output": {"dir": ")" << (base / "out").string() << R"("}
    })";
    return base;
}

}  // namespace

TEST_CASE("cli pipeline and subcommands") {
    const fs::path base = setup_workspace();
    const std::string config = " --config " + (base / "config.json").string();

    CHECK(run("pipeline" + config) == 0);
    REQUIRE(fs::exists(base / "out" / "chunks.jsonl"));
    const std::string chunks = slurp(base / "out" / "chunks.jsonl");
    const std::string sentences = slurp(base / "out" / "sentences.txt");
    CHECK(!sentences.empty());

    SUBCASE("subcommand sequence reproduces the pipeline byte for byte") {
        fs::remove_all(base / "out");
        const fs::path summary = base / "summary.txt";
        CHECK(run("mine" + config, summary) == 0);
        CHECK(slurp(summary).find("Task type : 4ftMiner") != std::string::npos);
        CHECK(slurp(summary).find("Number of rules :") != std::string::npos);
        CHECK(run("text" + config) == 0);
        CHECK(run("emit" + config) == 0);
        CHECK(slurp(base / "out" / "chunks.jsonl") == chunks);
        CHECK(slurp(base / "out" / "sentences.txt") == sentences);
    }

    SUBCASE("flags override the config file") {
        CHECK(run("pipeline --workers 2 --chunk-size 2 --overlap 0" + config) == 0);
        CHECK(slurp(base / "out" / "sentences.txt") == sentences);
        CHECK(slurp(base / "out" / "chunks.jsonl") != chunks);
        CHECK(run("emit --overlap 7" + config) == 2);  // overlap >= size
    }

    SUBCASE("exit codes distinguish failure classes") {
        CHECK(run("pipeline") == 2);  // no config at all
        CHECK(run("pipeline --config " + (base / "nope.json").string()) == 2);
        CHECK(run("mine --data " + (base / "absent.csv").string() + config) == 3);
        CHECK(run("frobnicate" + config) == 2);
    }

    fs::remove_all(base);
}
