#include "causalpath/dataset.hpp"
#include "causalpath/synth.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using namespace causalpath;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    const fs::path tmp = fs::temp_directory_path();
    const auto out = tmp / "causalpath_cli_out.txt";
    const auto err = tmp / "causalpath_cli_err.txt";
    const std::string cmd = std::string(CAUSALPATH_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_text_file(out);
    r.err = read_text_file(err);
    return r;
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("causalpath_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

}  // namespace

TEST(Cli, DecidePrintsEveryRow) {
    const auto dir = scratch("decide");
    const auto pair = generate({.n = 200, .seed = 3});
    std::vector<double> values;
    for (std::size_t i = 0; i < pair.size(); ++i) {
        values.push_back(pair.x[i]);
        values.push_back(pair.y[i]);
    }
    write(dir / "p.txt", format_pair_file(Table(pair.size(), 2, values)));
    const auto r = run_cli("decide " + (dir / "p.txt").string() + " --boot-iters 3");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("row,score_xy,score_yx,decision,tie,", 0), 0u) << r.out;
    for (const char* row : {"\nM1,", "\nM2,", "\nM3,", "\nM4,", "\nensemble,", "\np_cause,"})
        EXPECT_NE(r.out.find(row), std::string::npos) << row;
    const auto three = run_cli("decide " + (dir / "p.txt").string() + " --boot-iters 3 --methods M2,M3,M4 --leader M2");
    ASSERT_EQ(three.code, 0) << three.err;
    EXPECT_EQ(three.out.find("\nM1,"), std::string::npos);
    EXPECT_EQ(std::count(three.out.begin(), three.out.end(), '\n'), 6);
    const auto j = run_cli("decide " + (dir / "p.txt").string() + " --boot-iters 3 --format json");
    ASSERT_EQ(j.code, 0) << j.err;
    EXPECT_EQ(j.out.front(), '{');
}

TEST(Cli, ConstantColumnExitsTwo) {
    const auto dir = scratch("constant");
    write(dir / "c.txt", "1 5\n2 5\n3 5\n4 5\n");
    const auto r = run_cli("decide " + (dir / "c.txt").string());
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("column 2"), std::string::npos) << r.err;
}

TEST(Cli, BadArgumentsExitOne) {
    EXPECT_EQ(run_cli("").code, 1);
    EXPECT_EQ(run_cli("frobnicate").code, 1);
    const auto dir = scratch("bad");
    write(dir / "p.txt", "1 2\n2 3\n3 5\n4 4\n");
    EXPECT_EQ(run_cli("decide " + (dir / "p.txt").string() + " --leader M1").code, 1);
    EXPECT_EQ(run_cli("decide " + (dir / "p.txt").string() + " --methods M2,M9").code, 1);
    write(dir / "ragged.txt", "1 2\n3\n");
    EXPECT_EQ(run_cli("decide " + (dir / "ragged.txt").string()).code, 1);
}

TEST(Cli, SynthThenBench) {
    const auto dir = scratch("bench");
    ASSERT_EQ(run_cli("synth --count 6 --n 100 --seed 3 --out " + (dir / "data").string()).code, 0);
    const std::string base = "bench --data-dir " + (dir / "data").string() + " --meta " +
                             (dir / "data" / "pairmeta.txt").string() + " --boot-iters 3";
    const auto r = run_cli(base + " --threads 2 --out " + (dir / "a").string());
    ASSERT_EQ(r.code, 0) << r.err;
    const auto s = run_cli(base + " --threads 1 --out " + (dir / "b").string());
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(read_text_file(dir / "a" / "records.csv"), read_text_file(dir / "b" / "records.csv"));
    const auto j = run_cli(base + " --format json --out " + (dir / "j").string());
    ASSERT_EQ(j.code, 0) << j.err;
    EXPECT_TRUE(fs::exists(dir / "j" / "report.json"));
}

TEST(Cli, EmptyBenchExitsThree) {
    const auto dir = scratch("empty");
    write(dir / "flat.txt", "1 5\n2 5\n3 5\n4 5\n");
    write(dir / "pairmeta.txt", "flat 1 1 2 2 1\n");
    const auto r = run_cli("bench --data-dir " + dir.string() + " --meta " + (dir / "pairmeta.txt").string() +
                           " --out " + (dir / "out").string());
    EXPECT_EQ(r.code, 3) << r.err;
}

TEST(Cli, SynthWritesLoadableFiles) {
    const auto dir = scratch("synth");
    ASSERT_EQ(run_cli("synth --count 10 --n 50 --seed 5 --out " + (dir / "a").string()).code, 0);
    ASSERT_EQ(run_cli("synth --count 10 --n 50 --seed 5 --out " + (dir / "b").string()).code, 0);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir / "a")) {
        ++files;
        EXPECT_EQ(read_text_file(e.path()), read_text_file(dir / "b" / e.path().filename()));
    }
    EXPECT_EQ(files, 11u);
    const auto loaded = load_dataset_dir(dir / "a", dir / "a" / "pairmeta.txt");
    EXPECT_EQ(loaded.pairs.size(), 10u);
    EXPECT_TRUE(loaded.skipped.empty());
}
