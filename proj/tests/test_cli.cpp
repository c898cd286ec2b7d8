// Drives the command-line binary end to end. Expects the binary path as
// argv[1] and uses a scratch directory under the system temp path.
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int failures = 0;

#define CHECK(cond)                                                               \
    do {                                                                          \
        if (!(cond)) {                                                            \
            ++failures;                                                           \
            std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << "  " << #cond  \
                      << "\n";                                                    \
        }                                                                         \
    } while (0)

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::string& bin, const std::string& args, const fs::path& dir) {
    fs::path out_path = dir / "stdout.txt", err_path = dir / "stderr.txt";
    std::string cmd =
        bin + " " + args + " >" + out_path.string() + " 2>" + err_path.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-binary>\n";
        return 1;
    }
    const std::string bin = argv[1];
    fs::path dir = fs::temp_directory_path() /
                   ("delpezzo_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);

    {  // generator listings
        auto r = run(bin, "curves --r 6", dir);
        CHECK(r.code == 0);
        auto lines = lines_of(r.out);
        CHECK(lines.size() == 27);
        auto first = json::parse(lines.at(0));
        CHECK(first.at("label") == "E1");
        CHECK(first.at("id") == 0);
        CHECK(first.at("kind") == "exceptional");
        CHECK(json::parse(lines.back()).at("kind") == "conic");

        CHECK(lines_of(run(bin, "curves --r 2", dir).out).size() == 3);
        CHECK(lines_of(run(bin, "curves --r 8", dir).out).size() == 242);
    }

    {  // ruling listing with census header
        auto r = run(bin, "rulings --r 8 --n 3", dir);
        CHECK(r.code == 0);
        auto lines = lines_of(r.out);
        CHECK(lines.size() == 2);
        auto header = json::parse(lines.at(0));
        CHECK(header.at("count") == 1);
        CHECK(header.at("families") == json::parse(R"([{"count":1,"name":"-2K"}])"));
        CHECK(json::parse(lines.at(1)).at("monomials").size() == 123);

        CHECK(run(bin, "rulings --r 3", dir).code == 2);
        CHECK(run(bin, "rulings --r 8 --n 7", dir).code == 2);
    }

    {  // relation files
        fs::path rel = dir / "r6.jsonl";
        auto r = run(bin, "relations --r 6 --field Q --params 2,3,5,7 --out " + rel.string(),
                     dir);
        CHECK(r.code == 0);
        auto lines = lines_of(slurp(rel));
        CHECK(lines.size() == 82);
        auto header = json::parse(lines.at(0));
        CHECK(header.at("records") == 81);
        CHECK(header.at("field") == "Q");
        auto rec = json::parse(lines.at(1));
        CHECK(rec.at("n") == 1);
        CHECK(rec.at("coeffs").size() == rec.at("monomials").size());

        // bare default: the r = 7 demonstration configuration over F_101
        auto demo = run(bin, "relations", dir);
        CHECK(demo.code == 0);
        CHECK(json::parse(lines_of(demo.out).at(0)).at("records") == 529);
        CHECK(lines_of(demo.out).size() == 530);
    }

    {  // byte-identical reruns
        auto a = run(bin, "relations --r 5 --field Q --params 2,3", dir);
        auto b = run(bin, "relations --r 5 --field Q --params 2,3", dir);
        CHECK(a.code == 0);
        CHECK(!a.out.empty());
        CHECK(a.out == b.out);
    }

    {  // special position: structured witness, code 2, no partial output
        fs::path rel = dir / "degenerate.jsonl";
        auto r = run(bin,
                     "relations --r 5 --field Q --params 2,2 --out " + rel.string(), dir);
        CHECK(r.code == 2);
        CHECK(!fs::exists(rel));
        auto err = json::parse(r.err);
        CHECK(err.at("witness").at("condition") == "collinear");
        CHECK(err.at("witness").at("points") == json::parse("[1,4,5]"));
    }

    {  // verification suites
        auto r = run(bin, "verify --suite table1", dir);
        CHECK(r.code == 0);
        auto lines = lines_of(r.out);
        CHECK(lines.size() == 24);
        for (const auto& line : lines) CHECK(json::parse(line).at("pass") == true);

        CHECK(run(bin, "verify --suite triangles", dir).code == 0);

        auto g = run(bin, "verify --suite golden81", dir);
        CHECK(g.code == 0);
        auto last = json::parse(lines_of(g.out).back());
        CHECK(last.at("check") == "golden81");
        CHECK(last.at("actual") == 81);

        auto h = run(bin, "verify --suite hilbert --r 4 --field Q", dir);
        CHECK(h.code == 0);
        CHECK(lines_of(h.out).size() == 4);

        auto k = run(bin, "verify --suite ranks", dir);
        CHECK(k.code == 0);
        for (const auto& line : lines_of(k.out)) CHECK(json::parse(line).at("pass") == true);
    }

    {  // usage errors
        CHECK(run(bin, "verify --suite nonsense", dir).code == 2);
        CHECK(run(bin, "relations --r 6 --field Q", dir).code == 2);   // params missing
        CHECK(run(bin, "relations --field Fp:4 --r 4", dir).code == 2);
        CHECK(run(bin, "curves --r 9", dir).code == 2);
        CHECK(run(bin, "nonsense", dir).code == 2);
    }

    fs::remove_all(dir);
    if (failures) {
        std::cerr << failures << " check(s) failed\n";
        return 1;
    }
    std::cout << "cli_tests: all checks passed\n";
    return 0;
}
