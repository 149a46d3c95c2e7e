#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <cstdlib>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"
#include "morsefield/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = morsefield::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// A scratch file removed when the test ends.
struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& name, const std::string& content = "")
        : path(fs::temp_directory_path() / ("morsefield_test_" + std::to_string(::getpid()) + "_" + name)) {
        std::ofstream(path) << content;
    }
    ~TempFile() { fs::remove(path); }
    std::string str() const { return path.string(); }
    std::string read() const {
        std::ifstream in(path);
        return {std::istreambuf_iterator<char>(in), {}};
    }
};

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

std::size_t count_of(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

// Disk ids: vertices 0-2, edges a=3 b=4 c=5, face A=6.
const char* kDiskV1 = R"({"complex":"disk","pairs":[[1,3],[2,4],[5,6]]})";
const char* kDiskLoop = R"({"complex":"disk","pairs":[[0,3],[1,4],[2,5]]})";

const char* kDoubledEdge = R"({"name":"doubled","cells":[
  {"id":0,"dim":0,"label":"0","facets":[]},
  {"id":1,"dim":0,"label":"1","facets":[]},
  {"id":2,"dim":1,"label":"a","facets":[0,1]},
  {"id":3,"dim":1,"label":"b","facets":[0,1]}]})";

}  // namespace

TEST_CASE("list-builtins") {
    const auto r = run({"list-builtins"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "disk 3/3/1"));
    CHECK(contains(r.out, "sphere 4/6/4"));
    CHECK(contains(r.out, "cylinder 6/9/3"));
    CHECK(contains(r.out, "mobius 6/9/3"));
    CHECK(contains(r.out, "torus 9/18/9"));
    const auto j = nlohmann::json::parse(run({"list-builtins", "--format", "json"}).out);
    CHECK(j.size() == 5);
}

TEST_CASE("validate exit codes") {
    CHECK(run({"validate", "--complex", "builtin:mobius"}).code == 0);

    TempFile doubled("doubled.json", kDoubledEdge);
    const auto bad = run({"validate", "--complex", doubled.str()});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "strict-regularity"));
    const auto bad_json = run({"validate", "--complex", doubled.str(), "--format", "json"});
    CHECK(bad_json.code == 1);
    CHECK(nlohmann::json::parse(bad_json.out)["valid"] == false);

    TempFile garbage("garbage.json", "{\"name\": ");
    CHECK(run({"validate", "--complex", garbage.str()}).code == 2);
    CHECK(run({"validate", "--complex", "builtin:klein"}).code == 2);
    CHECK(run({"validate", "--complex", "/nonexistent/complex.json"}).code == 2);
    TempFile wrong_schema("schema.json", R"({"name":"x","cells":[{"id":0}]})");
    CHECK(run({"validate", "--complex", wrong_schema.str()}).code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"enumerate"}).code == 2);
    CHECK(run({"enumerate", "--complex", "builtin:disk", "--critical", "x"}).code == 2);
    CHECK(run({"enumerate", "--complex", "builtin:torus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumerate disk") {
    const auto raw = run({"enumerate", "--complex", "builtin:disk"});
    CHECK(raw.code == 0);
    CHECK(contains(raw.out, "fields: 9"));
    const auto classes = run({"enumerate", "--complex", "builtin:disk", "--modulo-aut"});
    CHECK(contains(classes.out, "classes: 2"));
    CHECK(contains(classes.out, "burnside classes: 2"));
    const auto j = nlohmann::json::parse(run({"enumerate", "--complex", "builtin:disk", "--modulo-aut",
                                              "--format", "json"}).out);
    CHECK(j["class_count"] == 2);
    CHECK(j["raw_count"] == 9);
    CHECK(j["optimal"] == true);
}

TEST_CASE("enumerate sphere reports the 7/4/2 split") {
    const auto j = nlohmann::json::parse(run({"enumerate", "--complex", "builtin:sphere", "--modulo-aut",
                                              "--format", "json"}).out);
    CHECK(j["class_count"] == 13);
    CHECK(j["critical_face_partition"] == nlohmann::json{{"1", 7}, {"2", 4}, {"3", 2}});
}

TEST_CASE("audit rows") {
    const auto cyl = run({"enumerate", "--complex", "builtin:cylinder", "--modulo-aut", "--audit"});
    CHECK(cyl.code == 1);
    CHECK(contains(cyl.out, "104"));
    CHECK(contains(cyl.out, "96"));
    const auto cj = nlohmann::json::parse(run({"enumerate", "--complex", "builtin:cylinder", "--modulo-aut",
                                               "--audit", "--format", "json"}).out);
    REQUIRE(cj["audit"].size() == 1);
    CHECK(cj["audit"][0]["claimed"] == 104);
    CHECK(cj["audit"][0]["computed"] == 96);
    CHECK(cj["audit"][0]["match"] == false);

    const auto mob = run({"enumerate", "--complex", "builtin:mobius", "--modulo-aut", "--audit"});
    CHECK(mob.code == 0);
    CHECK(contains(mob.out, "102"));
}

TEST_CASE("check-field") {
    TempFile v1("v1.json", kDiskV1), loop("loop.json", kDiskLoop);
    const auto ok = run({"check-field", "--complex", "builtin:disk", "--field", v1.str()});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "gradient: yes"));
    CHECK(contains(ok.out, "critical: vertex 0 (index 0)"));

    const auto cyc = run({"check-field", "--complex", "builtin:disk", "--field", loop.str()});
    CHECK(cyc.code == 1);
    CHECK(contains(cyc.out, "gradient: no"));
    CHECK(contains(cyc.out, "cycle: 0 a 1 b 2 c 0"));

    TempFile invalid("invalid.json", R"({"complex":"disk","pairs":[[0,3],[0,5]]})");
    CHECK(run({"check-field", "--complex", "builtin:disk", "--field", invalid.str()}).code == 1);
    TempFile other("other.json", R"({"complex":"sphere","pairs":[]})");
    CHECK(run({"check-field", "--complex", "builtin:disk", "--field", other.str()}).code == 2);
}

TEST_CASE("export-dot") {
    const auto plain = run({"export-dot", "--complex", "builtin:disk"});
    CHECK(plain.code == 0);
    CHECK(contains(plain.out, "digraph"));
    CHECK(count_of(plain.out, " -> ") == 9);

    TempFile v1("v1.json", kDiskV1);
    const auto marked = run({"export-dot", "--complex", "builtin:disk", "--field", v1.str()});
    CHECK(count_of(marked.out, " -> ") == 9);
    CHECK(count_of(marked.out, "penwidth") == 3);
}

TEST_CASE("morse") {
    TempFile v1("v1.json", kDiskV1), loop("loop.json", kDiskLoop);
    const auto ok = run({"morse", "--complex", "builtin:disk", "--field", v1.str(), "--format", "json"});
    CHECK(ok.code == 0);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j.size() == 7);
    const auto bad = run({"morse", "--complex", "builtin:disk", "--field", loop.str()});
    CHECK(bad.code == 1);
    CHECK(contains(bad.err, "NotGradient"));
}

TEST_CASE("aut") {
    const auto r = run({"aut", "--complex", "builtin:cylinder"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "order: 12"));
    const auto j = nlohmann::json::parse(run({"aut", "--complex", "builtin:sphere", "--format", "json"}).out);
    CHECK(j["order"] == 24);
}

TEST_CASE("paths") {
    TempFile v1("v1.json", kDiskV1);
    const auto r = run({"paths", "--complex", "builtin:disk", "--field", v1.str(), "--from", "2", "--to", "0"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "2 b 1 a 0"));
    CHECK(run({"paths", "--complex", "builtin:disk", "--field", v1.str(), "--from", "A", "--to", "0"}).code == 1);
    CHECK(run({"paths", "--complex", "builtin:disk", "--field", v1.str(), "--from", "zz", "--to", "0"}).code == 2);
}

TEST_CASE("exported complex JSON re-ingests to an identical report") {
    for (const char* name : {"disk", "sphere", "cylinder", "mobius"}) {
        CAPTURE(name);
        const std::string source = std::string("builtin:") + name;
        TempFile exported(std::string(name) + ".json");
        REQUIRE(run({"validate", "--complex", source, "--format", "json", "--output", exported.str()}).code == 0);
        const auto again = run({"validate", "--complex", exported.str(), "--format", "json"});
        CHECK(again.out == exported.read());
        const std::vector<std::string> tail{"--modulo-aut", "--format", "json"};
        auto a = std::vector<std::string>{"enumerate", "--complex", source};
        auto b = std::vector<std::string>{"enumerate", "--complex", exported.str()};
        a.insert(a.end(), tail.begin(), tail.end());
        b.insert(b.end(), tail.begin(), tail.end());
        CHECK(run(a).out == run(b).out);
    }
}

TEST_CASE("--output writes the same bytes as standard output") {
    TempFile target("out.txt");
    const auto direct = run({"enumerate", "--complex", "builtin:sphere", "--modulo-aut"});
    CHECK(run({"enumerate", "--complex", "builtin:sphere", "--modulo-aut", "--output", target.str()}).out.empty());
    CHECK(target.read() == direct.out);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::string> cmd{"enumerate", "--complex", "builtin:mobius", "--modulo-aut", "--format", "json"};
    auto threaded = cmd;
    threaded.insert(threaded.end(), {"--threads", "4"});
    const auto first = run(cmd).out;
    CHECK(run(cmd).out == first);
    CHECK(run(threaded).out == first);
}

TEST_CASE("the installed binary maps outcomes to exit codes") {
    auto status = [](const std::string& args) {
        const std::string cmd = std::string(MORSEFIELD_BIN) + " " + args + " >/dev/null 2>&1";
        const int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("list-builtins") == 0);
    CHECK(status("validate --complex builtin:mobius") == 0);
    TempFile doubled("bin_doubled.json", kDoubledEdge);
    CHECK(status("validate --complex " + doubled.str()) == 1);
    CHECK(status("validate --complex builtin:nothing") == 2);
    CHECK(status("enumerate --complex builtin:cylinder --modulo-aut --audit") == 1);
}
