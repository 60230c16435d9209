#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "afflie/branching.hpp"
#include "commands.hpp"

using namespace afflie;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

std::vector<std::string> with(std::vector<std::string> a, std::initializer_list<std::string> more) {
    a.insert(a.end(), more);
    return a;
}

const std::vector<std::vector<std::string>> kCommands = {
    {"character", "-n", "2", "-L", "2*L0", "-N", "4"},
    {"branching", "-n", "2", "-a", "L0+L1", "-b", "L0", "-L", "2*L0+L1", "-N", "7"},
    {"js", "-n", "2", "-i", "2,0", "-m", "5", "--relabel"},
    {"js", "-n", "2", "-i", "1,1", "-j", "1,0", "-N", "6"},
    {"crystal", "-n", "2", "-L", "2*L0", "-N", "4"},
    {"crystal", "-n", "2", "-L", "2*L0", "-N", "4", "--labels", "M"},
};

} // namespace

TEST_CASE("documented examples") {
    auto c = run({"character", "-n", "2", "-L", "2*L0", "-N", "3"});
    CHECK(c.code == 0);
    CHECK(c.out.find("2*L1-1*d : 1\n") != std::string::npos);
    CHECK(c.out.find("2*L1-2*d : 2\n") != std::string::npos);
    CHECK(run({"character", "-n", "2", "-L", "2*L0", "-N", "0"}).out == "2*L0 : 1\n");
    auto b = run({"branching", "-n", "2", "-a", "L0+L1", "-b", "L0", "-L", "2*L0+L1", "-N", "7", "--method", "all"});
    CHECK(b.code == 0);
    CHECK(b.out == "1 + z + 2z^2 + 3z^3 + 4z^4 + 6z^5 + 8z^6 + 11z^7\n");
    for (const char* m : {"paths", "multipartitions", "theta"})
        CHECK(run({"branching", "-n", "2", "-a", "L0+L1", "-b", "L0", "-L", "3*L1", "-N", "7", "--method", m}).out ==
              "z + z^2 + z^3 + 2z^4 + 3z^5 + 4z^6 + 6z^7\n");
    auto g = run({"branching", "-n", "2", "-a", "L0", "-b", "L0", "-L", "2*L0", "-N", "4", "--method", "all"});
    CHECK(g.code == 0);
    CHECK(g.out.rfind("1", 0) == 0);
    auto j = run({"js", "-n", "2", "-i", "2,0", "-m", "5", "-j", "1,0"});
    CHECK(j.code == 0);
    CHECK(lines(j.out) == std::vector<std::string>{"((3),(2))", "((5),())"});
    CHECK(run({"js", "-n", "2", "-i", "2,0", "-m", "5", "-j", "0,1"}).out == "((4),(1))\n");
    CHECK(lines(run({"js", "-n", "2", "-i", "2,0", "-m", "5"}).out).size() == 6);
    auto r = lines(run({"js", "-n", "2", "-i", "2,0", "-m", "5", "--relabel"}).out);
    CHECK(std::find(r.begin(), r.end(), "((3),(2)) -> ((3,1),(1))") != r.end());
    CHECK(run({"js", "-n", "2", "-i", "2,0", "-m", "4", "--relabel"}).out.find("((2),(2)) -> ((2,1),(1))") !=
          std::string::npos);
    CHECK(run({"js", "-n", "2", "-i", "1,1", "-j", "1,0", "-N", "7"}).out ==
          "1 + 2z + 3z^2 + 4z^3 + 6z^4 + 9z^5 + 12z^6 + 17z^7\n");
    CHECK(run({"sharp", "-n", "3", "-a", "L1+2*L2", "--mp", "[[9,8,7,5,4,4,1,1],[9,9,7,6,5,3,3]]@0,1"}).out ==
          "[[9,9,5,4,3,3],[9,8,5,1,1],[7,7,6,4]]@1,1,2\n");
    CHECK(run({"sharp", "-n", "4", "-a", "L0", "--mp", "[[10,10,8,4,4],[9,9,1,1],[10,7,1]]@0,0,1"}).out ==
          "[[10,10,10,9,9,8,7,4,4,1,1,1]]@0\n");
    auto dot = run({"crystal", "-n", "2", "-L", "2*L0", "-N", "5", "--format", "dot"});
    CHECK(dot.code == 0);
    size_t nodes = 0;
    for (auto& l : lines(dot.out))
        if (l.find("[label=\"(") != std::string::npos) ++nodes;
    CHECK(nodes == 17);
    CHECK(run({"highest-lift", "-n", "2", "--path", "01|2*L0"}).out == "[[1],[]]@0,0\n");
}

TEST_CASE("exit codes and diagnostics") {
    auto p = run({"character", "-n", "2", "-L", "2L0", "-N", "3"});
    CHECK(p.code == 2);
    CHECK(p.err.rfind("error[", 0) == 0);
    CHECK(p.out.empty());
    CHECK(run({"branching", "-n", "2", "-a", "L0", "-b", "2*L0", "-L", "3*L0", "--method", "theta"}).code == 2);
    CHECK(run({"branching", "-n", "2", "-a", "L0", "-b", "2*L0", "-L", "2*L0"}).code == 2);
    CHECK(run({"character", "-n", "1", "-L", "L0"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"character", "-n", "2", "-L", "L0", "--shard", "3/2"}).code == 2);
    CHECK(run({"crystal", "-n", "2", "-L", "L0", "--format", "dot", "--shard", "0/2"}).code == 2);
    CHECK(run({"sharp", "-n", "3", "-a", "2*L0", "--mp", "[[4,2],[3,1],[5]]@1,1,2"}).code == 2);
    CHECK(run({"js", "-n", "2", "-i", "2,0"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    auto big = run({"branching", "-n", "9", "-a", "L0", "-b", "L0", "-L", "2*L0", "--method", "theta", "-N", "1"});
    CHECK(big.code == 4);
    CHECK(big.err.rfind("error[resource-limit]", 0) == 0);
}

TEST_CASE("truncation from the environment") {
    ::setenv("AFFLIE_TRUNCATION", "1", 1);
    auto a = run({"character", "-n", "2", "-L", "2*L0"});
    ::setenv("AFFLIE_TRUNCATION", "3", 1);
    auto b = run({"character", "-n", "2", "-L", "2*L0"});
    ::unsetenv("AFFLIE_TRUNCATION");
    auto c = run({"character", "-n", "2", "-L", "2*L0"});
    CHECK(lines(a.out).size() == 2);
    CHECK(b.out == run({"character", "-n", "2", "-L", "2*L0", "-N", "3"}).out);
    CHECK(c.out == run({"character", "-n", "2", "-L", "2*L0", "-N", "5"}).out);
    ::setenv("AFFLIE_TRUNCATION", "-4", 1);
    CHECK(run({"character", "-n", "2", "-L", "2*L0"}).code == 2);
    ::unsetenv("AFFLIE_TRUNCATION");
}

TEST_CASE("shards merge to the full record list") {
    for (auto& cmd : kCommands) {
        auto whole = run(with(cmd, {"--shard", "0/1"}));
        REQUIRE(whole.code == 0);
        for (int count = 2; count <= 5; ++count) {
            std::string merged;
            for (int i = 0; i < count; ++i) {
                auto part = run(with(cmd, {"--shard", std::to_string(i) + "/" + std::to_string(count)}));
                CHECK(part.code == 0);
                merged += part.out;
            }
            CHECK(merged == whole.out);
        }
        // json shards carry the same items
        json all = json::array();
        for (int i = 0; i < 3; ++i) {
            auto part = json::parse(run(with(cmd, {"--format", "json", "--shard", std::to_string(i) + "/3"})).out);
            for (auto& x : part["items"]) all.push_back(x);
        }
        CHECK(all == json::parse(run(with(cmd, {"--format", "json", "--shard", "0/1"})).out)["items"]);
    }
}

TEST_CASE("json output round-trips through the parsers") {
    auto c = json::parse(run({"character", "-n", "2", "-L", "2*L0", "-N", "4", "--format", "json"}).out);
    std::map<AffineWeight, long long> got;
    for (auto& it : c["items"]) got[parse_weight(2, it["weight"].get<std::string>())] = it["multiplicity"];
    CHECK(got == character(parse_weight(2, "2*L0"), 4));
    auto b = json::parse(run({"branching", "-n", "2", "-a", "L0+L1", "-b", "L0", "-L", "2*L0+L1", "-N", "6",
                              "--format", "json"})
                             .out);
    CHECK(parse_series_json(b["series"].dump()) ==
          branching_series(parse_weight(2, "L0+L1"), parse_weight(2, "L0"), parse_weight(2, "2*L0+L1"), 6));
    auto s = json::parse(
        run({"sharp", "-n", "3", "-a", "L1+2*L2", "--mp", "[[9,8,7,5,4,4,1,1],[9,9,7,6,5,3,3]]@0,1", "--format", "json"})
            .out);
    CHECK(parse_json_multipartition(s["items"][0].dump()) ==
          Multipartition(3, {1, 1, 2}, {{9, 9, 5, 4, 3, 3}, {9, 8, 5, 1, 1}, {7, 7, 6, 4}}));
    // a json multipartition is also accepted as input
    auto again = run({"sharp", "-n", "3", "-a", "L1+2*L2", "--mp", to_json(Multipartition(3, {0, 1}, {{9, 8, 7, 5, 4, 4, 1, 1}, {9, 9, 7, 6, 5, 3, 3}}))});
    CHECK(again.out == "[[9,9,5,4,3,3],[9,8,5,1,1],[7,7,6,4]]@1,1,2\n");
    auto g = json::parse(run({"crystal", "-n", "2", "-L", "2*L0", "-N", "3", "--format", "json"}).out);
    CrystalGraph want = build_Y_crystal(parse_weight(2, "2*L0"), 3);
    REQUIRE(g["vertices"].size() == want.vertices.size());
    for (size_t k = 0; k < want.vertices.size(); ++k) {
        json mp = {{"n", 2}, {"charges", {0, 0}}, {"parts", g["vertices"][k]}};
        CHECK(parse_json_multipartition(mp.dump()) == want.vertices[k]);
    }
    auto h = json::parse(run({"highest-lift", "-n", "2", "--path", "01|2*L0", "--format", "json"}).out);
    CHECK(parse_weight(2, h["items"][0]["weight"].get<std::string>()) == parse_weight(2, "2*L1-d"));
    CHECK(parse_path(2, h["path"].get<std::string>()) == parse_path(2, "01|2*L0"));
    auto js = json::parse(run({"js", "-n", "2", "-i", "2,0", "-m", "5", "-j", "1,0", "--format", "json"}).out);
    REQUIRE(js["items"].size() == 2);
    CHECK(parse_json_multipartition(js["items"][0]["label"].dump()) == Multipartition(2, {0, 0}, {{3}, {2}}));
}

TEST_CASE("repeated runs are byte identical") {
    for (auto& cmd : kCommands)
        for (const char* f : {"text", "json"}) {
            auto a = run(with(cmd, {"--format", f})), b = run(with(cmd, {"--format", f}));
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
        }
    auto d1 = run({"crystal", "-n", "3", "-L", "L0+L2", "-N", "5", "--format", "dot"});
    auto d2 = run({"crystal", "-n", "3", "-L", "L0+L2", "-N", "5", "--format", "dot"});
    CHECK(d1.out == d2.out);
}
