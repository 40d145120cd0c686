#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tri/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = tri::cli_main(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_program(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("tri_cli_" + name + ".gc");
  std::ofstream(path) << text;
  return path.string();
}

const char* kCoin =
    "vars x in 0..1, y in 0..2;\n"
    "body: prob 1/3 { x := 0 } { x := 1 }; if (x == 1) { y := y + 1 } else { y := 0 }\n"
    "post: [y == 0]\n";

}  // namespace

TEST_CASE("usage errors exit with 2, help with 0") {
  CHECK(run({}).code == tri::kExitUsage);
  CHECK(run({"frobnicate"}).code == tri::kExitUsage);
  CHECK(run({"--help"}).code == tri::kExitOk);
  CHECK(run({"laws"}).code == tri::kExitUsage);
  CHECK(run({"laws", "--monad", "hoare", "--effect", "mv"}).code == tri::kExitUsage);
  const Run bad = run({"laws", "--monad", "nope"});
  CHECK(bad.code == tri::kExitUsage);
  CHECK(bad.err.find("error:") == 0);
}

TEST_CASE("wp prints exact tables") {
  const std::string file = write_program("coin", kCoin);
  const Run dist = run({"--format", "json", "wp", file, "--mode", "dist"});
  REQUIRE(dist.code == tri::kExitOk);
  const json j = dist.parsed();
  CHECK(j["wp"]["x=0 y=0"] == "1/3");
  CHECK(j["wp"]["x=1 y=2"] == "1/1");
  CHECK(j["states"].size() == 6);

  const Run demonic = run({"wp", file, "--format", "json", "--post", "x == 0"});
  REQUIRE(demonic.code == tri::kExitOk);
  CHECK(demonic.parsed()["wp"]["x=0 y=0"] == "0/1");

  const Run checked = run({"--format", "json", "wp", file, "--flavor", "angelic", "--check"});
  REQUIRE(checked.code == tri::kExitOk);
  CHECK(checked.parsed()["roundtrip"]["passed"] == true);
  CHECK(checked.parsed()["roundtrip"]["mismatches"] == 0);

  CHECK(run({"wp", file, "--flavor", "expectation"}).code == tri::kExitUsage);
  CHECK(run({"wp", write_program("broken", "vars x in 0..1; body: x :=")}).code == tri::kExitUsage);
  CHECK(run({"wp", write_program("choose", "vars x in 0..1; body: choose { skip } [] { abort }; post: true"),
             "--mode", "dist"})
            .code == tri::kExitUsage);
}

TEST_CASE("run executes from an initial state") {
  const std::string file = write_program("coin_run", kCoin);
  const Run dist = run({"--format", "json", "run", file, "--mode", "dist", "--init", "x=0,y=1"});
  REQUIRE(dist.code == tri::kExitOk);
  CHECK(dist.parsed()["distribution"] == json{{"x=0 y=0", "1/3"}, {"x=1 y=2", "2/3"}});
  const Run pow = run({"--format", "json", "run", file, "--init", "{x=0 y=1, x=1 y=2}"});
  REQUIRE(pow.code == tri::kExitOk);
  CHECK(pow.parsed()["states"] == json{"x=0 y=0", "x=1 y=0", "x=1 y=2"});
  CHECK(run({"run", file, "--init", "x=5,y=0"}).code == tri::kExitUsage);
}

TEST_CASE("laws reports every law with its seed") {
  const Run r = run({"--format", "json", "laws", "--monad", "hoare", "--max-size", "2", "--seed", "4"});
  REQUIRE(r.code == tri::kExitOk);
  const json j = r.parsed();
  CHECK(j["passed"] == true);
  CHECK(j["seed"] == 4);
  CHECK(j["laws"].size() == 3);
  CHECK(run({"laws", "--effect", "mv"}).code == tri::kExitOk);
  CHECK(run({"laws", "--monad", "distribution", "--max-size", "2", "--max-den", "2"}).code == tri::kExitOk);
  CHECK(run({"laws", "--wp", "--programs", "3"}).code == tri::kExitOk);
  CHECK(run({"laws", "--monad", "smyth", "--max-size", "2", "--seed", "9"}).out.find("seed: 9") != std::string::npos);
  CHECK(run({"laws", "--effect", "powerset", "--max-size", "2"}).out.find("all laws hold") != std::string::npos);
}

TEST_CASE("enumerate lists elements and cardinality") {
  const Run r = run({"--format", "json", "enumerate", "--monad", "monotone-neighbourhood", "--object", "{a,b}"});
  REQUIRE(r.code == tri::kExitOk);
  CHECK(r.parsed()["cardinality"] == 6);
  CHECK(r.parsed()["elements"].size() == 6);
  CHECK(run({"--format", "json", "enumerate", "--monad", "plotkin", "--object", "chain:2"}).parsed()["cardinality"] ==
        3);
  CHECK(run({"enumerate", "--monad", "plotkin", "--object", "{a,b | a<b<a}"}).code == tri::kExitUsage);
}

TEST_CASE("transpose runs both directions") {
  const Run fwd = run({"--format", "json", "transpose", "--correspondence", "box", "--input",
                       R"({"x":"{a,b}","y":"{p}","kleisli":{"a":["p"],"b":[]}})"});
  REQUIRE(fwd.code == tri::kExitOk);
  const json f = fwd.parsed();
  CHECK(f["direction"] == "forward");
  CHECK(f["roundtrip"] == true);
  CHECK(f["transformer"] == json::array({json::array({json::array(), json::array({"b"})}),
                                         json::array({json::array({"p"}), json::array({"a", "b"})})}));

  json back_in = {{"x", "{a,b}"}, {"y", "{p}"}, {"transformer", f["transformer"]}};
  const Run back = run({"--format", "json", "transpose", "--correspondence", "box", "--input", back_in.dump()});
  REQUIRE(back.code == tri::kExitOk);
  CHECK(back.parsed()["kleisli"]["a"] == json::array({"p"}));
  CHECK(back.parsed()["kleisli"]["b"] == json::array());

  // The top predicate {p} must go to the top {a,b}.
  json not_meet = {{"x", "{a,b}"},
                   {"y", "{p}"},
                   {"transformer", json::array({json::array({json::array(), json::array()}),
                                                json::array({json::array({"p"}), json::array()})})}};
  CHECK(run({"transpose", "--correspondence", "box", "--input", not_meet.dump()}).code == tri::kExitUsage);

  const Run expect = run({"--format", "json", "transpose", "--correspondence", "expectation", "--input",
                          R"({"x":"{s,t}","y":"{h,k}","kleisli":{"s":{"h":"1/4","k":"3/4"},"t":{"h":"1","k":"0"}}})"});
  REQUIRE(expect.code == tri::kExitOk);
  CHECK(expect.parsed()["roundtrip"] == true);
}

TEST_CASE("certify exits 0 on a bijection") {
  const Run r = run({"--format", "json", "certify", "--correspondence", "box", "--sizes", "2,2"});
  REQUIRE(r.code == tri::kExitOk);
  CHECK(r.parsed()["kleisli_count"] == 16);
  CHECK(r.parsed()["transformer_count"] == 16);
  CHECK(r.parsed()["bijection"] == true);
  CHECK(run({"certify", "--correspondence", "three", "--sizes", "1,2"}).code == tri::kExitOk);
  CHECK(run({"certify", "--correspondence", "box", "--sizes", "3,3", "--budget", "5"}).code == tri::kExitUsage);
  CHECK(run({"certify", "--correspondence", "box", "--sizes", "two"}).code == tri::kExitUsage);
}
