#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sepshape/cli.hpp"
#include "sepshape/text.hpp"

using namespace sepshape;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const Run r = run(std::move(args));
  REQUIRE(r.status == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("render_ferrers") {
  CHECK(render_ferrers(Partition{2, 1}) == "\u25A0\u25A0\n\u25A0\n");
  CHECK(render_ferrers(Partition{}).empty());
}

TEST_CASE("cli rsk and shape") {
  const Run r = run({"rsk", "2214312"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "P:\n1 1 2\n2 2 3\n4\nQ:\n1 2 4\n3 5 7\n6\nshape: 3,3,1\n");

  const json j = run_json({"rsk", "2413"});
  CHECK(j["p"] == json::parse("[[1,3],[2,4]]"));
  CHECK(j["q"] == json::parse("[[1,2],[3,4]]"));
  CHECK(parse_partition(j["shape"].get<std::string>()) == Partition{2, 2});

  CHECK(run({"shape", "24213"}).out == "shape: 3,1,1\n");
  const Run empty = run({"shape", ""});
  CHECK(empty.status == kExitOk);
  CHECK(empty.out == "shape: (empty)\n");
}

TEST_CASE("cli pattern and separable") {
  const Run found = run({"pattern", "24213", "2413"});
  CHECK(found.status == kExitOk);
  CHECK(found.out.find("contains 2413") == 0);
  CHECK(run({"pattern", "1234", "21"}).status == kExitFalse);

  const json j = run_json({"pattern", "7135264", "4231"});
  CHECK(j["contains"] == true);
  CHECK(j["positions"].size() == 4);

  CHECK(run({"separable", "2413"}).status == kExitFalse);
  const Run yes = run({"separable", "10652438ba97"});
  CHECK(yes.status == kExitOk);
  CHECK(yes.out == "yes\n");
}

TEST_CASE("cli greene and witness") {
  const json g = run_json({"greene", "236145", "2"});
  CHECK(g["max"] == 6);
  CHECK(g["family"].size() == 2);

  const json w = run_json({"witness", "10652438ba97"});
  CHECK(parse_partition(w["shape"].get<std::string>()) == Partition{5, 3, 2, 2});
  std::vector<std::size_t> lengths;
  for (const auto& m : w["family"]) lengths.push_back(parse_word(m["values"].get<std::string>()).size());
  CHECK(lengths == std::vector<std::size_t>{5, 3, 2, 2});

  const Run bad = run({"witness", "236145"});
  CHECK(bad.status == kExitUsage);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("cli exchange") {
  // u = 0248b (positions 1,4,5,7,8), w = 68b, w2 = 049 as positions in 10652438ba97.
  const json j = run_json({"exchange", "10652438ba97", "--u", "1,4,5,7,8", "--w", "2,7,8", "--w2", "1,5,10"});
  CHECK(j["alpha"]["values"] == "69");
  CHECK(j["beta"]["values"] == "048b");

  const Run none = run({"exchange", "10652438ba97", "--u", "", "--w", "2,7,8", "--w2", "1,5,10"});
  CHECK(none.status == kExitOk);

  CHECK(run({"exchange", "2413", "--u", "", "--w", "0,1", "--w2", "2,3"}).status == kExitUsage);
  CHECK(run({"exchange", "10652438ba97", "--u", "", "--w", "2,7", "--w2", "2"}).status == kExitUsage);
}

TEST_CASE("cli verify-theorem") {
  const Run r = run({"verify-theorem", "--sigma-len", "3", "--word-alphabet", "3", "--word-len", "4"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("violations: 0\n") != std::string::npos);

  const json j = run_json({"--seed", "3", "verify-theorem", "--sigma-len", "4", "--word-len", "7", "--words",
                           "permutations", "--samples", "200"});
  CHECK(j["instance_count"] == 22 * 200);
  CHECK(j["violation_count"] == 0);
}

TEST_CASE("cli scs and supersequence-check") {
  const json j = run_json({"scs", "123456789", "678912345", "789456123", "978563412", "987654321"});
  CHECK(j["length"] == 23);
  CHECK(j["lower_bound"] == 23);
  CHECK(j["tight"] == true);
  CHECK(j["members"].size() == 5);
  CHECK(parse_word(j["witness"].get<std::string>()).size() == 23);

  const json n = run_json({"scs", "2413", "1234"});
  CHECK(n["lower_bound"].is_null());
  CHECK(run({"--budget", "10", "scs", "123456789", "987654321"}).status == kExitUsage);

  CHECK(run({"supersequence-check", "2214312", "132", "312", "213"}).status == kExitOk);
  CHECK(run({"supersequence-check", "2214312", "132", "321"}).status == kExitFalse);
  CHECK(run({"supersequence-check", "123", "321"}).status == kExitFalse);
}

TEST_CASE("cli mu") {
  const Run r = run({"mu", "9"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("size: 23\n") != std::string::npos);
  CHECK(r.out.find("corners: 5\n") != std::string::npos);

  const json j = run_json({"mu", "9"});
  CHECK(parse_partition(j["diagram"].get<std::string>()) == Partition{9, 4, 3, 2, 1, 1, 1, 1, 1});
  CHECK(j["bound"] == 23);
  CHECK(run({"mu", "0"}).status == kExitUsage);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"frobnicate"}).status == kExitUsage);
  CHECK(run({"shape", "12,3a"}).status == kExitUsage);
  CHECK(run({"greene", "123"}).status == kExitUsage);
  CHECK(run({"separable", "113"}).status == kExitUsage);
}
