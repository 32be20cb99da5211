#include <gtest/gtest.h>

#include <sstream>

#include "zipdata/cli.hpp"

using namespace zipdata;

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
}  // namespace

TEST(Cli, PiecesTable) {
  auto r = run({"pieces", "--type", "A2", "--I", "1", "--psi", "1:2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2,1  2    8    0         {2}"), std::string::npos);
  EXPECT_NE(r.out.find("e    0    6    2         {}"), std::string::npos);
}

TEST(Cli, PiecesJsonlWithCentralTorus) {
  auto r = run({"pieces", "--type", "A2", "--I", "1", "--psi", "1:2", "--central-rank", "1", "--format", "jsonl"});
  EXPECT_EQ(r.code, 0);
  auto first = io::json::parse(r.out.substr(0, r.out.find('\n')));
  EXPECT_EQ(first["dim"], 7);
}

TEST(Cli, ClosureClassifySigma) {
  auto c = run({"closure", "--type", "A2", "--I", "1", "--psi", "1:2", "--w", "2"});
  EXPECT_EQ(c.out, "e 2\n");
  auto k = run({"classify", "--type", "A2", "--I", "1", "--psi", "1:2", "--w", "1,2,1"});
  EXPECT_EQ(k.out, "canonical 2,1\nsigma 2,1\n");
  auto s = run({"sigma", "--type", "A2", "--I", "1", "--psi", "1:2", "--w", "1", "--inverse"});
  EXPECT_EQ(s.out, "2\n");
}

TEST(Cli, PosetDot) {
  auto r = run({"poset", "--type", "A2", "--I", "1", "--psi", "1:2", "--format", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("digraph"), std::string::npos);
  EXPECT_NE(r.out.find("dim=8"), std::string::npos);
}

TEST(Cli, Isogeny) {
  auto r = run({"isogeny", "--type", "A3", "--I", "1", "--x", "1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# J = {2}, psi = 1:2"), std::string::npos);
  auto bad = run({"isogeny", "--type", "A2", "--I", "1", "--x", "2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("NonSimpleConjugate"), std::string::npos);
}

TEST(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(run({"pieces", "--type", "Q7"}).code, 2);
  EXPECT_EQ(run({"pieces", "--type", "A2", "--I", "1", "--psi", "1:3"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"pieces", "--type", "A2", "--side", "up"}).code, 2);
  EXPECT_EQ(run({"abstract", "--datum", "/nonexistent.json"}).code, 2);
}

TEST(Cli, VerifyQuick) {
  auto r = run({"verify", "--level", "quick"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "OK\n");
}

TEST(Cli, SampleDataFiles) {
  const std::string dir = ZIPDATA_DATA_DIR;
  auto a2 = run({"pieces", "--datum", dir + "/a2_datum.json"});
  EXPECT_EQ(a2.code, 0);
  EXPECT_EQ(a2.out, io::pieces_text(io::datum_from_json(io::parse_json(cli::read_file(dir + "/a2_datum.json"))).pieces()));
  auto s4 = run({"abstract", "--datum", dir + "/s4_abstract.json"});
  EXPECT_NE(s4.out.find("classes = 4 (all of size |Delta|)"), std::string::npos);
  auto sign = run({"abstract", "--datum", dir + "/s3_sign_abstract.json"});
  EXPECT_NE(sign.out.find("classes = 1"), std::string::npos);
  auto nc = run({"nonconnected", "--datum", dir + "/a1a1_swap.json"});
  EXPECT_EQ(std::count(nc.out.begin(), nc.out.end(), '\n'), 6);
  auto iso = run({"isogeny", "--datum", dir + "/a2_flip_isogeny.json"});
  EXPECT_NE(iso.out.find("# J = {2}, psi = 1:2"), std::string::npos);
  auto b3 = run({"poset", "--datum", dir + "/b3_frobenius.json", "--format", "json"});
  EXPECT_EQ(io::json::parse(b3.out)["nodes"].size(), 8u);
}
