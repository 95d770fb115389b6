#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "lsb/lsa_io.hpp"

namespace fs = std::filesystem;
using lsb::test::f5;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run lsb_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = lsb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / fs::path("lsb-cli-test")) {
    fs::create_directories(path_);
  }
  std::string file(const std::string& name, const std::string& contents) const {
    fs::path p = path_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("breadth on He(1,0) agrees and reports total 1 pair (1,0)") {
  TempDir tmp;
  std::string he = tmp.file("he.lsa", lsb::serialize_lsa(lsb::heisenberg_even(f5(), 1, 0, 0, 0)));
  Run r = lsb_run({"breadth", he, "--method", "both"});
  CHECK(r.code == 0);
  CHECK(r.out.find("total=1 pair=(1,0) agree=true") != std::string::npos);
}

TEST_CASE("verify rejects a sign-rule violation with exit 1") {
  TempDir tmp;
  std::string broken = tmp.file("broken.lsa",
                                "field 5\n"
                                "even x1\n"
                                "odd y1 z\n"
                                "[x1,y1] = 1*z\n"
                                "[y1,x1] = 1*z\n");
  Run r = lsb_run({"verify", broken});
  CHECK(r.code == 1);
  CHECK(r.err.find("skew") != std::string::npos);
  CHECK(r.err.find("y1") != std::string::npos);  // names the violating pair
}

TEST_CASE("verify accepts a valid file and reports nilpotency") {
  TempDir tmp;
  std::string b5 = tmp.file("b5.lsa", lsb::serialize_lsa(lsb::witness_b5(f5())));
  Run r = lsb_run({"verify", b5, "--machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ok=true") != std::string::npos);
  CHECK(r.out.find("nilpotent=true") != std::string::npos);
  CHECK(r.out.find("class=2") != std::string::npos);
}

TEST_CASE("laws subcommand") {
  TempDir tmp;
  std::string b2 = tmp.file("b2.lsa", lsb::serialize_lsa(lsb::witness_b2(f5())));
  SUBCASE("single law, machine block") {
    Run r = lsb_run({"laws", b2, "--law", "P3-4", "--machine"});
    CHECK(r.code == 0);
    CHECK(r.out.find("outcome=Holds") != std::string::npos);
  }
  SUBCASE("unknown id is a usage error") {
    Run r = lsb_run({"laws", b2, "--law", "nope"});
    CHECK(r.code == 2);
  }
  SUBCASE("slash-joined ids round-trip through the flag") {
    Run r = lsb_run({"laws", b2, "--law", "P3-9i/ii", "--machine"});
    CHECK(r.code == 0);
    CHECK(r.out.find("outcome=") != std::string::npos);
  }
}

TEST_CASE("classifier precondition and unsupported-field exit codes") {
  TempDir tmp;
  std::string bad = tmp.file("nonnilp.lsa",
                             "field 5\n"
                             "even e1 e2\n"
                             "odd\n"
                             "[e1,e2] = 1*e2\n");
  Run r = lsb_run({"breadth", bad, "--method", "classify"});
  CHECK(r.code == 2);
  CHECK(r.err.find("nilpotent") != std::string::npos);

  std::string rat = tmp.file("rat.lsa",
                             "field rational\n"
                             "even x1 x2 z\n"
                             "odd\n"
                             "[x1,x2] = 1*z\n");
  Run o = lsb_run({"breadth", rat, "--method", "bruteforce"});
  CHECK(o.code == 3);
}

TEST_CASE("syntax errors exit 2 with a position") {
  TempDir tmp;
  std::string bad = tmp.file("syntax.lsa", "field 5\neven x1\nodd\n[x1 = 0\n");
  Run r = lsb_run({"verify", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 4") != std::string::npos);
}

TEST_CASE("catalog and random emit parseable deterministic files") {
  TempDir tmp;
  Run c = lsb_run({"catalog", "He", "--m", "1", "--n", "1"});
  CHECK(c.code == 0);
  CHECK(lsb::parse_lsa(c.out) == lsb::heisenberg_even(f5(), 1, 1, 0, 0));

  Run r1 = lsb_run({"random", "--seed", "11", "--even", "2", "--odd", "1", "--center-even", "1",
                    "--center-odd", "1"});
  Run r2 = lsb_run({"random", "--seed", "11", "--even", "2", "--odd", "1", "--center-even", "1",
                    "--center-odd", "1"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK_NOTHROW(lsb::parse_lsa(r1.out));

  Run bad = lsb_run({"catalog", "Ho", "--m", "0"});
  CHECK(bad.code == 2);
}

TEST_CASE("invariants and maximal-abelian subcommands") {
  TempDir tmp;
  std::string b2 = tmp.file("b2.lsa", lsb::serialize_lsa(lsb::witness_b2(f5())));
  Run inv = lsb_run({"invariants", b2, "--machine"});
  CHECK(inv.code == 0);
  CHECK(inv.out.find("derived=(3,0)") != std::string::npos);
  CHECK(inv.out.find("quotient=(0,2)") != std::string::npos);

  Run ma = lsb_run({"maximal-abelian", b2, "--machine"});
  CHECK(ma.code == 0);
  CHECK(ma.out.find("count=1") != std::string::npos);
  CHECK(ma.out.find("ideal0_dims=(3,0)") != std::string::npos);
}

TEST_CASE("search records a findings entry and exits 0 on either outcome") {
  TempDir tmp;
  std::string findings = tmp.path("findings-search.log");
  std::error_code ec;
  fs::remove(findings, ec);
  Run r = lsb_run({"search", "--derived", "1,2", "--quotient", "1,2", "--odd-square-zero",
                   "--field", "3", "--max-total", "6", "--findings", findings});
  CHECK(r.code == 0);
  CHECK(r.out.find("Empty") != std::string::npos);
  std::ifstream in(findings);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("kind=search") != std::string::npos);
  CHECK(buf.str().find("candidates: 41") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(lsb_run({}).code == 2);
  CHECK(lsb_run({"breadth"}).code == 2);
  CHECK(lsb_run({"breadth", "/nonexistent/file.lsa"}).code == 2);
  CHECK(lsb_run({"breadth", "x.lsa", "--method", "magic"}).code == 2);
}
