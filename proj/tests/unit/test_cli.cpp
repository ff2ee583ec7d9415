#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "corpus_runner.hpp"
#include "examples.hpp"
#include "weakhopf/io.hpp"

using namespace weakhopf;
using namespace weakhopf::examples;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  return {code, o.str(), e.str()};
}

std::string corpus(const std::string& name) { return (fs::path(corpus_dir) / name).string(); }

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(cli_run({"check", corpus("kG_z2z2.json"), "--kind", "weak-hopf"}).code, 0);
  const CliRun bad = cli_run({"check", corpus("kG_bad_antipode.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL antipode_target"), std::string::npos);
  EXPECT_NE(bad.out.find("    at (1:a)"), std::string::npos);
  EXPECT_EQ(cli_run({"check", corpus("malformed.json")}).code, 2);
  EXPECT_EQ(cli_run({"check", corpus("does_not_exist.json")}).code, 2);
  EXPECT_EQ(cli_run({"check"}).code, 2);
  EXPECT_EQ(cli_run({"check", corpus("kG_z2z2.json"), "--kind", "monoid"}).code, 2);
  EXPECT_EQ(cli_run({"--help"}).code, 0);
}

TEST(Cli, IdentitySuiteLinesArePrinted) {
  const CliRun r = cli_run({"check", corpus("kG_z2z2.json")});
  std::size_t lines = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) lines += line.rfind("PASS ", 0) == 0;
  EXPECT_GE(lines, 36u);
}

TEST(Cli, BuildGroupWeakPrintsCounitTwo) {
  const CliRun r = cli_run({"build", "group-weak", "--order", "2", "--field", "Q"});
  ASSERT_EQ(r.code, 0) << r.err;
  const StructureData d = parse_structure(r.out);
  EXPECT_EQ(d.space.dim(), 2u);
  EXPECT_EQ(d.counit.at(0, 0).to_string(), "2");
  EXPECT_TRUE(d.counit.at(0, 1).is_zero());
}

TEST(Cli, BuildSmashWritesStructureAndSidecar) {
  const fs::path tmp = scratch_dir("cli-smash");
  const CliRun r = cli_run({"build", "smash", "--H", corpus("kG_z2z2.json"), "--C", corpus("kZ2_hopf.json"), "--rho",
                         corpus("rho_e1.json"), "--antipode", "-o", (tmp / "s.json").string()});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(load_structure(tmp / "s.json").hopf().dim(), 4u);
  const std::string sidecar = read_text(tmp / "s.report.json");
  EXPECT_NE(sidecar.find("\"dimension\": 4"), std::string::npos);
}

TEST(Cli, DualizeRoundTripIsByteIdentical) {
  const fs::path tmp = scratch_dir("cli-dualize");
  // canonical table with no embedded structures
  const CoactionMap cm = rho_h_on_kz2({"1/2", "0", "1/2", "0"});
  write_text(tmp / "rho.json", write_rho(cm));
  const std::vector<std::string> hc{"--H", corpus("kG_z2z2.json"), "--C", corpus("kZ2_hopf.json")};
  auto with = [&](std::vector<std::string> a) {
    a.insert(a.begin() + 2, hc.begin(), hc.end());
    return a;
  };
  ASSERT_EQ(cli_run(with({"dualize", "coaction-to-action", "--rho", (tmp / "rho.json").string(), "-o",
                          (tmp / "act.json").string()}))
                .code,
            0);
  ASSERT_EQ(cli_run(with({"dualize", "action-to-coaction", "--act", (tmp / "act.json").string(), "-o",
                          (tmp / "back.json").string()}))
                .code,
            0);
  EXPECT_EQ(read_text(tmp / "back.json"), read_text(tmp / "rho.json"));
}

TEST(Cli, CorpusMatchesFixtures) {
  const bool update = std::getenv("UPDATE_FIXTURES") != nullptr;
  const auto results = run_corpus(scratch_dir("cli-corpus"));
  ASSERT_GE(results.size(), 40u);
  for (const auto& r : results) {
    EXPECT_EQ(r.exit_code, r.spec.expected_exit) << r.spec.name << "\n" << r.output;
    const fs::path fixture = fixture_path(r.spec.name);
    if (update) {
      write_text(fixture, r.output);
      continue;
    }
    ASSERT_TRUE(fs::exists(fixture)) << "missing fixture " << fixture << " (run with UPDATE_FIXTURES=1)";
    EXPECT_EQ(r.output, read_text(fixture)) << r.spec.name;
  }
}

TEST(Cli, CorpusIsDeterministic) {
  const auto a = run_corpus(scratch_dir("cli-det-a"));
  const auto b = run_corpus(scratch_dir("cli-det-b"));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].output, b[i].output) << a[i].spec.name;
}
