#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "gallai/bounds.hpp"
#include "gallai/certificate.hpp"
#include "gallai/cli.hpp"
#include "gallai/coloring.hpp"
#include "gallai/construct.hpp"
#include "gallai/euclid.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = gallai::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    char name[] = "/tmp/gallai_cli_XXXXXX";
    const int fd = mkstemp(name);
    if (fd >= 0) close(fd);
    path_ = name;
    std::ofstream(path_, std::ios::binary) << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST(Cli, BoundsK2t) {
  const auto r = run({"bounds", "k2t", "--t", "2", "--r", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "n1=7 n2=37");
}

TEST(Cli, BlockColoringPipesIntoVerify) {
  const auto block = run({"construct", "--kind", "block", "--t", "2", "--r", "2"});
  ASSERT_EQ(block.code, 0);
  EXPECT_EQ(block.out, "2 2 2\n1 1\n2 2\n");
  const auto v = run({"verify", "--rainbow", "2,2", "--mono", "2,2"}, block.out);
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "none\n");
}

TEST(Cli, StarSearchIsExhausted) {
  const auto r =
      run({"search", "exists", "--n1", "1", "--n2", "2", "--r", "2", "--rainbow", "1,2", "--mono",
           "1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "exhausted\n");
}

TEST(Cli, SearchFoundPrintsWitness) {
  const auto r = run({"search", "exists", "--n1", "2", "--n2", "2", "--r", "2", "--rainbow", "2,2",
                      "--mono", "2,2"});
  EXPECT_EQ(r.code, 0);
  ASSERT_EQ(first_line(r.out), "found");
  const auto c = gallai::read_coloring(r.out.substr(r.out.find('\n') + 1));
  EXPECT_EQ(c.n1(), 2u);
}

TEST(Cli, SearchFrontier) {
  const auto r = run({"search", "frontier", "--n1", "1", "--r", "3", "--rainbow", "1,3", "--mono",
                      "1,3", "--n2-max", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n2=5\n");
  const auto none = run({"search", "frontier", "--n1", "2", "--r", "2", "--rainbow", "2,2",
                         "--mono", "2,2", "--n2-max", "2"});
  EXPECT_EQ(none.out, "none\n");
}

TEST(Cli, BudgetExceededExitsOne) {
  const auto r = run({"search", "exists", "--n1", "3", "--n2", "4", "--r", "3", "--rainbow", "2,2",
                      "--mono", "2,2", "--budget", "10"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--rainbow", "2", "--mono", "2,2"}, "1 1 1\n1\n").code, 2);
  EXPECT_EQ(run({"verify", "--rainbow", "2,0", "--mono", "2,2"}, "1 1 1\n1\n").code, 2);
  EXPECT_EQ(run({"bounds", "k2t", "--t", "2"}).code, 2);
  EXPECT_EQ(run({"bounds", "k2t", "--t", "2", "--r", "1", "--p", "3"}).code, 2);
  EXPECT_EQ(run({"bounds", "nope"}).code, 2);
  EXPECT_EQ(run({"construct", "--kind", "random", "--n1", "2", "--n2", "2", "--r", "2"}).code, 2);
  const auto bad = run({"verify", "--rainbow", "2,2", "--mono", "2,2"}, "2 2 2\n1 1\n");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos);
  const auto usage = run({"search", "exists", "--n1", "1"});
  EXPECT_EQ(usage.code, 2);
  EXPECT_NE(usage.err.find("Usage"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("check-translation"), std::string::npos);
}

TEST(Cli, VerifyJsonRoundTripsThroughCertificateReader) {
  const std::string coloring = "2 2 1\n1 1\n1 1\n";
  TempFile file(coloring);
  const auto r = run({"verify", file.path(), "--rainbow", "2,2", "--mono", "2,2", "--format",
                      "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = gallai::read_certificate(r.out);
  EXPECT_EQ(doc.certificate.kind, gallai::BicliqueKind::monochromatic);
  EXPECT_EQ(doc.source_hash, gallai::sha256_hex(coloring));

  TempFile cert(r.out);
  const auto ok = run({"verify", file.path(), "--check-cert", cert.path()});
  EXPECT_EQ(ok.out, "valid\n");
  TempFile other("2 2 2\n1 1\n1 2\n");
  const auto stale = run({"verify", other.path(), "--check-cert", cert.path()});
  EXPECT_EQ(first_line(stale.out).rfind("invalid", 0), 0u);
}

TEST(Cli, VerifyTextCertificate) {
  const auto r = run({"verify", "--rainbow", "2,2", "--mono", "2,2"}, "2 2 4\n1 2\n3 4\n");
  EXPECT_EQ(r.out, "rainbow rows=1,2 cols=1,2\n1 2\n3 4\n");
}

TEST(Cli, BoundsJsonRoundTripsThroughReportReader) {
  const auto r = run({"bounds", "zarankiewicz", "--m", "3", "--n", "3", "--s", "2", "--t", "2",
                      "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto report = gallai::report_from_json(r.out);
  const std::int64_t in[] = {3, 3, 2, 2};
  EXPECT_EQ(report, gallai::evaluate_bound(gallai::FormulaId::zarankiewicz, in));
}

TEST(Cli, BoundsEuclidDims) {
  const auto r = run({"bounds", "euclid-dims", "--kind", "prism", "--t", "2", "--r", "3"});
  EXPECT_EQ(first_line(r.out), "dim=60");
  const auto s = run({"bounds", "euclid-dims", "--kind", "simplex_pair", "--p", "1", "--q", "1"});
  EXPECT_EQ(first_line(s.out), "dim=3");
  EXPECT_EQ(run({"bounds", "euclid-dims", "--kind", "cube", "--p", "1"}).code, 2);
}

TEST(Cli, ConstructKinds) {
  const auto a = run({"construct", "--kind", "random", "--n1", "3", "--n2", "4", "--r", "3",
                      "--seed", "5"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(gallai::read_coloring(a.out), gallai::random_coloring(3, 4, 3, 5));
  const auto b = run({"construct", "--kind", "star", "--p", "3", "--q", "3"});
  EXPECT_EQ(b.out, "1 4 2\n1 1 2 2\n");
}

TEST(Cli, Zarankiewicz) {
  const auto r = run({"zarankiewicz", "--m", "4", "--n", "4", "--s", "2", "--t", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "exact=9 bound=10 below=true\n");
  const auto j = run({"zarankiewicz", "--m", "3", "--n", "3", "--s", "1", "--t", "1",
                      "--format", "json"});
  EXPECT_NE(j.out.find("\"exact\":0"), std::string::npos);
}

TEST(Cli, EmbedWritesAColoredPointFile) {
  const auto r = run({"embed", "--a", "1", "--b", "2"}, "2 2 2\n1 1\n2 2\n");
  ASSERT_EQ(r.code, 0);
  const auto file = gallai::read_points(r.out);
  ASSERT_TRUE(file.colors);
  EXPECT_EQ(*file.colors, (std::vector<gallai::Color>{1, 1, 2, 2}));
  EXPECT_EQ(file.config.dim(), 4u);
}

TEST(Cli, CheckTranslation) {
  const auto r = run({"check-translation", "--rainbow", "2,2", "--mono", "2,2"},
                     "2 2 4\n1 2\n3 4\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "branch=rainbow congruent=true colors_ok=true holds=true");
  const auto none = run({"check-translation", "--rainbow", "2,2", "--mono", "2,2"},
                        "2 2 2\n1 1\n2 2\n");
  EXPECT_EQ(none.out, "branch=none holds=true\n");
}

TEST(Cli, ExportAndDecodeSat) {
  const auto cnf = run({"export-sat", "--n1", "2", "--n2", "2", "--r", "2", "--rainbow", "2,2",
                        "--mono", "2,2"});
  ASSERT_EQ(cnf.code, 0);
  EXPECT_NE(cnf.out.find("p cnf "), std::string::npos);
  // block coloring: edges 1,2 color 1 and edges 3,4 color 2
  const std::string model = "s SATISFIABLE\nv 1 -2 3 -4 -5 6 -7 8 0\n";
  const auto dec = run({"decode-sat", "--n1", "2", "--n2", "2", "--r", "2", "--rainbow", "2,2",
                        "--mono", "2,2"},
                       model);
  EXPECT_EQ(dec.code, 0);
  EXPECT_EQ(dec.out, "2 2 2\n1 1\n2 2\n");
  const auto bad = run({"decode-sat", "--n1", "2", "--n2", "2", "--r", "2"}, "1 2 0\n");
  EXPECT_EQ(bad.code, 2);
  const auto mono = run({"decode-sat", "--n1", "2", "--n2", "2", "--r", "2", "--rainbow", "2,2",
                         "--mono", "2,2"},
                        "1 -2 3 -4 5 -6 7 -8 0\n");
  EXPECT_EQ(mono.code, 2);
}
