#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "hochbv/commands.hpp"
#include "hochbv/finite_classes.hpp"
#include "hochbv/serialize.hpp"

using namespace hochbv;

namespace {

const std::filesystem::path kData(HOCHBV_DATA_DIR);

RunConfig config(std::string command, const std::string& group, std::string ring = "q", int max_degree = 3, int K = 3) {
  RunConfig c;
  c.command = std::move(command);
  if (!group.empty()) c.group = read_json_file((kData / "groups" / group).string());
  c.ring = std::move(ring);
  c.max_degree = max_degree;
  c.trunc_k = K;
  return c;
}

RunConfig axioms(const std::string& spec) {
  RunConfig c;
  c.command = "axioms";
  c.spec = read_json_file((kData / "specs" / spec).string());
  return c;
}

int run_binary(const std::string& args) {
  const int status = std::system((std::string(HH_BINARY) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Serialize, ChainGoldenAndRoundTrip) {
  const GroupPtr G = Group::free_abelian(1);
  const BimodulePtr A = Bimodule::regular(G);
  const Ring Q = Ring::rationals();
  HochschildChain c = HochschildChain::basis(A, Q, key_of(G->monomial({-1})), {G->generator()});
  c.add(BarWord{A->unit(), {G->monomial({2}), G->monomial({-3})}}, Scalar(Q, mpq_class(1, 2)));
  const nlohmann::json j = chain_to_json(c);
  EXPECT_EQ(j["terms"][0].dump(), R"({"coef":"1","letters":[[1]],"m":[-1]})");
  EXPECT_EQ(j["terms"][1]["coef"], "1/2");
  EXPECT_EQ(chain_from_json(j, A), c);
  EXPECT_EQ(chain_to_json(chain_from_json(j, A)).dump(), j.dump());
}

TEST(Serialize, CochainRoundTripOnS3) {
  const Ring F3 = Ring::prime_field(3);
  const BimodulePtr A = Bimodule::regular(Group::symmetric3());
  const FiniteHH hh(A, F3, 2, false, true);
  for (int p = 0; p <= 2; ++p)
    for (std::size_t i = 0; i < hh.cohomology(p).dimension(); ++i) {
      const HochschildCochain f = hh.cochain_representative(p, i);
      const nlohmann::json j = cochain_to_json(f);
      const HochschildCochain back = cochain_from_json(j, A);
      EXPECT_EQ(cochain_to_json(back).dump(), j.dump());
      EXPECT_EQ(hh.cochain_coordinates(back), hh.cochain_coordinates(f));
    }
}

TEST(Config, HashDependsOnInputsOnly) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
  RunConfig a = config("compute", "z2.json", "f2"), b = a;
  b.jobs = 4;
  EXPECT_EQ(config_hash(a), config_hash(b));
  b.ring = "f3";
  EXPECT_NE(config_hash(a), config_hash(b));
}

TEST(Compute, CyclicGroupOfOrderTwo) {
  const CommandResult r = run_command(config("compute", "z2.json", "f2", 5));
  EXPECT_EQ(r.code, ExitCode::Ok);
  EXPECT_EQ(r.report["result"]["dimensions"], nlohmann::json::array({2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(r.report["result"]["periodic_dimensions"], r.report["result"]["dimensions"]);
  EXPECT_EQ(r.report["version"], kVersion);
  EXPECT_EQ(r.report["config_hash"].get<std::string>().size(), 16u);
}

TEST(Compute, TrivialGroup) {
  const CommandResult r = run_command(config("compute", "trivial.json", "q", 3));
  EXPECT_EQ(r.report["result"]["dimensions"], nlohmann::json::array({1, 0, 0, 0}));
}

TEST(Compute, IntegerTorsion) {
  const CommandResult r = run_command(config("compute", "z2.json", "z", 3));
  EXPECT_EQ(r.code, ExitCode::Ok);
  EXPECT_EQ(r.report["result"]["homology"][1]["torsion"], nlohmann::json::array({"2", "2"}));
  EXPECT_EQ(r.report["result"]["homology"][2]["torsion"], nlohmann::json::array());
}

TEST(Compute, FreeAbelianRankOne) {
  const CommandResult r = run_command(config("compute", "free_abelian_1.json"));
  EXPECT_EQ(r.code, ExitCode::Ok);
  const auto& h = r.report["result"]["homology"];
  EXPECT_EQ(h[0]["description"], "free rank 1 over A");
  EXPECT_EQ(h[1]["description"], "free rank 1 over A");
  EXPECT_EQ(h[2]["free_rank_over_A"], 0);
}

TEST(Compute, ParallelDegreesGiveIdenticalBytes) {
  RunConfig c = config("compute", "s3.json", "f3", 3);
  const std::string serial = run_command(c).report.dump();
  c.jobs = 3;
  EXPECT_EQ(run_command(c).report.dump(), serial);
}

TEST(Bv, RankOneAndTwo) {
  const CommandResult one = run_command(config("bv", "free_abelian_1.json", "q", 3, 3));
  EXPECT_EQ(one.code, ExitCode::Ok) << render(one.report);
  EXPECT_EQ(one.report["result"]["delta_tables"]["t^-1*e1"], "2*t^-2*x0");
  const CommandResult two = run_command(config("bv", "free_abelian_2.json", "f5", 3, 1));
  EXPECT_EQ(two.code, ExitCode::Ok) << render(two.report);
  EXPECT_EQ(two.report["result"]["delta_tables"]["e1^e2"], "t2^-1*e1 + 4*t1^-1*e2");
}

TEST(Bv, UnsupportedGroups) {
  const CommandResult three = run_command(config("bv", "free_abelian_3.json"));
  EXPECT_EQ(three.code, ExitCode::Unsupported);
  EXPECT_EQ(three.report["result"]["error"]["code"], "UnsupportedRank");
  EXPECT_EQ(three.report["status"], "unsupported");
  EXPECT_EQ(run_command(config("bv", "z2.json")).code, ExitCode::Unsupported);
}

TEST(Axioms, PositiveAndMutated) {
  const CommandResult ok = run_command(axioms("trunc_f3.json"));
  EXPECT_EQ(ok.code, ExitCode::Ok);
  EXPECT_TRUE(ok.report["result"]["equivalence"]["consistent"].get<bool>());
  const CommandResult bad = run_command(axioms("trunc_f3_mutated.json"));
  EXPECT_EQ(bad.code, ExitCode::CheckFailed);
  EXPECT_FALSE(bad.report["result"]["checks"][0]["violations"].empty());
  EXPECT_NE(render(bad.report).find("FAIL"), std::string::npos);
}

TEST(Axioms, MalformedSpec) {
  RunConfig c;
  c.command = "axioms";
  c.spec = {{"name", "broken"}};
  EXPECT_EQ(run_command(c).code, ExitCode::BadInput);
  c.spec = nullptr;
  EXPECT_EQ(run_command(c).code, ExitCode::BadInput);
}

TEST(CompareGroup, SymmetricGroupOverF3) {
  const CommandResult r = run_command(config("compare-group", "s3.json", "f3", 2));
  EXPECT_EQ(r.code, ExitCode::Ok) << render(r.report);
  EXPECT_GE(r.report["result"]["rows"].size(), 30u);
  EXPECT_EQ(run_command(config("compare-group", "s3.json", "z", 2)).code, ExitCode::Unsupported);
  EXPECT_EQ(run_command(config("compare-group", "free_abelian_1.json", "q", 2)).code, ExitCode::Unsupported);
}

TEST(CyCheck, RankOnlyOne) {
  EXPECT_EQ(run_command(config("cy-check", "free_abelian_1.json", "f5")).code, ExitCode::Ok);
  EXPECT_EQ(run_command(config("cy-check", "free_abelian_2.json")).code, ExitCode::Unsupported);
}

TEST(Groups, InvalidTableIsBadInput) {
  const CommandResult r = run_command(config("compute", "bad_not_associative.json"));
  EXPECT_EQ(r.code, ExitCode::BadInput);
  EXPECT_EQ(r.report["result"]["error"]["code"], "InvalidGroup");
}

TEST(Determinism, RepeatedRunsAreByteIdentical) {
  for (const RunConfig& c : {config("compute", "z3.json", "f3", 4), config("bv", "free_abelian_1.json"),
                             config("compare-group", "z2.json", "f2", 2), config("cy-check", "free_abelian_1.json"),
                             axioms("lambda_x1x2_f2.json")})
    EXPECT_EQ(run_command(c).report.dump(), run_command(c).report.dump()) << c.command;
}

TEST(Binary, ExitCodes) {
  const std::string g = (kData / "groups").string() + "/", s = (kData / "specs").string() + "/";
  const std::string out = (std::filesystem::temp_directory_path() / "hh_report.json").string();
  EXPECT_EQ(run_binary("compute --group " + g + "z2.json --ring f2 --max-degree 5 --out " + out), 0);
  std::ifstream in(out);
  EXPECT_EQ(nlohmann::json::parse(in)["result"]["dimensions"], nlohmann::json::array({2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(run_binary("axioms --spec " + s + "trunc_f5_mutated.json"), 1);
  EXPECT_EQ(run_binary("compute --group " + g + "bad_not_associative.json"), 2);
  EXPECT_EQ(run_binary("compute --group " + g + "missing.json"), 2);
  EXPECT_EQ(run_binary("compute --ring q"), 2);
  EXPECT_EQ(run_binary("compute --group " + g + "z2.json --ring f4"), 2);
  EXPECT_EQ(run_binary("bv --group " + g + "free_abelian_3.json"), 3);
  EXPECT_EQ(run_binary("cy-check --group " + g + "free_abelian_1.json"), 0);
}
