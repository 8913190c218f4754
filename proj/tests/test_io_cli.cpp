// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <filesystem>

#include "linrel/commands.hpp"
#include "test_common.hpp"

using namespace linrel;
using namespace linrel::testing;
using io::json;

namespace
{
std::string sample(const std::string &name) { return std::string(LINREL_SAMPLES_DIR) + "/" + name; }

struct Outcome
{
  int code;
  std::string out, err;
};

template <class F> Outcome run(F &&f)
{
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

// CSV body rows, split on CRLF and commas (no quoted fields in numeric output).
std::vector<std::vector<std::string>> csv_rows(const std::string &text)
{
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos < text.size())
  {
    const std::size_t end = text.find("\r\n", pos);
    const std::string line = text.substr(pos, end - pos);
    std::vector<std::string> fields;
    std::size_t a = 0;
    while (true)
    {
      const std::size_t b = line.find(',', a);
      fields.push_back(line.substr(a, b - a));
      if (b == std::string::npos)
        break;
      a = b + 1;
    }
    rows.push_back(fields);
    pos = end == std::string::npos ? text.size() : end + 2;
  }
  return rows;
}
} // namespace

TEST(Parse, OperatorSpec)
{
  const io::RelationSpec s = io::load_spec(sample("identity.json"));
  EXPECT_EQ(s.mode, "operator");
  EXPECT_EQ(s.label, "graph of 1");
  EXPECT_TRUE(same(s.relation, graph_of(1.0)));
}

TEST(Parse, KernelPairAndPlainNumbers)
{
  EXPECT_TRUE(same(io::load_spec(sample("multivalued.json")).relation, multivalued_line()));
  const io::RelationSpec s = io::parse_spec(
      R"({"mode":"kernel_pair","n1":2,"n2":1,"matrices":{"C":[[1],[0]],"D":[[1]]}})");
  EXPECT_TRUE(same(s.relation, nondense()));
}

TEST(Parse, EmptyKernelPairNeedsColumnCount)
{
  const io::RelationSpec s =
      io::parse_spec(R"({"mode":"kernel_pair","n1":0,"n2":0,"matrices":{"C":[],"D":[],"p":0}})");
  EXPECT_EQ(s.relation.dim(), 0);
}

TEST(Parse, SyntaxErrorReportsLine)
{
  try
  {
    io::load_spec(sample("malformed.json"));
    FAIL() << "expected InputError";
  }
  catch (const io::InputError &e)
  {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("line 5"), std::string::npos) << msg;
    EXPECT_NE(msg.find("malformed.json"), std::string::npos) << msg;
  }
}

TEST(Parse, SchemaErrorsReportPath)
{
  auto message = [](const std::string &text) {
    try
    {
      io::parse_spec(text);
    }
    catch (const io::InputError &e)
    {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(R"({"mode":"operator","n1":1,"n2":1,"matrices":{"A":[[1,2]]}})").find("/matrices/A/0"),
            std::string::npos);
  EXPECT_NE(message(R"({"mode":"operator","n1":1,"n2":1,"matrices":{"A":[[[1,"x"]]]}})").find("/matrices/A/0/0"),
            std::string::npos);
  EXPECT_NE(message(R"({"mode":"sideways","n1":1,"n2":1,"matrices":{}})").find("/mode"), std::string::npos);
  EXPECT_NE(message(R"({"mode":"operator","n1":-1,"n2":1,"matrices":{}})").find("/n1"), std::string::npos);
  EXPECT_NE(message(R"({"mode":"operator","n1":1,"n2":1})").find("matrices"), std::string::npos);
  EXPECT_THROW(io::load_spec(sample("does_not_exist.json")), io::InputError);
}

TEST(Parse, CorruptedBasisIsRejected)
{
  EXPECT_THROW(io::load_spec(sample("corrupted_basis.json")), InvariantViolation);
}

TEST(Output, RelationRoundTrip)
{
  random::Engine rng(77);
  for (int i = 0; i < 20; ++i)
  {
    const LinearRelation R = random_relation(rng, 4);
    const json j = io::to_json(R, "r");
    const io::RelationSpec back = io::parse_spec(j.dump());
    EXPECT_TRUE(same(back.relation, R));
    EXPECT_EQ(back.label, "r");
  }
}

TEST(Output, CsvQuotingAndNumbers)
{
  EXPECT_EQ(io::csv_field("plain"), "plain");
  EXPECT_EQ(io::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(io::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(io::csv_field("two\nlines"), "\"two\nlines\"");
  std::ostringstream os;
  io::write_csv_row(os, {"x", "y,z"});
  EXPECT_EQ(os.str(), "x,\"y,z\"\r\n");
  EXPECT_EQ(io::format_double(-0.75), "-0.75");
  EXPECT_EQ(std::stod(io::format_double(0.1)), 0.1);
  EXPECT_EQ(io::number(std::numeric_limits<double>::infinity()), json("inf"));
  EXPECT_TRUE(io::number(std::nan("")).is_string());
}

TEST(Lambda, Parsing)
{
  EXPECT_EQ(cli::parse_lambda("-2"), Scalar(-2.0));
  EXPECT_EQ(cli::parse_lambda("1,1"), Scalar(1.0, 1.0));
  EXPECT_THROW(cli::parse_lambda("1i"), io::InputError);
  EXPECT_THROW(cli::parse_triplet("other"), io::InputError);
}

TEST(Analyze, IdentityAndMultivalued)
{
  cli::Options opt;
  Outcome r = run([&](auto &o, auto &e) { return cli::cmd_analyze(sample("identity.json"), opt, o, e); });
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["parts"]["dom"]["dim"], 1);
  EXPECT_EQ(j["parts"]["ran"]["dim"], 1);
  EXPECT_EQ(j["parts"]["mul"]["dim"], 0);
  EXPECT_TRUE(j["symmetry"]["is_selfadjoint"].get<bool>());
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["config"]["rank_tol"], 1e-10);

  r = run([&](auto &o, auto &e) { return cli::cmd_analyze(sample("multivalued.json"), opt, o, e); });
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["parts"]["mul"]["dim"], 1);
  EXPECT_EQ(j["parts"]["dom"]["dim"], 0);
}

TEST(Analyze, MalformedInputExitsTwo)
{
  const Outcome r = run([&](auto &o, auto &e) { return cli::cmd_analyze(sample("malformed.json"), {}, o, e); });
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
}

TEST(Analyze, Deterministic)
{
  cli::Options opt;
  const Outcome a = run([&](auto &o, auto &e) { return cli::cmd_analyze(sample("random4.json"), opt, o, e); });
  const Outcome b = run([&](auto &o, auto &e) { return cli::cmd_analyze(sample("random4.json"), opt, o, e); });
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Extensions, GraphOneZeroAndMultivalued)
{
  cli::Options opt;
  Outcome r = run([&](auto &o, auto &e) { return cli::cmd_extensions(sample("identity.json"), opt, o, e); });
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_TRUE(j["S_F_equals_S_K"].get<bool>());
  EXPECT_TRUE(j["all_checks_pass"].get<bool>());

  r = run([&](auto &o, auto &e) { return cli::cmd_extensions(sample("zero.json"), opt, o, e); });
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["G0_dim"], 1);
  ASSERT_EQ(j["extremal_family"].size(), 2u);
  EXPECT_TRUE(j["extremal_family"][0]["equals_S_F"].get<bool>());
  EXPECT_TRUE(j["extremal_family"][1]["equals_S_K"].get<bool>());

  r = run([&](auto &o, auto &e) { return cli::cmd_extensions(sample("multivalued.json"), opt, o, e); });
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  const LiftBundle b = lift(multivalued_line());
  // emitted graph bases re-ingest to the same relations
  EXPECT_TRUE(same(io::spec_from_json(j["relations"]["S_F"]).relation, b.S_F));
  EXPECT_TRUE(same(io::spec_from_json(j["relations"]["S_K"]).relation, b.S_K));
  EXPECT_TRUE(same(io::spec_from_json(j["relations"]["S_F"]).relation,
                   product(Subspace(2), Subspace::full(2))));
}

TEST(Weyl, BasicTripletIsLambda)
{
  const Outcome r = run([&](auto &o, auto &e) {
    return cli::cmd_weyl(sample("zero.json"), "basic", {Scalar(-1), Scalar(1), Scalar(2)}, {}, o, e);
  });
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"re_lambda", "im_lambda", "M_0_0_re", "M_0_0_im", "status"}));
  for (std::size_t i = 1; i < 4; ++i)
  {
    EXPECT_NEAR(std::stod(rows[i][2]), std::stod(rows[i][0]), 1e-12);
    EXPECT_NEAR(std::stod(rows[i][3]), 0.0, 1e-12);
    EXPECT_EQ(rows[i][4], "ok");
  }
}

TEST(Weyl, MainTripletAndSingularRow)
{
  const Outcome r = run([&](auto &o, auto &e) {
    return cli::cmd_weyl(sample("identity.json"), "main", {Scalar(-2), Scalar(0)}, {}, o, e);
  });
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(std::stod(rows[1][2]), -0.75, 1e-12);
  EXPECT_EQ(rows[2][4], "singular");
  EXPECT_EQ(rows[2][2], "");
}

TEST(Weyl, OutputFileAndBadTriplet)
{
  const std::string path = (std::filesystem::temp_directory_path() / "linrel_weyl_test.csv").string();
  cli::Options opt;
  opt.out = path;
  const Outcome r = run([&](auto &o, auto &e) { return cli::cmd_weyl(sample("identity.json"), "tilde", {}, opt, o, e); });
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(csv_rows(io::read_file(path)).size(), 1u + cli::default_lambda_grid().size());
  std::remove(path.c_str());
  const Outcome bad = run([&](auto &o, auto &e) { return cli::cmd_weyl(sample("identity.json"), "x", {}, {}, o, e); });
  EXPECT_EQ(bad.code, 2);
}

TEST(Extend, ThetaExamples)
{
  const std::string dir = (std::filesystem::temp_directory_path() / "linrel_extend_test").string();
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string &name, const json &j) {
    std::ofstream(dir + "/" + name) << j.dump();
    return dir + "/" + name;
  };
  const std::string zero = write("zero_theta.json", io::to_json(zero_operator(1, 1)));
  const std::string mul = write("mul_theta.json", io::to_json(purely_multivalued(1, 1)));
  const std::string skew = write("skew_theta.json", io::to_json(graph_of(Scalar(0, 1))));

  Outcome r = run([&](auto &o, auto &e) {
    return cli::cmd_extend(sample("identity.json"), sample("theta_minus_one.json"), "main", {}, o, e);
  });
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_NEAR(j["lower_bound"].get<double>(), -1.0 - std::sqrt(2.0), 1e-10);
  EXPECT_TRUE(j["selfadjoint"].get<bool>());
  EXPECT_FALSE(j["nonnegative"].get<bool>());

  r = run([&](auto &o, auto &e) { return cli::cmd_extend(sample("identity.json"), zero, "main", {}, o, e); });
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out)["equals"]["K"].get<bool>());

  r = run([&](auto &o, auto &e) { return cli::cmd_extend(sample("identity.json"), mul, "main", {}, o, e); });
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_TRUE(j["equals"]["H"].get<bool>());
  EXPECT_TRUE(j["extremal"].get<bool>());

  r = run([&](auto &o, auto &e) { return cli::cmd_extend(sample("identity.json"), skew, "main", {}, o, e); });
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("selfadjoint"), std::string::npos);

  r = run([&](auto &o, auto &e) {
    return cli::cmd_extend(sample("identity.json"), sample("nondense.json"), "main", {}, o, e);
  });
  EXPECT_EQ(r.code, 2);
  std::filesystem::remove_all(dir);
}

TEST(SemiboundDemo, Examples)
{
  const Outcome r = run([&](auto &o, auto &e) { return cli::cmd_semibound_demo(1.0, {0.0, 1.0, 2.0}, {}, o, e); });
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_NEAR(std::stod(rows[1][1]), -1.0, 1e-12);
  EXPECT_NEAR(std::stod(rows[2][1]), -1.0 - std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(std::stod(rows[3][1]), (-5.0 - std::sqrt(41.0)) / 2.0, 1e-10);
  EXPECT_NE(r.err.find("decreases strictly"), std::string::npos);
  const Outcome bad = run([&](auto &o, auto &e) { return cli::cmd_semibound_demo(-1.0, {}, {}, o, e); });
  EXPECT_EQ(bad.code, 3);
}

TEST(Verify, ExitCodes)
{
  cli::Options opt;
  Outcome r = run([&](auto &o, auto &e) { return cli::cmd_verify(sample("identity.json"), opt, o, e); });
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  r = run([&](auto &o, auto &e) { return cli::cmd_verify(sample("random4.json"), opt, o, e); });
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  r = run([&](auto &o, auto &e) { return cli::cmd_verify(sample("corrupted_basis.json"), opt, o, e); });
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("orthonormal"), std::string::npos) << r.err;
  r = run([&](auto &o, auto &e) { return cli::cmd_verify(sample("malformed.json"), opt, o, e); });
  EXPECT_EQ(r.code, 2);
}

TEST(Options, InvalidToleranceIsInputError)
{
  cli::Options opt;
  opt.cfg.rank_tol = -1.0;
  const Outcome r = run([&](auto &o, auto &e) { return cli::cmd_analyze(sample("identity.json"), opt, o, e); });
  EXPECT_EQ(r.code, 3);
}
