#include <gtest/gtest.h>

#include <json.hpp>

#include "modsem/cli.hpp"

using namespace modsem;
using nlohmann::json;

namespace {

const char* loop_source = "module P defines p/0 { p :- p. p :- q. }\nmodule Q defines q/0 { q :- q. }\n";
const char* paths_source =
    "module edges defines e/2 { e(1,2). e(2,3). }\n"
    "module paths defines path/2 { path(X,Y) :- e(X,Y). path(X,Y) :- e(X,Z), path(Z,Y). }\n";
const char* win_source =
    "module board defines move/2 { move(a,b). move(b,a). move(b,c). move(c,d). }\n"
    "module game defines win/1 { win(X) :- move(X,Y), not win(Y). }\n";

RunConfig config(std::string command, std::string source, SemanticsKind kind = SemanticsKind::well_founded) {
    RunConfig c;
    c.command = std::move(command);
    c.source = std::move(source);
    c.semantics = kind;
    return c;
}

} // namespace

TEST(Cli, EvalLoopText) {
    const auto r = execute(config("eval", loop_source));
    EXPECT_EQ(r.exit_code, 0) << r.error;
    EXPECT_EQ(r.output, "semantics: well_founded\nmode: modular\ntrue: {}\nfalse: {p, q}\nundefined: {}\n");
}

TEST(Cli, EvalLoopJson) {
    auto c = config("eval", loop_source);
    c.format = OutputFormat::json;
    const auto r = execute(c);
    EXPECT_NE(r.output.find(R"("false":["p","q"])"), std::string::npos) << r.output;
    const auto j = json::parse(r.output);
    EXPECT_EQ(j["semantics"], "well_founded");
    EXPECT_EQ(j["mode"], "modular");
    EXPECT_TRUE(j["true"].empty());
    EXPECT_TRUE(j["undefined"].empty());
}

TEST(Cli, EmptyModel) {
    auto c = config("eval", "");
    c.format = OutputFormat::json;
    const auto j = json::parse(execute(c).output);
    EXPECT_TRUE(j["true"].empty() && j["false"].empty() && j["undefined"].empty());
}

TEST(Cli, CompareEqual) {
    const auto r = execute(config("compare", paths_source, SemanticsKind::least_model));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("EQUAL"), std::string::npos);
    EXPECT_EQ(r.output.find("DIFFERENT"), std::string::npos);

    auto c = config("eval", win_source);
    c.mode = EvalMode::compare;
    c.format = OutputFormat::json;
    const auto j = json::parse(execute(c).output);
    EXPECT_EQ(j["equal"], true);
    EXPECT_EQ(j["true"], j["monolithic"]["true"]);
}

TEST(Cli, WinGame) {
    auto c = config("eval", win_source);
    c.format = OutputFormat::json;
    c.mode = EvalMode::monolithic;
    const auto j = json::parse(execute(c).output);
    // c wins by moving to d; d loses; a and b form a draw cycle.
    EXPECT_NE(std::find(j["true"].begin(), j["true"].end(), "win(c)"), j["true"].end());
    EXPECT_NE(std::find(j["false"].begin(), j["false"].end(), "win(d)"), j["false"].end());
    EXPECT_EQ(j["undefined"], json::array({"win(a)", "win(b)"}));
}

TEST(Cli, Assume) {
    auto c = config("eval", "module P defines p/0 { p :- q, not r. }");
    c.assume = "q, not r";
    EXPECT_NE(execute(c).output.find("true: {p, q}"), std::string::npos);
    c.assume = "p";
    EXPECT_EQ(execute(c).exit_code, 1);
    c.assume = "q,";
    EXPECT_EQ(execute(c).exit_code, 2);
}

TEST(Cli, Residualize) {
    auto c = config("residualize", loop_source);
    c.module = "Q";
    const auto r = execute(c);
    EXPECT_EQ(r.exit_code, 0) << r.error;
    EXPECT_EQ(r.output.rfind("module Q_residual defines q/0 {\n  q :- q.\n}\n", 0), 0u) << r.output;

    c.module = "nope";
    EXPECT_EQ(execute(c).exit_code, 1);
    c.module.clear();
    EXPECT_EQ(execute(c).exit_code, 1);
}

TEST(Cli, Query) {
    auto c = config("query", paths_source, SemanticsKind::least_model);
    c.goal = "path(1,Y)";
    EXPECT_EQ(execute(c).output, "semantics: least_model\nY=2\nY=3\n");
    c.goal = "path(3,Y)";
    EXPECT_EQ(execute(c).output, "semantics: least_model\nno answers\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(execute(config("eval", "module m defines p/1 { p(X) :- q(X,")).exit_code, 2);
    EXPECT_EQ(execute(config("eval", "module m defines p/0 { r. }")).exit_code, 1);
    EXPECT_EQ(execute(config("eval", "module a defines x/0 { x :- y. } module b defines y/0 { y :- x. }")).exit_code, 1);
    EXPECT_EQ(execute(config("eval", "module m defines p/0 { p :- not q. }", SemanticsKind::least_model)).exit_code, 1);
    EXPECT_EQ(execute(config("frobnicate", "")).exit_code, 1);
}

TEST(Cli, Lab) {
    const auto r = execute(config("lab", ""));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("lab: PASS"), std::string::npos);
    EXPECT_NE(r.output.find("REPRODUCED"), std::string::npos);
}

TEST(Cli, Determinism) {
    auto c = config("corpus", "");
    c.count = 10;
    c.seed = 5;
    c.format = OutputFormat::json;
    const auto a = execute(c), b = execute(c);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.output, b.output);
    EXPECT_EQ(execute(config("eval", win_source)).output, execute(config("eval", win_source)).output);
}
