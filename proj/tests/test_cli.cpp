#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "freesimplex/cli.hpp"
#include "freesimplex/json_io.hpp"
#include "freesimplex/theoremlab.hpp"
#include "freesimplex/word_syntax.hpp"

using namespace freesimplex;
using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "freesimplex");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t offset_of(std::string_view text) {
  try {
    parse_word(text);
  } catch (const WordSyntaxError& e) {
    return e.offset();
  }
  return std::string_view::npos;
}

}  // namespace

TEST_CASE("word parsing") {
  CHECK(parse_word("g1*g2^-1") == Word({g(1), g(2, -1)}));
  CHECK(parse_word("g1 g1'") == Word());
  CHECK(parse_word("e") == Word());
  CHECK(parse_word("") == Word());
  CHECK(parse_word("  g3^1 * g4' g2 ") == Word({g(3), g(4, -1), g(2)}));
  CHECK(parse_word("g1*g2*g2^-1*g3") == Word({g(1), g(3)}));

  CHECK_THROWS_AS(parse_word("g5"), GeneratorIndexOutOfRange);
  CHECK_THROWS_AS(parse_word("g0"), GeneratorIndexOutOfRange);
  CHECK(offset_of("g1*g5") == 3);
  CHECK(offset_of("g1 x") == 3);
  CHECK(offset_of("g") == 1);
  CHECK(offset_of("g2^-2") != std::string_view::npos);
  CHECK(offset_of("g1^") != std::string_view::npos);
}

TEST_CASE("print and parse round trip") {
  for_each_reduced(5, [&](const Word& w) { CHECK(parse_word(w.to_string()) == w); });
  CHECK(parse_word(Word().to_string()) == Word());
}

TEST_CASE("alternating expression rendering") {
  CHECK(cli::format_alt_expression(Word({g(1, -1), g(2), g(3), g(1, -1)})) == "(g1^-1 g2)(1^-1 g3)(g1^-1 1)");
  CHECK(cli::format_alt_expression(Word({g(1), g(2)})) == "(g1 1^-1)(g2 1^-1)");
  CHECK(cli::format_alt_expression(Word({g(1), g(2, -1)})) == "(g1 g2^-1)");
}

TEST_CASE("single-word commands") {
  const Result check = run({"check", "g1*g2^-1"});
  CHECK(check.code == cli::kOk);
  CHECK(check.out.find("(-5-√5)/2^3") != std::string::npos);
  CHECK(check.out.find("-inf") != std::string::npos);
  CHECK(check.out.find("NO") == std::string::npos);

  const Result reduce = run({"reduce", "--k", "3", "g1*g3*g2^-1"});
  CHECK(reduce.code == cli::kOk);
  CHECK(reduce.out == "g3\n");

  const Result expr = run({"expr", "g1^-1*g2*g3*g1^-1"});
  CHECK(expr.code == cli::kOk);
  CHECK(expr.out.find("(g1^-1 g2)(1^-1 g3)(g1^-1 1)") != std::string::npos);

  CHECK(run({"eval", "g1*g2"}).code == cli::kOk);
  CHECK(run({"norm", "g1*g2"}).code == cli::kOk);
  CHECK(run({"lad", "g1*g2"}).code == cli::kOk);
  CHECK(run({"expr", "e"}).code == cli::kOk);
  CHECK(run({"axioms"}).code == cli::kOk);
  CHECK(run({"identities"}).code == cli::kOk);
}

TEST_CASE("JSON output matches the library values") {
  const Word w{g(1), g(2, -1), g(3)};
  const json check = json::parse(run({"--format", "json", "check", "g1*g2^-1*g3"}).out);
  const TheoremReport report = check_word(w);
  CHECK(check == json(report));
  CHECK(check.at("perK").size() == 4);
  for (int k = 0; k < 4; ++k) {
    const auto& jk = check.at("perK").at(static_cast<std::size_t>(k));
    CHECK(jk.at("x").get<Dyadic5>() == report.per_k[static_cast<std::size_t>(k)].x);
    CHECK(jk.at("lad").get<LadValue>() == report.per_k[static_cast<std::size_t>(k)].lad);
    CHECK(jk.at("red").get<Word>() == report.per_k[static_cast<std::size_t>(k)].red);
  }

  const json eval = json::parse(run({"--format", "json", "eval", "g1*g2"}).out);
  CHECK(eval.at("rho").get<Quaternion5>() == rho(Word({g(1), g(2)})));

  const json norm = json::parse(run({"--format", "json", "norm", "g1*g2^-1"}).out);
  CHECK(norm.at("altNorm") == 1);
  CHECK(norm.at("reducedAltNorm").at("3") == 0);

  const json lads = json::parse(run({"--format", "json", "lad", "g1*g2^-1"}).out);
  CHECK(lads.at("lad") == json::array({1, 1, 1, "-inf"}));

  const json verify = json::parse(run({"--format", "json", "verify", "--max-len", "2"}).out);
  CHECK(verify.at("wordsChecked") == 64);
  CHECK(verify.at("failures").empty());
  CHECK(verify.at("identityFamily").size() == 104);

  const json cert = json::parse(run({"--format", "json", "certificate", "--k", "0", "g1*g2"}).out);
  CHECK(cert.at("accepted") == true);
}

TEST_CASE("text and JSON report the same values") {
  for (const std::string text : {"g1*g2", "g1^-1*g2*g3*g1^-1", "g4*g4*g2^-1"}) {
    const Word w = parse_word(text);
    const std::string table = run({"lad", text}).out;
    const json j = json::parse(run({"--format", "json", "lad", text}).out);
    const Quaternion5 x = j.at("rho").get<Quaternion5>();
    for (int k = 0; k < 4; ++k) {
      CHECK(table.find(component(x, k).to_string()) != std::string::npos);
      CHECK(table.find(j.at("lad").at(static_cast<std::size_t>(k)).get<LadValue>().to_string()) != std::string::npos);
    }
  }
}

TEST_CASE("verify reports counts and streams progress to stderr") {
  const Result r = run({"verify", "--max-len", "3", "--workers", "2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("456 words, 0 failures") != std::string::npos);
  CHECK(r.out.find("104 identity patterns, 0 failures") != std::string::npos);
  CHECK(r.err.find("456/456") != std::string::npos);
  CHECK(r.out.find("verify:") == std::string::npos);
}

TEST_CASE("certificate command") {
  const Result ok = run({"certificate", "--k", "0", "g1*g2*g3"});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("accepted") != std::string::npos);
  const Result degenerate = run({"certificate", "--k", "3", "g1*g2^-1"});
  CHECK(degenerate.code == cli::kOk);
  CHECK(degenerate.out.find("nothing to certify") != std::string::npos);
}

TEST_CASE("fault injection gives exit code 1") {
  CHECK(run({"--corrupt-vertices", "verify", "--max-len", "2"}).code == cli::kVerificationFailed);
  CHECK(run({"--corrupt-vertices", "check", "g1*g2"}).code == cli::kVerificationFailed);
  CHECK(run({"--corrupt-vertices", "axioms"}).code == cli::kVerificationFailed);
  CHECK(run({"--corrupt-vertices", "identities"}).code == cli::kVerificationFailed);
}

TEST_CASE("usage errors give exit code 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"check"}).code == cli::kUsage);
  CHECK(run({"check", "g5"}).code == cli::kUsage);
  CHECK(run({"check", "g1*x"}).code == cli::kUsage);
  CHECK(run({"reduce", "g1"}).code == cli::kUsage);
  CHECK(run({"reduce", "--k", "4", "g1"}).code == cli::kUsage);
  CHECK(run({"verify", "--max-len", "0"}).code == cli::kUsage);
  CHECK(run({"--format", "xml", "axioms"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}
