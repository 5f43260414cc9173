#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "spl/classify.hpp"
#include "spl/cli.hpp"

using namespace spl;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "spl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("spec parsing") {
  const PerspectiveSpec a = cli::parse_spec("perm:(1,2)(3,4)@B2");
  CHECK(a.skew.family == SkewFamily::Perm);
  CHECK(a.skew.perm == parse_perm("(1,2)(3,4)"));
  CHECK(a.axis == canonical(CanonicalKind::B2));
  const PerspectiveSpec b = cli::parse_spec("kappa:id@G2");
  CHECK(b.skew.family == SkewFamily::Kappa);
  CHECK(b.skew.perm == Perm4());
  CHECK(cli::parse_spec("kappa:(1,3)@census:7").axis == enumerate_labelings()[7]);
  for (const auto& spec : enumerate_family(SkewFamily::Kappa, enumerate_labelings())) {
    CHECK(cli::parse_spec(spec.to_string()) == spec);
  }
}

TEST_CASE("spec parse errors have distinct kinds and messages") {
  auto failure = [](const char* text) {
    try {
      cli::parse_spec(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.kind(), std::string(e.what()));
    }
    return std::make_pair(ParseError::Kind::Io, std::string());
  };
  const auto bij = failure("perm:(1,2,2)@G2");
  const auto syn = failure("perm:(1,2@G2");
  const auto axis = failure("perm:(1,2)@V9");
  const auto census = failure("perm:(1,2)@census:30");
  const auto family = failure("swap:(1,2)@G2");
  CHECK(bij.first == ParseError::Kind::NotBijection);
  CHECK(syn.first == ParseError::Kind::Syntax);
  CHECK(axis.first == ParseError::Kind::UnknownAxis);
  CHECK(census.first == ParseError::Kind::UnknownAxis);
  CHECK(family.first == ParseError::Kind::Syntax);
  CHECK(bij.second != syn.second);
  CHECK(syn.second != axis.second);
  CHECK(cli::exit_code_for(ParseError::Kind::NotBijection) != cli::exit_code_for(ParseError::Kind::Syntax));
  CHECK(cli::exit_code_for(ParseError::Kind::UnknownAxis) >= 64);
}

TEST_CASE("Levi graph text") {
  const std::string dot = cli::emit_levi_dot(build(cli::parse_spec("perm:id@G2")));
  CHECK(count(dot, std::regex(R"(\bP\d+ \[)")) + count(dot, std::regex(R"(\bL\d+ \[)")) == 35);
  CHECK(count(dot, std::regex(" -- ")) == 60);
  CHECK(dot.find("label=\"c34\"") != std::string::npos);
  CHECK(dot == cli::emit_levi_dot(build(cli::parse_spec("perm:id@G2"))));
  const std::string axis = cli::emit_levi_dot(canonical(CanonicalKind::V5).to_psts());
  CHECK(count(axis, std::regex(R"(\b[PL]\d+ \[)")) == 10);
  CHECK(count(axis, std::regex(" -- ")) == 12);
}

TEST_CASE("serialized structures keep their canonical key") {
  for (SkewFamily f : {SkewFamily::Perm, SkewFamily::Kappa}) {
    for (const auto& spec : enumerate_family(f, enumerate_labelings())) {
      const Psts s = build(spec).psts;
      CHECK(canonical_key(parse_psts_text(to_psts_text(s))) == canonical_key(s));
    }
  }
}

TEST_CASE("build, iso and aut commands") {
  const Result b = run_cli({"build", "kappa:id@G2"});
  CHECK(b.code == 0);
  CHECK(b.out.rfind("psts 15 20\n", 0) == 0);
  CHECK(run_cli({"build", "--dot", "kappa:id@G2"}).out.rfind("graph levi", 0) == 0);

  const std::string path = temp_path("spl_cli_test.psts");
  {
    std::ofstream file(path);
    file << to_psts_text(build(cli::parse_spec("kappa:id@G2*")).psts);
  }
  const Result swap = run_cli({"iso", "kappa:id@G2", path});
  CHECK(swap.code == 0);
  CHECK(swap.out.find("a1 -> ") != std::string::npos);

  const Result cross = run_cli({"iso", "perm:id@B2", "kappa:id@B2"});
  CHECK(cross.code == cli::exit_code::kNotIsomorphic);

  const Result aut = run_cli({"aut", "perm:(1,2)@B2"});
  CHECK(aut.code == 0);
  CHECK(aut.out.rfind("order 8\n", 0) == 0);

  const std::string axis_path = temp_path("spl_cli_axis.psts");
  {
    std::ofstream file(axis_path);
    file << to_psts_text(canonical(CanonicalKind::V4).to_psts());
  }
  CHECK(cli::parse_spec("perm:id@" + axis_path).axis == canonical(CanonicalKind::V4));
  std::filesystem::remove(path);
  std::filesystem::remove(axis_path);
}

TEST_CASE("error exit codes") {
  CHECK(run_cli({"build", "perm:(1,2,2)@G2"}).code == cli::exit_code::kNotBijection);
  CHECK(run_cli({"build", "perm:(1,2@G2"}).code == cli::exit_code::kSyntax);
  CHECK(run_cli({"build", "perm:(1,2)@nowhere"}).code == cli::exit_code::kUnknownAxis);
  CHECK(run_cli({"iso", "perm:id@G2", "/nonexistent/file.psts"}).code == cli::exit_code::kIo);
  CHECK(run_cli({"frobnicate"}).code == cli::exit_code::kUsage);
  CHECK(run_cli({}).code == cli::exit_code::kUsage);
  const Result bad = run_cli({"build", "perm:(1,2,2)@G2"});
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("classify prints one row per class") {
  const Result r = run_cli({"classify", "kappa"});
  CHECK(r.code == 0);
  const auto classes = partition_into_classes(enumerate_family(SkewFamily::Kappa, canonical_axes()));
  CHECK(count(r.out, std::regex(R"(\n\d+ +kappa:)")) == classes.size());
  const Result census = run_cli({"classify", "perm", "--axes", "census", "--format", "structured"});
  CHECK(census.code == 0);
  const auto json = nlohmann::json::parse(census.out);
  CHECK(json["classes"].size() ==
        partition_into_classes(enumerate_family(SkewFamily::Perm, enumerate_labelings())).size());
}

TEST_CASE("census command") {
  const Result r = run_cli({"census"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("30 labelings\n", 0) == 0);
  CHECK(r.out.find("size 16: V5 V6") != std::string::npos);
}

}
