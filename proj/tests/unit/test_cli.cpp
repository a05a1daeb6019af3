#include <json.hpp>

#include "doctest.h"
#include "nabt_cli/app.hpp"
#include "nabt_cli/spec.hpp"

using namespace nabt;
using namespace nabt::cli;
using Json = nlohmann::ordered_json;

namespace {

Outcome invoke(std::vector<std::string> args, const char* env = nullptr) { return run(args, env); }

Json cli_json(std::vector<std::string> args, const char* env = nullptr) {
  args.push_back("--format");
  args.push_back("json");
  Outcome o = invoke(std::move(args), env);
  return Json::parse(o.out);
}

// "path: value" lines of the text format, rebuilt from a JSON document.
void flatten(const Json& j, const std::string& path, std::vector<std::string>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); })) {
    std::string s = path + ": [";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
    out.push_back(s + "]");
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.push_back(path + ": " + (j.is_string() ? j.get<std::string>() : j.dump()));
  }
}

}  // namespace

TEST_CASE("parse_group_spec") {
  TensorLimits limits;
  SUBCASE("corpus") {
    CHECK(resolve_group(parse_group_spec("corpus: Q8"), limits).group.order() == 8);
    CHECK(resolve_group(parse_group_spec("  corpus:C2xC4 "), limits).group.order() == 8);
  }
  SUBCASE("fp") {
    auto r = resolve_group(parse_group_spec("fp: <a | a^5>"), limits);
    CHECK(r.group.order() == 5);
    CHECK(r.cosets_defined == 5);
    CHECK(resolve_group(parse_group_spec("fp:<a,b|a^2,b^3,(a*b)^2>"), limits).group.order() == 6);
    CHECK(resolve_group(parse_group_spec("fp: <a,b | a^4, b^2, [a,b]>"), limits).group.order() == 8);
    CHECK(resolve_group(parse_group_spec("fp: <a,b | a^4, a^2*b^-2, b*a*b^-1*a>"), limits).group.order() == 8);
    CHECK(resolve_group(parse_group_spec("fp: < | >"), limits).group.order() == 1);
  }
  SUBCASE("perm") {
    auto s = parse_group_spec("perm: (0 1), (0 1 2)");
    CHECK(std::get<PermSpec>(s.form).degree == 3);
    CHECK(resolve_group(s, limits).group.order() == 6);
    CHECK(resolve_group(parse_group_spec("perm: (0,1)(2,3), (0,2)"), limits).group.order() == 8);
    CHECK(resolve_group(parse_group_spec("perm: ()"), limits).group.order() == 1);
  }
  SUBCASE("errors carry positions") {
    auto position = [](const std::string& text) {
      try {
        parse_group_spec(text);
      } catch (const ParseError& e) {
        return std::pair{e.line(), e.column()};
      }
      return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(position("group: C2") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(position("fp: <a | b^2>") == std::pair<std::size_t, std::size_t>{1, 10});
    CHECK(position("fp: <a, a | a^2>") == std::pair<std::size_t, std::size_t>{1, 9});
    CHECK(position("perm: (0 1") == std::pair<std::size_t, std::size_t>{1, 11});
    CHECK(position("perm: (0 0)") == std::pair<std::size_t, std::size_t>{1, 10});
    CHECK(position("fp: <a | a^2>\n  extra") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(position("corpus:") == std::pair<std::size_t, std::size_t>{1, 8});
    CHECK_THROWS_AS(resolve_group(parse_group_spec("corpus: Z"), limits), ParseError);
  }
}

TEST_CASE("action specs and matrices") {
  CHECK(parse_action_spec("trivial").mode == ActionSpec::Mode::trivial);
  CHECK(parse_action_spec(" conjugation ").mode == ActionSpec::Mode::conjugation);
  auto e = parse_action_spec("explicit: (0 2 1); (0 1 2)");
  CHECK(e.mode == ActionSpec::Mode::explicit_images);
  CHECK(e.images.size() == 2);
  CHECK_THROWS_AS(parse_action_spec("sideways"), ParseError);
  IntMatrix m = parse_matrix("0,1/1,0");
  CHECK(m.rows() == 2);
  CHECK(m(0, 1) == 1);
  CHECK(parse_matrix("-1")(0, 0) == -1);
  CHECK_THROWS_AS(parse_matrix("1,2/3"), ParseError);
}

TEST_CASE("commands") {
  SUBCASE("schur V4") {
    Json j = cli_json({"schur", "corpus:V4"});
    CHECK(j["result"]["abelian_invariants"] == Json::parse(R"({"torsion":[2],"rank":0})"));
  }
  SUBCASE("tensor-square C6") { CHECK(cli_json({"tensor-square", "corpus:C6"})["result"]["order"] == 6); }
  SUBCASE("aug-tensor") {
    Json j = cli_json({"aug-tensor", "--module-rank", "1", "--action", "-1", "--over", "corpus:C2"});
    CHECK(j["result"]["abelian_invariants"]["rank"] == 1);
    CHECK(j["result"]["abelian_invariants"]["torsion"].empty());
    Json t = cli_json({"aug-tensor", "--module-rank", "1", "--over", "corpus:C2"});
    CHECK(t["result"]["abelian_invariants"]["torsion"] == Json::array({2}));
  }
  SUBCASE("compatibility witness") {
    Json j = cli_json({"compatible", "corpus:S3", "corpus:S3", "--action-gh", "conjugation", "--action-hg", "trivial"});
    CHECK(j["result"]["compatible"] == false);
    CHECK(j["result"]["witness"]["replays"] == true);
    CHECK(cli_json({"compatible", "corpus:S3", "perm: (0 1 2)"})["result"]["compatible"] == true);
  }
  SUBCASE("explicit action") {
    Json j = cli_json({"tensor", "corpus:C2", "corpus:C3", "--action-gh", "explicit: (0 2 1)", "--action-hg", "trivial"});
    CHECK(j["result"]["order"] == 3);
    CHECK(invoke({"tensor", "corpus:C2", "corpus:C3", "--action-gh", "explicit: (0 1)", "--action-hg", "trivial"})
              .exit_code == kInputError);
  }
  SUBCASE("config echo and environment") {
    Json d = cli_json({"order", "corpus:C2"});
    CHECK(d["config"]["max_cosets"] == 1000000);
    CHECK(d["config"]["element_bound"] == 5000);
    CHECK(d["config"]["bar_bound"] == 16);
    Json e = cli_json({"order", "corpus:C2"}, "1234");
    CHECK(e["config"]["max_cosets"] == 1234);
    CHECK(e["config"]["max_cosets_source"] == "env");
    Json f = cli_json({"order", "corpus:C2", "--max-cosets", "99"}, "1234");
    CHECK(f["config"]["max_cosets"] == 99);
    CHECK(invoke({"order", "corpus:C2"}, "lots").exit_code == kInputError);
  }
  SUBCASE("exit codes") {
    CHECK(invoke({"order", "corpus:C2"}).exit_code == kSuccess);
    CHECK(invoke({"order", "fp: <a,b | a^2, b^2>", "--max-cosets", "200"}).exit_code == kLimitExhausted);
    CHECK(invoke({"h2-bar", "corpus:S4"}).exit_code == kLimitExhausted);
    CHECK(invoke({"order", "fp: <a | a^>"}).exit_code == kInputError);
    CHECK(invoke({"frobnicate"}).exit_code == kInputError);
    CHECK(invoke({"--help"}).exit_code == kSuccess);
    CHECK(invoke({"verify", "bjr_identities", "corpus:S3", "perm: (0 1)"}).exit_code == kInputError);
    CHECK(invoke({"verify", "nonsense", "corpus:S3"}).exit_code == kInputError);
    Json err = cli_json({"order", "fp: <a,b | a^2, b^2>", "--max-cosets", "200"});
    CHECK(err["error"]["kind"] == "limit");
  }
  SUBCASE("verify suites") {
    CHECK(invoke({"verify", "bjr-identities", "corpus:S3", "perm: (0 1 2)"}).exit_code == kSuccess);
    CHECK(invoke({"verify", "schur_epimorphism", "corpus:Q8", "perm: (0 3)(1 6)(2 7)(4 5)"}).exit_code == kSuccess);
    CHECK(invoke({"verify", "compatibility", "corpus:S3", "corpus:S3", "--action-hg", "trivial"}).exit_code ==
          kSuiteFailure);
    CHECK(invoke({"verify", "derivative-lcs", "corpus:D4"}).exit_code == kSuccess);
  }
  SUBCASE("series") {
    Json d = cli_json({"series", "corpus:S3", "--lower-central"});
    CHECK(d["result"]["terms"].size() == 2);
    CHECK(cli_json({"series", "corpus:S4"})["result"]["terms"].size() == 4);
  }
}

TEST_CASE("text and json carry the same content") {
  for (std::vector<std::string> args : {std::vector<std::string>{"schur", "corpus:Q8"},
                                        std::vector<std::string>{"circ", "corpus:S3", "corpus:S3"},
                                        std::vector<std::string>{"derivative", "corpus:D4", "corpus:D4"},
                                        std::vector<std::string>{"corpus", "run", "--suite", "schur_classes"}}) {
    Json j = cli_json(args);
    j.erase("timings");
    std::vector<std::string> expected;
    flatten(j, "", expected);
    std::string text = invoke(args).out;
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (std::size_t nl; (nl = text.find('\n', start)) != std::string::npos; start = nl + 1) {
      std::string line = text.substr(start, nl - start);
      if (line.rfind("timings.", 0) != 0) lines.push_back(line);
    }
    CHECK(lines == expected);
  }
}

TEST_CASE("repeated runs are identical apart from timings") {
  std::vector<std::string> args{"corpus", "run", "--suite", "tensor_square", "--suite", "lemma26_sequence"};
  Json a = cli_json(args);
  Json b = cli_json(args);
  a.erase("timings");
  b.erase("timings");
  CHECK(a.dump() == b.dump());
  CHECK(a["result"]["ok"] == true);
}
