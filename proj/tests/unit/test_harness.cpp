#include <doctest.h>

#include <fstream>
#include <sstream>

#include "f4v/exactalg/parse.hpp"
#include "f4v/harness/commands.hpp"
#include "f4v/reps/basis.hpp"

using namespace f4v;

namespace {

struct Run {
  int code;
  std::string out, err;
};

template <class F>
Run capture(F f) {
  std::ostringstream out, err;
  int code = f(out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse_line(const std::string& s) { return nlohmann::json::parse(s); }

std::vector<nlohmann::json> lines(const std::string& s) {
  std::vector<nlohmann::json> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("field specs") {
    CHECK(parse_field_spec("Z").kind == FieldSpec::Kind::Integers);
    CHECK(parse_field_spec("sym").kind == FieldSpec::Kind::Symbolic);
    CHECK(parse_field_spec("Fp:7").field == &FieldCtx::prime(7));
    CHECK(parse_field_spec("F7").field == &FieldCtx::prime(7));
    CHECK(parse_field_spec("Fpk:3,2").field == &FieldCtx::extension(3, 2));
    CHECK(parse_field_spec("F2^4").field == &FieldCtx::extension(2, 4));
    CHECK_THROWS_AS(parse_field_spec("F9"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("Q"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("Fpk:3"), ParseError);
  }

  TEST_CASE("lambda specs") {
    CHECK(parse_lambda("0,1,0,0", 4).s == std::array<int, 4>{0, 1, 0, 0});
    CHECK(parse_lambda("(1, -2, 3, 0)", 3).frame == Frame::Diag);
    CHECK_THROWS_AS(parse_lambda("1,2,3", 4), ParseError);
    CHECK_THROWS_AS(parse_lambda("1,2,3,4,5", 4), ParseError);
  }

  TEST_CASE("delta command") {
    auto r = capture([](auto& o, auto& e) { return cmd_delta(8, "a=0,b=1,c=0,d=1,e=1,f=1,g=1", "F2", o, e); });
    CHECK(r.code == kExitOk);
    CHECK(parse_line(r.out) == nlohmann::json{{"delta", "1"}, {"stable", true}});

    r = capture([](auto& o, auto& e) { return cmd_delta(3, "dual-cyclic", "sym", o, e); });
    CHECK(parse_line(r.out)["delta"] == "4096*a^6*e^3*h^9*l^12*p^6");

    r = capture([](auto& o, auto& e) { return cmd_delta(12, "c1=0,c2=1,c3=1,c4=1,c5=1", "F5", o, e); });
    CHECK(parse_line(r.out) == nlohmann::json{{"delta", "0"}, {"stable", false}});

    r = capture([](auto& o, auto& e) { return cmd_delta(3, "a=1,c=1,d=1,f=1,i=1,k=1,l=1,m=1,o=1,q=1", "Z", o, e); });
    CHECK(parse_line(r.out)["delta"] == "225");

    r = capture([](auto& o, auto& e) { return cmd_delta(3, "a=1, zz=2", "Z", o, e); });
    CHECK(r.code == kExitParse);
    CHECK(r.err.find("position 5") != std::string::npos);
    CHECK(r.out.empty());

    r = capture([](auto& o, auto& e) { return cmd_delta(5, "a=1", "Z", o, e); });
    CHECK(r.code == kExitParse);
  }

  TEST_CASE("enumerate command") {
    GlobalOptions g;
    g.threads = 3;
    auto r = capture([&](auto& o, auto& e) { return cmd_enumerate(8, 2, 1, true, g, o, e); });
    REQUIRE(r.code == kExitOk);
    auto j = parse_line(r.out);
    CHECK(j["total"] == 128);
    CHECK(j["stable_count"] >= 1);
    CHECK(j["stable_count"] <= 127);
    CHECK(j["histogram"]["0"].get<int>() + j["histogram"]["1"].get<int>() == 128);

    r = capture([&](auto& o, auto& e) { return cmd_enumerate(6, 2, 1, false, g, o, e); });
    j = parse_line(r.out);
    CHECK(j["total"] == 1024);
    CHECK(j["stable_count"] >= 1);
    CHECK(!j.contains("histogram"));

    // the prime-field subset of V8(F4) is V8(F2)
    r = capture([&](auto& o, auto& e) { return cmd_enumerate(8, 2, 2, true, g, o, e); });
    j = parse_line(r.out);
    CHECK(j["total"] == 16384);
    CHECK(j["stable_count"] > 6);

    r = capture([&](auto& o, auto& e) { return cmd_enumerate(3, 3, 1, false, g, o, e); });
    CHECK(r.code == kExitFail);
  }

  TEST_CASE("destabilize command") {
    auto r = capture([](auto& o, auto& e) { return cmd_destabilize(8, "c=1,d=1,f=1,g=1", "F3", 4, o, e); });
    REQUIRE(r.code == kExitOk);
    CHECK(parse_line(r.out)["lambda"]["s"] == nlohmann::json{0, 2, -1, 0});

    r = capture([](auto& o, auto& e) { return cmd_destabilize(8, "b=1,d=1,e=1,f=1,g=1", "F3", 4, o, e); });
    CHECK(r.code == kExitPrecondition);
    CHECK(r.err.find("Δ ≠ 0") != std::string::npos);

    r = capture([](auto& o, auto& e) { return cmd_destabilize(6, "a=1,d=x,h=1,k=1,r=1", "F2^2", 4, o, e); });
    REQUIRE(r.code == kExitOk);
    CHECK(parse_line(r.out)["ext_degree"] <= 2);

    r = capture([](auto& o, auto& e) { return cmd_destabilize(8, "a=1", "Z", 4, o, e); });
    CHECK(r.code == kExitParse);
  }

  TEST_CASE("weights command") {
    auto r = capture([](auto& o, auto& e) { return cmd_weights(4, "0,1,0,0", o, e); });
    auto j = parse_line(r.out);
    CHECK(j["a"] == -1);
    CHECK(j["m"] == 3);
    CHECK(j["n"] == 3);
    CHECK(j.begin().key() == "a");

    r = capture([](auto& o, auto& e) { return cmd_weights(6, "0,0,0,1", o, e); });
    j = parse_line(r.out);
    CHECK(j["o"] == -1);
    CHECK(j["r"] == -1);
    CHECK(j["g"] == 2);

    for (int m : {3, 4, 6, 8, 12}) {
      r = capture([m](auto& o, auto& e) { return cmd_weights(m, "0,0,0,0", o, e); });
      const auto table = parse_line(r.out);
      CHECK(table.size() == dim(m));
      for (const auto& [k, w] : table.items()) CHECK(w == 0);
    }
  }

  TEST_CASE("weight tables match the goldens") {
    std::ifstream in(std::string(F4V_GOLDEN_DIR) + "/weights.json");
    REQUIRE(in.good());
    const auto golden = nlohmann::json::parse(in);
    for (int m : {3, 4, 6, 8}) {
      for (const auto& [lam, table] : golden[std::to_string(m)].items()) {
        auto r = capture([&](auto& o, auto& e) { return cmd_weights(m, lam, o, e); });
        CHECK(parse_line(r.out) == table);
      }
    }
  }

  TEST_CASE("verify-paper filter") {
    GlobalOptions g;
    auto r = capture([&](auto& o, auto& e) { return cmd_verify_paper({"delta6"}, g, o, e); });
    CHECK(r.code == kExitOk);
    auto reports = lines(r.out);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0]["check_id"] == "delta6");
    CHECK(reports[0]["status"] == "pass");
    for (const char* key : {"check_id", "criterion", "status", "expected", "source", "actual", "runtime_ms"})
      CHECK(reports[0].contains(key));

    r = capture([&](auto& o, auto& e) { return cmd_verify_paper({"delta3"}, g, o, e); });
    CHECK(lines(r.out).size() == 2);

    r = capture([&](auto& o, auto& e) { return cmd_verify_paper({"nothing"}, g, o, e); });
    CHECK(r.code == kExitParse);
  }

  TEST_CASE("corrupted disc4 table fails the delta4 check") {
    // flip the sign of one term of the transcribed quartic discriminant
    FormulaCatalog bad = [] {
      std::string src;
      for (const auto& [name, text] : default_catalog().sources)
        if (name == "disc4") src = text;
      REQUIRE(!src.empty());
      const auto pos = src.find('+');
      REQUIRE(pos != std::string::npos);
      src[pos] = '-';
      return build_catalog({{"disc4", src}});
    }();
    REQUIRE(!(bad.disc4 == default_catalog().disc4));
    GlobalOptions g;
    auto r = capture([&](auto& o, auto& e) { return cmd_verify_paper({"delta4"}, g, o, e, &bad); });
    CHECK(r.code == kExitFail);
    auto reports = lines(r.out);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0]["status"] == "fail");
    CHECK(reports[0]["actual"].get<std::string>().find("delta4 explicit=125") == std::string::npos);
  }
}
