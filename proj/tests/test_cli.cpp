#include <doctest.h>

#include <random>
#include <sstream>

#include "ffd/cli.hpp"
#include "ffd/report.hpp"
#include "support.hpp"

using namespace ffd;
using namespace ffd::cli;
using namespace ffd::testing;

namespace {

struct Ran {
  int code;
  std::string out;
};

Ran invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str()};
}

MPoly random_mpoly(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<unsigned> e(0, 3);
  std::uniform_int_distribution<int> terms(0, 5);
  MPoly F(n);
  for (int k = terms(rng); k > 0; --k) {
    ExponentVector ev(n);
    for (auto& x : ev) x = e(rng);
    F.add_term(ev, random_ratfun(rng, 2, 4));
  }
  return F;
}

}  // namespace

TEST_CASE("parser examples") {
  CHECK(parse_ratfun("t^2/(t-1)") == RatFun(poly({0, 0, 1}), poly({-1, 1})));
  CHECK(parse_ratfun("-3/4") == K(-3, 4));
  CHECK(parse_ratfun("-t^2") == -(T() * T()));
  CHECK(parse_ratfun("2*(t+1)^0") == K(2));

  const MPoly cubic = parse_mpoly("x^3 + y^3 + 1", {"x", "y"});
  const DegreeProfile p = degree_profile(cubic);
  CHECK(p.total_degree == 3);
  CHECK(p.per_variable == std::vector<int>{3, 3});

  const MPoly F = parse_mpoly("1 + t*x", {"x"});
  CHECK(F.constant_term() == K(1));
  CHECK(F.coefficient({1}) == T());
  CHECK(parse_mpoly("x/(t+1)", {"x"}).coefficient({1}) == K(1) / (T() + K(1)));
}

TEST_CASE("parser errors carry positions") {
  const auto position = [](std::string_view text, const std::vector<std::string>& vars) -> long {
    try {
      parse_mpoly(text, vars);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("t^2/(t-1", {}) == 8);
  CHECK(position("1 + + ", {}) == 6);
  CHECK(position("x + w", {"x"}) == 4);
  CHECK(position("1/x", {"x"}) == 2);
  CHECK(position("t^-1", {}) == 2);
  CHECK(position("t 2", {}) == 2);
  CHECK_THROWS_AS(parse_ratfun("1/(t-t)"), ParseError);
  CHECK_THROWS_AS(parse_mpoly("x", {"x", "x"}), std::invalid_argument);
}

TEST_CASE("variable inference") {
  CHECK(infer_variables("x^3 + y^3 + 1") == std::vector<std::string>{"x", "y"});
  CHECK(infer_variables("y + 1") == std::vector<std::string>{"x", "y"});
  CHECK(infer_variables("x1 + t*x3") == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(infer_variables("x0 + x2") == std::vector<std::string>{"x0", "x1", "x2"});
  CHECK(infer_variables("t + 1").empty());
}

TEST_CASE("place parsing") {
  CHECK(parse_place("inf") == Place::infinity());
  CHECK(parse_place("-1/2") == Place::rational(Rational(-1, 2)));
  CHECK(parse_place("irr:t^2+1") == Place::conjugacy_class(poly({1, 0, 1})));
  CHECK(parse_places("").empty());
  CHECK(parse_places("0,inf,irr:t^2+1").count() == 3);
  CHECK_THROWS_AS(parse_place("irr:t^2-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_place("zero"), std::invalid_argument);
  for (const auto& p : parse_places("0,3/2,inf,irr:t^2+t+1")) CHECK(parse_place(p.encode()) == p);
}

TEST_CASE("rendering round-trips through the parser") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const RatFun f = random_ratfun(rng, 4, 9);
    CHECK(parse_ratfun(f.to_string()) == f);
  }
  const std::vector<std::string> names = {"x", "y", "z"};
  for (int i = 0; i < 200; ++i) {
    const MPoly F = random_mpoly(rng, 3);
    CAPTURE(F.to_string(names));
    CHECK(parse_mpoly(F.to_string(names), names) == F);
  }
}

TEST_CASE("command examples and exit codes") {
  const Ran bm = invoke({"check-bm", "--S", "", "t", "1-t"});
  CHECK(bm.code == 0);
  const Json j = Json::parse(bm.out);
  CHECK(j["result"]["status"] == "holds");
  CHECK(j["result"]["lhs"] == "1/1");
  CHECK(j["result"]["rhs"] == "4/1");

  const Ran weil = invoke({"toric-weil", "--fan", "P2", "--ray", "-1,-1", "--point", "t,t", "--place", "inf"});
  CHECK(weil.code == 0);
  CHECK(Json::parse(weil.out)["result"]["value"] == 1);

  CHECK(invoke({"check-bm", "--S", "", "t", "-t", "1"}).code == 2);
  CHECK(invoke({"check-bm", "t", "t"}).code == 2);
  CHECK(invoke({"height", "t^2/(t-1"}).code == 3);
  CHECK(invoke({"frobnicate"}).code == 3);
  CHECK(invoke({"toric-weil", "--fan", "P7", "--ray", "1,0", "--point", "t,t", "--place", "0"}).code == 3);
  CHECK(invoke({"check-prox", "1+x", "t-1", "--S", "0,inf"}).code == 2);
  CHECK(invoke({"check-prox", "1+t*x", "1/t", "--S", "0,inf"}).code == 0);
  CHECK(invoke({"fan-validate", "--fan", "F2"}).code == 0);

  const Ran abc = invoke({"check-abc", "x+y+1", "t^6", "t^3", "--S", "0,inf"});
  CHECK(abc.code == 0);
  const Json a = Json::parse(abc.out);
  CHECK(a["result"]["clause_b"]["lhs"] == "4/1");
  CHECK(a["result"]["clause_b"]["rhs"] == "6/1");

  const Ran campana = invoke({"campana-verify", "--fan", "P2", "--point", "1,t,t^3", "--S", "inf", "--component", "x0:1",
                              "--component", "x1:1/2", "--component", "x0+x1+x2:2/3"});
  CHECK(campana.code == 1);
  CHECK(Json::parse(campana.out)["result"]["violations"][0]["component"] == 1);

  const Json height = Json::parse(invoke({"height", "t^2/(t-1)"}).out);
  CHECK(height["result"]["h"] == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::vector<std::string> args = {"check-bm", "--batch", "6", "--seed", "5"};
  const Ran a = invoke(args);
  const Ran b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const std::vector<std::string> gen = {"gen", "--kind", "prox", "--seed", "3", "--n", "2", "--d", "2"};
  CHECK(invoke(gen).out == invoke(gen).out);
  const std::vector<std::string> scan = {"scan-power", "x^2+y^2+z^2", "--seed", "1", "--samples", "4"};
  CHECK(invoke(scan).out == invoke(scan).out);
}
