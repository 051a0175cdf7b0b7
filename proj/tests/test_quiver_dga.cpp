#include <catch2/catch_amalgamated.hpp>
#include "cedga/quiver_dga.hpp"

using namespace cedga;

namespace {

// Triangle algebra on three vertices: arrows t12: p1->p2, t23: p2->p3 with
// zero differential and t13: p1->p3 killing the length-two path.
QuiverDga triangle() {
  QuiverDga A;
  A.vertices = {"p1", "p2", "p3"};
  A.add_generator({"t12", "p1", "p2", 1, Weight(1)});
  A.add_generator({"t23", "p2", "p3", 1, Weight(1)});
  A.add_generator({"t13", "p1", "p3", 1, Weight(2)});
  A.differential["t12"] = {};
  A.differential["t23"] = {};
  A.differential["t13"] = {*compose(Word{{"t23"}, "p2", "p3"}, Word{{"t12"}, "p1", "p2"})};
  return A;
}

}  // namespace

TEST_CASE("word composition") {
  Word t12{{"t12"}, "p1", "p2"};
  Word t23{{"t23"}, "p2", "p3"};
  auto w = compose(t23, t12);
  REQUIRE(w.has_value());
  CHECK(w->letters == std::vector<std::string>{"t23", "t12"});
  CHECK(w->src == "p1");
  CHECK(w->tgt == "p3");
  CHECK_FALSE(compose(t12, t23).has_value());
  // Idempotents are two-sided units for composition.
  auto l = compose(idempotent("p3"), *w);
  auto r = compose(*w, idempotent("p1"));
  REQUIRE(l.has_value());
  REQUIRE(r.has_value());
  CHECK(*l == *w);
  CHECK(*r == *w);
}

TEST_CASE("make_word validates composability") {
  auto A = triangle();
  auto good = make_word(A, {"t23", "t12"});
  REQUIRE(good.ok());
  CHECK(good->src == "p1");
  CHECK(good->tgt == "p3");
  auto bad = make_word(A, {"t12", "t23"});
  CHECK_FALSE(bad.ok());
  CHECK(bad.error.find("do not compose") != std::string::npos);
  auto unknown = make_word(A, {"zz"});
  CHECK_FALSE(unknown.ok());
  auto idw = make_word(A, {}, "p2");
  REQUIRE(idw.ok());
  CHECK(idw->is_idempotent());
}

TEST_CASE("formal sums cancel mod 2") {
  FormalSum s;
  Word w{{"t12"}, "p1", "p2"};
  add_term(s, w);
  add_term(s, w);
  CHECK(s.empty());
  add_term(s, w);
  CHECK(s.size() == 1);
}

TEST_CASE("triangle algebra validates and has square-zero differential") {
  auto A = triangle();
  auto v = validate_dga(A);
  INFO(v.error);
  CHECK(v.ok());
  auto d2 = check_d_squared(A);
  INFO(d2.error);
  CHECK(d2.ok());
}

TEST_CASE("leibniz rule splices at every letter") {
  auto A = triangle();
  // d(t13 . x) with an extra arrow x: p0 -> p1, d x = 0.
  A.vertices.push_back("p0");
  A.add_generator({"x", "p0", "p1", 0, Weight(1)});
  A.differential["x"] = {};
  Word w = *make_word(A, {"t13", "x"}).value;
  auto dw = differential_of_word(A, w);
  CHECK(dw.untracked.empty());
  REQUIRE(dw.sum.size() == 1);
  CHECK(dw.sum.begin()->letters == std::vector<std::string>{"t23", "t12", "x"});
  CHECK(dw.sum.begin()->src == "p0");
  CHECK(dw.sum.begin()->tgt == "p3");
}

TEST_CASE("d^2 violations are reported with a witness") {
  QuiverDga A;
  A.vertices = {"v"};
  A.add_generator({"a", "v", "v", 0, Weight(3)});
  A.add_generator({"b", "v", "v", 1, Weight(2)});
  A.add_generator({"c", "v", "v", 2, Weight(1)});
  A.differential["a"] = {Word{{"b"}, "v", "v"}};
  A.differential["b"] = {Word{{"c"}, "v", "v"}};
  A.differential["c"] = {};
  auto d2 = check_d_squared(A);
  REQUIRE_FALSE(d2.ok());
  CHECK(d2.error.find("'a'") != std::string::npos);
  CHECK(d2.error.find("c") != std::string::npos);
}

TEST_CASE("untracked letters block the d^2 check loudly") {
  QuiverDga A;
  A.vertices = {"v"};
  A.add_generator({"a", "v", "v", 0, Weight(2)});
  A.add_generator({"b", "v", "v", 1, Weight(1)});
  A.differential["a"] = {Word{{"b"}, "v", "v"}};
  // no differential stored for b
  auto d2 = check_d_squared(A);
  REQUIRE_FALSE(d2.ok());
  CHECK(d2.error.find("blocked") != std::string::npos);
  CHECK(d2.error.find("'b'") != std::string::npos);
}

TEST_CASE("weight filtration parts split the differential") {
  QuiverDga A;
  A.vertices = {"v"};
  A.add_generator({"a", "v", "v", -1, Weight(2)});
  A.add_generator({"b", "v", "v", 0, Weight(2)});
  A.add_generator({"c", "v", "v", 0, Weight(1)});
  A.differential["a"] = {Word{{"b"}, "v", "v"}, Word{{"c"}, "v", "v"}};
  A.differential["b"] = {};
  A.differential["c"] = {};
  auto keep = weight_preserving_part(A, "a");
  auto drop = weight_lowering_part(A, "a");
  REQUIRE(keep.size() == 1);
  CHECK(keep.begin()->letters == std::vector<std::string>{"b"});
  REQUIRE(drop.size() == 1);
  CHECK(drop.begin()->letters == std::vector<std::string>{"c"});
}

TEST_CASE("remove_exact_generator deletes the loop vertex cleanly") {
  QuiverDga A;
  A.vertices = {"u", "v"};
  A.add_generator({"a", "v", "v", -1, Weight(1)});
  A.add_generator({"g", "u", "u", 0, Weight(1)});
  A.add_generator({"h", "u", "v", 0, Weight(1)});
  A.differential["a"] = {idempotent("v")};
  A.differential["g"] = {};
  A.differential["h"] = {};
  auto B = remove_exact_generator(A, "a", "v");
  REQUIRE(B.ok());
  CHECK(B->vertices == std::vector<std::string>{"u"});
  REQUIRE(B->generators.size() == 1);
  CHECK(B->generators[0].id == "g");
  CHECK(validate_dga(*B.value).ok());
}

TEST_CASE("remove_exact_generator rejects inexact differentials") {
  QuiverDga A;
  A.vertices = {"v"};
  A.add_generator({"a", "v", "v", -1, Weight(2)});
  A.add_generator({"c", "v", "v", 0, Weight(2)});
  A.differential["a"] = {idempotent("v"), Word{{"c"}, "v", "v"}};
  A.differential["c"] = {};
  auto B = remove_exact_generator(A, "a", "v");
  REQUIRE_FALSE(B.ok());
  CHECK(B.error.find("expected exactly") != std::string::npos);
}

TEST_CASE("remove_exact_generator rejects when the loop appears elsewhere") {
  QuiverDga A;
  A.vertices = {"v"};
  A.add_generator({"a", "v", "v", -1, Weight(1)});
  A.add_generator({"z", "v", "v", -2, Weight(2)});
  A.differential["a"] = {idempotent("v")};
  A.differential["z"] = {Word{{"a"}, "v", "v"}};
  auto B = remove_exact_generator(A, "a", "v");
  REQUIRE_FALSE(B.ok());
  CHECK(B.error.find("'z'") != std::string::npos);
}

TEST_CASE("direct product renames collisions and stays valid") {
  auto A = triangle();
  auto C = direct_product(A, A);
  CHECK(C.vertices.size() == 6);
  CHECK(C.generators.size() == 6);
  CHECK(C.has_vertex("p1'"));
  CHECK(C.find("t13'") != nullptr);
  INFO(validate_dga(C).error);
  CHECK(validate_dga(C).ok());
  CHECK(check_d_squared(C).ok());
  // The renamed copy's differential uses renamed letters.
  auto& d = C.differential.at("t13'");
  REQUIRE(d.size() == 1);
  CHECK(d.begin()->letters == std::vector<std::string>{"t23'", "t12'"});
}

TEST_CASE("hh0 of a two-cycle quiver has one class in each even length") {
  QuiverDga A;
  A.vertices = {"v1", "v2"};
  A.add_generator({"x", "v1", "v2", 0, Weight(1)});
  A.add_generator({"y", "v2", "v1", 0, Weight(1)});
  A.differential["x"] = {};
  A.differential["y"] = {};
  auto dims = hh0_truncated(A, 6);
  REQUIRE(dims.ok());
  CHECK(dims->at(0) == 2);
  CHECK(dims->at(1) == 0);
  CHECK(dims->at(2) == 1);
  CHECK(dims->at(3) == 0);
  CHECK(dims->at(4) == 1);
  CHECK(dims->at(5) == 0);
  CHECK(dims->at(6) == 1);
}

TEST_CASE("hh0 of an acyclic path quiver vanishes in positive lengths") {
  QuiverDga A;
  A.vertices = {"v1", "v2", "v3"};
  A.add_generator({"x", "v1", "v2", 0, Weight(1)});
  A.add_generator({"y", "v2", "v3", 0, Weight(1)});
  A.differential["x"] = {};
  A.differential["y"] = {};
  auto dims = hh0_truncated(A, 5);
  REQUIRE(dims.ok());
  CHECK(dims->at(0) == 3);
  for (int l = 1; l <= 5; ++l) CHECK(dims->at(l) == 0);
}

TEST_CASE("hh0 requires a zero differential") {
  auto A = triangle();
  auto dims = hh0_truncated(A, 3);
  REQUIRE_FALSE(dims.ok());
  CHECK(dims.error.find("nonzero") != std::string::npos);
}
