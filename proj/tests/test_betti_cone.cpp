// Betti tables, the certificates derived from them, catalogs and cone
// membership. Decomposition coefficients are never frozen: the LP may pick
// any valid combination, so tests check the substitution identity instead.

#include <doctest.h>

#include <sstream>

#include "syz/cone.hpp"

using namespace syz;

namespace {

GfpField FP;

template <class F>
Poly<F> parse_over(const F& f, const std::string& s,
                   const std::vector<std::string>& vars) {
  return poly_from_ast(f, parse_poly(s, vars));
}

RingPtr<GfpField> quotient(const std::vector<std::string>& vars,
                           const std::vector<std::string>& rels, int top) {
  std::vector<Poly<GfpField>> ps;
  for (auto& s : rels) ps.push_back(parse_over(FP, s, vars));
  return make_quotient_ring<GfpField>(FP, vars, ps, top);
}

BettiTable resolve_table(const GradedModule<GfpField>& m, int imax, int dmax = -1) {
  ResolveOptions opt;
  opt.imax = imax;
  opt.dmax = dmax;
  return betti_table(resolve(m, opt));
}

}  // namespace

TEST_SUITE("betti_cone") {
  TEST_CASE("window exactness rules") {
    auto r = quotient({"X", "Y"}, {"X*Y"}, 8);
    auto b = resolve_table(residue_field_module(r), 6);
    CHECK(b.exact(3, 8));
    CHECK(!b.exact(3, 9));
    CHECK(b.value(3, 3) == 3 - 1);  // beta_{3,3} = 2
    CHECK(b.value(3, 5) == 0);
    CHECK_THROWS(b.value(0, 9));

    // termination extends exactness past dmax
    auto f = resolve_table(ring_as_module(r), 4);
    CHECK(f.terminated_at == 1);
    CHECK(f.exact(2, 100));
    CHECK(f.value(2, 100) == 0);
  }

  TEST_CASE("add and scale with window bookkeeping") {
    auto r = quotient({"X", "Y"}, {"X*Y"}, 8);
    auto bk = resolve_table(residue_field_module(r), 6);
    auto br = resolve_table(ring_as_module(r), 6);
    auto sum = table_add_scale({bk, br}, {make_rational(1, 2), make_rational(3, 1)});
    CHECK(sum.value(0, 0) == make_rational(7, 2));
    CHECK(sum.value(1, 1) == 1);
    CHECK(!sum.terminated());  // bk is not terminated

    // direct sums of modules add tables exactly
    auto m = direct_sum(residue_field_module(r), twist(ring_as_module(r), -2));
    auto bm = resolve_table(m, 6);
    auto shifted = shift_table(br, 2);
    auto expect = table_add_scale({bk, shifted}, {Rational(1), Rational(1)});
    CHECK(equal_on_window(bm, expect));
  }

  TEST_CASE("regularity: exact values and honest lower bounds") {
    auto koszul = quotient({"X", "Y"}, {"X*Y"}, 10);
    auto rk = regularity_window(resolve_table(residue_field_module(koszul), 6, 10));
    CHECK(rk.value == 0);
    CHECK(!rk.lower_bound_only);
    CHECK(rk.str() == "0");

    // free module R(-3): exact because the table terminates
    auto rf = regularity_window(resolve_table(twist(ring_as_module(koszul), -3), 4, 10));
    CHECK(rf.value == 3);
    CHECK(!rf.lower_bound_only);

    // k over k[X]/(X^3): the top row keeps growing with the window
    auto x3 = quotient({"X"}, {"X^3"}, 9);
    auto ra = regularity_window(resolve_table(residue_field_module(x3), 4, 6));
    CHECK(ra.lower_bound_only);
    CHECK(ra.str() == ">= 2");
    auto rb = regularity_window(resolve_table(residue_field_module(x3), 6, 9));
    CHECK(rb.lower_bound_only);
    CHECK(rb.value > ra.value);
  }

  TEST_CASE("purity: types, witnesses and certified infinity") {
    auto r = quotient({"X", "Y"}, {"X^2", "Y^2"}, 8);
    auto p = purity_check(resolve_table(residue_field_module(r), 5));
    CHECK(p.pure);
    REQUIRE(p.delta.size() == 6);
    for (int i = 0; i <= 5; ++i) CHECK(p.delta[(size_t)i] == i);
    CHECK(!p.finite_pdim);
    CHECK(p.str() == "pure of type (0, 1, 2, 3, 4, 5, ...)");

    // R/(l^2) over k[X,Y]/(XY) has a finite pure resolution: infinity tail
    auto rxy = quotient({"X", "Y"}, {"X*Y"}, 8);
    auto m = cyclic_quotient(rxy, {parse_over(FP, "X^2 + Y^2", {"X", "Y"})});
    auto q = purity_check(resolve_table(m.mod, 4));
    CHECK(q.pure);
    CHECK(q.finite_pdim);
    REQUIRE(q.delta.size() == 5);
    CHECK(q.delta[0] == 0);
    CHECK(q.delta[1] == 2);
    CHECK(!q.delta[2].has_value());
    CHECK(q.str() == "pure of type (0, 2, inf, inf, inf)");

    // non-pure witness: R/(<x> + m^3) over k[X,Y]/(XY)
    auto mm = cyclic_quotient(rxy, {parse_over(FP, "X", {"X", "Y"}),
                                    parse_over(FP, "Y^3", {"X", "Y"})});
    auto np = purity_check(resolve_table(mm.mod, 4));
    CHECK(!np.pure);
    CHECK(np.witness_i == 1);
    CHECK(np.witness_j1 == 1);
    CHECK(np.witness_j2 == 3);
  }

  TEST_CASE("linearity and Koszul stage checks") {
    auto rxy = quotient({"X", "Y"}, {"X*Y"}, 10);
    auto b = resolve_table(residue_field_module(rxy), 8, 10);
    CHECK(linear_up_to_stage(b, 8));

    auto x3 = quotient({"X"}, {"X^3"}, 10);
    auto bx = resolve_table(residue_field_module(x3), 6, 10);
    CHECK(linear_up_to_stage(bx, 1));
    CHECK(!linear_up_to_stage(bx, 2));  // beta_{2,3} != 0

    auto rep = koszul_stage_check(x3, 8);
    CHECK(rep.first_failure == 2);
    CHECK(rep.witness_j == 3);
    auto rep2 = koszul_stage_check(rxy, 8);
    CHECK(rep2.linear_through_window());
  }

  TEST_CASE("rendering: blanks for exact zeros, markers past the window") {
    auto x3 = quotient({"X"}, {"X^3"}, 6);
    auto b = resolve_table(residue_field_module(x3), 4, 6);
    std::string s = render_betti(b);
    // rows j - i = 0 (diagonal 1s) and 1 (the cubic relation's stair)
    CHECK(s.find("j\\i") != std::string::npos);
    CHECK(s.find("·?") != std::string::npos);
    CHECK(s.find("0") != std::string::npos);
    // exact-zero cells are blank: the free module's only printed value is
    // the single 1, with nothing in columns 1..3
    auto rxy = quotient({"X", "Y"}, {"X*Y"}, 8);
    auto bt = resolve_table(ring_as_module(rxy), 3, 8);
    std::string st = render_betti(bt);
    std::istringstream lines(st);
    std::string header, row0;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::istringstream toks(row0);
    std::vector<std::string> got;
    std::string tok;
    while (toks >> tok) got.push_back(tok);
    CHECK(got == std::vector<std::string>{"0", "1"});
  }

  TEST_CASE("json export round-trips") {
    auto r = quotient({"X", "Y"}, {"X^2", "Y^2"}, 8);
    auto b = resolve_table(residue_field_module(r), 5);
    auto b2 = betti_from_json(betti_to_json(b));
    CHECK(b2.imax == b.imax);
    CHECK(b2.dmax == b.dmax);
    CHECK(b2.terminated_at == b.terminated_at);
    CHECK(equal_on_window(b, b2));

    auto scaled = table_add_scale({b}, {make_rational(2, 3)});
    auto s2 = betti_from_json(betti_to_json(scaled));
    CHECK(equal_on_window(scaled, s2));
  }

  TEST_CASE("catalog: shape guard, families, dedup") {
    auto rxy = quotient({"X", "Y"}, {"X*Y"}, 10);
    auto cat = pure_generator_catalog(rxy, 8, 10, 7);
    CHECK(cat.hilbert_shape == "(1 + z) / (1 - z)");
    CHECK(!cat.regular_form.empty());
    bool has_k = false, has_power = false, has_shift = false;
    for (auto& e : cat.entries) {
      if (e.descriptor == "k") has_k = true;
      if (e.descriptor.rfind("R/m^", 0) == 0) has_power = true;
      if (e.descriptor.find("(-") != std::string::npos) has_shift = true;
    }
    CHECK(has_k);
    CHECK(has_power);
    CHECK(has_shift);
    // all tables distinct on the window
    for (size_t a = 0; a < cat.entries.size(); ++a)
      for (size_t c = a + 1; c < cat.entries.size(); ++c)
        CHECK(!equal_on_window(cat.entries[a].table, cat.entries[c].table));

    // Artinian case: only shifts of R and k
    auto art = quotient({"X", "Y"}, {"X^2", "X*Y", "Y^2"}, 8);
    auto cat0 = pure_generator_catalog(art, 6, 8, 7);
    for (auto& e : cat0.entries)
      CHECK((e.descriptor[0] == 'R' || e.descriptor[0] == 'k'));
    for (auto& e : cat0.entries) CHECK(e.descriptor.find("m^") == std::string::npos);

    // rejected shape: complete intersection of quadrics has H = (1+z)^2/(1-z)^0
    auto ci = quotient({"X", "Y"}, {"X^2", "Y^2"}, 8);
    CHECK_THROWS(pure_generator_catalog(ci, 6, 8, 7));
  }

  TEST_CASE("cone decomposition: members verified by substitution") {
    auto rxy = quotient({"X", "Y"}, {"X*Y"}, 10);
    auto cat = pure_generator_catalog(rxy, 8, 10, 7);

    // generator self-membership
    auto bm2 = resolve_table(power_quotient_module(rxy, 2), 8, 10);
    auto d0 = cone_decompose(bm2, cat);
    CHECK(d0.member);

    // R/(x): Example 3.9(b) table, guaranteed in the cone for this ring
    auto rx = cyclic_quotient(rxy, {parse_over(FP, "X", {"X", "Y"})});
    auto bx = resolve_table(rx.mod, 8, 10);
    auto d1 = cone_decompose(bx, cat);
    CHECK(d1.member);
    CHECK(!d1.parts.empty());

    // R/m^3
    auto bm3 = resolve_table(power_quotient_module(rxy, 3), 8, 10);
    auto d2 = cone_decompose(bm3, cat);
    CHECK(d2.member);

    // constructed combination recovers membership
    auto bk = resolve_table(residue_field_module(rxy), 8, 10);
    auto br = resolve_table(ring_as_module(rxy), 8, 10);
    auto combo = table_add_scale({bk, br, shift_table(br, 1)},
                                 {make_rational(3, 2), Rational(2), Rational(3)});
    auto d3 = cone_decompose(combo, cat);
    CHECK(d3.member);
  }

  TEST_CASE("cone decomposition: infeasibility is certified") {
    auto rxy = quotient({"X", "Y"}, {"X*Y"}, 10);
    auto cat = pure_generator_catalog(rxy, 8, 10, 7);
    // a fake table violating beta_0 accounting: negative-direction tilt that
    // no nonnegative combination can hit
    auto bk = resolve_table(residue_field_module(rxy), 8, 10);
    BettiTable bad = bk;
    bad.cols[2].clear();  // kill column 2 but keep the rest of the diagonal
    auto d = cone_decompose(bad, cat);
    CHECK(!d.member);
    CHECK(!d.farkas.empty());
  }

  TEST_CASE("delta condition: pass and violation") {
    PureType lin;
    lin.pure = true;
    for (int i = 0; i <= 5; ++i) lin.delta.push_back((long long)i);
    CHECK(purity_delta_condition(lin).pass);

    PureType gap;
    gap.pure = true;
    gap.delta = {0ll, 2ll, 4ll, 6ll};
    auto v = purity_delta_condition(gap);
    CHECK(!v.pass);
    CHECK(v.violation_i == 3);

    PureType inf_tail;
    inf_tail.pure = true;
    inf_tail.delta = {0ll, 2ll, std::nullopt, std::nullopt};
    CHECK(purity_delta_condition(inf_tail).pass);

    // codim-3 complete intersection of quadrics over k[Z1,Z2,Z3]: the second
    // syzygy is not linear, so the delta condition must fail
    auto r2 = make_polynomial_ring<GfpField>(FP, {"Z1", "Z2", "Z3"}, 9);
    auto vars = std::vector<std::string>{"Z1", "Z2", "Z3"};
    auto m = cyclic_quotient(r2, {parse_over(FP, "Z1^2", vars),
                                  parse_over(FP, "Z2^2", vars),
                                  parse_over(FP, "Z3^2", vars)});
    auto p = purity_check(resolve_table(m.mod, 4, 9));
    REQUIRE(p.pure);
    auto verdict = purity_delta_condition(p);
    CHECK(!verdict.pass);
    CHECK(verdict.violation_i == 3);
  }

  TEST_CASE("catalog over a fibre product obeys the linear-tail law") {
    auto rx = quotient({"X"}, {"X^2"}, 8);
    auto ry = quotient({"Y"}, {"Y^2"}, 8);
    auto r = fibre_product(rx, ry);
    // H = 1 + 2z: Artinian catalog; the law is asserted inside construction
    auto cat = pure_generator_catalog(r, 6, 8, 7);
    CHECK(!cat.entries.empty());
  }
}
