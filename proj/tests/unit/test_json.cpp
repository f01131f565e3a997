#include "helpers.hpp"

#include "permcx/json_io.hpp"

#include <doctest.h>

using namespace permcx;
using permcx::testing::random_matrix;

namespace {

const ElemAbGroup c22{2, 2};

} // namespace

TEST_SUITE("json") {

TEST_CASE("field round trip") {
    for (const auto& f : {Field::make(2), Field::make(3, 2), Field::make(2, 3)}) {
        const auto back = field_from_json(field_to_json(*f));
        CHECK(back->same(*f));
    }
    CHECK_THROWS_WITH_AS(field_from_json(parse_json_text("{\"e\": 2}", "inline")),
                         doctest::Contains("'p'"), Error);
}

TEST_CASE("matrix round trip, prime and extension fields") {
    Rng rng(5);
    for (const auto& f : {Field::make(3), Field::make(2, 2)}) {
        const Matrix m = random_matrix(f, 3, 4, rng);
        const auto j = matrix_to_json(m);
        CHECK(matrix_from_json(j, f) == m);
        // prime-field emission uses bare integers
        if (f->e() == 1) CHECK(j.at("entries").at(0).at(0).is_number_integer());
        else CHECK(j.at("entries").at(0).at(0).is_array());
    }
    CHECK_THROWS_WITH_AS(
        matrix_from_json(parse_json_text("{\"rows\":1,\"cols\":2,\"entries\":[[1]]}", "inline"),
                         Field::make(2)),
        doctest::Contains("row 0"), Error);
}

TEST_CASE("subgroup and collection round trip") {
    const auto line = Subgroup::from_generators(c22, {{1, 1}});
    CHECK(subgroup_from_json(subgroup_to_json(line)) == line);
    const auto all = all_subgroups(c22);
    const auto back = collection_from_json(collection_to_json(all));
    REQUIRE(back.size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(back[i] == all[i]);
}

TEST_CASE("module round trip keeps tags and actions") {
    const auto f2 = Field::make(2);
    const auto sum = direct_sum({make_trivial(c22, f2, 2), make_free(c22, f2, 1),
                                 make_permutation(Subgroup::from_generators(c22, {{1, 0}}), f2)});
    const auto back = module_from_json(module_to_json(sum));
    CHECK(same_module(back, sum));
    REQUIRE(back.tags.has_value());
    CHECK(*back.tags == *sum.tags);

    GModule untagged = sum;
    untagged.tags = std::nullopt;
    CHECK_FALSE(module_from_json(module_to_json(untagged)).tags.has_value());

    // tags are re-validated on input
    auto j = module_to_json(sum);
    j["tags"][0]["kind"] = "free";
    CHECK_THROWS_AS(module_from_json(j), Error);
}

TEST_CASE("complex and report round trip") {
    const auto f2 = Field::make(2);
    const SubgroupCollection h = {Subgroup::trivial(c22), Subgroup::full(c22)};
    const auto c = random_contractible_complex(h, f2, 2, {1, 1}, 77);
    const auto j = complex_to_json(c);
    const auto back = complex_from_json(j);
    REQUIRE(back.terms.size() == c.terms.size());
    for (std::size_t i = 0; i < c.terms.size(); ++i) CHECK(same_module(back.terms[i], c.terms[i]));
    CHECK(back.diffs == c.diffs);
    CHECK(dump_json(complex_to_json(back)) == dump_json(j));

    const auto rep = check_collection_criterion(h, c);
    const auto rj = criterion_report_to_json(rep);
    CHECK(rj.at("verdict") == "CONSISTENT-WITH-THEOREM");
    CHECK(rj.at("membership") == "certified");
    CHECK(rj.contains("certificate"));

    // invalid complexes are rejected with the violated invariant named
    auto broken = j;
    const int old = broken["differentials"][0]["entries"][0][0].get<int>();
    broken["differentials"][0]["entries"][0][0] = 1 - old;
    CHECK_THROWS_WITH_AS(complex_from_json(broken), doctest::Contains("complex invalid"), Error);
}

TEST_CASE("equivariant map round trip") {
    const auto f2 = Field::make(2);
    const auto k = make_trivial(c22, f2, 1);
    const auto kg = make_free(c22, f2, 1);
    Matrix norm(f2, 4, 1);
    for (int i = 0; i < 4; ++i) norm.set(i, 0, f2->one());
    const EquivariantMap em{k, kg, norm};
    const auto back = map_from_json(map_to_json(em));
    CHECK(back.matrix == norm);
    CHECK(same_module(back.source, k));
}

TEST_CASE("polynomial classes and products round trip") {
    const auto f4 = Field::make(2, 2);
    const ElemAbGroup c23{2, 3};
    const auto x1 = PolyClass::variable(c23, f4, 0);
    const auto x3 = PolyClass::variable(c23, f4, 2);
    const auto cls = (x1 + x3) * (x1 + x3.scaled(f4->from_coeffs({0, 1})));
    const auto back = polyclass_from_json(polyclass_to_json(cls));
    CHECK(back == cls);

    const LinearFormProduct prod{c23, f4, {{1, 0, 1}, {0, 1, f4->from_coeffs({0, 1})}}};
    const auto pback = linear_form_product_from_json(linear_form_product_to_json(prod));
    CHECK(pback.factors == prod.factors);
    CHECK(pback.expand() == prod.expand());
}

TEST_CASE("parse errors carry the origin") {
    CHECK_THROWS_WITH_AS(parse_json_text("{", "bad.json"), doctest::Contains("bad.json"), Error);
    CHECK_THROWS_WITH_AS(parse_json_file("/nonexistent/x.json"),
                         doctest::Contains("cannot open"), Error);
}

TEST_CASE("dumps are deterministic") {
    const auto f2 = Field::make(2);
    const auto j = module_to_json(make_free(c22, f2, 2));
    CHECK(dump_json(j) == dump_json(module_to_json(make_free(c22, f2, 2))));
    CHECK(dump_json(j).back() == '\n');
}

} // TEST_SUITE
