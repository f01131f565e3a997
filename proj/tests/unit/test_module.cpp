#include "helpers.hpp"

#include "permcx/module.hpp"

#include <doctest.h>

#include <set>

using namespace permcx;

namespace {

const ElemAbGroup c22{2, 2};
const ElemAbGroup c32{3, 2};
const ElemAbGroup c23{2, 3};

// Double-coset count |G| |E n F| / (|E| |F|): the classical dimension of
// Hom(k[G/E], k[G/F]) used as an independent oracle for the solver.
long long hom_dim_oracle(const Subgroup& e, const Subgroup& f) {
    const auto rel = lattice_ops(e, f);
    return e.group().order() * rel.intersection.order() / (e.order() * f.order());
}

bool is_permutation_matrix(const Matrix& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i) {
        int row_ones = 0, col_ones = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) != 0) {
                if (m.at(i, j) != m.field()->one()) return false;
                ++row_ones;
            }
            if (m.at(j, i) != 0) ++col_ones;
        }
        if (row_ones != 1 || col_ones != 1) return false;
    }
    return true;
}

} // namespace

TEST_SUITE("module") {

TEST_CASE("trivial modules") {
    const auto f2 = Field::make(2);
    const auto m1 = make_trivial(c22, f2, 1);
    CHECK(m1.dim == 1);
    CHECK(m1.action[0].is_identity());
    validate_module(m1);

    const auto m0 = make_trivial(c22, f2, 0);
    CHECK(m0.dim == 0);
    validate_module(m0);

    const auto m3 = make_trivial(c22, f2, 3);
    CHECK(m3.dim == 3);
    CHECK(m3.action[0] == Matrix::identity(f2, 3));
    CHECK(m3.action[1] == Matrix::identity(f2, 3));
}

TEST_CASE("permutation modules") {
    const auto f2 = Field::make(2);

    const auto triv = make_permutation(Subgroup::full(c22), f2);
    CHECK(triv.dim == 1);
    CHECK(triv.tags->at(0).kind == SummandKind::trivial);

    const auto reg = make_permutation(Subgroup::trivial(c22), f2);
    CHECK(reg.dim == 4);
    CHECK(reg.tags->at(0).kind == SummandKind::free_module);
    for (const auto& a : reg.action) {
        CHECK(is_permutation_matrix(a));
        for (int i = 0; i < 4; ++i) CHECK(a.at(i, i) == 0); // fixed-point-free involution
        CHECK((a * a).is_identity());
    }

    const auto line = Subgroup::from_generators(c22, {{1, 0}});
    const auto perm = make_permutation(line, f2);
    CHECK(perm.dim == 2);
    CHECK(perm.action[0].is_identity());
    CHECK(perm.action[1] == Matrix::from_rows(f2, {{0, 1}, {1, 0}}));
    CHECK(perm.tags->at(0).kind == SummandKind::permutation);
    validate_module(perm);
}

TEST_CASE("permutation module dimensions match the index") {
    for (const auto& g : {ElemAbGroup{2, 1}, ElemAbGroup{2, 2}, ElemAbGroup{2, 3},
                          ElemAbGroup{2, 4}, ElemAbGroup{3, 1}, ElemAbGroup{3, 2},
                          ElemAbGroup{3, 3}, ElemAbGroup{5, 1}, ElemAbGroup{5, 2}}) {
        const auto f = Field::make(g.p);
        for (const auto& e : all_subgroups(g)) {
            const auto m = make_permutation(e, f);
            CHECK(m.dim == e.index());
            validate_module(m);
        }
    }
}

TEST_CASE("direct sums") {
    const auto f2 = Field::make(2);
    const auto zero = direct_sum({make_trivial(c22, f2, 0), make_trivial(c22, f2, 0)});
    CHECK(zero.dim == 0);

    const auto sum = direct_sum({make_trivial(c22, f2, 1), make_free(c22, f2, 1)});
    CHECK(sum.dim == 5);
    REQUIRE(sum.tags.has_value());
    REQUIRE(sum.tags->size() == 2);
    CHECK(sum.tags->at(0).kind == SummandKind::trivial);
    CHECK(sum.tags->at(0).begin == 0);
    CHECK(sum.tags->at(0).end == 1);
    CHECK(sum.tags->at(1).kind == SummandKind::free_module);
    CHECK(sum.tags->at(1).begin == 1);
    CHECK(sum.tags->at(1).end == 5);
    validate_module(sum);

    const auto line = Subgroup::from_generators(c22, {{1, 0}});
    const auto other = Subgroup::from_generators(c22, {{0, 1}});
    CHECK(direct_sum({make_permutation(line, f2), make_permutation(other, f2)}).dim == 4);
}

TEST_CASE("hom spaces against the double-coset oracle") {
    for (const auto& g : {c22, c32, c23}) {
        const auto f = Field::make(g.p);
        const auto subs = all_subgroups(g);
        for (const auto& e : subs)
            for (const auto& fsub : subs) {
                const auto basis =
                    hom_space(make_permutation(e, f), make_permutation(fsub, f));
                CHECK(static_cast<long long>(basis.size()) == hom_dim_oracle(e, fsub));
            }
    }
}

TEST_CASE("hom space special cases") {
    const auto f2 = Field::make(2);
    const auto k = make_trivial(c22, f2, 1);
    const auto kg = make_free(c22, f2, 1);

    CHECK(hom_space(k, kg).size() == 1); // image is the socle
    CHECK(hom_space(k, kg)[0].transpose() == fixed_points(kg));

    for (const auto& m : {k, kg, make_permutation(Subgroup::from_generators(c22, {{1, 0}}), f2)})
        CHECK(static_cast<int>(hom_space(kg, m).size()) == m.dim); // free adjunction

    // every hom basis element is equivariant
    for (const auto& h : hom_space(kg, kg))
        validate_map({kg, kg, h});
}

TEST_CASE("fixed points") {
    const auto f2 = Field::make(2);
    CHECK(fixed_points(make_trivial(c22, f2, 3)) == Matrix::identity(f2, 3));

    const auto kg = make_free(c22, f2, 1);
    const auto fix = fixed_points(kg);
    CHECK(fix == Matrix::from_rows(f2, {{1, 1, 1, 1}})); // the socle

    const auto line = Subgroup::from_generators(c22, {{1, 0}});
    CHECK(fixed_points(make_permutation(line, f2)).rows() == 1);
}

TEST_CASE("radical") {
    const auto f2 = Field::make(2);
    CHECK(radical(make_trivial(c22, f2, 3)).rows() == 0);
    CHECK(radical(make_free(c22, f2, 1)).rows() == 3);
    CHECK(radical(make_free(c22, f2, 2)).rows() == 6);
}

TEST_CASE("fixed points of free modules sit inside the radical") {
    for (const auto& g : {c22, c32, c23}) {
        const auto f = Field::make(g.p);
        for (int mult : {1, 2}) {
            const auto fm = make_free(g, f, mult);
            CHECK(in_row_space(radical(fm), fixed_points(fm)));
        }
    }
}

TEST_CASE("restriction") {
    const auto f2 = Field::make(2);
    const auto kg = make_free(c22, f2, 1);

    const auto same = restrict_to(kg, Subgroup::full(c22));
    CHECK(same.group.r == 2);
    CHECK(same.action[0] == kg.action[0]);
    CHECK(same.action[1] == kg.action[1]);

    const auto line = Subgroup::from_generators(c22, {{1, 0}});
    const auto res = restrict_to(kg, line);
    CHECK(res.group.r == 1);
    CHECK(is_permutation_matrix(res.action[0]));
    CHECK((res.action[0] * res.action[0]).is_identity());
    int fixed = 0;
    for (int i = 0; i < 4; ++i)
        if (res.action[0].at(i, i) != 0) ++fixed;
    CHECK(fixed == 0); // free kC_2-module of rank 2: two disjoint transpositions

    const auto triv_res = restrict_to(make_trivial(c22, f2, 2), line);
    CHECK(triv_res.action[0].is_identity());
    REQUIRE(triv_res.tags.has_value());
    CHECK(triv_res.tags->at(0).kind == SummandKind::trivial);
    validate_module(triv_res);
}

TEST_CASE("induction of the trivial module is the permutation module") {
    for (const auto& g : {c23, c32}) {
        const auto f = Field::make(g.p);
        for (const auto& h : all_subgroups(g)) {
            const auto m = make_trivial(ElemAbGroup{g.p, h.rank()}, f, 1);
            const auto ind = induce(m, h.basis());
            const auto perm = make_permutation(h, f);
            CHECK(same_module(ind, perm));
            REQUIRE(ind.tags.has_value());
            CHECK(*ind.tags == *perm.tags);
        }
    }
}

TEST_CASE("induction of a free module is free") {
    const auto f2 = Field::make(2);
    const auto line = Subgroup::from_generators(c22, {{1, 0}});
    const auto kh = make_free(ElemAbGroup{2, 1}, f2, 1);
    const auto ind = induce(kh, line.basis());
    CHECK(ind.dim == 4);
    validate_module(ind);
    // regular action: free and transitive on the basis
    std::set<int> orbit;
    for (const auto& v : all_vectors(c22)) {
        const Matrix sigma = element_action(ind, v);
        CHECK(is_permutation_matrix(sigma));
        int image = -1;
        for (int i = 0; i < 4; ++i)
            if (sigma.at(i, 0) != 0) image = i;
        orbit.insert(image);
        if (vec_code(c22, v) != 0)
            for (int i = 0; i < 4; ++i) CHECK(sigma.at(i, i) == 0);
    }
    CHECK(orbit.size() == 4);
}

TEST_CASE("induction along the full group is the identity functor") {
    const auto f3 = Field::make(3);
    const auto m = make_permutation(Subgroup::from_generators(c32, {{1, 2}}), f3);
    const auto ind = induce(m, Subgroup::full(c32).basis());
    CHECK(same_module(ind, m));
}

TEST_CASE("inflation") {
    const auto f2 = Field::make(2);
    const ElemAbGroup cp{2, 1};

    const auto infl_triv = inflate(make_trivial(cp, f2, 2),
                                   Matrix::from_rows(Field::make(2), {{1}, {0}}));
    CHECK(infl_triv.dim == 2);
    CHECK(infl_triv.action[0].is_identity());
    REQUIRE(infl_triv.tags.has_value());
    validate_module(infl_triv);

    // kC_p pulled back along (a,b) -> a equals the permutation module on ker
    const auto reg = make_free(cp, f2, 1);
    const auto infl = inflate(reg, Matrix::from_rows(Field::make(2), {{1}, {0}}));
    const auto perm = make_permutation(Subgroup::from_generators(c22, {{0, 1}}), f2);
    CHECK(same_module(infl, perm));

    const auto infl_id = inflate(reg, Matrix::from_rows(Field::make(2), {{1}}));
    CHECK(same_module(infl_id, reg));

    CHECK_THROWS_AS(inflate(reg, Matrix::from_rows(Field::make(2), {{0}, {0}})), Error);
}

TEST_CASE("restriction after inflation recovers the section") {
    const auto f2 = Field::make(2);
    // quotient C_2^3 ->> C_2^2 dropping the last coordinate; section e1, e2
    const Matrix quot = Matrix::from_rows(Field::make(2), {{1, 0}, {0, 1}, {0, 0}});
    const auto m = make_permutation(Subgroup::from_generators(c22, {{1, 1}}), f2);
    const auto infl = inflate(m, quot);
    const auto section = Subgroup::from_generators(c23, {{1, 0, 0}, {0, 1, 0}});
    const auto back = restrict_to(infl, section);
    CHECK(back.action[0] == m.action[0]);
    CHECK(back.action[1] == m.action[1]);
}

TEST_CASE("validation catches broken modules") {
    const auto f2 = Field::make(2);
    GModule bad{c22, f2, 2, {Matrix::from_rows(f2, {{0, 1}, {1, 0}}),
                             Matrix::from_rows(f2, {{1, 1}, {0, 1}})},
                std::nullopt};
    CHECK_THROWS_WITH_AS(validate_module(bad),
                         doctest::Contains("do not commute"), Error);

    GModule not_unipotent{c32, Field::make(3), 1,
                          {Matrix::from_rows(Field::make(3), {{2}}),
                           Matrix::identity(Field::make(3), 1)},
                          std::nullopt};
    CHECK_THROWS_WITH_AS(validate_module(not_unipotent),
                         doctest::Contains("unipotent"), Error);

    // tag claims trivial where the action swaps coordinates
    GModule lying = make_permutation(Subgroup::from_generators(c22, {{1, 0}}), f2);
    lying.tags = std::vector<SummandTag>{{SummandKind::trivial, std::nullopt, 2, 0, 2}};
    CHECK_THROWS_AS(validate_module(lying), Error);

    // ranges that do not partition
    GModule gapped = make_trivial(c22, f2, 2);
    gapped.tags = std::vector<SummandTag>{{SummandKind::trivial, std::nullopt, 1, 0, 1}};
    CHECK_THROWS_AS(validate_module(gapped), Error);
}

TEST_CASE("equivariant map validation") {
    const auto f2 = Field::make(2);
    const auto k = make_trivial(c22, f2, 1);
    const auto kg = make_free(c22, f2, 1);
    Matrix norm(f2, 4, 1);
    for (int i = 0; i < 4; ++i) norm.set(i, 0, f2->one());
    validate_map({k, kg, norm});

    Matrix bad(f2, 4, 1);
    bad.set(0, 0, f2->one());
    CHECK_THROWS_WITH_AS(validate_map({k, kg, bad}), doctest::Contains("equivariant"), Error);
}

} // TEST_SUITE
