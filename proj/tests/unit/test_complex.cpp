#include "helpers.hpp"

#include "permcx/complex.hpp"
#include "permcx/counterexample.hpp"
#include "permcx/json_io.hpp"

#include <doctest.h>

#include <array>
#include <thread>

using namespace permcx;

namespace {

const ElemAbGroup c22{2, 2};
const ElemAbGroup c2{2, 1};

// identity complex 0 -> M -> M -> 0
BoundedComplex identity_complex(const GModule& m) {
    BoundedComplex c;
    c.terms = {m, m};
    c.diffs = {Matrix::identity(m.field, m.dim)};
    return c;
}

// Independent oracle: enumerate every tuple of linear maps h^i over F_q and
// test the homotopy conditions directly. Exponential; tiny complexes only.
bool brute_force_contractible(const BoundedComplex& c) {
    const int l = c.length();
    if (l < 0) return true;
    const FieldPtr f = c.terms[0].field;
    long long entries = 0;
    for (int i = 1; i <= l; ++i)
        entries += static_cast<long long>(c.terms[i - 1].dim) * c.terms[i].dim;
    long long total = 1;
    for (long long k = 0; k < entries; ++k) {
        total *= f->q();
        REQUIRE(total <= (1LL << 20));
    }
    for (long long v = 0; v < total; ++v) {
        Homotopy h;
        long long t = v;
        for (int i = 1; i <= l; ++i) {
            Matrix hi(f, c.terms[i - 1].dim, c.terms[i].dim);
            for (int a = 0; a < hi.rows(); ++a)
                for (int b = 0; b < hi.cols(); ++b) {
                    hi.set(a, b, static_cast<fq_t>(t % f->q()));
                    t /= f->q();
                }
            h.maps.push_back(std::move(hi));
        }
        if (verify_homotopy(c, h)) return true;
    }
    return false;
}

} // namespace

TEST_SUITE("complex") {

TEST_CASE("validation") {
    const auto f2 = Field::make(2);
    const BoundedComplex empty;
    CHECK(validate_complex(empty).empty());

    BoundedComplex zero;
    zero.terms = {make_trivial(c22, f2, 0)};
    CHECK(validate_complex(zero).empty());

    CHECK(validate_complex(identity_complex(make_free(c22, f2, 1))).empty());

    // non-equivariant differential: k -> kG hitting a single basis vector
    BoundedComplex bad;
    bad.terms = {make_trivial(c22, f2, 1), make_free(c22, f2, 1)};
    Matrix d(f2, 4, 1);
    d.set(0, 0, f2->one());
    bad.diffs = {d};
    const auto violations = validate_complex(bad);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations[0].invariant == "equivariance");
    CHECK(violations[0].position == 0);
    CHECK(violations[0].generator == 0);

    // broken composite
    BoundedComplex notz;
    const auto k = make_trivial(c22, f2, 1);
    notz.terms = {k, k, k};
    notz.diffs = {Matrix::identity(f2, 1), Matrix::identity(f2, 1)};
    const auto comp = validate_complex(notz);
    REQUIRE_FALSE(comp.empty());
    CHECK(comp[0].invariant == "composite");
}

TEST_CASE("exactness") {
    const auto f2 = Field::make(2);

    const auto peri = periodicity_complex(2, f2);
    CHECK(validate_complex(peri).empty());
    const auto ex = is_exact(peri);
    CHECK(ex.exact);
    CHECK(ex.homology_dims == std::vector<int>{0, 0, 0, 0});

    BoundedComplex single;
    single.terms = {make_trivial(c22, f2, 1)};
    const auto not_ex = is_exact(single);
    CHECK_FALSE(not_ex.exact);
    CHECK(not_ex.homology_dims == std::vector<int>{1});

    CHECK(is_exact(identity_complex(make_free(c22, f2, 1))).exact);
    CHECK(is_exact(BoundedComplex{}).exact);
}

TEST_CASE("contractibility of the identity complex") {
    const auto f2 = Field::make(2);
    const auto rep = is_contractible(identity_complex(make_free(c22, f2, 1)));
    CHECK(rep.contractible);
    REQUIRE(rep.certificate.has_value());
    CHECK(rep.certificate->maps[0].is_identity());
}

TEST_CASE("degenerate complexes follow the documented conventions") {
    const auto f2 = Field::make(2);

    const BoundedComplex empty;
    CHECK(is_exact(empty).exact);
    CHECK(is_contractible(empty).contractible);

    BoundedComplex single_zero;
    single_zero.terms = {make_trivial(c22, f2, 0)};
    CHECK(is_exact(single_zero).exact);
    CHECK(is_contractible(single_zero).contractible);

    BoundedComplex single_k;
    single_k.terms = {make_trivial(c22, f2, 1)};
    CHECK_FALSE(is_exact(single_k).exact);
    CHECK_FALSE(is_contractible(single_k).contractible);
}

TEST_CASE("periodicity complexes are exact but not contractible") {
    for (int p : {2, 3}) {
        const auto f = Field::make(p);
        const auto peri = periodicity_complex(p, f);
        CHECK(is_exact(peri).exact);
        const auto rep = is_contractible(peri);
        CHECK_FALSE(rep.contractible);
        CHECK_FALSE(rep.certificate.has_value());
    }
}

TEST_CASE("direct sum of a contractible complex with itself") {
    const auto f2 = Field::make(2);
    const auto one = identity_complex(make_permutation(Subgroup::from_generators(c22, {{1, 0}}), f2));
    const auto sum = direct_sum_complex(one, one);
    CHECK(validate_complex(sum).empty());
    const auto rep = is_contractible(sum);
    CHECK(rep.contractible);

    // the block sum of certificates is itself a certificate
    const auto r1 = is_contractible(one);
    Homotopy block;
    for (std::size_t i = 0; i < r1.certificate->maps.size(); ++i)
        block.maps.push_back(block_diag({r1.certificate->maps[i], r1.certificate->maps[i]}));
    CHECK(verify_homotopy(sum, block));
}

TEST_CASE("contractible implies exact on tested complexes") {
    const auto f3 = Field::make(3);
    const ElemAbGroup c32{3, 2};
    const SubgroupCollection h = {Subgroup::trivial(c32), Subgroup::full(c32)};
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto c = random_contractible_complex(h, f3, 2, {1, 1}, seed);
        const auto rep = is_contractible(c);
        CHECK(rep.contractible);
        CHECK(is_exact(c).exact);
        CHECK(verify_homotopy(c, *rep.certificate));
    }
}

TEST_CASE("solver agrees with brute force on tiny complexes") {
    const auto f2 = Field::make(2);
    // every unipotent action matrix in dimension <= 2 over F_2
    std::vector<GModule> mods;
    mods.push_back(make_trivial(c2, f2, 0));
    mods.push_back(make_trivial(c2, f2, 1));
    for (const auto& rows : std::vector<std::vector<std::vector<long long>>>{
             {{1, 0}, {0, 1}}, {{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}, {{0, 1}, {1, 0}}}) {
        GModule m{c2, f2, 2, {Matrix::from_rows(f2, rows)}, std::nullopt};
        validate_module(m);
        mods.push_back(std::move(m));
    }
    int tested = 0, contractible_count = 0;
    for (const auto& a : mods)
        for (const auto& b : mods) {
            const long long cells = static_cast<long long>(a.dim) * b.dim;
            for (long long v = 0; v < (1LL << cells); ++v) {
                Matrix d(f2, b.dim, a.dim);
                long long t = v;
                for (int i = 0; i < b.dim; ++i)
                    for (int j = 0; j < a.dim; ++j) {
                        d.set(i, j, static_cast<fq_t>(t & 1));
                        t >>= 1;
                    }
                BoundedComplex c;
                c.terms = {a, b};
                c.diffs = {d};
                if (!validate_complex(c).empty()) continue; // non-equivariant d
                ++tested;
                const bool fast = is_contractible(c).contractible;
                const bool slow = brute_force_contractible(c);
                CHECK(fast == slow);
                if (fast) ++contractible_count;
            }
        }
    CHECK(tested > 50);
    CHECK(contractible_count > 0);
    CHECK(contractible_count < tested);
}

TEST_CASE("solver agrees with brute force on three-term complexes") {
    const auto f2 = Field::make(2);
    const auto k = make_trivial(c2, f2, 1);
    const auto kg = make_free(c2, f2, 1);
    // enumerate equivariant d0: k -> kC_2, d1: kC_2 -> k with d1 d0 = 0
    const auto d0s = hom_space(k, kg);
    const auto d1s = hom_space(kg, k);
    int tested = 0;
    for (int a = 0; a < (1 << d0s.size()); ++a)
        for (int b = 0; b < (1 << d1s.size()); ++b) {
            Matrix d0(f2, 2, 1), d1(f2, 1, 2);
            for (std::size_t i = 0; i < d0s.size(); ++i)
                if (a >> i & 1) d0 = d0 + d0s[i];
            for (std::size_t i = 0; i < d1s.size(); ++i)
                if (b >> i & 1) d1 = d1 + d1s[i];
            if (!(d1 * d0).is_zero()) continue;
            BoundedComplex c;
            c.terms = {k, kg, k};
            c.diffs = {d0, d1};
            REQUIRE(validate_complex(c).empty());
            ++tested;
            CHECK(is_contractible(c).contractible == brute_force_contractible(c));
        }
    CHECK(tested >= 4);
}

TEST_CASE("functors on complexes") {
    const auto f2 = Field::make(2);
    const auto peri = periodicity_complex(2, f2);

    // induction preserves exactness
    const auto line = Subgroup::from_generators(c22, {{0, 1}});
    const auto induced = induce_complex(peri, line.basis());
    CHECK(validate_complex(induced).empty());
    CHECK(is_exact(induced).exact);
    CHECK(induced.terms[0].dim == 2);
    CHECK(induced.terms[1].dim == 4);

    // inflation preserves exactness
    const auto inflated = inflate_complex(peri, Matrix::from_rows(Field::make(2), {{1}, {0}}));
    CHECK(validate_complex(inflated).empty());
    CHECK(is_exact(inflated).exact);

    // restriction to the full group is the complex itself
    const auto same = restrict_complex(peri, Subgroup::full(c2));
    CHECK(same.diffs == peri.diffs);
    CHECK(same_module(same.terms[0], peri.terms[0]));

    // shift moves homology
    BoundedComplex single;
    single.terms = {make_trivial(c22, f2, 1)};
    const auto shifted = shift_complex(single, 1);
    CHECK(validate_complex(shifted).empty());
    CHECK(is_exact(shifted).homology_dims == std::vector<int>{0, 1});
    CHECK(is_exact(shift_complex(peri, 2)).exact);
}

TEST_CASE("collection criterion verdicts") {
    const auto f2 = Field::make(2);

    // contractible complex with certified membership
    const SubgroupCollection h22 = {Subgroup::trivial(c22), Subgroup::full(c22)};
    const auto sum = direct_sum_complex(identity_complex(make_free(c22, f2, 1)),
                                        identity_complex(make_trivial(c22, f2, 2)));
    auto rep = check_collection_criterion(h22, sum);
    CHECK(rep.membership == Membership::certified);
    CHECK(rep.condition.ok);
    CHECK(rep.exactness.exact);
    CHECK(rep.contractibility.contractible);
    CHECK(rep.verdict == Verdict::consistent);

    // hypothesis void: {1, C_2} violates the chain condition over C_2
    const SubgroupCollection h2 = {Subgroup::trivial(c2), Subgroup::full(c2)};
    rep = check_collection_criterion(h2, periodicity_complex(2, f2));
    CHECK(rep.membership == Membership::certified);
    CHECK_FALSE(rep.condition.ok);
    CHECK(rep.exactness.exact);
    CHECK_FALSE(rep.contractibility.contractible);
    CHECK(rep.verdict == Verdict::consistent);

    // untagged terms with an otherwise live hypothesis: inconclusive
    auto stripped = periodicity_complex(2, f2);
    for (auto& t : stripped.terms) t.tags = std::nullopt;
    rep = check_collection_criterion({Subgroup::trivial(c2)}, stripped);
    CHECK(rep.membership == Membership::unknown);
    CHECK(rep.condition.ok);
    CHECK(rep.verdict == Verdict::inconclusive);

    // membership failure: free summand outside the collection
    rep = check_collection_criterion({Subgroup::full(c2)}, periodicity_complex(2, f2));
    CHECK(rep.membership == Membership::failed);
    CHECK(rep.verdict == Verdict::consistent);
}

TEST_CASE("terminal splitting through a rank-two subgroup") {
    const auto f2 = Field::make(2);

    // identity complex on the trivial module
    const auto id_k = identity_complex(make_trivial(c22, f2, 1));
    const auto psi = split_via_rank_two_subgroup(id_k, Subgroup::full(c22));
    CHECK(psi.matrix.is_identity());

    // 0 -> kG -> kG + k -> k -> 0 with the augmentation glue
    const auto kg = make_free(c22, f2, 1);
    const auto k = make_trivial(c22, f2, 1);
    Matrix d0(f2, 5, 4);
    d0.paste(0, 0, Matrix::identity(f2, 4));
    for (int j = 0; j < 4; ++j) d0.set(4, j, f2->one()); // -aug = aug in char 2
    Matrix d1(f2, 1, 5);
    for (int j = 0; j < 5; ++j) d1.set(0, j, f2->one());
    BoundedComplex c;
    c.terms = {kg, direct_sum({kg, k}), k};
    c.diffs = {d0, d1};
    REQUIRE(validate_complex(c).empty());
    REQUIRE(is_exact(c).exact);

    const auto psi2 = split_via_rank_two_subgroup(c, Subgroup::full(c22));
    CHECK((c.diffs[1] * psi2.matrix).is_identity());
    Matrix expected(f2, 5, 1);
    expected.set(4, 0, f2->one()); // inclusion into the trivial summand
    CHECK(psi2.matrix == expected);

    // terminal term with a free summand is rejected
    const auto bad = identity_complex(kg);
    CHECK_THROWS_WITH_AS(split_via_rank_two_subgroup(bad, Subgroup::full(c22)),
                         doctest::Contains("terminal term must be a sum of trivial modules"),
                         Error);

    // untagged terms are rejected
    auto untagged = id_k;
    untagged.terms[0].tags = std::nullopt;
    CHECK_THROWS_WITH_AS(split_via_rank_two_subgroup(untagged, Subgroup::full(c22)),
                         doctest::Contains("untagged"), Error);

    // rank-1 subgroups are rejected
    CHECK_THROWS_WITH_AS(
        split_via_rank_two_subgroup(id_k, Subgroup::from_generators(c22, {{1, 0}})),
        doctest::Contains("rank 2"), Error);
}

TEST_CASE("concurrent checks on shared immutable inputs") {
    const auto f3 = Field::make(3);
    const auto peri = periodicity_complex(3, f3);
    const SubgroupCollection h = {Subgroup::trivial(c22), Subgroup::full(c22)};
    const auto f2 = Field::make(2);
    const auto shared = random_contractible_complex(h, f2, 2, {1, 1}, 31);

    std::vector<std::thread> workers;
    std::array<int, 4> verdicts{-1, -1, -1, -1};
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            const bool a = is_contractible(peri).contractible;
            const bool b = is_contractible(shared).contractible;
            const auto homs = hom_space(shared.terms[0], shared.terms[1]);
            verdicts[static_cast<std::size_t>(t)] =
                (!a && b && !homs.empty()) ? 1 : 0;
        });
    }
    for (auto& w : workers) w.join();
    for (int v : verdicts) CHECK(v == 1);
}

TEST_CASE("random contractible complexes") {
    const auto f2 = Field::make(2);
    const SubgroupCollection h = {Subgroup::trivial(c22), Subgroup::full(c22)};

    // zero multiplicities give the zero complex
    const auto zero = random_contractible_complex(h, f2, 2, {0, 0}, 5);
    CHECK(validate_complex(zero).empty());
    for (const auto& t : zero.terms) CHECK(t.dim == 0);
    CHECK(is_contractible(zero).contractible);

    // determinism: identical seeds give byte-identical serializations
    const auto a = random_contractible_complex(h, f2, 3, {2, 1}, 42);
    const auto b = random_contractible_complex(h, f2, 3, {2, 1}, 42);
    CHECK(dump_json(complex_to_json(a)) == dump_json(complex_to_json(b)));
    const auto other = random_contractible_complex(h, f2, 3, {2, 1}, 43);
    CHECK(dump_json(complex_to_json(a)) != dump_json(complex_to_json(other)));

    // outputs validate, are exact, are contractible, and stay inside Add
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const auto c = random_contractible_complex(h, f2, 2, {1, 1}, seed);
        CHECK(validate_complex(c).empty());
        const auto rep = check_collection_criterion(h, c);
        CHECK(rep.membership == Membership::certified);
        CHECK(rep.exactness.exact);
        CHECK(rep.contractibility.contractible);
        CHECK(rep.verdict == Verdict::consistent);
    }
}

} // TEST_SUITE
