#include <doctest.h>

#include <random>

#include "blockinv/eval.hpp"
#include "blockinv/presets.hpp"
#include "oracles.hpp"

using namespace blockinv;

namespace {

FormSet unit_forms(int dim, int count) {
    // e_1..e_dim then rows of ones as filler
    std::vector<std::vector<long>> rows;
    for (int i = 0; i < count; ++i) {
        std::vector<long> row(static_cast<std::size_t>(dim), 0);
        if (i < dim)
            row[static_cast<std::size_t>(i)] = 1;
        else
            row.assign(static_cast<std::size_t>(dim), 1);
        rows.push_back(std::move(row));
    }
    return FormSet::from_ints(rows);
}

}  // namespace

TEST_CASE("determinants") {
    FormSet id5 = unit_forms(5, 5);
    CHECK(det(id5.forms) == 1);

    auto rows = id5.forms;
    rows[3] = rows[1];
    CHECK(det(rows) == 0);

    // rows e2,e3,e4,e5,(1,1,1,1,1)
    FormSet shifted = FormSet::from_ints({{0, 1, 0, 0, 0},
                                          {0, 0, 1, 0, 0},
                                          {0, 0, 0, 1, 0},
                                          {0, 0, 0, 0, 1},
                                          {1, 1, 1, 1, 1}});
    CHECK(det(shifted.forms) == 1);

    CHECK_THROWS_AS(det({{ExactInt(1), ExactInt(2)}}), ValidationError);

    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<std::vector<ExactInt>> m(
                static_cast<std::size_t>(n),
                std::vector<ExactInt>(static_cast<std::size_t>(n)));
            for (auto& row : m)
                for (auto& x : row) x = entry(rng);
            CHECK(det(m) == oracles::det_leibniz(m));
        }
}

TEST_CASE("determinant table") {
    FormSet fs = paper8_forms();
    DetTable table(fs, 5);
    CHECK(table.exact_values().size() == 32768u);

    // repeated colors are zero
    CHECK(table.value(table.index_of({0, 0, 1, 2, 3})) == 0);
    // identity tuple
    CHECK(table.value(table.index_of({0, 1, 2, 3, 4})) == 1);
    // spot-check a mixed tuple against det()
    std::vector<int> tuple = {2, 7, 4, 0, 6};
    std::vector<std::vector<ExactInt>> rows;
    for (int c : tuple) rows.push_back(fs.forms[static_cast<std::size_t>(c)]);
    CHECK(table.value(table.index_of(tuple)) == det(rows));

    CHECK(table.fast_path_certified(9));
}

TEST_CASE("aronhold evaluation matches the unfiltered 256-term oracle") {
    BlockDesign a = aronhold();
    FormSet fs = FormSet::from_ints(
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    ExactInt fast = evaluate(a, fs);
    CHECK(fast == oracles::evaluate_unfiltered(a, fs));
    CHECK(abs(fast) == 24);

    // no proper 3-coloring of the tetrahedron: identically zero at 3 forms
    FormSet three = FormSet::from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(evaluate(a, three) == 0);
    CHECK(evaluate_detailed(a, three).num_colorings == 0);
}

TEST_CASE("evaluation preconditions and edge cases") {
    CHECK_THROWS_AS(evaluate(aronhold(), paper8_forms()), ValidationError);
    CHECK(evaluate(aronhold(), FormSet{}) == 0);
}

TEST_CASE("oracle equivalence for all small presets") {
    std::mt19937 rng(314);
    struct Case {
        BlockDesign design;
        int forms;
    };
    const Case cases[] = {
        {aronhold(), 4},
        {quadric(2), 3},
        {quadric(3), 4},
        {catalecticant(2), 3},
        {catalecticant(3), 4},
        {clebsch542(), 6},
    };
    for (const auto& c : cases) {
        FormSet fs = oracles::random_forms(c.forms, c.design.block_size(), -4,
                                           4, rng);
        CHECK(evaluate(c.design, fs) ==
              oracles::evaluate_unfiltered(c.design, fs));
    }
}

TEST_CASE("chromatic vanishing: fewer forms than the chromatic number") {
    std::mt19937 rng(271828);
    for (int trial = 0; trial < 3; ++trial) {
        CHECK(evaluate(clebsch542(),
                       oracles::random_forms(5, 3, -5, 5, rng)) == 0);
        CHECK(evaluate(design943(),
                       oracles::random_forms(9, 4, -5, 5, rng)) == 0);
    }
}

TEST_CASE("homogeneity under global scaling") {
    std::mt19937 rng(1618);
    struct Case {
        BlockDesign design;
        int forms;
    };
    for (const auto& [design, nforms] :
         {Case{aronhold(), 4}, Case{clebsch542(), 6}}) {
        const int exponent = design.num_points() * design.point_degree();
        FormSet base =
            oracles::random_forms(nforms, design.block_size(), -3, 3, rng);
        ExactInt v0 = evaluate(design, base);
        CHECK(v0 != 0);
        for (long t : {-1L, 2L, 3L}) {
            FormSet scaled = base;
            for (auto& f : scaled.forms)
                for (auto& x : f) x *= t;
            ExactInt expected = v0;
            for (int e = 0; e < exponent; ++e) expected *= t;
            CHECK(evaluate(design, scaled) == expected);
        }
    }
}

TEST_CASE("unimodular invariance") {
    std::mt19937 rng(577);
    BlockDesign design = clebsch542();  // 8 blocks
    FormSet base = oracles::random_forms(6, 3, -3, 3, rng);
    ExactInt v0 = evaluate(design, base);
    CHECK(v0 != 0);
    for (int trial = 0; trial < 10; ++trial) {
        bool flip = trial % 2 == 1;
        auto [m, sign] = oracles::random_unimodular(3, rng, flip);
        ExactInt expected = sign == 1 || design.num_blocks() % 2 == 0
                                ? v0
                                : ExactInt(-v0);
        CHECK(evaluate(design, oracles::apply_matrix(base, m)) == expected);
    }
    // odd block count picks up the sign
    BlockDesign odd = parse_block_list("0,1,2");
    FormSet odd_forms = oracles::random_forms(3, 3, -3, 3, rng);
    ExactInt w0 = evaluate(odd, odd_forms);
    auto [m2, sign2] = oracles::random_unimodular(3, rng, true);
    REQUIRE(sign2 == -1);
    CHECK(evaluate(odd, oracles::apply_matrix(odd_forms, m2)) == -w0);
}

TEST_CASE("form permutation invariance") {
    std::mt19937 rng(23);
    for (const auto& design : {aronhold(), clebsch542()}) {
        FormSet base = oracles::random_forms(design.block_size() + 2,
                                             design.block_size(), -3, 3, rng);
        ExactInt v0 = evaluate(design, base);
        for (int trial = 0; trial < 5; ++trial) {
            FormSet shuffled = base;
            std::shuffle(shuffled.forms.begin(), shuffled.forms.end(), rng);
            CHECK(evaluate(design, shuffled) == v0);
        }
    }
}

TEST_CASE("repeated vertices with odd degree vanish identically") {
    BlockDesign tripled = parse_symbolic("(abc)^3");
    REQUIRE(validate(tripled).has_repeated_vertices);
    REQUIRE(tripled.point_degree() == 3);
    std::mt19937 rng(8128);
    for (int r : {3, 4, 5})
        CHECK(evaluate(tripled, oracles::random_forms(r, 3, -5, 5, rng)) == 0);

    // even degree does not vanish: the doubled 5-block at generic forms
    BlockDesign doubled = quadric(4);
    REQUIRE(validate(doubled).has_repeated_vertices);
    FormSet fs = oracles::random_forms(5, 5, -3, 3, rng);
    CHECK(evaluate(doubled, fs) != 0);
}

TEST_CASE("block reordering covariance") {
    std::mt19937 rng(31);
    BlockDesign base = clebsch542();
    FormSet fs = oracles::random_forms(6, 3, -3, 3, rng);
    ExactInt v0 = evaluate(base, fs);
    for (int trial = 0; trial < 6; ++trial) {
        auto blocks = base.blocks();
        for (auto& b : blocks) std::shuffle(b.begin(), b.end(), rng);
        std::shuffle(blocks.begin(), blocks.end(), rng);
        BlockDesign moved(blocks, base.num_points());
        CHECK(evaluate(moved, fs) == reorder_sign(base, moved) * v0);
    }
}

TEST_CASE("parallel evaluation is bit-identical") {
    std::mt19937 rng(111);
    for (const auto& design : {aronhold(), clebsch542()}) {
        FormSet fs = oracles::random_forms(design.block_size() + 3,
                                           design.block_size(), -3, 3, rng);
        ExactInt expected = evaluate(design, fs);
        for (int parts : {1, 2, 8, 32})
            CHECK(parallel_evaluate(design, fs, parts) == expected);
    }
    CHECK_THROWS_AS(parallel_evaluate(aronhold(), FormSet{}, 0),
                    ValidationError);
}

TEST_CASE("batch evaluation") {
    FormSet fs = FormSet::from_ints(
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    auto twice = evaluate_batch({aronhold(), aronhold()}, fs);
    CHECK(twice.raw[0] == twice.raw[1]);
    CHECK(twice.gcd == abs(twice.raw[0]));
    CHECK(abs(twice.normalized[0]) == 1);
    CHECK(abs(twice.normalized[1]) == 1);

    FormSet three = FormSet::from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto zero = evaluate_batch({aronhold()}, three);
    CHECK(zero.raw[0] == 0);
    CHECK(zero.gcd == 0);
    CHECK(zero.normalized[0] == 0);

    CHECK_THROWS_AS(evaluate_batch({aronhold(), quadric(4)}, three),
                    ValidationError);
}

TEST_CASE("form set parsing") {
    FormSet fs = parse_form_set("1,0,0\n# comment\n\n-2, 3 , 4\n");
    CHECK(fs.count() == 2);
    CHECK(fs.forms[1][0] == -2);
    CHECK_THROWS_AS(parse_form_set("1,2\n1,2,3\n"), ParseError);
    CHECK_THROWS_AS(parse_form_set("1,x\n"), ParseError);
}
