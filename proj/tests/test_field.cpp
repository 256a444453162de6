#include <catch2/catch_amalgamated.hpp>

#include <idtag/field.hpp>
#include <idtag/formats.hpp>

using namespace idtag;

namespace {

FieldElement el(const Field& f, std::vector<u64> c) { return f.from_residues(std::move(c)); }

// independent oracle: multiplicative order by repeated multiplication
u64 order_bruteforce(const Field& f, const FieldElement& a) {
    FieldElement cur = a;
    u64 order = 1;
    while (!(cur == f.one())) {
        cur = f.mul(cur, a);
        ++order;
    }
    return order;
}

} // namespace

TEST_CASE("prime field construction", "[field]") {
    SECTION("GF(3)") {
        const Field f = make_prime_field(3);
        REQUIRE(f.characteristic() == 3);
        REQUIRE(f.degree() == 1);
        REQUIRE(f.size() == 3);
        REQUIRE(f.modulus().empty());
        REQUIRE(f.primitive_element() == el(f, {2}));
    }
    SECTION("GF(2) edge case") {
        const Field f = make_prime_field(2);
        REQUIRE(f.primitive_element() == f.one());
        REQUIRE(f.add(f.one(), f.one()) == f.zero());
    }
    SECTION("GF(23) primitive root against brute-force order scan") {
        const Field f = make_prime_field(23);
        u64 expected = 0;
        for (u64 g = 2; g < 23 && expected == 0; ++g)
            if (order_bruteforce(f, el(f, {g})) == 22) expected = g;
        REQUIRE(expected == 5);
        REQUIRE(f.primitive_element() == el(f, {expected}));
    }
    SECTION("composite and degenerate characteristics are rejected") {
        REQUIRE_THROWS_AS(make_prime_field(4), NotPrime);
        REQUIRE_THROWS_AS(make_prime_field(1), NotPrime);
        REQUIRE_THROWS_AS(make_prime_field(0), NotPrime);
        REQUIRE_THROWS_AS(make_prime_field(100600998), NotPrime);
    }
}

TEST_CASE("GF(9) canonical structure", "[field]") {
    const Field f = make_extension_field(3, 2);

    SECTION("Conway modulus x^2 + 2x + 2") {
        REQUIRE(f.modulus() == std::vector<u64>{2, 2, 1});
        REQUIRE(f.primitive_element() == el(f, {0, 1}));
        REQUIRE(f.size() == 9);
    }
    SECTION("the full power table of alpha") {
        const std::vector<std::vector<u64>> powers = {
            {1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 0}, {0, 2}, {2, 2}, {2, 1},
        };
        for (u64 e = 0; e < powers.size(); ++e)
            REQUIRE(f.pow(f.primitive_element(), e) == el(f, powers[e]));
        REQUIRE(f.pow(f.primitive_element(), 8) == f.one());
        REQUIRE(order_bruteforce(f, f.primitive_element()) == 8);
    }
    SECTION("element_from_index follows the discrete-log order") {
        REQUIRE(f.element_from_index(0) == f.zero());
        REQUIRE(f.element_from_index(1) == f.one());
        REQUIRE(f.element_from_index(2) == el(f, {0, 1}));
        REQUIRE(f.element_from_index(7) == el(f, {2, 2})); // alpha^6
        REQUIRE(f.element_from_index(8) == el(f, {2, 1})); // alpha^7
        REQUIRE_THROWS_AS(f.element_from_index(9), IndexOutOfRange);
    }
    SECTION("index round trip over the whole field") {
        for (u128 i = 0; i < 9; ++i) REQUIRE(f.index_from_element(f.element_from_index(i)) == i);
    }
    SECTION("symbol expansion is the little-endian residue vector") {
        REQUIRE(f.expand_symbol(el(f, {2, 2})) == std::vector<u64>{2, 2}); // alpha^6
        REQUIRE(f.expand_symbol(el(f, {1, 2})) == std::vector<u64>{1, 2}); // alpha^3
        REQUIRE(f.expand_symbol(el(f, {2, 0})) == std::vector<u64>{2, 0}); // alpha^4 = 2
        REQUIRE(f.expand_symbol(f.zero()) == std::vector<u64>{0, 0});
    }
    SECTION("materialized prefix agrees with random access") {
        const auto prefix = f.first_elements(9);
        for (u64 i = 0; i < 9; ++i) REQUIRE(prefix[i] == f.element_from_index(i));
    }
}

TEST_CASE("field arithmetic", "[field]") {
    const Field f = make_extension_field(3, 2);
    const FieldElement a = f.primitive_element();

    SECTION("specific products and sums in GF(9)") {
        REQUIRE(f.mul(f.pow(a, 1), f.pow(a, 7)) == f.one());            // alpha^8 = 1
        REQUIRE(f.add(f.pow(a, 3), f.pow(a, 4)) == f.pow(a, 5));        // (1,2) + (2,0) = (0,2)
        REQUIRE(f.mul(f.pow(a, 4), f.pow(a, 4)) == f.pow(a, 8));        // 2 * 2 = 4 = 1
        REQUIRE(f.mul(f.zero(), f.pow(a, 5)) == f.zero());
    }
    SECTION("inverses") {
        for (u128 i = 1; i < 9; ++i) {
            const FieldElement x = f.element_from_index(i);
            REQUIRE(f.mul(x, f.inv(x)) == f.one());
        }
        REQUIRE_THROWS_AS(f.inv(f.zero()), DivisionByZero);
    }
    SECTION("powers, including the 0^0 = 1 convention") {
        REQUIRE(f.pow(f.zero(), 0) == f.one());
        REQUIRE(f.pow(f.zero(), 5) == f.zero());
        const Field p3 = make_prime_field(3);
        REQUIRE(p3.pow(p3.zero(), 0) == p3.one());
        for (u64 i = 0; i < 20; ++i)
            for (u64 j = 0; j < 20; ++j)
                REQUIRE(f.mul(f.pow(a, i), f.pow(a, j)) == f.pow(a, i + j));
    }
    SECTION("subtraction and negation") {
        for (u128 i = 0; i < 9; ++i) {
            const FieldElement x = f.element_from_index(i);
            REQUIRE(f.sub(x, x) == f.zero());
            REQUIRE(f.add(x, f.neg(x)) == f.zero());
        }
    }
    SECTION("operands from a different field are rejected") {
        const Field g = make_prime_field(5);
        REQUIRE_THROWS_AS(f.add(f.one(), g.one()), std::invalid_argument);
    }
}

TEST_CASE("field axioms, exhaustive on GF(25)", "[field]") {
    const Field f = make_extension_field(5, 2);
    REQUIRE(f.modulus() == std::vector<u64>{2, 4, 1}); // Conway C_{5,2}
    std::vector<FieldElement> all = f.first_elements(25);
    for (const FieldElement& x : all)
        for (const FieldElement& y : all) {
            REQUIRE(f.add(x, y) == f.add(y, x));
            REQUIRE(f.mul(x, y) == f.mul(y, x));
            for (const FieldElement& z : all) {
                REQUIRE(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
                REQUIRE(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
                REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
            }
        }
    REQUIRE(order_bruteforce(f, f.primitive_element()) == 24);
}

TEST_CASE("larger prime fields", "[field]") {
    const Field f = make_prime_field(1009);
    SECTION("smallest primitive root matches a brute-force scan") {
        u64 expected = 0;
        for (u64 g = 2; g < 1009 && expected == 0; ++g)
            if (order_bruteforce(f, el(f, {g})) == 1008) expected = g;
        REQUIRE(expected == 11);
        REQUIRE(f.primitive_element() == el(f, {expected}));
    }
    SECTION("index arithmetic matches group structure") {
        for (u64 i = 1; i < 60; i += 7)
            for (u64 j = 1; j < 60; j += 11) {
                const FieldElement prod = f.mul(f.element_from_index(i), f.element_from_index(j));
                REQUIRE(f.index_from_element(prod) == (i - 1 + j - 1) % 1008 + 1);
            }
    }
}

TEST_CASE("every Conway table entry builds a valid field", "[field]") {
    for (const auto& entry : detail::conway_table()) {
        const Field f = make_extension_field(entry.p, entry.m);
        REQUIRE(f.modulus() == entry.coeffs);
        // constructor has already verified irreducibility and primitivity;
        // spot-check the generator once more through pow
        REQUIRE(f.pow(f.primitive_element(), f.size() - 1) == f.one());
    }
}

TEST_CASE("modulus search beyond the Conway table", "[field]") {
    // (101, 2) is outside the table; the search must be deterministic and
    // produce a primitive irreducible modulus
    const Field f1 = make_extension_field(101, 2);
    const Field f2 = make_extension_field(101, 2);
    REQUIRE(f1.modulus() == f2.modulus());
    REQUIRE(f1.modulus().size() == 3);
    REQUIRE(order_bruteforce(f1, f1.primitive_element()) == 101 * 101 - 1);
}

TEST_CASE("budgets and contract errors", "[field]") {
    SECTION("degree limits") {
        REQUIRE_THROWS_AS(make_extension_field(3, 1), std::invalid_argument);
        REQUIRE_THROWS_AS(make_extension_field(3, 17), DegreeTooLarge);
    }
    SECTION("extension characteristic budget") {
        REQUIRE_THROWS_AS(make_extension_field((u64(1) << 61) + 1, 2), Error);
    }
    SECTION("discrete logs are gated at 2^48 elements") {
        const u64 p = nearest_prime(u64(1) << 49);
        const Field f = make_prime_field(p);
        REQUIRE(f.size() > Field::MAX_DLOG_SIZE);
        const FieldElement x = f.element_from_index(12345);
        REQUIRE_THROWS_AS(f.index_from_element(x), FieldTooLargeForDiscreteLog);
        // forward access stays cheap
        REQUIRE(f.mul(x, f.inv(x)) == f.one());
    }
    SECTION("residue validation") {
        const Field f = make_prime_field(7);
        REQUIRE_THROWS_AS(f.from_residues({7}), std::invalid_argument);
        REQUIRE_THROWS_AS(f.from_residues({0, 0}), std::invalid_argument);
    }
}

TEST_CASE("field spec JSON round trip", "[field][formats]") {
    SECTION("GF(9)") {
        const Field f = make_extension_field(3, 2);
        const nlohmann::json j = field_to_json(f);
        REQUIRE(j.at("p") == 3);
        REQUIRE(j.at("m") == 2);
        REQUIRE(j.at("modulus") == std::vector<u64>{2, 2, 1});
        REQUIRE(j.at("primitive") == std::vector<u64>{0, 1});
        REQUIRE(field_from_json(j) == f);
    }
    SECTION("prime field round trip keeps the empty modulus") {
        const Field f = make_prime_field(23);
        const nlohmann::json j = field_to_json(f);
        REQUIRE(j.at("modulus").empty());
        REQUIRE(field_from_json(j) == f);
    }
    SECTION("invalid specs are rejected") {
        REQUIRE_THROWS_AS(field_from_json({{"p", 3}, {"m", 2}, {"modulus", {1, 2, 1}}, {"primitive", {0, 1}}}),
                          std::invalid_argument); // (x+1)^2 is reducible
        REQUIRE_THROWS_AS(field_from_json({{"p", 3}, {"m", 2}, {"modulus", {2, 2, 1}}, {"primitive", {2, 0}}}),
                          std::invalid_argument); // 2 has order 2, not 8
        REQUIRE_THROWS_AS(field_from_json({{"p", 9}, {"m", 1}, {"modulus", nlohmann::json::array()}, {"primitive", {2}}}),
                          NotPrime);
    }
}

TEST_CASE("element text format", "[field][formats]") {
    const Field f9 = make_extension_field(3, 2);
    const Field f23 = make_prime_field(23);

    SECTION("printing") {
        REQUIRE(element_to_string(f9, f9.pow(f9.primitive_element(), 6)) == "2,2");
        REQUIRE(element_to_string(f9, f9.zero()) == "0,0");
        REQUIRE(element_to_string(f23, el(f23, {17})) == "17");
    }
    SECTION("parsing both forms") {
        REQUIRE(parse_element(f9, "2,2") == f9.pow(f9.primitive_element(), 6));
        REQUIRE(parse_element(f9, "a^6") == f9.pow(f9.primitive_element(), 6));
        REQUIRE(parse_element(f9, "a^0") == f9.one());
        REQUIRE(parse_element(f23, "17") == el(f23, {17}));
        REQUIRE(parse_element(f23, "a^1") == el(f23, {5}));
    }
    SECTION("round trip over GF(9)") {
        for (u128 i = 0; i < 9; ++i) {
            const FieldElement x = f9.element_from_index(i);
            REQUIRE(parse_element(f9, element_to_string(f9, x)) == x);
        }
    }
    SECTION("rejects malformed input") {
        REQUIRE_THROWS(parse_element(f9, "3,0"));   // residue out of range
        REQUIRE_THROWS(parse_element(f9, "1"));     // wrong coefficient count
        REQUIRE_THROWS(parse_element(f9, "a^8"));   // exponent beyond the group order
        REQUIRE_THROWS(parse_element(f9, "x,y"));
        REQUIRE_THROWS(parse_element(f23, ""));
    }
}
