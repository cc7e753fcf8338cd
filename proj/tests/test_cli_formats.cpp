#include <doctest.h>

#include <rees/scan.hpp>
#include <rees/verdict_json.hpp>

#include <sstream>

using namespace rees;

TEST_CASE("verdict JSON round-trips") {
    for (auto [a, b, c] : std::vector<std::array<int, 3>>{{17, 503, 169}, {53, 48, 529}, {3, 4, 5}, {2, 3, 5}}) {
        DecideOptions opt;
        opt.with_classification = true;
        auto v = decide({a, b, c}, opt);
        auto j = to_json(v);
        auto back = verdict_from_json(json::parse(j.dump()));
        CHECK(verdict_equal(v, back));
    }
}

TEST_CASE("verdicts for the worked examples") {
    auto v1 = decide({17, 503, 169});
    CHECK(v1.scope == Scope::in_scope);
    CHECK_FALSE(*v1.emu);
    CHECK_FALSE(*v1.noetherian);
    REQUIRE(v1.min_degree.has_value());
    CHECK(v1.min_degree->d == 5);

    auto v2 = decide({53, 48, 529});
    CHECK(*v2.emu);
    CHECK(*v2.noetherian);
    CHECK_FALSE(v2.min_degree.has_value());

    auto v3 = decide({3, 4, 5});
    CHECK(v3.scope == Scope::no_negative_curve);
    CHECK_FALSE(v3.noetherian.has_value());

    auto v4 = decide({2, 3, 5});
    CHECK(v4.scope == Scope::complete_intersection);
}

TEST_CASE("characteristic p verdict: Noetherian whenever the negative curve exists") {
    DecideOptions opt;
    opt.characteristic = 2;
    auto v = decide({17, 503, 169}, opt);
    CHECK(*v.noetherian);   // char-p theorem despite EMU failing
    CHECK_FALSE(*v.emu);
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rat("-4/7") == make_rat(-4, 7));
    CHECK(parse_rat("5") == Rat(5));
    CHECK(format_rat(make_rat(49, 40)) == "49/40");
    CHECK(format_rat(Rat(-3)) == "-3");
    CHECK_THROWS_AS(parse_rat("x/y"), std::invalid_argument);
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("scan output is deterministic across job counts") {
    std::ostringstream one, four;
    ScanOptions opt;
    opt.max = 16;
    opt.jobs = 1;
    scan(one, opt);
    opt.jobs = 4;
    scan(four, opt);
    CHECK(one.str() == four.str());
    CHECK(one.str().starts_with(kScanHeader));
}

TEST_CASE("scan rows carry the oracle agreement and only in-scope triples") {
    std::ostringstream out;
    ScanOptions opt;
    opt.max = 14;
    opt.jobs = 2;
    scan(out, opt);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == kScanHeader);
    size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::stringstream ss(line);
        std::vector<std::string> cols;
        std::string col;
        while (std::getline(ss, col, ',')) cols.push_back(col);
        REQUIRE(cols.size() == 12);
        CHECK(cols.back() == "true");  // oracle_agree
        // emu=false rows carry a minimal degree, emu=true rows do not
        CHECK((cols[5] == "true") == cols[6].empty());
        // hypothesis: u^2 c < a b in the row's role assignment
        Int a(cols[0]), b(cols[1]), c(cols[2]), u(cols[3]);
        CHECK(u * u * c < a * b);
    }
    CHECK(rows == in_scope_triples(14).size());
    CHECK(rows > 0);
}

TEST_CASE("scan emits the (17,503,169) permutation row when max is large enough") {
    // the permutation (169,17,503)? in-scope roles for z = 169 need
    // u^2*169 < 17*503; the canonical ordered triple is (17,503,169) itself,
    // covered by max >= 503 -- too slow here, so check membership logic only
    auto v = in_scope_triples(14);
    for (const auto& t : v) {
        CHECK(t.a <= 14);
        CHECK(pairwise_coprime(t));
    }
}
