#include <doctest.h>

#include <cmath>
#include <limits>

#include "ngsocx/errors.hpp"
#include "ngsocx/kv_format.hpp"

using namespace ngsocx;

TEST_CASE("globals, sections and comments")
{
    const auto doc = parse_kv("# header\nschema = x/1\n\n[site A b]\nlat = 1.5  # trailing\nname = \"a # b\"\n[site C]\n",
                              "t");
    REQUIRE(doc.globals.entries.size() == 1);
    CHECK(doc.globals.entries[0].value == "x/1");
    REQUIRE(doc.sections.size() == 2);
    CHECK(doc.sections[0].kind == "site");
    CHECK(doc.sections[0].args == std::vector<std::string>{"A", "b"});
    CHECK(doc.sections[0].line == 4);
    CHECK(doc.sections[0].find("lat")->value == "1.5");
    CHECK(doc.sections[0].find("name")->value == "a # b");
    CHECK(doc.sections[1].entries.empty());
}

TEST_CASE("syntax errors carry the line number")
{
    try {
        parse_kv("a = 1\nno equals sign\n", "f.txt");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_kv("a = 1\na = 2\n", "t"), ParseError);
    CHECK_THROWS_AS(parse_kv("[unclosed\n", "t"), ParseError);
}

TEST_CASE("reader typing and unknown-field detection")
{
    const auto doc = parse_kv("n = 2.5\ni = 7\nl = a, b ,c\ns = hi\nbad = x1\n", "t");
    KvReader r(doc, doc.globals);
    CHECK(r.number("n") == 2.5);
    CHECK(r.integer("i") == 7);
    CHECK(r.list("l") == std::vector<std::string>{"a", "b", "c"});
    CHECK(r.string("s") == "hi");
    CHECK(r.number_or("missing", 3.0) == 3.0);
    CHECK_FALSE(r.optional_number("missing").has_value());
    CHECK_THROWS_AS(r.number("bad"), ParseError);
    CHECK_THROWS_AS(r.string("absent"), ParseError);

    const auto doc2 = parse_kv("known = 1\ntypo = 2\n", "t");
    KvReader r2(doc2, doc2.globals);
    r2.number("known");
    try {
        r2.finish();
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("format_exact round-trips doubles")
{
    for (double v : {0.1, -47.1, 1.0 / 3.0, 6.02214076e23, 5e-324, 12.6, 43509.0}) {
        CHECK(parse_double(format_exact(v)) == v);
    }
    CHECK(format_exact(12.6) == "12.6");
    CHECK(parse_double(" +3 ") == 3.0);
    CHECK_THROWS_AS(parse_double("3x"), ConfigError);
    CHECK_THROWS_AS(parse_double(""), ConfigError);
}
