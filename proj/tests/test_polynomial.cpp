#include <doctest.h>

#include "vkh/errors.hpp"
#include "vkh/polynomial.hpp"

using namespace vkh;

TEST_SUITE("polynomial") {

TEST_CASE("format in table notation") {
    KhPolynomial trefoil{{{-3, -9}, 1}, {{-2, -5}, 1}, {{0, -3}, 1}, {{0, -1}, 1}};
    CHECK(format_kh(trefoil) == "1/q^9t^3+1/q^5t^2+1/q^3+1/q");
    CHECK(format_kh({}) == "0");
    CHECK(format_kh({{{0, 0}, 2}}) == "2");
    CHECK(format_kh({{{1, 1}, 1}}) == "qt");
    CHECK(format_kh({{{-1, 1}, 1}}) == "q/t");
    CHECK(format_kh({{{1, -1}, 1}}) == "t/q");
    CHECK(format_kh({{{2, 6}, 2}}) == "2q^6t^2");
}

TEST_CASE("parse accepts table spellings") {
    KhPolynomial a = parse_kh("1/q^{9}t^{3} + 1/q^{5}t^{2} + 1/q^{3} + 1/q");
    CHECK(format_kh(a) == "1/q^9t^3+1/q^5t^2+1/q^3+1/q");
    CHECK(parse_kh("t/ q + q^3 t^2") == KhPolynomial{{{1, -1}, 1}, {{2, 3}, 1}});
    CHECK(parse_kh("2/q^{11} t^3") == KhPolynomial{{{-3, -11}, 2}});
    CHECK(parse_kh("$1/q \\quad + q$") == KhPolynomial{{{0, -1}, 1}, {{0, 1}, 1}});
    CHECK(parse_kh("2") == KhPolynomial{{{0, 0}, 2}});
    CHECK(parse_kh("0").empty());
    CHECK(parse_kh("q + q") == KhPolynomial{{{0, 1}, 2}});
}

TEST_CASE("parse rejects junk") {
    for (const char* bad : {"q^", "1/", "x", "q^a", "++q", "1/q^2/t"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_kh(bad), Error);
    }
}

TEST_CASE("format and parse round trip") {
    KhPolynomial p{{{-4, -7}, 1}, {{-3, -3}, 1}, {{-1, 1}, 1}, {{0, 0}, 2}, {{0, 3}, 3}, {{2, 7}, 1}};
    CHECK(parse_kh(format_kh(p)) == p);
}

TEST_CASE("graded Euler characteristic") {
    CHECK(graded_euler_characteristic({{{0, 1}, 1}, {{0, -1}, 1}}) == LaurentPoly{{-1, 1}, {1, 1}});
    LaurentPoly chi = graded_euler_characteristic(parse_kh("1/q^9t^3+1/q^5t^2+1/q^3+1/q"));
    CHECK(chi == LaurentPoly{{-9, -1}, {-5, 1}, {-3, 1}, {-1, 1}});
    CHECK(format_laurent(chi) == "-1/q^9+1/q^5+1/q^3+1/q");
    CHECK(graded_euler_characteristic({{{0, 1}, 1}, {{1, 1}, 1}}).empty());
    CHECK(format_laurent({}) == "0");
}

TEST_CASE("diagonal support and mirror flip") {
    CHECK(diagonal_support(parse_kh("1/q^9t^3+1/q^5t^2+1/q^3+1/q")) == std::set<int>{-1, -3});
    CHECK(diagonal_support(parse_kh("1/q + q")) == std::set<int>{-1, 1});
    CHECK(diagonal_support(parse_kh("1/q^{11} t^3 + 1/q^9 t^3 + 1/q^7 t^2 + 1/q^5 t^2 + 1/q^5 + 1/q^3")) ==
          std::set<int>{-1, -3, -5});
    KhPolynomial p = parse_kh("1/q^9t^3+1/q^3");
    CHECK(mirror_flip(p) == parse_kh("q^9t^3+q^3"));
    CHECK(mirror_flip(mirror_flip(p)) == p);
}

}
