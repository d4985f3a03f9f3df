#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "kolmo/emit.hpp"
#include "kolmo/errors.hpp"
#include "kolmo/report.hpp"

#include "../support/models.hpp"
#include "../support/oracles.hpp"

using namespace kolmo;

namespace {

long count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("class tuples at sample points") {
    const auto ma = kt::ma();
    // E11 and E12 both saddles below T3, E3 virtual
    CHECK(class_tuple(analyze_point(ma, {0.0004, 0.02})) == "rss--");
    // O has eigenvalues (mu1, mu2) and is an attractor here
    const auto t = class_tuple(analyze_point(ma, {-0.005, -0.005}));
    CHECK(std::count(t.begin(), t.end(), '-') == 2);
    CHECK(t == "as-s-");
    // Delta < 0 with only O proper on the axis
    const auto r00 = class_tuple(analyze_point(ma, {0.01, 0.001}));
    CHECK(r00.substr(1, 2) == "--");
}

TEST_CASE("admissible tuple sets") {
    const auto& a = admissible_tuples(DegeneracyCase::CaseA);
    CHECK(a.size() == 22);
    for (const char* t : {"s--s-", "s--rs", "r---s", "rrs-s", "rss--", "ss---", "as-s-", "rsa-s", "r----",
                          "sr---", "ar-s-", "sras-", "ssasr", "s--sr", "s--r-", "srssa", "srssr", "s--sa",
                          "sr--s", "ssas-", "rrs--", "as-sr"})
        CHECK(a.count(t) == 1);
    CHECK(admissible_tuples(DegeneracyCase::CaseB) == kt::caseb_lowest_order_tuples());
    CHECK(tuple_admissible(DegeneracyCase::CaseA, "uu---"));
    CHECK(!tuple_admissible(DegeneracyCase::CaseA, "aaaaa"));
}

TEST_CASE("sweep shape and parallel agreement") {
    const auto ma = kt::ma();
    const ParamWindow w{-0.01, 0.01, -0.01, 0.01};
    const auto g = sweep(ma, w, 64);
    CHECK(g.cells.size() == 4096);
    CHECK(count_lines(sweep_csv(g)) == 4097);
    CHECK(sweep_csv(g) == sweep_csv(sweep_serial(ma, w, 64)));
    for (const auto& c : g.cells) CHECK(c.inventory.size() == 5);

    // cells on each side of Delta+ show the E11/E12 pair appearing
    for (const auto& c : g.cells) {
        const double d = discriminant(ma, c.mu);
        if (std::abs(d) < 1e-12) continue;
        CHECK((c.inventory[1].status == Status::Absent) == (d < 0));
    }

    const auto one = sweep(ma, w, 1);
    REQUIRE(one.cells.size() == 1);
    CHECK(one.cells[0].mu.mu1 == 0.0);
    CHECK(class_tuple(one.cells[0]) == class_tuple(analyze_point(ma, {0.0, 0.0})));

    const auto empty = sweep(ma, w, 0);
    CHECK(count_lines(sweep_csv(empty)) == 1);

    CHECK_THROWS_AS(sweep(ma, w, 4096), ValidationError);
    CHECK_THROWS_AS(sweep(ma, {-0.09, 0.09, -0.09, 0.09}, 8), DomainError);
}

TEST_CASE("MH sweep shows the E3 flip across H") {
    const auto mh = kt::mh();
    const auto g = sweep(mh, {0.0, 6e-4, -0.012, -0.008}, 48);
    int att = 0, rep = 0;
    for (const auto& c : g.cells) {
        const auto& e3 = c.inventory[4];
        if (!e3.classified || e3.status != Status::Proper) continue;
        const auto j = kt::fd_jacobian(mh, c.mu, e3.point, 1e-8);
        const double p = 0.5 * (j[0][0] + j[1][1]);
        if (std::abs(p) < 1e-7) continue;
        CHECK(e3.cls.is_attractor() == (p < 0));
        att += e3.cls.is_attractor();
        rep += e3.cls.is_repeller();
    }
    CHECK(att > 0);
    CHECK(rep > 0);
}

TEST_CASE("emission formats") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(NAN) == "");
    CHECK(parse_format("svg") == Format::Svg);
    CHECK_THROWS_AS(parse_format("png"), ValidationError);

    const auto ma = kt::ma();
    const ParamWindow w{-0.01, 0.01, -0.01, 0.01};
    const auto g = sweep(ma, w, 16);
    const auto csv = sweep_csv(g);
    CHECK(csv.rfind("mu1,mu2,region,O_status,O_class,", 0) == 0);
    const auto svg = sweep_svg(g, curve_overlays(ma, w));
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg == sweep_svg(sweep(ma, w, 16), curve_overlays(ma, w)));
    CHECK(sweep_text(g).find("tuples") != std::string::npos);

    const auto cell = analyze_point(ma, {-0.01, 0.0});
    const auto text = analyze_document(cell, DegeneracyCase::CaseA, Format::Text);
    CHECK(text.find("E11 proper (0.1, 0) saddle") != std::string::npos);
    CHECK(text.find("E12 virtual") != std::string::npos);
    CHECK_THROWS_AS(analyze_document(cell, DegeneracyCase::CaseA, Format::Svg), ValidationError);
    CHECK_THROWS_AS(write_output("/nonexistent/dir/out.csv", "x"), IoError);
}
