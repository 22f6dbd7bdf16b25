#include <doctest.h>

#include <sstream>

#include "bfan/families.hpp"
#include "bfan/truth_table_io.hpp"

using namespace bfan;

TEST_CASE("tt1 round trip") {
    BooleanFunction maj = majority(3);
    std::ostringstream os;
    write_tt1(os, maj);
    CHECK(os.str() == "tt1 n=3\n00010111\n");

    std::istringstream is(os.str());
    CHECK(read_tt1(is) == maj);

    // Trailing newline is optional.
    std::istringstream bare("tt1 n=1\n01");
    CHECK(read_tt1(bare) == dictator(1, 1));
}

TEST_CASE("tt1 parse errors carry a line number") {
    auto expect_parse_error = [](const std::string& text) {
        std::istringstream is(text);
        try {
            read_tt1(is);
            FAIL("expected ParseError for: ", text);
        } catch (const error& e) {
            CHECK(e.code() == errc::parse_error);
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    };
    expect_parse_error("tt n=3\n00010111\n");
    expect_parse_error("tt1 n=\n00010111\n");
    expect_parse_error("tt1 n=2\n001\n");
    expect_parse_error("tt1 n=2\n00x1\n");
    expect_parse_error("tt1 n=2\n00110\n");
    expect_parse_error("tt1 n=0\n\n");

    std::istringstream big("tt1 n=29\n");
    try {
        read_tt1(big);
        FAIL("expected DimensionTooLarge");
    } catch (const error& e) {
        CHECK(e.code() == errc::dimension_too_large);
    }
}

TEST_CASE("ttb round trip and dispatch") {
    BooleanFunction t = tribes(4, 2);
    std::ostringstream os;
    write_ttb(os, t);
    std::string payload = os.str();
    CHECK(payload.substr(0, 8) == "BFANTTB1");
    CHECK(payload.size() == 8 + 1 + 2);

    std::istringstream is(payload);
    CHECK(read_ttb(is) == t);

    std::istringstream bad("BFANTTB1");
    CHECK_THROWS_AS(read_ttb(bad), error);
    std::istringstream wrong("NOTMAGIC!....");
    CHECK_THROWS_AS(read_ttb(wrong), error);
}

TEST_CASE("file level round trips") {
    BooleanFunction maj = majority(3);
    std::string p1 = "test_io_tmp.tt1";
    std::string p2 = "test_io_tmp.ttb";
    write_truth_table_file(p1, maj, false);
    write_truth_table_file(p2, maj, true);
    CHECK(read_truth_table_file(p1) == maj);
    CHECK(read_truth_table_file(p2) == maj);
    std::remove(p1.c_str());
    std::remove(p2.c_str());

    CHECK_THROWS_AS(read_truth_table_file("does_not_exist.tt1"), error);
}
