#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "mlcpm/errors.hpp"
#include "mlcpm/io.hpp"
#include "support.hpp"

using namespace mlcpm;

namespace {

bool any_contains(const std::vector<std::string>& warnings, std::string_view needle) {
    for (const std::string& w : warnings) {
        if (w.find(needle) != std::string::npos) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("full sectioned document parses with attributes and comments skipped") {
    std::string text = "\xEF\xBB\xBF#TYPE\r\n"
                       "multiplex\r\n"
                       "#VERSION\n"
                       "2.0\n"
                       "-- a comment line\n"
                       "#LAYERS\n"
                       "work,UNDIRECTED\n"
                       "home,DIRECTED\n"
                       "#ACTOR ATTRIBUTES\n"
                       "age,numeric\n"
                       "#ACTORS\n"
                       "alice,34\n"
                       "bob,51\n"
                       "#VERTICES\n"
                       "carol,work\n"
                       "#EDGE ATTRIBUTES\n"
                       "weight,numeric\n"
                       "#EDGES\n"
                       "alice,bob,work,0.5\n"
                       "alice bob home\n"
                       "bob,carol,work\n";
    std::vector<std::string> warnings;
    MultiplexNetwork net = parse_multiplex(text, "doc", &warnings);

    CHECK(net.node_count() == 3);
    CHECK(net.layer_count() == 2);
    CHECK(net.edge_count() == 3);
    CHECK(net.node_name(0) == "alice");
    CHECK(net.node_name(1) == "bob");
    CHECK(net.node_name(2) == "carol");
    CHECK(net.layer_name(0) == "work");
    CHECK(net.layer_name(1) == "home");
    NodeIndex a = net.find_node("alice").value();
    NodeIndex b = net.find_node("bob").value();
    CHECK(net.pair_layers(a, b).count() == 2);
    CHECK(any_contains(warnings, "DIRECTED"));
    CHECK(net.source().name == "doc");
    CHECK(net.source().digest.size() == 16);
}

TEST_CASE("headerless input is read as an edge list") {
    MultiplexNetwork net = parse_multiplex("a,b,L1\nb,c,L1\na,c,L2\n");
    CHECK(net.node_count() == 3);
    CHECK(net.layer_count() == 2);
    CHECK(net.edge_count() == 3);
    CHECK(net.source().name == "<string>");
}

TEST_CASE("unknown sections are skipped with a warning") {
    std::vector<std::string> warnings;
    MultiplexNetwork net = parse_multiplex("#FOO\nstuff,more\n#EDGES\na,b,L1\n", "", &warnings);
    CHECK(net.edge_count() == 1);
    CHECK(net.node_count() == 2);
    CHECK(any_contains(warnings, "FOO"));
}

TEST_CASE("parse errors carry the 1-based line number") {
    auto check_line = [](std::string_view text, std::size_t line, std::string_view needle) {
        try {
            parse_multiplex(text);
            FAIL("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    check_line("a b\n", 1, "edge needs source, target and layer");
    check_line("a,b,L1\nc,c,L1\n", 2, "self-loop");
    check_line("#LAYERS\nwork,home\n", 2, "interlayer");
    check_line("#LAYERS\nwork,home,extra,fields\n", 2, "");
}

TEST_CASE("whole-line and column-bearing messages format consistently") {
    ParseError whole(3, 0, "bad record");
    CHECK(std::string(whole.what()) == "line 3: bad record");
    ParseError at(3, 7, "bad token");
    CHECK(std::string(at.what()) == "line 3, column 7: bad token");
}

TEST_CASE("serialization round-trips by name") {
    MultiplexNetwork original = mlcpm::testing::make_two_layer_walkthrough();
    MultiplexNetwork reparsed = parse_multiplex(write_multiplex(original));
    CHECK(reparsed == original);

    std::string twice = write_multiplex(reparsed);
    CHECK(twice == write_multiplex(original));
}

TEST_CASE("fnv1a64 matches its published parameters") {
    CHECK(fnv1a64("") == 14695981039346656037ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("file reading reports io failures distinctly from parse failures") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "mlcpm_io_test.mpx";
    {
        std::ofstream out(path);
        out << "a,b,L1\nb,c,L1\n";
    }
    MultiplexNetwork net = read_multiplex_file(path);
    CHECK(net.edge_count() == 2);
    CHECK(net.source().name == path.string());
    std::remove(path.string().c_str());

    CHECK_THROWS_AS(read_multiplex_file(path), IoError);
}

TEST_CASE("layer width beyond the inline budget still parses") {
    std::string text;
    for (int l = 0; l < 65; ++l) {
        text += "a,b,layer" + std::to_string(l) + "\n";
    }
    MultiplexNetwork net = parse_multiplex(text);
    CHECK(net.layer_count() == 65);
    CHECK(net.pair_layers(0, 1).count() == 65);
}
