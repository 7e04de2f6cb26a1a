#include "doctest.h"

#include "muinv/report_io.hpp"

using namespace muinv;

TEST_CASE("sequence JSON round trip")
{
    const std::string text = R"({
      "arity": "2",
      "group": {"free": "0", "torsion": ["2", "24"]},
      "window": [["-1", "1"], ["0", "2"]],
      "entries": [
        {"g": ["0", "1"], "value": {"free": [], "torsion": ["1", "23"]}}
      ]
    })";
    auto seq = io::read_sequence(text);
    CHECK(seq.arity == 2);
    CHECK(seq.group == AbelianGroup::make(0, {2, 24}));
    REQUIRE(seq.window.has_value());
    CHECK(seq.window->axes[0] == transform::Interval{-1, 1});
    REQUIRE(seq.entries.size() == 1);
    CHECK(seq.entries.at({0, 1}).torsion_part[1] == 23);

    io::Provenance prov{"btransform invert", {{"in", "x.json"}}};
    std::string out = io::render_sequence(seq, prov, true);
    // the writer's output must parse back to the same sequence
    auto again = io::read_sequence(out);
    CHECK(again.entries == seq.entries);
    CHECK(again.group == seq.group);
}

TEST_CASE("sequence JSON accepts bare numbers and defaults to Z")
{
    auto seq = io::read_sequence(
        R"({"arity": 1, "entries": [{"g": [2], "value": {"free": [3], "torsion": []}}]})");
    CHECK(seq.group == AbelianGroup::make(1, {}));
    CHECK(seq.entries.at({2}).free_part[0] == 3);
}

TEST_CASE("values and dataset payloads")
{
    auto values = io::read_values(
        R"({"arity": 1, "values": [
              {"s": [0], "value": {"free": ["2"], "torsion": []}},
              {"s": [1], "value": {"free": ["3"], "torsion": []}}]})");
    CHECK(values.values.size() == 2);
    CHECK(values.values.at({1}).free_part[0] == 3);

    auto data = io::read_dataset(
        R"({"r": "3", "group": {"free": "1", "torsion": []},
            "entries": [{"g": ["0", "1"], "perm": ["1"],
                         "value": {"free": ["-4"], "torsion": []}}]})");
    CHECK(data.r == 3);
    CHECK(data.entries.size() == 1);

    CHECK_THROWS_AS(io::read_values("{"), ValidationError);
    CHECK_THROWS_AS(io::read_dataset(R"({"entries": []})"), ValidationError);
}

TEST_CASE("torsion residues reduce on read")
{
    auto seq = io::read_sequence(
        R"({"arity": 1, "group": {"free": 0, "torsion": [5]},
            "entries": [{"g": [0], "value": {"free": [], "torsion": [12]}}]})");
    CHECK(seq.entries.at({0}).torsion_part[0] == 2);
}
