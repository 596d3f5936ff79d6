#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "prebloch/cyclefile.hpp"
#include "prebloch/testing.hpp"

using namespace prebloch;

namespace {
std::string fixture(const std::string& name) {
    return std::string(PREBLOCH_FIXTURE_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("figure-eight fixture loads with the expected shape") {
    CycleFile f = CycleFile::load(fixture("figure8.json"));
    CHECK(f.field.d == -3);
    CHECK(f.payload == CycleFile::Payload::Decorated);
    CHECK(f.raw_terms.size() == 2);
    CHECK(f.shape_terms.size() == 2);
    CHECK(f.cusp_entries.size() == 1);
    CHECK_FALSE(f.decorated_terms.empty());
    CHECK_FALSE(f.generators.empty());

    // all three payloads agree on the volume
    set_precision_bits(f.precision);
    Float expected("2.0298832128193072500424051085");
    CHECK(abs(algvol(f.raw_chain()) - expected) < Float(1e-9));
    CHECK(abs(algvol(f.shapes_chain()) - expected) < Float(1e-9));
}

TEST_CASE("serialization round-trips the in-memory model") {
    CycleFile f = CycleFile::load(fixture("figure8.json"));
    CycleFile g = CycleFile::parse_json_text(f.to_json_text());
    CHECK(f == g);
    CycleFile p = CycleFile::load(fixture("product_bundle.json"));
    CHECK(p == CycleFile::parse_json_text(p.to_json_text()));
}

TEST_CASE("relators are checked under a representation table") {
    CycleFile f = CycleFile::load(fixture("figure8.json"));
    CHECK_FALSE(f.relators.empty());
    // identity table passes
    f.resolve_cusps(f.generators);
    // a broken table violates the relators
    auto broken = f.generators;
    testing::Rng rng(5);
    broken[0].second = testing::random_unimodular(rng, 3, 4);
    CHECK_THROWS_AS(f.resolve_cusps(broken), RelatorViolation);
}

TEST_CASE("conjugated representation tables pass and move the cusp") {
    CycleFile f = CycleFile::load(fixture("figure8.json"));
    testing::Rng rng(7);
    Mat2 h = testing::random_unimodular(rng, 3);
    Mat2 hinv = h.inverse_unimodular();
    auto table = f.generators;
    for (auto& [name, m] : table) m = h * m * hinv;
    CuspData cusps = f.resolve_cusps(table);
    CuspData orig = f.resolve_cusps(f.generators);
    CHECK(cusps.cusps[0].fixed_point == mobius_apply(h, orig.cusps[0].fixed_point));
}

TEST_CASE("input validation errors") {
    CHECK_THROWS_AS(CycleFile::parse_json_text("{"), ParseError);
    CHECK_THROWS_AS(CycleFile::parse_json_text("{\"field_d\":\"-3\",\"payload\":\"raw\"}"), ParseError);

    // determinant != 1 is rejected
    std::string bad = R"({
      "field_d": "-3", "payload": "raw",
      "generators": [{"name": "x", "matrix": ["2", "0", "0", "1"]}],
      "raw_cycle": [{"coeff": "1", "points": ["inf", "0", "1", "2"]}]
    })";
    CHECK_THROWS_AS(CycleFile::parse_json_text(bad), InvariantViolation);

    // scalars outside the declared field are rejected
    std::string wrong_field = R"({
      "field_d": "5", "payload": "shapes",
      "shapes": [{"coeff": "1", "z": "1/2+1/2*i*q"}]
    })";
    CHECK_THROWS_AS(CycleFile::parse_json_text(wrong_field), ParseError);
}

TEST_CASE("integer coefficient mode rejects fractions") {
    std::string text = R"({
      "field_d": "-3", "payload": "decorated", "coeff_mode": "Z",
      "generators": [{"name": "x", "matrix": ["1", "1", "0", "1"]}],
      "cusps": [{"fixed_point": "inf", "generator_words": ["x"]}],
      "decorated": [{"coeff": "1/2", "words": ["x"]}]
    })";
    CHECK_THROWS_AS(CycleFile::parse_json_text(text), InvariantViolation);
}

TEST_CASE("float scalar mode parses decimal values") {
    FieldSpec field{-3};
    set_precision_bits(128);
    Scalar s = Scalar::parse("1.5e0+2.25e0*i", field, false);
    CHECK_FALSE(s.is_exact());
    CHECK(s.float_value().re == Float("1.5"));
    CHECK(s.float_value().im == Float("2.25"));
    Scalar back = Scalar::parse(s.str(field), field, false);
    CHECK(almost_equal(back, s));
}

// --- CLI process-level checks: the exit-code contract and the documented
// command behaviors ---

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(PREBLOCH_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("CLI exit codes: success, input error, precondition failure") {
    CHECK(run_cli("verify " + fixture("figure8.json")) == 0);
    CHECK(run_cli("beta " + fixture("figure8.json")) == 0);
    CHECK(run_cli("degree " + fixture("figure8.json")) == 0);
    CHECK(run_cli("volume " + fixture("figure8.json")) == 0);
    CHECK(run_cli("fiveterm --quick") == 0);

    CHECK(run_cli("verify /nonexistent.json") == 1);

    // corrupted cusp fixed point: mathematical precondition failure
    CycleFile f = CycleFile::load(fixture("figure8.json"));
    f.cusp_entries[0].fixed_point_text = "7";
    write_file("/tmp/bad_cusp.json", f.to_json_text());
    CHECK(run_cli("verify /tmp/bad_cusp.json") == 2);

    // reversed orientation: the degree certificate reports -1 everywhere
    CycleFile rev = CycleFile::load(fixture("figure8.json"));
    for (auto& t : rev.raw_terms) t.coeff = -t.coeff;
    rev.payload = CycleFile::Payload::Raw;
    rev.decorated_terms.clear();
    rev.relators.clear();
    write_file("/tmp/reversed.json", rev.to_json_text());
    CHECK(run_cli("beta /tmp/reversed.json") == 2);
    CHECK(run_cli("beta /tmp/reversed.json --skip-degree") == 0);
}

TEST_CASE("CLI: conjugate shape pair needs --skip-degree and has zero volume") {
    std::string text = R"({
      "field_d": "-1", "payload": "shapes",
      "shapes": [{"coeff": "1", "z": "1*i"}, {"coeff": "1", "z": "-1*i"}]
    })";
    write_file("/tmp/conjugate_shapes.json", text);
    CHECK(run_cli("beta /tmp/conjugate_shapes.json") == 2);
    CHECK(run_cli("beta /tmp/conjugate_shapes.json --skip-degree") == 0);

    CycleFile f = CycleFile::load("/tmp/conjugate_shapes.json");
    set_precision_bits(f.precision);
    CHECK(abs(algvol(f.shapes_chain())) < Float(1e-12));
}

TEST_CASE("CLI: verify under a conjugated representation table") {
    CycleFile f = CycleFile::load(fixture("figure8.json"));
    testing::Rng rng(11);
    Mat2 h = testing::random_unimodular(rng, 3);
    Mat2 hinv = h.inverse_unimodular();
    std::string rho = "{\"images\": [";
    bool first = true;
    for (const auto& [name, m] : f.generators) {
        Mat2 c = h * m * hinv;
        if (!first) rho += ", ";
        first = false;
        rho += "{\"name\": \"" + name + "\", \"matrix\": [\"" + c.a.str(f.field) + "\", \"" +
               c.b.str(f.field) + "\", \"" + c.c.str(f.field) + "\", \"" + c.d.str(f.field) +
               "\"]}";
    }
    rho += "]}";
    write_file("/tmp/rho_conj.json", rho);
    CHECK(run_cli("verify " + fixture("figure8.json") + " --rho /tmp/rho_conj.json") == 0);
}
