#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "augframes/certify.hpp"
#include "augframes/error.hpp"
#include "augframes/json_io.hpp"
#include "augframes_cli/cli.hpp"

using namespace augframes;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json j() const { return json::parse(out); }
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "augframes_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("ring elements keep big integers exact") {
    RingElement a(mpz_class("123456789012345678901234567890"), mpz_class("-98765432109876543210"));
    json j = to_json(a);
    CHECK(j["x"] == "123456789012345678901234567890");
    CHECK(ring_element_from_json(j) == a);
    CHECK(ring_element_from_json(json{{"x", 3}, {"y", -4}}) == RingElement(3, -4));
    CHECK_THROWS_AS(ring_element_from_json(json{{"x", "1.5"}, {"y", "0"}}), Error);
    CHECK_THROWS_AS(ring_element_from_json(json{{"x", "1"}}), Error);
  }

  TEST_CASE("field elements use p/q strings") {
    FieldElement z(mpq_class(-3, 4), mpq_class(2));
    json j = to_json(z);
    CHECK(j["x"] == "-3/4");
    CHECK(j["y"] == "2");
    CHECK(field_element_from_json(j) == z);
  }

  TEST_CASE("lines carry a checked key") {
    Ring g = make_ring(-1);
    Line l = canonical_line(Vector{RingElement(0, 1), RingElement(1, 1)}, g);
    json j = to_json(l);
    CHECK(line_from_json(j, g) == l);
    json bad = j;
    bad["key"] = "00";
    CHECK_THROWS_AS(line_from_json(bad, g), Error);
  }

  TEST_CASE("ring specs") {
    CHECK(ring_from_spec("d=-7").d() == -7);
    CHECK_THROWS_AS(ring_from_spec("-7"), Error);
    CHECK_THROWS_AS(ring_from_spec("d=abc"), Error);
  }

  TEST_CASE("complex dumps round-trip byte for byte") {
    for (long d : {-1L, -3L, -2L, 7L}) {
      for (FrameKind k : {FrameKind::B, FrameKind::BA}) {
        FrameComplex fc = build_complex(make_ring(d), 2, 0, 2, k);
        std::string first = to_json(fc).dump();
        FrameComplex back = frame_complex_from_json(json::parse(first));
        CHECK(back.vertices.size() == fc.vertices.size());
        CHECK(back.cx.faces == fc.cx.faces);
        CHECK(to_json(back).dump() == first);
      }
    }
  }
}

TEST_SUITE("cli") {
  TEST_CASE("ring info") {
    Result r = run_cli({"ring", "info", "-d", "-3"});
    REQUIRE(r.code == cli::kExitOk);
    json j = r.j();
    CHECK(j["mode"] == "REM1");
    CHECK(j["torsion"].size() == 6);
    CHECK(j["generated_by_units"] == true);
    Result s = run_cli({"ring", "info", "-d", "7"});
    CHECK(s.j()["fundamental"] == json{{"x", "8"}, {"y", "3"}});
    CHECK(s.j()["span_modulus"] == "3");
  }

  TEST_CASE("classify") {
    Result r = run_cli({"classify", "--from", "-100", "--to", "100"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.j()["norm_euclidean_not_unit_generated"] == json{-11, -7, -2, 6, 7, 11, 17, 19, 33, 37, 41, 57, 73});
    CHECK(run_cli({"classify", "--from", "5", "--to", "1"}).code == cli::kExitUsage);
  }

  TEST_CASE("verify") {
    Result r = run_cli({"verify", "lem1", "-d", "-1", "--grid", "12"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.j()["failures"] == json::array());
    CHECK(r.j()["tested"] == 625);
    Result neg = run_cli({"verify", "lem1", "-d", "-7", "--grid", "12", "--jobs", "2"});
    CHECK(neg.code == (neg.j()["failures"].empty() ? cli::kExitOk : cli::kExitCheckFailed));
    CHECK(run_cli({"verify", "lem0", "-d", "-3", "--grid", "30"}).code == cli::kExitOk);
    CHECK(run_cli({"verify", "lem1", "-d", "7"}).code == cli::kExitUsage);
  }

  TEST_CASE("complex build and homology") {
    auto path = scratch("ba2_gauss_b2.json");
    Result b = run_cli({"complex", "build", "--kind", "BA", "-d", "-1", "-n", "2", "-m", "0", "--bound", "2", "--out",
                        path.string()});
    REQUIRE(b.code == cli::kExitOk);
    CHECK(b.j()["problems"] == json::array());
    std::string dumped = read_file(path);
    Result h = run_cli({"homology", "--in", path.string()});
    REQUIRE(h.code == cli::kExitOk);
    CHECK(h.j()["degrees"]["0"]["betti"] == 0);
    CHECK(h.j()["degrees"]["1"]["betti"] == 0);
    // Rebuilding writes the same bytes.
    REQUIRE(run_cli({"complex", "build", "--kind", "BA", "-d", "-1", "-n", "2", "-m", "0", "--bound", "2", "--out",
                     path.string()})
                .code == cli::kExitOk);
    CHECK(read_file(path) == dumped);
  }

  TEST_CASE("detours") {
    Result b = run_cli({"detour", "builtin", "-d", "-11"});
    CHECK(b.code == cli::kExitOk);
    CHECK(b.j()["valid"] == true);
    CHECK(run_cli({"detour", "builtin", "-d", "-1"}).code == cli::kExitUsage);
    CHECK(run_cli({"detour", "construct", "-d", "7"}).code == cli::kExitOk);
    CHECK(run_cli({"detour", "construct", "-d", "-1"}).code == cli::kExitUsage);

    auto good = scratch("detour_good.json");
    write_file(good, R"({"path": [{"coords": [{"x": "0", "y": "1"}, {"x": "1", "y": "0"}]},
                                   {"coords": [{"x": "1", "y": "0"}, {"x": "0", "y": "-1"}]},
                                   {"coords": [{"x": "0", "y": "0"}, {"x": "1", "y": "0"}]}],
                         "r1": {"x": "0", "y": "1"}, "r2": {"x": "0", "y": "0"}})");
    CHECK(run_cli({"detour", "verify", "-d", "-2", "--path", good.string()}).code == cli::kExitOk);
    // Over Z[i], (i, 1) and (1, -i) span the same line: malformed input.
    CHECK(run_cli({"detour", "verify", "-d", "-1", "--path", good.string()}).code == cli::kExitUsage);
    auto gauss = scratch("detour_gauss.json");
    write_file(gauss, R"({"path": [{"coords": [{"x": "1", "y": "0"}, {"x": "1", "y": "0"}]},
                                    {"coords": [{"x": "0", "y": "0"}, {"x": "1", "y": "0"}]}],
                          "r1": {"x": "1", "y": "0"}, "r2": {"x": "0", "y": "0"}})");
    Result g = run_cli({"detour", "verify", "-d", "-1", "--path", gauss.string()});
    CHECK(g.code == cli::kExitCheckFailed);
    CHECK(g.j()["checks"]["class_separated"] == false);
    CHECK(run_cli({"detour", "verify", "-d", "-2"}).code == cli::kExitUsage);
    auto broken = scratch("broken.json");
    write_file(broken, "{not json");
    CHECK(run_cli({"detour", "verify", "-d", "-2", "--path", broken.string()}).code == cli::kExitUsage);
  }

  TEST_CASE("byk check") {
    auto f = scratch("chain.json");
    Ring s7 = make_ring(7);
    SymbolChain c;
    std::vector<Vector> loop{Vector{RingElement(1), RingElement(0)}, Vector{RingElement(0, 1), RingElement(1)},
                             Vector{RingElement(8), RingElement(-3)}, Vector{RingElement(-3), RingElement(1)}};
    for (std::size_t i = 0; i < loop.size(); ++i) c.terms.push_back({1, {{loop[i], loop[(i + 1) % 4]}, 1}});
    write_file(f, json{{"ring", "d=7"}, {"chain", to_json(c)}}.dump());
    Result r = run_cli({"byk", "check", "--in", f.string()});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.j()["in_kernel"] == true);
    CHECK(r.j()["augmentation"] == "0");
  }

  TEST_CASE("certify noninj") {
    Result r = run_cli({"certify", "noninj", "-d", "7"});
    REQUIRE(r.code == cli::kExitOk);
    json j = r.j();
    CHECK(j["type"] == "noninjectivity");
    CHECK(j["status"] == "Certificate");
    CHECK(j["valid"] == true);
    CHECK(j["chain"].size() == 4);
    CHECK(verify_certificate_json(j));

    Result e = run_cli({"certify", "noninj", "-d", "-3"});
    CHECK(e.code == cli::kExitOk);
    CHECK(e.j()["status"] == "NoCertificate");
    CHECK(run_cli({"certify", "noninj", "-d", "69"}).code == cli::kExitUsage);
  }

  TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"ring", "info"}).code == cli::kExitUsage);
    CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run_cli({"ring", "info", "-d", "12"}).code == cli::kExitUsage);
    CHECK(run_cli({"complex", "build", "--kind", "C", "-d", "-1", "-n", "2", "-m", "0", "--bound", "1", "--out",
                   scratch("x.json").string()})
              .code == cli::kExitUsage);
    CHECK(run_cli({"homology", "--in", scratch("missing.json").string()}).code == cli::kExitUsage);
    Result help = run_cli({"--help"});
    CHECK(help.code == cli::kExitOk);
    CHECK(help.out.find("certify") != std::string::npos);
  }
}
