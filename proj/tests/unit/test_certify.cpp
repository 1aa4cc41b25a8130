#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "augframes/certify.hpp"
#include "augframes/error.hpp"

using namespace augframes;

namespace {

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an augframes::Error");
  return Errc::ParseError;
}

Vector vec(RingElement a, RingElement b) { return Vector{std::move(a), std::move(b)}; }
RingElement delta(long x, long y) { return {x, y}; }

const Vector e1 = vec(1, 0);
const Vector e2 = vec(0, 1);

const std::set<long> kNotUnitGenerated = {-11, -7, -2, 6, 7, 11, 17, 19, 33, 37, 41, 57, 73};

long zdet(ZLine a, ZLine b) { return a[0] * b[1] - a[1] * b[0]; }

bool same_zline(ZLine a, ZLine b) { return normalize_zline(a) == normalize_zline(b); }

void check_zpath(const std::vector<ZLine>& p, ZLine avoid) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) REQUIRE(std::labs(zdet(p[i], p[i + 1])) == 1);
  for (const ZLine& v : p) REQUIRE_FALSE(same_zline(v, avoid));
}

RingElement random_element(std::mt19937_64& rng, long r) {
  std::uniform_int_distribution<long> c(-r, r);
  return {c(rng), c(rng)};
}

// Random basis of O^n by elementary column operations on the identity.
std::vector<Vector> random_basis(std::mt19937_64& rng, const Ring& ring, std::size_t n, int steps) {
  std::vector<Vector> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(standard_basis(n, i));
  std::uniform_int_distribution<std::size_t> col(0, n - 1);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = col(rng), j = col(rng);
    if (i == j) continue;
    b[i] = b[i] + scale(random_element(rng, 2), b[j], ring);
  }
  return b;
}

RingElement random_unit(std::mt19937_64& rng, const Ring& ring) {
  std::vector<RingElement> us = window_units(ring, 2);
  std::uniform_int_distribution<std::size_t> pick(0, us.size() - 1);
  return us[pick(rng)];
}

// The relation accompanying the loop through (1,0), (sqrt 7, 1), (8,-3), (-3,1).
SymbolChain mult_units_chain() {
  std::vector<Vector> loop{e1, vec(delta(0, 1), 1), vec(8, -3), vec(-3, 1)};
  SymbolChain c;
  for (std::size_t i = 0; i < loop.size(); ++i)
    c.terms.push_back({1, ModularSymbol{{loop[i], loop[(i + 1) % loop.size()]}, 1}});
  return c;
}

SymbolChain negate(SymbolChain c) {
  for (auto& t : c.terms) t.coeff = -t.coeff;
  return c;
}

bool same_normalized(const SymbolChain& a, const SymbolChain& b, const Ring& ring) {
  return to_json(normalize_chain(a, ring)) == to_json(normalize_chain(b, ring));
}

}  // namespace

TEST_SUITE("certify") {
  TEST_CASE("unit span classes") {
    Ring g = make_ring(-1);
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y) CHECK(unit_span_class({x, y}, g).trivial());
    Ring r = make_ring(-2);
    SpanClass c = unit_span_class(delta(0, 1), r);
    CHECK(c.modulus == 0);
    CHECK(c.residue == 1);
    CHECK_FALSE(c == unit_span_class(0, r));
    Ring s7 = make_ring(7);
    SpanClass c7 = unit_span_class(delta(3, 1), s7);
    CHECK(c7.modulus == 3);
    CHECK(c7.residue == 1);
    CHECK(unit_span_class(delta(5, 3), s7) == unit_span_class(0, s7));
  }

  TEST_CASE("printed detours verify") {
    Ring r2 = make_ring(-2);
    DetourCertificate c2 = detour_verify(r2, {vec(delta(0, 1), 1), vec(1, delta(0, -1)), e2}, delta(0, 1), 0);
    CHECK(c2.valid);
    CHECK(c2.checks.edges_unimodular);
    CHECK(c2.checks.avoids_e1);
    CHECK(c2.checks.endpoints_match);
    CHECK(c2.checks.class_separated);

    Ring r11 = make_ring(-11);
    DetourCertificate c11 = detour_verify(
        r11, {vec(delta(0, 1), 1), vec(2, delta(1, -1)), vec(delta(0, 1), 2), vec(1, delta(1, -1)), e2}, delta(0, 1), 0);
    CHECK(c11.valid);

    Ring r7 = make_ring(-7);
    DetourCertificate c7 =
        detour_verify(r7, {vec(delta(0, 1), 1), vec(delta(3, -1), delta(0, -1)), vec(delta(-1, 2), 1)}, delta(0, 1),
                      delta(-1, 2));
    CHECK(c7.valid);

    for (long d : {-2L, -7L, -11L}) {
      Ring ring = make_ring(d);
      auto b = builtin_detour(ring);
      REQUIRE(b.has_value());
      CHECK(detour_verify(ring, b->path, b->r1, b->r2).valid);
    }
    auto b7 = builtin_detour(r7);
    REQUIRE(b7.has_value());
    CHECK(b7->path == std::vector<Vector>{vec(delta(0, 1), 1), vec(delta(3, -1), delta(0, -1)), vec(delta(-1, 2), 1)});
    CHECK_FALSE(builtin_detour(make_ring(-1)).has_value());
  }

  TEST_CASE("detours fail in rings generated by units") {
    Ring g = make_ring(-1);
    DetourCertificate c = detour_verify(g, {vec(1, 1), e2}, 1, 0);
    CHECK(c.checks.edges_unimodular);
    CHECK(c.checks.avoids_e1);
    CHECK(c.checks.endpoints_match);
    CHECK_FALSE(c.checks.class_separated);
    CHECK_FALSE(c.valid);
    // A path through e_1 fails avoidance.
    CHECK_FALSE(detour_verify(make_ring(-2), {vec(delta(0, 1), 1), e1, e2}, delta(0, 1), 0).checks.avoids_e1);
  }

  TEST_CASE("malformed detour paths") {
    Ring r = make_ring(-2);
    CHECK(code_of([&] { detour_verify(r, {}, 0, 0); }) == Errc::MalformedPath);
    CHECK(code_of([&] { detour_verify(r, {vec(2, 0), e2}, 0, 0); }) == Errc::MalformedPath);
    CHECK(code_of([&] { detour_verify(r, {e2, vec(0, -1)}, 0, 0); }) == Errc::MalformedPath);
  }

  TEST_CASE("Farey paths") {
    auto p = path_b2z({0, 1}, {1, 1}, {1, 0});
    REQUIRE(p.size() == 2);
    CHECK(zdet(p[0], p[1]) == -1);
    auto q = path_b2z({8, -3}, {0, 1}, {1, 0});
    REQUIRE(q.size() >= 2);
    CHECK(same_zline(q.front(), {8, -3}));
    CHECK(same_zline(q.back(), {0, 1}));
    check_zpath(q, {1, 0});
    CHECK(path_b2z({3, 5}, {-3, -5}, {1, 0}).empty());
    auto h = path_b2z_to_height_one({8, -3}, {1, 0});
    REQUIRE(!h.empty());
    CHECK(std::labs(normalize_zline(h.back())[1]) == 1);
    check_zpath(h, {1, 0});
  }

  TEST_CASE("Farey paths between random lines avoid the forbidden line") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<long> c(-60, 60);
    auto random_zline = [&] {
      while (true) {
        long a = c(rng), b = c(rng);
        if (std::gcd(a, b) == 1) return ZLine{a, b};
      }
    };
    for (int t = 0; t < 300; ++t) {
      ZLine from = random_zline(), to = random_zline(), avoid = random_zline();
      if (same_zline(from, avoid) || same_zline(to, avoid)) continue;
      auto p = path_b2z(from, to, avoid);
      if (same_zline(from, to)) {
        REQUIRE(p.empty());
        continue;
      }
      REQUIRE(same_zline(p.front(), from));
      REQUIRE(same_zline(p.back(), to));
      check_zpath(p, avoid);
    }
  }

  TEST_CASE("detour construction") {
    Ring r7 = make_ring(-7);
    DetourCertificate c = detour_construct(r7);
    CHECK(c.valid);
    CHECK(c.r2 == delta(-1, 2));

    Ring s7 = make_ring(7);
    DetourCertificate d = detour_construct(s7);
    CHECK(d.valid);
    REQUIRE(d.path.size() >= 3);
    CHECK(d.path[0] == vec(delta(0, 1), 1));
    CHECK(d.path[1] == vec(8, -3));
    CHECK(d.path.back() == vec(-3, 1));
    CHECK(d.r1 == delta(0, 1));
    CHECK(d.r2 == RingElement(-3));

    for (long dd : kNotUnitGenerated) {
      CAPTURE(dd);
      CHECK(detour_construct(make_ring(dd)).valid);
    }
    CHECK(code_of([] { detour_construct(make_ring(-1)); }) == Errc::NoDetourExpected);
    CHECK(code_of([] { detour_construct(make_ring(5)); }) == Errc::NoDetourExpected);
  }

  TEST_CASE("symbol normalization") {
    Ring g = make_ring(-1);
    ModularSymbol swapped = symbol_normalize({{e2, e1}, 1}, g);
    ModularSymbol plain = symbol_normalize({{e1, e2}, 1}, g);
    CHECK(swapped.vectors == plain.vectors);
    CHECK(swapped.sign == -plain.sign);
    ModularSymbol scaled = symbol_normalize({{vec(delta(0, 1), 0), e2}, 1}, g);
    CHECK(scaled.vectors == plain.vectors);
    CHECK(scaled.sign == plain.sign);
    CHECK(code_of([&] { symbol_normalize({{e1, vec(1, 2)}, 1}, g); }) == Errc::NotABasis);

    std::mt19937_64 rng(52);
    for (long d : {-1L, -3L, -2L, 7L}) {
      Ring ring = make_ring(d);
      for (int t = 0; t < 125; ++t) {
        std::size_t n = 2 + t % 2;
        ModularSymbol s{random_basis(rng, ring, n, 6), t % 3 == 0 ? -1 : 1};
        ModularSymbol once = symbol_normalize(s, ring);
        ModularSymbol twice = symbol_normalize(once, ring);
        REQUIRE(once.vectors == twice.vectors);
        REQUIRE(once.sign == twice.sign);
      }
    }
  }

  TEST_CASE("relation three") {
    Ring g = make_ring(-1);
    SymbolChain r = apply_relation3({{e1, e2}, 1}, 0, 1, g);
    SymbolChain want{{{1, {{vec(1, 1), e2}, 1}}, {-1, {{vec(1, 1), e1}, 1}}}};
    CHECK(same_normalized(r, want, g));
    CHECK(apartment_image_2(r, g) == apartment_image_2(SymbolChain{{{1, {{e1, e2}, 1}}}}, g));
    CHECK(code_of([&] { apply_relation3({{e1, e2}, 1}, 0, 2, g); }) == Errc::SlotOutOfRange);
    CHECK(code_of([&] { apply_relation3({{e1, e2}, 1}, 1, 1, g); }) == Errc::SlotOutOfRange);
    std::vector<Vector> b3{standard_basis(3, 0), standard_basis(3, 1), standard_basis(3, 2)};
    SymbolChain r3 = apply_relation3({b3, 1}, 0, 2, g);
    CHECK(r3.terms.size() == 2);
    CHECK(code_of([&] { apartment_image_2(r3, g); }) == Errc::RankMismatch);
  }

  TEST_CASE("apartment image") {
    Ring g = make_ring(-1);
    FormalLineSum img = apartment_image_2(SymbolChain{{{1, {{e1, e2}, 1}}}}, g);
    REQUIRE(img.terms.size() == 2);
    CHECK(img.terms.at(canonical_line(e1, g).key).second == 1);
    CHECK(img.terms.at(canonical_line(e2, g).key).second == -1);
    CHECK(img.augmentation() == 0);

    Ring s7 = make_ring(7);
    CHECK(apartment_image_2(mult_units_chain(), s7).is_zero());
  }

  TEST_CASE("apartment image is invariant under the relations") {
    std::mt19937_64 rng(53);
    for (long d : {-1L, -3L, -2L, -7L, 7L, 6L}) {
      Ring ring = make_ring(d);
      for (int t = 0; t < 200; ++t) {
        SymbolChain chain;
        std::uniform_int_distribution<long> coeff(-3, 3);
        for (int k = 0; k < 3; ++k) chain.terms.push_back({coeff(rng), {random_basis(rng, ring, 2, 6), 1}});
        const FormalLineSum before = apartment_image_2(chain, ring);
        REQUIRE(before.augmentation() == 0);
        REQUIRE(apartment_image_2(normalize_chain(chain, ring), ring) == before);

        // Relation (1): swap with a sign; relation (2): unit scaling.
        SymbolChain moved = chain;
        for (auto& term : moved.terms) {
          if (rng() % 2) {
            std::swap(term.symbol.vectors[0], term.symbol.vectors[1]);
            term.symbol.sign = -term.symbol.sign;
          }
          std::size_t k = rng() % 2;
          term.symbol.vectors[k] = scale(random_unit(rng, ring), term.symbol.vectors[k], ring);
        }
        REQUIRE(apartment_image_2(moved, ring) == before);

        // Relation (3) on a random term, repeatedly.
        SymbolChain rewritten = chain;
        for (int step = 0; step < 10; ++step) {
          std::size_t at = rng() % rewritten.terms.size();
          ChainTerm term = rewritten.terms[at];
          std::size_t i = rng() % 2;
          SymbolChain rep = apply_relation3(term.symbol, i, 1 - i, ring);
          rewritten.terms.erase(rewritten.terms.begin() + static_cast<long>(at));
          for (auto& x : rep.terms) rewritten.terms.push_back({x.coeff * term.coeff, x.symbol});
        }
        REQUIRE(apartment_image_2(rewritten, ring) == before);
      }
    }
  }

  TEST_CASE("loop certificates") {
    Ring s7 = make_ring(7);
    LoopCertificate c = loop_nontrivial_certificate(s7, {e1, vec(delta(0, 1), 1), vec(8, -3), vec(-3, 1)});
    CHECK(c.valid);
    CHECK(c.passage == 0);
    CHECK_FALSE(c.left_class == c.right_class);

    Ring r2 = make_ring(-2);
    CHECK(loop_nontrivial_certificate(r2, {e1, vec(delta(0, 1), 1), vec(1, delta(0, -1)), e2}).valid);

    Ring g = make_ring(-1);
    CHECK_FALSE(loop_nontrivial_certificate(g, {e1, vec(1, 1), e2}).valid);
    CHECK(code_of([&] { loop_nontrivial_certificate(g, {e1, e2}); }) == Errc::NotALoop);
    CHECK(code_of([&] { loop_nontrivial_certificate(g, {e2, vec(1, 1), vec(2, 1)}); }) == Errc::NotALoop);
    CHECK(code_of([&] { loop_nontrivial_certificate(g, {e1, vec(1, 1), vec(0, 1), e1}); }) == Errc::NotALoop);
  }

  TEST_CASE("non-injectivity bundles") {
    for (long d : kNormEuclideanD) {
      Ring ring = make_ring(d);
      NoninjectivityBundle b = noninjectivity_report(ring);
      CAPTURE(d);
      if (!kNotUnitGenerated.count(d)) {
        CHECK_FALSE(b.has_certificate);
        CHECK_FALSE(b.reason.empty());
        continue;
      }
      REQUIRE(b.has_certificate);
      CHECK(b.valid);
      REQUIRE(b.loop.has_value());
      CHECK(b.loop->valid);
      CHECK_FALSE(b.loop->left_class == b.loop->right_class);
      CHECK(b.image.is_zero());
      CHECK(apartment_image_2(b.chain, ring).is_zero());
      CHECK(verify_certificate_json(to_json(b)));
      REQUIRE(b.detour.has_value());
      CHECK(verify_certificate_json(to_json(*b.detour)));
      CHECK(verify_certificate_json(to_json(*b.loop)));
    }

    Ring s7 = make_ring(7);
    NoninjectivityBundle b7 = noninjectivity_report(s7);
    bool match = same_normalized(b7.chain, mult_units_chain(), s7) ||
                 same_normalized(b7.chain, negate(mult_units_chain()), s7);
    CHECK(match);
  }

  TEST_CASE("tampered certificates are rejected") {
    Ring s7 = make_ring(7);
    nlohmann::json j = to_json(noninjectivity_report(s7));
    REQUIRE(verify_certificate_json(j));

    nlohmann::json bad_path = j;
    bad_path["detour"]["path"][1]["coords"][0]["x"] = "9";
    CHECK_FALSE(verify_certificate_json(bad_path));

    nlohmann::json bad_check = j;
    bad_check["checks"]["image_zero"] = false;
    CHECK_FALSE(verify_certificate_json(bad_check));

    nlohmann::json bad_chain = j;
    bad_chain["chain"][0]["coeff"] = "2";
    CHECK_FALSE(verify_certificate_json(bad_chain));

    nlohmann::json bad_ring = j;
    bad_ring["ring"] = "d=-1";
    CHECK_FALSE(verify_certificate_json(bad_ring));

    nlohmann::json d = to_json(detour_construct(make_ring(-2)));
    REQUIRE(verify_certificate_json(d));
    d["r2"]["y"] = "1";
    CHECK_FALSE(verify_certificate_json(d));
  }
}
