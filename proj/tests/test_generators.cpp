#include <doctest.h>

#include <cmath>
#include <sstream>

#include "specsketch/eigensolver.hpp"
#include "specsketch/errors.hpp"
#include "specsketch/norms.hpp"
#include "specsketch/spectrum_spec.hpp"

using namespace specsketch;

TEST_SUITE_BEGIN("bench-cli");

TEST_CASE("power-law closed form at d = 4") {
    SpectrumSpec spec;
    spec.kind = SpectrumKind::PowerLaw;
    spec.dim = 4;
    const Spectrum s = target_spectrum(spec);
    const double c4 = 1.0 / std::sqrt(25.0 / 12.0);  // (1 + 1/2 + 1/3 + 1/4)^{-1/2}
    CHECK(s[0] == doctest::Approx(c4).epsilon(1e-12));
    CHECK(s[1] == doctest::Approx(c4 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(s[2] == doctest::Approx(c4 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(s[3] == doctest::Approx(c4 / 2.0).epsilon(1e-12));
    double sq = 0.0;
    for (double v : s.values) sq += v * v;
    CHECK(sq == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("flat spectrum normalizes to 1/3 at d = 9") {
    SpectrumSpec spec;
    spec.kind = SpectrumKind::Flat;
    spec.dim = 9;
    const Spectrum s = target_spectrum(spec);
    for (double v : s.values) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("signed-mix hits the requested smallest eigenvalue") {
    SpectrumSpec spec;
    spec.kind = SpectrumKind::SignedMix;
    spec.dim = 24;
    spec.negative_magnitude = 0.3;
    const SymmetricMatrix a = generate_matrix(spec, 6);
    const Spectrum s = sym_eigenvalues(a);
    CHECK(s.values.back() == doctest::Approx(-0.3).epsilon(1e-8));
    CHECK(frobenius_norm(a) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("generated matrices carry unit Frobenius norm when normalized") {
    for (auto kind : {SpectrumKind::PowerLaw, SpectrumKind::Flat, SpectrumKind::SignedMix}) {
        SpectrumSpec spec;
        spec.kind = kind;
        spec.dim = 16;
        const SymmetricMatrix a = generate_matrix(spec, 2);
        CHECK(std::abs(frobenius_norm(a) - 1.0) <= 1e-8);
    }
}

TEST_CASE("haar rotation preserves the target spectrum") {
    SpectrumSpec spec;
    spec.kind = SpectrumKind::CustomList;
    spec.custom_values = {4.0, 1.0, -0.5, -2.0};
    spec.normalize = false;
    const Spectrum truth = target_spectrum(spec);
    const SymmetricMatrix a = generate_matrix(spec, 77);
    const Spectrum got = sym_eigenvalues(a);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(got[i] == doctest::Approx(truth[i]).epsilon(1e-10));
}

TEST_CASE("block rotation is sparse and keeps the spectrum") {
    SpectrumSpec spec;
    spec.kind = SpectrumKind::PowerLaw;
    spec.dim = 40;
    spec.rotation = RotationKind::Block;
    spec.block_size = 8;
    const SymmetricMatrix a = generate_matrix(spec, 11);
    CHECK(a.is_sparse());
    CHECK(a.nnz() <= 40 * 8);  // block-diagonal support only
    const Spectrum truth = target_spectrum(spec);
    const Spectrum got = sym_eigenvalues(a);
    for (std::size_t i = 0; i < 40; ++i)
        CHECK(got[i] == doctest::Approx(truth[i]).epsilon(1e-9));
}

TEST_CASE("identity rotation produces the diagonal matrix") {
    SpectrumSpec spec;
    spec.kind = SpectrumKind::Flat;
    spec.dim = 5;
    spec.rotation = RotationKind::Identity;
    const SymmetricMatrix a = generate_matrix(spec, 0);
    const double v = 1.0 / std::sqrt(5.0);
    for (std::size_t i = 0; i < 5; ++i) CHECK(a.at(i, i) == doctest::Approx(v));
    CHECK(a.at(0, 1) == 0.0);
}

TEST_CASE("spec files parse and validate") {
    std::stringstream good("# demo spectrum\nkind = signed-mix\nd = 32\nneg = 0.25\n");
    const SpectrumSpec spec = parse_spectrum_spec(good);
    CHECK(spec.kind == SpectrumKind::SignedMix);
    CHECK(spec.dim == 32);
    CHECK(spec.negative_magnitude == doctest::Approx(0.25));

    std::stringstream custom("kind = custom-list\nvalues = 3 1 -2\nnormalize = false\n");
    const SpectrumSpec cs = parse_spectrum_spec(custom);
    CHECK(cs.dim == 3);
    CHECK(target_spectrum(cs).values == std::vector<double>{3.0, 1.0, -2.0});

    std::stringstream missing("d = 8\n");
    CHECK_THROWS_AS(parse_spectrum_spec(missing), InvalidInputError);
    std::stringstream unknown("kind = flat\nd = 8\nwhatever = 3\n");
    CHECK_THROWS_AS(parse_spectrum_spec(unknown), InvalidInputError);
    std::stringstream badneg("kind = signed-mix\nd = 8\nneg = 1.5\n");
    CHECK_THROWS_AS(target_spectrum(parse_spectrum_spec(badneg)), InvalidInputError);
}

TEST_SUITE_END();
