#include "specsketch/spectrum_spec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "specsketch/errors.hpp"
#include "specsketch/projection.hpp"
#include "specsketch/rng.hpp"

namespace specsketch {

std::string to_string(SpectrumKind kind) {
    switch (kind) {
        case SpectrumKind::PowerLaw: return "power-law";
        case SpectrumKind::Flat: return "flat";
        case SpectrumKind::RankOne: return "rank-one";
        case SpectrumKind::SignedMix: return "signed-mix";
        case SpectrumKind::CustomList: return "custom-list";
    }
    return "power-law";
}

SpectrumKind spectrum_kind_from_string(const std::string& name) {
    if (name == "power-law" || name == "powerlaw") return SpectrumKind::PowerLaw;
    if (name == "flat") return SpectrumKind::Flat;
    if (name == "rank-one" || name == "rankone") return SpectrumKind::RankOne;
    if (name == "signed-mix" || name == "signedmix") return SpectrumKind::SignedMix;
    if (name == "custom-list" || name == "custom") return SpectrumKind::CustomList;
    throw InvalidInputError("unknown spectrum kind '" + name + "'");
}

namespace {

std::vector<double> power_law_values(std::size_t d) {
    double harmonic = 0.0;
    for (std::size_t i = 1; i <= d; ++i) harmonic += 1.0 / static_cast<double>(i);
    const double c = 1.0 / std::sqrt(harmonic);
    std::vector<double> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = c / std::sqrt(static_cast<double>(i + 1));
    return v;
}

void normalize_to_unit_frobenius(std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    if (s == 0.0) return;
    const double inv = 1.0 / std::sqrt(s);
    for (double& x : v) x *= inv;
}

}  // namespace

Spectrum target_spectrum(const SpectrumSpec& spec) {
    if (spec.dim == 0 && spec.kind != SpectrumKind::CustomList)
        throw InvalidInputError("target_spectrum: dim must be positive");
    std::vector<double> values;
    switch (spec.kind) {
        case SpectrumKind::PowerLaw:
            // Normalized by definition: c_d = (sum 1/i)^{-1/2} gives ||A||_F = 1.
            values = power_law_values(spec.dim);
            break;
        case SpectrumKind::Flat:
            values.assign(spec.dim, 1.0);
            if (spec.normalize) normalize_to_unit_frobenius(values);
            break;
        case SpectrumKind::RankOne:
            values.assign(spec.dim, 0.0);
            values[0] = 1.0;
            break;
        case SpectrumKind::SignedMix: {
            const double g = spec.negative_magnitude;
            if (!(g > 0.0) || g >= 1.0)
                throw InvalidInputError("target_spectrum: signed-mix magnitude must lie in (0,1)");
            if (spec.dim < 2)
                throw InvalidInputError("target_spectrum: signed-mix needs dim >= 2");
            values = power_law_values(spec.dim - 1);
            const double scale = std::sqrt(1.0 - g * g);
            for (double& x : values) x *= scale;
            values.push_back(-g);
            break;
        }
        case SpectrumKind::CustomList: {
            values = spec.custom_values;
            if (values.empty())
                throw InvalidInputError("target_spectrum: custom-list needs values");
            if (spec.dim != 0 && spec.dim != values.size())
                throw InvalidInputError("target_spectrum: dim disagrees with custom values");
            if (spec.normalize) normalize_to_unit_frobenius(values);
            break;
        }
    }
    return Spectrum::sorted(std::move(values));
}

SymmetricMatrix generate_matrix(const SpectrumSpec& spec, std::uint64_t seed) {
    const Spectrum lambda = target_spectrum(spec);
    const std::size_t d = lambda.size();

    switch (spec.rotation) {
        case RotationKind::Identity:
            return SymmetricMatrix::diagonal(lambda.values);
        case RotationKind::Haar: {
            const Matrix q = haar_orthonormal_columns(d, d, seed);
            Matrix ql(d, d);  // Q * diag(lambda)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) ql(i, j) = q(i, j) * lambda[j];
            return SymmetricMatrix::from_dense(matmul_abt(ql, q));
        }
        case RotationKind::Block: {
            const std::size_t b = spec.block_size;
            if (b == 0) throw InvalidInputError("generate_matrix: block size must be positive");
            // A seeded permutation scatters the support over the full index
            // space; the block layout is a construction device for a sparse
            // matrix with a closed-form spectrum, not a layout promise.
            std::vector<std::size_t> perm(d);
            for (std::size_t i = 0; i < d; ++i) perm[i] = i;
            GaussianStream shuffle(derive_seed(seed, 0));
            for (std::size_t i = d; i-- > 1;)
                std::swap(perm[i], perm[shuffle.next_below(i + 1)]);

            std::vector<SparseEntry> entries;
            std::size_t start = 0;
            std::size_t block_index = 0;
            while (start < d) {
                const std::size_t size = std::min(b, d - start);
                Matrix block(size, size);
                if (size == 1) {
                    block(0, 0) = lambda[start];
                } else {
                    const Matrix q = haar_orthonormal_columns(
                        size, size, derive_seed(seed, 1 + block_index));
                    Matrix ql(size, size);
                    for (std::size_t i = 0; i < size; ++i)
                        for (std::size_t j = 0; j < size; ++j)
                            ql(i, j) = q(i, j) * lambda[start + j];
                    block = matmul_abt(ql, q);
                }
                for (std::size_t i = 0; i < size; ++i)
                    for (std::size_t j = i; j < size; ++j) {
                        std::size_t pi = perm[start + i];
                        std::size_t pj = perm[start + j];
                        if (pi > pj) std::swap(pi, pj);
                        entries.push_back({pi, pj, 0.5 * (block(i, j) + block(j, i))});
                    }
                start += size;
                ++block_index;
            }
            return SymmetricMatrix::from_sparse(d, std::move(entries));
        }
    }
    throw InvalidInputError("generate_matrix: unknown rotation kind");
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw InvalidInputError("spectrum spec: bad boolean '" + v + "'");
}

}  // namespace

SpectrumSpec parse_spectrum_spec(std::istream& in) {
    SpectrumSpec spec;
    bool have_kind = false;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidInputError("spectrum spec: expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "kind") {
            spec.kind = spectrum_kind_from_string(value);
            have_kind = true;
        } else if (key == "d" || key == "dim") {
            spec.dim = static_cast<std::size_t>(std::stoull(value));
        } else if (key == "normalize") {
            spec.normalize = parse_bool(value);
        } else if (key == "neg" || key == "negative_magnitude") {
            spec.negative_magnitude = std::stod(value);
        } else if (key == "values") {
            std::istringstream vs(value);
            double x;
            spec.custom_values.clear();
            while (vs >> x) spec.custom_values.push_back(x);
        } else if (key == "rotation") {
            if (value == "haar") spec.rotation = RotationKind::Haar;
            else if (value == "identity" || value == "diagonal")
                spec.rotation = RotationKind::Identity;
            else if (value == "block") spec.rotation = RotationKind::Block;
            else throw InvalidInputError("spectrum spec: bad rotation '" + value + "'");
        } else if (key == "block") {
            spec.block_size = static_cast<std::size_t>(std::stoull(value));
            spec.rotation = RotationKind::Block;
        } else {
            throw InvalidInputError("spectrum spec: unknown key '" + key + "'");
        }
    }
    if (!have_kind) throw InvalidInputError("spectrum spec: missing 'kind'");
    if (spec.kind == SpectrumKind::CustomList && spec.dim == 0)
        spec.dim = spec.custom_values.size();
    return spec;
}

SpectrumSpec parse_spectrum_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open spec file: " + path);
    return parse_spectrum_spec(in);
}

}  // namespace specsketch
