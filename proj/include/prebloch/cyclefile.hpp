#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prebloch/bundle.hpp"
#include "prebloch/evmaps.hpp"
#include "prebloch/halfspace.hpp"

namespace prebloch {

// Structured-text cycle file (JSON syntax, all numbers as strings). A file
// may carry several payloads; exactly one is marked primary.
struct CycleFile {
    enum class Payload { Decorated, Raw, Shapes };

    FieldSpec field;
    unsigned precision = 212;
    CoeffMode mode = CoeffMode::Q;
    bool exact_scalars = true;
    Payload payload = Payload::Raw;
    std::optional<std::string> c0_text;

    std::vector<std::pair<std::string, Mat2>> generators;

    struct CuspEntry {
        std::string fixed_point_text;
        std::vector<std::string> generator_words;  // words over the table, or
        std::vector<Mat2> generator_matrices;      // explicit matrices
    };
    std::vector<CuspEntry> cusp_entries;

    struct DecoratedTerm {
        Rational coeff;
        bool cone = false;
        int cusp = 1;
        std::vector<std::string> words;
        std::string coset_word;  // cones only; empty means identity
    };
    std::vector<DecoratedTerm> decorated_terms;

    struct RawTerm {
        Rational coeff;
        std::vector<std::string> point_texts;  // 4 points
    };
    std::vector<RawTerm> raw_terms;

    struct ShapeTerm {
        Rational coeff;
        std::string z_text;
    };
    std::vector<ShapeTerm> shape_terms;

    std::vector<std::string> relators;

    // --- resolution against a generator table (identity or a representation) ---

    Mat2 resolve_word(const std::string& word,
                      const std::vector<std::pair<std::string, Mat2>>& table) const;

    // Cusp data with generators resolved through `table` and fixed points
    // recomputed from the resolved parabolics when the table differs from the
    // stored one. Relators are checked against `table` (RelatorViolation).
    CuspData resolve_cusps(const std::vector<std::pair<std::string, Mat2>>& table) const;

    Chain<DecoratedSimplex> decorated_chain(const std::vector<std::pair<std::string, Mat2>>& table) const;
    Chain<IdealTuple> raw_chain() const;
    // Shape payload as a raw chain of (inf, 0, 1, z) tuples.
    Chain<IdealTuple> shapes_chain() const;

    ProjPoint base_point() const;  // c0, default 0

    static CycleFile load(const std::string& path);
    void save(const std::string& path) const;
    std::string to_json_text() const;
    static CycleFile parse_json_text(const std::string& text);

    friend bool operator==(const CycleFile&, const CycleFile&);
};

bool operator==(const CycleFile::CuspEntry&, const CycleFile::CuspEntry&);
bool operator==(const CycleFile::DecoratedTerm&, const CycleFile::DecoratedTerm&);
bool operator==(const CycleFile::RawTerm&, const CycleFile::RawTerm&);
bool operator==(const CycleFile::ShapeTerm&, const CycleFile::ShapeTerm&);

// Representation table: parsed from {"images": [{"name":..., "matrix": [...]}]}.
std::vector<std::pair<std::string, Mat2>> load_representation(const std::string& path,
                                                              const FieldSpec& field, bool exact_scalars);

// Emits the file skeleton of a bundle-built cycle (decorated payload, with
// generator words, cusp table and the monodromy relators).
CycleFile bundle_to_file(const BundleCycle& cycle, const BundleData& data, const FieldSpec& field);

}  // namespace prebloch
