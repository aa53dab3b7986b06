/**
 * Named reference inputs shipped as data files: generator matrices, expected
 * image matrices and Gray-map value tables. Fixtures load from the directory
 * named by $RINGCODE_FIXTURES, falling back to the build-time default, then
 * to ./fixtures.
 */

#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "io.hpp"

namespace ringcode {

enum class FixtureKind { GeneratorMatrix, ExpectedMatrix, MapTable };

inline const char* fixture_kind_name(FixtureKind k) {
    switch (k) {
        case FixtureKind::GeneratorMatrix: return "generator-matrix";
        case FixtureKind::ExpectedMatrix: return "expected-matrix";
        case FixtureKind::MapTable: return "map-table";
    }
    throw std::invalid_argument("fixture_kind_name: unknown kind");
}

struct FixtureInfo {
    std::string name;
    std::string file;
    FixtureKind kind;
    std::string provenance;
};

inline const std::vector<FixtureInfo>& fixture_registry() {
    static const std::vector<FixtureInfo> registry = {
        {"classic_gray_s2", "classic_gray_s2.tbl", FixtureKind::MapTable,
         "the classical binary Gray map on Z_4"},
        {"eta_table_s2", "eta_table_s2.tbl", FixtureKind::MapTable,
         "value table of the modular Gray map eta at s = 2"},
        {"eta_table_s3", "eta_table_s3.tbl", FixtureKind::MapTable,
         "value table of the modular Gray map eta at s = 3"},
        {"eta_table_s4", "eta_table_s4.tbl", FixtureKind::MapTable,
         "value table of the modular Gray map eta at s = 4"},
        {"octocode_image_expected", "octocode_image_expected.mat", FixtureKind::ExpectedMatrix,
         "expected 4x16 image of the octocode generator rows under xi at s = 3 with split layout"},
        {"octocode_z8", "octocode_z8.mat", FixtureKind::GeneratorMatrix,
         "generator of the octocode, a self-dual length-8 code over Z_8"},
        {"rm_1_2_z4", "rm_1_2_z4.mat", FixtureKind::GeneratorMatrix,
         "generator of the first-order length-2 Reed-Muller code over Z_4"},
        {"xi_table_s2", "xi_table_s2.tbl", FixtureKind::MapTable,
         "value table of the permuted modular Gray map xi at s = 2"},
        {"xi_table_s3", "xi_table_s3.tbl", FixtureKind::MapTable,
         "value table of the permuted modular Gray map xi at s = 3"},
        {"xi_table_s4", "xi_table_s4.tbl", FixtureKind::MapTable,
         "value table of the permuted modular Gray map xi at s = 4"},
    };
    return registry;
}

inline std::string fixture_directory() {
    if (const char* env = std::getenv("RINGCODE_FIXTURES")) return env;
#ifdef RINGCODE_FIXTURE_DIR
    return RINGCODE_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

struct NamedFixture {
    FixtureInfo info;
    std::string raw;
    std::optional<MatrixFile> matrix;
    std::optional<GrayTableFile> table;
};

inline std::vector<std::string> list_fixtures() {
    std::vector<std::string> names;
    for (const auto& f : fixture_registry()) names.push_back(f.name);
    return names;
}

inline bool is_fixture_name(const std::string& name) {
    for (const auto& f : fixture_registry()) {
        if (f.name == name) return true;
    }
    return false;
}

inline NamedFixture get_fixture(const std::string& name, const std::string& dir = fixture_directory()) {
    for (const auto& f : fixture_registry()) {
        if (f.name != name) continue;
        NamedFixture out{f, read_text_file(dir + "/" + f.file), std::nullopt, std::nullopt};
        if (f.kind == FixtureKind::MapTable) {
            out.table = parse_table_file(out.raw);
        } else {
            out.matrix = parse_matrix_file(out.raw);
        }
        return out;
    }
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace ringcode
