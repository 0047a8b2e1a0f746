#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tsg/alt_form.hpp"
#include "tsg/groupoid_lab.hpp"
#include "tsg/lie_algebra.hpp"
#include "tsg/poly_algebroid.hpp"
#include "tsg/slgb.hpp"

namespace tsg::io {

// TOML input formats. Basis and section indices are 1-based; rationals are
// strings "p" or "p/q" (plain integers are accepted too). Every loader throws
// Error(MalformedInput) on bad input.
//
// algebra:     dim = 3, basis = ["x","y","z"], brackets = [[1,2,3,"1"], ...]  (i < j)
// form:        degree = 2, forms = [[[1,2],"1"], [[3,4],"-1/2"]]
// algebroid:   rank = 2, chart_dim = 1, anchor = [["-x1"],["-1"]],
//              structure = [[1,2,2,"1"]]
//              or algebra = "builtin:aff(1)", fields = [["-x1"],["-1"]]
// realization: kind = "action" | "pair" | "mgm", group = "aff(1)",
//              chart_dim = 1, action = "affine" | "linear" | "trivial"
// slgb:        algebra = "builtin:aff(1)", beta = [[[1,2],"1"]],
//              opens = ["U0","U1"],
//              overlaps = [{pair = [0,1], points = ["a"], maps = {a = [["1","0"],["1","1"]]}}],
//              triples = [{ids = [0,1,2], points = ["a"]}]

/// Reads a whole file; throws MalformedInput when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

/// Digest of a `builtin:NAME` reference (of the reference text) or of the
/// file contents.
std::string input_digest(const std::string& ref);

/// `builtin:NAME` or a path to an algebra file.
LieAlgebra load_algebra(const std::string& ref, const std::filesystem::path& base_dir = {});
LieAlgebra parse_algebra(const std::string& text);

/// Constant form on a `dim`-dimensional algebra. `dim` in the file, when
/// present, must agree.
AltForm load_form(const std::string& path, int dim);
AltForm parse_form(const std::string& text, int dim);

PolyAlgebroid load_algebroid(const std::string& path);
PolyAlgebroid parse_algebroid(const std::string& text, const std::filesystem::path& base_dir = {});

/// Form with polynomial coefficients on an algebroid.
PolyAlgebroidForm load_algebroid_form(const std::string& path, std::size_t rank, std::size_t chart_dim);
PolyAlgebroidForm parse_algebroid_form(const std::string& text, std::size_t rank, std::size_t chart_dim);

GroupoidRealization load_realization(const std::string& path);
GroupoidRealization parse_realization(const std::string& text);

SLGBSpec load_slgb(const std::string& path);
SLGBSpec parse_slgb(const std::string& text, const std::filesystem::path& base_dir = {});

}  // namespace tsg::io
