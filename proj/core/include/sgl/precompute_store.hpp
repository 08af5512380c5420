#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgl/quadrature.hpp"
#include "sgl/spherical_transform.hpp"

namespace sgl::store {

/// Table files are binary and byte-deterministic:
///
///   magic "SGLT" | format version u32 LE | bandlimit B u32 LE | kind u8 |
///   payload of f64 LE values | CRC-32 of the payload bytes, u32 LE
///
/// Payload orders:
///   radial rule (kind 1, order 2B):    r[2B], a[2B], a_mod[2B]
///   spherical rule (kind 2, order B):  theta[2B], phi[2B], b_raw[2B], b_cal[2B]
///   Legendre DCT table (kind 3):       per nu = 0..B^2-1: row length as f64,
///                                      then that many row entries (length l+1)
enum class TableKind : std::uint8_t {
    radial_rule = 1,
    spherical_rule = 2,
    legendre_dct = 3,
};

inline constexpr std::uint32_t kFormatVersion = 1;

struct TableFileError : std::runtime_error {
    enum class Reason {
        io,
        bad_magic,
        version_mismatch,
        kind_mismatch,
        crc_mismatch,
        length_mismatch,
    };

    TableFileError(Reason r, const std::string& message)
        : std::runtime_error(message), reason(r) {}

    Reason reason;
};

std::string radial_rule_filename(int B);
std::string spherical_rule_filename(int B);
std::string legendre_table_filename(int B);
inline constexpr const char* kManifestFilename = "manifest.txt";

void save_radial_rule(const RadialRule& rule, const std::filesystem::path& path);
void save_spherical_rule(const SphericalRule& rule, const std::filesystem::path& path);
void save_legendre_table(const LegendreDctTable& table, const std::filesystem::path& path);

RadialRule load_radial_rule(const std::filesystem::path& path);
SphericalRule load_spherical_rule(const std::filesystem::path& path);
LegendreDctTable load_legendre_table(const std::filesystem::path& path);

/// Generates and persists all tables for bandlimit B (radial rule of order
/// 2B, spherical rule and Legendre DCT table of order B) plus a plain-text
/// manifest with one "filename  sha256  kind  B" line per file. Returns the
/// written files, manifest last. Re-running produces identical bytes.
std::vector<std::filesystem::path> precompute_all(int B, const std::filesystem::path& out_dir);

}  // namespace sgl::store
