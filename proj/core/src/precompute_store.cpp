#include "sgl/precompute_store.hpp"

#include <openssl/evp.h>
#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "sgl/indexing.hpp"

namespace sgl::store {

static_assert(std::endian::native == std::endian::little,
              "table files are little-endian; big-endian hosts are not supported");

namespace {

constexpr char kMagic[4] = {'S', 'G', 'L', 'T'};

std::uint32_t payload_crc(const std::vector<double>& payload) {
    uLong crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, reinterpret_cast<const Bytef*>(payload.data()),
                static_cast<uInt>(payload.size() * sizeof(double)));
    return static_cast<std::uint32_t>(crc);
}

void write_file(const std::filesystem::path& path, std::uint32_t bandlimit, TableKind kind,
                const std::vector<double>& payload) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw TableFileError(TableFileError::Reason::io,
                             "cannot open for writing: " + path.string());
    }
    out.write(kMagic, sizeof(kMagic));
    const std::uint32_t version = kFormatVersion;
    out.write(reinterpret_cast<const char*>(&version), sizeof(version));
    out.write(reinterpret_cast<const char*>(&bandlimit), sizeof(bandlimit));
    const auto kind_byte = static_cast<std::uint8_t>(kind);
    out.write(reinterpret_cast<const char*>(&kind_byte), sizeof(kind_byte));
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size() * sizeof(double)));
    const std::uint32_t crc = payload_crc(payload);
    out.write(reinterpret_cast<const char*>(&crc), sizeof(crc));
    if (!out) {
        throw TableFileError(TableFileError::Reason::io, "write failed: " + path.string());
    }
}

struct RawTable {
    std::uint32_t bandlimit = 0;
    std::vector<double> payload;
};

RawTable read_file(const std::filesystem::path& path, TableKind expected_kind) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw TableFileError(TableFileError::Reason::io,
                             "cannot open for reading: " + path.string());
    }
    in.seekg(0, std::ios::end);
    const auto file_size = static_cast<std::size_t>(in.tellg());
    in.seekg(0, std::ios::beg);

    constexpr std::size_t header_size = sizeof(kMagic) + 2 * sizeof(std::uint32_t) + 1;
    if (file_size < header_size + sizeof(std::uint32_t)) {
        throw TableFileError(TableFileError::Reason::length_mismatch,
                             "file too short: " + path.string());
    }
    char magic[4];
    in.read(magic, sizeof(magic));
    if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw TableFileError(TableFileError::Reason::bad_magic,
                             "not a table file: " + path.string());
    }
    std::uint32_t version = 0;
    in.read(reinterpret_cast<char*>(&version), sizeof(version));
    if (version != kFormatVersion) {
        throw TableFileError(TableFileError::Reason::version_mismatch,
                             "unsupported format version " + std::to_string(version) + " in " +
                                 path.string());
    }
    RawTable raw;
    in.read(reinterpret_cast<char*>(&raw.bandlimit), sizeof(raw.bandlimit));
    std::uint8_t kind_byte = 0;
    in.read(reinterpret_cast<char*>(&kind_byte), sizeof(kind_byte));
    if (kind_byte != static_cast<std::uint8_t>(expected_kind)) {
        throw TableFileError(TableFileError::Reason::kind_mismatch,
                             "unexpected table kind " + std::to_string(kind_byte) + " in " +
                                 path.string());
    }

    const std::size_t body = file_size - header_size - sizeof(std::uint32_t);
    if (body % sizeof(double) != 0) {
        throw TableFileError(TableFileError::Reason::length_mismatch,
                             "payload is not a whole number of doubles: " + path.string());
    }
    raw.payload.resize(body / sizeof(double));
    in.read(reinterpret_cast<char*>(raw.payload.data()), static_cast<std::streamsize>(body));
    std::uint32_t stored_crc = 0;
    in.read(reinterpret_cast<char*>(&stored_crc), sizeof(stored_crc));
    if (!in) {
        throw TableFileError(TableFileError::Reason::io, "read failed: " + path.string());
    }
    if (stored_crc != payload_crc(raw.payload)) {
        throw TableFileError(TableFileError::Reason::crc_mismatch,
                             "payload checksum mismatch: " + path.string());
    }
    return raw;
}

void require_length(bool ok, const std::filesystem::path& path) {
    if (!ok) {
        throw TableFileError(TableFileError::Reason::length_mismatch,
                             "payload length does not match the declared bandlimit: " +
                                 path.string());
    }
}

std::string sha256_hex(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw TableFileError(TableFileError::Reason::io, "cannot hash: " + path.string());
    }
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 16];
    while (in.good()) {
        in.read(buf, sizeof(buf));
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    hex << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i) {
        hex << std::setw(2) << static_cast<int>(digest[i]);
    }
    return hex.str();
}

}  // namespace

std::string radial_rule_filename(int B) { return "radial_rule_B" + std::to_string(B) + ".sglt"; }

std::string spherical_rule_filename(int B) {
    return "sphere_rule_B" + std::to_string(B) + ".sglt";
}

std::string legendre_table_filename(int B) {
    return "legendre_dct_B" + std::to_string(B) + ".sglt";
}

void save_radial_rule(const RadialRule& rule, const std::filesystem::path& path) {
    if (rule.order < 2 || rule.order % 2 != 0) {
        throw std::invalid_argument("save_radial_rule: rule order must be even (2B)");
    }
    std::vector<double> payload;
    payload.reserve(3 * rule.r.size());
    payload.insert(payload.end(), rule.r.begin(), rule.r.end());
    payload.insert(payload.end(), rule.a.begin(), rule.a.end());
    payload.insert(payload.end(), rule.a_mod.begin(), rule.a_mod.end());
    write_file(path, static_cast<std::uint32_t>(rule.order / 2), TableKind::radial_rule, payload);
}

void save_spherical_rule(const SphericalRule& rule, const std::filesystem::path& path) {
    std::vector<double> payload;
    payload.reserve(4 * rule.theta.size());
    payload.insert(payload.end(), rule.theta.begin(), rule.theta.end());
    payload.insert(payload.end(), rule.phi.begin(), rule.phi.end());
    payload.insert(payload.end(), rule.b_raw.begin(), rule.b_raw.end());
    payload.insert(payload.end(), rule.b_cal.begin(), rule.b_cal.end());
    write_file(path, static_cast<std::uint32_t>(rule.order), TableKind::spherical_rule, payload);
}

void save_legendre_table(const LegendreDctTable& table, const std::filesystem::path& path) {
    std::vector<double> payload;
    for (const auto& row : table.rows) {
        payload.push_back(static_cast<double>(row.size()));
        payload.insert(payload.end(), row.begin(), row.end());
    }
    write_file(path, static_cast<std::uint32_t>(table.order), TableKind::legendre_dct, payload);
}

RadialRule load_radial_rule(const std::filesystem::path& path) {
    const RawTable raw = read_file(path, TableKind::radial_rule);
    const std::size_t count = 2 * static_cast<std::size_t>(raw.bandlimit);
    require_length(raw.bandlimit >= 1 && raw.payload.size() == 3 * count, path);
    RadialRule rule;
    rule.order = static_cast<int>(count);
    rule.r.assign(raw.payload.begin(), raw.payload.begin() + count);
    rule.a.assign(raw.payload.begin() + count, raw.payload.begin() + 2 * count);
    rule.a_mod.assign(raw.payload.begin() + 2 * count, raw.payload.end());
    return rule;
}

SphericalRule load_spherical_rule(const std::filesystem::path& path) {
    const RawTable raw = read_file(path, TableKind::spherical_rule);
    const std::size_t count = 2 * static_cast<std::size_t>(raw.bandlimit);
    require_length(raw.bandlimit >= 1 && raw.payload.size() == 4 * count, path);
    SphericalRule rule;
    rule.order = static_cast<int>(raw.bandlimit);
    rule.theta.assign(raw.payload.begin(), raw.payload.begin() + count);
    rule.phi.assign(raw.payload.begin() + count, raw.payload.begin() + 2 * count);
    rule.b_raw.assign(raw.payload.begin() + 2 * count, raw.payload.begin() + 3 * count);
    rule.b_cal.assign(raw.payload.begin() + 3 * count, raw.payload.end());
    return rule;
}

LegendreDctTable load_legendre_table(const std::filesystem::path& path) {
    const RawTable raw = read_file(path, TableKind::legendre_dct);
    require_length(raw.bandlimit >= 1, path);
    const int L = static_cast<int>(raw.bandlimit);
    LegendreDctTable table;
    table.order = L;
    table.rows.resize(static_cast<std::size_t>(L) * L);
    std::size_t pos = 0;
    for (int l = 0; l < L; ++l) {
        for (int m = -l; m <= l; ++m) {
            require_length(pos < raw.payload.size(), path);
            const auto len = static_cast<std::size_t>(raw.payload[pos++]);
            require_length(len == static_cast<std::size_t>(l) + 1 &&
                               pos + len <= raw.payload.size(),
                           path);
            auto& row = table.rows[static_cast<std::size_t>(nu_index(l, m))];
            row.assign(raw.payload.begin() + static_cast<std::ptrdiff_t>(pos),
                       raw.payload.begin() + static_cast<std::ptrdiff_t>(pos + len));
            pos += len;
        }
    }
    require_length(pos == raw.payload.size(), path);
    return table;
}

std::vector<std::filesystem::path> precompute_all(int B, const std::filesystem::path& out_dir) {
    if (B < 1) {
        throw std::invalid_argument("precompute_all: bandlimit must be positive");
    }
    std::filesystem::create_directories(out_dir);

    const RadialRule radial = half_range_hermite_rule(2 * B);
    const SphericalRule sphere = sphere_rule(B);
    const LegendreDctTable table = LegendreDctTable::build(B);

    std::vector<std::filesystem::path> files;
    files.push_back(out_dir / radial_rule_filename(B));
    save_radial_rule(radial, files.back());
    files.push_back(out_dir / spherical_rule_filename(B));
    save_spherical_rule(sphere, files.back());
    files.push_back(out_dir / legendre_table_filename(B));
    save_legendre_table(table, files.back());

    const std::filesystem::path manifest_path = out_dir / kManifestFilename;
    std::ofstream manifest(manifest_path, std::ios::trunc);
    if (!manifest) {
        throw TableFileError(TableFileError::Reason::io,
                             "cannot write manifest: " + manifest_path.string());
    }
    const int kinds[] = {1, 2, 3};
    for (std::size_t f = 0; f < files.size(); ++f) {
        manifest << files[f].filename().string() << "  " << sha256_hex(files[f]) << "  "
                 << kinds[f] << "  " << B << "\n";
    }
    manifest.close();
    files.push_back(manifest_path);
    return files;
}

}  // namespace sgl::store
