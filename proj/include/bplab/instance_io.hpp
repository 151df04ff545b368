#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <zlib.h>

#include "bplab/instance.hpp"

namespace bplab {

namespace detail {

inline nlohmann::json matrix_to_json(const Matrix& M) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : M) j.push_back(row);
    return j;
}

inline Matrix matrix_from_json(const nlohmann::json& j, int rows, int cols,
                               const std::string& field) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ParseError("field '" + field + "' must be a " +
                         std::to_string(rows) + "-row array");
    Matrix M(rows);
    for (int r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("field '" + field + "' row " + std::to_string(r) +
                             " must have " + std::to_string(cols) + " entries");
        M[r] = row.get<std::vector<double>>();
    }
    return M;
}

template <typename T>
T get_field(const nlohmann::json& j, const std::string& name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError("missing field '" + name + "'");
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError("field '" + name + "' has the wrong type");
    }
}

}  // namespace detail

// Schema: {"n","m","s","seed","beta","c0","c","A0","A","model_conformant"}
// with row-major matrices. Doubles are emitted at full precision so the
// round trip is bit-exact.
inline std::string serialize(const Instance& inst) {
    nlohmann::json j;
    j["n"] = inst.dims.n;
    j["m"] = inst.dims.m;
    j["s"] = inst.dims.s;
    j["seed"] = inst.seed;
    j["beta"] = detail::matrix_to_json(inst.beta);
    j["c0"] = inst.c0;
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& ci : inst.c) jc.push_back(ci);
    j["c"] = jc;
    j["A0"] = detail::matrix_to_json(inst.A0);
    nlohmann::json ja = nlohmann::json::array();
    for (const auto& Ai : inst.A) ja.push_back(detail::matrix_to_json(Ai));
    j["A"] = ja;
    j["model_conformant"] = inst.check_model_conformant();
    return j.dump();
}

inline Instance deserialize(const std::string& payload) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(payload);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    Instance inst;
    inst.dims.n = detail::get_field<int>(j, "n");
    inst.dims.m = detail::get_field<int>(j, "m");
    inst.dims.s = detail::get_field<int>(j, "s");
    if (!inst.dims.valid()) throw ParseError("dims must satisfy n,m,s >= 1");
    inst.seed = detail::get_field<std::uint64_t>(j, "seed");

    const int n = inst.dims.n, m = inst.dims.m, s = inst.dims.s;
    if (j.find("beta") == j.end()) throw ParseError("missing field 'beta'");
    inst.beta = detail::matrix_from_json(j["beta"], s, m, "beta");
    inst.c0 = detail::get_field<std::vector<double>>(j, "c0");
    if (static_cast<int>(inst.c0.size()) != n)
        throw ParseError("field 'c0' must have n entries");
    if (j.find("c") == j.end()) throw ParseError("missing field 'c'");
    {
        Matrix cm = detail::matrix_from_json(j["c"], s, n, "c");
        inst.c.assign(cm.begin(), cm.end());
    }
    if (j.find("A0") == j.end()) throw ParseError("missing field 'A0'");
    inst.A0 = detail::matrix_from_json(j["A0"], m, n, "A0");
    if (j.find("A") == j.end()) throw ParseError("missing field 'A'");
    {
        const auto& ja = j["A"];
        if (!ja.is_array() || static_cast<int>(ja.size()) != s)
            throw ParseError("field 'A' must hold s matrices");
        inst.A.clear();
        for (int i = 0; i < s; ++i)
            inst.A.push_back(detail::matrix_from_json(
                ja[i], m, n, "A[" + std::to_string(i) + "]"));
    }
    // The flag is recomputed from data: out-of-model payloads load fine but
    // are marked.
    inst.model_conformant = inst.check_model_conformant();
    return inst;
}

namespace detail {

inline bool has_suffix(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() &&
           s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

inline std::string gzip_compress(const std::string& data) {
    z_stream zs{};
    if (deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, 15 + 16, 8,
                     Z_DEFAULT_STRATEGY) != Z_OK)
        throw std::runtime_error("deflateInit2 failed");
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());
    std::string out;
    char buf[1 << 15];
    int ret;
    do {
        zs.next_out = reinterpret_cast<Bytef*>(buf);
        zs.avail_out = sizeof(buf);
        ret = deflate(&zs, Z_FINISH);
        out.append(buf, sizeof(buf) - zs.avail_out);
    } while (ret == Z_OK);
    deflateEnd(&zs);
    if (ret != Z_STREAM_END) throw std::runtime_error("gzip compression failed");
    return out;
}

inline std::string gzip_decompress(const std::string& data) {
    z_stream zs{};
    if (inflateInit2(&zs, 15 + 16) != Z_OK)
        throw std::runtime_error("inflateInit2 failed");
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());
    std::string out;
    char buf[1 << 15];
    int ret;
    do {
        zs.next_out = reinterpret_cast<Bytef*>(buf);
        zs.avail_out = sizeof(buf);
        ret = inflate(&zs, Z_NO_FLUSH);
        if (ret != Z_OK && ret != Z_STREAM_END) {
            inflateEnd(&zs);
            throw ParseError("gzip decompression failed");
        }
        out.append(buf, sizeof(buf) - zs.avail_out);
    } while (ret != Z_STREAM_END);
    inflateEnd(&zs);
    return out;
}

}  // namespace detail

// .gz paths are transparently gzipped.
inline void save_instance(const Instance& inst, const std::string& path) {
    std::string payload = serialize(inst);
    if (detail::has_suffix(path, ".gz")) payload = detail::gzip_compress(payload);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

inline Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string payload = ss.str();
    if (detail::has_suffix(path, ".gz"))
        payload = detail::gzip_decompress(payload);
    return deserialize(payload);
}

}  // namespace bplab
