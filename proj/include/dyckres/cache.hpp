#pragma once

#include "dyckres/partition.hpp"
#include "dyckres/series.hpp"

#include <cctype>
#include <cstdint>
#include <iterator>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace dyckres {

/// On-disk memo of completed simple-module results, one append-only file of
/// records:
///
///   u32 payload_length | payload
///   payload = u8 kind ('H' hilbert, 'C' character) | u32 m | u32 n | part-list mu
///             | u32 count | count entries
///   H entry = i32 degree | string coefficient
///   C entry = part-list alpha | part-list beta | string multiplicity
///   part-list = u32 len | len * u32;  string = u32 len | decimal digits
///
/// All integers little-endian. A missing or damaged file is never fatal: the
/// readable prefix is used and everything else is recomputed.
class PersistentCache {
public:
    static constexpr const char* kEnvVar = "DYCKRES_CACHE";
    static constexpr const char* kFileName = "dyckres-simple.bin";

    static std::optional<std::string> directory_from_env()
    {
        const char* dir = std::getenv(kEnvVar);
        if (dir == nullptr || *dir == '\0')
            return std::nullopt;
        return std::string(dir);
    }

    explicit PersistentCache(const std::string& directory) : path_(std::filesystem::path(directory) / kFileName) { load(); }

    std::optional<GradedSeries> load_hilbert(const Partition& mu, int m, int n) const
    {
        const auto it = hilbert_.find({mu, m, n});
        if (it == hilbert_.end())
            return std::nullopt;
        return it->second;
    }

    std::optional<GLCharacter> load_character(const Partition& mu, int m, int n) const
    {
        const auto it = characters_.find({mu, m, n});
        if (it == characters_.end())
            return std::nullopt;
        return it->second;
    }

    void store_hilbert(const Partition& mu, int m, int n, const GradedSeries& hs)
    {
        if (!hilbert_.emplace(Key{mu, m, n}, hs).second)
            return;
        std::string payload;
        header(payload, 'H', mu, m, n);
        put_u32(payload, static_cast<std::uint32_t>(hs.terms().size()));
        for (const auto& [d, c] : hs.terms()) {
            put_u32(payload, static_cast<std::uint32_t>(d));
            put_string(payload, c.str());
        }
        append(payload);
    }

    void store_character(const Partition& mu, int m, int n, const GLCharacter& ch)
    {
        if (!characters_.emplace(Key{mu, m, n}, ch).second)
            return;
        std::string payload;
        header(payload, 'C', mu, m, n);
        put_u32(payload, static_cast<std::uint32_t>(ch.terms().size()));
        for (const auto& [k, c] : ch.terms()) {
            put_partition(payload, k.first);
            put_partition(payload, k.second);
            put_string(payload, c.str());
        }
        append(payload);
    }

    std::size_t size() const { return hilbert_.size() + characters_.size(); }

private:
    using Key = std::tuple<Partition, int, int>;

    struct Reader {
        const std::string& data;
        std::size_t pos = 0;
        std::size_t end = 0;

        bool u32(std::uint32_t& out)
        {
            if (end - pos < 4)
                return false;
            out = 0;
            for (int i = 0; i < 4; ++i)
                out |= static_cast<std::uint32_t>(static_cast<unsigned char>(data[pos + static_cast<std::size_t>(i)])) << (8 * i);
            pos += 4;
            return true;
        }
        bool partition(Partition& out)
        {
            std::uint32_t len = 0;
            if (!u32(len) || len > 1024)
                return false;
            std::vector<int> parts;
            for (std::uint32_t i = 0; i < len; ++i) {
                std::uint32_t v = 0;
                if (!u32(v) || v > 1u << 20)
                    return false;
                parts.push_back(static_cast<int>(v));
            }
            try {
                out = Partition(std::move(parts));
            } catch (const Error&) {
                return false;
            }
            return true;
        }
        bool integer(Integer& out)
        {
            std::uint32_t len = 0;
            if (!u32(len) || len == 0 || end - pos < len)
                return false;
            const std::string digits = data.substr(pos, len);
            pos += len;
            for (std::size_t i = 0; i < digits.size(); ++i)
                if (!(std::isdigit(static_cast<unsigned char>(digits[i])) || (i == 0 && digits[i] == '-')))
                    return false;
            out = Integer(digits);
            return true;
        }
    };

    static void put_u32(std::string& out, std::uint32_t v)
    {
        for (int i = 0; i < 4; ++i)
            out.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
    }
    static void put_string(std::string& out, const std::string& s)
    {
        put_u32(out, static_cast<std::uint32_t>(s.size()));
        out += s;
    }
    static void put_partition(std::string& out, const Partition& p)
    {
        put_u32(out, static_cast<std::uint32_t>(p.length()));
        for (int v : p.parts())
            put_u32(out, static_cast<std::uint32_t>(v));
    }
    static void header(std::string& out, char kind, const Partition& mu, int m, int n)
    {
        out.push_back(kind);
        put_u32(out, static_cast<std::uint32_t>(m));
        put_u32(out, static_cast<std::uint32_t>(n));
        put_partition(out, mu);
    }

    void append(const std::string& payload)
    {
        std::error_code ec;
        std::filesystem::create_directories(path_.parent_path(), ec);
        std::ofstream out(path_, std::ios::binary | std::ios::app);
        if (!out)
            return;
        std::string record;
        put_u32(record, static_cast<std::uint32_t>(payload.size()));
        record += payload;
        out.write(record.data(), static_cast<std::streamsize>(record.size()));
    }

    void load()
    {
        std::ifstream in(path_, std::ios::binary);
        if (!in)
            return;
        const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::size_t pos = 0;
        while (pos < data.size()) {
            Reader frame{data, pos, data.size()};
            std::uint32_t len = 0;
            if (!frame.u32(len) || data.size() - frame.pos < len)
                return;
            Reader r{data, frame.pos, frame.pos + len};
            pos = frame.pos + len;
            if (!parse_record(r) || r.pos != r.end)
                return;
        }
    }

    bool parse_record(Reader& r)
    {
        if (r.end - r.pos < 1)
            return false;
        const char kind = r.data[r.pos++];
        std::uint32_t m = 0, n = 0, count = 0;
        Partition mu;
        if (!r.u32(m) || !r.u32(n) || !r.partition(mu) || !r.u32(count))
            return false;
        if (kind == 'H') {
            GradedSeries hs;
            for (std::uint32_t i = 0; i < count; ++i) {
                std::uint32_t d = 0;
                Integer c;
                if (!r.u32(d) || !r.integer(c))
                    return false;
                hs.add(static_cast<int>(d), c);
            }
            hilbert_.emplace(Key{mu, static_cast<int>(m), static_cast<int>(n)}, std::move(hs));
            return true;
        }
        if (kind == 'C') {
            GLCharacter ch(static_cast<int>(m), static_cast<int>(n));
            for (std::uint32_t i = 0; i < count; ++i) {
                Partition a, b;
                Integer c;
                if (!r.partition(a) || !r.partition(b) || !r.integer(c))
                    return false;
                ch.add(a, b, c);
            }
            characters_.emplace(Key{mu, static_cast<int>(m), static_cast<int>(n)}, std::move(ch));
            return true;
        }
        return false;
    }

    std::filesystem::path path_;
    std::map<Key, GradedSeries> hilbert_;
    std::map<Key, GLCharacter> characters_;
};

} // namespace dyckres
