#pragma once

#include "dyckres/betti.hpp"
#include "dyckres/characters.hpp"
#include "dyckres/dyck.hpp"
#include "dyckres/enumeration.hpp"
#include "dyckres/errors.hpp"
#include "dyckres/partition.hpp"
#include "dyckres/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dyckres::cli {

inline const std::vector<std::string>& commands()
{
    static const std::vector<std::string> names{"patterns", "kac", "simple", "betti", "strands", "regularity", "rect-check", "render", "selftest"};
    return names;
}

struct Invocation {
    std::string command;
    std::string lambda;
    std::optional<int> m; // defaults to n
    int n = 0;
    std::string format = "ascii";
    std::string set = "K";
    std::optional<int> b;
    int slack = 0;
    int jobs = 1;
    bool character = false; // `simple`: print the full g0-character too
    std::string golden_dir;
};

inline Partition parse_lambda(const std::string& text)
{
    try {
        return parse_partition(text);
    } catch (const MalformedPartition& e) {
        throw BadArgs(std::string("--lambda: ") + e.what());
    }
}

/// "(3,2)ES": start box followed by the step word.
inline std::string path_word(const DyckPath& p)
{
    std::string out = "(" + std::to_string(p.start().x) + "," + std::to_string(p.start().y) + ")";
    for (Step s : p.steps())
        out.push_back(static_cast<char>(s));
    return out;
}

inline std::string box_list(std::span<const Box> bs)
{
    std::string out;
    for (Box b : bs)
        out += "(" + std::to_string(b.x) + "," + std::to_string(b.y) + ")";
    return out;
}

/// One line per pattern: lambda(D), sizes, paths and bullets.
inline std::string pattern_line(const PatternEntry& e)
{
    std::string paths;
    for (const DyckPath& p : e.pattern.paths())
        paths += (paths.empty() ? "" : " ") + path_word(p);
    return (e.shape.empty() ? std::string("()") : to_string(e.shape)) + " d=" + std::to_string(e.size.dyck) + " b=" + std::to_string(e.size.bullet) +
        " paths=[" + paths + "] bullets=[" + box_list(e.pattern.bullets()) + "]";
}

/// The summary used by the golden pattern lists: "lambda(D) d=.. b=..".
inline std::string pattern_summary(const std::vector<PatternEntry>& entries)
{
    std::string out;
    for (const PatternEntry& e : entries)
        out += to_string(e.shape) + " d=" + std::to_string(e.size.dyck) + " b=" + std::to_string(e.size.bullet) + "\n";
    return out;
}

/// Text compared against each file of the golden corpus.
inline std::vector<std::pair<std::string, std::function<std::string()>>> golden_producers()
{
    std::vector<std::pair<std::string, std::function<std::string()>>> out;
    out.emplace_back("betti_3_2_m3_n3.txt", [] { return render_betti_table(betti_table(Partition{3, 2}, 3, 3)); });
    out.emplace_back("hilbert_m3_n3.txt", [] {
        std::string s;
        for (const Partition& mu : {Partition{3, 2}, Partition{4, 4}, Partition{3, 3, 3}, Partition{4, 4, 3}, Partition{5, 5, 5}})
            s += to_string(mu) + ": " + to_string(simple_hilbert(mu, 3, 3)) + "\n";
        return s;
    });
    out.emplace_back("kac_composition_3_2_n3.txt", [] {
        std::string s;
        const K0Class cls = kac_composition(Partition{3, 2}, 3);
        for (const auto& [mu, c] : cls.terms())
            s += to_string(mu) + " " + c.str() + "\n";
        return s;
    });
    out.emplace_back("patterns_A_3_2_n3.txt", [] { return pattern_summary(enumerate_A(Partition{3, 2}, 3)); });
    out.emplace_back("regularity_grid.txt", [] {
        std::string s;
        for (int n = 1; n <= 3; ++n)
            for (const Partition& l : partitions_in_box(n, 4))
                s += "n=" + std::to_string(n) + " lambda=" + to_string(l) + " reg=" + std::to_string(regularity_enum(l, n)) + "\n";
        return s;
    });
    return out;
}

namespace detail {

inline PatternSet parse_set(const std::string& s)
{
    if (s == "K")
        return PatternSet::K;
    if (s == "A")
        return PatternSet::A;
    if (s == "A0")
        return PatternSet::A0;
    throw BadArgs("--set must be K, A or A0, got '" + s + "'");
}

struct Checked {
    Partition lambda;
    int m = 0;
    int n = 0;
    bool json = false;
};

inline Checked validate(const Invocation& inv)
{
    if (inv.format != "ascii" && inv.format != "json")
        throw BadArgs("--format must be ascii or json, got '" + inv.format + "'");
    if (inv.slack < 0)
        throw BadArgs("--slack must be >= 0");
    if (inv.jobs < 1)
        throw BadArgs("--jobs must be >= 1");
    if (inv.b && *inv.b < 0)
        throw BadArgs("--b must be >= 0");
    Checked c;
    c.json = inv.format == "json";
    if (inv.command == "selftest")
        return c;
    c.lambda = parse_lambda(inv.lambda);
    c.n = inv.n;
    c.m = inv.m.value_or(inv.n);
    if (c.n < 1)
        throw BadArgs("--n must be >= 1");
    if (c.m < c.n)
        throw BadArgs("--m must be >= --n");
    if (c.lambda.length() > c.n)
        throw BadArgs("--lambda has " + std::to_string(c.lambda.length()) + " parts, more than --n " + std::to_string(c.n));
    return c;
}

inline int selftest(const Invocation& inv, std::ostream& out, std::ostream& err)
{
    const std::filesystem::path dir = inv.golden_dir;
    if (dir.empty() || !std::filesystem::is_directory(dir)) {
        err << "selftest: golden directory not found: '" << dir.string() << "'\n";
        return 2;
    }
    bool all = true;
    for (const auto& [name, produce] : golden_producers()) {
        std::ifstream in(dir / name, std::ios::binary);
        if (!in) {
            out << "MISSING " << name << "\n";
            all = false;
            continue;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        const bool same = buf.str() == produce();
        out << (same ? "ok      " : "MISMATCH ") << name << "\n";
        all = all && same;
    }
    return all ? 0 : 3;
}

inline int dispatch(const Invocation& inv, std::ostream& out, std::ostream& err)
{
    const Checked c = validate(inv);
    const std::string& cmd = inv.command;
    CharacterEngine engine(inv.slack);

    if (cmd == "selftest")
        return selftest(inv, out, err);

    if (cmd == "patterns" || cmd == "render") {
        const auto entries = enumerate(c.lambda, c.n, parse_set(inv.set), inv.slack, inv.jobs);
        if (c.json) {
            Json j = Json::array();
            for (const auto& e : entries)
                j.push_back(to_json(e));
            out << j.dump(2) << "\n";
            return 0;
        }
        for (const auto& e : entries) {
            out << pattern_line(e) << "\n";
            if (cmd == "render")
                out << render_pattern(c.lambda, e.pattern) << "\n";
        }
        return 0;
    }

    if (cmd == "kac") {
        const K0Class& cls = engine.kac_composition(c.lambda, c.n);
        const GradedSeries hs = kac_hilbert(c.lambda, c.m, c.n);
        if (c.json) {
            Json j;
            j["lambda"] = to_string(c.lambda);
            j["composition"] = to_json(cls);
            j["hilbert"] = to_json(hs);
            out << j.dump(2) << "\n";
        } else {
            out << "[K(" << to_string(c.lambda) << ")] = " << to_string(cls) << "\n";
            out << "HS = " << to_string(hs) << "\n";
        }
        return 0;
    }

    if (cmd == "simple") {
        const GradedSeries hs = engine.simple_hilbert(c.lambda, c.m, c.n);
        std::optional<GLCharacter> ch;
        if (inv.character)
            ch = engine.simple_character(c.lambda, c.m, c.n);
        if (c.json) {
            Json j;
            j["mu"] = to_string(c.lambda);
            j["hilbert"] = to_json(hs);
            if (ch)
                j["character"] = to_json(*ch);
            out << j.dump(2) << "\n";
        } else {
            out << "HS = " << to_string(hs) << "\n";
            if (ch)
                for (const auto& [k, mult] : ch->terms())
                    out << "S(" << to_string(k.first) << ")W0 * S(" << to_string(k.second) << ")W1 : " << mult << "\n";
        }
        return 0;
    }

    if (cmd == "betti") {
        const BettiTable table = betti_table(c.lambda, c.m, c.n, inv.slack, inv.jobs);
        if (c.json) {
            Json j = to_json(table);
            j["polynomial"] = to_json(betti_polynomial(c.lambda, c.m, c.n, inv.slack, inv.jobs));
            out << j.dump(2) << "\n";
        } else {
            out << render_betti_table(table);
        }
        return 0;
    }

    if (cmd == "strands") {
        std::vector<std::pair<int, K0Class>> strands;
        if (inv.b) {
            strands.emplace_back(*inv.b, strand_classes(c.lambda, c.m, c.n, *inv.b, inv.slack, inv.jobs));
        } else {
            const int reg = regularity_enum(c.lambda, c.n, inv.slack, inv.jobs);
            for (int b = 0; c.lambda.size() + b <= reg; ++b)
                strands.emplace_back(b, strand_classes(c.lambda, c.m, c.n, b, inv.slack, inv.jobs));
        }
        const K0Class first = first_strand(c.lambda, c.m, c.n, inv.slack, inv.jobs);
        if (c.json) {
            Json j;
            j["lambda"] = to_string(c.lambda);
            Json s = Json::object();
            for (const auto& [b, cls] : strands)
                s[std::to_string(b)] = to_json(cls);
            j["strands"] = std::move(s);
            j["first_strand"] = to_json(first);
            out << j.dump(2) << "\n";
        } else {
            for (const auto& [b, cls] : strands)
                out << "b=" << b << " row=" << c.lambda.size() + b << ": " << to_string(cls) << "\n";
            out << "first strand: " << to_string(first) << "\n";
        }
        return 0;
    }

    if (cmd == "regularity") {
        const int e = regularity_enum(c.lambda, c.n, inv.slack, inv.jobs);
        const int closed = regularity_closed(c.lambda, c.n);
        if (c.json) {
            Json j{{"lambda", to_string(c.lambda)}, {"n", c.n}, {"enum", e}, {"closed", closed}, {"agree", e == closed}};
            out << j.dump(2) << "\n";
        } else {
            out << "enum=" << e << " closed=" << closed << " agree=" << (e == closed ? "true" : "false") << "\n";
        }
        return e == closed ? 0 : 3;
    }

    if (cmd == "rect-check") {
        if (c.lambda.empty() || !dyckres::detail::is_rectangle(c.lambda))
            throw BadArgs("--lambda must be a nonempty rectangle for rect-check");
        const BettiPolynomial closed = rectangular_betti(c.lambda.length(), c.lambda.first(), c.m, c.n);
        const BettiPolynomial enumerated = betti_polynomial(c.lambda, c.m, c.n, inv.slack, inv.jobs);
        const bool agree = closed == enumerated;
        if (c.json) {
            Json j;
            j["lambda"] = to_string(c.lambda);
            j["closed"] = to_json(closed);
            j["enumerated"] = to_json(enumerated);
            j["agree"] = agree;
            out << j.dump(2) << "\n";
        } else {
            out << "closed:     " << to_string(closed) << "\n";
            out << "enumerated: " << to_string(enumerated) << "\n";
            out << "agree=" << (agree ? "true" : "false") << "\n";
        }
        return agree ? 0 : 3;
    }

    throw BadArgs("unknown command '" + cmd + "'");
}

} // namespace detail

/// Exit codes: 0 success, 2 bad arguments, 3 internal consistency failure.
inline int run(const Invocation& inv, std::ostream& out, std::ostream& err)
{
    try {
        return detail::dispatch(inv, out, err);
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace dyckres::cli
