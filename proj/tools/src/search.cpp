#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <tuple>

#include "commands.hpp"

namespace cli {

using namespace isodual;

namespace {

struct Range {
    std::uint64_t lo;
    std::uint64_t hi;
};

// "N" or "LO:HI" (inclusive); LO > HI is an empty range.
Range parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const auto v = std::stoull(text);
            return {v, v};
        }
        return {std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw Error(Errc::invalid_argument, "bad range '" + text + "' (expected N or LO:HI)");
    }
}

// p, e, m, a, construction, splitting index, label
using Key = std::tuple<std::uint64_t, unsigned, std::uint64_t, unsigned, std::string, std::size_t, std::string>;

Key key_of(const json& k) {
    return {k.at(0).get<std::uint64_t>(), k.at(1).get<unsigned>(),    k.at(2).get<std::uint64_t>(),
            k.at(3).get<unsigned>(),      k.at(4).get<std::string>(), k.at(5).get<std::size_t>(),
            k.at(6).get<std::string>()};
}

bool uses_a(const std::string& kind) { return kind != "duadic"; }
bool uses_splitting(const std::string& kind) { return kind == "duadic" || kind == "thm510" || kind == "thm44"; }

std::size_t splitting_count(std::uint64_t m, std::uint64_t p) {
    try {
        return find_splittings(m, p).size();
    } catch (const Error&) {
        return 0;
    }
}

json record(const ConstructionResult& r, const LabeledCode& lc, const CodeVerification& v, std::size_t splitting) {
    const auto& p = r.params;
    json key = {p.spec.p(), p.spec.e(), p.m, p.a, p.kind, splitting, lc.label};
    json rec = {{"key", std::move(key)},
                {"ring", to_json(p.spec)},
                {"construction", p.kind},
                {"m", p.m},
                {"n", lc.code.n()},
                {"label", lc.label},
                {"code", to_json(lc.code)},
                {"verified", to_json(v)}};
    if (p.a) rec["a"] = p.a;
    if (p.splitting) rec["splitting"] = to_json(*p.splitting);
    if (lc.generator) rec["generator"] = to_string(*lc.generator);
    return rec;
}

std::map<Key, std::string> load_existing(const std::string& path) {
    std::map<Key, std::string> rows;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            auto j = json::parse(line);
            rows[key_of(j.at("key"))] = line;
        } catch (const json::exception&) {
            std::cerr << "search: dropping unreadable line in " << path << '\n';
        }
    }
    return rows;
}

}  // namespace

int run_search(const SearchArgs& args) {
    const Range ms = parse_range(args.m_range);
    const Range as = parse_range(args.a_range);
    for (auto& k : args.kinds)
        if (k != "thm42" && k != "thm44" && k != "remark46" && k != "duadic" && k != "thm510")
            throw Error(Errc::invalid_argument, "unknown construction '" + k + "'");
    for (auto e : args.exponents)
        if (e < 1) throw Error(Errc::invalid_argument, "e must be >= 1");

    auto rows = load_existing(args.out);
    const auto options = args.weight.options();
    std::size_t written = 0, failed = 0;

    for (auto p : args.primes) {
        for (auto e : args.exponents) {
            const RingSpec spec(p, e);
            for (std::uint64_t m = ms.lo; m <= ms.hi && ms.lo <= ms.hi; m += 1) {
                if (m % 2 == 0 || m % p == 0) continue;
                for (auto& kind : args.kinds) {
                    const std::size_t n_split = uses_splitting(kind) ? splitting_count(m, p) : 1;
                    const Range a_here = uses_a(kind) ? as : Range{0, 0};
                    for (std::uint64_t a = a_here.lo; a <= a_here.hi && a_here.lo <= a_here.hi; ++a) {
                        if (uses_a(kind) && (a < 1 || (p - 1) % (std::uint64_t{1} << a) != 0)) continue;
                        for (std::size_t s = 0; s < n_split; ++s) {
                            try {
                                const auto r = build(kind, spec, m, static_cast<unsigned>(a), s);
                                const auto checks = verify(r, options, true);
                                for (std::size_t i = 0; i < r.codes.size(); ++i) {
                                    auto rec = record(r, r.codes[i], checks[i], s);
                                    rows[key_of(rec["key"])] = rec.dump();
                                    ++written;
                                }
                            } catch (const Error& err) {
                                ++failed;
                                std::cerr << "search: " << kind << " p=" << p << " e=" << e << " m=" << m
                                          << " a=" << a << " splitting=" << s << ": " << err.what() << '\n';
                            }
                        }
                    }
                }
            }
        }
    }

    std::ofstream out(args.out, std::ios::trunc);
    if (!out) throw Error(Errc::invalid_argument, "cannot write " + args.out);
    for (auto& [key, line] : rows) out << line << '\n';
    std::cerr << "search: " << written << " record(s) updated, " << rows.size() << " in " << args.out << ", "
              << failed << " failure(s)\n";
    return ok;
}

}  // namespace cli
