#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace cli {

using namespace isodual;

isodual::WeightOptions WeightFlags::options() const {
    return {parse_weight_strategy(strategy), budget, residue_budget, threads};
}

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error(Errc::invalid_argument, "cannot write " + out_path);
    out << doc.dump(2) << '\n';
}

namespace {

std::string ring_name(const RingSpec& spec) {
    std::ostringstream s;
    s << "Z_" << spec.modulus() << " (p=" << spec.p() << ", e=" << spec.e() << ")";
    return s.str();
}

std::string describe(const LabeledCode& lc) {
    if (lc.generator) return "<" + to_string(*lc.generator) + ">";
    std::string s = "F = [";
    for (std::size_t i = 0; i < lc.code.family().size(); ++i) {
        if (i) s += ", ";
        s += to_string(lc.code.family()[i]);
    }
    return s + "]";
}

std::string describe(const Claim& c) {
    std::string s = to_string(c.kind);
    if (!c.partner.empty()) s += " " + c.partner;
    if (c.kind == ClaimKind::multiplier_image) s += " (a=" + std::to_string(c.multiplier) + ")";
    return s;
}

void print_weight(const WeightReport& w) {
    std::cout << "  min weight " << w.weight << " (" << to_string(w.strategy) << ", " << w.enumerated
              << " words)\n";
}

void print_result(const ConstructionResult& r, const std::vector<CodeVerification>* checks) {
    const auto& p = r.params;
    std::cout << p.kind << " over " << ring_name(p.spec) << ", m=" << p.m;
    if (p.a) std::cout << ", a=" << p.a;
    if (p.alpha) std::cout << ", alpha=" << *p.alpha;
    std::cout << '\n';
    if (p.g1) std::cout << "g1 = " << to_string(*p.g1) << "\ng2 = " << to_string(*p.g2) << '\n';
    for (auto& note : r.notes) std::cout << "note: " << note << '\n';

    for (auto& lc : r.codes) {
        std::cout << lc.label << "  n=" << lc.code.n() << "  " << describe(lc) << '\n';
        const CodeVerification* v = nullptr;
        if (checks)
            for (auto& c : *checks)
                if (c.label == lc.label) v = &c;
        if (!v) {
            for (auto& c : lc.claims) std::cout << "  claim " << describe(c) << '\n';
            continue;
        }
        std::cout << "  log_" << p.spec.p() << "|C| = " << v->cardinality_log << '\n';
        for (auto& c : v->claims) {
            std::cout << "  " << describe(c.claim) << ": " << (c.holds ? "holds" : "FAILS");
            if (c.certificate)
                std::cout << " (multiplier " << c.certificate->multiplier << ", lambda " << c.certificate->lambda
                          << ")";
            std::cout << '\n';
        }
        if (v->weight) print_weight(*v->weight);
        if (v->weight_upper_bound)
            std::cout << "  min weight <= " << *v->weight_upper_bound << " (upper bound, budget exhausted)\n";
    }
}

RPoly parse_or_default(const std::string& text, const RingSpec& spec, const RPoly& fallback) {
    return text.empty() ? fallback : parse_rpoly(text, spec);
}

}  // namespace

ConstructionResult build(const std::string& kind, const RingSpec& spec, std::uint64_t m, unsigned a,
                         std::size_t splitting_index, const std::string& g1_text, const std::string& g2_text) {
    auto pick_splitting = [&] {
        auto all = find_splittings(m, spec.p());
        if (splitting_index >= all.size())
            throw Error(Errc::invalid_argument, "only " + std::to_string(all.size()) + " splitting(s) mod " +
                                                    std::to_string(m));
        return all[splitting_index];
    };
    if (kind == "thm42") return split_cofactor_isodual(m, a, spec);
    if (kind == "remark46") return half_length_isodual(m, a, spec);
    if (kind == "duadic") return duadic_lift(m, spec, pick_splitting());
    if (kind == "thm510") return duadic_isodual(m, a, spec, pick_splitting());
    if (kind == "thm44") {
        if (!g1_text.empty() && !g2_text.empty())
            return paired_factor_isodual(m, a, spec, parse_rpoly(g1_text, spec), parse_rpoly(g2_text, spec));
        auto [g1, g2] = duadic_lifts(m, spec, pick_splitting());
        return paired_factor_isodual(m, a, spec, parse_or_default(g1_text, spec, g1),
                                     parse_or_default(g2_text, spec, g2));
    }
    throw Error(Errc::invalid_argument, "unknown construction '" + kind + "'");
}

int run_factor(const FactorArgs& args) {
    const RingSpec spec(args.p, args.e);
    const auto residue = factor_xn_minus_1(args.n, args.p);
    const auto lifted = hensel_lift_factorization(residue, args.n, spec);
    if (args.json) {
        json doc = {{"ring", to_json(spec)}, {"n", args.n}, {"residue", json::array()}, {"lifted", json::array()}};
        for (auto& f : residue) doc["residue"].push_back(to_json(f));
        for (auto& g : lifted) doc["lifted"].push_back(to_json(g));
        emit(doc, "");
        return ok;
    }
    std::cout << "x^" << args.n << " - 1 over " << ring_name(spec) << '\n';
    std::cout << "residue factors over F_" << args.p << ":\n";
    for (auto& f : residue) std::cout << "  " << to_string(f) << '\n';
    std::cout << "lifted factors over Z_" << spec.modulus() << ":\n";
    for (auto& g : lifted) std::cout << "  " << to_string(g) << '\n';
    return ok;
}

int run_construct(const ConstructArgs& args) {
    const RingSpec spec(args.p, args.e);
    const auto result = build(args.kind, spec, args.m, args.a, args.splitting, args.g1, args.g2);

    std::vector<CodeVerification> checks;
    if (args.verify) checks = verify(result, args.weight.options(), !args.skip_weights);
    const auto* checks_ptr = args.verify ? &checks : nullptr;

    if (!args.out.empty()) emit(to_json(result, checks_ptr), args.out);
    if (args.json)
        emit(to_json(result, checks_ptr), "");
    else
        print_result(result, checks_ptr);

    bool bounded = false;
    for (auto& v : checks) {
        if (!v.claims_hold()) return verification_failed;
        bounded = bounded || v.weight_upper_bound.has_value();
    }
    return bounded ? budget_exceeded : ok;
}

int run_weight(const WeightArgs& args) {
    std::ifstream in(args.file);
    if (!in) throw Error(Errc::invalid_argument, "cannot read " + args.file);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(Errc::invalid_argument, args.file + ": " + e.what());
    }

    std::vector<std::pair<std::string, CyclicCode>> codes;
    if (doc.contains("params")) {
        const auto result = construction_from_json(doc);
        for (auto& lc : result.codes)
            if (args.label.empty() || lc.label == args.label) codes.emplace_back(lc.label, lc.code);
        if (codes.empty()) throw Error(Errc::invalid_argument, "no code labelled '" + args.label + "'");
    } else {
        codes.emplace_back(args.label, code_from_json(doc));
    }

    const auto options = args.weight.options();
    json reports = json::array();
    int status = ok;
    for (auto& [label, code] : codes) {
        json entry = {{"label", label}, {"n", code.n()}};
        try {
            const auto w = min_hamming_weight(code, options);
            entry.update(to_json(w));
            if (!args.json)
                std::cout << (label.empty() ? "" : label + ": ") << "min weight " << w.weight << " ("
                          << to_string(w.strategy) << ", " << w.enumerated << " words)\n";
        } catch (const BudgetExceeded& e) {
            entry["weight_upper_bound"] = e.upper_bound();
            entry["enumerated"] = e.enumerated();
            if (!args.json)
                std::cout << (label.empty() ? "" : label + ": ") << "min weight <= " << e.upper_bound()
                          << " (upper bound only: budget exhausted after " << e.enumerated() << " words)\n";
            status = budget_exceeded;
        }
        reports.push_back(std::move(entry));
    }
    if (args.json) emit(codes.size() == 1 && !doc.contains("params") ? reports[0] : reports, "");
    return status;
}

}  // namespace cli
