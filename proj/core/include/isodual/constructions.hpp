#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isodual/cyclic_code.hpp"

namespace isodual {

enum class ClaimKind {
    isodual,           // equivalent to its own dual
    self_dual,         // equal to its own dual
    dual_of,           // dual(this) == partner
    dual_equivalent,   // dual(this) is equivalent to partner
    multiplier_image,  // multiplier(this, a) == partner
};

const char* to_string(ClaimKind kind) noexcept;
ClaimKind parse_claim_kind(const std::string& s);

struct Claim {
    ClaimKind kind;
    std::string partner;          // label of the other code, when relevant
    // multiplier_image: the map; isodual: optional witness with mu_a(C) = dual(C)
    std::int64_t multiplier = 0;

    friend bool operator==(const Claim&, const Claim&) = default;
};

struct LabeledCode {
    std::string label;
    CyclicCode code;
    std::optional<RPoly> generator;  // set for free codes built from one generator
    std::vector<Claim> claims;
};

struct ConstructionParams {
    std::string kind;  // thm42, thm44, remark46, duadic, thm510
    RingSpec spec;
    std::uint64_t m;
    unsigned a = 0;                    // 0 when the construction has no 2^a factor
    std::optional<std::uint64_t> alpha;  // primitive 2^a-th root of unity used
    std::optional<Splitting> splitting;
    std::optional<RPoly> g1;
    std::optional<RPoly> g2;
};

struct ConstructionResult {
    ConstructionParams params;
    std::vector<LabeledCode> codes;
    std::vector<std::string> notes;

    const LabeledCode& at(const std::string& label) const;
};

/// Free codes of length 2^a m generated by
///   (x^{2^{a-1}} - 1) prod_{k=0}^{2^{a-1}-1} f(alpha^{-2k-1} x)  and
///   (x^{2^{a-1}} + 1) prod_{k=1}^{2^{a-1}}   f(alpha^{-2k} x),
/// f = (x^m - 1)/(x - 1), each substituted factor made monic. Both are
/// isodual. Needs gcd(m, p) = 1 and p = 1 mod 2^a. Labels C_minus, C_plus.
ConstructionResult split_cofactor_isodual(std::uint64_t m, unsigned a, const RingSpec& spec);

/// Four free isodual codes of length 2^a m from x^m - 1 = (x - 1) g1 g2:
///   (x^{2^{a-1}} -+ 1) prod_{k=1}^{2^{a-1}} g_i(alpha^{-2k} x) prod_{k=0}^{2^{a-1}-1} g_j(alpha^{-2k-1} x)
/// for (i, j) in {(1, 2), (2, 1)}. Labels C_12_minus, C_12_plus, C_21_minus, C_21_plus.
ConstructionResult paired_factor_isodual(std::uint64_t m, unsigned a, const RingSpec& spec, const RPoly& g1,
                                         const RPoly& g2);

// <x^{n/2} - 1>, n = 2^a m.
CyclicCode half_length_code(std::uint64_t m, unsigned a, const RingSpec& spec);
ConstructionResult half_length_isodual(std::uint64_t m, unsigned a, const RingSpec& spec);

// Monic lifts (g1, g2) of the odd-like duadic generators for a splitting mod m.
std::pair<RPoly, RPoly> duadic_lifts(std::uint64_t m, const RingSpec& spec, const Splitting& splitting);

/// Lifted duadic codes of odd length m: D'_i = <g_i>, C'_i = <(x-1) g_i> and,
/// for even e, E_i = <(x-1) g_i, p^{e/2} g_1 g_2>. E-codes are self-dual when
/// -1 swaps the splitting and mutual duals when -1 fixes it.
ConstructionResult duadic_lift(std::uint64_t m, const RingSpec& spec, const Splitting& splitting);

/// Isodual codes of length 2^a m from lifted duadic generators: the four
/// paired_factor_isodual codes, plus C_i_minus / C_i_plus generated by
/// (x^{2^{a-1}} -+ 1) prod_{k=1}^{2^a} g_i(alpha^{-k} x). These are claimed
/// isodual when -1 swaps the splitting; otherwise dual(C_i_minus) is claimed
/// equivalent to C_j_plus.
ConstructionResult duadic_isodual(std::uint64_t m, unsigned a, const RingSpec& spec, const Splitting& splitting);

/* verification */

struct ClaimCheck {
    Claim claim;
    bool holds;
    std::optional<EquivalenceCertificate> certificate;
};

struct CodeVerification {
    std::string label;
    std::uint64_t cardinality_log;
    std::vector<ClaimCheck> claims;
    std::optional<WeightReport> weight;
    std::optional<std::uint64_t> weight_upper_bound;  // set when the budget ran out

    bool claims_hold() const noexcept;
};

std::vector<CodeVerification> verify(const ConstructionResult& result, const WeightOptions& options,
                                     bool compute_weights = true);

}  // namespace isodual
