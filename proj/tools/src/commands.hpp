#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isodual/json_io.hpp"

namespace cli {

enum ExitCode : int { ok = 0, invalid_input = 2, verification_failed = 3, budget_exceeded = 4 };

struct WeightFlags {
    std::string strategy = "auto";
    std::uint64_t budget = 2'000'000;
    std::uint64_t residue_budget = 100'000'000;
    unsigned threads = 0;

    isodual::WeightOptions options() const;
};

struct FactorArgs {
    std::uint64_t p = 0;
    unsigned e = 1;
    std::uint64_t n = 0;
    bool json = false;
};

struct ConstructArgs {
    std::string kind;
    std::uint64_t p = 0;
    unsigned e = 1;
    std::uint64_t m = 0;
    unsigned a = 1;
    std::string g1;
    std::string g2;
    std::size_t splitting = 0;
    bool verify = false;
    bool skip_weights = false;
    WeightFlags weight;
    std::string out;
    bool json = false;
};

struct WeightArgs {
    std::string file;
    std::string label;
    WeightFlags weight;
    bool json = false;
};

struct SearchArgs {
    std::vector<std::uint64_t> primes;
    std::vector<unsigned> exponents{2};
    std::string m_range = "1:13";
    std::string a_range = "1:1";
    std::vector<std::string> kinds{"thm42", "thm44", "remark46", "duadic", "thm510"};
    WeightFlags weight;
    std::string out = "results.jsonl";
};

int run_factor(const FactorArgs& args);
int run_construct(const ConstructArgs& args);
int run_weight(const WeightArgs& args);
int run_search(const SearchArgs& args);

// Dispatch shared by construct and search.
isodual::ConstructionResult build(const std::string& kind, const isodual::RingSpec& spec, std::uint64_t m,
                                  unsigned a, std::size_t splitting_index, const std::string& g1_text = {},
                                  const std::string& g2_text = {});

void emit(const isodual::json& doc, const std::string& out_path);

}  // namespace cli
