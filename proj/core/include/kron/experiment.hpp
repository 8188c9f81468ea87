#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "kron/adversarial.hpp"
#include "kron/slln_chung.hpp"
#include "kron/transfer.hpp"

namespace kron {

/// Parsed experiment description: module-level objects plus the raw config
/// used for hashing. Unknown fields are rejected at parse time.
struct ExperimentConfig {
    SpaceDescriptor space;
    WeightSequence weights;

    bool has_sequence = false;
    VectorSequence sequence;
    MetastabilityRate partial_sum_rate;  // certified rate for the sequence's partial sums
    Rational partial_sum_bound;          // exact bound on norm(s_n), for z columns

    bool has_process = false;
    IndependentProcess process;
    Index process_length = 0;

    bool has_as_rate = false;
    AsMetastabilityRate as_rate;  // probabilistic premise rate, when supplied

    BoundSequence bounds;
    LeveledBoundSequence leveled_bounds;

    std::vector<Rational> epsilons;
    std::vector<Rational> lambdas;
    std::vector<Counterfunction> counterfunctions;

    std::string compute;  // gamma | kappa | psi | kappa_p | delta | kappa_P

    Index trials = 10000;
    std::uint64_t seed = 1;
    Rational confidence = Rational(99, 100);

    // adversary battery
    struct Candidate {
        std::string name;
        ConvergenceRate det;
        AsConvergenceRate prob;
        bool probabilistic = false;
    };
    std::vector<Candidate> candidates;
    std::vector<Index> adversary_ks;
    Index reveal_delay = 0;
    std::string adversary_kind;  // specker | slln

    std::string config_hash;
};

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

/// Machine-readable outcome of one command run.
struct ResultRecord {
    std::string command;
    std::string config_hash;
    bool all_passed = true;
    double wall_ms = 0;
    nlohmann::json rows = nlohmann::json::array();
};

ResultRecord run_rate(const ExperimentConfig& cfg);
ResultRecord run_verify(const ExperimentConfig& cfg);
ResultRecord run_adversary(const ExperimentConfig& cfg);

enum class OutputFormat { Json, Csv, Table };

std::string render(const ResultRecord& rec, OutputFormat fmt, bool with_timestamp);

}  // namespace kron
