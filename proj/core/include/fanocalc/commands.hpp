#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "fanocalc/rng.hpp"

namespace fano::cmds {

using nlohmann::json;

/// Replay record for a run: the results digest is over the results JSON
/// alone, so replaying (command, seed, prime) reproduces it bit-identically
/// while the timestamp stays informational.
struct RunManifest {
    std::string command;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::uint32_t> prime;
    std::string timestamp;  // ISO-8601
    std::string results_digest;
};

json to_json(const RunManifest& m);
RunManifest make_manifest(const std::string& command, std::uint64_t seed,
                          std::optional<std::uint32_t> prime, const json& results);

// --- per-module subcommands ---
json cmd_bott(int m, int N, const std::string& quotient_csv, const std::string& sub_csv);
json cmd_schur_ext_power(int d, int i);
json cmd_schur_sym_power(int d, int i);
json cmd_schur_lambda2_ext(int a, int rank);
json cmd_hodge_hypersurface(int N, int d);
json cmd_hodge_quartic_fano(std::uint32_t prime, std::uint64_t seed, bool skip_matrix,
                            const std::string& dump_matrix_path = "");
json cmd_forms_classify(const json& form);
json cmd_forms_alpha4(bool emit_form);
json cmd_forms_line_type(const json& quartic, const json& line);
json cmd_pfaffian_hull(int n, int k, int trials, std::uint64_t seed, std::uint32_t prime);
json cmd_pfaffian_pfaffian(const json& skew_matrix);

// --- one-shot reproduction commands; "pass" is set iff every check holds ---
json cmd_reproduce_hodge_num(std::uint32_t prime, std::uint64_t seed, bool skip_matrix);
json cmd_reproduce_orbit_table(std::uint64_t seed);
json cmd_verify_cohvan(int n, int k, int max_ab);
json cmd_reproduce_gr2_vanishing(int n);

bool report_passed(const json& report);

}  // namespace fano::cmds
