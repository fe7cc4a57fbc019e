// Command back ends and file formats: code/parameter configs (JSON), vector
// files (whitespace-separated element integers), structured reports with a
// schema version, and the deterministic benchmark harness.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsa/listdec.hpp"

namespace gsa::cli {

struct CodeConfig {
    int p{0};
    int m{1};
    std::vector<int> modulus;  // optional; empty selects the default table
    int n{0};
    int k{0};
    std::optional<std::vector<long long>> locators;
    std::optional<std::vector<long long>> multipliers;
    std::optional<std::vector<long long>> abscissas;
};

struct ParamsConfig {
    int r{0};
    int ell{0};
    std::string mode{"all"};  // none | reencoding | sierpinski | combined | all
    std::optional<std::vector<int>> J;
};

CodeConfig parse_code_config(const nlohmann::json& j);
ParamsConfig parse_params_config(const nlohmann::json& j);
CodeConfig load_code_config(const std::string& path);
ParamsConfig load_params_config(const std::string& path);

// Defaults: locators alpha^0..alpha^{n-1}, multipliers all one, abscissas
// the inverses of the locators.
GrsCode make_code(const CodeConfig& cfg);

Vector read_vector_file(const std::string& path, const Field& f, int n);
void write_vector(std::ostream& os, const Vector& v);
Poly read_message_file(const std::string& path, const Field& f, int k);

// SplitMix64; the documented seed scrambler for all deterministic commands.
uint64_t splitmix64(uint64_t x);

nlohmann::json analyze_report(const GrsCode& code, const ParamsConfig& params);
nlohmann::json decode_report(const GrsCode& code, const ParamsConfig& params, const Vector& y);

struct BenchOptions {
    int errors{0};
    int trials{1};
    uint64_t seed{0};
};

// Deterministic stdout report; wall-clock phase means go to `timing`.
nlohmann::json bench_report(const GrsCode& code, const ParamsConfig& params,
                            const BenchOptions& opt, std::ostream& timing);

// Exit codes: 0 success (decode: nonempty list), 1 empty list, 2 bad input.
int cmd_analyze(const std::string& code_path, const std::string& params_path, std::ostream& out);
int cmd_decode(const std::string& code_path, const std::string& params_path,
               const std::string& received_path, std::ostream& out);
int cmd_bench(const std::string& code_path, const std::string& params_path,
              const BenchOptions& opt, std::ostream& out, std::ostream& timing);
int cmd_gen(const std::string& code_path, const std::string& message_path, std::ostream& out);
int cmd_corrupt(const std::string& code_path, const std::string& in_path, int weight,
                uint64_t seed, std::ostream& out);

}  // namespace gsa::cli
