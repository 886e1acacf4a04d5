#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace catcheck::cli {

  inline constexpr int kExitPass      = 0;
  inline constexpr int kExitFail      = 1;
  inline constexpr int kExitMalformed = 2;

  inline constexpr std::string_view kCorpusEnv = "CATCHECK_CORPUS";

  enum class Format { text, json };

  struct Options {
    // Replaces the prime of every prime-field description when set.
    std::optional<std::uint64_t> prime;
    std::size_t                  arity_bound = 3;
    std::size_t                  dim_bound   = 3;
    Format                       format      = Format::text;
    // Relative inputs not found as given are looked up here.
    std::string corpus;
    // horn-audit: "inner" or "all".
    std::string horns = "inner";
  };

  struct Job {
    std::string              command;
    std::vector<std::string> inputs;
    Options                  options;
  };

  // `report` has the sections tool, command, inputs, options, checks,
  // results, status and timing. Only timing varies between identical runs.
  struct Outcome {
    nlohmann::json report;
    int            exit_code = kExitPass;
  };

  [[nodiscard]] std::vector<std::string> const& commands();

  [[nodiscard]] Outcome run(Job const& job);

  [[nodiscard]] std::string render(nlohmann::json const& report, Format format);

  // The report with its timing section removed.
  [[nodiscard]] nlohmann::json without_timing(nlohmann::json report);

  [[nodiscard]] std::string sha256_hex(std::string_view bytes);

}  // namespace catcheck::cli
