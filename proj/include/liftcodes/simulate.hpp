#pragma once

#include <iosfwd>
#include <string>

#include "liftcodes/channel.hpp"
#include "liftcodes/decode_bd.hpp"
#include "liftcodes/decode_he.hpp"

namespace liftcodes {

enum class Algo { Bd, He };

struct ChannelSpec {
    enum class Kind { Qsc, Weight };
    Kind kind = Kind::Qsc;
    double p_err = 0;  // qsc
    std::size_t w = 0; // weight
    double param() const { return kind == Kind::Qsc ? p_err : static_cast<double>(w); }
};

/// One Monte Carlo run: trials of (uniform message -> encode -> channel ->
/// decode -> compare). A failed BD decode counts the whole word as unknown
/// (n symbol errors).
struct ExperimentResult {
    unsigned p = 0, l = 0, m = 0, t = 0;
    BaseKind base = BaseKind::Spc;
    int u = -1; // RS max degree; -1 for SPC
    Algo algo = Algo::Bd;
    ChannelSpec::Kind channel = ChannelSpec::Kind::Qsc;
    double param = 0;
    std::uint64_t trials = 0;
    std::uint64_t word_errors = 0;
    std::uint64_t symbol_errors = 0;
    std::uint64_t seed = 0;
    double elapsed_seconds = 0;

    /// Equality modulo elapsed time.
    bool same_outcome(const ExperimentResult& other) const;
};

std::string csv_header();
std::string to_csv_row(const ExperimentResult& r);
ExperimentResult parse_csv_row(const std::string& line);

ExperimentResult simulate_wer(const LiftedCode& code, const ChannelSpec& channel, Algo algo,
                              std::uint64_t trials, std::uint64_t seed, std::uint32_t he_lines = 0);

} // namespace liftcodes
