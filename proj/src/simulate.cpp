#include "liftcodes/simulate.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "liftcodes/rng.hpp"

namespace liftcodes {

bool ExperimentResult::same_outcome(const ExperimentResult& other) const
{
    return p == other.p && l == other.l && m == other.m && t == other.t && base == other.base &&
           u == other.u && algo == other.algo && channel == other.channel && param == other.param &&
           trials == other.trials && word_errors == other.word_errors &&
           symbol_errors == other.symbol_errors && seed == other.seed;
}

std::string csv_header()
{
    return "p,l,m,t,base,u,algo,channel,param,trials,word_errors,symbol_errors,seed,elapsed";
}

std::string to_csv_row(const ExperimentResult& r)
{
    std::ostringstream out;
    out << r.p << ',' << r.l << ',' << r.m << ',' << r.t << ','
        << (r.base == BaseKind::Rs ? "rs" : "spc") << ',';
    if (r.u >= 0)
        out << r.u;
    out << ',' << (r.algo == Algo::Bd ? "bd" : "he") << ','
        << (r.channel == ChannelSpec::Kind::Qsc ? "qsc" : "weight") << ',' << r.param << ','
        << r.trials << ',' << r.word_errors << ',' << r.symbol_errors << ',' << r.seed << ','
        << r.elapsed_seconds;
    return out.str();
}

ExperimentResult parse_csv_row(const std::string& line)
{
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    require(fields.size() == 14, Errc::IoError, "CSV row must have 14 fields");

    ExperimentResult r;
    try {
        r.p = static_cast<unsigned>(std::stoul(fields[0]));
        r.l = static_cast<unsigned>(std::stoul(fields[1]));
        r.m = static_cast<unsigned>(std::stoul(fields[2]));
        r.t = static_cast<unsigned>(std::stoul(fields[3]));
        require(fields[4] == "rs" || fields[4] == "spc", Errc::IoError, "bad base kind");
        r.base = fields[4] == "rs" ? BaseKind::Rs : BaseKind::Spc;
        r.u = fields[5].empty() ? -1 : std::stoi(fields[5]);
        require(fields[6] == "bd" || fields[6] == "he", Errc::IoError, "bad algo");
        r.algo = fields[6] == "bd" ? Algo::Bd : Algo::He;
        require(fields[7] == "qsc" || fields[7] == "weight", Errc::IoError, "bad channel");
        r.channel = fields[7] == "qsc" ? ChannelSpec::Kind::Qsc : ChannelSpec::Kind::Weight;
        r.param = std::stod(fields[8]);
        r.trials = std::stoull(fields[9]);
        r.word_errors = std::stoull(fields[10]);
        r.symbol_errors = std::stoull(fields[11]);
        r.seed = std::stoull(fields[12]);
        r.elapsed_seconds = std::stod(fields[13]);
    } catch (const CodeError&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::IoError, "malformed CSV row");
    }
    return r;
}

ExperimentResult simulate_wer(const LiftedCode& code, const ChannelSpec& channel, Algo algo,
                              std::uint64_t trials, std::uint64_t seed, std::uint32_t he_lines)
{
    require(trials >= 1, Errc::BadParameters, "need at least one trial");
    const Field& f = code.f();

    ExperimentResult r;
    r.p = f.p();
    r.l = f.l();
    r.m = code.m;
    r.t = code.t;
    r.base = code.base->kind();
    r.u = code.base->kind() == BaseKind::Rs
              ? static_cast<int>(dynamic_cast<const RsCode&>(*code.base).max_degree())
              : -1;
    r.algo = algo;
    r.channel = channel.kind;
    r.param = channel.param();
    r.trials = trials;
    r.seed = seed;

    const auto start = std::chrono::steady_clock::now();
    std::uint64_t word_errors = 0;
    std::uint64_t symbol_errors = 0;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : word_errors, symbol_errors)
#endif
    for (std::int64_t trial = 0; trial < static_cast<std::int64_t>(trials); ++trial) {
        const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);
        rng::Stream msg_stream(trial_seed, 0x6D5347ULL);
        std::vector<Elem> message(code.k);
        for (auto& c : message)
            c = static_cast<Elem>(msg_stream.below(f.q()));
        const Word sent = lift_encode(code, message);

        Word received;
        if (channel.kind == ChannelSpec::Kind::Qsc)
            received = qsc_apply(f, make_qsc(f, channel.p_err, trial_seed), sent);
        else
            received = add_pattern(f, sent, fixed_weight_pattern(f, sent.size(), channel.w, trial_seed));

        if (algo == Algo::Bd) {
            const BdResult result = decode_bd(code, received);
            if (!result.ok()) {
                ++word_errors;
                symbol_errors += code.n;
            } else {
                const std::size_t d = distance(*result.word, sent);
                word_errors += d > 0;
                symbol_errors += d;
            }
        } else {
            const Word decoded = decode_he(code, received, he_lines, trial_seed);
            const std::size_t d = distance(decoded, sent);
            word_errors += d > 0;
            symbol_errors += d;
        }
    }

    r.word_errors = word_errors;
    r.symbol_errors = symbol_errors;
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace liftcodes
