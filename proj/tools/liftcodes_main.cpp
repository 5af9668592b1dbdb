// Command-line front end: info, degset, spread, encode, decode, simulate.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "liftcodes/simulate.hpp"

namespace {

using namespace liftcodes;
using nlohmann::json;

constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;
constexpr int kExitDecodeFailure = 2;

struct CodeArgs {
    unsigned p = 0;
    unsigned l = 1;
    unsigned q = 0; // alternative to p/l: a prime power, factored below
    unsigned m = 0;
    unsigned t = 1;
    std::string base = "spc";
    int u = -1;
    std::vector<int> modulus;
    std::string code_file;
};

void add_code_options(CLI::App* cmd, CodeArgs& args, bool need_base)
{
    cmd->add_option("--p", args.p, "prime characteristic");
    cmd->add_option("--l", args.l, "extension degree (default 1)");
    cmd->add_option("--q", args.q, "field size as a prime power (alternative to --p/--l)");
    cmd->add_option("--m", args.m, "lifted domain dimension")->required();
    cmd->add_option("--t", args.t, "base domain dimension (default 1)");
    cmd->add_option("--modulus", args.modulus, "field modulus digits, base p, low to high, length l+1");
    cmd->add_option("--code", args.code_file, "code-spec JSON file {p,l,modulus?,m,t,base:{kind,u?}}");
    if (need_base) {
        cmd->add_option("--base", args.base, "base code kind: rs | spc");
        cmd->add_option("--u", args.u, "RS max degree (required for --base rs)");
    }
}

void load_code_file(CodeArgs& args)
{
    std::ifstream in(args.code_file);
    if (!in)
        fail(Errc::IoError, "cannot open code spec: " + args.code_file);
    json spec;
    try {
        in >> spec;
    } catch (const json::exception& e) {
        fail(Errc::IoError, std::string("bad code-spec JSON: ") + e.what());
    }
    args.p = spec.at("p").get<unsigned>();
    args.l = spec.value("l", 1u);
    if (spec.contains("modulus"))
        args.modulus = spec["modulus"].get<std::vector<int>>();
    if (spec.contains("m"))
        args.m = spec["m"].get<unsigned>();
    args.t = spec.value("t", 1u);
    if (spec.contains("base")) {
        args.base = spec["base"].value("kind", "spc");
        if (spec["base"].contains("u") && !spec["base"]["u"].is_null())
            args.u = spec["base"]["u"].get<int>();
    }
}

// Factor a prime power into (p, l); exact or BadParameters.
std::pair<unsigned, unsigned> factor_prime_power(unsigned q)
{
    for (unsigned p = 2; p <= q; ++p) {
        bool prime = p >= 2;
        for (unsigned d = 2; d * d <= p; ++d)
            prime = prime && p % d != 0;
        if (!prime)
            continue;
        if (q % p != 0)
            continue;
        unsigned l = 0;
        unsigned rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++l;
        }
        require(rest == 1, Errc::BadParameters, "q must be a prime power");
        return {p, l};
    }
    fail(Errc::BadParameters, "q must be a prime power >= 2");
}

std::shared_ptr<const Field> make_field(CodeArgs& args)
{
    if (!args.code_file.empty())
        load_code_file(args);
    if (args.q != 0) {
        require(args.p == 0, Errc::BadParameters, "give either --q or --p/--l, not both");
        std::tie(args.p, args.l) = factor_prime_power(args.q);
    }
    require(args.p != 0, Errc::BadParameters, "field characteristic required (--p or --q)");
    if (args.modulus.empty())
        return std::make_shared<Field>(args.p, args.l);
    std::vector<Elem> digits(args.modulus.begin(), args.modulus.end());
    return std::make_shared<Field>(args.p, args.l, digits);
}

LiftedCode make_code(CodeArgs& args)
{
    auto field = make_field(args);
    require(args.base == "rs" || args.base == "spc", Errc::BadParameters, "base must be rs or spc");
    auto base = make_base(field, args.base == "rs" ? BaseKind::Rs : BaseKind::Spc, args.u);
    return build_lifted_code(field, args.m, args.t, base);
}

std::vector<Elem> read_symbols(std::istream& in, std::size_t count, std::uint32_t q)
{
    std::vector<Elem> out;
    out.reserve(count);
    std::uint32_t v = 0;
    while (out.size() < count && (in >> v)) {
        require(v < q, Errc::OutOfRange, "symbol out of range");
        out.push_back(static_cast<Elem>(v));
    }
    require(out.size() == count, Errc::IoError, "expected " + std::to_string(count) + " symbols");
    return out;
}

std::unique_ptr<std::ifstream> open_input(const std::string& path)
{
    auto in = std::make_unique<std::ifstream>(path);
    if (!*in)
        fail(Errc::IoError, "cannot open for reading: " + path);
    return in;
}

void write_output(const std::string& path, const std::string& content)
{
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out)
        fail(Errc::IoError, "cannot open for writing: " + path);
    out << content;
}

int run(int argc, char** argv)
{
    CLI::App app{"lifted affine-invariant codes: construction, decoding, simulation"};
    app.require_subcommand(1);

    CodeArgs args;

    auto* info = app.add_subcommand("info", "print {n, k, d_F, d_low, e_low, s} as JSON");
    add_code_options(info, args, true);

    auto* degset = app.add_subcommand("degset", "dump the good degree tuples, one per line");
    add_code_options(degset, args, true);

    auto* spread = app.add_subcommand("spread", "dump the spread, one subspace per line");
    add_code_options(spread, args, false);

    auto* encode = app.add_subcommand("encode", "encode k message symbols into a word file");
    add_code_options(encode, args, true);
    std::string in_path, out_path;
    bool systematic = false;
    encode->add_option("--in", in_path, "message file (default: stdin)");
    encode->add_option("--out", out_path, "output word file (default: stdout)");
    encode->add_flag("--systematic", systematic, "treat the message as information-position values");

    auto* decode = app.add_subcommand("decode", "decode a word file");
    add_code_options(decode, args, true);
    std::string algo = "bd";
    std::uint32_t lines = 0;
    std::uint64_t seed = 1;
    decode->add_option("--algo", algo, "bd | he");
    decode->add_flag("--systematic", systematic, "BD: decode information positions only, then re-encode");
    decode->add_option("--lines", lines, "HE: number of parity lines per position");
    decode->add_option("--seed", seed, "HE: sampling seed");
    decode->add_option("--in", in_path, "received word file (default: stdin)");
    decode->add_option("--out", out_path, "decoded word file (default: stdout)");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo word-error-rate run, CSV output");
    add_code_options(simulate, args, true);
    std::string channel = "qsc";
    double perr = 0;
    unsigned w = 0;
    std::uint64_t trials = 100;
    double delta = 0;
    simulate->add_option("--algo", algo, "bd | he");
    simulate->add_option("--channel", channel, "qsc | weight");
    simulate->add_option("--perr", perr, "qsc symbol error probability");
    simulate->add_option("--w", w, "weight channel: exact error weight");
    simulate->add_option("--trials", trials, "number of trials");
    simulate->add_option("--seed", seed, "base seed; trial i uses seed+i");
    simulate->add_option("--lines", lines, "HE: parity lines per position");
    simulate->add_option("--delta", delta, "HE: target failure probability, sizes --lines when given");
    simulate->add_option("--out", out_path, "CSV file to append to (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    if (const char* threads = std::getenv("LIFTED_CODES_THREADS"); threads != nullptr) {
#ifdef _OPENMP
        const int count = std::atoi(threads);
        if (count > 0)
            omp_set_num_threads(count);
#endif
    }

    if (info->parsed()) {
        const LiftedCode code = make_code(args);
        json out = {{"n", code.n},         {"k", code.k},
                    {"d_F", code.base->min_distance()}, {"d_low", code.d_low},
                    {"e_low", code.e_low}, {"s", code.spread.subspaces.size()}};
        std::cout << out.dump() << '\n';
    } else if (degset->parsed()) {
        const LiftedCode code = make_code(args);
        std::ostringstream out;
        for (const auto& tuple : code.good) {
            for (std::size_t i = 0; i < tuple.size(); ++i)
                out << (i > 0 ? "," : "") << tuple[i];
            out << '\n';
        }
        write_output(out_path, out.str());
    } else if (spread->parsed()) {
        const auto field = make_field(args);
        const Spread sp = build_spread(*field, args.m, args.t);
        std::ostringstream out;
        for (const auto& v : sp.subspaces) {
            for (std::size_t j = 0; j < v.basis.size(); ++j)
                out << (j > 0 ? " " : "") << index_of_point(field->q(), v.basis[j]);
            out << '\n';
        }
        write_output(out_path, out.str());
    } else if (encode->parsed()) {
        const LiftedCode code = make_code(args);
        std::vector<Elem> message;
        if (in_path.empty()) {
            message = read_symbols(std::cin, code.k, code.f().q());
        } else {
            auto in = open_input(in_path);
            message = read_symbols(*in, code.k, code.f().q());
        }
        const Word word = systematic ? lift_encode_systematic(code, message) : lift_encode(code, message);
        std::ostringstream out;
        write_word(out, word);
        write_output(out_path, out.str());
    } else if (decode->parsed()) {
        require(algo == "bd" || algo == "he", Errc::BadParameters, "unknown algorithm: " + algo);
        const LiftedCode code = make_code(args);
        Word received;
        if (in_path.empty()) {
            received = read_word(std::cin);
        } else {
            auto in = open_input(in_path);
            received = read_word(*in);
        }
        Word decoded;
        if (algo == "bd") {
            const BdResult result = decode_bd(code, received, systematic ? BdMode::Systematic : BdMode::Full);
            if (!result.ok()) {
                std::cerr << "decode failed: " << to_string(result.failure) << '\n';
                return kExitDecodeFailure;
            }
            decoded = *result.word;
        } else {
            require(lines > 0, Errc::BadParameters, "HE decoding needs --lines");
            decoded = decode_he(code, received, lines, seed);
        }
        std::ostringstream out;
        write_word(out, decoded);
        write_output(out_path, out.str());
    } else if (simulate->parsed()) {
        require(algo == "bd" || algo == "he", Errc::BadParameters, "unknown algorithm: " + algo);
        const LiftedCode code = make_code(args);
        ChannelSpec spec;
        if (channel == "qsc") {
            spec.kind = ChannelSpec::Kind::Qsc;
            spec.p_err = perr;
            make_qsc(code.f(), perr, 0); // validate
        } else if (channel == "weight") {
            spec.kind = ChannelSpec::Kind::Weight;
            spec.w = w;
            require(w <= code.n, Errc::BadWeight, "weight exceeds code length");
        } else {
            fail(Errc::BadParameters, "unknown channel: " + channel);
        }
        const Algo algorithm = algo == "he" ? Algo::He : Algo::Bd;
        if (algorithm == Algo::He && lines == 0) {
            require(delta > 0, Errc::BadParameters, "HE simulation needs --lines or --delta");
            require(spec.kind == ChannelSpec::Kind::Qsc, Errc::BadParameters, "--delta sizing needs the qsc channel");
            const double epsilon = make_qsc(code.f(), perr, 0).epsilon();
            const std::uint64_t wanted = required_lines(code.f().q(), epsilon, delta, code.k);
            lines = static_cast<std::uint32_t>(
                std::min<std::uint64_t>(wanted, code.spread.lambda_idx.size()));
        }
        const ExperimentResult result = simulate_wer(code, spec, algorithm, trials, seed, lines);
        if (out_path.empty()) {
            std::cout << csv_header() << '\n' << to_csv_row(result) << '\n';
        } else {
            std::ifstream probe(out_path);
            const bool need_header = !probe || probe.peek() == std::ifstream::traits_type::eof();
            probe.close();
            std::ofstream out(out_path, std::ios::app);
            if (!out)
                fail(Errc::IoError, "cannot open for appending: " + out_path);
            if (need_header)
                out << csv_header() << '\n';
            out << to_csv_row(result) << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const liftcodes::CodeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == liftcodes::Errc::IoError ? kExitIo : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
