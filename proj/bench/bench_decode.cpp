// Benchmarks the decoder kernels against the serial reference path: the
// bounded-distance decoder with and without coset reuse and OpenMP, the
// systematic variant, and the high-error decoder at one and all threads.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "liftcodes/channel.hpp"
#include "liftcodes/decode_bd.hpp"
#include "liftcodes/decode_he.hpp"
#include "liftcodes/rng.hpp"

using namespace liftcodes;

namespace {

using clock_type = std::chrono::steady_clock;

Word random_codeword(const LiftedCode& code, std::uint64_t seed)
{
    rng::Stream st(seed, 0xC0DE);
    std::vector<Elem> coeffs(code.k);
    for (auto& c : coeffs)
        c = static_cast<Elem>(st.below(code.f().q()));
    return lift_encode(code, coeffs);
}

template <typename F>
double time_per_call(F&& fn, int reps)
{
    const auto start = clock_type::now();
    for (int i = 0; i < reps; ++i)
        fn(i);
    return std::chrono::duration<double>(clock_type::now() - start).count() / reps * 1e3;
}

void bench_bd()
{
    auto f = std::make_shared<Field>(2, 3);
    const LiftedCode code = build_lifted_code(f, 2, 1, make_base(f, BaseKind::Rs, 5));
    std::printf("bounded-distance decoder, lifted RS q=8 m=2 u=5 (n=%llu, e_low=%llu)\n",
                (unsigned long long)code.n, (unsigned long long)code.e_low);

    const int reps = 50;
    std::vector<Word> inputs;
    rng::Stream st(1, 0);
    for (int i = 0; i < reps; ++i)
        inputs.push_back(add_pattern(code.f(), random_codeword(code, st.next()),
                                     fixed_weight_pattern(code.f(), code.n, code.e_low, st.next())));

    const double ref = time_per_call([&](int i) { (void)decode_bd_reference(code, inputs[i]); }, reps);
    const double fast = time_per_call([&](int i) { (void)decode_bd(code, inputs[i]); }, reps);
    const double sys =
        time_per_call([&](int i) { (void)decode_bd(code, inputs[i], BdMode::Systematic); }, reps);
    std::printf("  %-32s %9.3f ms/decode\n", "serial reference (no reuse)", ref);
    std::printf("  %-32s %9.3f ms/decode  (%.1fx)\n", "coset reuse + OpenMP", fast, ref / fast);
    std::printf("  %-32s %9.3f ms/decode  (%.1fx)\n", "systematic mode", sys, ref / sys);
}

void bench_he()
{
    auto f = std::make_shared<Field>(2, 2);
    const LiftedCode code = build_lifted_code(f, 6, 1, make_base(f, BaseKind::Spc));
    std::printf("high-error decoder, lifted SPC q=4 m=6 (n=%llu, k=%llu), 800 lines, perr=0.30\n",
                (unsigned long long)code.n, (unsigned long long)code.k);

    const int reps = 10;
    std::vector<Word> inputs;
    rng::Stream st(2, 0);
    for (int i = 0; i < reps; ++i)
        inputs.push_back(
            qsc_apply(code.f(), make_qsc(code.f(), 0.30, st.next()), random_codeword(code, st.next())));

#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    const double serial = time_per_call([&](int i) { (void)decode_he(code, inputs[i], 800, 7); }, reps);
#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    const double parallel = time_per_call([&](int i) { (void)decode_he(code, inputs[i], 800, 7); }, reps);
    std::printf("  %-32s %9.3f ms/decode\n", "1 thread", serial);
    std::printf("  %-32s %9.3f ms/decode  (%.1fx)\n", "all threads", parallel, serial / parallel);
}

void bench_tally()
{
    auto f = std::make_shared<Field>(2, 2);
    const LiftedCode code = build_lifted_code(f, 2, 1, make_base(f, BaseKind::Spc));
    const Word g = add_pattern(code.f(), random_codeword(code, 5),
                               fixed_weight_pattern(code.f(), code.n, 2, 6));
    const int reps = 20000;
    const double tally = time_per_call([&](int i) { (void)local_tally(code, g, i % code.n); }, reps);
    std::printf("local tally, lifted SPC q=4 m=2: %.1f us/point\n", tally * 1e3);
}

} // namespace

int main()
{
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled\n");
#endif
    bench_bd();
    bench_he();
    bench_tally();
    return 0;
}
