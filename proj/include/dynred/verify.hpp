#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dynred/corpus.hpp"

namespace dynred {

/// Parameters of a verification run, parsed from text such as
/// "n=1,d=2..3,p=2,3,5,B=3". A token without '=' extends the previous key.
struct SuiteParams {
    std::vector<unsigned> n{1};
    std::vector<unsigned> d{2};
    std::vector<std::uint64_t> p{2, 3, 5};
    unsigned bound = 3;
    CoefficientBox box{};
};

SuiteParams parse_params(const std::string& text);

struct SuiteReport {
    std::string suite;
    std::size_t passed = 0;
    std::size_t failed = 0;
    // First failing item, as a document tagged with the failure reason.
    std::optional<MorphismDocument> counterexample;
    std::vector<std::string> notes;
};

// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Generates `count` items from `seed` and checks each:
///   prop22    valuation identities under scaling, conjugation and
///             p-unimodular change of coordinates
///   homss     good reduction implies a semistable verdict; unstable verdicts
///             carry witnesses that re-verify
///   theorem   semistable presentations admit no improving candidate at
///             bound B+1; planted non-minimal ones are unstable and recover
///             ord 0
///   globalize maps planted bad at two primes are minimized at both with
///             exact invariance at the other primes
/// Items run on `workers` threads; results are reported in item order.
SuiteReport run_suite(const std::string& suite, const SuiteParams& params, std::uint64_t seed, std::size_t count,
                      unsigned workers = 1);

// WORKERS environment variable, default 1.
unsigned workers_from_environment();

// Runs fn(0..count-1) on up to `workers` threads.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

// Random morphism with p | rho whose reduction is semistable, if one is found
// within `attempts` draws.
std::optional<Presentation> random_semistable_bad(Rng& rng, unsigned n, unsigned d, const PrimeInt& p,
                                                  const CoefficientBox& box, int attempts = 4000);

} // namespace dynred
