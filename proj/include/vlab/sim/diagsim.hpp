#pragma once

#include <set>
#include <string>
#include <vector>

#include "vlab/closure/closure.hpp"
#include "vlab/ext/extensions.hpp"
#include "vlab/hensel/hensel.hpp"

namespace vlab {

/// Finite stand-in for the halting set: the members enumerated so far, and
/// the number of indices 1..budget to probe.
struct OracleApprox {
    std::set<long> members;
    long budget = 0;
};

struct Claim {
    std::string claim;
    bool verdict = false;
    std::string witness;
};

struct SimOptions {
    int max_degree = 16;
    long precision = 8; // p-adic precision of Hensel witnesses
};

/// The a-th prime other than r, a >= 1.
std::uint64_t nth_prime(long a, std::uint64_t r);
/// The first k primes congruent to 1 mod r.
std::vector<std::uint64_t> primes_one_mod(std::uint64_t r, std::size_t k);

struct ProbeResult {
    long index = 0;
    std::uint64_t degree = 0; // the a-th prime other than r
    bool member = false;
    std::size_t count = 0;   // number of extensions
    int certificate = 0;     // sum of e f
    std::vector<std::pair<int, int>> ef;
};

struct NoCompExtReport {
    std::uint64_t r = 3;
    std::vector<std::pair<long, std::uint64_t>> assignment; // member index -> q
    TowerPtr field;
    std::vector<ProbeResult> probes;
    std::vector<Claim> claims;
    bool verified = true;
};

/// Extension counts of v_r on K(r^(1/p_a)) with K = Q((r q_i)^(1/p_{a_i})).
NoCompExtReport sim_no_comp_ext(std::uint64_t r, const OracleApprox& oracle, const SimOptions& opt = {});

struct SimReport {
    std::vector<Claim> claims;
    bool verified = true;
};

/// Hensel witnesses for q_i^(1/p_i) and value-group witnesses for r^(1/p_i).
SimReport sim_henselization(std::uint64_t r, const OracleApprox& oracle, const SimOptions& opt = {});

struct AdversaryReport {
    GroupElem root_value; // v(b) for b^q = p^(m+1) t
    GroupElem witness;    // q (v(b) - gamma)
    bool target_formally_padic = true;
    std::vector<Claim> claims;
    bool verified = true;
};

AdversaryReport sim_padic_adversary(std::uint64_t p, long q, long m, const GroupElem& claimed_gamma);

} // namespace vlab
