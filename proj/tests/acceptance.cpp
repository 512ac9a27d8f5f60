// Acceptance suite: runs every top-level verification criterion at its
// pinned trial count and tolerance, printing one PASS/FAIL line each. The
// process exit code is the number of failed criteria.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cli_commands.hpp"
#include "gal2/json_io.hpp"
#include "gal2/verify.hpp"
#include "support/d2_gauss_oracle.hpp"

namespace {

using gal2::Rational;
using gal2::Rng;

constexpr std::uint64_t kSeed = 42;

// Fixed per-criterion sub-seeds keep the criteria independent of each other.
Rng make_rng(int criterion, int lane) {
    return Rng(kSeed * 1000003ULL + static_cast<std::uint64_t>(criterion) * 101ULL +
               static_cast<std::uint64_t>(lane));
}

bool run_prop(bool (*prop)(Rng&, int, double, std::string&), int criterion, int lane, int trials,
              double tol, std::string& detail) {
    Rng rng = make_rng(criterion, lane);
    return prop(rng, trials, tol, detail);
}

bool oracle_inverse_agreement(int trials, std::string& detail) {
    Rng rng = make_rng(3, 2);
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = (t % 2 == 0) ? 2 : 3;
        const auto a = gal2::random_matrix_invertible_re<Rational>(rng, n);
        const auto closed = gal2::inverse(a);
        if (!(a * closed == gal2::MatD2<Rational>::identity(n)) ||
            !(closed == gal2::testsupport::gauss_inverse(a))) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

struct SubprocessResult {
    int exit_code = -1;
    std::string output;
};

SubprocessResult run_subprocess(const std::string& command) {
    SubprocessResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

bool cli_verify_reproducible(std::string& detail) {
    const std::string command = std::string(GAL2_CLI_BIN) + " verify --seed 42 --trials 1000";
    const SubprocessResult first = run_subprocess(command);
    const SubprocessResult second = run_subprocess(command);
    if (first.exit_code != 0 || second.exit_code != 0) {
        detail = "verify exit codes " + std::to_string(first.exit_code) + ", " +
                 std::to_string(second.exit_code);
        return false;
    }
    if (first.output != second.output || first.output.empty()) {
        detail = "verify output differs between runs";
        return false;
    }
    return true;
}

bool cli_convert_round_trips(std::string& detail) {
    Rng rng = make_rng(12, 1);
    for (int t = 0; t < 100; ++t) {
        const auto m = gal2::random_motion<Rational>(rng);
        for (gal2::RepId source : gal2::kAllReps) {
            const auto e = gal2::to_rep(m, source);
            const std::string e_json = gal2::to_json(e).dump();
            for (gal2::RepId target : gal2::kAllReps) {
                std::ostringstream out1, err1, out2, err2;
                const int c1 = gal2::cli::run({"--scalar", "rational", "convert", "--to",
                                               gal2::rep_name(target), e_json},
                                              out1, err1);
                if (c1 != 0) {
                    detail = std::string("convert to ") + gal2::rep_name(target) + " failed";
                    return false;
                }
                const int c2 = gal2::cli::run({"--scalar", "rational", "convert", "--to",
                                               gal2::rep_name(source), out1.str()},
                                              out2, err2);
                if (c2 != 0) {
                    detail = std::string("convert back to ") + gal2::rep_name(source) + " failed";
                    return false;
                }
                const auto round =
                    gal2::rep_element_from_json<Rational>(gal2::json::parse(out2.str()));
                if (!gal2::approx_equal(round, e, 0.0)) {
                    detail = std::string("round trip ") + gal2::rep_name(source) + " -> " +
                             gal2::rep_name(target) + " changed the element";
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    namespace props = gal2::props;

    struct Criterion {
        int number;
        std::string description;
        std::function<bool(std::string&)> check;
    };

    const std::vector<Criterion> criteria = {
        {1,
         "algebra axioms: commutativity, associativity, distributivity on 1000 random triples "
         "(exact rational, <=1e-12 float)",
         [](std::string& d) {
             return run_prop(&props::d2_ring_axioms<Rational>, 1, 0, 1000, 0.0, d) &&
                    run_prop(&props::d2_ring_axioms<double>, 1, 1, 1000, 1e-12, d);
         }},
        {2,
         "scalar inverse: a * a^-1 = 1 exactly for 1000 random elements with |a0| > 0.1 "
         "(rational)",
         [](std::string& d) {
             return run_prop(&props::d2_inverse_identity<Rational>, 2, 0, 1000, 0.0, d);
         }},
        {3,
         "closed-form matrix inverse: A * A^-1 = I and agreement with the elimination oracle on "
         "500 2x2 and 500 3x3 matrices (exact rational)",
         [](std::string& d) {
             return run_prop(&props::mat_closed_form_inverse<Rational>, 3, 0, 1000, 0.0,
                                       d) &&
                    oracle_inverse_agreement(1000, d);
         }},
        {4,
         "determinant real part: Re det A = det Re A exactly, and invertibility coincides with "
         "nondegeneracy, on 500 random matrices (rational)",
         [](std::string& d) {
             return run_prop(&props::mat_det_real_part<Rational>, 4, 0, 500, 0.0, d) &&
                    run_prop(&props::mat_invertible_iff_nondegenerate<Rational>, 4, 1,
                                       500, 0.0, d);
         }},
        {5,
         "commutation relations [A1,A2]=0, [A2,A3]=0, [A3,A1]=A2 hold exactly for the generator "
         "triples of every matrix representation and the exterior-algebra triple",
         [](std::string& d) {
             return run_prop(&props::rep_commutation_relations<Rational>, 5, 0, 1, 0.0,
                                       d);
         }},
        {6,
         "representation isomorphisms: products map to products and conversions round trip for "
         "1000 random motion pairs in all six representations (exact rational, 1e-9 float)",
         [](std::string& d) {
             return run_prop(&props::rep_homomorphism<Rational>, 6, 0, 1000, 0.0, d) &&
                    run_prop(&props::rep_roundtrip<Rational>, 6, 1, 1000, 0.0, d) &&
                    run_prop(&props::rep_homomorphism<double>, 6, 2, 1000, 1e-9, d) &&
                    run_prop(&props::rep_roundtrip<double>, 6, 3, 1000, 1e-9, d);
         }},
        {7,
         "group membership: the 2x2 form satisfies star(g) = g^-1 and det g = 1; the 3x3 form "
         "and all four sign components are orthogonal unimodular (500 motions per backend)",
         [](std::string& d) {
             return run_prop(&props::rep_membership<Rational>, 7, 0, 500, 0.0, d) &&
                    run_prop(&props::rep_membership<double>, 7, 1, 500, 1e-9, d);
         }},
        {8,
         "action agreement: all six action paths return (x+a, y+theta*x+b) for 1000 random "
         "motion/point pairs (exact rational, 1e-9 float)",
         [](std::string& d) {
             return run_prop(&props::action_agreement<Rational>, 8, 0, 1000, 0.0, d) &&
                    run_prop(&props::action_agreement<double>, 8, 1, 1000, 1e-9, d);
         }},
        {9,
         "isometry: motions preserve the degenerate distance on 1000 random triples including "
         "forced equal first coordinates",
         [](std::string& d) {
             return run_prop(&props::action_isometry<Rational>, 9, 0, 1000, 0.0, d) &&
                    run_prop(&props::action_isometry<double>, 9, 1, 1000, 1e-9, d);
         }},
        {10,
         "stereographic commuting square: moebius after projection equals projection after the "
         "sphere action, and the homogeneous outer product reproduces the point matrix, on 500 "
         "random cases (exact rational, 1e-9 float)",
         [](std::string& d) {
             return run_prop(&props::moebius_commuting_square<Rational>, 10, 0, 500, 0.0,
                                       d) &&
                    run_prop(&props::moebius_commuting_square<double>, 10, 1, 500, 1e-9,
                                     d);
         }},
        {11,
         "exterior/clifford algebra: the motion correspondence is product-preserving (1000 "
         "pairs), the 64 basis products match the 2x2 matrix model exactly, and the sandwich "
         "action agrees with the 2x2 sandwich on 500 random cases",
         [](std::string& d) {
             return run_prop(&props::grassmann_group_isomorphism<Rational>, 11, 0, 1000,
                                       0.0, d) &&
                    run_prop(&props::cl3_matches_matrix_model<Rational>, 11, 1, 1, 0.0,
                                       d) &&
                    run_prop(&props::cl3_sandwich_agreement<Rational>, 11, 2, 500, 0.0,
                                       d) &&
                    run_prop(&props::cl3_sandwich_agreement<double>, 11, 3, 500, 1e-9, d);
         }},
        {12,
         "command line: verify --seed 42 --trials 1000 exits 0 and is bit-reproducible across "
         "two runs; convert round trips all 36 representation pairs for 100 random motions",
         [](std::string& d) { return cli_verify_reproducible(d) && cli_convert_round_trips(d); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " " << (c.number < 10 ? " " : "") << c.number
                  << ". " << c.description;
        if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
        std::cout << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures;
}
