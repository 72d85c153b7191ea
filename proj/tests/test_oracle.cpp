#include <doctest.h>

#include "cayham/disjoint.hpp"
#include "cayham/hampath.hpp"
#include "cayham/oracle.hpp"

using namespace cayham;

namespace {

DigraphInstance cyclic(long long order, long long a, long long b) {
    return make_instance(GroupSpec::finite(1, order), {0, a}, {0, b});
}

}  // namespace

TEST_CASE("exhaustive path counts match the closed-form count") {
    for (auto inst : {cyclic(4, 1, 3), cyclic(6, 3, 4), cyclic(6, 5, 2),
                      cyclic(12, 3, 4),
                      make_instance(GroupSpec::finite(2, 2), {1, 0}, {0, 1}),
                      make_instance(GroupSpec::finite(2, 6), {1, 1}, {0, 1})}) {
        CHECK(BigInt(oracle_enumerate_hp(inst)) == count_hp(inst));
        CHECK(oracle_delta_b_set(inst) == hp_spectrum(inst).deltas);
    }
}

TEST_CASE("hand-checkable enumeration counts") {
    CHECK(oracle_enumerate_hp(make_instance(GroupSpec::finite(2, 2), {1, 0},
                                            {0, 1})) == 8);
    CHECK(oracle_enumerate_hp(cyclic(4, 1, 3)) == 8);
}

TEST_CASE("every listed path is a hamiltonian quasi-path descriptor") {
    DigraphInstance inst = cyclic(6, 3, 4);
    std::vector<QuasiPath> listing;
    long long n = oracle_enumerate_hp(inst, 24, &listing);
    CHECK(n == 12);
    REQUIRE(listing.size() == 12);
    for (const QuasiPath& qp : listing)
        CHECK(classify_and_deltas(qp).isHamPath);
}

TEST_CASE("cycle enumeration agrees with the algebraic predicate") {
    for (auto inst : {cyclic(4, 1, 3), cyclic(6, 3, 4), cyclic(6, 5, 2),
                      cyclic(10, 2, 5),
                      make_instance(GroupSpec::finite(2, 2), {1, 0}, {0, 1})})
        CHECK((oracle_enumerate_hc(inst) > 0) == has_hc(inst));
}

TEST_CASE("brute-force pair search finds verified pairs on tiny instances") {
    for (auto inst : {cyclic(4, 1, 3), cyclic(6, 3, 4),
                      make_instance(GroupSpec::finite(2, 2), {1, 0}, {0, 1})}) {
        auto found = oracle_pair_search(inst);
        REQUIRE(found);
        PairCertificate cert{found->first, found->second,
                             PairStrategy::OracleFallback, false};
        CHECK(verify_pair(inst, cert).ok);
    }
}

TEST_CASE("two disjoint cycles exist exactly when the gcd split allows") {
    DigraphInstance torus22 = product_instance(2, 2).inst;
    CHECK(oracle_two_disjoint_hc(torus22) == product_hc_status(2, 2).hasTwoDisjointHC);
    DigraphInstance torus23 = product_instance(2, 3).inst;
    CHECK(oracle_two_disjoint_hc(torus23) == product_hc_status(2, 3).hasTwoDisjointHC);
    DigraphInstance torus33 = product_instance(3, 3).inst;
    CHECK(oracle_two_disjoint_hc(torus33) == product_hc_status(3, 3).hasTwoDisjointHC);
}

TEST_CASE("size caps are enforced") {
    DigraphInstance big = cyclic(48, 8, 5);
    CHECK_THROWS_AS(oracle_enumerate_hp(big), CapExceeded);
    CHECK_THROWS_AS(oracle_pair_search(big), CapExceeded);
}

TEST_CASE("conjecture scan at toy sizes") {
    ScanReport tiny = scan_conjecture(4);
    CHECK(tiny.bound == 4);
    CHECK(tiny.instancesTried >= 2);
    CHECK(tiny.failures.empty());

    ScanReport rep = scan_conjecture(16);
    CHECK(rep.instancesTried > tiny.instancesTried);
    CHECK(rep.failures.empty());
    long long succeeded = 0;
    for (const auto& [strategy, count] : rep.succeededByStrategy) succeeded += count;
    CHECK(succeeded == rep.instancesTried);
}

TEST_CASE("scan is deterministic across worker counts") {
    ScanReport one = scan_conjecture(12, false, 1);
    ScanReport two = scan_conjecture(12, false, 2);
    CHECK(one.instancesTried == two.instancesTried);
    CHECK(one.succeededByStrategy == two.succeededByStrategy);
    CHECK(one.failures == two.failures);
}
