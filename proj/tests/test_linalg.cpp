#include "support.hpp"
#include "xtrop/error.hpp"
#include "xtrop/generator.hpp"
#include "xtrop/linalg.hpp"

#include <doctest.h>

using namespace xtrop;
using testing::M;
using testing::S;

namespace {

const Matrix kPairA = M({{"0", "-2", "-1"}, {"-2", "0", "-3v"}, {"-1", "-3v", "0"}});
const Matrix kPairA2 = M({{"0", "-2", "-1"}, {"-2", "0", "-3"}, {"-1", "-3", "0"}});

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("regularity") {
    CHECK(is_regular(M({{"1", "1"}, {"2", "3"}})));
    CHECK_FALSE(is_regular(M({{"1", "2"}, {"2", "3"}})));
    CHECK_FALSE(is_regular(M({{"1", "-1"}, {"1", "-1"}})));
    CHECK_FALSE(is_regular(M({{"-inf", "-inf"}, {"1", "-1"}})));
    CHECK(is_regular(M({{"4"}})));
    CHECK_FALSE(is_regular(M({{"4v"}})));
}

TEST_CASE("adjoint") {
    CHECK(adjoint(M({{"1", "-1"}, {"2", "2"}})) == M({{"2", "-1"}, {"2", "1"}}));
    CHECK(adjoint(M({{"-1", "-2"}, {"-2", "1"}})) == M({{"1", "-2"}, {"-2", "-1"}}));
    CHECK(adjoint(identity(2)) == identity(2));
    CHECK(kind_of([] { adjoint(M({{"1"}})); }) == ErrorKind::TooSmall);
    CHECK(kind_of([] { adjoint(M({{"1", "2"}})); }) == ErrorKind::NotSquare);
}

TEST_CASE("pseudo inverse") {
    CHECK(pseudo_inverse(M({{"1", "-1"}, {"2", "2"}})) == M({{"-1", "-4"}, {"-1", "-2"}}));
    CHECK(pseudo_inverse(M({{"1", "1"}, {"2", "3"}})) == M({{"-1", "-3"}, {"-2", "-3"}}));
    CHECK(pseudo_inverse(identity(4)) == identity(4));
    CHECK(pseudo_inverse(M({{"5/2"}})) == M({{"-5/2"}}));
    CHECK(pseudo_inverse(M({{"1", "-1"}, {"4", "2"}})).rows() == 2);
    CHECK(kind_of([] { pseudo_inverse(M({{"1", "-1"}, {"4", "2"}}), InverseMode::Strict); }) == ErrorKind::Singular);
    CHECK(kind_of([] { pseudo_inverse(M({{"-inf", "1"}, {"-inf", "2"}})); }) == ErrorKind::SingularNegInf);
}

TEST_CASE("pseudo units") {
    const auto unit = is_pseudo_unit(M({{"0", "-2v"}, {"1v", "0"}}));
    CHECK(unit.is_pseudo_unit);
    CHECK(unit.is_idempotent);
    CHECK_FALSE(unit.failure_reason);
    CHECK(is_pseudo_unit(identity(3)).is_pseudo_unit);

    const auto singular = is_pseudo_unit(M({{"0", "1v"}, {"0v", "0"}}));
    CHECK_FALSE(singular.is_pseudo_unit);
    CHECK(singular.failure_reason == PseudoUnitFailure::Singular);
    CHECK(is_pseudo_unit(M({{"1", "-inf"}, {"-inf", "0"}})).failure_reason == PseudoUnitFailure::BadDiagonal);
    CHECK(is_pseudo_unit(M({{"0v", "-inf"}, {"-inf", "0"}})).failure_reason == PseudoUnitFailure::BadDiagonal);
    CHECK(is_pseudo_unit(M({{"0", "-1"}, {"-inf", "0"}})).failure_reason == PseudoUnitFailure::RealOffDiagonal);

    const Matrix non_idem = M({{"0", "1v", "0v"}, {"-inf", "0", "1v"}, {"-inf", "-inf", "0"}});
    CHECK(is_pseudo_unit(non_idem).is_pseudo_unit);
    CHECK_FALSE(is_idempotent(non_idem));
    CHECK(is_idempotent(identity(3)));
}

TEST_CASE("invert") {
    const InverseReport r = invert(M({{"1", "-1"}, {"2", "2"}}));
    CHECK(r.right_unit == M({{"0", "-3v"}, {"1v", "0"}}));
    CHECK(r.right_ok);
    CHECK(r.left_ok);
    const InverseReport s = invert(M({{"1", "-1"}, {"4", "2"}}));
    CHECK_FALSE(s.right_ok);
    CHECK(is_pseudo_unit(mat_mul(kPairA, kPairA2)).is_pseudo_unit);
}

TEST_CASE("inverse pairs") {
    CHECK(check_inverse_pair(kPairA, kPairA2));
    CHECK(check_inverse_pair(kPairA2, kPairA));
    CHECK(check_inverse_pair(kPairA, kPairA));
    const Matrix a = M({{"1", "1"}, {"2", "3"}});
    CHECK(check_inverse_pair(a, pseudo_inverse(a)));
    CHECK(kind_of([&] { check_inverse_pair(a, identity(3)); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("inversion is not multiplicative") {
    const Matrix a = M({{"1", "1"}, {"2", "3"}});
    const Matrix base = M({{"6", "4"}, {"5", "3"}});
    const Matrix inv = pseudo_inverse(a);
    CHECK(mat_mul(inv, inv) == scalar_mul(S("-8"), base));
    CHECK(pseudo_inverse(mat_mul(a, a)) == scalar_mul(S("-9v"), base));
}

TEST_CASE("converse of det inversion fails") {
    const Matrix a = M({{"-1", "-2"}, {"-2", "1"}});
    CHECK(det(a) == S("0"));
    CHECK(det(pseudo_inverse(a)) == S("0"));
    CHECK(a != pseudo_inverse(a));
}

TEST_CASE("regular iff pseudo-invertible on random matrices") {
    GenConfig cfg;
    Generator gen(99);
    int regular = 0;
    for (int k = 0; k < 2000; ++k) {
        const std::size_t n = gen.uniform(1, 5);
        const Matrix a = gen.matrix(n, n, cfg);
        const DetResult d = det_naive(a);
        if (d.value.is_neg_inf()) {
            CHECK_FALSE(is_regular(a));
            continue;
        }
        const InverseReport r = invert(a);
        CAPTURE(format_matrix(a));
        CHECK(is_regular(a) == (r.right_ok && r.left_ok));
        if (is_regular(a)) {
            ++regular;
            CHECK(is_idempotent(r.right_unit));
            CHECK(is_idempotent(r.left_unit));
            CHECK(det(r.right_unit) == S("0"));
            CHECK(det(a) == div(Scalar::one(), det(r.inverse)));
        } else {
            CHECK_FALSE((r.right_ok && r.left_ok));
        }
    }
    CHECK(regular > 100);
}
