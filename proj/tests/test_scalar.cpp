#include <doctest.h>

#include "qms/quaternion.hpp"
#include "qms/random.hpp"

using namespace qms;

namespace {
const Quaternion one = Quaternion::one();
const Quaternion qi = Quaternion::i();
const Quaternion qj = Quaternion::j();
const Quaternion qk = Quaternion::k();
}  // namespace

TEST_CASE("hamilton table") {
    CHECK(qi * qi == -one);
    CHECK(qj * qj == -one);
    CHECK(qk * qk == -one);
    CHECK(qi * qj * qk == -one);
    CHECK(qi * qj == qk);
    CHECK(qj * qk == qi);
    CHECK(qk * qi == qj);
    // anticommutators
    CHECK(qi * qj == -(qj * qi));
    CHECK(qj * qk == -(qk * qj));
    CHECK(qk * qi == -(qi * qk));
}

TEST_CASE("identity element and termwise expansion") {
    Rng rng(7);
    for (int it = 0; it < 20; ++it) {
        const Quaternion q = rng.quaternion(-5, 5);
        CHECK(one * q == q);
        CHECK(q * one == q);
    }
    // (i + j)(i - j) = -2k
    const Quaternion lhs = (qi + qj) * (qi - qj);
    CHECK(lhs == Quaternion(rat(0), rat(0), rat(0), rat(-2)));
}

TEST_CASE("inverses") {
    CHECK(q_inv(qi) == -qi);
    CHECK(q_inv(Quaternion(2)) == Quaternion(rat(1, 2)));
    const Quaternion q(rat(1), rat(1), rat(1), rat(1));
    const Quaternion expected(rat(1, 4), rat(-1, 4), rat(-1, 4), rat(-1, 4));
    CHECK(q_inv(q) == expected);
    CHECK(q * q_inv(q) == one);
    CHECK(q_inv(q) * q == one);
    CHECK_THROWS_AS(q_inv(Quaternion::zero()), DivisionByZero);
}

TEST_CASE("conjugation") {
    CHECK(q_conj(qk) == -qk);
    CHECK(q_conj(Quaternion(3)) == Quaternion(3));
    CHECK(q_conj(Quaternion(rat(1), rat(2), rat(0), rat(0))) ==
          Quaternion(rat(1), rat(-2), rat(0), rat(0)));
    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
        const Quaternion x = rng.quaternion(-3, 3), y = rng.quaternion(-3, 3);
        CHECK(q_conj(x * y) == q_conj(y) * q_conj(x));
    }
}

TEST_CASE("ring laws and norm multiplicativity, randomized") {
    Rng rng(2024);
    for (int it = 0; it < 300; ++it) {
        const Quaternion x = rng.quaternion(-4, 4);
        const Quaternion y = rng.quaternion(-4, 4);
        const Quaternion z = rng.quaternion(-4, 4);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((y + z) * x == y * x + z * x);
        CHECK(q_norm2(x * y) == q_norm2(x) * q_norm2(y));
        if (!x.is_zero()) CHECK(q_inv(q_inv(x)) == x);
    }
}

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == rat(1, 2));
    CHECK(parse_rational("-4/2") == rat(-2));
    CHECK(to_string(rat(5)) == "5");
    CHECK(to_string(rat(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
    CHECK_THROWS_AS(parse_rational("x"), FormatError);
    CHECK_THROWS_AS(parse_rational(""), FormatError);
}
