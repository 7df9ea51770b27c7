/*
 * Copyright 2026 The privlogit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "privlogit/crypto/fixed_point.hpp"
#include "privlogit/crypto/paillier.hpp"
#include "privlogit/crypto/wire.hpp"
#include "privlogit/errors.hpp"
#include "support.hpp"

using namespace privlogit;
using privlogit::testing::test_key;
using privlogit::testing::test_params;

namespace {

EncodedValue ev(long v, const mpz_class& n) { return {wrap(mpz_class(v), n)}; }

}  // namespace

TEST_SUITE("fixed_point") {
  TEST_CASE("parameter validation") {
    FixedPointParams p;
    p.modulus = mpz_class(1) << 200;  // 2·96 + 40 + 2 > 200
    CHECK_THROWS_AS(p.validate(), ParameterError);
    p.modulus = mpz_class(1) << 240;
    CHECK_NOTHROW(p.validate());
    p.frac_bits = 0;
    CHECK_THROWS_AS(p.validate(), ParameterError);
  }

  TEST_CASE("encode reference values") {
    const auto p = test_params();
    const mpz_class two32 = mpz_class(1) << 32;
    CHECK(encode(0.0, p).v == 0);
    CHECK(encode(1.5, p).v == 3 * (mpz_class(1) << 31));
    CHECK(encode(-1.0, p).v == p.modulus - two32);
    CHECK(decode({0}, p) == 0.0);
    CHECK(decode({p.modulus - two32}, p) == -1.0);
    CHECK(std::abs(decode(encode(std::numbers::pi, p), p) - std::numbers::pi) <=
          std::ldexp(1.0, -33));
  }

  TEST_CASE("range and corruption errors") {
    const auto p = test_params();
    CHECK_THROWS_AS(encode(std::ldexp(1.0, 64), p), RangeError);
    CHECK_THROWS_AS(encode(NAN, p), RangeError);
    CHECK_NOTHROW(encode(std::ldexp(1.0, 63), p));
    CHECK_THROWS_AS(decode({p.modulus >> 1}, p), CorruptionError);
    CHECK_THROWS_AS(decode({mpz_class(1) << 97}, p), CorruptionError);
    CHECK_THROWS_AS(decode({p.modulus}, p), CorruptionError);
  }

  TEST_CASE("round trip within half a grid step") {
    const auto p = test_params();
    Rng rng(3);
    const double bound = std::ldexp(1.0, -p.frac_bits - 1);
    for (int i = 0; i < 100000; ++i) {
      const double mag = std::ldexp(1.0, static_cast<int>(rng.below(60).get_si()) - 20);
      const double x = rng.uniform(-mag, mag);
      CHECK_MESSAGE(std::abs(decode(encode(x, p), p) - x) <= bound, x);
    }
  }

  TEST_CASE("ring addition and signedness") {
    const auto p = test_params();
    Rng rng(4);
    for (int i = 0; i < 2000; ++i) {
      const double a = rng.uniform(-1e6, 1e6), b = rng.uniform(-1e6, 1e6);
      const EncodedValue sum{wrap(encode(a, p).v + encode(b, p).v, p.modulus)};
      CHECK(std::abs(decode(sum, p) - (a + b)) <= std::ldexp(1.0, -p.frac_bits));
      const double g = std::ldexp(std::nearbyint(std::ldexp(a, 32)), -32);  // on the grid
      if (g != 0) CHECK(encode(-g, p).v == p.modulus - encode(g, p).v);
    }
  }

  TEST_CASE("product scale correction") {
    const auto p = test_params();
    const double ulp = std::ldexp(1.0, -p.frac_bits);
    auto prod = [&](double a, double b) {
      return product_scale_correction({wrap(encode(a, p).v * encode(b, p).v, p.modulus)}, p);
    };
    CHECK(std::abs(decode(prod(2, 3), p) - 6) <= ulp);
    CHECK(std::abs(decode(prod(-1.5, 2), p) + 3) <= ulp);
    CHECK(prod(-1.5, 2) == encode(-3, p));

    // Floor, not truncation toward zero: −(2^-32)·(0.5) → −2^-32.
    CHECK(decode(prod(-ulp, 0.5), p) == -ulp);

    Rng rng(5);
    const double one_m = std::ldexp(1.0, 20);
    for (int i = 0; i < 10000; ++i) {
      const double a = rng.uniform(-one_m, one_m), b = rng.uniform(-one_m, one_m);
      // Exact check against the product of the encoded operands, in
      // integers: |R·2^f − A·B| < 2^f, i.e. below one ulp.
      const mpz_class sa = signed_value(encode(a, p).v, p.modulus);
      const mpz_class sb = signed_value(encode(b, p).v, p.modulus);
      const mpz_class r = signed_value(prod(a, b).v, p.modulus);
      const mpz_class err = abs((r << p.frac_bits) - sa * sb);
      CHECK(err < (mpz_class(1) << p.frac_bits));
    }
    // Against the real product, input quantization dominates: each operand
    // is off by up to 2^-33, scaled by the other's magnitude.
    for (int i = 0; i < 10000; ++i) {
      const double a = rng.uniform(-1, 1), b = rng.uniform(-1, 1);
      CHECK(std::abs(decode(prod(a, b), p) - a * b) <= std::ldexp(1.0, -30));
    }

    EncodedValue huge{mpz_class(1) << (2 * p.value_bits() + 1)};
    CHECK_THROWS_AS(product_scale_correction(huge, p), RangeError);
  }
}

TEST_SUITE("paillier") {
  TEST_CASE("keygen policy and determinism") {
    Rng rng(1);
    CHECK_THROWS_AS(paillier::keygen(512, rng), ParameterError);
    const auto& kp = test_key();
    CHECK(kp.pub.bits() == 1024);
    CHECK(kp.pub.g == kp.pub.n + 1);
    Rng again(20240601);
    CHECK(paillier::keygen(1024, again).pub == kp.pub);
  }

  TEST_CASE("2048-bit modulus has exactly 2048 bits") {
    Rng rng(77);
    const auto kp = paillier::keygen(2048, rng);
    CHECK(kp.pub.bits() == 2048);
    const EncodedValue m{mpz_class(123456789)};
    CHECK(paillier::decrypt(kp, paillier::encrypt(kp.pub, m, rng)) == m);
  }

  TEST_CASE("encryption round trips") {
    const auto& kp = test_key();
    const auto& n = kp.pub.n;
    Rng rng(2);
    CHECK(paillier::decrypt(kp, paillier::encrypt(kp.pub, ev(5, n), rng)).v == 5);
    const auto z1 = paillier::encrypt(kp.pub, ev(0, n), rng);
    const auto z2 = paillier::encrypt(kp.pub, ev(0, n), rng);
    CHECK(z1 != z2);
    CHECK(paillier::decrypt(kp, z1).v == 0);
    CHECK(paillier::decrypt(kp, paillier::encrypt(kp.pub, {n - 1}, rng)).v == n - 1);
    CHECK(paillier::decrypt(kp, {1}).v == 0);
    CHECK_THROWS_AS(paillier::decrypt(kp, {kp.pub.n_squared}), MalformedCiphertext);
    CHECK_THROWS_AS(paillier::decrypt(kp, {0}), MalformedCiphertext);
    CHECK_THROWS_AS(paillier::decrypt(kp, {kp.priv.p}), MalformedCiphertext);
    CHECK_THROWS_AS(paillier::encrypt(kp.pub, {n}, rng), ParameterError);
    CHECK_THROWS_AS(paillier::encrypt(kp.pub, {-1}, rng), ParameterError);

    for (int i = 0; i < 1000; ++i) {
      const EncodedValue m{rng.below(n)};
      const auto c = i % 2 ? paillier::encrypt(kp.pub, m, rng) : paillier::encrypt(kp, m, rng);
      const auto d = paillier::decrypt(kp, c);
      CHECK(d == m);
      if (i % 50 == 0) CHECK(paillier::decrypt_textbook(kp, c) == m);
    }
  }

  TEST_CASE("CRT encryption equals public-key encryption for equal randomness") {
    const auto& kp = test_key();
    Rng rng(8);
    for (int i = 0; i < 50; ++i) {
      const EncodedValue m{rng.below(kp.pub.n)};
      const mpz_class r = paillier::random_unit(kp.pub, rng);
      CHECK(paillier::encrypt_with(kp, m, r) == paillier::encrypt_with(kp.pub, m, r));
    }
  }

  TEST_CASE("homomorphic operators") {
    const auto& kp = test_key();
    const auto& pk = kp.pub;
    const auto& n = pk.n;
    Rng rng(6);
    auto enc = [&](long v) { return paillier::encrypt(pk, ev(v, n), rng); };
    auto dec = [&](const paillier::Ciphertext& c) { return paillier::decrypt(kp, c).v; };

    CHECK(dec(paillier::add(pk, enc(2), enc(3))) == 5);
    const auto a = enc(77);
    CHECK(dec(paillier::add(pk, a, enc(0))) == 77);
    CHECK(dec(paillier::add(pk, paillier::encrypt(pk, {n - 1}, rng), enc(2))) == 1);
    CHECK(dec(paillier::sub(pk, enc(5), enc(3))) == 2);
    CHECK(dec(paillier::sub(pk, a, a)) == 0);
    CHECK(dec(paillier::sub(pk, enc(1), enc(2))) == n - 1);
    CHECK(dec(paillier::scalar_mul(pk, enc(4), ev(3, n))) == 12);
    CHECK(dec(paillier::scalar_mul(pk, a, ev(1, n))) == 77);
    CHECK(dec(paillier::scalar_mul(pk, a, ev(0, n))) == 0);
    CHECK(dec(paillier::scalar_mul(pk, a, ev(-2, n))) == n - 154);
    CHECK(dec(paillier::negate(pk, a)) == n - 77);
  }

  TEST_CASE("homomorphism over random operands") {
    const auto& kp = test_key();
    const auto& pk = kp.pub;
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
      const mpz_class a = rng.below(pk.n), b = rng.below(pk.n), k = rng.below(pk.n);
      const auto ca = paillier::encrypt(pk, {a}, rng), cb = paillier::encrypt(pk, {b}, rng);
      CHECK(paillier::decrypt(kp, paillier::add(pk, ca, cb)).v == wrap(a + b, pk.n));
      CHECK(paillier::decrypt(kp, paillier::scalar_mul(pk, ca, {k})).v == wrap(a * k, pk.n));
    }
  }

  TEST_CASE("composed with the fixed-point encoding") {
    const auto& kp = test_key();
    const auto p = test_params();
    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
      const double x = rng.uniform(-1e4, 1e4), y = rng.uniform(-1e4, 1e4);
      const auto c = paillier::add(kp.pub, paillier::encrypt(kp.pub, encode(x, p), rng),
                                   paillier::encrypt(kp.pub, encode(y, p), rng));
      CHECK(std::abs(decode(paillier::decrypt(kp, c), p) - (x + y)) <=
            std::ldexp(1.0, -p.frac_bits));
    }
  }

  TEST_CASE("probabilistic encryption never repeats") {
    const auto& pk = test_key().pub;
    Rng rng(10);
    std::set<mpz_class> seen;
    for (int i = 0; i < 2000; ++i) seen.insert(paillier::encrypt(pk, {mpz_class(42)}, rng).c);
    CHECK(seen.size() == 2000);
  }

  TEST_CASE("serial and parallel batches match") {
    const auto& kp = test_key();
    std::vector<EncodedValue> ms;
    Rng src(11);
    for (int i = 0; i < 64; ++i) ms.push_back({src.below(kp.pub.n)});
    Rng r1(12), r2(12);
    const auto s = paillier::serial::encrypt_batch(kp.pub, ms, r1);
    const auto p = paillier::parallel::encrypt_batch(kp.pub, ms, r2);
    CHECK(s == p);
    CHECK(paillier::serial::decrypt_batch(kp, s) == ms);
    CHECK(paillier::parallel::decrypt_batch(kp, p) == ms);
    Rng r3(12);
    CHECK(paillier::parallel::encrypt_batch(kp, ms, r3) == s);

    std::vector<EncodedValue> bad = ms;
    bad[5] = {kp.pub.n};
    Rng r4(1);
    CHECK_THROWS_AS(paillier::parallel::encrypt_batch(kp.pub, bad, r4), ParameterError);
  }

  TEST_CASE("key serialisation") {
    const auto& kp = test_key();
    wire::Writer w;
    paillier::write_public(w, kp.pub);
    paillier::write_private(w, kp);
    wire::Reader r(w.bytes());
    CHECK(paillier::read_public(r) == kp.pub);
    const auto back = paillier::read_private(r);
    r.expect_done();
    CHECK(back.priv.lambda_n == kp.priv.lambda_n);
    CHECK(back.priv.mu == kp.priv.mu);
  }
}

TEST_SUITE("wire") {
  TEST_CASE("scalars and big integers round trip") {
    wire::Writer w;
    w.u8(7);
    w.u16(0xBEEF);
    w.u32(0xDEADBEEF);
    w.u64(0x0123456789ABCDEFull);
    w.f64(-2.5);
    const mpz_class big = (mpz_class(1) << 1000) + 12345;
    w.bigint(big);
    w.bigint(0);
    w.signed_bigint(-big);
    w.string("hello");
    const auto bytes = w.bytes();
    CHECK(bytes[1] == 0xBE);  // big-endian
    wire::Reader r(bytes);
    CHECK(r.u8() == 7);
    CHECK(r.u16() == 0xBEEF);
    CHECK(r.u32() == 0xDEADBEEF);
    CHECK(r.u64() == 0x0123456789ABCDEFull);
    CHECK(r.f64() == -2.5);
    CHECK(r.bigint() == big);
    CHECK(r.bigint() == 0);
    CHECK(r.signed_bigint() == -big);
    CHECK(r.string() == "hello");
    CHECK(r.done());
  }

  TEST_CASE("truncated input is a parse error") {
    wire::Writer w;
    w.bigint(mpz_class(1) << 200);
    auto bytes = w.bytes();
    bytes.pop_back();
    wire::Reader r(bytes);
    CHECK_THROWS_AS(r.bigint(), ParseError);
    wire::Reader empty(std::span<const uint8_t>{});
    CHECK_THROWS_AS(empty.u32(), ParseError);
    wire::Reader extra(w.bytes());
    CHECK_THROWS_AS(extra.expect_done(), ParseError);
  }
}
