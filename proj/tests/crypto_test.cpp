/*
 * Copyright 2026 The Sealed Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "sealed/channel/crypto.hpp"
#include "sealed/channel/keys.hpp"

namespace sealed::crypto {
namespace {

Bytes range_bytes(std::uint8_t from, std::uint8_t to) {
  Bytes b;
  for (int i = from; i <= to; ++i) b.push_back(static_cast<std::uint8_t>(i));
  return b;
}

TEST(HkdfTest, Rfc5869Case1) {
  Bytes ikm(22, 0x0b);
  Bytes salt = range_bytes(0x00, 0x0c);
  Bytes info = range_bytes(0xf0, 0xf9);
  Bytes okm = hkdf_sha256(salt, ikm, to_string(info), 42);
  EXPECT_EQ(to_hex(okm),
            "3cb25f25faacd57a90434f64d0362f2a2d2d0a90cf1a5a4c5db02d56ecc4c5bf34007208d5b887185865");
}

TEST(HkdfTest, EmptySaltReference) {
  Bytes okm = hkdf_sha256({}, as_bytes("abc"), "c2s", 32);
  EXPECT_EQ(to_hex(okm), "d49bb449e4ff236b14d87b28c1da1fc5af970682a3087d6afda5e743d17faec7");
}

TEST(HkdfTest, LengthLimits) {
  EXPECT_EQ(hkdf_sha256({}, as_bytes("k"), "x", 255 * 32).size(), 255u * 32);
  EXPECT_THROW(hkdf_sha256({}, as_bytes("k"), "x", 255 * 32 + 1), std::invalid_argument);
  // Prefixes agree across lengths.
  Bytes a = hkdf_sha256({}, as_bytes("k"), "x", 10);
  Bytes b = hkdf_sha256({}, as_bytes("k"), "x", 70);
  EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
}

TEST(HashTest, KnownDigests) {
  EXPECT_EQ(to_hex(view(sha256(as_bytes("abc")))),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  // RFC 4231 test case 2.
  EXPECT_EQ(to_hex(view(hmac_sha256(as_bytes("Jefe"), as_bytes("what do ya want for nothing?")))),
            "5bdcc146bf60754e6a042426089575c75a003f089d2739839dec58b964ec3843");
}

TEST(SignatureTest, SignVerify) {
  auto kp = SigningKeyPair::generate();
  Bytes msg = {1, 2, 3};
  Signature sig = sign(kp.secret_key, msg);
  EXPECT_TRUE(verify(kp.public_key, msg, sig));
  msg[0] ^= 1;
  EXPECT_FALSE(verify(kp.public_key, msg, sig));
  msg[0] ^= 1;
  auto other = SigningKeyPair::generate();
  EXPECT_FALSE(verify(other.public_key, msg, sig));
}

TEST(KeyAgreementTest, BothSidesAgree) {
  auto a = KxKeyPair::generate();
  auto b = KxKeyPair::generate();
  EXPECT_EQ(x25519(a.secret_key, b.public_key), x25519(b.secret_key, a.public_key));
  KxPublicKey zero{};
  EXPECT_THROW(x25519(a.secret_key, zero), std::runtime_error);
}

TEST(KeyAgreementTest, ConvertedSigningKeyAgrees) {
  auto id = SigningKeyPair::generate();
  KxKeyPair kx = kx_from_signing(id);
  EXPECT_EQ(kx.public_key, kx_public_from_signing(id.public_key));
  auto eph = KxKeyPair::generate();
  EXPECT_EQ(x25519(kx.secret_key, eph.public_key), x25519(eph.secret_key, kx.public_key));
}

TEST(AeadTest, RoundTripAndTamper) {
  AeadKey key = random_array<32>();
  AeadNonce nonce = random_array<12>();
  Bytes ad = {9};
  Bytes pt = {10, 20, 30, 40};
  Bytes ct = aead_seal(key, nonce, ad, pt);
  ASSERT_EQ(ct.size(), pt.size() + kAeadTagSize);
  EXPECT_EQ(aead_open(key, nonce, ad, ct), pt);
  for (std::size_t bit = 0; bit < ct.size() * 8; ++bit) {
    Bytes bad = ct;
    bad[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    EXPECT_FALSE(aead_open(key, nonce, ad, bad).has_value()) << "bit " << bit;
  }
  EXPECT_FALSE(aead_open(key, nonce, Bytes{8}, ct).has_value());
  AeadNonce other = nonce;
  other[11] ^= 1;
  EXPECT_FALSE(aead_open(key, other, ad, ct).has_value());
  EXPECT_FALSE(aead_open(key, nonce, ad, Bytes(10, 0)).has_value());
}

TEST(ConstantTimeEqualTest, Basics) {
  EXPECT_TRUE(constant_time_equal(Bytes{1, 2}, Bytes{1, 2}));
  EXPECT_FALSE(constant_time_equal(Bytes{1, 2}, Bytes{1, 3}));
  EXPECT_FALSE(constant_time_equal(Bytes{1, 2}, Bytes{1}));
}

class KeyFileTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("sealed-keys-" + to_hex(view(random_array<6>())));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(KeyFileTest, RoundTripAndValidation) {
  auto kp = SigningKeyPair::generate();
  auto sk = dir_ / "a.sk";
  write_key_file(sk, view(kp.secret_key), false, true);
  EXPECT_EQ(read_key<64>(sk), kp.secret_key);
  EXPECT_THROW(read_key<32>(sk), KeyFileError);
  EXPECT_THROW(write_key_file(sk, view(kp.secret_key), false, true), KeyFileError);
  EXPECT_NO_THROW(write_key_file(sk, view(kp.secret_key), true, true));
  auto perms = std::filesystem::status(sk).permissions();
  EXPECT_EQ(perms & std::filesystem::perms::group_read, std::filesystem::perms::none);

  auto bad = dir_ / "bad.pk";
  std::ofstream(bad) << "zz\n";
  EXPECT_THROW(read_key<32>(bad), KeyFileError);
  EXPECT_THROW(read_key<32>(dir_ / "missing"), KeyFileError);
}

}  // namespace
}  // namespace sealed::crypto
