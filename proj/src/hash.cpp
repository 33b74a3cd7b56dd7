#include "pnr/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace pnr {

Digest sha256(std::span<const std::uint8_t> data) {
  Digest out{};
  unsigned int len = static_cast<unsigned int>(out.size());
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  return out;
}

Sha256::Sha256() {
  auto* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("sha256 init failed");
  }
  ctx_ = ctx;
}

Sha256::~Sha256() {
  EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_));
}

Sha256& Sha256::update(std::span<const std::uint8_t> data) {
  if (EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data.data(),
                       data.size()) != 1) {
    throw std::runtime_error("sha256 update failed");
  }
  return *this;
}

Sha256& Sha256::update(std::string_view tag) {
  return update(as_span(tag));
}

Sha256& Sha256::update(const Digest& d) {
  return update(std::span<const std::uint8_t>(d.data(), d.size()));
}

Sha256& Sha256::update_u64le(std::uint64_t v) {
  std::uint8_t buf[8];
  for (int i = 0; i < 8; ++i) {
    buf[i] = static_cast<std::uint8_t>(v >> (8 * i));
  }
  return update(std::span<const std::uint8_t>(buf, 8));
}

Sha256& Sha256::update_sized(std::span<const std::uint8_t> data) {
  update_u64le(data.size());
  return update(data);
}

Sha256& Sha256::update_sized(std::string_view data) {
  return update_sized(as_span(data));
}

Digest Sha256::finish() {
  Digest out{};
  unsigned int len = static_cast<unsigned int>(out.size());
  if (EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), out.data(), &len) !=
      1) {
    throw std::runtime_error("sha256 final failed");
  }
  return out;
}

}  // namespace pnr
