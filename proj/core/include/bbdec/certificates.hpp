#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bbdec/bouncers.hpp"
#include "bbdec/far_direct.hpp"

namespace bbdec {

inline constexpr int kCertificateVersion = 1;

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Single-line JSON documents. Matrix rows are base64 bitmaps, bit j of a row
// at bit j % 8 of byte j / 8.
std::string FarCertificateToJson(const FarCertificate& cert);
FarCertificate FarCertificateFromJson(std::string_view text);

std::string BouncerCertificateToJson(const BouncerCertificate& cert);
BouncerCertificate BouncerCertificateFromJson(std::string_view text);

// Splits a certificate file into documents: a JSON array, or one object per line.
std::vector<std::string> SplitCertificateDocuments(std::string_view text);

std::string Base64Encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> Base64Decode(std::string_view text);

}  // namespace bbdec
