#include "bbdec/certificates.hpp"

#include <array>

#include "json.hpp"

namespace bbdec {

using nlohmann::json;

namespace {

constexpr std::string_view kAlphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string EncodeRow(const BoolMatrix& m, int r) {
  std::vector<std::uint8_t> bytes((m.cols() + 7) / 8, 0);
  for (int c = 0; c < m.cols(); ++c) {
    if (m.Get(r, c)) bytes[c / 8] |= static_cast<std::uint8_t>(1U << (c % 8));
  }
  return Base64Encode(bytes);
}

void DecodeRow(const std::string& text, BoolMatrix& m, int r) {
  std::vector<std::uint8_t> bytes = Base64Decode(text);
  if (bytes.size() != static_cast<std::size_t>((m.cols() + 7) / 8)) {
    throw CertificateError("matrix row has the wrong width");
  }
  for (int c = 0; c < m.cols(); ++c) {
    if ((bytes[c / 8] >> (c % 8)) & 1U) m.Set(r, c);
  }
  for (int c = m.cols(); c < static_cast<int>(bytes.size()) * 8; ++c) {
    if ((bytes[c / 8] >> (c % 8)) & 1U) throw CertificateError("matrix row has bits past its width");
  }
}

json EncodeMatrix(const BoolMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) rows.push_back(EncodeRow(m, r));
  return rows;
}

BoolMatrix DecodeMatrix(const json& rows, int num_rows, int cols) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != num_rows) {
    throw CertificateError("matrix has the wrong number of rows");
  }
  BoolMatrix m(num_rows, cols);
  for (int r = 0; r < num_rows; ++r) DecodeRow(rows[r].get<std::string>(), m, r);
  return m;
}

json Parse(std::string_view text, std::string_view kind) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw CertificateError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw CertificateError("certificate must be a JSON object");
  if (j.value("version", 0) != kCertificateVersion) throw CertificateError("unsupported version");
  if (j.contains("kind") && j["kind"] != kind) {
    throw CertificateError("expected a " + std::string(kind) + " certificate");
  }
  return j;
}

template <typename F>
auto Guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw CertificateError(std::string("bad certificate field: ") + e.what());
  }
}

}  // namespace

std::string Base64Encode(const std::vector<std::uint8_t>& bytes) {
  std::string out;
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    std::uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
    for (int s = 18; s >= 0; s -= 6) out.push_back(kAlphabet[(v >> s) & 63]);
  }
  std::size_t rest = bytes.size() - i;
  if (rest > 0) {
    std::uint32_t v = bytes[i] << 16;
    if (rest == 2) v |= bytes[i + 1] << 8;
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back(rest == 2 ? kAlphabet[(v >> 6) & 63] : '=');
    out.push_back('=');
  }
  return out;
}

std::vector<std::uint8_t> Base64Decode(std::string_view text) {
  if (text.size() % 4 != 0) throw CertificateError("base64 length must be a multiple of 4");
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < text.size(); i += 4) {
    std::uint32_t v = 0;
    int pad = 0;
    for (int k = 0; k < 4; ++k) {
      char c = text[i + k];
      std::uint32_t digit = 0;
      if (c == '=') {
        if (i + 4 != text.size() || k < 2) throw CertificateError("misplaced base64 padding");
        ++pad;
      } else {
        if (pad > 0) throw CertificateError("misplaced base64 padding");
        auto pos = kAlphabet.find(c);
        if (pos == std::string_view::npos) throw CertificateError("invalid base64 character");
        digit = static_cast<std::uint32_t>(pos);
      }
      v = (v << 6) | digit;
    }
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    if (pad < 2) out.push_back(static_cast<std::uint8_t>(v >> 8));
    if (pad < 1) out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

std::string FarCertificateToJson(const FarCertificate& cert) {
  json j;
  j["version"] = kCertificateVersion;
  j["kind"] = "far";
  j["machine"] = cert.machine;
  j["direction"] = cert.left_to_right ? "left_to_right" : "right_to_left";
  j["l"] = cert.l;
  j["d"] = cert.d;
  j["delta"] = cert.delta;
  j["R0"] = EncodeMatrix(cert.r0);
  j["R1"] = EncodeMatrix(cert.r1);
  j["a"] = EncodeRow(cert.a, 0);
  j["s"] = EncodeRow(cert.s, 0);
  return j.dump();
}

FarCertificate FarCertificateFromJson(std::string_view text) {
  json j = Parse(text, "far");
  return Guarded([&] {
    FarCertificate cert;
    cert.machine = j.at("machine").get<std::string>();
    std::string direction = j.at("direction").get<std::string>();
    if (direction != "left_to_right" && direction != "right_to_left") {
      throw CertificateError("unknown direction " + direction);
    }
    cert.left_to_right = direction == "left_to_right";
    cert.l = j.at("l").get<int>();
    cert.d = j.at("d").get<int>();
    if (cert.l < 1 || cert.d < 1 || cert.d > 1 << 16) throw CertificateError("sizes out of range");
    cert.delta = j.at("delta").get<std::vector<int>>();
    cert.r0 = DecodeMatrix(j.at("R0"), cert.d, cert.d);
    cert.r1 = DecodeMatrix(j.at("R1"), cert.d, cert.d);
    cert.a = BoolMatrix::RowVector(cert.d);
    DecodeRow(j.at("a").get<std::string>(), cert.a, 0);
    cert.s = BoolMatrix::RowVector(cert.d);
    DecodeRow(j.at("s").get<std::string>(), cert.s, 0);
    return cert;
  });
}

std::string BouncerCertificateToJson(const BouncerCertificate& cert) {
  json j;
  j["version"] = kCertificateVersion;
  j["kind"] = "bouncer";
  j["machine"] = cert.machine;
  j["formula"] = cert.formula.ToString();
  j["start_step"] = cert.start_step;
  j["macro_steps"] = cert.macro_steps;
  json rules = json::array();
  for (const ShiftRule& r : cert.shift_rules) {
    rules.push_back({{"u", r.u},
                     {"state", std::string(1, StateLetter(r.state))},
                     {"dir", r.direction == Facing::kRight ? "R" : "L"},
                     {"r", r.r},
                     {"r_tilde", r.r_tilde},
                     {"steps", r.steps}});
  }
  j["shift_rules"] = rules;
  return j.dump();
}

BouncerCertificate BouncerCertificateFromJson(std::string_view text) {
  json j = Parse(text, "bouncer");
  return Guarded([&] {
    BouncerCertificate cert;
    cert.machine = j.at("machine").get<std::string>();
    try {
      cert.formula = FormulaTape::Parse(j.at("formula").get<std::string>());
    } catch (const ParseError& e) {
      throw CertificateError(std::string("malformed formula: ") + e.what());
    }
    cert.start_step = j.at("start_step").get<std::uint64_t>();
    cert.macro_steps = j.at("macro_steps").get<std::uint64_t>();
    if (j.contains("shift_rules")) {
      for (const json& r : j["shift_rules"]) {
        ShiftRule rule;
        rule.u = r.at("u").get<std::string>();
        std::string state = r.at("state").get<std::string>();
        if (state.size() != 1 || state[0] < 'A' || state[0] > 'Z') {
          throw CertificateError("bad shift rule state");
        }
        rule.state = state[0] - 'A';
        rule.direction = r.at("dir").get<std::string>() == "L" ? Facing::kLeft : Facing::kRight;
        rule.r = r.at("r").get<std::string>();
        rule.r_tilde = r.at("r_tilde").get<std::string>();
        rule.steps = r.at("steps").get<std::uint64_t>();
        cert.shift_rules.push_back(std::move(rule));
      }
    }
    return cert;
  });
}

std::vector<std::string> SplitCertificateDocuments(std::string_view text) {
  std::vector<std::string> docs;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return docs;
  if (text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw CertificateError(std::string("invalid JSON: ") + e.what());
    }
    for (const json& item : j) docs.push_back(item.dump());
    return docs;
  }
  if (text[first] == '{') {
    // A single (possibly pretty-printed) document, or JSON lines.
    if (json::accept(text)) {
      docs.emplace_back(text.substr(first));
      return docs;
    }
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) docs.emplace_back(line);
    pos = end + 1;
  }
  return docs;
}

}  // namespace bbdec
