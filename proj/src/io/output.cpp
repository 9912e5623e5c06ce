#include "mahler/io/output.hpp"

#include "mahler/error.hpp"
#include "mahler/measures/measures.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace mahler::io {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string approx_csv_header() {
  return csv_line({"theta_spec", "d", "H", "coeffs", "abs_value_lo", "abs_value_hi", "exponent_lo", "exponent_hi",
                   "ties", "zero_excluded"});
}

std::string approx_csv_row(const ApproxRecord& r) {
  const int digits = 20;
  std::string elo, ehi;
  if (r.exponent) {
    elo = r.exponent->lo_string(digits);
    ehi = r.exponent->hi_string(digits);
  }
  return csv_line({r.theta.spec, std::to_string(r.d), std::to_string(r.H), poly_json(r.f), r.value.lo_string(digits),
                   r.value.hi_string(digits), elo, ehi, std::to_string(r.ties),
                   r.exact_zero_excluded ? "true" : "false"});
}

std::string approx_csv_row(const TableRow& row) {
  if (row.record) return approx_csv_row(*row.record);
  return csv_line({"", std::to_string(row.d), std::to_string(row.H), "error: " + row.error, "", "", "", "", "", ""});
}

std::string spectra_csv(const std::vector<SpectraCell>& cells, int d) {
  std::string out = csv_line({"d", "a", "b", "attainable", "witness"});
  for (const auto& c : cells) {
    std::ostringstream a, b;
    a << c.a;
    b << c.b;
    out += csv_line({std::to_string(d), a.str(), b.str(), c.attainable ? "1" : "0",
                     c.witness ? poly_json(*c.witness) : ""});
  }
  return out;
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int n = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  while (std::getline(in, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path + ":" + std::to_string(n) + ": expected key=value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

RunConfig apply_config(const std::map<std::string, std::string>& kv, RunConfig c) {
  for (const auto& [k, v] : kv) {
    try {
      if (k == "precision_cap")
        c.precision_cap = std::stol(v);
      else if (k == "threads")
        c.threads = static_cast<unsigned>(std::stoul(v));
      else if (k == "output_dir")
        c.output_dir = v;
      else
        throw ParseError("unknown config key: " + k);
    } catch (const std::logic_error&) {
      throw ParseError("bad value for config key " + k + ": " + v);
    }
  }
  return c;
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 15];
  while (in) {
    in.read(buf, sizeof buf);
    if (in.gcount() > 0) EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

std::string manifest_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command_line"] = m.command_line;
  j["config"] = m.config;
  j["precision_cap"] = m.precision_cap;
  j["seed"] = m.seed;
  j["tool_version"] = m.tool_version;
  j["wall_clock"] = m.wall_clock;
  j["elapsed_seconds"] = m.elapsed_seconds;
  j["digests"] = m.digests;
  return j.dump(2);
}

std::string write_file(const std::string& dir, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(dir);
  const std::string path = (std::filesystem::path(dir) / name).string();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  return path;
}

}  // namespace mahler::io
