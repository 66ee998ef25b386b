// File formats used by the command-line tool: trajectory CSV, summary JSON,
// run manifests and SHA-256 digests.
#pragma once

#include "dunkl/dunkl.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cli {

using json = nlohmann::ordered_json;

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dunkl::DomainError("cannot read " + path);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() > 0) EVP_DigestUpdate(ctx, buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  std::string hex;
  char h[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(h, sizeof h, "%02x", md[i]);
    hex += h;
  }
  return hex;
}

/// traj,record,time,x0,...,x{N-1}: labeled positions, one row per (trajectory, record).
inline void write_ensemble_csv(const dunkl::Ensemble& e, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw dunkl::DomainError("cannot write " + path);
  out << "traj,record,time";
  for (int i = 0; i < e.n; ++i) out << ",x" << i;
  out << '\n';
  for (int tr = 0; tr < e.n_traj; ++tr)
    for (std::size_t r = 0; r < e.n_records(); ++r) {
      out << tr << ',' << r << ',' << fmt17(e.times[r]);
      for (double v : e.state(tr, r)) out << ',' << fmt17(v);
      out << '\n';
    }
}

/// pair jumps: traj,i,j,time
inline void write_jumps_csv(const dunkl::Ensemble& e, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw dunkl::DomainError("cannot write " + path);
  out << "traj,i,j,time\n";
  for (int tr = 0; tr < e.n_traj; ++tr)
    for (const auto& ev : e.jumps[static_cast<std::size_t>(tr)]) out << tr << ',' << ev.i << ',' << ev.j << ',' << fmt17(ev.time) << '\n';
}

inline dunkl::Ensemble read_ensemble_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dunkl::DomainError("cannot read " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("traj,record,time", 0) != 0)
    throw dunkl::ParseError(path + ": missing trajectory CSV header");
  dunkl::Ensemble e;
  for (char c : line) e.n += c == ',';
  e.n -= 2;
  if (e.n < 1) throw dunkl::ParseError(path + ": no position columns");
  struct Row {
    long traj;
    std::size_t record;
    double time;
    std::vector<double> x;
  };
  std::vector<Row> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != static_cast<std::size_t>(e.n) + 3)
      throw dunkl::ParseError(path + ":" + std::to_string(line_no) + ": wrong column count");
    try {
      Row r{std::stol(cells[0]), std::stoul(cells[1]), std::stod(cells[2]), {}};
      for (int i = 0; i < e.n; ++i) r.x.push_back(std::stod(cells[static_cast<std::size_t>(i) + 3]));
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw dunkl::ParseError(path + ":" + std::to_string(line_no) + ": bad number");
    }
  }
  if (rows.empty()) throw dunkl::ParseError(path + ": no data rows");
  std::size_t n_rec = 0;
  long n_traj = 0;
  for (const auto& r : rows) {
    n_rec = std::max(n_rec, r.record + 1);
    n_traj = std::max(n_traj, r.traj + 1);
  }
  if (rows.size() != n_rec * static_cast<std::size_t>(n_traj)) throw dunkl::ParseError(path + ": incomplete grid");
  e.n_traj = static_cast<int>(n_traj);
  e.times.assign(n_rec, 0.0);
  e.positions.assign(rows.size() * static_cast<std::size_t>(e.n), 0.0);
  e.jumps.resize(static_cast<std::size_t>(n_traj));
  for (const auto& r : rows) {
    e.times[r.record] = r.time;
    auto s = e.state(static_cast<int>(r.traj), r.record);
    std::copy(r.x.begin(), r.x.end(), s.begin());
  }
  return e;
}

/// Summary statistics of an ensemble, recomputable from its CSV.
inline json summary_json(const dunkl::Ensemble& e) {
  json records = json::array();
  for (std::size_t r = 1; r < e.n_records(); ++r) {
    if (e.n_traj < 2) break;
    const auto s = dunkl::ensemble_stats(e, r);
    json coords = json::array();
    for (const auto& m : s.sorted)
      coords.push_back({{"mean", fmt17(m.mean)}, {"variance", fmt17(m.variance)}, {"skewness", fmt17(m.skewness)},
                        {"excess_kurtosis", fmt17(m.excess_kurtosis)}});
    records.push_back({{"record", r},
                       {"time", fmt17(s.time)},
                       {"sorted", coords},
                       {"center_shift_mean", fmt17(s.center_shift.mean)},
                       {"center_shift_variance", fmt17(s.center_shift.variance)}});
  }
  return {{"n", e.n}, {"n_traj", e.n_traj}, {"records", records}};
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw dunkl::DomainError("cannot write " + path);
  out << text;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dunkl::DomainError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cli
