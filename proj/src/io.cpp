// Copyright 2026 The hamca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamca/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace hamca {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* kTrajectoryFormat = "hamca-trajectory";
constexpr int kTrajectoryVersion = 1;

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(strip(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(strip(current));
  return parts;
}

BigInt integer_of(const json& v, const std::string& field) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
    return BigInt(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const GaussInt z = [&] {
      try {
        return parse_gauss_int(s);
      } catch (const ParseError&) {
        throw ParseError(field, "'" + s + "' is not a decimal integer");
      }
    }();
    if (!z.imag().is_zero() || s.find('i') != std::string::npos) {
      throw ParseError(field, "'" + s + "' is not a decimal integer");
    }
    return z.real();
  }
  throw ParseError(field, "expected an integer or a decimal string");
}

const json& member(const json& obj, const char* key, const std::string& context) {
  if (!obj.is_object()) throw ParseError(context, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(context + "." + key, "missing field");
  return *it;
}

IntMatrix int_matrix_of(const json& arr, Eigen::Index dim, const std::string& field) {
  if (!arr.is_array()) throw ParseError(field, "expected a row-major array");
  if (static_cast<Eigen::Index>(arr.size()) != dim * dim) {
    throw ParseError(field, "expected " + std::to_string(dim * dim) + " entries, found " +
                                std::to_string(arr.size()));
  }
  IntMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto k = static_cast<std::size_t>(r * dim + c);
      m(r, c) = integer_of(arr[k], field + "[" + std::to_string(k) + "]");
    }
  }
  return m;
}

ordered_json strings_of(const IntMatrix& m) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) arr.push_back(m(r, c).str());
  }
  return arr;
}

ordered_json model_json(const HamiltonianSpec& spec) {
  ordered_json j;
  j["label"] = spec.label;
  j["dim"] = spec.dim;
  j["S"] = strings_of(spec.symmetric);
  j["A"] = strings_of(spec.antisymmetric);
  return j;
}

HamiltonianSpec model_of(const json& j, const std::string& context) {
  HamiltonianSpec spec;
  const json& dim = member(j, "dim", context);
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1) {
    throw ParseError(context + ".dim", "expected a positive integer");
  }
  spec.dim = dim.get<Eigen::Index>();
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError(context + ".label", "expected a string");
    spec.label = j["label"].get<std::string>();
  }
  spec.symmetric = int_matrix_of(member(j, "S", context), spec.dim, context + ".S");
  spec.antisymmetric = int_matrix_of(member(j, "A", context), spec.dim, context + ".A");
  validate(spec);
  return spec;
}

json parse_json(std::string_view text, const std::string& context) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(context, std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return buf.str();
}

double parse_double(const std::string& s, std::string_view whole) {
  if (s.empty()) throw ParseError("complex literal", "cannot parse '" + std::string(whole) + "'");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ParseError("complex literal", "cannot parse '" + std::string(whole) + "'");
  }
  return v;
}

std::complex<double> parse_complex(const std::string& s) {
  if (s.empty()) throw ParseError("complex literal", "empty entry");
  if (s.back() != 'i') return {parse_double(s, s), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_text = split == std::string::npos ? body : body.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  return {re_text.empty() ? 0.0 : parse_double(re_text, s), parse_double(im_text, s)};
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

HamiltonianSpec parse_model(std::string_view json_text) {
  return model_of(parse_json(json_text, "model"), "model");
}

std::string serialize_model(const HamiltonianSpec& spec) {
  validate(spec);
  return model_json(spec).dump(2) + "\n";
}

HamiltonianSpec load_model(const std::filesystem::path& path) {
  return parse_model(read_file(path));
}

void save_model(const HamiltonianSpec& spec, const std::filesystem::path& path) {
  const std::string text = serialize_model(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

HamiltonianSpec resolve_model(std::string_view label_or_path) {
  if (auto spec = builtin_model(label_or_path)) return *spec;
  return load_model(std::filesystem::path(label_or_path));
}

GaussVector parse_gauss_vector(std::string_view text) {
  const std::vector<std::string> parts = split_commas(text);
  GaussVector v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    v[static_cast<Eigen::Index>(k)] = parse_gauss_int(parts[k]);
  }
  return v;
}

ComplexVector parse_complex_vector(std::string_view text) {
  const std::vector<std::string> parts = split_commas(text);
  ComplexVector v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    v[static_cast<Eigen::Index>(k)] = parse_complex(parts[k]);
  }
  return v;
}

GaussMatrix resolve_observable(std::string_view spec, const GaussMatrix& h) {
  if (spec == "identity" || spec == "1") return GaussMatrix::Identity(h.rows(), h.cols());
  if (spec == "H") return h;
  const json j = parse_json(read_file(std::filesystem::path(spec)), "observable");
  const json& dim = member(j, "dim", "observable");
  if (!dim.is_number_integer() || dim.get<Eigen::Index>() != h.rows()) {
    throw DimensionError("observable: dim does not match the model dimension " +
                         std::to_string(h.rows()));
  }
  const IntMatrix re = int_matrix_of(member(j, "re", "observable"), h.rows(), "observable.re");
  const IntMatrix im = int_matrix_of(member(j, "im", "observable"), h.rows(), "observable.im");
  GaussMatrix g(h.rows(), h.cols());
  for (Eigen::Index r = 0; r < g.rows(); ++r) {
    for (Eigen::Index c = 0; c < g.cols(); ++c) g(r, c) = GaussInt(re(r, c), im(r, c));
  }
  return g;
}

TrajectoryWriter::TrajectoryWriter(std::ostream& out, const HamiltonianSpec& model, double l)
    : out_(out), dim_(model.dim) {
  validate(model);
  ordered_json header;
  header["format"] = kTrajectoryFormat;
  header["version"] = kTrajectoryVersion;
  header["model"] = model_json(model);
  header["l"] = format_real(l);
  out_ << header.dump() << '\n';
}

void TrajectoryWriter::write(std::size_t n, const GaussVector& psi) {
  if (psi.size() != dim_) detail::throw_dimension("TrajectoryWriter", psi.size(), dim_);
  ordered_json rec;
  rec["n"] = n;
  ordered_json re = ordered_json::array();
  ordered_json im = ordered_json::array();
  for (Eigen::Index a = 0; a < psi.size(); ++a) {
    re.push_back(psi[a].real().str());
    im.push_back(psi[a].imag().str());
  }
  rec["re"] = std::move(re);
  rec["im"] = std::move(im);
  out_ << rec.dump() << '\n';
  if (!out_) throw IoError("trajectory: write failed at record " + std::to_string(n));
}

TrajectoryReader::TrajectoryReader(std::istream& in) : in_(in) {
  std::string line;
  if (!std::getline(in_, line)) throw ParseError("trajectory header", "empty file");
  const json header = parse_json(line, "trajectory header");
  const json& format = member(header, "format", "trajectory header");
  if (!format.is_string() || format.get<std::string>() != kTrajectoryFormat) {
    throw ParseError("trajectory header.format", "not a trajectory file");
  }
  const json& version = member(header, "version", "trajectory header");
  if (!version.is_number_integer() || version.get<int>() != kTrajectoryVersion) {
    throw ParseError("trajectory header.version", "unsupported version");
  }
  model_ = model_of(member(header, "model", "trajectory header"), "trajectory header.model");
  const json& l = member(header, "l", "trajectory header");
  if (l.is_string()) {
    l_ = parse_double(l.get<std::string>(), l.get<std::string>());
  } else if (l.is_number()) {
    l_ = l.get<double>();
  } else {
    throw ParseError("trajectory header.l", "expected a number");
  }
  if (!(l_ > 0)) throw ParseError("trajectory header.l", "must be positive");
}

std::optional<std::pair<std::size_t, GaussVector>> TrajectoryReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (strip(line).empty()) continue;
    const std::string where = "trajectory line " + std::to_string(line_);
    const json rec = parse_json(line, where);
    const json& n = member(rec, "n", where);
    if (!n.is_number_unsigned() && !(n.is_number_integer() && n.get<std::int64_t>() >= 0)) {
      throw ParseError(where + ".n", "expected a non-negative integer");
    }
    const auto index = n.get<std::size_t>();
    if (index != expected_) {
      throw ParseError(where + ".n", "expected record " + std::to_string(expected_) + ", found " +
                                         std::to_string(index));
    }
    const json& re = member(rec, "re", where);
    const json& im = member(rec, "im", where);
    const auto dim = static_cast<std::size_t>(model_.dim);
    if (!re.is_array() || re.size() != dim) {
      throw ParseError(where + ".re", "expected " + std::to_string(dim) + " entries");
    }
    if (!im.is_array() || im.size() != dim) {
      throw ParseError(where + ".im", "expected " + std::to_string(dim) + " entries");
    }
    GaussVector psi(model_.dim);
    for (std::size_t a = 0; a < dim; ++a) {
      psi[static_cast<Eigen::Index>(a)] =
          GaussInt(integer_of(re[a], where + ".re[" + std::to_string(a) + "]"),
                   integer_of(im[a], where + ".im[" + std::to_string(a) + "]"));
    }
    ++expected_;
    return std::make_pair(index, std::move(psi));
  }
  if (in_.bad()) throw IoError("trajectory: read failed");
  return std::nullopt;
}

void write_trajectory(std::ostream& out, const Trajectory& traj) {
  TrajectoryWriter writer(out, traj.model, traj.l);
  for (std::size_t n = 0; n < traj.states.size(); ++n) writer.write(n, traj.states[n]);
}

Trajectory read_trajectory(std::istream& in) {
  TrajectoryReader reader(in);
  Trajectory traj{reader.model(), {}, reader.l()};
  while (auto rec = reader.next()) traj.states.push_back(std::move(rec->second));
  return traj;
}

}  // namespace hamca
