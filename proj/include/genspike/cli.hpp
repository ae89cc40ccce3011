// Copyright 2026 The Authors.
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

#pragma once

// Command implementations behind the genspike tool. Each returns the process
// exit code: 0 success / property holds, 1 semantic negative, 2 usage, parse
// or hypothesis error.

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "genspike/genspike.hpp"

namespace genspike::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

/// Where a command reads its matroid from: a file, or a built-in instance.
struct Input {
  std::string path;
  std::string seed;  // corpus name; wins over `path` when set
};

inline Matroid load_input(const Input& in) {
  if (!in.seed.empty()) return corpus::by_name(in.seed);
  if (in.path.empty()) throw ParameterError("no input matroid given");
  return load_matroid(in.path);
}

namespace detail {

inline void write_outputs(std::ostream& out, const std::string& prefix, const Matroid& m,
                          const SpikeCertificate* cert, const BuildTrace* trace) {
  if (prefix.empty()) {
    write_matroid(out, m);
    if (cert != nullptr) write_certificate(out, *cert);
    if (trace != nullptr) write_trace(out, *trace);
    return;
  }
  save_matroid(prefix + ".mtx", m);
  out << "wrote " << prefix << ".mtx\n";
  if (cert != nullptr) {
    save_certificate(prefix + ".cert", *cert);
    out << "wrote " << prefix << ".cert\n";
  }
  if (trace != nullptr) {
    std::ofstream t(prefix + ".trace");
    if (!t) throw Error("cannot write " + prefix + ".trace");
    write_trace(t, *trace);
    out << "wrote " << prefix << ".trace\n";
  }
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const HypothesisError& e) {
    err << "error: hypothesis failed: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
  } catch (const CounterexampleError& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace detail

inline int cmd_build(int s, int t, int m, const std::string& out_prefix, std::ostream& out,
                     std::ostream& err) {
  return detail::guarded(err, [&] {
    auto [mat, cert, trace] = build_spike(s, t, m);
    detail::write_outputs(out, out_prefix, mat, &cert, &trace);
    if (!out_prefix.empty()) {
      out << "built s=" << s << " t=" << t << " m=" << m << " n=" << mat.size()
          << " rank=" << mat.rank() << "\n";
    }
    return kOk;
  });
}

inline int cmd_check(const Input& in, int s, int u, int t, int v, std::ostream& out,
                     std::ostream& err) {
  return detail::guarded(err, [&] {
    const Matroid m = load_input(in);
    const PropertyReport rep = has_property(m, s, u, t, v);
    if (rep.holds) {
      out << "property=holds\n";
      return kOk;
    }
    out << "property=fails kind=" << set_kind_name(*rep.missing_kind)
        << " witness=" << join_elements(*rep.failing_subset) << "\n";
    return kNegative;
  });
}

inline int cmd_recognize(const Input& in, int s, int t, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Matroid m = load_input(in);
    if (auto cert = recognize_spike(m, s, t)) {
      write_certificate(out, *cert);
      return kOk;
    }
    out << "spike=none\n";
    return kNegative;
  });
}

inline int cmd_verify(const Input& in, const std::string& cert_path, std::ostream& out,
                      std::ostream& err) {
  return detail::guarded(err, [&] {
    const Matroid m = load_input(in);
    const SpikeCertificate cert = load_certificate(cert_path);
    if (!is_subset(cert.partition.covered(), m.ground()) || 2 * cert.order() != m.size()) {
      err << "error: certificate with " << cert.order() << " arms does not match a matroid on "
          << m.size() << " elements\n";
      return kUsage;
    }
    const CheckResult basic = check_certificate(m, cert);
    out << format_check(basic) << "\n";
    if (basic.failed()) return kNegative;

    const StructureReport report = verify_spike_structure(m, cert);
    for (const CheckResult& c : report.checks) out << format_check(c) << "\n";
    bool ok = report.passed();

    CheckResult prop{"property"};
    if (const PropertyReport p = has_spike_property(m, cert.s, cert.t); !p.holds) {
      prop.status = CheckStatus::kFail;
      prop.witness = p.failing_subset;
      ok = false;
    }
    out << format_check(prop) << "\n";

    CheckResult coech{"coechidna-implication"};
    if (cert.order() < cert.s + 2 * cert.t - 1 || prop.failed()) {
      coech.status = CheckStatus::kNotApplicable;
    } else if (!verify_coechidna_implication(m, cert.partition, cert.s, cert.t)) {
      coech.status = CheckStatus::kFail;
      ok = false;
    }
    out << format_check(coech) << "\n";
    if (report.artifact) err << "counterexample saved to " << *report.artifact << "\n";
    return ok ? kOk : kNegative;
  });
}

enum class TransformOp { kDual, kDelete, kContract, kQuotient, kLift, kUntip, kTip };

inline std::optional<TransformOp> parse_transform_op(const std::string& name) {
  if (name == "dual") return TransformOp::kDual;
  if (name == "delete") return TransformOp::kDelete;
  if (name == "contract") return TransformOp::kContract;
  if (name == "quotient") return TransformOp::kQuotient;
  if (name == "lift") return TransformOp::kLift;
  if (name == "untip") return TransformOp::kUntip;
  if (name == "tip") return TransformOp::kTip;
  return std::nullopt;
}

/// "0,3,5" -> mask. Throws ParameterError on bad input.
inline SubsetMask parse_element_list(const std::string& text, int n) {
  SubsetMask out = 0;
  if (text.empty() || text == "-") return out;
  std::size_t i = 0;
  while (i <= text.size()) {
    const std::size_t comma = text.find(',', i);
    const std::string tok = text.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
    std::size_t used = 0;
    int e = -1;
    try {
      e = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty() || e < 0 || e >= n) {
      throw ParameterError("bad element '" + tok + "' in set list");
    }
    out |= bit(e);
    if (comma == std::string::npos) break;
    i = comma + 1;
  }
  return out;
}

inline int cmd_transform(const Input& in, const std::string& op_name, const std::string& set,
                         const std::string& cert_path, const std::string& out_prefix,
                         std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto op = parse_transform_op(op_name);
    if (!op) throw ParameterError("unknown transform '" + op_name + "'");
    const Matroid m = load_input(in);
    std::optional<SpikeCertificate> cert;
    if (!cert_path.empty()) cert = load_certificate(cert_path);
    const bool needs_cert = *op == TransformOp::kQuotient || *op == TransformOp::kLift ||
                            *op == TransformOp::kUntip || *op == TransformOp::kTip;
    if (needs_cert && !cert) throw ParameterError("transform '" + op_name + "' needs --cert");

    switch (*op) {
      case TransformOp::kDual: {
        const Matroid d = dual(m);
        std::optional<SpikeCertificate> dc;
        if (cert) dc = dual_certificate(*cert);
        detail::write_outputs(out, out_prefix, d, dc ? &*dc : nullptr, nullptr);
        return kOk;
      }
      case TransformOp::kDelete:
      case TransformOp::kContract: {
        const SubsetMask x = parse_element_list(set, m.size());
        const Minor minor = *op == TransformOp::kDelete ? delete_elements(m, x) : contract_elements(m, x);
        detail::write_outputs(out, out_prefix, minor.matroid, nullptr, nullptr);
        return kOk;
      }
      case TransformOp::kQuotient:
      case TransformOp::kLift:
      case TransformOp::kUntip: {
        const CertifiedSpike r = *op == TransformOp::kQuotient ? quotient_step(m, *cert)
                                 : *op == TransformOp::kLift   ? lift_step(m, *cert)
                                                               : untip(m, *cert);
        detail::write_outputs(out, out_prefix, r.matroid, &r.certificate, nullptr);
        return kOk;
      }
      case TransformOp::kTip: {
        const Matroid plus = tip_extension(m, *cert);
        detail::write_outputs(out, out_prefix, plus, nullptr, nullptr);
        return kOk;
      }
    }
    return kUsage;
  });
}

inline int cmd_oracle(const Input& in, int s, int t, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Matroid m = load_input(in);
    const OracleResult r = spike_oracle(m, s, t);
    out << "partitions=" << r.partitions_scanned << " certificates=" << r.certificates.size() << "\n";
    for (const SpikeCertificate& c : r.certificates) write_certificate(out, c);
    return r.certificates.empty() ? kNegative : kOk;
  });
}

}  // namespace genspike::cli
