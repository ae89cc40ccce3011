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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "genspike/cli.hpp"

namespace {

void add_input(CLI::App* cmd, genspike::cli::Input& in) {
  cmd->add_option("file", in.path, "matroid v1 file");
  cmd->add_option("--seed-corpus", in.seed,
                  "use a built-in instance instead of a file (k4, two-lines, u<r>_<n>, spike11_<m>)");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = genspike::cli;

  CLI::App app{"genspike: generalized spikes, echidnas and their constructions"};
  app.require_subcommand(1);
  int cap = genspike::kDefaultElementCap;
  app.add_option("--cap", cap, "ground-set size cap (the rank table has 2^cap bytes)")
      ->check(CLI::Range(0, genspike::kHardElementCap));

  int s = 1, t = 1, m = 0, u = 0, v = 0;
  std::string out_prefix, cert_path, op, set;
  cli::Input input;

  auto* build = app.add_subcommand("build", "build an (s,t)-spike of order m from a (1,1)-spike");
  build->add_option("--s", s)->required();
  build->add_option("--t", t)->required();
  build->add_option("--m", m)->required();
  build->add_option("-o,--out", out_prefix, "output prefix for .mtx/.cert/.trace");

  auto* check = app.add_subcommand("check", "test the (s,u,t,v)-property");
  add_input(check, input);
  check->add_option("--s", s)->required();
  check->add_option("--u", u)->required();
  check->add_option("--t", t)->required();
  check->add_option("--v", v)->required();

  auto* recognize = app.add_subcommand("recognize", "search for an (s,t)-spike certificate");
  add_input(recognize, input);
  recognize->add_option("--s", s)->required();
  recognize->add_option("--t", t)->required();

  auto* verify = app.add_subcommand("verify", "check a certificate and the spike structure");
  add_input(verify, input);
  verify->add_option("cert", cert_path, "certificate file");

  auto* transform = app.add_subcommand("transform", "apply a matroid or spike operation");
  add_input(transform, input);
  transform->add_option("--op", op, "dual|delete|contract|quotient|lift|untip|tip")->required();
  transform->add_option("--set", set, "element list for delete/contract, e.g. 0,3");
  transform->add_option("--cert", cert_path, "certificate (quotient, lift, untip, tip)");
  transform->add_option("-o,--out", out_prefix, "output prefix for .mtx/.cert");

  auto* oracle = app.add_subcommand("oracle", "brute-force all pair partitions (n <= 12)");
  add_input(oracle, input);
  oracle->add_option("--s", s)->required();
  oracle->add_option("--t", t)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }
  genspike::set_element_cap(cap);

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  if (*build) return cli::cmd_build(s, t, m, out_prefix, out, err);
  if (*check) return cli::cmd_check(input, s, u, t, v, out, err);
  if (*recognize) return cli::cmd_recognize(input, s, t, out, err);
  if (*verify) {
    // With --seed-corpus the only positional argument is the certificate.
    if (!input.seed.empty() && cert_path.empty()) cert_path = input.path;
    if (cert_path.empty()) {
      err << "error: verify needs a certificate file\n";
      return cli::kUsage;
    }
    return cli::cmd_verify(input, cert_path, out, err);
  }
  if (*transform) return cli::cmd_transform(input, op, set, cert_path, out_prefix, out, err);
  if (*oracle) return cli::cmd_oracle(input, s, t, out, err);
  return cli::kUsage;
}
