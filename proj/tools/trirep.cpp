// trirep: command-line front end for representing codes as triangular
// configurations and cross-checking weight enumerators.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trirep/trirep.hpp"

namespace {

using namespace trirep;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::io, "cannot open " + path);
  return in;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::io, "cannot write " + path);
  out << content;
  out.close();
  require(!out.fail(), Errc::io, "write failed for " + path);
}

BinaryCode read_code(const std::string& path) {
  auto in = open_input(path);
  return BinaryCode::parse(in);
}

WeightedConfiguration read_complex(const std::string& path) {
  auto in = open_input(path);
  return parse_complex(in);
}

std::string complex_text(const TriangularConfiguration& c, std::span<const unsigned char> weights = {}) {
  std::ostringstream os;
  write_complex(os, c, weights);
  return os.str();
}

struct Guards {
  std::size_t max_dim = kMaxEnumerationDim;
  std::size_t max_triangles = kMaxMatchingTriangles;
};

int cmd_represent(const std::string& code_path, const std::string& out, const std::string& meta) {
  const BinaryCode code = read_code(code_path);
  const bool doubled = !code.is_even();
  const Representation rep = balance(represent_code(doubled ? code.doubled() : code));
  std::ostringstream m;
  write_meta(m, rep, doubled);
  write_file(out, complex_text(rep.config));
  write_file(meta, m.str());
  return kExitPass;
}

int cmd_cycles(const std::string& path) {
  const auto wc = read_complex(path);
  const auto basis = cycle_space(wc.config);
  std::cout << "dimension " << basis.size() << '\n';
  for (const auto& b : basis) std::cout << b.to_string() << '\n';
  return kExitPass;
}

int cmd_weight_enum(const std::string& code, const std::string& cycles, const std::string& matchings, const Guards& g) {
  WeightEnumerator w;
  if (!code.empty()) {
    w = read_code(code).weight_enumerator(g.max_dim);
  } else if (!cycles.empty()) {
    w = weight_enumerator_cycles(read_complex(cycles).config, g.max_dim);
  } else {
    const auto wc = read_complex(matchings);
    w = pm_weight_enumerator(wc.config, wc.weights, g.max_triangles);
  }
  w.write(std::cout);
  return kExitPass;
}

int cmd_recover(const std::string& path, std::size_t e, std::size_t n, std::size_t d, bool blocks) {
  auto in = open_input(path);
  const auto rec = recover_weight_enumerator(WeightEnumerator::parse(in), e, n, d);
  if (blocks) {
    for (std::size_t k = 0; k < rec.degree_blocks.size(); ++k) {
      for (const auto& [x, c] : rec.degree_blocks[k].terms()) std::cout << "block " << k << ' ' << x << ' ' << c << '\n';
    }
  }
  rec.folded.write(std::cout);
  return kExitPass;
}

int cmd_reduce(const std::string& path, const std::string& out, const std::string& registry) {
  const auto inst = reduce(read_complex(path).config);
  std::ostringstream reg;
  write_registry(reg, inst);
  write_file(out, complex_text(inst.config, inst.weights));
  write_file(registry, reg.str());
  return kExitPass;
}

std::size_t parse_count(const std::vector<std::string>& params, std::size_t at, const std::string& name) {
  require(params.size() > at, Errc::format, "gadget " + name + " needs a numeric parameter");
  const auto& s = params[at];
  require(!s.empty() && s.size() <= 6 && s.find_first_not_of("0123456789") == std::string::npos, Errc::format,
          "gadget parameter '" + s + "' is not a nonnegative integer");
  return std::stoul(s);
}

int cmd_gadget(const std::string& name, const std::vector<std::string>& params) {
  const auto arity = [&](std::size_t k) {
    require(params.size() == k, Errc::format, "gadget " + name + " takes " + std::to_string(k) + " parameter(s)");
  };
  LabeledGadget g;
  if (name == "disjoint") {
    arity(1);
    g = disjoint_triangles(parse_count(params, 0, name));
  } else if (name == "sphere") {
    arity(1);
    g = sphere(parse_count(params, 0, name));
  } else if (name == "tunnel") {
    arity(0);
    g = closed_tunnel();
  } else if (name == "pyramid") {
    arity(0);
    g = pyramid();
  } else if (name == "matching-edge") {
    arity(0);
    g = matching_edge();
  } else if (name == "matching-triangle") {
    arity(0);
    g = matching_triangle();
  } else if (name == "chain") {
    arity(1);
    const std::size_t n = parse_count(params, 0, name);
    require(n >= 1 && n <= 16, Errc::contract, "chain arity must be between 1 and 16");
    g = chain(n);
  } else if (name == "block") {
    require(params.size() == 1 || params.size() == 2, Errc::format, "gadget block takes <bits> [m]");
    const BitVector b = BitVector::from_string(params[0]);
    const std::size_t m = params.size() == 2 ? parse_count(params, 1, name) : sphere_size_for(b.size());
    g = represent_basis_vector(b, m);
  } else {
    fail(Errc::format, "unknown gadget '" + name +
                           "' (disjoint, sphere, tunnel, pyramid, matching-edge, matching-triangle, chain, block)");
  }
  std::cout << complex_text(g.config);
  return kExitPass;
}

// One line per check: "<PASS|FAIL|SKIP> <check> <detail>".
class Report {
 public:
  void line(const std::string& status, const std::string& check, const std::string& detail) {
    std::cout << status << ' ' << check << ' ' << detail << '\n';
    if (status == "FAIL") failed_ = true;
  }
  void check(bool ok, const std::string& check, const std::string& pass_detail, const std::string& fail_detail) {
    line(ok ? "PASS" : "FAIL", check, ok ? pass_detail : fail_detail);
  }
  bool failed() const { return failed_; }

 private:
  bool failed_ = false;
};

std::string show(const WeightEnumerator& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

int cmd_verify(const std::string& path, const Guards& g) {
  const BinaryCode code = read_code(path);
  require(code.dimension() <= g.max_dim, Errc::size_guard,
          "code dimension " + std::to_string(code.dimension()) + " exceeds --max-dim " + std::to_string(g.max_dim));
  const bool doubled = !code.is_even();
  const BinaryCode even = doubled ? code.doubled() : code;
  const Representation rep = balance(represent_code(even));
  const std::size_t e = *rep.exponent;
  Report report;
  std::cout << "INFO n=" << code.length() << " d=" << code.dimension() << " doubled=" << doubled << " e=" << e
            << " triangles=" << rep.config.triangle_count() << '\n';

  const auto bij = verify_bijection(rep, g.max_dim);
  report.check(bij.ok(), "bijection", "f maps the code onto the cycle space, minimal words to minimal cycles",
               bij.counterexample);

  std::string law_failure;
  std::vector<WeightAndDegree> items;
  for (const auto& c : even.enumerate_codewords(g.max_dim)) {
    const std::size_t deg = even.degree(c);
    items.push_back({c.popcount(), deg});
    const std::size_t got = map_f(rep, c).popcount();
    if (law_failure.empty() && got != c.popcount() + deg * e) {
      law_failure = "codeword " + c.to_string() + ": w(f(c))=" + std::to_string(got) + ", expected " +
                    std::to_string(c.popcount() + deg * e);
    }
  }
  report.check(law_failure.empty(), "weight-law", "w(f(c)) = w(c) + degree(c)*e for every codeword", law_failure);

  const WeightEnumerator kernel = weight_enumerator_cycles(rep.config, g.max_dim);
  const auto rec = recover_weight_enumerator(kernel, e, even.length(), even.dimension());
  const auto extended = split_by_degree(items, even.dimension());
  std::string block_failure;
  for (std::size_t k = 0; k <= even.dimension() && block_failure.empty(); ++k) {
    if (rec.degree_blocks[k] != extended[k].shifted(k * e)) {
      block_failure = "degree " + std::to_string(k) + ": kernel window " + show(rec.degree_blocks[k]) + ", expected " +
                      show(extended[k].shifted(k * e));
    }
  }
  report.check(block_failure.empty(), "degree-blocks", "each degree occupies its own exponent window", block_failure);

  const WeightEnumerator direct = code.weight_enumerator(g.max_dim);
  const WeightEnumerator geometric = doubled ? rec.folded.halve_exponents() : rec.folded;
  report.check(geometric == direct, "weight-polynomial", show(direct),
               "geometric route " + show(geometric) + ", direct enumeration " + show(direct));

  const MatchingInstance inst = reduce(rep.config);
  if (inst.config.triangle_count() > g.max_triangles) {
    report.line("SKIP", "matching-bijection",
                "reduced configuration has " + std::to_string(inst.config.triangle_count()) +
                    " triangles, above --max-triangles " + std::to_string(g.max_triangles));
  } else {
    const WeightEnumerator p = pm_weight_enumerator(inst.config, inst.weights, g.max_triangles);
    const bool ok = p == kernel && p.total() == (std::uint64_t{1} << even.dimension());
    report.check(ok, "matching-bijection", "perfect matchings of the reduction match the cycles by weight",
                 "matching enumerator " + show(p) + ", cycle enumerator " + show(kernel));
  }
  return report.failed() ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular representations of binary codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Guards guards;
  app.add_option("--max-dim", guards.max_dim, "Largest code or cycle-space dimension enumerated")->capture_default_str();
  app.add_option("--max-triangles", guards.max_triangles, "Largest configuration searched for perfect matchings")
      ->capture_default_str();

  std::string input, out, meta, registry;
  auto* represent = app.add_subcommand("represent", "Represent a code as a balanced triangular configuration");
  represent->add_option("code", input, "Code file")->required();
  out = "delta.tri";
  meta = "meta.txt";
  represent->add_option("--out", out, "Complex output")->capture_default_str();
  represent->add_option("--meta", meta, "Metadata output")->capture_default_str();

  auto* cycles = app.add_subcommand("cycles", "Print a cycle-space basis");
  cycles->add_option("complex", input, "Complex file")->required();

  std::string code_in, cycles_in, matchings_in;
  auto* wenum = app.add_subcommand("weight-enum", "Print a weight enumerator");
  auto* o_code = wenum->add_option("--code", code_in, "Code file: enumerate codewords");
  auto* o_cycles = wenum->add_option("--cycles", cycles_in, "Complex file: enumerate cycles");
  auto* o_match = wenum->add_option("--matchings", matchings_in, "Weighted complex file: enumerate perfect matchings");
  o_code->excludes(o_cycles)->excludes(o_match);
  o_cycles->excludes(o_match);
  wenum->require_option(1);

  std::size_t e = 0, n = 0, d = 0;
  bool blocks = false;
  auto* recover = app.add_subcommand("recover", "Fold a cycle-space enumerator back to the code enumerator");
  recover->add_option("enumerator", input, "Enumerator file")->required();
  recover->add_option("--e", e, "Balancing exponent")->required();
  recover->add_option("--n", n, "Code length")->required();
  recover->add_option("--d", d, "Code dimension")->required();
  recover->add_flag("--blocks", blocks, "Also print the per-degree windows");

  std::string reduced = "delta2.tri";
  registry = "registry.txt";
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the perfect-matching instance of a configuration");
  reduce_cmd->add_option("complex", input, "Complex file")->required();
  reduce_cmd->add_option("--out", reduced, "Weighted complex output")->capture_default_str();
  reduce_cmd->add_option("--registry", registry, "Registry output")->capture_default_str();

  std::string gadget_name;
  std::vector<std::string> gadget_params;
  auto* gadget = app.add_subcommand("gadget", "Print a gadget in the complex format");
  gadget->add_option("name", gadget_name, "Gadget name")->required();
  gadget->add_option("params", gadget_params, "Gadget parameters");

  auto* verify = app.add_subcommand("verify", "Cross-check every route for a code");
  verify->add_option("code", input, "Code file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::cerr << "ERROR usage " << msg << '\n';
    return kExitUsage;
  }

  try {
    if (*represent) return cmd_represent(input, out, meta);
    if (*cycles) return cmd_cycles(input);
    if (*wenum) return cmd_weight_enum(code_in, cycles_in, matchings_in, guards);
    if (*recover) return cmd_recover(input, e, n, d, blocks);
    if (*reduce_cmd) return cmd_reduce(input, reduced, registry);
    if (*gadget) return cmd_gadget(gadget_name, gadget_params);
    if (*verify) return cmd_verify(input, guards);
  } catch (const Error& err) {
    std::string msg = err.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::cerr << "ERROR " << to_string(err.code()) << ' ' << msg << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "ERROR internal " << err.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
