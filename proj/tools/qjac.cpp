// qjac: command-line front end for the quartic Jacobian library.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qj/acceptance.hpp"
#include "qj/io.hpp"

namespace {

using namespace qj;

struct Args {
  std::uint64_t seed = 0;
  std::uint32_t field = 31;
  std::string curve;
  std::string out;
  std::int64_t n = 0;
  bool any = false;
  double scale = 1.0;
  std::vector<std::string> inputs;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Runner {
 public:
  explicit Runner(const Args& a) : a_(a) {}

  const CurveContext& ctx() {
    if (!ctx_) {
      const Form F = a_.curve.empty() ? reference_quartic(Field::prime(a_.field)) : read_quartic(slurp(a_.curve));
      ctx_ = curve_validate(F);
    }
    return *ctx_;
  }

  std::string input(std::size_t i) const {
    if (i >= a_.inputs.size()) fail(ErrorCode::Parse, "missing input file " + std::to_string(i + 1));
    return slurp(a_.inputs[i]);
  }

  Divisor divisor(std::size_t i) {
    const Divisor D = read_divisor(input(i), &ctx());
    if (D.field().p() != ctx().field().p()) fail(ErrorCode::FieldMismatch, "divisor and curve have different p");
    return D;
  }

  ZPoint zpoint(std::size_t i) {
    const ZPoint z = read_zpoint(input(i));
    if (z.A.a00.field().p() != ctx().field().p()) fail(ErrorCode::FieldMismatch, "zpoint and curve have different p");
    return z;
  }

  // A zpoint file, or a divisor file converted through the pencil.
  ZPoint zpoint_or_divisor(std::size_t i) {
    const std::string text = input(i);
    if (header_kind(text) == "zpoint") return zpoint(i);
    return zpoint_from_divisor(ctx(), divisor(i));
  }

  JacobianClass cls(std::size_t i) { return make_class(ctx(), divisor(i)); }

  // Returns the text to print and the exit status.
  std::pair<std::string, int> run(const std::string& verb) {
    if (verb == "validate-curve") {
      if (!a_.inputs.empty()) a_.curve = a_.inputs[0];
      return {write_quartic(ctx().F()), 0};
    }
    if (verb == "random-divisor") {
      const Divisor D = a_.any ? random_reduced_divisor_any(ctx(), a_.seed) : random_reduced_divisor(ctx(), a_.seed);
      return {write_divisor(D), 0};
    }
    if (verb == "to-zpoint") return {write_zpoint(zpoint_from_divisor(ctx(), divisor(0))), 0};
    if (verb == "from-zpoint") {
      const ZPoint z = zpoint(0);
      return {write_divisor(divisor_from_conics(ctx(), z.A, z.B)), 0};
    }
    if (verb == "neg") {
      if (header_kind(input(0)) == "zpoint") return {write_zpoint(neg(zpoint(0))), 0};
      return {write_divisor(neg_class(ctx(), cls(0)).rep), 0};
    }
    if (verb == "add") return {write_divisor(add(ctx(), cls(0), cls(1)).rep), 0};
    if (verb == "mul") return {write_divisor(scalar_mul(ctx(), a_.n, cls(0)).rep), 0};
    if (verb == "is-zero") return {is_zero(ctx(), cls(0)) ? "true\n" : "false\n", 0};
    if (verb == "equal") return {class_equal(ctx(), cls(0), cls(1)) ? "true\n" : "false\n", 0};
    if (verb == "plucker") return {write_plucker(plucker(zpoint_or_divisor(0))), 0};
    if (verb == "kummer") {
      const KummerCoords k = kummer_coords(ctx(), zpoint_or_divisor(0));
      return {write_kummer(k, kummer_reducibility_check(k.Q)), 0};
    }
    if (verb == "tangent-dim") return {std::to_string(tangent_dimension(ctx(), zpoint_or_divisor(0))) + "\n", 0};
    if (verb == "zeta") return {write_zeta(ctx().field().p(), jacobian_order(ctx())), 0};
    if (verb == "selftest") {
      AcceptanceOptions opts;
      opts.scale = a_.scale;
      opts.coverage = true;
      int failed = 0;
      const auto results = run_acceptance(opts, [&](const CriterionResult& r) {
        std::cerr << format_result(r) << std::endl;
        failed += r.passed ? 0 : 1;
      });
      std::ostringstream os;
      os << std::left << std::setw(4) << "id" << std::setw(8) << "result" << "criterion\n";
      for (const auto& r : results)
        os << std::setw(4) << r.id << std::setw(8) << (r.passed ? "PASS" : "FAIL") << r.name << "\n";
      return {os.str(), failed ? 1 : 0};
    }
    fail(ErrorCode::Parse, "unknown verb " + verb);
  }

 private:
  Args a_;
  std::optional<CurveContext> ctx_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobian arithmetic on plane quartics with a hyper-flex"};
  app.require_subcommand(1, 1);
  Args args;
  const std::vector<std::pair<std::string, std::string>> verbs{
      {"validate-curve", "validate a quartic (file or --curve, default x^4 + y^3 z + z^4) and echo it"},
      {"random-divisor", "seeded divisor in the non-special locus"},
      {"to-zpoint", "divisor -> (A, B, G, H)"},
      {"from-zpoint", "(A, B, G, H) -> divisor"},
      {"neg", "negate a zpoint or a divisor class"},
      {"add", "sum of two divisor classes"},
      {"mul", "n times a divisor class"},
      {"is-zero", "whether a divisor class is zero"},
      {"equal", "whether two divisor classes coincide"},
      {"plucker", "Plucker vector of a zpoint or divisor"},
      {"kummer", "Kummer coordinates of a zpoint or divisor"},
      {"tangent-dim", "tangent space dimension at a zpoint or divisor"},
      {"zeta", "point counts, L-polynomial and Jacobian order"},
      {"selftest", "run the acceptance suite"}};
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", args.inputs, "input files");
    sub->add_option("--seed", args.seed, "PRNG seed");
    sub->add_option("--field", args.field, "prime p of the reference curve");
    sub->add_option("--curve", args.curve, "quartic file");
    sub->add_option("--out,-o", args.out, "write output here instead of stdout");
    if (name == "mul") sub->add_option("--n", args.n, "multiplier")->required();
    if (name == "random-divisor") sub->add_flag("--any", args.any, "allow closed points of degree 2 and 3");
    if (name == "selftest") sub->add_option("--scale", args.scale, "sample count multiplier");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    Runner runner(args);
    const auto [text, status] = runner.run(verb);
    if (args.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(args.out);
      out << text;
      if (!out) fail(ErrorCode::Parse, "cannot write " + args.out);
    }
    return status;
  } catch (const Error& e) {
    std::cerr << error_token(e.code()) << " " << e.what() << std::endl;
    return e.code() == ErrorCode::Parse ? 2 : 1;
  }
}
