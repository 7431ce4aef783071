#include "pbwchar/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pbwchar/formulas.hpp"
#include "pbwchar/ideal.hpp"
#include "pbwchar/monomial.hpp"
#include "pbwchar/serialize.hpp"
#include "pbwchar/sl2.hpp"

namespace pbwchar::cli {

namespace {

bool level_one_only(const std::string& method) {
  return method == "ehf-prime" || method == "bosonic" || method == "supernomial";
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw UsageError("not a rational number: " + text);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

RelationSpec relations_for(const std::string& algebra, int level) {
  if (algebra == "A") return relations_A(level);
  if (algebra == "B") return relations_B(level);
  if (algebra == "C") return relations_C(level);
  throw UsageError("unknown algebra '" + algebra + "' (expected A, B or C)");
}

// A compare operand: either a method name or "file:<path>" holding a
// serialized series.
struct Operand {
  std::string name;
  Series3 series{0};
};

Operand load_operand(const std::string& token, int level, int q_max) {
  if (token.rfind("file:", 0) == 0) {
    SeriesDocument doc = from_json(read_file(token.substr(5)));
    if (doc.series.q_max() < q_max)
      throw UsageError(token + ": file truncation bound is below --qmax");
    return {token, doc.series.truncated(q_max)};
  }
  return {token, compute_character(token, level, q_max)};
}

int cmd_char(const std::string& method, int level, int q_max, const std::string& format,
             const std::string& out_path, std::ostream& out) {
  SeriesDocument doc{level, method, compute_character(method, level, q_max)};
  if (format == "json") emit(to_json(doc), out_path, out);
  else emit(to_csv(doc.series), out_path, out);
  return kOk;
}

int cmd_compare(const std::string& methods, int level, int q_max, std::ostream& out) {
  const auto tokens = split_commas(methods);
  if (tokens.size() < 2) throw UsageError("compare needs at least two methods");
  std::vector<Operand> ops;
  for (const auto& t : tokens) ops.push_back(load_operand(t, level, q_max));
  // The bosonic form carries no u-grading, so the comparison is made at u = 1.
  const bool at_u1 = std::any_of(tokens.begin(), tokens.end(), [](const auto& t) { return t == "bosonic"; });
  if (at_u1)
    for (auto& op : ops) op.series = op.series.at_u_equals_one();

  for (size_t i = 1; i < ops.size(); ++i) {
    const SeriesDiff diff = first_difference(ops[0].series, ops[i].series);
    if (diff.differs) {
      out << "MISMATCH " << ops[0].name << " vs " << ops[i].name << " at " << to_string(diff.at) << ": "
          << diff.lhs.get_str() << " != " << diff.rhs.get_str() << '\n';
      return kMismatch;
    }
  }
  out << "EQUAL level=" << level << " qmax=" << q_max << " terms=" << ops[0].series.terms().size()
      << (at_u1 ? " (compared at u=1)" : "") << " methods=" << methods << '\n';
  return kOk;
}

int cmd_basis(int level, int q_max, const std::string& variant, const std::string& out_path,
              std::ostream& out) {
  ConstraintProfile p;
  if (variant == "ehf") p = ConstraintProfile::ehf(level);
  else if (variant == "ehf-prime") {
    if (level != 1) throw UsageError("variant ehf-prime is defined at level 1 only");
    p = ConstraintProfile::ehf_prime();
  } else {
    throw UsageError("unknown variant '" + variant + "' (expected ehf or ehf-prime)");
  }
  std::ostringstream os;
  for (const auto& m : enumerate(p, q_max)) os << to_string(m) << '\n';
  emit(os.str(), out_path, out);
  return kOk;
}

int cmd_dims(const std::string& algebra, int level, int q_max, const std::string& out_path,
             std::ostream& out) {
  QuotientOracle oracle(relations_for(algebra, level), q_max);
  std::ostringstream os;
  write_dimension_csv(os, oracle.dimension_table());
  emit(os.str(), out_path, out);
  return kOk;
}

int cmd_standard(int q_max, const std::string& order_name, std::ostream& out) {
  MonomialOrder order;
  if (order_name == "first") order = MonomialOrder::FirstDifference;
  else if (order_name == "last") order = MonomialOrder::LastDifference;
  else throw UsageError("unknown order '" + order_name + "' (expected first or last)");
  QuotientOracle oracle(relations_B(1), q_max);
  std::map<TriDegree, std::vector<OrderedMonomial>> ehf_prime;
  for (auto& m : enumerate(ConstraintProfile::ehf_prime(), q_max)) ehf_prime[m.tridegree()].push_back(m);

  bool all_match = true;
  out << "q,z,u,n_standard,n_ehf_prime,match\n";
  for (const auto& d : oracle.degrees()) {
    auto standard = oracle.standard_monomials(d, order);
    auto expected = ehf_prime[d];
    auto less = [](const OrderedMonomial& x, const OrderedMonomial& y) { return lex_compare(x, y) < 0; };
    std::sort(standard.begin(), standard.end(), less);
    std::sort(expected.begin(), expected.end(), less);
    const bool match = standard == expected;
    all_match = all_match && match;
    out << d.q << ',' << d.z << ',' << d.u << ',' << standard.size() << ',' << expected.size() << ','
        << (match ? "yes" : "no") << '\n';
  }
  out << (all_match ? "standard monomials coincide with ehf' monomials\n"
                    : "standard monomials differ from ehf' monomials\n");
  return all_match ? kOk : kMismatch;
}

int cmd_degen(const std::string& s_text, std::ostream& out) {
  const Rational s = parse_rational(s_text);
  if (s <= 0 || s > 1) throw UsageError("--s must lie in (0, 1]");
  const DegenTriple t = degeneration_matrices(s);
  const bool ok = satisfies_sl2_relations(t);
  out << "s=" << rational_str(s) << " eps=" << rational_str(t.epsilon) << '\n';
  out << "sl2 relations: " << (ok ? "OK" : "FAILED");
  if (s == 1) {
    out << "; limits trivial at s=1\n";
    return ok ? kOk : kMismatch;
  }
  out << '\n';
  std::vector<Rational> seq;
  for (Rational x = s; x > Rational(1, 1000); x /= 2) seq.push_back(x);
  const DegenLimitReport report = degeneration_limits(seq);
  out << "s,e_residual,h_residual,f_residual\n";
  for (const auto& row : report.rows)
    out << rational_str(row.s) << ',' << rational_str(row.e_residual) << ',' << rational_str(row.h_residual)
        << ',' << rational_str(row.f_residual) << '\n';
  out << "residuals decrease monotonically: " << (report.monotone ? "yes" : "no") << '\n';
  return ok && report.monotone ? kOk : kMismatch;
}

}  // namespace

const std::vector<std::string>& method_names() {
  static const std::vector<std::string> kNames = {"ehf",     "ehf-prime",  "fermionic",  "bosonic",   "supernomial",
                                                  "lattice", "quotient-a", "quotient-b", "quotient-c"};
  return kNames;
}

Series3 compute_character(const std::string& method, int level, int q_max) {
  if (std::find(method_names().begin(), method_names().end(), method) == method_names().end())
    throw UsageError("unknown method '" + method + "'");
  if (level < 1) throw UsageError("--level must be >= 1");
  if (q_max < 0) throw UsageError("--qmax must be >= 0");
  if (level_one_only(method) && level != 1) throw UsageError("method '" + method + "' is defined at level 1 only");

  if (method == "ehf") return character_of(ConstraintProfile::ehf(level), q_max);
  if (method == "ehf-prime") return character_of(ConstraintProfile::ehf_prime(), q_max);
  if (method == "fermionic") return level == 1 ? fermionic_level1(q_max) : fermionic_level_k(level, q_max);
  if (method == "bosonic") return bosonic_level1(q_max);
  if (method == "supernomial") return fused_character_level1(q_max);
  if (method == "lattice") return principal_char(gram_matrix_Qk(level), q_max);
  if (method == "quotient-a") return quotient_character(relations_A(level), q_max);
  if (method == "quotient-b") return quotient_character(relations_B(level), q_max);
  return quotient_character(relations_C(level), q_max);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded characters of PBW-filtered vacuum modules of affine sl2", "pbwchar"};
  app.require_subcommand(1);

  int level = 1;
  int q_max = 6;
  std::string method, methods, variant = "ehf", algebra = "B", s_text = "1", format = "json", out_path;
  std::string order_name = "first";

  auto* c_char = app.add_subcommand("char", "Compute a character by one method");
  c_char->add_option("--method", method, "Method name")->required();
  c_char->add_option("--level", level, "Level k >= 1");
  c_char->add_option("--qmax", q_max, "Truncation bound in q");
  c_char->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  c_char->add_option("--out", out_path, "Write to a file instead of stdout");

  auto* c_cmp = app.add_subcommand("compare", "Check that several methods agree");
  c_cmp->add_option("--methods", methods, "Comma-separated methods; file:<path> loads a JSON series")->required();
  c_cmp->add_option("--level", level, "Level k >= 1");
  c_cmp->add_option("--qmax", q_max, "Truncation bound in q");

  auto* c_basis = app.add_subcommand("basis", "List ehf or ehf' monomials");
  c_basis->add_option("--level", level, "Level k >= 1");
  c_basis->add_option("--qmax", q_max, "Truncation bound in q");
  c_basis->add_option("--variant", variant, "ehf or ehf-prime");
  c_basis->add_option("--out", out_path, "Write to a file instead of stdout");

  auto* c_dims = app.add_subcommand("dims", "Graded dimension table of a quotient algebra");
  c_dims->add_option("--algebra", algebra, "A, B or C");
  c_dims->add_option("--level", level, "Level k >= 1");
  c_dims->add_option("--qmax", q_max, "Truncation bound in q");
  c_dims->add_option("--out", out_path, "Write to a file instead of stdout");

  auto* c_std = app.add_subcommand("standard", "Standard monomials of B_1 versus ehf' monomials");
  c_std->add_option("--qmax", q_max, "Truncation bound in q");
  c_std->add_option("--order", order_name, "Monomial order: first (default) or last differing position");

  auto* c_degen = app.add_subcommand("degen", "Exact sl2 degeneration family report");
  c_degen->add_option("--s", s_text, "Parameter s in (0,1], e.g. 1/2");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (q_max < 0) throw UsageError("--qmax must be >= 0");
    if (level < 1) throw UsageError("--level must be >= 1");
    if (c_char->parsed()) return cmd_char(method, level, q_max, format, out_path, out);
    if (c_cmp->parsed()) return cmd_compare(methods, level, q_max, out);
    if (c_basis->parsed()) return cmd_basis(level, q_max, variant, out_path, out);
    if (c_dims->parsed()) return cmd_dims(algebra, level, q_max, out_path, out);
    if (c_std->parsed()) return cmd_standard(q_max, order_name, out);
    if (c_degen->parsed()) return cmd_degen(s_text, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}

}  // namespace pbwchar::cli
