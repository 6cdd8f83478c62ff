#include "lct/cli.hpp"

#include "lct/engine.hpp"
#include "lct/errors.hpp"
#include "lct/expr.hpp"
#include "lct/records.hpp"
#include "lct/threshold_sets.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace lct::cli {

namespace {

struct GlobalFlags {
  bool json = false;
  bool csv = false;
  bool quiet = false;
  std::string out_path;
};

std::string show(const ThresholdValue& v) {
  if (v.is_zero()) return "0";
  if (v.is_infinite()) return "inf";
  return to_display_string(v.value());
}

ThresholdValue parse_threshold(const std::string& text) {
  if (text == "inf") return ThresholdValue::infinite();
  const Rat q = parse_rat(text);
  if (q == 0) return ThresholdValue::zero();
  if (q < 0 || q > 1) throw std::invalid_argument("threshold " + text + " outside [0, 1]");
  return ThresholdValue::finite(q);
}

std::string show_facet(const Facet& f, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < f.normal.size(); ++i) {
    if (f.normal[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (f.normal[i] != 1) s += f.normal[i].get_str() + "*";
    s += names[i];
  }
  return s + " >= " + f.offset.get_str();
}

std::vector<std::size_t> parse_axes(const std::string& text, std::size_t n) {
  std::vector<std::size_t> keep;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Rat q = parse_rat(item);
    if (q.get_den() != 1 || q < 1 || q > n)
      throw std::invalid_argument("axis '" + item + "' is not an index in 1.." + std::to_string(n));
    keep.push_back(q.get_num().get_ui() - 1);
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return keep;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void record(std::string_view command, Json result) {
    out_ << make_record(command, input_, std::move(result)).dump() << '\n';
  }

  void emit_sample(std::string_view command, const ThresholdSetSample& s) {
    if (flags_.csv) {
      if (!flags_.out_path.empty()) emit_csv(s, flags_.out_path);
      else write_csv(s, out_);
      return;
    }
    if (flags_.json) {
      record(command, to_json(s));
      return;
    }
    if (!flags_.quiet) {
      out_ << "# dimension " << s.dimension << ", " << s.size() << " values";
      for (const auto& [k, v] : s.provenance) out_ << ", " << k << "=" << v;
      out_ << '\n';
    }
    for (const auto& q : s.values) out_ << to_display_string(q) << '\n';
  }

  int lct_one(const std::string& text, std::optional<std::size_t> n_hint, bool degenerate);

  std::ostream& out_;
  std::ostream& err_;
  GlobalFlags flags_;
  std::vector<std::string> input_;
};

int Runner::lct_one(const std::string& text, std::optional<std::size_t> n_hint, bool degenerate) {
  const auto expr = parse_poly_expr(text, n_hint, !degenerate);
  const auto report = lct_newton(expr.poly);
  if (flags_.json) {
    record("lct", to_json(report));
    return kSuccess;
  }
  out_ << show(report.value);
  if (!flags_.quiet) {
    out_ << (report.exactness == Exactness::Exact ? "  exact" : "  upper-bound");
    if (report.witness.diagonal) out_ << "  t*=" << to_display_string(*report.witness.diagonal);
    if (report.witness.facet) out_ << "  facet " << show_facet(*report.witness.facet, expr.names);
    if (report.bounds)
      out_ << "  bounds [" << to_display_string(report.bounds->lower) << ", "
           << to_display_string(report.bounds->upper) << "]";
    if (report.witness.rule != "newton-facet" && report.witness.rule != "newton-diagonal")
      out_ << "  (" << report.witness.rule << ")";
  }
  out_ << '\n';
  return kSuccess;
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Log canonical thresholds of polynomials from Newton polyhedra, in exact arithmetic.", "lct"};
  app.require_subcommand(1);
  app.add_flag("--json", flags_.json, "Emit one machine-readable JSON record");
  app.add_flag("--csv", flags_.csv, "Emit threshold sets as CSV");
  app.add_flag("--quiet", flags_.quiet, "Print only the primary result");
  app.add_option("--out", flags_.out_path, "Write CSV to this file instead of stdout");

  std::function<int()> action;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // lct
  std::string poly_text, poly_text2, file_path, axes_text;
  bool degenerate = false;
  std::optional<std::size_t> n_hint;
  {
    auto* s = sub("lct", "Newton threshold of a polynomial");
    s->add_option("poly", poly_text, "Polynomial, e.g. \"x^2 + y^3\"");
    s->add_flag("--degenerate", degenerate, "Coefficients may be special: report an upper bound");
    s->add_option("--file", file_path, "Read one polynomial per line; one result per line");
    s->add_option("--dimension", n_hint, "Number of variables (default: largest index used)");
    action = nullptr;
    s->callback([&] {
      action = [&]() -> int {
        if (file_path.empty()) {
          if (poly_text.empty()) throw CLI::ValidationError("lct", "needs a polynomial or --file");
          return lct_one(poly_text, n_hint, degenerate);
        }
        std::ifstream in(file_path);
        if (!in) throw std::runtime_error("cannot open " + file_path);
        std::string line;
        int status = kSuccess;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
          ++line_no;
          if (!line.empty() && line.back() == '\r') line.pop_back();
          const auto start = line.find_first_not_of(" \t");
          if (start == std::string::npos || line[start] == '#') continue;
          input_ = {line};
          try {
            lct_one(line, n_hint, degenerate);
          } catch (const std::exception& e) {
            status = kUsageError;
            if (flags_.json) record("lct", Json{{"error", e.what()}, {"line", line_no}});
            else out_ << "error  line " << line_no << ": " << e.what() << '\n';
          }
        }
        return status;
      };
    });
  }

  // hull
  std::size_t max_dimension = HullOptions{}.max_dimension;
  {
    auto* s = sub("hull", "Diagonal parameter, facets and face bounds of the Newton polyhedron");
    s->add_option("poly", poly_text, "Polynomial")->required();
    s->add_option("--max-dimension", max_dimension, "Facet enumeration dimension cap");
    s->callback([&] {
      action = [&]() -> int {
        const auto expr = parse_poly_expr(poly_text);
        if (expr.poly.is_zero()) throw std::invalid_argument("the zero polynomial has no Newton polyhedron");
        const auto supp = support(expr.poly);
        const Rat t_star = diagonal_parameter(supp);
        const auto fs = facets(supp, HullOptions{max_dimension});
        if (flags_.json) {
          Json list = Json::array();
          for (const auto& f : fs) list.push_back(to_json(f));
          record("hull", Json{{"dimension", expr.poly.dimension()}, {"t_star", rat_json(t_star)},
                              {"facets", std::move(list)}});
          return kSuccess;
        }
        out_ << "t* = " << to_display_string(t_star) << '\n';
        if (flags_.quiet) return kSuccess;
        for (const auto& f : fs)
          out_ << (f.compact() ? "compact     " : "non-compact ") << show_facet(f, expr.names)
               << "  face bound " << to_display_string(face_bound(f)) << '\n';
        return kSuccess;
      };
    });
  }

  // bounds
  {
    auto* s = sub("bounds", "Multiplicity bracket 1/mult <= lct <= min(1, n/mult)");
    s->add_option("poly", poly_text, "Polynomial")->required();
    s->callback([&] {
      action = [&]() -> int {
        const auto f = parse_poly(poly_text);
        const auto b = multiplicity_bounds(f);
        if (flags_.json) {
          record("bounds", Json{{"order", *order(f)}, {"lower", rat_json(b.lower)}, {"upper", rat_json(b.upper)}});
        } else {
          out_ << "[" << to_display_string(b.lower) << ", " << to_display_string(b.upper) << "]\n";
        }
        return kSuccess;
      };
    });
  }

  // dsum
  std::string rat_a, rat_b;
  {
    auto* s = sub("dsum", "Threshold of a direct sum from the thresholds of its summands");
    s->add_option("a", rat_a, "Threshold of f: 0, p/q in (0,1], or inf")->required();
    s->add_option("b", rat_b, "Threshold of g")->required();
    s->callback([&] {
      action = [&]() -> int {
        const auto v = lct_direct_sum(parse_threshold(rat_a), parse_threshold(rat_b));
        if (flags_.json) record("dsum", to_json(v));
        else out_ << show(v) << '\n';
        return kSuccess;
      };
    });
  }

  // truncate
  std::uint64_t m = 0;
  {
    auto* s = sub("truncate", "Degree-m Taylor polynomial and the threshold distance bound");
    s->add_option("poly", poly_text, "Polynomial")->required();
    s->add_option("m", m, "Degree")->required();
    s->callback([&] {
      action = [&]() -> int {
        const auto expr = parse_poly_expr(poly_text);
        const auto t = truncate(expr.poly, m);
        const auto bound = truncation_bound(expr.poly.dimension(), m);
        const auto text = format_poly(t, expr.names);
        if (flags_.json) {
          record("truncate", Json{{"poly", text}, {"bound", rat_json(bound)}});
        } else {
          out_ << text << '\n';
          if (!flags_.quiet) out_ << "bound " << to_display_string(bound) << '\n';
        }
        return kSuccess;
      };
    });
  }

  // ht1 / ht2 / toric
  std::uint64_t K = 0, B = 0, max_bound = Ht2Options{}.max_bound, seed = 0;
  std::size_t n = 0, count = 0;
  std::uint32_t D = 0;
  {
    auto* s = sub("ht1", "One-variable thresholds {0} and 1/k, k <= K");
    s->add_option("K", K, "Largest denominator")->required()->check(CLI::PositiveNumber);
    s->callback([&] { action = [&] { emit_sample("ht1", ht1(K)); return int{kSuccess}; }; });
  }
  {
    auto* s = sub("ht2", "Two-variable thresholds with formula parameters <= B");
    s->add_option("B", B, "Parameter bound (>= 2)")->required();
    s->add_option("--max-bound", max_bound, "Refuse bounds above this");
    s->callback([&] { action = [&] { emit_sample("ht2", ht2_enumerate(B, Ht2Options{max_bound})); return int{kSuccess}; }; });
  }
  {
    auto* s = sub("toric", "Newton thresholds of seeded random supports");
    s->add_option("n", n, "Variables")->required();
    s->add_option("D", D, "Exponent bound")->required();
    s->add_option("count", count, "Number of supports")->required();
    s->add_option("seed", seed, "RNG seed")->required();
    s->callback([&] { action = [&] { emit_sample("toric", toric_sample(n, D, count, seed)); return int{kSuccess}; }; });
  }

  // accumulate
  std::string delta_text;
  std::size_t k_min = 0;
  {
    auto* s = sub("accumulate", "Dense clusters in a threshold set");
    s->add_option("setfile", file_path, "CSV from --csv, or one rational per line")->required();
    s->add_option("delta", delta_text, "Window width, e.g. 1/100")->required();
    s->add_option("k", k_min, "Minimum elements per window")->required();
    s->callback([&] {
      action = [&]() -> int {
        const auto set = read_set_file(file_path);
        const auto found = accumulation_scan(set, parse_rat(delta_text), k_min);
        if (flags_.json) {
          Json r = to_json(found);
          r["set_size"] = set.size();
          record("accumulate", std::move(r));
          return kSuccess;
        }
        if (!flags_.quiet) out_ << "# " << found.size() << " intervals over " << set.size() << " values\n";
        for (const auto& iv : found)
          out_ << "[" << to_display_string(iv.lo) << ", " << to_display_string(iv.hi) << "] " << iv.count << '\n';
        return kSuccess;
      };
    });
  }

  // family
  std::uint64_t M = 0;
  {
    auto* s = sub("family", "Check c + 1/m decreasing to c (f(x) + y^m family)");
    s->add_option("c", rat_a, "Threshold below 1")->required();
    s->add_option("M", M, "Largest m")->required();
    s->callback([&] {
      action = [&]() -> int {
        const auto check = family_limit_check(parse_threshold(rat_a), M);
        if (flags_.json) {
          record("family", to_json(check));
        } else if (check.empty) {
          out_ << "empty: first admissible m is " << check.first_m << '\n';
        } else {
          out_ << (check.passed ? "pass" : "FAIL") << '\n';
          if (!flags_.quiet)
            for (std::size_t i = 0; i < check.values.size(); ++i)
              out_ << "m=" << check.first_m + i << "  " << to_display_string(check.values[i]) << '\n';
        }
        return check.empty || check.passed ? kSuccess : kValidationFailure;
      };
    });
  }

  // gap
  int gap_n = 0, max_n = GapOptions{}.max_n;
  {
    auto* s = sub("gap", "Largest 1/a_1 + ... + 1/a_n below 1");
    s->add_option("n", gap_n, "Number of terms")->required();
    s->add_option("--max-n", max_n, "Refuse n above this");
    s->callback([&] {
      action = [&]() -> int {
        const auto g = gap_search(gap_n, GapOptions{max_n});
        if (flags_.json) {
          record("gap", to_json(g));
        } else {
          out_ << to_display_string(g.max);
          if (!flags_.quiet) {
            out_ << "  witness";
            for (auto a : g.witness) out_ << ' ' << a;
          }
          out_ << '\n';
        }
        return kSuccess;
      };
    });
  }

  // sylvester / epsilon
  std::size_t terms = 0;
  {
    auto* s = sub("sylvester", "First k Sylvester numbers");
    s->add_option("k", terms, "Number of terms")->required()->check(CLI::PositiveNumber);
    s->callback([&] {
      action = [&]() -> int {
        const auto seq = sylvester(terms);
        if (flags_.json) {
          Json arr = Json::array();
          for (const auto& c : seq) arr.push_back(c.get_str());
          record("sylvester", Json{{"terms", std::move(arr)}});
        } else {
          for (std::size_t i = 0; i < seq.size(); ++i) out_ << (i ? " " : "") << seq[i].get_str();
          out_ << '\n';
        }
        return kSuccess;
      };
    });
  }
  {
    auto* s = sub("epsilon", "Conjectured gap constant 1/(c_{n+1} - 1)");
    s->add_option("n", terms, "Dimension")->required()->check(CLI::PositiveNumber);
    s->callback([&] {
      action = [&]() -> int {
        const auto e = epsilon_candidate(terms);
        if (flags_.json) record("epsilon", Json{{"n", terms}, {"epsilon", rat_json(e)}});
        else out_ << to_display_string(e) << '\n';
        return kSuccess;
      };
    });
  }

  // validators
  {
    auto* s = sub("subadd", "Check c(f + g) <= c(f) + c(g) at the Newton level");
    s->add_option("f", poly_text, "Polynomial")->required();
    s->add_option("g", poly_text2, "Polynomial")->required();
    s->add_option("--dimension", n_hint, "Number of variables for both");
    s->callback([&] {
      action = [&]() -> int {
        const auto f = parse_poly(poly_text, n_hint);
        const auto g = parse_poly(poly_text2, n_hint);
        const std::size_t dim = std::max(f.dimension(), g.dimension());
        const auto check = check_subadditivity(parse_poly(poly_text, dim), parse_poly(poly_text2, dim));
        if (flags_.json) record("subadd", to_json(check));
        else
          out_ << show(check.sum) << " <= min(1, " << show(check.f) << " + " << show(check.g) << ")  holds\n";
        return kSuccess;
      };
    });
  }
  {
    auto* s = sub("restrict", "Compare c(f|L) with c(f) for a coordinate subspace L");
    s->add_option("f", poly_text, "Polynomial")->required();
    s->add_option("axes", axes_text, "Kept coordinates, 1-based, comma separated")->required();
    s->callback([&] {
      action = [&]() -> int {
        const auto f = parse_poly(poly_text);
        const auto check = check_restriction(f, parse_axes(axes_text, f.dimension()));
        if (flags_.json) record("restrict", to_json(check));
        else
          out_ << show(check.restricted) << " <= " << show(check.full) << (check.holds ? "  holds" : "  VIOLATED")
               << '\n';
        return kSuccess;
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err_ << "lct: " << e.what() << '\n';
    return kUsageError;
  }

  for (const auto* s : app.get_subcommands()) {
    input_ = std::vector<std::string>(args.begin(), args.end());
    if (flags_.csv && s->get_name() != "ht1" && s->get_name() != "ht2" && s->get_name() != "toric") {
      err_ << "lct: --csv applies only to ht1, ht2 and toric\n";
      return kUsageError;
    }
    // drop the global flags so the digest depends on the command alone
    std::erase_if(input_, [](const std::string& a) { return a == "--json" || a == "--csv" || a == "--quiet"; });
  }

  try {
    return action ? action() : kUsageError;
  } catch (const CLI::Error& e) {
    err_ << "lct: " << e.what() << '\n';
    return kUsageError;
  } catch (const ValidationError& e) {
    err_ << "lct: validation failure: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const ResourceLimitError& e) {
    err_ << "lct: resource cap: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err_ << "lct: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace lct::cli
