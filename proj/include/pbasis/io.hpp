#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pbasis/cone.hpp"
#include "pbasis/errors.hpp"
#include "pbasis/oracle.hpp"
#include "pbasis/rational.hpp"
#include "pbasis/vec.hpp"
#include "pbasis/version.hpp"

namespace pbasis {

// ---------------------------------------------------------------------------
// Vector-set files.
//
// Line 1 is "dim <N>"; each following nonempty line holds N whitespace-
// separated rationals ("p/q" or integer); "#" starts a comment running to
// the end of the line. A nonempty comment on a data row round-trips as
// that vector's label.
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::pair<std::vector<Token>, std::string> split_line(std::string_view line) {
  std::string comment;
  const std::size_t hash = line.find('#');
  if (hash != std::string_view::npos) {
    comment = std::string(line.substr(hash + 1));
    line = line.substr(0, hash);
    const std::size_t start = comment.find_first_not_of(" \t");
    if (start == std::string::npos) {
      comment.clear();
    } else {
      comment = comment.substr(start);
      const std::size_t last = comment.find_last_not_of(" \t\r");
      comment = comment.substr(0, last + 1);
    }
  }
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back(Token{std::string(line.substr(start, i - start)), start + 1});
  }
  return {std::move(tokens), std::move(comment)};
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace detail

/// Parses the vector-set text format. Throws ParseError on malformed
/// input and DimensionMismatch when a row's arity differs from the header.
inline VecSet parse_vecset(std::string_view text) {
  const std::vector<std::string> lines = detail::split_lines(text);
  std::optional<VecSet> set;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    auto [tokens, comment] = detail::split_line(lines[li]);
    if (tokens.empty()) continue;
    const std::size_t line_no = li + 1;
    if (!set) {
      if (tokens[0].text != "dim" || tokens.size() != 2) {
        throw ParseError("expected header 'dim <N>'", line_no, tokens[0].column);
      }
      long parsed = 0;
      try {
        parsed = std::stol(tokens[1].text);
      } catch (const std::exception&) {
        throw ParseError("malformed dimension '" + tokens[1].text + "'", line_no,
                         tokens[1].column);
      }
      if (parsed < 1) {
        throw ParseError("dimension must be >= 1", line_no, tokens[1].column);
      }
      set.emplace(static_cast<std::size_t>(parsed));
      continue;
    }
    if (tokens.size() != set->dim) {
      throw DimensionMismatch("row of " + std::to_string(tokens.size()) +
                              " entries in set of dim " + std::to_string(set->dim) + " (line " +
                              std::to_string(line_no) + ")");
    }
    Vec v = zero_vec(set->dim);
    for (std::size_t j = 0; j < tokens.size(); ++j) {
      try {
        v[j] = parse_rational(tokens[j].text);
      } catch (const InvalidScalar&) {
        throw ParseError("malformed rational '" + tokens[j].text + "'", line_no,
                         tokens[j].column);
      }
    }
    set->push_back(std::move(v), std::move(comment));
  }
  if (!set) throw ParseError("missing 'dim <N>' header", 1, 1);
  return *std::move(set);
}

/// Canonical serialization: header, one row per vector, labels as trailing
/// comments. parse_vecset(serialize_vecset(V)) == V, byte-stable.
inline std::string serialize_vecset(const VecSet& set) {
  std::string out = "dim " + std::to_string(set.dim) + "\n";
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.dim; ++j) {
      if (j > 0) out += ' ';
      out += format_rational(set[i][j]);
    }
    const std::string label = set.label(i);
    if (!label.empty()) out += "  # " + label;
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Report documents.
//
// Line-oriented key-value rendering of a CheckReport with stable field
// order, exact rationals, and enough content to re-verify every witness
// without re-running the solver.
// ---------------------------------------------------------------------------

enum class Predicate { pli, spanning, basis };

inline std::string to_string(Predicate p) {
  switch (p) {
    case Predicate::pli:
      return "pli";
    case Predicate::spanning:
      return "spanning";
    case Predicate::basis:
      return "basis";
  }
  return "?";
}

inline std::optional<Predicate> predicate_from_string(std::string_view s) {
  if (s == "pli") return Predicate::pli;
  if (s == "spanning") return Predicate::spanning;
  if (s == "basis") return Predicate::basis;
  return std::nullopt;
}

inline std::string to_string(Convention c) {
  switch (c) {
    case Convention::none:
      return "none";
    case Convention::empty_set:
      return "empty-set";
    case Convention::singleton:
      return "singleton";
  }
  return "?";
}

inline std::optional<Convention> convention_from_string(std::string_view s) {
  if (s == "none") return Convention::none;
  if (s == "empty-set") return Convention::empty_set;
  if (s == "singleton") return Convention::singleton;
  return std::nullopt;
}

struct ReportDocument {
  Predicate predicate;
  CheckReport report;
  std::string tool_version = kToolVersion;
};

namespace detail {

inline void append_rationals(std::string& out, const std::vector<Rational>& values) {
  for (const Rational& v : values) {
    out += ' ';
    out += format_rational(v);
  }
}

inline void append_witness(std::string& out, const MembershipResult& r) {
  if (r.inside()) {
    out += " inside";
    append_rationals(out, r.coefficients().alphas);
  } else {
    out += " outside";
    append_rationals(out, r.certificate().normal.coords);
  }
}

}  // namespace detail

/// Renders a report document. The field order is fixed so identical
/// checks produce identical bytes.
inline std::string render_report(const ReportDocument& doc) {
  const CheckReport& rep = doc.report;
  std::string out;
  out += "pbasis-report 1\n";
  out += std::string("tool ") + kToolName + " " + doc.tool_version + "\n";
  out += "predicate " + to_string(doc.predicate) + "\n";
  out += "dim " + std::to_string(rep.set.dim) + "\n";
  out += "count " + std::to_string(rep.set.size()) + "\n";
  out += "convention " + to_string(rep.convention) + "\n";
  for (std::size_t i = 0; i < rep.set.size(); ++i) {
    out += "vec " + std::to_string(i);
    detail::append_rationals(out, rep.set[i].coords);
    out += '\n';
  }
  for (std::size_t i = 0; i < rep.set.size(); ++i) {
    const std::string label = rep.set.label(i);
    if (!label.empty()) out += "label " + std::to_string(i) + " " + label + "\n";
  }
  for (const PliEntry& e : rep.per_vector) {
    out += "pli " + std::to_string(e.index);
    detail::append_witness(out, e.result);
    out += '\n';
  }
  for (const SpanningWitness& w : rep.spanning_witnesses) {
    out += "span " + std::to_string(w.axis) + (w.sign > 0 ? " +" : " -");
    detail::append_witness(out, w.result);
    out += '\n';
  }
  if (rep.verdict_pli) {
    out += std::string("verdict pli ") + (*rep.verdict_pli ? "true" : "false") + "\n";
  }
  if (rep.verdict_spanning) {
    out += std::string("verdict spanning ") + (*rep.verdict_spanning ? "true" : "false") + "\n";
  }
  if (rep.verdict_basis) {
    out += std::string("verdict basis ") + (*rep.verdict_basis ? "true" : "false") + "\n";
  }
  out += "end\n";
  return out;
}

namespace detail {

inline Rational parse_report_rational(const Token& tok, std::size_t line_no) {
  try {
    return parse_rational(tok.text);
  } catch (const InvalidScalar&) {
    throw ParseError("malformed rational '" + tok.text + "'", line_no, tok.column);
  }
}

inline std::vector<Rational> parse_rational_payload(const std::vector<Token>& tokens,
                                                    std::size_t from, std::size_t line_no) {
  std::vector<Rational> values;
  values.reserve(tokens.size() - from);
  for (std::size_t j = from; j < tokens.size(); ++j) {
    values.push_back(parse_report_rational(tokens[j], line_no));
  }
  return values;
}

inline MembershipResult parse_witness(const std::vector<Token>& tokens, std::size_t from,
                                      std::size_t line_no) {
  if (from >= tokens.size()) throw ParseError("missing witness kind", line_no, 1);
  const std::string& kind = tokens[from].text;
  std::vector<Rational> payload = parse_rational_payload(tokens, from + 1, line_no);
  if (kind == "inside") {
    return MembershipResult::make_inside(Coefficients{std::move(payload)});
  }
  if (kind == "outside") {
    return MembershipResult::make_outside(FarkasCertificate{Vec(std::move(payload))});
  }
  throw ParseError("witness kind must be 'inside' or 'outside', got '" + kind + "'", line_no,
                   tokens[from].column);
}

inline std::size_t parse_index(const Token& tok, std::size_t line_no) {
  try {
    const long v = std::stol(tok.text);
    if (v < 0) throw std::out_of_range("negative");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError("malformed index '" + tok.text + "'", line_no, tok.column);
  }
}

}  // namespace detail

/// Parses a rendered report document back into structured form.
inline ReportDocument parse_report(std::string_view text) {
  const std::vector<std::string> lines = detail::split_lines(text);
  ReportDocument doc{Predicate::basis, CheckReport{}, ""};
  std::optional<std::size_t> dim;
  std::optional<std::size_t> count;
  std::optional<Predicate> predicate;
  bool saw_header = false;
  bool saw_end = false;
  std::vector<Vec> vecs;
  std::vector<std::pair<std::size_t, std::string>> labels;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    auto [tokens, comment] = detail::split_line(lines[li]);
    (void)comment;
    if (tokens.empty()) continue;
    if (saw_end) throw ParseError("content after 'end'", line_no, tokens[0].column);
    const std::string& key = tokens[0].text;

    if (!saw_header) {
      if (key != "pbasis-report" || tokens.size() != 2 || tokens[1].text != "1") {
        throw ParseError("expected header 'pbasis-report 1'", line_no, tokens[0].column);
      }
      saw_header = true;
      continue;
    }
    if (key == "tool") {
      if (tokens.size() >= 3) doc.tool_version = tokens[2].text;
      continue;
    }
    if (key == "predicate") {
      if (tokens.size() != 2) throw ParseError("malformed predicate line", line_no, 1);
      predicate = predicate_from_string(tokens[1].text);
      if (!predicate) {
        throw ParseError("unknown predicate '" + tokens[1].text + "'", line_no,
                         tokens[1].column);
      }
      continue;
    }
    if (key == "dim") {
      if (tokens.size() != 2) throw ParseError("malformed dim line", line_no, 1);
      dim = detail::parse_index(tokens[1], line_no);
      if (*dim < 1) throw ParseError("dim must be >= 1", line_no, tokens[1].column);
      continue;
    }
    if (key == "count") {
      if (tokens.size() != 2) throw ParseError("malformed count line", line_no, 1);
      count = detail::parse_index(tokens[1], line_no);
      continue;
    }
    if (key == "convention") {
      if (tokens.size() != 2) throw ParseError("malformed convention line", line_no, 1);
      const auto conv = convention_from_string(tokens[1].text);
      if (!conv) {
        throw ParseError("unknown convention '" + tokens[1].text + "'", line_no,
                         tokens[1].column);
      }
      doc.report.convention = *conv;
      continue;
    }
    if (key == "vec") {
      if (!dim) throw ParseError("'vec' before 'dim'", line_no, tokens[0].column);
      if (tokens.size() < 2) throw ParseError("malformed vec line", line_no, 1);
      const std::size_t idx = detail::parse_index(tokens[1], line_no);
      if (idx != vecs.size()) {
        throw ParseError("vec index out of order: expected " + std::to_string(vecs.size()),
                         line_no, tokens[1].column);
      }
      std::vector<Rational> coords = detail::parse_rational_payload(tokens, 2, line_no);
      if (coords.size() != *dim) {
        throw ParseError("vec row has " + std::to_string(coords.size()) + " entries, expected " +
                         std::to_string(*dim), line_no, tokens[1].column);
      }
      vecs.emplace_back(std::move(coords));
      continue;
    }
    if (key == "label") {
      if (tokens.size() < 3) throw ParseError("malformed label line", line_no, 1);
      const std::size_t idx = detail::parse_index(tokens[1], line_no);
      // Label text is everything after the index token, verbatim.
      const std::string& line = lines[li];
      const std::size_t text_col = tokens[2].column - 1;
      labels.emplace_back(idx, line.substr(text_col));
      continue;
    }
    if (key == "pli") {
      if (tokens.size() < 3) throw ParseError("malformed pli line", line_no, 1);
      const std::size_t idx = detail::parse_index(tokens[1], line_no);
      doc.report.per_vector.push_back(
          PliEntry{idx, detail::parse_witness(tokens, 2, line_no)});
      continue;
    }
    if (key == "span") {
      if (tokens.size() < 4) throw ParseError("malformed span line", line_no, 1);
      const std::size_t axis = detail::parse_index(tokens[1], line_no);
      int sign = 0;
      if (tokens[2].text == "+") {
        sign = 1;
      } else if (tokens[2].text == "-") {
        sign = -1;
      } else {
        throw ParseError("span sign must be '+' or '-'", line_no, tokens[2].column);
      }
      doc.report.spanning_witnesses.push_back(
          SpanningWitness{axis, sign, detail::parse_witness(tokens, 3, line_no)});
      continue;
    }
    if (key == "verdict") {
      if (tokens.size() != 3 || (tokens[2].text != "true" && tokens[2].text != "false")) {
        throw ParseError("malformed verdict line", line_no, 1);
      }
      const bool value = tokens[2].text == "true";
      if (tokens[1].text == "pli") {
        doc.report.verdict_pli = value;
      } else if (tokens[1].text == "spanning") {
        doc.report.verdict_spanning = value;
      } else if (tokens[1].text == "basis") {
        doc.report.verdict_basis = value;
      } else {
        throw ParseError("unknown verdict '" + tokens[1].text + "'", line_no, tokens[1].column);
      }
      continue;
    }
    if (key == "end") {
      saw_end = true;
      continue;
    }
    throw ParseError("unknown report line '" + key + "'", line_no, tokens[0].column);
  }

  if (!saw_header) throw ParseError("missing 'pbasis-report 1' header", 1, 1);
  if (!saw_end) throw ParseError("missing 'end' line", lines.size(), 1);
  if (!predicate) throw ParseError("missing 'predicate' line", 1, 1);
  if (!dim) throw ParseError("missing 'dim' line", 1, 1);
  if (!count) throw ParseError("missing 'count' line", 1, 1);
  if (vecs.size() != *count) {
    throw ParseError("count says " + std::to_string(*count) + " vectors, found " +
                     std::to_string(vecs.size()), 1, 1);
  }
  doc.predicate = *predicate;
  doc.report.set = VecSet(*dim);
  for (Vec& v : vecs) doc.report.set.push_back(std::move(v));
  for (auto& [idx, label] : labels) {
    if (idx >= doc.report.set.size()) throw ParseError("label index out of range", 1, 1);
    doc.report.set.labels.resize(doc.report.set.size());
    doc.report.set.labels[idx] = label;
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Certification: re-verify a report's embedded witnesses and verdicts,
// optionally cross-checking against the Fourier-Motzkin oracle.
// ---------------------------------------------------------------------------

struct CertifyResult {
  bool consistent = true;
  std::size_t witnesses_verified = 0;
  std::size_t cross_checks = 0;
  std::size_t cross_check_skips = 0;  // problems beyond the oracle guards
  std::vector<std::string> issues;
};

namespace detail {

inline void certify_witness(const FeasibilityProblem& problem, const MembershipResult& r,
                            const std::string& what, CertifyResult& out) {
  const bool ok = r.inside() ? verify_inside(problem, r.coefficients())
                             : verify_certificate(problem, r.certificate());
  if (ok) {
    ++out.witnesses_verified;
  } else {
    out.consistent = false;
    out.issues.push_back(what + ": stored " + (r.inside() ? "inside" : "outside") +
                         " witness fails verification");
  }
}

inline bool within_oracle_guards(std::size_t generators, std::size_t dim) {
  return generators <= kOracleMaxGenerators && dim <= kOracleMaxDim;
}

}  // namespace detail

/// Re-checks everything a report claims: witness validity, witness-list
/// shape, aggregate verdicts under the stated conventions, and (optionally)
/// agreement with the independent oracle.
inline CertifyResult certify_report(const ReportDocument& doc, bool cross_check = false) {
  CertifyResult out;
  const CheckReport& rep = doc.report;
  const VecSet& set = rep.set;
  const bool wants_pli = doc.predicate == Predicate::pli || doc.predicate == Predicate::basis;
  const bool wants_span =
      doc.predicate == Predicate::spanning || doc.predicate == Predicate::basis;

  auto complain = [&out](std::string msg) {
    out.consistent = false;
    out.issues.push_back(std::move(msg));
  };

  // Shape of the witness lists.
  if (wants_pli) {
    if (rep.per_vector.size() != set.size()) {
      complain("pli section has " + std::to_string(rep.per_vector.size()) +
               " entries, expected " + std::to_string(set.size()));
    } else {
      for (std::size_t i = 0; i < rep.per_vector.size(); ++i) {
        if (rep.per_vector[i].index != i) {
          complain("pli entry " + std::to_string(i) + " has index " +
                   std::to_string(rep.per_vector[i].index));
        }
      }
    }
  } else if (!rep.per_vector.empty()) {
    complain("unexpected pli section for predicate " + to_string(doc.predicate));
  }
  if (wants_span) {
    if (rep.spanning_witnesses.size() != 2 * set.dim) {
      complain("span section has " + std::to_string(rep.spanning_witnesses.size()) +
               " entries, expected " + std::to_string(2 * set.dim));
    } else {
      for (std::size_t axis = 0; axis < set.dim; ++axis) {
        const SpanningWitness& plus = rep.spanning_witnesses[2 * axis];
        const SpanningWitness& minus = rep.spanning_witnesses[2 * axis + 1];
        if (plus.axis != axis || plus.sign != 1 || minus.axis != axis || minus.sign != -1) {
          complain("span entries for axis " + std::to_string(axis) + " out of order");
        }
      }
    }
  } else if (!rep.spanning_witnesses.empty()) {
    complain("unexpected span section for predicate " + to_string(doc.predicate));
  }
  if (!out.consistent) return out;

  // Witness validity.
  for (const PliEntry& e : rep.per_vector) {
    detail::certify_witness(pli_problem(set, e.index), e.result,
                            "pli " + std::to_string(e.index), out);
  }
  for (const SpanningWitness& w : rep.spanning_witnesses) {
    detail::certify_witness(spanning_problem(set, w.axis, w.sign), w.result,
                            "span " + std::to_string(w.axis) + (w.sign > 0 ? "+" : "-"), out);
  }

  // Aggregate verdicts under the conventions.
  if (wants_pli) {
    Convention expected_conv = Convention::none;
    if (set.size() == 0) expected_conv = Convention::empty_set;
    if (set.size() == 1) expected_conv = Convention::singleton;
    if (rep.convention != expected_conv) {
      complain("convention is " + to_string(rep.convention) + ", expected " +
               to_string(expected_conv));
    }
    bool all_outside = true;
    for (const PliEntry& e : rep.per_vector) all_outside = all_outside && !e.result.inside();
    const bool expected_pli = set.size() <= 1 ? true : all_outside;
    if (!rep.verdict_pli) {
      complain("missing pli verdict");
    } else if (*rep.verdict_pli != expected_pli) {
      complain(std::string("stored pli verdict ") + (*rep.verdict_pli ? "true" : "false") +
               " disagrees with witnesses");
    }
  }
  if (wants_span) {
    bool all_inside = true;
    for (const SpanningWitness& w : rep.spanning_witnesses) {
      all_inside = all_inside && w.result.inside();
    }
    if (!rep.verdict_spanning) {
      complain("missing spanning verdict");
    } else if (*rep.verdict_spanning != all_inside) {
      complain(std::string("stored spanning verdict ") +
               (*rep.verdict_spanning ? "true" : "false") + " disagrees with witnesses");
    }
  }
  if (doc.predicate == Predicate::basis) {
    if (!rep.verdict_basis) {
      complain("missing basis verdict");
    } else if (rep.verdict_pli && rep.verdict_spanning &&
               *rep.verdict_basis != (*rep.verdict_pli && *rep.verdict_spanning)) {
      complain("stored basis verdict disagrees with pli and spanning verdicts");
    }
  }

  if (cross_check) {
    for (const PliEntry& e : rep.per_vector) {
      const FeasibilityProblem problem = pli_problem(set, e.index);
      if (!detail::within_oracle_guards(problem.generators.size(), problem.generators.dim)) {
        ++out.cross_check_skips;
        continue;
      }
      ++out.cross_checks;
      if (oracle_membership(problem) != e.result.inside()) {
        complain("oracle disagrees on pli " + std::to_string(e.index));
      }
    }
    for (const SpanningWitness& w : rep.spanning_witnesses) {
      if (!detail::within_oracle_guards(set.size(), set.dim)) {
        ++out.cross_check_skips;
        continue;
      }
      ++out.cross_checks;
      if (oracle_membership(spanning_problem(set, w.axis, w.sign)) != w.result.inside()) {
        complain("oracle disagrees on span " + std::to_string(w.axis) +
                 (w.sign > 0 ? "+" : "-"));
      }
    }
    if (wants_span && rep.verdict_spanning) {
      if (detail::within_oracle_guards(set.size(), set.dim)) {
        ++out.cross_checks;
        if (oracle_positive_spanning(set) != *rep.verdict_spanning) {
          complain("positive-spanning oracle disagrees with stored verdict");
        }
      } else {
        ++out.cross_check_skips;
      }
    }
  }

  return out;
}

}  // namespace pbasis
