//  Copyright 2026 The emalp Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "emalp/expr.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "emalp/error.hpp"

namespace emalp {

namespace {

constexpr std::size_t kNary = std::numeric_limits<std::size_t>::max();

// name, min arity, max arity, continuous, lattice args, nonneg args, param
constexpr std::array<OpInfo, 14> kOps = {{
    {"min", 2, kNary, true, false, false, false},
    {"max", 2, kNary, true, false, false, false},
    {"and_g", 2, 2, true, true, false, false},
    {"and_p", 2, 2, true, true, false, false},
    {"and_l", 2, 2, true, true, false, false},
    {"or_l", 2, 2, true, true, false, false},
    {"neg1", 1, 1, true, true, false, false},
    {"neg2", 1, 1, true, true, false, false},
    {"f", 1, 1, false, false, false, true},
    {"g", 1, 1, false, false, false, true},
    {"add", 2, 2, true, false, false, false},
    {"sub", 2, 2, true, false, false, false},
    {"mul", 2, 2, true, false, true, false},
    {"div1", 2, 2, true, false, true, false},
}};

Threshold threshold_of(Op op, TruthValue c) {
  return {op == Op::kF ? Threshold::Kind::kF : Threshold::Kind::kG, c};
}

}  // namespace

const OpInfo& op_info(Op op) { return kOps[static_cast<std::size_t>(op)]; }

std::optional<Op> op_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kOps.size(); ++i) {
    if (kOps[i].name == name) return static_cast<Op>(i);
  }
  return std::nullopt;
}

int argument_sign(Op op, std::size_t index) {
  switch (op) {
    case Op::kNeg1:
    case Op::kNeg2:
      return -1;
    case Op::kSub:
    case Op::kDiv1:
      return index == 1 ? -1 : 1;
    default:
      return 1;
  }
}

double apply_op(Op op, TruthValue param, std::span<const double> args,
                double tol) {
  switch (op) {
    case Op::kMin:
      return *std::min_element(args.begin(), args.end());
    case Op::kMax:
      return *std::max_element(args.begin(), args.end());
    case Op::kAndG:
      return eval_conjunctor(AdjointPair::kGodel, args[0], args[1]);
    case Op::kAndP:
      return eval_conjunctor(AdjointPair::kProduct, args[0], args[1]);
    case Op::kAndL:
      return eval_conjunctor(AdjointPair::kLukasiewicz, args[0], args[1]);
    case Op::kOrL:
      return std::min(1.0, args[0] + args[1]);
    case Op::kNeg1:
      return eval_negation(Negation::kNeg1, args[0]);
    case Op::kNeg2:
      return eval_negation(Negation::kNeg2, args[0]);
    case Op::kF:
    case Op::kG:
      return eval_threshold(threshold_of(op, param), args[0], tol);
    case Op::kAdd:
      return args[0] + args[1];
    case Op::kSub:
      return args[0] - args[1];
    case Op::kMul:
      return args[0] * args[1];
    case Op::kDiv1:
      if (args[1] <= 0.0) return 1.0;
      return std::min(args[0] / args[1], 1.0);
  }
  return 0.0;
}

Expr Expr::constant(TruthValue value) {
  Expr e;
  e.kind_ = Kind::kConstant;
  e.value_ = value;
  return e;
}

Expr Expr::atom(std::string name) {
  Expr e;
  e.kind_ = Kind::kAtom;
  e.name_ = std::move(name);
  return e;
}

Expr Expr::apply(Op op, std::vector<Expr> args) {
  Expr e;
  e.kind_ = Kind::kApply;
  e.op_ = op;
  e.args_ = std::move(args);
  return e;
}

Expr Expr::threshold(Op op, TruthValue c, Expr arg) {
  Expr e = apply(op, {std::move(arg)});
  e.value_ = c;
  return e;
}

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::kPositive:
      return "positive";
    case Polarity::kNegative:
      return "negative";
    case Polarity::kAbsent:
      return "absent";
    case Polarity::kMixed:
      return "mixed";
  }
  return "?";
}

namespace {

void walk_atoms(const Expr& e, int sign,
                const std::function<void(const std::string&, int)>& visit) {
  switch (e.kind()) {
    case Expr::Kind::kConstant:
      return;
    case Expr::Kind::kAtom:
      visit(e.name(), sign);
      return;
    case Expr::Kind::kApply:
      for (std::size_t i = 0; i < e.args().size(); ++i) {
        walk_atoms(e.args()[i], sign * argument_sign(e.op(), i), visit);
      }
      return;
  }
}

}  // namespace

void for_each_atom_occurrence(
    const Expr& body,
    const std::function<void(const std::string&, int sign)>& visit) {
  walk_atoms(body, 1, visit);
}

std::map<std::string, OccurrenceCount> count_occurrences(const Expr& body) {
  std::map<std::string, OccurrenceCount> counts;
  for_each_atom_occurrence(body, [&](const std::string& name, int sign) {
    auto& c = counts[name];
    (sign > 0 ? c.positive : c.negative) += 1;
  });
  return counts;
}

std::map<std::string, Polarity> polarity_of(const Expr& body) {
  std::map<std::string, Polarity> result;
  for (const auto& [name, count] : count_occurrences(body)) {
    if (count.positive > 0 && count.negative > 0) {
      result[name] = Polarity::kMixed;
    } else if (count.negative > 0) {
      result[name] = Polarity::kNegative;
    } else {
      result[name] = Polarity::kPositive;
    }
  }
  return result;
}

namespace {

Expr rewrite_rec(const Expr& e, int sign,
                 const std::function<Expr(const std::string&, int)>& rewrite) {
  switch (e.kind()) {
    case Expr::Kind::kConstant:
      return e;
    case Expr::Kind::kAtom:
      return rewrite(e.name(), sign);
    case Expr::Kind::kApply:
      break;
  }
  std::vector<Expr> args;
  args.reserve(e.args().size());
  for (std::size_t i = 0; i < e.args().size(); ++i) {
    args.push_back(
        rewrite_rec(e.args()[i], sign * argument_sign(e.op(), i), rewrite));
  }
  if (op_info(e.op()).parameterized) {
    return Expr::threshold(e.op(), e.value(), std::move(args.front()));
  }
  return Expr::apply(e.op(), std::move(args));
}

}  // namespace

Expr rewrite_atoms(
    const Expr& body,
    const std::function<Expr(const std::string& name, int sign)>& rewrite) {
  return rewrite_rec(body, 1, rewrite);
}

double eval_raw(const Expr& body, const Interpretation& interp, double tol) {
  switch (body.kind()) {
    case Expr::Kind::kConstant:
      return body.value();
    case Expr::Kind::kAtom: {
      auto it = interp.find(body.name());
      if (it == interp.end()) {
        throw Error("interpretation has no value for atom '" + body.name() +
                    "'");
      }
      return it->second;
    }
    case Expr::Kind::kApply:
      break;
  }
  std::vector<double> values;
  values.reserve(body.args().size());
  for (const auto& arg : body.args()) {
    values.push_back(eval_raw(arg, interp, tol));
  }
  return apply_op(body.op(), body.value(), values, tol);
}

TruthValue eval_body(const Expr& body, const Interpretation& interp,
                     double tol) {
  const double v = eval_raw(body, interp, tol);
  if (!(v >= -tol && v <= 1.0 + tol)) {
    throw RangeError("body " + to_string(body) + " evaluates to " +
                     std::to_string(v) + ", outside [0,1]");
  }
  return std::clamp(v, 0.0, 1.0);
}

namespace {

Interval clamp_unit(Interval i) {
  return {std::clamp(i.lo, 0.0, 1.0), std::clamp(i.hi, 0.0, 1.0)};
}

}  // namespace

Interval interval_of(const Expr& body) {
  switch (body.kind()) {
    case Expr::Kind::kConstant:
      return {body.value(), body.value()};
    case Expr::Kind::kAtom:
      return {0.0, 1.0};
    case Expr::Kind::kApply:
      break;
  }
  std::vector<Interval> in;
  in.reserve(body.args().size());
  for (const auto& arg : body.args()) in.push_back(interval_of(arg));
  const Op op = body.op();
  switch (op) {
    case Op::kMin:
    case Op::kMax: {
      Interval out = in.front();
      for (const auto& i : in) {
        out.lo = op == Op::kMin ? std::min(out.lo, i.lo) : std::max(out.lo, i.lo);
        out.hi = op == Op::kMin ? std::min(out.hi, i.hi) : std::max(out.hi, i.hi);
      }
      return out;
    }
    case Op::kAndG:
    case Op::kAndP:
    case Op::kAndL:
    case Op::kOrL:
    case Op::kF:
    case Op::kG: {
      // Monotone in every argument.
      std::vector<double> lo, hi;
      for (const auto& i : in) {
        const Interval c = op == Op::kF || op == Op::kG ? i : clamp_unit(i);
        lo.push_back(c.lo);
        hi.push_back(c.hi);
      }
      return {apply_op(op, body.value(), lo), apply_op(op, body.value(), hi)};
    }
    case Op::kNeg1:
    case Op::kNeg2: {
      const Interval c = clamp_unit(in.front());
      const std::array<double, 1> lo{c.hi}, hi{c.lo};
      return {apply_op(op, 0.0, lo), apply_op(op, 0.0, hi)};
    }
    case Op::kAdd:
      return {in[0].lo + in[1].lo, in[0].hi + in[1].hi};
    case Op::kSub:
      return {in[0].lo - in[1].hi, in[0].hi - in[1].lo};
    case Op::kMul: {
      const std::array<double, 4> corners{in[0].lo * in[1].lo, in[0].lo * in[1].hi,
                                          in[0].hi * in[1].lo, in[0].hi * in[1].hi};
      return {*std::min_element(corners.begin(), corners.end()),
              *std::max_element(corners.begin(), corners.end())};
    }
    case Op::kDiv1: {
      if (in[0].lo < 0.0 || in[1].lo < 0.0) {
        return {-std::numeric_limits<double>::infinity(), 1.0};
      }
      const double hi = in[1].lo <= 0.0 ? 1.0 : std::min(in[0].hi / in[1].lo, 1.0);
      const double lo = in[1].hi <= 0.0 ? 1.0 : std::min(in[0].lo / in[1].hi, 1.0);
      return {lo, hi};
    }
  }
  return {0.0, 1.0};
}

namespace {

void collect_range_issues(const Expr& e, double tol,
                          std::vector<std::string>& issues) {
  if (!e.is_apply()) return;
  const OpInfo& info = op_info(e.op());
  for (const auto& arg : e.args()) {
    collect_range_issues(arg, tol, issues);
    const Interval i = interval_of(arg);
    if (info.lattice_arguments && (i.lo < -tol || i.hi > 1.0 + tol)) {
      issues.push_back("argument " + to_string(arg) + " of " +
                       std::string(info.name) + " may leave [0,1]");
    }
    if (info.nonnegative_arguments && i.lo < -tol) {
      issues.push_back("argument " + to_string(arg) + " of " +
                       std::string(info.name) + " may be negative");
    }
  }
}

}  // namespace

std::vector<std::string> range_issues(const Expr& body, double tol) {
  std::vector<std::string> issues;
  collect_range_issues(body, tol, issues);
  const Interval top = interval_of(body);
  if (top.lo < -tol || top.hi > 1.0 + tol) {
    issues.push_back("body " + to_string(body) + " may evaluate outside [0,1]");
  }
  return issues;
}

bool is_continuous(const Expr& body) {
  if (!body.is_apply()) return true;
  if (!op_info(body.op()).continuous) return false;
  return std::all_of(body.args().begin(), body.args().end(),
                     [](const Expr& a) { return is_continuous(a); });
}

std::string format_literal(TruthValue v) {
  if (v == 0.0) return "0";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::fixed);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf.data(), end);
}

std::string to_string(const Expr& body) {
  switch (body.kind()) {
    case Expr::Kind::kConstant:
      return format_literal(body.value());
    case Expr::Kind::kAtom:
      return body.name();
    case Expr::Kind::kApply:
      break;
  }
  std::string out(op_info(body.op()).name);
  out += '(';
  if (op_info(body.op()).parameterized) {
    out += format_literal(body.value());
    out += ", ";
  }
  for (std::size_t i = 0; i < body.args().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(body.args()[i]);
  }
  out += ')';
  return out;
}

}  // namespace emalp
