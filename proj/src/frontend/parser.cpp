// Copyright 2026 The Nucleus WDE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wde/frontend/parser.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "lexer.hpp"

namespace wde::frontend {

namespace {

bool is_power_of_two(std::int64_t n) { return n >= 1 && (n & (n - 1)) == 0; }

// Token stream navigation and diagnostic plumbing shared by both dialects.
class ParserBase {
 public:
  ParserBase(LexResult lexed) : tokens_(std::move(lexed.tokens)) {
    diagnostics_ = std::move(lexed.diagnostics);
  }

  std::vector<ParseDiagnostic> take_diagnostics() { return std::move(diagnostics_); }

  bool has_errors() const {
    for (const ParseDiagnostic& d : diagnostics_) {
      if (d.severity == Severity::Error) return true;
    }
    return false;
  }

 protected:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token& advance() {
    const Token& tok = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return tok;
  }

  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_ident(std::string_view text) const {
    return peek().kind == TokenKind::Identifier && peek().text == text;
  }
  bool at_end() const { return at(TokenKind::EndOfFile); }

  void error(const SourceSpan& span, std::string code, std::string message) {
    diagnostics_.push_back(
        ParseDiagnostic{Severity::Error, std::move(code), std::move(message), span});
  }

  void error_here(std::string code, std::string message) {
    error(peek().span, std::move(code), std::move(message));
  }

  std::optional<Token> expect(TokenKind kind, std::string_view what) {
    if (at(kind)) return advance();
    error_here("syntax.expected", "expected " + std::string(what) + ", got '" + describe(peek()) + "'");
    return std::nullopt;
  }

  bool expect_keyword(std::string_view keyword) {
    if (at_ident(keyword)) {
      advance();
      return true;
    }
    error_here("syntax.expected",
               "expected '" + std::string(keyword) + "', got '" + describe(peek()) + "'");
    return false;
  }

  bool accept(TokenKind kind) {
    if (at(kind)) {
      advance();
      return true;
    }
    return false;
  }

  static std::string describe(const Token& tok) {
    if (tok.kind == TokenKind::EndOfFile) return "end of file";
    return tok.text;
  }

  // Skips to the end of the current statement: past the next ';', over a
  // balanced '{...}' block, or up to (not past) a closing '}' / EOF.
  void synchronize() {
    int depth = 0;
    while (!at_end()) {
      if (at(TokenKind::LBrace)) {
        ++depth;
        advance();
      } else if (at(TokenKind::RBrace)) {
        if (depth == 0) return;
        --depth;
        advance();
        if (depth == 0) return;
      } else if (at(TokenKind::Semicolon) && depth == 0) {
        advance();
        return;
      } else {
        advance();
      }
    }
  }

  std::optional<std::int64_t> parse_integer_token() {
    const Token& tok = peek();
    if (tok.kind != TokenKind::Number || !tok.is_integer) {
      error_here("syntax.expected", "expected integer literal, got '" + describe(tok) + "'");
      return std::nullopt;
    }
    advance();
    std::int64_t value = 0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      error(tok.span, "sem.int-overflow", "integer literal '" + tok.text + "' is out of range");
      return std::nullopt;
    }
    return value;
  }

  std::optional<double> parse_real_token() {
    const Token& tok = peek();
    if (tok.kind != TokenKind::Number) {
      error_here("syntax.expected", "expected numeric literal, got '" + describe(tok) + "'");
      return std::nullopt;
    }
    advance();
    const double value = std::strtod(tok.text.c_str(), nullptr);
    if (!std::isfinite(value)) {
      error(tok.span, "sem.number-overflow", "numeric literal '" + tok.text + "' is out of range");
      return std::nullopt;
    }
    return value;
  }

  /// `<real> <unit>` where unit is one of `units` (name -> multiplier to the
  /// SI base). Returns the value in base units.
  std::optional<double> parse_quantity(
      const std::vector<std::pair<std::string_view, double>>& units) {
    auto value = parse_real_token();
    if (!value) return std::nullopt;
    const Token& unit_tok = peek();
    if (unit_tok.kind != TokenKind::Identifier) {
      error_here("syntax.expected", "expected a unit after the value");
      return std::nullopt;
    }
    for (const auto& [name, multiplier] : units) {
      if (unit_tok.text == name) {
        advance();
        return *value * multiplier;
      }
    }
    std::string expected;
    for (const auto& [name, multiplier] : units) {
      if (!expected.empty()) expected += ", ";
      expected += name;
    }
    error(unit_tok.span, "sem.bad-unit",
          "unknown unit '" + unit_tok.text + "' (expected one of: " + expected + ")");
    return std::nullopt;
  }

  /// `kind(block = <int>[, scaling = <id>, rounding = <id>])`
  std::optional<DataFormat> parse_format_literal() {
    const Token kind_tok = peek();
    if (kind_tok.kind != TokenKind::Identifier) {
      error_here("syntax.expected", "expected a format kind");
      return std::nullopt;
    }
    auto kind = format_kind_from_name(kind_tok.text);
    if (!kind) {
      error(kind_tok.span, "sem.unknown-format", "unknown format kind '" + kind_tok.text + "'");
      return std::nullopt;
    }
    advance();
    if (!expect(TokenKind::LParen, "'('")) return std::nullopt;

    DataFormat format;
    format.kind = *kind;
    bool saw_block = false, saw_scaling = false, saw_rounding = false;
    bool first = true;
    while (!at(TokenKind::RParen) && !at_end()) {
      if (!first && !expect(TokenKind::Comma, "','")) return std::nullopt;
      first = false;
      const Token name_tok = peek();
      if (!expect(TokenKind::Identifier, "format attribute")) return std::nullopt;
      if (!expect(TokenKind::Equals, "'='")) return std::nullopt;
      if (name_tok.text == "block") {
        if (saw_block) error(name_tok.span, "sem.duplicate-attr", "duplicate 'block'");
        auto block = parse_integer_token();
        if (!block) return std::nullopt;
        if (*block < 1) {
          error(name_tok.span, "sem.bad-value", "block size must be >= 1");
          return std::nullopt;
        }
        format.block_size = *block;
        saw_block = true;
      } else if (name_tok.text == "scaling") {
        const Token value_tok = peek();
        if (!expect(TokenKind::Identifier, "scaling mode")) return std::nullopt;
        auto scaling = scaling_from_name(value_tok.text);
        if (!scaling) {
          error(value_tok.span, "sem.bad-value", "unknown scaling '" + value_tok.text + "'");
          return std::nullopt;
        }
        if (!is_q_format(*kind)) {
          error(name_tok.span, "sem.unknown-attr",
                "'scaling' applies to q formats only");
          return std::nullopt;
        }
        if (saw_scaling) error(name_tok.span, "sem.duplicate-attr", "duplicate 'scaling'");
        format.scaling = *scaling;
        saw_scaling = true;
      } else if (name_tok.text == "rounding") {
        const Token value_tok = peek();
        if (!expect(TokenKind::Identifier, "rounding mode")) return std::nullopt;
        auto rounding = rounding_from_name(value_tok.text);
        if (!rounding) {
          error(value_tok.span, "sem.bad-value", "unknown rounding '" + value_tok.text + "'");
          return std::nullopt;
        }
        if (!is_q_format(*kind)) {
          error(name_tok.span, "sem.unknown-attr",
                "'rounding' applies to q formats only");
          return std::nullopt;
        }
        if (saw_rounding) error(name_tok.span, "sem.duplicate-attr", "duplicate 'rounding'");
        format.rounding = *rounding;
        saw_rounding = true;
      } else {
        error(name_tok.span, "sem.unknown-attr",
              "unknown format attribute '" + name_tok.text + "'");
        return std::nullopt;
      }
    }
    if (!expect(TokenKind::RParen, "')'")) return std::nullopt;
    if (!saw_block) {
      error(kind_tok.span, "sem.missing-attr", "format literal is missing 'block'");
      return std::nullopt;
    }
    if (is_q_format(*kind) && (!saw_scaling || !saw_rounding)) {
      error(kind_tok.span, "sem.missing-attr",
            "q formats require 'scaling' and 'rounding'");
      return std::nullopt;
    }
    return format;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<ParseDiagnostic> diagnostics_;
};

// ---------------------------------------------------------------------------
// WDL

class WdlParser : public ParserBase {
 public:
  using ParserBase::ParserBase;

  std::optional<WaveformGraph> parse() {
    if (!expect_keyword("waveform")) return std::nullopt;
    auto name = expect(TokenKind::String, "waveform name string");
    if (!name) return std::nullopt;
    graph_.name = name->text;
    if (!expect(TokenKind::LBrace, "'{'")) return std::nullopt;

    while (!at(TokenKind::RBrace) && !at_end()) {
      if (at_ident("kernel")) {
        if (!parse_kernel()) synchronize();
      } else if (at_ident("edge")) {
        if (!parse_edge()) synchronize();
      } else if (at_ident("constraint")) {
        if (!parse_constraint()) synchronize();
      } else {
        error_here("syntax.expected",
                   "expected 'kernel', 'edge', or 'constraint', got '" + describe(peek()) + "'");
        synchronize();
      }
    }
    expect(TokenKind::RBrace, "'}'");
    if (!at_end()) {
      error_here("syntax.trailing", "unexpected input after the closing '}'");
    }

    resolve_references();
    if (!has_errors()) check_acyclic();
    if (has_errors()) return std::nullopt;
    return std::move(graph_);
  }

 private:
  bool parse_kernel() {
    advance();  // 'kernel'
    auto id = expect(TokenKind::Identifier, "kernel id");
    if (!id) return false;
    if (graph_.find_kernel(id->text) != nullptr) {
      error(id->span, "sem.duplicate-kernel", "duplicate kernel id '" + id->text + "'");
      // keep parsing the block so later errors are still reported
    }
    if (!expect(TokenKind::Colon, "':'")) return false;

    KernelSpec kernel;
    kernel.id = id->text;
    bool duplicate = graph_.find_kernel(id->text) != nullptr;

    if (at_ident("nucleus")) {
      advance();
      if (!expect(TokenKind::LParen, "'('")) return false;
      auto nucleus_name = expect(TokenKind::Identifier, "nucleus name");
      if (!nucleus_name) return false;
      if (!expect(TokenKind::RParen, "')'")) return false;
      NucleusKernel spec;
      spec.nucleus = NucleusId{nucleus_name->text};
      if (!parse_nucleus_body(*id, spec, kernel)) return false;
      kernel.kind = std::move(spec);
    } else if (at_ident("nonnucleus")) {
      advance();
      NonNucleusKernel spec;
      if (!parse_non_nucleus_body(*id, spec, kernel)) return false;
      kernel.kind = std::move(spec);
    } else {
      error_here("syntax.expected", "expected 'nucleus(...)' or 'nonnucleus'");
      return false;
    }

    if (!duplicate) graph_.kernels.push_back(std::move(kernel));
    return true;
  }

  bool parse_nucleus_body(const Token& id, NucleusKernel& spec, KernelSpec& kernel) {
    if (!expect(TokenKind::LBrace, "'{'")) return false;
    while (!at(TokenKind::RBrace) && !at_end()) {
      const Token name_tok = peek();
      if (!expect(TokenKind::Identifier, "attribute name")) return false;
      if (!expect(TokenKind::Equals, "'='")) return false;
      auto value = parse_integer_token();
      if (!value) return false;
      if (!expect(TokenKind::Semicolon, "';'")) return false;
      if (name_tok.text == "invocations") {
        if (*value < 1) {
          error(name_tok.span, "sem.bad-value", "invocations must be >= 1");
          return false;
        }
        kernel.invocations = *value;
      } else if (name_tok.text == "fallback_load") {
        if (*value < 1) {
          error(name_tok.span, "sem.bad-value", "fallback_load must be >= 1");
          return false;
        }
        spec.fallback_load = *value;
      } else {
        if (spec.params.count(name_tok.text) != 0) {
          error(name_tok.span, "sem.duplicate-attr",
                "duplicate parameter '" + name_tok.text + "'");
          return false;
        }
        if (name_tok.text == "size" && *value < 1) {
          error(name_tok.span, "sem.bad-value", "size must be >= 1");
          return false;
        }
        spec.params[name_tok.text] = *value;
      }
    }
    if (!expect(TokenKind::RBrace, "'}'")) return false;
    if (!spec.size().has_value()) {
      error(id.span, "sem.missing-attr",
            "nucleus kernel '" + id.text + "' is missing the 'size' parameter");
      return false;
    }
    return true;
  }

  bool parse_non_nucleus_body(const Token& id, NonNucleusKernel& spec, KernelSpec& kernel) {
    if (!expect(TokenKind::LBrace, "'{'")) return false;
    bool saw_load = false;
    while (!at(TokenKind::RBrace) && !at_end()) {
      const Token name_tok = peek();
      if (!expect(TokenKind::Identifier, "attribute name")) return false;
      if (!expect(TokenKind::Equals, "'='")) return false;
      auto value = parse_integer_token();
      if (!value) return false;
      if (!expect(TokenKind::Semicolon, "';'")) return false;
      if (name_tok.text == "load") {
        if (saw_load) {
          error(name_tok.span, "sem.duplicate-attr", "duplicate 'load'");
          return false;
        }
        if (*value < 1) {
          error(name_tok.span, "sem.bad-value", "load must be >= 1");
          return false;
        }
        spec.load_ops = *value;
        saw_load = true;
      } else if (name_tok.text == "invocations") {
        if (*value < 1) {
          error(name_tok.span, "sem.bad-value", "invocations must be >= 1");
          return false;
        }
        kernel.invocations = *value;
      } else {
        error(name_tok.span, "sem.unknown-attr",
              "unknown non-nucleus attribute '" + name_tok.text + "'");
        return false;
      }
    }
    if (!expect(TokenKind::RBrace, "'}'")) return false;
    if (!saw_load) {
      error(id.span, "sem.missing-attr",
            "non-nucleus kernel '" + id.text + "' is missing 'load'");
      return false;
    }
    return true;
  }

  bool parse_edge() {
    const Token edge_tok = advance();  // 'edge'
    auto src = expect(TokenKind::Identifier, "source kernel id");
    if (!src) return false;
    if (!expect(TokenKind::Arrow, "'->'")) return false;
    auto dst = expect(TokenKind::Identifier, "destination kernel id");
    if (!dst) return false;
    if (!expect(TokenKind::LBrace, "'{'")) return false;

    EdgeSpec edge;
    edge.src = src->text;
    edge.dst = dst->text;
    bool saw_tokens = false, saw_format = false;
    while (!at(TokenKind::RBrace) && !at_end()) {
      const Token name_tok = peek();
      if (!expect(TokenKind::Identifier, "attribute name")) return false;
      if (!expect(TokenKind::Equals, "'='")) return false;
      if (name_tok.text == "tokens") {
        if (saw_tokens) {
          error(name_tok.span, "sem.duplicate-attr", "duplicate 'tokens'");
          return false;
        }
        auto tokens = parse_integer_token();
        if (!tokens) return false;
        if (*tokens < 1) {
          error(name_tok.span, "sem.bad-value", "tokens must be >= 1");
          return false;
        }
        edge.tokens = *tokens;
        saw_tokens = true;
      } else if (name_tok.text == "format") {
        if (saw_format) {
          error(name_tok.span, "sem.duplicate-attr", "duplicate 'format'");
          return false;
        }
        auto format = parse_format_literal();
        if (!format) return false;
        edge.format = *format;
        saw_format = true;
      } else {
        error(name_tok.span, "sem.unknown-attr", "unknown edge attribute '" + name_tok.text + "'");
        return false;
      }
      if (!expect(TokenKind::Semicolon, "';'")) return false;
    }
    if (!expect(TokenKind::RBrace, "'}'")) return false;
    if (!saw_tokens || !saw_format) {
      error(edge_tok.span, "sem.missing-attr",
            "edge " + edge.src + "->" + edge.dst + " needs 'tokens' and 'format'");
      return false;
    }
    if (edge.src == edge.dst) {
      error(edge_tok.span, "sem.self-edge", "edge endpoints must differ");
      return false;
    }
    edge_spans_.push_back({src->span, dst->span});
    graph_.edges.push_back(std::move(edge));
    return true;
  }

  bool parse_constraint() {
    const Token constraint_tok = advance();  // 'constraint'
    if (at_ident("latency")) {
      advance();
      if (!expect(TokenKind::LParen, "'('")) return false;
      if (!expect_keyword("path")) return false;
      if (!expect(TokenKind::Equals, "'='")) return false;
      if (!expect(TokenKind::LBracket, "'['")) return false;
      PathLatencyConstraint latency;
      std::vector<SourceSpan> id_spans;
      bool first = true;
      while (!at(TokenKind::RBracket) && !at_end()) {
        if (!first && !expect(TokenKind::Comma, "','")) return false;
        first = false;
        auto id = expect(TokenKind::Identifier, "kernel id");
        if (!id) return false;
        latency.path.push_back(id->text);
        id_spans.push_back(id->span);
      }
      if (!expect(TokenKind::RBracket, "']'")) return false;
      if (!expect(TokenKind::RParen, "')'")) return false;
      if (!expect(TokenKind::LessEqual, "'<='")) return false;
      const Token bound_tok = peek();
      auto bound = parse_quantity({{"us", 1.0}});
      if (!bound) return false;
      if (!(*bound > 0.0)) {
        error(bound_tok.span, "sem.bad-value", "latency bound must be positive");
        return false;
      }
      if (!expect(TokenKind::Semicolon, "';'")) return false;
      if (latency.path.empty()) {
        error(constraint_tok.span, "sem.bad-value", "latency path must not be empty");
        return false;
      }
      latency.bound_us = *bound;
      constraint_spans_.push_back({constraint_tok.span, std::move(id_spans)});
      graph_.constraints.push_back(ConstraintSpec{std::move(latency)});
      return true;
    }
    if (at_ident("throughput")) {
      advance();
      if (!expect(TokenKind::GreaterEqual, "'>='")) return false;
      const Token bound_tok = peek();
      auto bound = parse_quantity({{"fps", 1.0}});
      if (!bound) return false;
      if (!(*bound > 0.0)) {
        error(bound_tok.span, "sem.bad-value", "throughput bound must be positive");
        return false;
      }
      if (!expect(TokenKind::Semicolon, "';'")) return false;
      constraint_spans_.push_back({constraint_tok.span, {}});
      graph_.constraints.push_back(ConstraintSpec{ThroughputConstraint{*bound}});
      return true;
    }
    error_here("syntax.expected", "expected 'latency' or 'throughput'");
    return false;
  }

  // Edges and constraints may reference kernels declared later in the file;
  // resolve everything once the whole body has been read.
  void resolve_references() {
    for (std::size_t i = 0; i < graph_.edges.size(); ++i) {
      const EdgeSpec& edge = graph_.edges[i];
      if (graph_.find_kernel(edge.src) == nullptr) {
        error(edge_spans_[i].first, "sem.unknown-kernel",
              "edge references unknown kernel '" + edge.src + "'");
      }
      if (graph_.find_kernel(edge.dst) == nullptr) {
        error(edge_spans_[i].second, "sem.unknown-kernel",
              "edge references unknown kernel '" + edge.dst + "'");
      }
    }
    for (std::size_t i = 0; i < graph_.constraints.size(); ++i) {
      const PathLatencyConstraint* latency = graph_.constraints[i].as_path_latency();
      if (latency == nullptr) continue;
      const auto& [keyword_span, id_spans] = constraint_spans_[i];
      bool ids_ok = true;
      for (std::size_t k = 0; k < latency->path.size(); ++k) {
        if (graph_.find_kernel(latency->path[k]) == nullptr) {
          error(id_spans[k], "sem.unknown-kernel",
                "constraint references unknown kernel '" + latency->path[k] + "'");
          ids_ok = false;
        }
      }
      if (!ids_ok) continue;
      for (std::size_t k = 0; k + 1 < latency->path.size(); ++k) {
        if (!graph_.has_edge(latency->path[k], latency->path[k + 1])) {
          error(keyword_span, "sem.path-not-connected",
                "constraint path is not connected: no edge " + latency->path[k] + "->" +
                    latency->path[k + 1]);
        }
      }
    }
  }

  void check_acyclic() {
    for (const Violation& violation : validate_graph(graph_)) {
      // Everything except the whole-graph cycle check is guarded by the
      // per-declaration checks above, so any leftover violation is a cycle.
      const SourceSpan span =
          edge_spans_.empty() ? SourceSpan{peek().span.file, 1, 1, 1} : edge_spans_.back().first;
      error(span, "sem." + violation.code, violation.message);
    }
  }

  WaveformGraph graph_;
  std::vector<std::pair<SourceSpan, SourceSpan>> edge_spans_;
  std::vector<std::pair<SourceSpan, std::vector<SourceSpan>>> constraint_spans_;
};

// ---------------------------------------------------------------------------
// BSP

class BspParser : public ParserBase {
 public:
  using ParserBase::ParserBase;

  std::optional<Bsp> parse() {
    if (!expect_keyword("bsp")) return std::nullopt;
    auto name = expect(TokenKind::String, "bsp name string");
    if (!name) return std::nullopt;
    bsp_.platform.name = name->text;
    if (!expect(TokenKind::LBrace, "'{'")) return std::nullopt;

    while (!at(TokenKind::RBrace) && !at_end()) {
      if (at_ident("pe")) {
        if (!parse_pe()) synchronize();
      } else if (at_ident("link")) {
        if (!parse_link()) synchronize();
      } else if (at_ident("flavor")) {
        if (!parse_flavor()) synchronize();
      } else if (at_ident("glue")) {
        if (!parse_glue()) synchronize();
      } else {
        error_here("syntax.expected",
                   "expected 'pe', 'link', 'flavor', or 'glue', got '" + describe(peek()) + "'");
        synchronize();
      }
    }
    expect(TokenKind::RBrace, "'}'");
    if (!at_end()) {
      error_here("syntax.trailing", "unexpected input after the closing '}'");
    }

    resolve_references();
    if (has_errors()) return std::nullopt;
    return std::move(bsp_);
  }

 private:
  static const std::vector<std::pair<std::string_view, double>>& clock_units() {
    static const std::vector<std::pair<std::string_view, double>> units = {
        {"hz", 1.0}, {"khz", 1e3}, {"mhz", 1e6}, {"ghz", 1e9}};
    return units;
  }
  static const std::vector<std::pair<std::string_view, double>>& time_units() {
    static const std::vector<std::pair<std::string_view, double>> units = {
        {"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}};
    return units;
  }
  static const std::vector<std::pair<std::string_view, double>>& bandwidth_units() {
    static const std::vector<std::pair<std::string_view, double>> units = {
        {"bytes_per_s", 1.0}, {"kbytes_per_s", 1e3}, {"mbytes_per_s", 1e6}, {"gbytes_per_s", 1e9}};
    return units;
  }
  static const std::vector<std::pair<std::string_view, double>>& energy_units() {
    static const std::vector<std::pair<std::string_view, double>> units = {
        {"j_per_byte", 1.0}, {"nj_per_byte", 1e-9}, {"pj_per_byte", 1e-12}};
    return units;
  }

  bool parse_pe() {
    advance();  // 'pe'
    auto id = expect(TokenKind::Identifier, "PE id");
    if (!id) return false;
    if (bsp_.platform.find_pe(id->text) != nullptr) {
      error(id->span, "sem.duplicate-pe", "duplicate PE id '" + id->text + "'");
      return false;
    }
    if (!expect(TokenKind::Colon, "':'")) return false;
    const Token class_tok = peek();
    if (!expect(TokenKind::Identifier, "PE class")) return false;
    auto cls = pe_class_from_name(class_tok.text);
    if (!cls) {
      error(class_tok.span, "sem.unknown-pe-class",
            "unknown PE class '" + class_tok.text + "' (expected DSP, ASIP, GPP, or HWACC)");
      return false;
    }
    if (!expect(TokenKind::LBrace, "'{'")) return false;

    ProcessingElement pe;
    pe.id = id->text;
    pe.cls = *cls;
    bool saw_clock = false;
    while (!at(TokenKind::RBrace) && !at_end()) {
      const Token name_tok = peek();
      if (!expect(TokenKind::Identifier, "attribute name")) return false;
      if (!expect(TokenKind::Equals, "'='")) return false;
      if (name_tok.text == "clock") {
        if (saw_clock) {
          error(name_tok.span, "sem.duplicate-attr", "duplicate 'clock'");
          return false;
        }
        const Token value_tok = peek();
        auto clock = parse_quantity(clock_units());
        if (!clock) return false;
        if (!(*clock > 0.0)) {
          error(value_tok.span, "sem.bad-value", "clock must be positive");
          return false;
        }
        pe.clock_hz = *clock;
        saw_clock = true;
      } else if (name_tok.text == "efficiency") {
        const Token value_tok = peek();
        auto efficiency = parse_real_token();
        if (!efficiency) return false;
        if (!(*efficiency > 0.0)) {
          error(value_tok.span, "sem.bad-value", "efficiency must be positive");
          return false;
        }
        pe.gpp_efficiency = *efficiency;
      } else {
        error(name_tok.span, "sem.unknown-attr", "unknown pe attribute '" + name_tok.text + "'");
        return false;
      }
      if (!expect(TokenKind::Semicolon, "';'")) return false;
    }
    if (!expect(TokenKind::RBrace, "'}'")) return false;
    if (!saw_clock) {
      error(id->span, "sem.missing-attr", "pe '" + id->text + "' is missing 'clock'");
      return false;
    }
    bsp_.platform.pes.push_back(std::move(pe));
    return true;
  }

  bool parse_link() {
    advance();  // 'link'
    auto id = expect(TokenKind::Identifier, "link id");
    if (!id) return false;
    for (const InterconnectLink& link : bsp_.platform.links) {
      if (link.id == id->text) {
        error(id->span, "sem.duplicate-link", "duplicate link id '" + id->text + "'");
        return false;
      }
    }
    if (!expect(TokenKind::Colon, "':'")) return false;
    auto pe_a = expect(TokenKind::Identifier, "PE id");
    if (!pe_a) return false;
    if (!expect(TokenKind::BiArrow, "'<->'")) return false;
    auto pe_b = expect(TokenKind::Identifier, "PE id");
    if (!pe_b) return false;
    if (pe_a->text == pe_b->text) {
      error(pe_b->span, "sem.self-link", "link endpoints must differ");
      return false;
    }
    if (!expect(TokenKind::LBrace, "'{'")) return false;

    InterconnectLink link;
    link.id = id->text;
    link.pe_a = pe_a->text;
    link.pe_b = pe_b->text;
    bool saw_bandwidth = false;
    while (!at(TokenKind::RBrace) && !at_end()) {
      const Token name_tok = peek();
      if (!expect(TokenKind::Identifier, "attribute name")) return false;
      if (!expect(TokenKind::Equals, "'='")) return false;
      const Token value_tok = peek();
      if (name_tok.text == "bandwidth") {
        auto bandwidth = parse_quantity(bandwidth_units());
        if (!bandwidth) return false;
        if (!(*bandwidth > 0.0)) {
          error(value_tok.span, "sem.bad-value", "bandwidth must be positive");
          return false;
        }
        link.bandwidth_bytes_per_s = *bandwidth;
        saw_bandwidth = true;
      } else if (name_tok.text == "latency") {
        auto latency = parse_quantity(time_units());
        if (!latency) return false;
        if (*latency < 0.0) {
          error(value_tok.span, "sem.bad-value", "latency must be nonnegative");
          return false;
        }
        link.latency_s = *latency;
      } else if (name_tok.text == "energy") {
        auto energy = parse_quantity(energy_units());
        if (!energy) return false;
        if (*energy < 0.0) {
          error(value_tok.span, "sem.bad-value", "energy must be nonnegative");
          return false;
        }
        link.energy_per_byte_j = *energy;
      } else {
        error(name_tok.span, "sem.unknown-attr", "unknown link attribute '" + name_tok.text + "'");
        return false;
      }
      if (!expect(TokenKind::Semicolon, "';'")) return false;
    }
    if (!expect(TokenKind::RBrace, "'}'")) return false;
    if (!saw_bandwidth) {
      error(id->span, "sem.missing-attr", "link '" + id->text + "' is missing 'bandwidth'");
      return false;
    }
    link_spans_.push_back(id->span);
    bsp_.platform.links.push_back(std::move(link));
    return true;
  }

  /// `cycles = a + b*n + c*nlogn` (any subset of terms, each at most once).
  std::optional<std::map<std::string, double>> parse_linear_terms(
      const std::set<std::string>& allowed_factors) {
    std::map<std::string, double> coefficients;
    while (true) {
      const Token value_tok = peek();
      auto coefficient = parse_real_token();
      if (!coefficient) return std::nullopt;
      if (*coefficient < 0.0) {
        error(value_tok.span, "sem.bad-value", "cost coefficients must be nonnegative");
        return std::nullopt;
      }
      std::string factor;  // "" = constant term
      if (accept(TokenKind::Star)) {
        const Token factor_tok = peek();
        if (!expect(TokenKind::Identifier, "'n' or 'nlogn'")) return std::nullopt;
        if (allowed_factors.count(factor_tok.text) == 0) {
          error(factor_tok.span, "sem.bad-value",
                "unknown cost term factor '" + factor_tok.text + "'");
          return std::nullopt;
        }
        factor = factor_tok.text;
      }
      if (coefficients.count(factor) != 0) {
        error(value_tok.span, "sem.duplicate-attr", "duplicate cost term");
        return std::nullopt;
      }
      coefficients[factor] = *coefficient;
      if (!accept(TokenKind::Plus)) break;
    }
    return coefficients;
  }

  std::optional<SizeSet> parse_sizes_literal() {
    if (!expect(TokenKind::LBracket, "'['")) return std::nullopt;
    const Token first_tok = peek();
    auto first = parse_integer_token();
    if (!first) return std::nullopt;
    if (accept(TokenKind::DotDot)) {
      const Token hi_tok = peek();
      auto hi = parse_integer_token();
      if (!hi) return std::nullopt;
      if (!expect_keyword("pow2")) return std::nullopt;
      if (!expect(TokenKind::RBracket, "']'")) return std::nullopt;
      if (!is_power_of_two(*first) || !is_power_of_two(*hi)) {
        error(first_tok.span, "sem.bad-value", "pow2 range bounds must be powers of two");
        return std::nullopt;
      }
      if (*first > *hi) {
        error(hi_tok.span, "sem.bad-value", "pow2 range is empty");
        return std::nullopt;
      }
      return SizeSet::pow2_range(*first, *hi);
    }
    std::vector<std::int64_t> sizes{*first};
    if (*first < 1) {
      error(first_tok.span, "sem.bad-value", "sizes must be >= 1");
      return std::nullopt;
    }
    while (accept(TokenKind::Comma)) {
      const Token size_tok = peek();
      auto size = parse_integer_token();
      if (!size) return std::nullopt;
      if (*size < 1) {
        error(size_tok.span, "sem.bad-value", "sizes must be >= 1");
        return std::nullopt;
      }
      sizes.push_back(*size);
    }
    if (!expect(TokenKind::RBracket, "']'")) return std::nullopt;
    return SizeSet::explicit_list(std::move(sizes));
  }

  bool parse_flavor() {
    advance();  // 'flavor'
    auto id = expect(TokenKind::Identifier, "flavor id");
    if (!id) return false;
    if (bsp_.find_flavor(id->text) != nullptr) {
      error(id->span, "sem.duplicate-flavor", "duplicate flavor id '" + id->text + "'");
      return false;
    }
    if (!expect(TokenKind::Colon, "':'")) return false;
    if (!expect_keyword("nucleus")) return false;
    if (!expect(TokenKind::LParen, "'('")) return false;
    auto nucleus_name = expect(TokenKind::Identifier, "nucleus name");
    if (!nucleus_name) return false;
    if (!expect(TokenKind::RParen, "')'")) return false;
    if (!expect_keyword("on")) return false;
    auto pe_id = expect(TokenKind::Identifier, "PE id");
    if (!pe_id) return false;
    if (!expect(TokenKind::LBrace, "'{'")) return false;

    Flavor flavor;
    flavor.id = id->text;
    flavor.nucleus = NucleusId{nucleus_name->text};
    flavor.pe = pe_id->text;
    bool saw_sizes = false, saw_input = false, saw_output = false, saw_cycles = false;
    while (!at(TokenKind::RBrace) && !at_end()) {
      const Token name_tok = peek();
      if (!expect(TokenKind::Identifier, "attribute name")) return false;
      if (!expect(TokenKind::Equals, "'='")) return false;
      if (name_tok.text == "algorithm" || name_tok.text == "vendor") {
        const Token value_tok = peek();
        std::string text;
        if (value_tok.kind == TokenKind::String || value_tok.kind == TokenKind::Identifier) {
          text = value_tok.text;
          advance();
        } else {
          error_here("syntax.expected", "expected a string or identifier tag");
          return false;
        }
        (name_tok.text == "algorithm" ? flavor.algorithm : flavor.vendor) = text;
      } else if (name_tok.text == "sizes") {
        auto sizes = parse_sizes_literal();
        if (!sizes) return false;
        flavor.sizes = *sizes;
        saw_sizes = true;
      } else if (name_tok.text == "input" || name_tok.text == "output") {
        auto format = parse_format_literal();
        if (!format) return false;
        (name_tok.text == "input" ? flavor.input_format : flavor.output_format) = *format;
        (name_tok.text == "input" ? saw_input : saw_output) = true;
      } else if (name_tok.text == "cycles") {
        auto terms = parse_linear_terms({"n", "nlogn"});
        if (!terms) return false;
        flavor.cost.base_cycles = (*terms)[""];
        flavor.cost.cycles_per_n = (*terms)["n"];
        flavor.cost.cycles_per_nlogn = (*terms)["nlogn"];
        saw_cycles = true;
      } else if (name_tok.text == "energy") {
        auto terms = parse_linear_terms({"n"});
        if (!terms) return false;
        flavor.cost.energy_base_j = (*terms)[""];
        flavor.cost.energy_per_n_j = (*terms)["n"];
      } else {
        error(name_tok.span, "sem.unknown-attr",
              "unknown flavor attribute '" + name_tok.text + "'");
        return false;
      }
      if (!expect(TokenKind::Semicolon, "';'")) return false;
    }
    if (!expect(TokenKind::RBrace, "'}'")) return false;

    if (!saw_sizes || !saw_input || !saw_output || !saw_cycles) {
      error(id->span, "sem.missing-attr",
            "flavor '" + id->text + "' needs 'sizes', 'input', 'output', and 'cycles'");
      return false;
    }
    if (flavor.sizes.empty()) {
      error(id->span, "sem.bad-value", "flavor '" + id->text + "' supports no sizes");
      return false;
    }
    if (cycles_of(flavor.cost, flavor.sizes.min_size()) < 1.0) {
      error(id->span, "sem.bad-cost-model",
            "flavor '" + id->text + "' cycle model yields < 1 cycle at its smallest size");
      return false;
    }
    flavor_spans_.push_back(pe_id->span);
    bsp_.flavors.push_back(std::move(flavor));
    return true;
  }

  bool parse_glue() {
    const Token glue_tok = advance();  // 'glue'
    const Token from_tok = peek();
    if (!expect(TokenKind::Identifier, "format kind")) return false;
    auto from = format_kind_from_name(from_tok.text);
    if (!from) {
      error(from_tok.span, "sem.unknown-format", "unknown format kind '" + from_tok.text + "'");
      return false;
    }
    if (!expect(TokenKind::Arrow, "'->'")) return false;
    const Token to_tok = peek();
    if (!expect(TokenKind::Identifier, "format kind")) return false;
    auto to = format_kind_from_name(to_tok.text);
    if (!to) {
      error(to_tok.span, "sem.unknown-format", "unknown format kind '" + to_tok.text + "'");
      return false;
    }
    if (!glue_pairs_.insert({*from, *to}).second) {
      error(glue_tok.span, "sem.duplicate-glue",
            "duplicate glue rule " + from_tok.text + " -> " + to_tok.text);
      return false;
    }
    if (!expect(TokenKind::LBrace, "'{'")) return false;
    const Token name_tok = peek();
    if (!expect(TokenKind::Identifier, "attribute name")) return false;
    if (!expect(TokenKind::Equals, "'='")) return false;
    if (name_tok.text == "cycles_per_sample") {
      const Token value_tok = peek();
      auto cycles = parse_real_token();
      if (!cycles) return false;
      if (!(*cycles > 0.0)) {
        error(value_tok.span, "sem.bad-value", "cycles_per_sample must be positive");
        return false;
      }
      bsp_.glue.set(*from, *to, *cycles);
    } else if (name_tok.text == "forbidden") {
      const Token value_tok = peek();
      if (!expect(TokenKind::Identifier, "'true'")) return false;
      if (value_tok.text != "true") {
        error(value_tok.span, "sem.bad-value", "expected 'forbidden = true'");
        return false;
      }
      bsp_.glue.forbid(*from, *to);
    } else {
      error(name_tok.span, "sem.unknown-attr",
            "expected 'cycles_per_sample' or 'forbidden'");
      return false;
    }
    if (!expect(TokenKind::Semicolon, "';'")) return false;
    if (!expect(TokenKind::RBrace, "'}'")) return false;
    return true;
  }

  void resolve_references() {
    for (std::size_t i = 0; i < bsp_.platform.links.size(); ++i) {
      const InterconnectLink& link = bsp_.platform.links[i];
      for (const std::string& endpoint : {link.pe_a, link.pe_b}) {
        if (bsp_.platform.find_pe(endpoint) == nullptr) {
          error(link_spans_[i], "sem.unknown-pe",
                "link '" + link.id + "' references unknown PE '" + endpoint + "'");
        }
      }
      for (std::size_t j = 0; j < i; ++j) {
        const InterconnectLink& other = bsp_.platform.links[j];
        if (other.connects(link.pe_a, link.pe_b)) {
          error(link_spans_[i], "sem.duplicate-link",
                "duplicate link between PEs '" + link.pe_a + "' and '" + link.pe_b + "'");
        }
      }
    }
    for (std::size_t i = 0; i < bsp_.flavors.size(); ++i) {
      const Flavor& flavor = bsp_.flavors[i];
      if (bsp_.platform.find_pe(flavor.pe) == nullptr) {
        error(flavor_spans_[i], "sem.unknown-pe",
              "flavor '" + flavor.id + "' references unknown PE '" + flavor.pe + "'");
      }
    }
  }

  Bsp bsp_;
  std::vector<SourceSpan> link_spans_;    // span of each link's id token
  std::vector<SourceSpan> flavor_spans_;  // span of each flavor's `on <pe>` token
  std::set<std::pair<FormatKind, FormatKind>> glue_pairs_;
};

}  // namespace

ParseResult<WaveformGraph> parse_waveform(std::string_view source, const std::string& file) {
  WdlParser parser(lex(source, file));
  ParseResult<WaveformGraph> result;
  result.value = parser.parse();
  result.diagnostics = parser.take_diagnostics();
  if (result.has_errors()) result.value.reset();
  return result;
}

ParseResult<Bsp> parse_bsp(std::string_view source, const std::string& file) {
  BspParser parser(lex(source, file));
  ParseResult<Bsp> result;
  result.value = parser.parse();
  result.diagnostics = parser.take_diagnostics();
  if (result.has_errors()) result.value.reset();
  return result;
}

}  // namespace wde::frontend
