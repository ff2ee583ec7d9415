#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "weakhopf/coaction.hpp"
#include "weakhopf/dualization.hpp"
#include "weakhopf/groupoid.hpp"
#include "weakhopf/structure.hpp"

namespace weakhopf {

/// "Q", "F<p>" or "Fp:<p>"; throws PreconditionError.
Field parse_field(const std::string& text);

/// Structure tables as read; algebra and antipode parts may be absent when
/// the file only describes a coalgebra.
struct StructureData {
  Space space;
  std::optional<LinMap> mult;
  std::optional<Vector> unit;
  LinMap comult;
  LinMap counit;
  std::optional<LinMap> antipode;

  Coalgebra coalgebra() const;
  /// Throws ParseError when mult or unit is missing.
  WeakBialgebra bialgebra() const;
  /// Throws ParseError when the antipode is missing.
  WeakHopf hopf() const;
};

/// All parsers throw ParseError with the given source name on malformed input.
StructureData parse_structure(const std::string& text, const std::string& source = "<input>");
std::string write_structure(const WeakBialgebra& wb, const std::optional<LinMap>& antipode = std::nullopt);
std::string write_structure(const WeakHopf& wh);
std::string write_coalgebra(const Coalgebra& c);

std::string read_text(const std::filesystem::path& path);
/// Creates parent directories as needed.
void write_text(const std::filesystem::path& path, const std::string& text);
StructureData load_structure(const std::filesystem::path& path);

/// An embedded "H" or "C" entry of a coaction, action or lambda file: a path
/// (relative to that file) or an inline structure object.
std::optional<StructureData> embedded_structure(const std::filesystem::path& path, const std::string& key);

/// "rho": [[i, [[j, k, coeff], ...]], ...] with ρ(c_i) = Σ coeff h_j⊗c_k.
LinMap parse_rho(const std::string& text, const WeakHopf& h, const Coalgebra& c, const std::string& source = "<input>");
std::string write_rho(const CoactionMap& cm);

/// "pi": [[i, [[j, coeff], ...]], ...] with π(c_i) = Σ coeff c_j.
LinMap parse_projection(const std::string& text, const Coalgebra& c, const std::string& source = "<input>");
std::string write_projection(const LinMap& pi);

/// "act": [[i, j, [[k, coeff], ...]], ...] with c_i ↼ f_j = Σ coeff c_k.
LinMap parse_action(const std::string& text, const WeakHopf& acting, const Coalgebra& c,
                    const std::string& source = "<input>");
std::string write_action(const ModuleActionMap& ma);

/// "lambda": [[i, coeff], ...] or "lambdas": [[[i, coeff], ...], ...] in dual coordinates.
std::vector<Vector> parse_lambdas(const std::string& text, const WeakHopf& h, const std::string& source = "<input>");

/// Raw table {"arrows", "identities", "compose"} or {"groups": [...]} where
/// each group is a name ("z2", "s3") or {"elements", "identity", "table"}.
Groupoid parse_groupoid(const std::string& text, const std::string& source = "<input>");
std::vector<FiniteGroup> parse_group_list(const std::string& comma_separated);

}  // namespace weakhopf
