#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/hopf.hpp"

namespace hopf {

/// Syntax or sort error with a 1-based source position.
class SweedlerError : public std::runtime_error {
 public:
  SweedlerError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// One factor of a leg expression: a Sweedler leg of an input, or the
/// constant eps (counit, H*-sorted) / one (unit, H-sorted).
struct Factor {
  enum class Kind { Leg, Eps, One };
  Kind kind = Kind::Leg;
  int input = -1;                 // index into SweedlerExpr::inputs
  int index = 0;                  // Sweedler index, 1-based
  std::vector<bool> inverse_ops;  // antipode chain in application order; true = S^-1
  Sort sort = Sort::Alg;
};

/// Product of factors of a single sort, multiplied left to right.
struct LegExpr {
  std::vector<Factor> factors;
  Sort sort = Sort::Alg;
};

struct Pairing {
  LegExpr dual;  // H*-sorted side
  LegExpr alg;   // H-sorted side
};

struct InputDecl {
  std::string name;
  Sort sort = Sort::Alg;
  int arity = 1;  // largest Sweedler index used
};

struct SweedlerExpr {
  std::vector<InputDecl> inputs;
  std::vector<Pairing> scalars;
  std::vector<LegExpr> outputs;  // empty: the formula is a scalar

  /// Canonical source text; parse(to_string()) reproduces the expression.
  std::string to_string() const;
};

/// Grammar:
///   in <name>:<Alg|Dual> ... ;
///   scalar pair(<expr>, <expr>) ... ;
///   out <expr>, ... [;]
/// where <expr> is a '*'-product of terms, a term is S(<term>), Sinv(<term>),
/// eps, one, <name>.<int> or a bare <name> (meaning <name>.1). '#' starts a
/// comment. Every input's Sweedler indices must be exactly 1..k, each used once.
SweedlerExpr parse_sweedler(std::string_view source);

enum class CoproductScheme {
  RightComb,  // (id (x) Delta) Delta ...
  LeftComb,   // (Delta (x) id) Delta ...
};

struct PlanStep {
  enum class Kind { Load, Coproduct, Antipode, Pair, Fold, Assemble };
  Kind kind;
  int input = -1;  // Load, Coproduct, Antipode
  int leg = 0;     // Antipode: Sweedler index; Coproduct: arity
  int index = -1;  // Pair: scalar index; Fold: output leg; Assemble: output count
  std::string describe() const;
};

/// A compiled Sweedler formula: a fixed schedule that expands each input,
/// applies antipodes, contracts pairings and multiplies out output legs as
/// soon as their legs are available, and assembles the output index. Inputs are loaded in an order chosen to
/// contract pairings early.
class ContractionPlan {
 public:
  static ContractionPlan compile(SweedlerExpr e, CoproductScheme scheme = CoproductScheme::RightComb);
  static ContractionPlan compile(std::string_view source) { return compile(parse_sweedler(source)); }

  const SweedlerExpr& expr() const { return expr_; }
  const std::vector<PlanStep>& steps() const { return steps_; }
  std::size_t input_count() const { return expr_.inputs.size(); }
  std::size_t output_legs() const { return expr_.outputs.size(); }
  std::vector<Sort> input_sorts() const;
  std::vector<Sort> output_sorts() const;
  /// Dimensions of the output tensor; {1} for a scalar formula.
  std::vector<std::size_t> output_shape(std::size_t n) const;

  /// Output (flattened row-major over output legs) on basis inputs.
  SparseVec evaluate_basis(const HopfData& h, std::span<const std::uint32_t> basis) const;
  /// Multilinear evaluation on one coefficient vector per input.
  SparseVec evaluate(const HopfData& h, std::span<const SparseVec> inputs) const;
  /// Same on dense vectors, returning a tensor of output_shape(n).
  Tensor evaluate(const HopfData& h, std::span<const Tensor> inputs) const;
  /// Images of all input basis tensors (column index row-major over inputs).
  std::vector<SparseVec> columns(const HopfData& h) const;
  /// The linear map from the tensor product of inputs to the output space.
  Matrix to_matrix(const HopfData& h) const;

 private:
  SweedlerExpr expr_;
  CoproductScheme scheme_ = CoproductScheme::RightComb;
  std::vector<PlanStep> steps_;
  // Input load order; pair_after_[k + 1] holds the pairings completed by the
  // k-th loaded input, pair_after_[0] those without legs.
  std::vector<int> order_;
  std::vector<std::vector<int>> pair_after_;
  // Output legs whose inputs are all loaded after the k-th input (same indexing).
  std::vector<std::vector<int>> fold_after_;
  // Slot offset of each input's first leg.
  std::vector<int> slot_base_;
  int slots_ = 0;
};

struct FormulaSource {
  const char* name;
  const char* text;
};

/// The formula library shipped with the binary (one entry per formulas/*.swe).
const std::vector<FormulaSource>& formula_library();
/// Compiled plan of a library formula, cached; throws for unknown names.
const ContractionPlan& formula(std::string_view name);

}  // namespace hopf
