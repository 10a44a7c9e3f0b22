// Square matrices over Q(params): the explicit representations, brackets,
// rank of spans and structure-constant presentations.
#pragma once

#include "dulab/catalog.hpp"

namespace dulab {

class MatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t n, ParamSet ps);
  static Matrix identity(std::size_t n, const ParamSet& ps);
  // Rows of scalar expressions over ps.
  static Matrix parse(const std::vector<std::vector<std::string>>& rows, const ParamSet& ps);

  std::size_t size() const { return n_; }
  const ParamSet& params() const { return ps_; }
  const RatFunc& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const RatFunc& v) { a_[i * n_ + j] = v.lifted(ps_); }
  const std::vector<RatFunc>& entries() const { return a_; }
  bool is_zero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const RatFunc& c) const;
  Matrix substitute(const std::map<std::string, Rational>& values) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check_shape(const Matrix& o) const;

  std::size_t n_ = 0;
  ParamSet ps_;
  std::vector<RatFunc> a_;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_bracket(const Matrix& a, const Matrix& b);
RatFunc mat_trace(const Matrix& a);

// Images indexed by generator. With `reverse`, each word is evaluated with
// its factors in reverse order.
Matrix eval_ncpoly(const NcPoly& p, const std::vector<Matrix>& images, bool reverse = false);
Matrix eval_ncpoly(const NcPoly& p, const std::map<std::string, Matrix>& images, bool reverse = false);

// Rank over Q(params) of the flattened matrices. Entries that are Laurent
// polynomials in `loop_vars` are expanded by power first, so the rank is
// taken over the remaining parameters only.
std::size_t rank_span(const std::vector<Matrix>& mats, const std::vector<std::string>& loop_vars = {});

// Sparse coordinate vectors over Q(params).
using SparseVec = std::map<std::string, RatFunc>;
std::size_t rank_of(std::vector<SparseVec> rows);
// Coefficients c, not all zero, with sum c_i rows_i = 0; nullopt when the
// rows are independent.
std::optional<std::vector<RatFunc>> kernel_vector(const std::vector<SparseVec>& rows);
// Coordinates of `v` in the span of `basis` (basis assumed independent).
std::optional<std::vector<RatFunc>> solve_in_span(const std::vector<SparseVec>& basis, const SparseVec& v);
SparseVec flatten(const Matrix& m, const std::vector<std::string>& loop_vars = {});
SparseVec flatten(const NcPoly& p);

// The explicit representations.
std::vector<Matrix> downup_rep_3x3(const ParamSet& ps);  // alpha, gamma, t
std::vector<Matrix> sl2_abc(const ParamSet& ps);
std::vector<Matrix> sl3_abc(const ParamSet& ps);          // xi
std::vector<Matrix> loop_abc(const ParamSet& ps);         // xi, t
// A, B, C, [A,B], [B,C], [C,A], [A,[B,C]], [B,[C,A]].
std::vector<Matrix> sl3_basis(const ParamSet& ps);
std::vector<std::string> sl3_basis_names();
Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j, const ParamSet& ps);

// Enveloping-algebra presentation from a basis closed under the bracket:
// g_i g_j - g_j g_i - sum_k c_ijk g_k for i < j.
Presentation envelope(const std::string& name, const std::vector<std::string>& names,
                      const std::vector<Matrix>& basis);
Presentation sl2_envelope(const ParamSet& ps);
Presentation sl3_envelope(const ParamSet& ps);

// The unit-matrix formulas in terms of A, B, C and their brackets, and the
// Jacobi sum, as exact identities in xi.
CheckReport verify_sl3_unit_formulas(const ParamSet& ps);

}  // namespace dulab
