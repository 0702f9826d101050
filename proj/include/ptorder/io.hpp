#pragma once

#include "ptorder/int_matrix.hpp"
#include "ptorder/int_poly.hpp"
#include "ptorder/order_engine.hpp"
#include "ptorder/pt_graph.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptorder {

using Json = nlohmann::json;

/// Parse failure with a 1-based line number.
struct parse_error : std::runtime_error {
    parse_error(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

/// Matrix text format: line 1 holds n, lines 2..n+1 hold n space-separated
/// integers each. Used by every CLI subcommand.
IntMatrix read_matrix(std::istream& in);
IntMatrix read_matrix_file(const std::string& path);
std::string matrix_to_text(const IntMatrix& a);

/// Polynomial text format: space-separated coefficients, constant term first.
IntPolynomial parse_polynomial(const std::string& text);
std::string polynomial_to_text(const IntPolynomial& p);
/// Human-readable form, e.g. "x^4 - x^2 + 1".
std::string polynomial_pretty(const IntPolynomial& p);

/// JSON encodings; big integers are carried as decimal strings throughout.
Json json_matrix(const IntMatrix& a);
Json json_polynomial(const IntPolynomial& p);
Json json_order_result(const OrderResult& r);

/// The matrices displayed in the source material, as named fixtures:
///   example1            5x5 ASM of order 6
///   type1-order40       C_10 + T(1,9,6,1)
///   type1-order60       C_10 + T(1,8,6,2)
///   type2d-order16      (C_9 + C_1) + T(2,10,9,9)
///   type2d-order16-asm  the ASM it is permutation similar to
///   two-tblocks-order12 6x6 ASM of order 12 that is not a PT-matrix
const std::vector<std::pair<std::string, IntMatrix>>& paper_fixtures();

}  // namespace ptorder
