#include "ptorder/io.hpp"

#include <fstream>
#include <sstream>

namespace ptorder {

namespace {

Int parse_int(const std::string& tok, int line_no) {
    try {
        return Int(tok);
    } catch (const std::exception&) {
        throw parse_error(line_no, "'" + tok + "' is not an integer");
    }
}

}  // namespace

IntMatrix read_matrix(std::istream& in) {
    std::string line;
    int line_no = 0;
    do {
        if (!std::getline(in, line)) throw parse_error(1, "missing dimension line");
        ++line_no;
    } while (line.find_first_not_of(" \t\r") == std::string::npos);

    std::istringstream head(line);
    long long n = 0;
    std::string extra;
    if (!(head >> n) || n < 1 || head >> extra)
        throw parse_error(line_no, "expected a single positive dimension");
    IntMatrix a(static_cast<int>(n));
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line)) throw parse_error(line_no + 1, "missing matrix row " + std::to_string(i + 1));
        ++line_no;
        std::istringstream row(line);
        std::string tok;
        for (int j = 0; j < n; ++j) {
            if (!(row >> tok))
                throw parse_error(line_no, "row " + std::to_string(i + 1) + " has fewer than " +
                                               std::to_string(n) + " entries");
            a(i, j) = parse_int(tok, line_no);
        }
        if (row >> tok)
            throw parse_error(line_no, "row " + std::to_string(i + 1) + " has more than " + std::to_string(n) +
                                           " entries");
    }
    return a;
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_matrix(in);
}

std::string matrix_to_text(const IntMatrix& a) {
    std::ostringstream os;
    os << a.size() << '\n';
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) os << (j ? " " : "") << a(i, j);
        os << '\n';
    }
    return os.str();
}

IntPolynomial parse_polynomial(const std::string& text) {
    std::istringstream in(text);
    std::vector<Int> coeffs;
    std::string tok;
    while (in >> tok) coeffs.push_back(parse_int(tok, 1));
    return IntPolynomial(std::move(coeffs));
}

std::string polynomial_to_text(const IntPolynomial& p) {
    std::ostringstream os;
    for (int i = 0; i <= p.degree(); ++i) os << (i ? " " : "") << p.coeff(i);
    return os.str();
}

std::string polynomial_pretty(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Int& c = p.coeff(i);
        if (c == 0) continue;
        const Int mag = boost::multiprecision::abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag;
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Json json_matrix(const IntMatrix& a) {
    Json rows = Json::array();
    for (int i = 0; i < a.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a.size(); ++j) row.push_back(a(i, j).str());
        rows.push_back(std::move(row));
    }
    return Json{{"n", a.size()}, {"rows", std::move(rows)}};
}

Json json_polynomial(const IntPolynomial& p) {
    Json coeffs = Json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).str());
    return coeffs;
}

Json json_order_result(const OrderResult& r) {
    Json j;
    j["finite"] = r.finite;
    j["char_poly"] = json_polynomial(r.characteristic);
    if (r.order) j["order"] = *r.order;
    if (r.min_poly) j["min_poly"] = json_polynomial(*r.min_poly);
    if (r.char_factors) {
        Json factors = Json::array();
        for (const auto& [d, mult] : r.char_factors->factors) factors.push_back(Json{{"d", d}, {"mult", mult}});
        j["char_factors"] = std::move(factors);
    }
    return j;
}

const std::vector<std::pair<std::string, IntMatrix>>& paper_fixtures() {
    static const std::vector<std::pair<std::string, IntMatrix>> fixtures = [] {
        std::vector<std::pair<std::string, IntMatrix>> f;
        f.emplace_back("example1", IntMatrix::from_rows({{0, 0, 1, 0, 0},
                                                         {1, 0, -1, 1, 0},
                                                         {0, 0, 1, -1, 1},
                                                         {0, 0, 0, 1, 0},
                                                         {0, 1, 0, 0, 0}}));
        f.emplace_back("type1-order40", cycle_companion(10) + t_block(10, {1, 9, 6, 1}));
        f.emplace_back("type1-order60", cycle_companion(10) + t_block(10, {1, 8, 6, 2}));
        f.emplace_back("type2d-order16",
                       direct_sum(cycle_companion(9), cycle_companion(1)) + t_block(10, {2, 10, 9, 9}));
        f.emplace_back("type2d-order16-asm", IntMatrix::from_rows({{0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
                                                                   {1, 0, 0, 0, 0, 0, 0, -1, 1, 0},
                                                                   {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                                                                   {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                                                                   {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                                                                   {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
                                                                   {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                                                                   {0, 0, 0, 0, 0, 0, 0, 1, -1, 1},
                                                                   {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
                                                                   {0, 0, 0, 0, 0, 0, 1, 0, 0, 0}}));
        f.emplace_back("two-tblocks-order12", IntMatrix::from_rows({{0, 0, 1, 0, 0, 0},
                                                                    {0, 1, 0, 0, 0, 0},
                                                                    {1, -1, 0, 1, 0, 0},
                                                                    {0, 1, -1, 0, 0, 1},
                                                                    {0, 0, 1, -1, 1, 0},
                                                                    {0, 0, 0, 1, 0, 0}}));
        return f;
    }();
    return fixtures;
}

}  // namespace ptorder
