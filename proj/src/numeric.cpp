#include "zdmult/numeric.hpp"
#include "zdmult/matrix.hpp"

#include <sstream>

namespace zdmult {

Int parse_int(const std::string& s) {
    if (s.empty()) throw UsageError("empty integer literal");
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw UsageError("bad integer literal: '" + s + "'");
    }
}

// Accepts "3", "-5/7" and terminating decimals like "0.25".
Rat parse_rat(const std::string& s) {
    if (s.empty()) throw UsageError("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num = parse_int(s.substr(0, slash));
        Int den = parse_int(s.substr(slash + 1));
        return make_rat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        if (tail.empty()) throw UsageError("bad decimal literal: '" + s + "'");
        for (char c : tail)
            if (!isdigit(static_cast<unsigned char>(c)))
                throw UsageError("bad decimal literal: '" + s + "'");
        bool negative = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
        if (head.empty()) head = "0";
        Int whole = parse_int(head);
        Int frac = parse_int(tail);
        Int den = 1;
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        Rat q = Rat(whole) + make_rat(frac, den);
        return negative ? Rat(-q) : q;
    }
    return Rat(parse_int(s));
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string to_string(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

namespace {
template <class T>
std::string matrix_str(const Mat<T>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ",";
            os << m(i, j);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}
}  // namespace

std::string to_string(const RatMatrix& m) { return matrix_str(m); }
std::string to_string(const IntMatrix& m) { return matrix_str(m); }

}  // namespace zdmult
