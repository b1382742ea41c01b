#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "picspace/graph.hpp"

namespace picspace {

using Int = boost::multiprecision::cpp_int;

/// Integer polynomial, squarefree by representation, in the slope
/// variables m_e.  A monomial is an EdgeSet F and stands for the
/// product of m_f over f in F; the empty set is the unit.
class MultilinearPoly {
public:
    MultilinearPoly() = default;

    static MultilinearPoly zero() { return {}; }
    static MultilinearPoly constant(Int c);
    static MultilinearPoly monomial(EdgeSet support, Int c = 1);
    static MultilinearPoly variable(int e) { return monomial(edge_bit(e)); }

    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    int degree() const;
    const std::map<EdgeSet, Int>& terms() const { return terms_; }
    Int coeff(EdgeSet support) const;
    /// Union of the variable supports of all terms.
    EdgeSet variables() const;

    MultilinearPoly operator-() const;
    MultilinearPoly operator+(const MultilinearPoly& o) const;
    MultilinearPoly operator-(const MultilinearPoly& o) const;
    /// Throws std::domain_error if any term pair shares a variable
    /// (the product would leave the squarefree ring).
    MultilinearPoly operator*(const MultilinearPoly& o) const;

    bool operator==(const MultilinearPoly& o) const {
        return terms_ == o.terms_;
    }

    /// Flips the global sign so the term with the smallest bitmask has
    /// a positive coefficient; no-op on zero.
    MultilinearPoly sign_normalized() const;

    /// Readable form, e.g. "m_{12} m_{23} - m_{13} m_{24}", with terms
    /// in ascending-bitmask order and variables named by the ambient
    /// graph's original vertex ids.
    std::string pretty(const Graph& g) const;

private:
    std::map<EdgeSet, Int> terms_;  // no zero coefficients stored
};

}  // namespace picspace
