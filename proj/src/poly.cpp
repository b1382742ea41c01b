#include "picspace/poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace picspace {

MultilinearPoly MultilinearPoly::constant(Int c) {
    MultilinearPoly p;
    if (c != 0) p.terms_[0] = std::move(c);
    return p;
}

MultilinearPoly MultilinearPoly::monomial(EdgeSet support, Int c) {
    MultilinearPoly p;
    if (c != 0) p.terms_[support] = std::move(c);
    return p;
}

int MultilinearPoly::degree() const {
    int d = 0;
    for (auto& [sup, c] : terms_) d = std::max(d, std::popcount(sup));
    return d;
}

Int MultilinearPoly::coeff(EdgeSet support) const {
    auto it = terms_.find(support);
    return it == terms_.end() ? Int(0) : it->second;
}

EdgeSet MultilinearPoly::variables() const {
    EdgeSet v = 0;
    for (auto& [sup, c] : terms_) v |= sup;
    return v;
}

MultilinearPoly MultilinearPoly::operator-() const {
    MultilinearPoly p;
    for (auto& [sup, c] : terms_) p.terms_[sup] = -c;
    return p;
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& o) const {
    MultilinearPoly p = *this;
    for (auto& [sup, c] : o.terms_) {
        Int& slot = p.terms_[sup];
        slot += c;
        if (slot == 0) p.terms_.erase(sup);
    }
    return p;
}

MultilinearPoly MultilinearPoly::operator-(const MultilinearPoly& o) const {
    return *this + (-o);
}

MultilinearPoly MultilinearPoly::operator*(const MultilinearPoly& o) const {
    MultilinearPoly p;
    for (auto& [sa, ca] : terms_)
        for (auto& [sb, cb] : o.terms_) {
            if (sa & sb)
                throw std::domain_error(
                    "product leaves the squarefree ring (shared variable)");
            Int& slot = p.terms_[sa | sb];
            slot += ca * cb;
            if (slot == 0) p.terms_.erase(sa | sb);
        }
    return p;
}

MultilinearPoly MultilinearPoly::sign_normalized() const {
    if (terms_.empty()) return *this;
    if (terms_.begin()->second < 0) return -*this;
    return *this;
}

std::string MultilinearPoly::pretty(const Graph& g) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [sup, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool need_coeff = a != 1 || sup == 0;
        if (need_coeff) out << a.str();
        bool first_var = !need_coeff;
        for (int e = 0; e < 64; ++e)
            if (sup & edge_bit(e)) {
                auto [u, v] = g.edge(e);
                if (!first_var) out << " ";
                first_var = false;
                out << "m_{" << g.vertex_id(u) << g.vertex_id(v) << "}";
            }
    }
    return out.str();
}

}  // namespace picspace
