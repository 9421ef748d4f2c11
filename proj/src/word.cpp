#include "qbx/word.hpp"

namespace qbx {

std::string Word::str(const std::vector<std::string>& names) const {
    if (empty()) return "1";
    std::string s;
    for (int i = 0; i < size(); ++i) s += names[at(i)];
    return s;
}

std::string Word::str() const {
    if (empty()) return "1";
    std::string s;
    for (int i = 0; i < size(); ++i) s += "x" + std::to_string(at(i) + 1);
    return s;
}

Enumeration Enumeration::identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return from_order(v);
}

Enumeration Enumeration::from_order(const std::vector<int>& order) {
    Enumeration e;
    e.order_ = order;
    e.rank_.assign(order.size(), -1);
    for (int r = 0; r < (int)order.size(); ++r) {
        int g = order[r];
        if (g < 0 || g >= (int)order.size() || e.rank_[g] != -1)
            throw input_error("enumeration is not a permutation");
        e.rank_[g] = r;
    }
    return e;
}

bool Enumeration::is_identity() const {
    for (int r = 0; r < size(); ++r)
        if (order_[r] != r) return false;
    return true;
}

std::string Enumeration::str(const std::vector<std::string>& names) const {
    std::string s;
    for (int r = 0; r < size(); ++r) {
        if (r) s += " < ";
        s += names[order_[r]];
    }
    return s;
}

int compare_deglex(const Word& a, const Word& b, const Enumeration& e) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (int i = 0; i < a.size(); ++i) {
        int ra = e.rank(a.at(i)), rb = e.rank(b.at(i));
        if (ra != rb) return ra < rb ? -1 : 1;
    }
    return 0;
}

} // namespace qbx
