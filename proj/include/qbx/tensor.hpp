#pragma once

#include <algorithm>
#include <map>

#include "qbx/scalar.hpp"
#include "qbx/word.hpp"

namespace qbx {

// A homogeneous linear combination of words of one fixed degree.  Terms are
// kept in a map ordered by the canonical word order, so begin() is always
// the least word: that term is the pivot in elimination and the leading
// witness in reports.  Zero coefficients are never stored.
class Tensor {
  public:
    Tensor() : degree_(0) {}
    explicit Tensor(int degree) : degree_(degree) {}

    static Tensor monomial(const Word& w, const Scalar& c) {
        Tensor t(w.size());
        t.add(w, c);
        return t;
    }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return (int)terms_.size(); }

    void add(const Word& w, const Scalar& c) {
        if (w.size() != degree_) throw input_error("mixed degrees in tensor");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar(0) : it->second;
    }
    bool has(const Word& w) const { return terms_.count(w) != 0; }

    // least word present; tensor must be nonzero
    const Word& leading_word() const {
        if (terms_.empty()) throw internal_error("leading_word of zero tensor");
        return terms_.begin()->first;
    }
    const Scalar& leading_coeff() const { return terms_.begin()->second; }

    void scale(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return;
        }
        for (auto& [w, s] : terms_) s *= c;
    }

    // *this += c * other
    void axpy(const Scalar& c, const Tensor& other) {
        if (c.is_zero()) return;
        for (const auto& [w, s] : other.terms_) add(w, c * s);
    }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str() + "*" + w.str(names);
        }
        return s;
    }
    std::string str() const {
        std::vector<std::string> names;
        int n = 0;
        for (const auto& [w, c] : terms_)
            for (int i = 0; i < w.size(); ++i) n = std::max(n, w.at(i) + 1);
        for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
        return str(names);
    }

  private:
    int degree_;
    std::map<Word, Scalar> terms_;
};

} // namespace qbx
