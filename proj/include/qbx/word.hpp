#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qbx/error.hpp"

namespace qbx {

// A word over at most 32 generators, packed into one uint64: length in the
// top 4 bits, letter k (0-based, 5 bits each) at bits [59-5k, 55-5k].
// Unused slots are zero, so for words of equal length the raw integer
// compares lexicographically on letters; with the length field on top, raw
// comparison of bits() is exactly degree-lex under the ambient generator
// listing.  std::map<Word, ...> therefore iterates in canonical order.
class Word {
  public:
    static constexpr int kMaxLen = 12;
    static constexpr int kMaxGen = 31;

    Word() : bits_(0) {}
    Word(std::initializer_list<int> letters) : bits_(0) {
        for (int g : letters) *this = append(g);
    }

    static Word pair(int a, int b) { return Word{a, b}; }

    int size() const { return (int)(bits_ >> 60); }
    bool empty() const { return bits_ == 0; }

    int at(int i) const { return (int)((bits_ >> shift(i)) & 31u); }
    int operator[](int i) const { return at(i); }
    int front() const { return at(0); }
    int back() const { return at(size() - 1); }

    Word append(int g) const {
        int len = size();
        if (len >= kMaxLen) throw cap_error("word length cap (12) exceeded");
        if (g < 0 || g > kMaxGen) throw input_error("generator index out of range");
        Word w;
        w.bits_ = ((bits_ & kLetterMask) | ((std::uint64_t)(len + 1) << 60)) |
                  ((std::uint64_t)g << shift(len));
        return w;
    }

    friend Word operator+(const Word& a, const Word& b) {
        Word w = a;
        for (int i = 0; i < b.size(); ++i) w = w.append(b.at(i));
        return w;
    }

    Word subword(int pos, int len) const {
        Word w;
        for (int i = 0; i < len; ++i) w = w.append(at(pos + i));
        return w;
    }

    Word with_letter(int i, int g) const {
        Word w = *this;
        w.bits_ &= ~((std::uint64_t)31u << shift(i));
        w.bits_ |= (std::uint64_t)g << shift(i);
        return w;
    }

    // Replace the two letters at positions i, i+1.
    Word replace_pair(int i, int a, int b) const {
        return with_letter(i, a).with_letter(i + 1, b);
    }

    std::vector<int> letters() const {
        std::vector<int> v(size());
        for (int i = 0; i < size(); ++i) v[i] = at(i);
        return v;
    }

    // Index of this word among all words of its length over n generators,
    // reading letters as base-n digits (first letter most significant).
    std::uint64_t index(int n) const {
        std::uint64_t idx = 0;
        for (int i = 0; i < size(); ++i) idx = idx * n + at(i);
        return idx;
    }
    static Word from_index(std::uint64_t idx, int n, int len) {
        int digits[kMaxLen] = {};
        for (int i = len - 1; i >= 0; --i) {
            digits[i] = (int)(idx % n);
            idx /= n;
        }
        Word w;
        for (int i = 0; i < len; ++i) w = w.append(digits[i]);
        return w;
    }

    std::uint64_t bits() const { return bits_; }

    friend bool operator==(const Word& a, const Word& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const Word& a, const Word& b) { return a.bits_ != b.bits_; }
    // degree-lex under the ambient listing; see class comment
    friend bool operator<(const Word& a, const Word& b) { return a.bits_ < b.bits_; }
    friend bool operator>(const Word& a, const Word& b) { return b < a; }
    friend bool operator<=(const Word& a, const Word& b) { return !(b < a); }
    friend bool operator>=(const Word& a, const Word& b) { return !(a < b); }

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const; // default names x1, x2, ...

  private:
    static constexpr std::uint64_t kLetterMask = (1ull << 60) - 1;
    static int shift(int i) { return 55 - 5 * i; }
    std::uint64_t bits_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return std::hash<std::uint64_t>{}(w.bits()); }
};

// A total order on generators, stored as the list of generators from least
// to greatest.  identity(n) is the ambient listing x1 < x2 < ... < xn.
class Enumeration {
  public:
    Enumeration() = default;
    static Enumeration identity(int n);
    // order[r] = generator with rank r; must be a permutation of 0..n-1
    static Enumeration from_order(const std::vector<int>& order);

    int size() const { return (int)order_.size(); }
    int gen_at_rank(int r) const { return order_[r]; }
    int rank(int g) const { return rank_[g]; }
    const std::vector<int>& order() const { return order_; }

    bool is_identity() const;
    std::string str(const std::vector<std::string>& names) const;

    friend bool operator==(const Enumeration& a, const Enumeration& b) {
        return a.order_ == b.order_;
    }
    friend bool operator<(const Enumeration& a, const Enumeration& b) {
        return a.order_ < b.order_;
    }

  private:
    std::vector<int> order_;
    std::vector<int> rank_;
};

// -1 / 0 / +1 as a precedes / equals / follows b in degree-lex under e:
// shorter words first, ties broken by generator rank at the first
// differing position.
int compare_deglex(const Word& a, const Word& b, const Enumeration& e);

inline bool deglex_less(const Word& a, const Word& b, const Enumeration& e) {
    return compare_deglex(a, b, e) < 0;
}

} // namespace qbx
