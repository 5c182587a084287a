#pragma once

#include "hecke/scalars.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

/// Generators of H_n(q,Q) and the derived letters used in words.
/// Tprime(i) = g_i ... g_1 t g_1^-1 ... g_i^-1 and U = t g_1 t.
enum class LetterKind : int { T = 0, G = 1, Ginv = 2, Tprime = 3, U = 4 };

struct Letter {
    LetterKind kind = LetterKind::T;
    int index = 0;

    static Letter t() { return {LetterKind::T, 0}; }
    static Letter g(int i) { return {LetterKind::G, i}; }
    static Letter g_inv(int i) { return {LetterKind::Ginv, i}; }
    static Letter t_prime(int i) { return {LetterKind::Tprime, i}; }
    static Letter u() { return {LetterKind::U, 0}; }

    /// Smallest number of strands in which this letter makes sense.
    int min_strands() const;
    std::string token() const;

    auto operator<=>(const Letter& other) const = default;
};

/// A word in the letters, living in H_{ambient_n}.
class HeckeWord {
public:
    HeckeWord() = default;
    HeckeWord(std::vector<Letter> letters, int ambient_n);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    int ambient_n() const noexcept { return ambient_n_; }
    bool empty() const noexcept { return letters_.empty(); }
    std::size_t length() const noexcept { return letters_.size(); }

    HeckeWord operator*(const HeckeWord& other) const;
    std::string to_string() const;

    auto operator<=>(const HeckeWord& other) const = default;

private:
    std::vector<Letter> letters_;
    int ambient_n_ = 0;
};

/// Finite linear combination of words; zero coefficients are never stored.
class HeckeElement {
public:
    HeckeElement() = default;
    HeckeElement(const HeckeWord& w) { add(w, Scalar(1)); }  // NOLINT(google-explicit-constructor)

    static HeckeElement identity(int ambient_n) { return HeckeElement(HeckeWord({}, ambient_n)); }

    void add(const HeckeWord& w, const Scalar& coeff);
    const std::map<HeckeWord, Scalar>& terms() const noexcept { return terms_; }
    int ambient_n() const;

    HeckeElement& operator+=(const HeckeElement& other);
    HeckeElement operator+(const HeckeElement& other) const;
    HeckeElement operator-(const HeckeElement& other) const;
    HeckeElement operator*(const HeckeElement& other) const;
    friend HeckeElement operator*(const Scalar& s, const HeckeElement& e);

    bool operator==(const HeckeElement& other) const { return terms_ == other.terms_; }

private:
    std::map<HeckeWord, Scalar> terms_;
};

/// Parses whitespace-separated tokens: t, g<i>, G<i> (inverse), t'<i>, u.
/// Throws Error naming the offending token.
HeckeWord parse_word(std::string_view text, int ambient_n);

/// Rewrites Ginv, Tprime and U letters into combinations of plain {T, G} words.
HeckeElement expand_word(const HeckeWord& word, const Scalar& q);
HeckeElement expand(const HeckeElement& element, const Scalar& q);

/// q^-i g_i ... g_1 t g_1 ... g_i, whose eigenvalue on v_T is Q q^c or -q^c
/// with c the content of entry i+1.
HeckeElement jucys_murphy(int i, int ambient_n, const Scalar& q);

/// Right coset representatives of H_{n-1} in H_n (2n words).
std::vector<HeckeWord> coset_representatives(int n);

/// Distinguished double coset representatives: {1, t} for n = 1,
/// {1, g_{n-1}, t'_{n-1}} otherwise.
std::vector<HeckeWord> double_coset_representatives(int n);

struct WordAlphabet {
    bool t = true;
    bool g = true;
    bool g_inv = true;
    bool t_prime = false;
    bool u = false;
};

/// Uniform random word in H_n with the given alphabet (t and t' letters are
/// skipped when n = 0; g letters when n < 2).
HeckeWord random_word(int n, std::size_t length, std::mt19937_64& rng, const WordAlphabet& alphabet = {});

}  // namespace hecke
