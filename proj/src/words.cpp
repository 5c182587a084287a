#include "hecke/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hecke {

int Letter::min_strands() const {
    switch (kind) {
        case LetterKind::T: return 1;
        case LetterKind::U: return 2;
        case LetterKind::G:
        case LetterKind::Ginv:
        case LetterKind::Tprime: return index + 1;
    }
    return 0;
}

std::string Letter::token() const {
    switch (kind) {
        case LetterKind::T: return "t";
        case LetterKind::U: return "u";
        case LetterKind::G: return "g" + std::to_string(index);
        case LetterKind::Ginv: return "G" + std::to_string(index);
        case LetterKind::Tprime: return "t'" + std::to_string(index);
    }
    return "?";
}

HeckeWord::HeckeWord(std::vector<Letter> letters, int ambient_n) : letters_(std::move(letters)), ambient_n_(ambient_n) {
    if (ambient_n < 0) throw Error("negative ambient size");
    for (const auto& l : letters_) {
        const bool g_like = l.kind == LetterKind::G || l.kind == LetterKind::Ginv;
        if ((g_like && l.index < 1) || (l.kind == LetterKind::Tprime && l.index < 0))
            throw Error("letter " + l.token() + " has an invalid index");
        if (l.min_strands() > ambient_n)
            throw Error("letter " + l.token() + " does not fit in H_" + std::to_string(ambient_n));
    }
}

HeckeWord HeckeWord::operator*(const HeckeWord& other) const {
    std::vector<Letter> letters = letters_;
    letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
    return HeckeWord(std::move(letters), std::max(ambient_n_, other.ambient_n_));
}

std::string HeckeWord::to_string() const {
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty()) s += ' ';
        s += l.token();
    }
    return s;
}

void HeckeElement::add(const HeckeWord& w, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

int HeckeElement::ambient_n() const {
    int n = 0;
    for (const auto& [w, c] : terms_) n = std::max(n, w.ambient_n());
    return n;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

HeckeElement HeckeElement::operator+(const HeckeElement& other) const {
    HeckeElement out = *this;
    return out += other;
}

HeckeElement HeckeElement::operator-(const HeckeElement& other) const {
    HeckeElement out = *this;
    for (const auto& [w, c] : other.terms_) out.add(w, -c);
    return out;
}

HeckeElement HeckeElement::operator*(const HeckeElement& other) const {
    HeckeElement out;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_) out.add(a * b, ca * cb);
    return out;
}

HeckeElement operator*(const Scalar& s, const HeckeElement& e) {
    HeckeElement out;
    for (const auto& [w, c] : e.terms_) out.add(w, s * c);
    return out;
}

HeckeWord parse_word(std::string_view text, int ambient_n) {
    std::istringstream in{std::string(text)};
    std::vector<Letter> letters;
    std::string tok;
    auto parse_index = [&](std::string_view digits) -> int {
        if (digits.empty() || digits.size() > 6 ||
            !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw Error("cannot parse word token '" + tok + "'");
        return std::stoi(std::string(digits));
    };
    while (in >> tok) {
        Letter l;
        if (tok == "t") {
            l = Letter::t();
        } else if (tok == "u") {
            l = Letter::u();
        } else if (tok.rfind("t'", 0) == 0) {
            l = Letter::t_prime(parse_index(std::string_view(tok).substr(2)));
        } else if (tok[0] == 'g') {
            l = Letter::g(parse_index(std::string_view(tok).substr(1)));
        } else if (tok[0] == 'G') {
            l = Letter::g_inv(parse_index(std::string_view(tok).substr(1)));
        } else {
            throw Error("cannot parse word token '" + tok + "'");
        }
        if ((l.kind == LetterKind::G || l.kind == LetterKind::Ginv) && l.index < 1)
            throw Error("generator index must be >= 1 in token '" + tok + "'");
        if (l.min_strands() > ambient_n)
            throw Error("token '" + tok + "' does not fit in H_" + std::to_string(ambient_n));
        letters.push_back(l);
    }
    return HeckeWord(std::move(letters), ambient_n);
}

namespace {

HeckeElement plain(std::vector<Letter> letters, int n) { return HeckeElement(HeckeWord(std::move(letters), n)); }

HeckeElement expand_letter(const Letter& l, int n, const Scalar& q) {
    switch (l.kind) {
        case LetterKind::T:
        case LetterKind::G: return plain({l}, n);
        case LetterKind::Ginv: {
            // g^-1 = q^-1 g + (q^-1 - 1)
            const Scalar qi = 1 / q;
            return qi * plain({Letter::g(l.index)}, n) + (qi - 1) * HeckeElement::identity(n);
        }
        case LetterKind::U: return plain({Letter::t(), Letter::g(1), Letter::t()}, n);
        case LetterKind::Tprime: {
            HeckeElement out = HeckeElement::identity(n);
            for (int k = l.index; k >= 1; --k) out = out * plain({Letter::g(k)}, n);
            out = out * plain({Letter::t()}, n);
            for (int k = 1; k <= l.index; ++k) out = out * expand_letter(Letter::g_inv(k), n, q);
            return out;
        }
    }
    return {};
}

}  // namespace

HeckeElement expand_word(const HeckeWord& word, const Scalar& q) {
    const int n = word.ambient_n();
    HeckeElement out = HeckeElement::identity(n);
    for (const auto& l : word.letters()) out = out * expand_letter(l, n, q);
    return out;
}

HeckeElement expand(const HeckeElement& element, const Scalar& q) {
    HeckeElement out;
    for (const auto& [w, c] : element.terms()) out += c * expand_word(w, q);
    return out;
}

HeckeElement jucys_murphy(int i, int ambient_n, const Scalar& q) {
    std::vector<Letter> letters;
    for (int k = i; k >= 1; --k) letters.push_back(Letter::g(k));
    letters.push_back(Letter::t());
    for (int k = 1; k <= i; ++k) letters.push_back(Letter::g(k));
    return power(q, -i) * HeckeElement(HeckeWord(std::move(letters), ambient_n));
}

std::vector<HeckeWord> coset_representatives(int n) {
    if (n < 1) throw Error("coset representatives need n >= 1");
    std::vector<HeckeWord> out;
    out.emplace_back(std::vector<Letter>{}, n);
    out.emplace_back(std::vector<Letter>{Letter::t_prime(n - 1)}, n);
    for (int k = 1; k <= n - 1; ++k) {
        std::vector<Letter> descending;
        for (int j = n - 1; j >= n - k; --j) descending.push_back(Letter::g(j));
        out.emplace_back(descending, n);
        descending.push_back(Letter::t_prime(n - k - 1));
        out.emplace_back(std::move(descending), n);
    }
    return out;
}

std::vector<HeckeWord> double_coset_representatives(int n) {
    if (n < 1) throw Error("double coset representatives need n >= 1");
    if (n == 1) return {HeckeWord({}, 1), HeckeWord({Letter::t()}, 1)};
    return {HeckeWord({}, n), HeckeWord({Letter::g(n - 1)}, n), HeckeWord({Letter::t_prime(n - 1)}, n)};
}

HeckeWord random_word(int n, std::size_t length, std::mt19937_64& rng, const WordAlphabet& alphabet) {
    std::vector<Letter> pool;
    if (n >= 1 && alphabet.t) pool.push_back(Letter::t());
    if (n >= 2 && alphabet.u) pool.push_back(Letter::u());
    for (int i = 1; i < n; ++i) {
        if (alphabet.g) pool.push_back(Letter::g(i));
        if (alphabet.g_inv) pool.push_back(Letter::g_inv(i));
    }
    if (alphabet.t_prime)
        for (int i = 0; i < n; ++i) pool.push_back(Letter::t_prime(i));
    std::vector<Letter> letters;
    if (!pool.empty())
        for (std::size_t k = 0; k < length; ++k) letters.push_back(pool[rng() % pool.size()]);
    return HeckeWord(std::move(letters), n);
}

}  // namespace hecke
