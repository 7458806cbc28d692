#pragma once

/**
 * @file presentation.hpp
 * @brief Group presentations of the pretzel knot group and of the quotient
 *        through which every traceless-meridian representation factors.
 *
 * Words are sequences of signed 1-based generator indices: +g is the
 * generator s_g, -g its inverse. The knot-group relators come from the
 * elementary tangle words; the quotient presentation is
 *   < s_1..s_n | s_1^4, s_i^2 s_1^-2, (s_i s_{i+1})^{p_i} (s_{i+1} s_{i+2})^{-p_{i+1}} >.
 */

#include <string>
#include <vector>

#include "knotrep/errors.hpp"
#include "knotrep/pretzel.hpp"

namespace knotrep {

using Word = std::vector<int>;

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
};

enum class PresentationKind { KnotGroup, QuotientGroup };

inline Word inverse_word(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r.push_back(-*it);
    return r;
}

inline void append_word(Word& dst, const Word& w) { dst.insert(dst.end(), w.begin(), w.end()); }

inline Word word_power(const Word& w, std::int64_t e) {
    Word base = e < 0 ? inverse_word(w) : w;
    std::int64_t n = e < 0 ? -e : e;
    Word r;
    r.reserve(base.size() * static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        append_word(r, base);
    return r;
}

// Tangle words for strand parameter p, with s the meridian at the top-left
// of the tangle and t the inverse of the next strand's meridian. Returns
// the bottom meridians (u, v).
struct TangleWords {
    Word u, v;
};

inline TangleWords tangle_words(std::int64_t p, int s_gen, int t_gen_inv) {
    const Word s{s_gen};
    const Word t{-t_gen_inv}; // t = s_{i+1}^{-1}
    const Word ts = [&] {
        Word w = t;
        append_word(w, s);
        return w;
    }();
    auto conj = [&](std::int64_t pw, const Word& core) {
        Word w = word_power(ts, -pw);
        append_word(w, core);
        append_word(w, word_power(ts, pw));
        return w;
    };
    auto sts = [&] { // s^-1 t s
        Word w = inverse_word(s);
        append_word(w, t);
        append_word(w, s);
        return w;
    };
    auto tst = [&] { // t s t^-1
        Word w = t;
        append_word(w, s);
        append_word(w, inverse_word(t));
        return w;
    };
    TangleWords tw;
    if (p > 0 && p % 2 != 0) { // p = 2k+1
        const std::int64_t k = (p - 1) / 2;
        tw.u = conj(k, sts());
        tw.v = conj(k, s);
    } else if (p > 0) { // p = 2k
        const std::int64_t k = p / 2;
        tw.u = conj(k, s);
        tw.v = conj(k - 1, sts());
    } else if (p % 2 != 0) { // p = -(2k+1)
        const std::int64_t k = (-p - 1) / 2;
        tw.u = conj(-k, t);
        tw.v = conj(-k, tst());
    } else { // p = -(2k)
        const std::int64_t k = -p / 2;
        tw.u = conj(-(k - 1), tst());
        tw.v = conj(-k, t);
    }
    return tw;
}

inline Presentation emit_presentation(const PretzelKnot& k, PresentationKind kind) {
    const std::size_t n = k.strands();
    Presentation pres;
    for (std::size_t i = 1; i <= n; ++i)
        pres.generators.push_back("s" + std::to_string(i));

    if (kind == PresentationKind::QuotientGroup) {
        pres.relators.push_back(word_power(Word{1}, 4)); // s_1^4
        for (std::size_t i = 2; i <= n; ++i) {           // s_1^2 s_i^-2
            Word w = word_power(Word{1}, 2);
            append_word(w, word_power(Word{static_cast<int>(i)}, -2));
            pres.relators.push_back(std::move(w));
        }
        for (std::size_t i = 0; i + 1 < n; ++i) { // chain equalities
            const int a = static_cast<int>(i + 1);
            const int b = static_cast<int>((i + 1) % n + 1);
            const int c = static_cast<int>((i + 2) % n + 1);
            Word w = word_power(Word{a, b}, k.p()[i]);
            append_word(w, word_power(Word{b, c}, -k.p()[i + 1]));
            pres.relators.push_back(std::move(w));
        }
        return pres;
    }

    // Knot group: relators v_i u_{i+1}, with one (redundant) relation omitted.
    std::vector<TangleWords> tw(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int s_gen = static_cast<int>(i + 1);
        const int t_gen = static_cast<int>((i + 1) % n + 1);
        tw[i] = tangle_words(k.p()[i], s_gen, t_gen);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Word w = tw[i].v;
        append_word(w, tw[(i + 1) % n].u);
        pres.relators.push_back(std::move(w));
    }
    return pres;
}

inline std::string letter_str(int letter) {
    std::string s = "s" + std::to_string(letter < 0 ? -letter : letter);
    if (letter < 0)
        s += "^-1";
    return s;
}

inline std::string word_str(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += " ";
        s += letter_str(w[i]);
    }
    return s;
}

// One relator per line.
inline std::string presentation_text(const Presentation& p) {
    std::string s;
    for (const Word& w : p.relators) {
        s += word_str(w);
        s += "\n";
    }
    return s;
}

// Exponent-sum vectors of the relators (rows), for homology checks.
inline std::vector<std::vector<std::int64_t>> abelianized(const Presentation& p) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const Word& w : p.relators) {
        std::vector<std::int64_t> row(p.generators.size(), 0);
        for (int letter : w) {
            const int g = letter < 0 ? -letter : letter;
            if (g < 1 || static_cast<std::size_t>(g) > p.generators.size())
                throw UnknownGenerator("relator references undeclared generator");
            row[static_cast<std::size_t>(g - 1)] += letter < 0 ? -1 : 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace knotrep
