#pragma once

#include "qlat/ncalg/presentation.hpp"
#include "qlat/ncalg/rewrite.hpp"

#include <string>
#include <vector>

namespace qlat::nc {

// Normal-ordered noncommutative polynomial over a presentation.
//
// Every stored word is normal and no coefficient is zero. For a presentation
// without free pairs the words are exactly the ordered monomials, so a word is
// equivalent to its exponent vector.
class NCPoly {
  public:
    explicit NCPoly(PresentationPtr p);
    // Normalizes `terms` with the leftmost rewrite strategy.
    NCPoly(PresentationPtr p, const WordSum &terms, std::size_t budget = kDefaultStepBudget);

    static NCPoly scalar(PresentationPtr p, const QExact &c);
    static NCPoly generator(PresentationPtr p, const std::string &name);
    static NCPoly word(PresentationPtr p, const Word &w, const QExact &c = QExact(1));

    const PresentationPtr &presentation() const noexcept { return pres_; }
    const WordSum &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t max_degree() const;
    std::vector<int> exponent_vector(const Word &w) const;

    NCPoly operator-() const;
    NCPoly &operator+=(const NCPoly &o);
    NCPoly &operator-=(const NCPoly &o);
    friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }
    friend NCPoly operator*(const NCPoly &a, const NCPoly &b);
    friend NCPoly operator*(const QExact &c, const NCPoly &a);
    NCPoly pow(unsigned e) const;
    friend bool operator==(const NCPoly &a, const NCPoly &b);

    // Monomials ordered by render_before, coefficients in the canonical scalar
    // text: "q*x*p - i".
    std::string to_string() const;

  private:
    void require_same(const NCPoly &o) const;
    PresentationPtr pres_;
    WordSum terms_;
};

// normal_form(lhs - rhs) == 0. Mismatched presentations throw InvalidArgument.
bool check_identity(const NCPoly &lhs, const NCPoly &rhs);

// Text of a single word: "x^2*y", "dx*dy".
std::string word_text(const Presentation &p, const Word &w);

// Sort key used for rendering: descending degree, pure powers before mixed
// monomials, descending exponent vector, descending word. The cubic relation of
// the counterexample plane renders as x^3 + y^3 + x^2*y + x*y^2.
bool render_before(const Presentation &p, const Word &a, const Word &b);

// Antilinear anti-automorphism fixed by generator images: reverses words,
// conjugates coefficients and substitutes images[g] for generator g.
NCPoly anti_involution(const NCPoly &a, const std::vector<NCPoly> &images);

} // namespace qlat::nc
