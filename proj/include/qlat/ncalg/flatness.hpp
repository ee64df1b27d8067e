#pragma once

#include "qlat/ncalg/ncpoly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qlat::nc {

enum class Confluence { Confluent, NonConfluent, NonTerminating, Skipped };
std::string to_string(Confluence c);

struct DegreeReport {
    int degree = 0;
    std::size_t normal_monomials = 0; // normal words of this length
    std::size_t independent = 0;      // normal_monomials minus relations found here
    std::vector<NCPoly> relations;    // leading monomial has this degree
    Confluence confluence = Confluence::Skipped;
};

struct FlatnessReport {
    std::string presentation;
    int max_degree = 0;
    // "exact"          rule coefficients are q-free, so the sampled algebra is exact
    // "q-independent"  identical relations at two generic sample points
    // "sampled"        relations differ between the sample points (coefficients
    //                  reported at the first one)
    std::string certification;
    std::vector<DegreeReport> degrees;

    bool flat() const;
    std::size_t relation_count() const;
};

struct FlatnessOptions {
    // Sample points for s = q^(1/2); rational so the elimination is exact.
    GaussRat sample_s = GaussRat::ratio(7, 5);
    GaussRat check_s = GaussRat::ratio(13, 11);
    std::size_t max_words = 200'000;
    bool brute_force = true;
};

// Relations among normal monomials implied by the rules up to `max_degree`.
//
// Every rewrite step w -> w' contributes the vector w - w' (one per word and
// reducible position). Eliminating the non-normal words leaves exactly the
// linear dependences among normal monomials, reported in reduced echelon form
// with the leading monomial normalized to 1. With `brute_force` each word is
// additionally reduced under every rewrite order to classify confluence.
// max_degree must lie in [1, 8]; exceeding max_words throws Diverged.
FlatnessReport flatness_scan(const PresentationPtr &p, int max_degree,
                             const FlatnessOptions &options = {});

// All normal forms reachable from `w` under every choice of rewrite position.
// Throws Diverged on a rewrite cycle or when more than `limit` distinct forms
// accumulate.
std::vector<WordSum> reachable_normal_forms(const Presentation &p, const Word &w,
                                            std::size_t limit = 64);

} // namespace qlat::nc
