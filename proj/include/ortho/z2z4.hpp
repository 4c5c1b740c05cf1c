#pragma once

// Structure of the orthomorphism graph of Z2 x Z4.
//
// Every orthomorphism θ of Z2 x Z4 is pinned down by three elements: the single
// order-2 element x whose image also has order 2, θ(x), and the single order-4
// element a with θ(a) of order 4 that is not itself the image of such an
// element. In terms of a, x and θ(x), θ is one of four cycle templates, and
// its two graph neighbours are given by six partner templates. Functions here
// construct, recognise and cross-check those templates; a failed check throws
// VerificationFailure naming the statement that broke.

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>

#include "ortho/graph.hpp"
#include "ortho/orthomorphism.hpp"

namespace ortho::z2z4 {

enum class Form { I, II, III, IV };

std::string_view form_name(Form form);

struct CycleForm {
  Form form = Form::I;
  Element a = 0;        ///< order 4
  Element x = 0;        ///< order 2, the only element with o(x) = o(θ(x)) = 2
  Element theta_x = 0;  ///< θ(x), order 2

  bool operator==(const CycleForm&) const = default;
};

/// True when `g` has the element-order profile of Z2 x Z4 (1, 3 of order 2, 4 of order 4)
/// and is abelian.
bool is_z2xz4(const FiniteGroup& g);

/// Shared `Z2 x Z4` instance, index (u, v) = 4u + v.
GroupPtr make_group();

/// The (a, x, θ(x)) triple of an orthomorphism. Throws VerificationFailure("PROP1")
/// unless the order-2-to-order-2 class and A44 \ θ(A44) each hold exactly one element.
CycleForm parameters(const Orthomorphism& theta);

/// Permutation given by the template of `cf.form`. Throws std::invalid_argument
/// naming the violated side condition.
Orthomorphism construct_form(const GroupPtr& g, const CycleForm& cf);

/// Matches θ against all four templates by full image array. Throws
/// VerificationFailure("THM1") unless exactly one matches.
CycleForm classify_form(const Orthomorphism& theta);

/// |A44 ∩ A44'| for the order partitions of θ₁ and θ₂.
std::size_t a44_overlap(const Orthomorphism& t1, const Orthomorphism& t2);

/// |A44 ∩ A44'| = 0. Throws std::invalid_argument when θ₁ = θ₂.
bool intersection_adjacency(const Orthomorphism& t1, const Orthomorphism& t2);

/// Partner-table row 1..6: form I -> 1, IV -> 2, II -> 3 (x = a²) or 4 (θ(x) = a²),
/// III -> 5 (x = a²) or 6 (θ(x) = a²).
int table_row(const Orthomorphism& theta, const CycleForm& cf);

/// The two partners given by θ's table row. Throws VerificationFailure("TAB1-ROW<k>")
/// if either is not an orthomorphism orthogonal to θ, or if they coincide.
std::pair<Orthomorphism, Orthomorphism> predicted_partners(const Orthomorphism& theta);

/// α = (a, ax)(axθ(x), aθ(x)). Throws VerificationFailure("COR4-ALPHA") if α is not
/// an involutive automorphism.
GroupMap alpha_of(const Orthomorphism& theta);

/// (θ, ψ₁, θ^α, ψ₂) with (ψ₁, ψ₂) = predicted_partners(θ) and θ^α = αθα⁻¹.
/// Throws VerificationFailure("COR4-CYCLE") unless they induce the 4-cycle
/// θ–ψ₁–θ^α–ψ₂–θ.
std::array<Orthomorphism, 4> four_cycle_of(const Orthomorphism& theta);

}  // namespace ortho::z2z4
