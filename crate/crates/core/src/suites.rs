//! Named verification suites. Each suite checks one family of identities
//! exhaustively (or by seeded sampling, see [`Scope`]) for a fixed `n` and
//! returns a [`Report`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::compositions::{compositions_of, partition_refines, Composition, Subset};
use crate::error::{Error, Result};
use crate::filtration::{
    lrm_basis, verify_anagram_invariance, verify_bimodule, verify_block_scalar, verify_eigenvalues,
    verify_filtration_equality, verify_refinement_inclusion, verify_scalar_action,
    verify_sigma_inclusion, Scope,
};
use crate::free_algebra::{dynkin_block_product, v_alpha, vb_rhs, FreeAlgebraElement, Word};
use crate::group_algebra::{b_element, b_product_mackey, b_sum, GroupAlgebraElement};
use crate::permutations::{all_permutations, all_permutations_unguarded, Permutation};
use crate::rational::Rational;
use crate::report::{Case, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Mackey,
    Vb,
    Wuv,
    Wu2,
    Basis,
    Filtration,
    ScalarAction,
    Bimodule,
    Anagram,
    Inclusion,
    SigmaInclusion,
    All,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Mackey,
        Suite::Vb,
        Suite::Wuv,
        Suite::Wu2,
        Suite::Basis,
        Suite::Filtration,
        Suite::ScalarAction,
        Suite::Bimodule,
        Suite::Anagram,
        Suite::Inclusion,
        Suite::SigmaInclusion,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Mackey => "mackey",
            Suite::Vb => "vb",
            Suite::Wuv => "wuv",
            Suite::Wu2 => "wu2",
            Suite::Basis => "basis",
            Suite::Filtration => "filtration",
            Suite::ScalarAction => "scalar-action",
            Suite::Bimodule => "bimodule",
            Suite::Anagram => "anagram",
            Suite::Inclusion => "inclusion",
            Suite::SigmaInclusion => "sigma-inclusion",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Runs a suite; `All` expands to every other suite in declaration order.
pub fn run_suite(suite: Suite, n: usize, scope: Scope) -> Result<Vec<Report>> {
    let reports = match suite {
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::ALL.into_iter().filter(|s| *s != Suite::All) {
                out.extend(run_suite(s, n, scope)?);
            }
            out
        }
        Suite::Mackey => vec![verify_mackey(n)?],
        Suite::Vb => vec![verify_vb(n)?],
        Suite::Wuv => vec![verify_wuv(n)?],
        Suite::Wu2 => vec![verify_wu2(n)?],
        Suite::Basis => vec![verify_basis(n)?],
        Suite::Filtration => vec![verify_filtration_equality(n)?],
        Suite::ScalarAction => vec![
            verify_scalar_action(n, scope)?,
            verify_block_scalar(n)?,
            verify_eigenvalues(n, 20, 0x5167_a000 + n as u64)?,
        ],
        Suite::Bimodule => vec![verify_bimodule(n, scope)?],
        Suite::Anagram => vec![verify_anagram_invariance(n)?],
        Suite::Inclusion => vec![verify_refinement_inclusion(n)?],
        Suite::SigmaInclusion => vec![verify_sigma_inclusion(n)?],
    };
    Ok(reports)
}

fn comp_pairs(n: usize) -> Vec<(Composition, Composition)> {
    let comps = compositions_of(n);
    comps
        .iter()
        .flat_map(|a| comps.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

/// The Mackey multiset expands to the convolution `B_α B_β`.
pub fn verify_mackey(n: usize) -> Result<Report> {
    let cases = comp_pairs(n)
        .par_iter()
        .map(|(alpha, beta)| -> Result<Case> {
            let lhs = b_element(alpha).convolve(&b_element(beta))?;
            let rhs = b_sum(n, &b_product_mackey(alpha, beta)?)?;
            let wit = (lhs != rhs).then(|| format!("B{alpha}·B{beta} = {lhs}\nMackey sum = {rhs}"));
            Ok(Case::from_result(format!("B{alpha}·B{beta}"), 1, wit))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new("mackey", n, cases))
}

/// Permutations `χ ∈ S_p` with `β_{χ(i)} = γ_i`.
fn admissible_chis(beta: &Composition, gamma: &Composition) -> Vec<Permutation> {
    if beta.len() != gamma.len() {
        return Vec::new();
    }
    all_permutations_unguarded(beta.len())
        .filter(|chi| {
            (1..=beta.len()).all(|i| beta.parts()[chi.apply(i) - 1] == gamma.parts()[i - 1])
        })
        .collect()
}

fn chi_product(beta: &Composition, chi: &Permutation) -> FreeAlgebraElement {
    dynkin_block_product(beta, &chi.one_line())
}

/// Words of `𝐕_β` use exactly the letters of each block in the block's slots.
fn v_alpha_letters_ok(beta: &Composition, v: &FreeAlgebraElement) -> bool {
    let blocks = beta.blocks();
    v.terms().all(|(w, _)| {
        let letters = w.letters();
        letters.len() == beta.weight()
            && blocks.iter().all(|b| {
                let mut seen: Vec<usize> = b.clone().map(|i| letters[i - 1]).collect();
                seen.sort_unstable();
                seen.into_iter().eq(b.clone())
            })
    })
}

/// `𝐕_β 𝐁_γ` against the ordered set partition formula, the vanishing
/// criterion and the equal-length formula.
pub fn verify_vb(n: usize) -> Result<Report> {
    let mut cases: Vec<Case> = compositions_of(n)
        .par_iter()
        .map(|beta| {
            let v = v_alpha(beta);
            let wit = (!v_alpha_letters_ok(beta, &v)).then(|| format!("V{beta} = {v}"));
            Case::from_result(format!("letters of V{beta}"), v.len() as u64, wit)
        })
        .collect();
    let pair_cases = comp_pairs(n)
        .par_iter()
        .map(|(beta, gamma)| -> Result<Case> {
            let label = format!("V{beta}·B{gamma}");
            let lhs = v_alpha(beta).right_action_by_algebra(&b_element(gamma))?;
            let rhs = vb_rhs(beta, gamma)?;
            if lhs != rhs {
                return Ok(Case::fail(
                    label,
                    1,
                    format!("direct = {lhs}\nformula = {rhs}"),
                ));
            }
            let refines =
                partition_refines(&beta.underlying_partition(), &gamma.underlying_partition())?;
            if !refines && !lhs.is_zero() {
                return Ok(Case::fail(label, 2, format!("expected 0, got {lhs}")));
            }
            if beta.len() == gamma.len() {
                let mut eq = FreeAlgebraElement::zero(n);
                for chi in admissible_chis(beta, gamma) {
                    eq = eq.add(&chi_product(beta, &chi))?;
                }
                if eq != lhs {
                    return Ok(Case::fail(
                        label,
                        3,
                        format!("direct = {lhs}\nequal-length sum = {eq}"),
                    ));
                }
            }
            Ok(Case::pass(label, 3))
        })
        .collect::<Result<Vec<_>>>()?;
    cases.extend(pair_cases);
    Ok(Report::new("vb", n, cases))
}

fn perm_word(v: &Permutation) -> Word {
    Word::new(v.one_line()).expect("permutation letters are valid")
}

/// If `v̲` occurs in `V^{Set(β)_{χ(1)}} ⋯ V^{Set(β)_{χ(p)}}` and `vu = w`, then
/// `χ = id`, `v = id` and `γ = β`, where `β = cLRM′(w)`, `γ = cLRM′(u)` are anagrams.
pub fn verify_wuv(n: usize) -> Result<Report> {
    let perms: Vec<Permutation> = all_permutations(n)?.collect();
    let mut products: HashMap<(Composition, Permutation), FreeAlgebraElement> = HashMap::new();
    let mut chis: HashMap<(Composition, Composition), Vec<Permutation>> = HashMap::new();
    for w in &perms {
        for u in &perms {
            let (beta, gamma) = (w.clrm_prime(), u.clrm_prime());
            if !beta.is_anagram_of(&gamma) {
                continue;
            }
            let list = chis
                .entry((beta.clone(), gamma.clone()))
                .or_insert_with(|| admissible_chis(&beta, &gamma));
            for chi in list.iter() {
                products
                    .entry((beta.clone(), chi.clone()))
                    .or_insert_with(|| chi_product(&beta, chi));
            }
        }
    }
    let cases = perms
        .par_iter()
        .map(|w| {
            let beta = w.clrm_prime();
            let mut checks = 0;
            for u in &perms {
                let gamma = u.clrm_prime();
                let Some(list) = chis.get(&(beta.clone(), gamma.clone())) else {
                    continue;
                };
                let v = w.compose(&u.inverse()).expect("same size");
                let word = perm_word(&v);
                for chi in list {
                    checks += 1;
                    let occurs = !products[&(beta.clone(), chi.clone())]
                        .coefficient(&word)
                        .is_zero();
                    if occurs && !(chi.is_identity() && v.is_identity() && gamma == beta) {
                        let wit = format!(
                            "w = {w}, u = {u}, χ = {chi}, v = {v}\nβ = {beta}, γ = {gamma}"
                        );
                        return Case::fail(format!("w = {w}"), checks, wit);
                    }
                }
            }
            Case::pass(format!("w = {w}"), checks)
        })
        .collect();
    Ok(Report::new("wuv", n, cases))
}

/// `[w̲](𝐕_β 𝐁_β w) = 1` with `β = cLRM′(w)`, and `[w̲](𝐕_β 𝐁_γ u) = 0`
/// for `u ≠ w`, `γ = cLRM′(u)` unless `β̃ ≺_π γ̃`.
pub fn verify_wu2(n: usize) -> Result<Report> {
    let perms: Vec<Permutation> = all_permutations(n)?.collect();
    let mut b_cache: HashMap<Composition, GroupAlgebraElement> = HashMap::new();
    let mut v_cache: HashMap<Composition, FreeAlgebraElement> = HashMap::new();
    for w in &perms {
        let c = w.clrm_prime();
        b_cache.entry(c.clone()).or_insert_with(|| b_element(&c));
        v_cache.entry(c.clone()).or_insert_with(|| v_alpha(&c));
    }
    let cases = perms
        .par_iter()
        .map(|w| -> Result<Case> {
            let beta = w.clrm_prime();
            let bp = beta.underlying_partition();
            let word = perm_word(w);
            let vb = &v_cache[&beta];
            let label = format!("w = {w}");
            let own = vb
                .right_action_by_algebra(&b_cache[&beta].right_translate(w)?)?
                .coefficient(&word);
            if !own.is_one() {
                return Ok(Case::fail(
                    label,
                    1,
                    format!("[w](V{beta}·B{beta}·w) = {own}"),
                ));
            }
            let mut checks = 1;
            for u in &perms {
                if u == w {
                    continue;
                }
                let gamma = u.clrm_prime();
                let gp = gamma.underlying_partition();
                if bp != gp && partition_refines(&bp, &gp)? {
                    continue;
                }
                checks += 1;
                let coeff = vb
                    .right_action_by_algebra(&b_cache[&gamma].right_translate(u)?)?
                    .coefficient(&word);
                if !coeff.is_zero() {
                    let wit = format!("u = {u}, γ = {gamma}\n[w](V{beta}·B{gamma}·u) = {coeff}");
                    return Ok(Case::fail(label, checks, wit));
                }
            }
            Ok(Case::pass(label, checks))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new("wu2", n, cases))
}

/// The LRM basis: leading terms, unitriangularity, the defining product,
/// the inverse relation `LRM(w) = w(LRM(w⁻¹))` and the triangularity lemma
/// `Des(u) ⊆ LRM′(w) ⟹ uw ≤_lex w`.
pub fn verify_basis(n: usize) -> Result<Report> {
    let basis = lrm_basis(n)?;
    let perms: Vec<Permutation> = basis.elements().iter().map(|e| e.index.clone()).collect();
    let mut cases = vec![Case::from_result(
        "unitriangular certificate",
        perms.len() as u64,
        (!basis.certificate()).then(|| "certificate rejected the family".to_string()),
    )];
    let per_w = basis
        .elements()
        .par_iter()
        .map(|e| -> Result<Case> {
            let w = &e.index;
            let label = format!("β_{w}");
            if e.value.coefficient(w) != Rational::one() || e.value.support().any(|u| u > w) {
                return Ok(Case::fail(label, 1, format!("β_w = {}", e.value)));
            }
            let direct =
                b_element(&w.clrm_prime()).convolve(&GroupAlgebraElement::basis(w.clone()))?;
            if direct != e.value {
                return Ok(Case::fail(
                    label,
                    2,
                    format!("stored {}\nconvolution {direct}", e.value),
                ));
            }
            let image = Subset::new(w.inverse().lrm().iter().map(|i| w.apply(i)).collect())?;
            if image != w.lrm() {
                return Ok(Case::fail(
                    label,
                    3,
                    format!("LRM(w) = {}, w(LRM(w⁻¹)) = {image}", w.lrm()),
                ));
            }
            let allowed = w.lrm_prime();
            let mut checks = 3;
            for u in &perms {
                if !u.descent_set().is_subset_of(&allowed) {
                    continue;
                }
                checks += 1;
                let uw = u.compose(w)?;
                if uw > *w || (uw == *w) != u.is_identity() {
                    return Ok(Case::fail(label, checks, format!("u = {u}, uw = {uw}")));
                }
            }
            Ok(Case::pass(label, checks))
        })
        .collect::<Result<Vec<_>>>()?;
    cases.extend(per_w);
    Ok(Report::new("basis", n, cases))
}
