//! Fixed-point combinatorics: the fixed points of the nilpotent variety,
//! Poincare polynomials of both Hessenberg varieties via inversion counts,
//! the height product formula, Weyl-type subsets, and the eta bijection.

use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lowerideal::LowerIdeal;
use crate::polyalg::Integer;
use crate::rootsystem::{RootSystem, WeylGroup};

/// Default cap on `|I|` for Weyl-type subset enumeration.
pub const DEFAULT_WEYL_TYPE_BOUND: usize = 24;

/// Elements `w` with `w^{-1}(Delta)` inside `(-I) + Phi+`; these index the
/// cells of the nilpotent Hessenberg variety.
pub fn nilpotent_fixed_points(rs: &RootSystem, wg: &WeylGroup, ideal: &LowerIdeal) -> Vec<usize> {
    (0..wg.len())
        .filter(|&w| {
            let winv = wg.inverse(w);
            rs.simple_indices().iter().all(|&s| {
                let (idx, neg) = wg.root_image(winv, s);
                !neg || ideal.contains(idx)
            })
        })
        .collect()
}

/// `sum s^{|N(w) cap I|}` over a set of Weyl elements.
fn inversion_distribution(wg: &WeylGroup, ideal: &LowerIdeal, elements: &[usize]) -> Vec<usize> {
    let mut coeffs = vec![0usize; ideal.len() + 1];
    for &w in elements {
        let k = (wg.element(w).inversion_mask() & ideal.mask()).count_ones() as usize;
        coeffs[k] += 1;
    }
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
    coeffs
}

/// Poincare polynomial of the nilpotent Hessenberg variety (coefficient of
/// `s^k` counts cells of complex dimension `k`), computed from the fixed
/// points and cross-checked against the height product formula; any
/// disagreement is a hard failure.
pub fn nilpotent_poincare(
    rs: &RootSystem,
    wg: &WeylGroup,
    ideal: &LowerIdeal,
) -> Result<Vec<usize>> {
    let fixed = nilpotent_fixed_points(rs, wg, ideal);
    let from_cells = inversion_distribution(wg, ideal, &fixed);
    let from_product = height_product_poincare(rs, ideal)?;
    if from_cells != from_product {
        return Err(Error::ConsistencyFailure(format!(
            "fixed-point sum {:?} differs from height product {:?}",
            from_cells, from_product
        )));
    }
    Ok(from_cells)
}

/// The product `prod_{alpha in I} (1 - q^{ht+1}) / (1 - q^{ht})`, which
/// must simplify to a polynomial with non-negative coefficients.
pub fn height_product_poincare(rs: &RootSystem, ideal: &LowerIdeal) -> Result<Vec<usize>> {
    let mut numer = vec![Integer::one()];
    let mut denom = vec![Integer::one()];
    for i in ideal.root_indices() {
        let h = rs.roots()[i].height;
        numer = unipoly_mul(&numer, &one_minus_power(h + 1));
        denom = unipoly_mul(&denom, &one_minus_power(h));
    }
    let quotient = unipoly_exact_div(&numer, &denom).ok_or_else(|| {
        Error::ConsistencyFailure("height product is not a polynomial".into())
    })?;
    quotient
        .iter()
        .map(|c| {
            if c.is_negative() {
                Err(Error::ConsistencyFailure(
                    "height product has a negative coefficient".into(),
                ))
            } else {
                Ok(usize::try_from(c.clone()).expect("desk-scale coefficient"))
            }
        })
        .collect()
}

/// Poincare polynomial of the semisimple Hessenberg variety: the inversion
/// distribution over the whole Weyl group.
pub fn semisimple_poincare(wg: &WeylGroup, ideal: &LowerIdeal) -> Vec<usize> {
    let all: Vec<usize> = (0..wg.len()).collect();
    inversion_distribution(wg, ideal, &all)
}

fn one_minus_power(k: usize) -> Vec<Integer> {
    let mut v = vec![Integer::zero(); k + 1];
    v[0] = Integer::one();
    v[k] = -Integer::one();
    v
}

fn unipoly_mul(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    out
}

/// Exact division of dense integer polynomials (ascending coefficients),
/// `None` when the remainder is nonzero.
fn unipoly_exact_div(numer: &[Integer], denom: &[Integer]) -> Option<Vec<Integer>> {
    let deg = |p: &[Integer]| p.iter().rposition(|c| !c.is_zero());
    let dn = deg(denom)?;
    let lead = denom[dn].clone();
    let mut rem: Vec<Integer> = numer.to_vec();
    let Some(mut dr) = deg(&rem) else {
        return Some(vec![Integer::zero()]);
    };
    if dr < dn {
        return None;
    }
    let mut quot = vec![Integer::zero(); dr - dn + 1];
    loop {
        let (q, r) = num_integer::div_rem(rem[dr].clone(), lead.clone());
        if !r.is_zero() {
            return None;
        }
        quot[dr - dn] = q.clone();
        for k in 0..=dn {
            let v = &rem[dr - dn + k] - &(&q * &denom[k]);
            rem[dr - dn + k] = v;
        }
        match deg(&rem) {
            None => return Some(quot),
            Some(d) if d < dn => return None,
            Some(d) => dr = d,
        }
    }
}

/// All Weyl-type subsets of the ideal, as masks over the global root
/// indices: subsets closed under root addition inside `I`, with complement
/// also closed. Enumerated by backtracking in height order, pruning as
/// soon as a closure constraint fails.
pub fn weyl_type_subsets(
    rs: &RootSystem,
    ideal: &LowerIdeal,
    max_size: usize,
) -> Result<Vec<u128>> {
    if ideal.len() > max_size {
        return Err(Error::BoundExceeded {
            what: "ideal size for Weyl-type enumeration",
            actual: ideal.len(),
            max: max_size,
        });
    }
    let mut members = ideal.root_indices();
    members.sort_by_key(|&i| (rs.roots()[i].height, i));

    // positions in `members` of the summand pairs of each member
    let coord_index: HashMap<Vec<u32>, usize> = members
        .iter()
        .enumerate()
        .map(|(pos, &i)| (rs.roots()[i].simple_coords.clone(), pos))
        .collect();
    let mut pairs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); members.len()];
    for (pa, &a) in members.iter().enumerate() {
        for (pb, &b) in members.iter().enumerate().skip(pa + 1) {
            let sum: Vec<u32> = rs.roots()[a]
                .simple_coords
                .iter()
                .zip(&rs.roots()[b].simple_coords)
                .map(|(x, y)| x + y)
                .collect();
            if let Some(&ps) = coord_index.get(&sum) {
                pairs[ps].push((pa, pb));
            }
        }
    }

    let mut out = Vec::new();
    let mut assignment = vec![false; members.len()];
    backtrack(&members, &pairs, 0, &mut assignment, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn backtrack(
    members: &[usize],
    pairs: &[Vec<(usize, usize)>],
    pos: usize,
    assignment: &mut Vec<bool>,
    out: &mut Vec<u128>,
) {
    if pos == members.len() {
        let mask = members
            .iter()
            .enumerate()
            .filter(|(p, _)| assignment[*p])
            .fold(0u128, |m, (_, &i)| m | 1u128 << i);
        out.push(mask);
        return;
    }
    'choice: for &take in &[true, false] {
        for &(a, b) in &pairs[pos] {
            // both summands in forces the sum in; both out forces it out
            if assignment[a] == assignment[b] && assignment[a] != take {
                continue 'choice;
            }
        }
        assignment[pos] = take;
        backtrack(members, pairs, pos + 1, assignment, out);
    }
    assignment[pos] = false;
}

/// Generating function `sum_Y s^{|Y|}` of a set of subset masks.
pub fn subset_generating_function(masks: &[u128]) -> Vec<usize> {
    let max = masks.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
    let mut coeffs = vec![0usize; max + 1];
    for m in masks {
        coeffs[m.count_ones() as usize] += 1;
    }
    coeffs
}

/// The eta map `w -> N(w) cap I` from nilpotent fixed points to Weyl-type
/// subsets: checks it is injective and surjective.
pub fn eta_bijection_check(
    rs: &RootSystem,
    wg: &WeylGroup,
    ideal: &LowerIdeal,
) -> Result<bool> {
    let fixed = nilpotent_fixed_points(rs, wg, ideal);
    let mut images = BTreeSet::new();
    for &w in &fixed {
        let mask = wg.element(w).inversion_mask() & ideal.mask();
        if !images.insert(mask) {
            return Ok(false);
        }
    }
    let subsets: BTreeSet<u128> = weyl_type_subsets(rs, ideal, DEFAULT_WEYL_TYPE_BOUND)?
        .into_iter()
        .collect();
    Ok(images == subsets)
}

/// The chamber-to-subset map `f(C) = {alpha in I : alpha(C) < 0}` on
/// sign-vector chambers: its image must be exactly the Weyl-type
/// subsets, and the separation-distance generating function over chambers
/// must equal the exponent product.
pub fn chamber_subset_checks(
    rs: &RootSystem,
    wg: &WeylGroup,
    ideal: &LowerIdeal,
) -> Result<(bool, Vec<usize>)> {
    let chambers: BTreeSet<u128> = crate::arrangement::sign_vector_chambers(rs, wg, ideal)
        .into_iter()
        .collect();
    let subsets: BTreeSet<u128> = weyl_type_subsets(rs, ideal, DEFAULT_WEYL_TYPE_BOUND)?
        .into_iter()
        .collect();
    let matches = chambers == subsets;
    let masks: Vec<u128> = chambers.into_iter().collect();
    Ok((matches, subset_generating_function(&masks)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lowerideal::enumerate_lower_ideals;
    use crate::rootsystem::{enumerate_weyl_group, Family, RootSystemType, DEFAULT_WEYL_BOUND};

    fn setup(f: Family, n: usize) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::build(RootSystemType::new(f, n)).unwrap();
        let wg = enumerate_weyl_group(&rs, DEFAULT_WEYL_BOUND).unwrap();
        (rs, wg)
    }

    #[test]
    fn a2_peterson_case() {
        let (rs, wg) = setup(Family::A, 2);
        let delta = LowerIdeal::from_root_indices(&rs, rs.simple_indices()).unwrap();
        let fixed = nilpotent_fixed_points(&rs, &wg, &delta);
        assert_eq!(fixed.len(), 4);
        assert_eq!(nilpotent_poincare(&rs, &wg, &delta).unwrap(), vec![1, 2, 1]);
        assert_eq!(semisimple_poincare(&wg, &delta), vec![1, 4, 1]);
        // no sum constraints are active, so all four subsets qualify
        let subsets = weyl_type_subsets(&rs, &delta, 24).unwrap();
        assert_eq!(subsets.len(), 4);
    }

    #[test]
    fn extreme_ideals() {
        let (rs, wg) = setup(Family::A, 2);
        let empty = LowerIdeal::empty(&rs);
        assert_eq!(nilpotent_fixed_points(&rs, &wg, &empty), vec![wg.identity()]);
        assert_eq!(nilpotent_poincare(&rs, &wg, &empty).unwrap(), vec![1]);
        assert_eq!(semisimple_poincare(&wg, &empty), vec![6]);
        assert_eq!(weyl_type_subsets(&rs, &empty, 24).unwrap(), vec![0]);

        let full = LowerIdeal::full(&rs);
        let fixed = nilpotent_fixed_points(&rs, &wg, &full);
        assert_eq!(fixed.len(), wg.len());
        // the full ideal recovers the length generating function
        assert_eq!(
            semisimple_poincare(&wg, &full),
            wg.length_distribution()
        );
        let subsets = weyl_type_subsets(&rs, &full, 24).unwrap();
        assert_eq!(subset_generating_function(&subsets), vec![1, 2, 2, 1]);
    }

    #[test]
    fn weyl_type_matches_brute_force() {
        for (f, n) in [(Family::A, 2), (Family::B, 2), (Family::G, 2)] {
            let (rs, _) = setup(f, n);
            for ideal in enumerate_lower_ideals(&rs, 30).unwrap() {
                let fast: BTreeSet<u128> =
                    weyl_type_subsets(&rs, &ideal, 24).unwrap().into_iter().collect();
                let brute = brute_force_weyl_type(&rs, &ideal);
                assert_eq!(fast, brute, "{:?} {:?}", f, ideal.root_indices());
            }
        }
    }

    fn brute_force_weyl_type(rs: &RootSystem, ideal: &LowerIdeal) -> BTreeSet<u128> {
        let members = ideal.root_indices();
        let sum_of = |a: usize, b: usize| -> Option<usize> {
            let s: Vec<u32> = rs.roots()[a]
                .simple_coords
                .iter()
                .zip(&rs.roots()[b].simple_coords)
                .map(|(x, y)| x + y)
                .collect();
            members
                .iter()
                .copied()
                .find(|&i| rs.roots()[i].simple_coords == s)
        };
        let mut out = BTreeSet::new();
        'subset: for bits in 0u32..(1 << members.len()) {
            let in_y = |p: usize| bits >> p & 1 == 1;
            for (pa, &a) in members.iter().enumerate() {
                for (pb, &b) in members.iter().enumerate().skip(pa + 1) {
                    if let Some(s) = sum_of(a, b) {
                        let ps = members.iter().position(|&i| i == s).unwrap();
                        if in_y(pa) && in_y(pb) && !in_y(ps) {
                            continue 'subset;
                        }
                        if !in_y(pa) && !in_y(pb) && in_y(ps) {
                            continue 'subset;
                        }
                    }
                }
            }
            let mask = members
                .iter()
                .enumerate()
                .filter(|(p, _)| in_y(*p))
                .fold(0u128, |m, (_, &i)| m | 1u128 << i);
            out.insert(mask);
        }
        out
    }

    #[test]
    fn eta_bijection_exhaustive_small() {
        for (f, n) in [(Family::A, 3), (Family::G, 2), (Family::B, 2)] {
            let (rs, wg) = setup(f, n);
            for ideal in enumerate_lower_ideals(&rs, 30).unwrap() {
                assert!(
                    eta_bijection_check(&rs, &wg, &ideal).unwrap(),
                    "{:?} {:?}",
                    f,
                    ideal.root_indices()
                );
            }
        }
    }

    #[test]
    fn four_way_small_sweep() {
        // fixed-point sum = height product = Weyl-type generating function
        for (f, n) in [(Family::A, 2), (Family::B, 2), (Family::G, 2), (Family::D, 3)] {
            let (rs, wg) = setup(f, n);
            for ideal in enumerate_lower_ideals(&rs, 30).unwrap() {
                let nil = nilpotent_poincare(&rs, &wg, &ideal).unwrap();
                let subsets = weyl_type_subsets(&rs, &ideal, 24).unwrap();
                assert_eq!(nil, subset_generating_function(&subsets));
                // palindromic
                let rev: Vec<usize> = nil.iter().rev().copied().collect();
                assert_eq!(nil, rev);
            }
        }
    }

    #[test]
    fn chamber_bijection_and_separation_identity() {
        for (f, n) in [(Family::A, 2), (Family::C, 2), (Family::G, 2), (Family::D, 3)] {
            let (rs, wg) = setup(f, n);
            for ideal in enumerate_lower_ideals(&rs, 30).unwrap() {
                let (matches, separation) = chamber_subset_checks(&rs, &wg, &ideal).unwrap();
                assert!(matches);
                let nil = nilpotent_poincare(&rs, &wg, &ideal).unwrap();
                assert_eq!(separation, nil);
            }
        }
    }

    #[test]
    fn b3_example_poincare() {
        let (rs, wg) = setup(Family::B, 3);
        let h = crate::lowerideal::HessenbergFunction::new(
            vec![3, 5, 4],
            crate::lowerideal::HessFlavor::BC,
        );
        let ideal = crate::lowerideal::ideal_from_hessenberg(&h, &rs).unwrap();
        // (1+s)(1+s+s^2)(1+s+s^2+s^3)
        assert_eq!(
            nilpotent_poincare(&rs, &wg, &ideal).unwrap(),
            vec![1, 3, 5, 6, 5, 3, 1]
        );
    }

    #[test]
    fn bound_is_enforced() {
        let (rs, _) = setup(Family::B, 3);
        let full = LowerIdeal::full(&rs);
        assert!(matches!(
            weyl_type_subsets(&rs, &full, 5),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
