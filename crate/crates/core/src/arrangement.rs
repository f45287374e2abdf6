//! The ideal arrangement `A_I`: Poincare polynomial, chamber counts by two
//! independent oracles, and the Terao factorization check.

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lowerideal::LowerIdeal;
use crate::polyalg::{Polynomial, Rational, RationalMatrix};
use crate::rootsystem::{RootSystem, WeylGroup};

/// Largest arrangement handled by the Whitney subset sum; larger ones go
/// through the intersection lattice.
pub const WHITNEY_MAX_HYPERPLANES: usize = 22;

/// The hyperplane arrangement of a lower ideal, with defining forms in the
/// reduced coordinates of the root system.
pub struct IdealArrangement {
    forms: Vec<Polynomial>,
    dim: usize,
}

impl IdealArrangement {
    pub fn from_ideal(rs: &RootSystem, ideal: &LowerIdeal) -> IdealArrangement {
        let forms: Vec<Polynomial> = ideal
            .root_indices()
            .iter()
            .map(|&i| rs.reduce(&rs.roots()[i].form))
            .collect();
        IdealArrangement {
            forms,
            dim: rs.rank(),
        }
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn normals(&self) -> Vec<Vec<Rational>> {
        self.forms
            .iter()
            .map(|f| {
                (0..self.dim)
                    .map(|i| f.coefficient(&crate::polyalg::Monomial::var(self.dim, i)))
                    .collect()
            })
            .collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PoincarePath {
    Whitney,
    Lattice,
}

/// Coefficients of the arrangement Poincare polynomial `pi(A, t)`.
#[derive(Clone, Debug)]
pub struct ArrangementPoincare {
    pub coefficients: Vec<i64>,
    pub path: PoincarePath,
}

impl ArrangementPoincare {
    pub fn eval_at_one(&self) -> i64 {
        self.coefficients.iter().sum()
    }
}

/// `pi(A, t)` by the Whitney sum over sub-multisets (sign by cardinality,
/// grade by rank of the normal span), or by Moebius recursion on the
/// intersection lattice when the arrangement is large.
pub fn poincare_polynomial(arr: &IdealArrangement) -> Result<ArrangementPoincare> {
    let (coefficients, path) = if arr.len() <= WHITNEY_MAX_HYPERPLANES {
        (whitney_coefficients(arr), PoincarePath::Whitney)
    } else {
        (lattice_coefficients(arr)?, PoincarePath::Lattice)
    };
    if coefficients[0] != 1 {
        return Err(Error::ConsistencyFailure(
            "constant term of pi(A,t) must be 1".into(),
        ));
    }
    let linear = coefficients.get(1).copied().unwrap_or(0);
    if !arr.is_empty() && linear != arr.len() as i64 {
        return Err(Error::ConsistencyFailure(format!(
            "coefficient of t in pi(A,t) is {}, expected |A| = {}",
            linear,
            arr.len()
        )));
    }
    Ok(ArrangementPoincare { coefficients, path })
}

/// Whitney: `pi(A,t) = sum_S (-1)^{|S| - r(S)} t^{r(S)}`, computed by a
/// depth-first walk carrying an incremental echelon basis of the normals.
fn whitney_coefficients(arr: &IdealArrangement) -> Vec<i64> {
    let normals = arr.normals();
    let mut coeffs = vec![0i64; arr.dim + 1];
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    walk(&normals, 0, 0, &mut echelon, &mut coeffs);
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
    coeffs
}

fn walk(
    normals: &[Vec<Rational>],
    next: usize,
    parity: usize,
    echelon: &mut Vec<Vec<Rational>>,
    coeffs: &mut Vec<i64>,
) {
    if next == normals.len() {
        let rank = echelon.len();
        let sign = if (parity - rank).is_multiple_of(2) { 1 } else { -1 };
        coeffs[rank] += sign;
        return;
    }
    // exclude hyperplane `next`
    walk(normals, next + 1, parity, echelon, coeffs);
    // include it
    match reduce_against(&normals[next], echelon) {
        None => {
            // dependent: rank unchanged, parity flips
            walk(normals, next + 1, parity + 1, echelon, coeffs);
        }
        Some(row) => {
            let lead = leading_index(&row);
            let pos = echelon
                .iter()
                .position(|e| leading_index(e) > lead)
                .unwrap_or(echelon.len());
            echelon.insert(pos, row);
            walk(normals, next + 1, parity + 1, echelon, coeffs);
            echelon.remove(pos);
        }
    }
}

fn leading_index(row: &[Rational]) -> usize {
    row.iter().position(|v| !v.is_zero()).unwrap_or(row.len())
}

/// Reduces `v` against the echelon rows; `None` when it lies in their span.
fn reduce_against(v: &[Rational], echelon: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let mut row = v.to_vec();
    for e in echelon {
        let lead = leading_index(e);
        if lead < row.len() && !row[lead].is_zero() {
            let f = &row[lead] / &e[lead];
            for (a, b) in row.iter_mut().zip(e) {
                *a = &*a - &(&f * b);
            }
        }
    }
    if row.iter().all(|x| x.is_zero()) {
        None
    } else {
        Some(row)
    }
}

/// Intersection-lattice path: enumerate the flats as normal spans, compute
/// Moebius values by recursion, and grade by codimension.
fn lattice_coefficients(arr: &IdealArrangement) -> Result<Vec<i64>> {
    let normals = arr.normals();
    let n_h = normals.len();
    // Each flat is identified by the set of hyperplanes containing it.
    // Key: RREF of the normal span.
    #[derive(Clone)]
    struct Flat {
        contains: u128,
        codim: usize,
    }
    let mut flats: Vec<Flat> = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();

    let span_key = |rows: &RationalMatrix| -> String {
        let mut m = rows.clone();
        m.rref();
        let mut s = String::new();
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                s.push_str(&m.get(r, c).to_string());
                s.push(',');
            }
            s.push(';');
        }
        s
    };

    let contains_of = |subset: &[usize]| -> u128 {
        // hyperplanes whose normal lies in the span of `subset`
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| normals[i].clone()).collect();
        let base_rank = RationalMatrix::from_rows(rows.clone()).rank();
        let mut mask = 0u128;
        for (h, normal) in normals.iter().enumerate() {
            let mut with = rows.clone();
            with.push(normal.clone());
            if RationalMatrix::from_rows(with).rank() == base_rank {
                mask |= 1u128 << h;
            }
        }
        mask
    };

    // Walk upward from the whole space, one hyperplane at a time. Adding a
    // hyperplane outside `contains` raises the codimension by exactly one.
    flats.push(Flat {
        contains: 0,
        codim: 0,
    });
    seen.insert(String::new(), 0);
    let mut frontier: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((subset, flat_idx)) = frontier.pop() {
        let codim = flats[flat_idx].codim;
        for h in 0..n_h {
            if flats[flat_idx].contains >> h & 1 == 1 {
                continue;
            }
            let mut new_subset = subset.clone();
            new_subset.push(h);
            let rows: Vec<Vec<Rational>> =
                new_subset.iter().map(|&i| normals[i].clone()).collect();
            let key = span_key(&RationalMatrix::from_rows(rows));
            if seen.contains_key(&key) {
                continue;
            }
            let contains = contains_of(&new_subset);
            let idx = flats.len();
            seen.insert(key, idx);
            flats.push(Flat {
                contains,
                codim: codim + 1,
            });
            frontier.push((new_subset, idx));
        }
    }

    // Moebius recursion from the bottom flat (the whole space).
    let mut order: Vec<usize> = (0..flats.len()).collect();
    order.sort_by_key(|&i| flats[i].codim);
    let mut mu: Vec<i64> = vec![0; flats.len()];
    for &i in &order {
        if flats[i].codim == 0 {
            mu[i] = 1;
            continue;
        }
        let mut acc = 0i64;
        for &j in &order {
            if j != i
                && flats[j].contains & !flats[i].contains == 0
                && (flats[j].contains != flats[i].contains)
            {
                acc += mu[j];
            }
        }
        mu[i] = -acc;
    }
    let max_codim = flats.iter().map(|f| f.codim).max().unwrap_or(0);
    let mut coeffs = vec![0i64; max_codim + 1];
    for (i, f) in flats.iter().enumerate() {
        let signed = if f.codim % 2 == 0 { mu[i] } else { -mu[i] };
        if signed <= 0 {
            return Err(Error::ConsistencyFailure(
                "Moebius values of a central arrangement must alternate in sign".into(),
            ));
        }
        coeffs[f.codim] += signed;
    }
    Ok(coeffs)
}

/// Distinct restricted sign vectors of the Weyl translates of the dominant
/// point, reported as masks over the global root indices: bit `r` is set
/// when the root `alpha_r in I` is negative on the chamber.
pub fn sign_vector_chambers(
    rs: &RootSystem,
    wg: &WeylGroup,
    ideal: &LowerIdeal,
) -> Vec<u128> {
    let point = rs.dominant_point();
    let members = ideal.root_indices();
    let mut seen = BTreeSet::new();
    for w in 0..wg.len() {
        let mut mask = 0u128;
        for &r in &members {
            let image = wg.act(w, &rs.roots()[r].form);
            let value = image.eval(&point).expect("arity");
            assert!(!value.is_zero(), "dominant point must be regular");
            if value.is_negative() {
                mask |= 1u128 << r;
            }
        }
        seen.insert(mask);
    }
    seen.into_iter().collect()
}

/// Chamber count by both oracles.
#[derive(Clone, Debug)]
pub struct ChamberReport {
    pub count: usize,
    pub zaslavsky: i64,
    pub sign_vectors: usize,
    pub poincare: ArrangementPoincare,
}

/// Counts chambers by `pi(A, 1)` and by sign-vector enumeration; their
/// disagreement is a hard failure.
pub fn chamber_count(
    rs: &RootSystem,
    wg: &WeylGroup,
    ideal: &LowerIdeal,
) -> Result<ChamberReport> {
    let arr = IdealArrangement::from_ideal(rs, ideal);
    let poincare = poincare_polynomial(&arr)?;
    let zaslavsky = poincare.eval_at_one();
    let sign_vectors = sign_vector_chambers(rs, wg, ideal).len();
    if zaslavsky < 0 || zaslavsky as usize != sign_vectors {
        return Err(Error::ConsistencyFailure(format!(
            "chamber oracles disagree: pi(A,1) = {}, sign vectors = {}",
            zaslavsky, sign_vectors
        )));
    }
    Ok(ChamberReport {
        count: sign_vectors,
        zaslavsky,
        sign_vectors,
        poincare,
    })
}

/// Terao factorization check: `pi(A,t) = prod_i (1 + d_i t)` exactly.
#[derive(Clone, Debug)]
pub struct TeraoReport {
    pub holds: bool,
    pub pi: Vec<i64>,
    pub product: Vec<i64>,
}

pub fn terao_check(pi: &ArrangementPoincare, exponents: &[usize]) -> TeraoReport {
    let mut product = vec![1i64];
    for &d in exponents {
        let mut next = vec![0i64; product.len() + 1];
        for (k, &c) in product.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c * d as i64;
        }
        while next.len() > 1 && *next.last().unwrap() == 0 {
            next.pop();
        }
        product = next;
    }
    TeraoReport {
        holds: pi.coefficients == product,
        pi: pi.coefficients.clone(),
        product,
    }
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
    fn a2_full_poincare() {
        let (rs, _) = setup(Family::A, 2);
        let arr = IdealArrangement::from_ideal(&rs, &LowerIdeal::full(&rs));
        let pi = poincare_polynomial(&arr).unwrap();
        // (1 + t)(1 + 2t)
        assert_eq!(pi.coefficients, vec![1, 3, 2]);
    }

    #[test]
    fn empty_arrangement() {
        let (rs, wg) = setup(Family::A, 2);
        let empty = LowerIdeal::empty(&rs);
        let arr = IdealArrangement::from_ideal(&rs, &empty);
        let pi = poincare_polynomial(&arr).unwrap();
        assert_eq!(pi.coefficients, vec![1]);
        assert_eq!(chamber_count(&rs, &wg, &empty).unwrap().count, 1);
    }

    #[test]
    fn a2_simple_roots_chambers() {
        let (rs, wg) = setup(Family::A, 2);
        // two hyperplanes in the plane cut 4 chambers
        let delta = LowerIdeal::from_root_indices(&rs, rs.simple_indices()).unwrap();
        assert_eq!(chamber_count(&rs, &wg, &delta).unwrap().count, 4);
    }

    #[test]
    fn b3_example_factorization_and_chambers() {
        let (rs, wg) = setup(Family::B, 3);
        let h = crate::lowerideal::HessenbergFunction::new(
            vec![3, 5, 4],
            crate::lowerideal::HessFlavor::BC,
        );
        let ideal = crate::lowerideal::ideal_from_hessenberg(&h, &rs).unwrap();
        let arr = IdealArrangement::from_ideal(&rs, &ideal);
        let pi = poincare_polynomial(&arr).unwrap();
        // (1+t)(1+2t)(1+3t)
        assert_eq!(pi.coefficients, vec![1, 6, 11, 6]);
        let report = terao_check(&pi, &ideal.exponents(&rs));
        assert!(report.holds);
        assert_eq!(chamber_count(&rs, &wg, &ideal).unwrap().count, 24);
    }

    #[test]
    fn corrupted_exponents_fail_terao() {
        let (rs, _) = setup(Family::B, 3);
        let full = LowerIdeal::full(&rs);
        let arr = IdealArrangement::from_ideal(&rs, &full);
        let pi = poincare_polynomial(&arr).unwrap();
        assert!(terao_check(&pi, &full.exponents(&rs)).holds);
        let mut broken = full.exponents(&rs);
        broken[0] += 1;
        assert!(!terao_check(&pi, &broken).holds);
    }

    #[test]
    fn zaslavsky_rank2_sweeps() {
        for (f, n) in [
            (Family::A, 2),
            (Family::B, 2),
            (Family::C, 2),
            (Family::D, 2),
            (Family::G, 2),
        ] {
            let (rs, wg) = setup(f, n);
            for ideal in enumerate_lower_ideals(&rs, 30).unwrap() {
                let report = chamber_count(&rs, &wg, &ideal).unwrap();
                let terao = terao_check(&report.poincare, &ideal.exponents(&rs));
                assert!(terao.holds, "{:?} {:?}", f, ideal.root_indices());
            }
        }
    }

    #[test]
    fn lattice_path_matches_whitney() {
        let (rs, _) = setup(Family::B, 3);
        for ideal in enumerate_lower_ideals(&rs, 30).unwrap() {
            let arr = IdealArrangement::from_ideal(&rs, &ideal);
            let whitney = whitney_coefficients(&arr);
            let lattice = lattice_coefficients(&arr).unwrap();
            assert_eq!(whitney, lattice, "ideal {:?}", ideal.root_indices());
        }
    }

    #[test]
    fn chambers_grow_monotonically_along_extensions() {
        for (f, n) in [(Family::A, 2), (Family::B, 3), (Family::G, 2), (Family::D, 3)] {
            let (rs, wg) = setup(f, n);
            for ideal in enumerate_lower_ideals(&rs, 30).unwrap() {
                let count = chamber_count(&rs, &wg, &ideal).unwrap().count;
                for alpha in ideal.addable_roots(&rs) {
                    let bigger = ideal.with_root(&rs, alpha).unwrap();
                    let arr = IdealArrangement::from_ideal(&rs, &bigger);
                    assert_eq!(arr.len(), ideal.len() + 1);
                    let bigger_count = chamber_count(&rs, &wg, &bigger).unwrap().count;
                    assert!(bigger_count >= count);
                }
            }
        }
    }
}
