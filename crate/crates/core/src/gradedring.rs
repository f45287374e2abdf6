//! The graded quotient `R/a(I)`: Hilbert series by exact linear algebra,
//! colon-ideal identities, the Poincare-duality pairing against the volume
//! polynomial, and hard Lefschetz / Hodge-Riemann certificates.

use num_traits::{Signed, Zero};

use crate::derivbasis::IdealGenerators;
use crate::error::{Error, Result};
use crate::lowerideal::LowerIdeal;
use crate::polyalg::{
    apply_diff_operator, coefficient_rows, graded_span_rank, monomials_of_degree, DegreeBasis,
    Monomial, Polynomial, Rational, RationalMatrix,
};
use crate::rootsystem::RootSystem;

/// All monomial multiples of the generators landing in one degree; their
/// span is the degree-`d` piece of the ideal.
pub fn span_multiples(gens: &[Polynomial], degree: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > degree {
            continue;
        }
        for m in monomials_of_degree(g.nvars(), degree - dg) {
            let mut shifted = Polynomial::zero(g.nvars());
            for (gm, gc) in g.terms() {
                shifted.add_term(gm.mul(&m), gc.clone());
            }
            out.push(shifted);
        }
    }
    out
}

/// Dimension of the degree-`d` piece of the ideal generated by `gens`.
pub fn ideal_graded_dim(gens: &[Polynomial], degree: usize) -> Result<usize> {
    graded_span_rank(&span_multiples(gens, degree), degree)
}

fn full_dim(nvars: usize, degree: usize) -> usize {
    monomials_of_degree(nvars, degree).len()
}

/// The Artinian graded quotient `R/a(I)` with its graded dimensions and a
/// monomial basis of a complement in every degree.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    nvars: usize,
    gens: Vec<Polynomial>,
    pub socle: usize,
    pub graded_dims: Vec<usize>,
    complements: Vec<Vec<Monomial>>,
}

impl GradedQuotient {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Monomials whose classes form a basis of the degree-`d` piece.
    pub fn complement_basis(&self, d: usize) -> &[Monomial] {
        &self.complements[d]
    }

    pub fn total_dim(&self) -> usize {
        self.graded_dims.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.graded_dims.len();
        (0..n).all(|d| self.graded_dims[d] == self.graded_dims[n - 1 - d])
    }

    /// Coefficients of `prod_i (1 + s + ... + s^{d_i})` for comparison with
    /// the graded dimensions.
    pub fn product_formula(exponents: &[usize]) -> Vec<usize> {
        let mut coeffs = vec![1usize];
        for &d in exponents {
            let mut next = vec![0usize; coeffs.len() + d];
            for (k, &c) in coeffs.iter().enumerate() {
                for t in 0..=d {
                    next[k + t] += c;
                }
            }
            coeffs = next;
        }
        coeffs
    }
}

/// Computes the Hilbert series of `R/a(I)` degree by degree as
/// `dim R_d - rank(ideal piece)`, verifying the quotient vanishes right
/// after the predicted socle degree.
pub fn hilbert_series(gens: &IdealGenerators) -> Result<GradedQuotient> {
    let nvars = gens
        .gens
        .first()
        .map(|g| g.nvars())
        .expect("at least one generator");
    let socle: usize = gens.degrees.iter().map(|d| d - 1).sum();
    let mut graded_dims = Vec::with_capacity(socle + 1);
    let mut complements = Vec::with_capacity(socle + 1);
    for d in 0..=socle + 1 {
        let basis = DegreeBasis::new(nvars, d);
        let rows = coefficient_rows(&span_multiples(&gens.gens, d), d)?;
        let (rank, pivots) = RationalMatrix::from_rows(rows).rank_with_pivots();
        let dim = basis.len() - rank;
        if d == socle + 1 {
            if dim != 0 {
                return Err(Error::ConsistencyFailure(format!(
                    "quotient not Artinian: dimension {} in degree {}",
                    dim,
                    socle + 1
                )));
            }
            break;
        }
        let mut is_pivot = vec![false; basis.len()];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let complement: Vec<Monomial> = basis
            .monomials
            .iter()
            .enumerate()
            .filter(|(c, _)| !is_pivot[*c])
            .map(|(_, m)| m.clone())
            .collect();
        debug_assert_eq!(complement.len(), dim);
        graded_dims.push(dim);
        complements.push(complement);
    }
    if graded_dims[0] != 1 {
        return Err(Error::ConsistencyFailure(
            "degree-0 piece of the quotient must be one-dimensional".into(),
        ));
    }
    Ok(GradedQuotient {
        nvars,
        gens: gens.gens.clone(),
        socle,
        graded_dims,
        complements,
    })
}

/// Single colon-ideal step `a(I) = a(I') : alpha` for `I' = I + {alpha}`.
#[derive(Clone, Debug)]
pub struct ColonReport {
    /// `alpha * a(I)` lands in `a(I')`.
    pub multiples_contained: bool,
    /// Per degree `d <= socle(R/a(I))`: dimension of `{g : alpha g in
    /// a(I')}` versus dimension of `a(I)_d`.
    pub per_degree: Vec<(usize, usize, usize)>,
}

impl ColonReport {
    pub fn holds(&self) -> bool {
        self.multiples_contained && self.per_degree.iter().all(|&(_, a, b)| a == b)
    }
}

/// Verifies the colon identity degree by degree using exact ranks only.
pub fn colon_check(
    rs: &RootSystem,
    ideal: &LowerIdeal,
    alpha_index: usize,
    gens: &IdealGenerators,
    bigger_gens: &IdealGenerators,
) -> Result<ColonReport> {
    if ideal.contains(alpha_index) {
        return Err(Error::ConsistencyFailure(
            "alpha must lie outside the ideal".into(),
        ));
    }
    // validates that I + {alpha} is again a lower ideal
    ideal.with_root(rs, alpha_index)?;
    let alpha = rs.reduce(&rs.roots()[alpha_index].form);
    let nvars = alpha.nvars();

    // alpha * f in a(I') for every generator f of a(I): adjoining the
    // product must not raise the rank of the graded piece.
    let mut multiples_contained = true;
    for f in &gens.gens {
        let d = f.homogeneous_degree()? + 1;
        let mut polys = span_multiples(&bigger_gens.gens, d);
        let base = graded_span_rank(&polys, d)?;
        polys.push(&alpha * f);
        if graded_span_rank(&polys, d)? != base {
            multiples_contained = false;
        }
    }

    let socle: usize = gens.degrees.iter().map(|d| d - 1).sum();
    let mut per_degree = Vec::new();
    for d in 0..=socle {
        // dim {g in R_d : alpha * g in a(I')_{d+1}}
        //   = dim R_d - [rank(V' + alpha * R_d) - rank(V')]
        let span_bigger = span_multiples(&bigger_gens.gens, d + 1);
        let base = graded_span_rank(&span_bigger, d + 1)?;
        let mut with_multiples = span_bigger;
        for m in monomials_of_degree(nvars, d) {
            let mono = Polynomial::from_terms(nvars, [(m, Rational::from_integer(1.into()))]);
            with_multiples.push(&alpha * &mono);
        }
        let extended = graded_span_rank(&with_multiples, d + 1)?;
        let colon_dim = full_dim(nvars, d) - (extended - base);
        let ideal_dim = ideal_graded_dim(&gens.gens, d)?;
        per_degree.push((d, colon_dim, ideal_dim));
    }
    Ok(ColonReport {
        multiples_contained,
        per_degree,
    })
}

/// Pairing value `(f, P) -> f(d/dx)(P)` for a reduced polynomial of full
/// degree against an ambient volume polynomial; a rational number.
pub fn macaulay_pair(rs: &RootSystem, f_reduced: &Polynomial, p: &Polynomial) -> Rational {
    let lifted = rs.lift(f_reduced);
    let applied = apply_diff_operator(&lifted, p).expect("matching arity");
    debug_assert!(applied.degree().unwrap_or(0) == 0);
    applied.constant_term()
}

/// Non-degeneracy of the Poincare-duality pairing `A_d x A_{r-d} -> Q`
/// realized through the volume polynomial.
pub fn pd_pairing_check(
    rs: &RootSystem,
    quotient: &GradedQuotient,
    volume: &Polynomial,
) -> Result<bool> {
    let r = quotient.socle;
    for d in 0..=r / 2 {
        let rows = quotient.complement_basis(d);
        let cols = quotient.complement_basis(r - d);
        let gram: Vec<Vec<Rational>> = rows
            .iter()
            .map(|u| {
                cols.iter()
                    .map(|v| {
                        let mut prod = Polynomial::zero(quotient.nvars);
                        prod.add_term(u.mul(v), Rational::from_integer(1.into()));
                        macaulay_pair(rs, &prod, volume)
                    })
                    .collect()
            })
            .collect();
        let rank = RationalMatrix::from_rows(gram).rank();
        if rank != quotient.graded_dims[d] {
            return Err(Error::ConsistencyFailure(format!(
                "duality pairing degenerate in degree {}: rank {} of {}",
                d, rank, quotient.graded_dims[d]
            )));
        }
    }
    Ok(true)
}

/// Outcome of the hard Lefschetz and Hodge-Riemann checks in one degree.
#[derive(Clone, Debug)]
pub struct LefschetzDegree {
    pub q: usize,
    pub hl_full_rank: bool,
    pub kernel_dim: usize,
    pub hr_positive: bool,
}

#[derive(Clone, Debug)]
pub struct LefschetzReport {
    /// Socle degree zero: nothing to check.
    pub trivial: bool,
    pub per_degree: Vec<LefschetzDegree>,
}

impl LefschetzReport {
    pub fn holds(&self) -> bool {
        self.trivial
            || self
                .per_degree
                .iter()
                .all(|d| d.hl_full_rank && d.hr_positive)
    }
}

/// Hard Lefschetz: `x ell^{r-2q}: A_q -> A_{r-q}` has full rank. Hodge-
/// Riemann: the form `(-1)^q (ell^{r-2q} u v, P)` is positive definite on
/// the kernel of `x ell^{r-2q+1}`, certified by Sylvester's criterion.
/// The volume polynomial must be sign-normalized upstream.
pub fn lefschetz_check(
    rs: &RootSystem,
    quotient: &GradedQuotient,
    ell: &Polynomial,
    volume: &Polynomial,
) -> Result<LefschetzReport> {
    let r = quotient.socle;
    if r == 0 {
        return Ok(LefschetzReport {
            trivial: true,
            per_degree: Vec::new(),
        });
    }
    let nvars = quotient.nvars;
    if ell.nvars() != nvars || !ell.is_homogeneous_of_degree(1) || ell.is_zero() {
        return Err(Error::Inhomogeneous {
            expected: 1,
            poly: ell.to_string(),
        });
    }
    let mut per_degree = Vec::new();
    for q in 0..=r / 2 {
        let k = r - 2 * q;
        let power = ell.pow(k);
        let basis_q: Vec<Polynomial> = quotient
            .complement_basis(q)
            .iter()
            .map(|m| Polynomial::from_terms(nvars, [(m.clone(), Rational::from_integer(1.into()))]))
            .collect();

        // HL: rank of multiplication into degree r - q.
        let images: Vec<Polynomial> = basis_q.iter().map(|u| &power * u).collect();
        let span = span_multiples(&quotient.gens, r - q);
        let base = graded_span_rank(&span, r - q)?;
        let mut with_images = span;
        with_images.extend(images.iter().cloned());
        let hl_rank = graded_span_rank(&with_images, r - q)? - base;
        let hl_full_rank = hl_rank == quotient.graded_dims[q];

        // Kernel of multiplication by ell^{k+1} into degree r - q + 1.
        let kernel = multiplication_kernel(quotient, &basis_q, &ell.pow(k + 1), r - q + 1)?;
        let kernel_dim = kernel.len();

        // HR form on the kernel.
        let kernel_polys: Vec<Polynomial> = kernel
            .iter()
            .map(|coords| {
                let mut acc = Polynomial::zero(nvars);
                for (c, u) in coords.iter().zip(&basis_q) {
                    acc = &acc + &u.scale(c);
                }
                acc
            })
            .collect();
        let sign = if q % 2 == 0 { 1 } else { -1 };
        let gram: Vec<Vec<Rational>> = kernel_polys
            .iter()
            .map(|a| {
                kernel_polys
                    .iter()
                    .map(|b| {
                        let f = &(&power * a) * b;
                        let v = macaulay_pair(rs, &f, volume);
                        if sign < 0 {
                            -v
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        let hr_positive = sylvester_positive_definite(&gram);
        per_degree.push(LefschetzDegree {
            q,
            hl_full_rank,
            kernel_dim,
            hr_positive,
        });
    }
    Ok(LefschetzReport {
        trivial: false,
        per_degree,
    })
}

/// Basis (in complement coordinates) of `{v in A_q : m * v = 0 in A_t}`.
fn multiplication_kernel(
    quotient: &GradedQuotient,
    basis_q: &[Polynomial],
    multiplier: &Polynomial,
    target_degree: usize,
) -> Result<Vec<Vec<Rational>>> {
    let p = basis_q.len();
    if target_degree > quotient.socle {
        // the target space is zero, so everything is in the kernel
        return Ok((0..p)
            .map(|i| {
                (0..p)
                    .map(|j| {
                        if i == j {
                            Rational::from_integer(1.into())
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect());
    }
    let ideal_span = span_multiples(&quotient.gens, target_degree);
    let ideal_rows = coefficient_rows(&ideal_span, target_degree)?;
    let images: Vec<Polynomial> = basis_q.iter().map(|u| multiplier * u).collect();
    let image_rows = coefficient_rows_allow_zero(&images, target_degree)?;
    let cols = full_dim(quotient.nvars, target_degree);

    // Augment the image rows with identity coordinates; rows of the RREF
    // whose matrix part vanished give kernel combinations.
    let mut data = Vec::new();
    for row in &ideal_rows {
        let mut r = row.clone();
        r.extend(std::iter::repeat_with(Rational::zero).take(p));
        data.push(r);
    }
    for (i, row) in image_rows.iter().enumerate() {
        let mut r = row.clone();
        for j in 0..p {
            r.push(if i == j {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            });
        }
        data.push(r);
    }
    let mut matrix = RationalMatrix::from_rows(data);
    let pivots = matrix.rref();
    let mut kernel = Vec::new();
    for (r, &pc) in pivots.iter().enumerate() {
        if pc >= cols {
            let coords: Vec<Rational> = (0..p).map(|j| matrix.get(r, cols + j).clone()).collect();
            kernel.push(coords);
        }
    }
    Ok(kernel)
}

/// Coefficient rows that keep zero polynomials as zero rows, preserving
/// positional correspondence.
fn coefficient_rows_allow_zero(polys: &[Polynomial], degree: usize) -> Result<Vec<Vec<Rational>>> {
    let Some(first) = polys.first() else {
        return Ok(Vec::new());
    };
    let basis = DegreeBasis::new(first.nvars(), degree);
    polys
        .iter()
        .map(|p| {
            if !p.is_homogeneous_of_degree(degree) {
                return Err(Error::Inhomogeneous {
                    expected: degree,
                    poly: p.to_string(),
                });
            }
            Ok(basis.coeff_row(p))
        })
        .collect()
}

/// Sylvester's criterion: all leading principal minors positive.
fn sylvester_positive_definite(gram: &[Vec<Rational>]) -> bool {
    for t in 1..=gram.len() {
        let sub: Vec<Vec<Rational>> = gram[..t].iter().map(|r| r[..t].to_vec()).collect();
        if !RationalMatrix::from_rows(sub).det().is_positive() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivbasis::ideal_generators_for_ideal;
    use crate::lowerideal::enumerate_lower_ideals;
    use crate::rootsystem::{Family, RootSystemType};

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::build(RootSystemType::new(f, n)).unwrap()
    }

    #[test]
    fn a2_coinvariant_series() {
        let r = rs(Family::A, 2);
        let full = LowerIdeal::full(&r);
        let gens = ideal_generators_for_ideal(&r, &full).unwrap();
        let q = hilbert_series(&gens).unwrap();
        assert_eq!(q.graded_dims, vec![1, 2, 2, 1]);
        assert_eq!(q.socle, 3);
        assert!(q.is_palindromic());
        assert_eq!(
            GradedQuotient::product_formula(&full.exponents(&r)),
            vec![1, 2, 2, 1]
        );
    }

    #[test]
    fn empty_ideal_quotient_is_the_field() {
        let r = rs(Family::B, 3);
        let empty = LowerIdeal::empty(&r);
        let gens = ideal_generators_for_ideal(&r, &empty).unwrap();
        let q = hilbert_series(&gens).unwrap();
        assert_eq!(q.graded_dims, vec![1]);
        assert_eq!(q.socle, 0);
    }

    #[test]
    fn b3_example_series_matches_product() {
        let r = rs(Family::B, 3);
        let h = crate::lowerideal::HessenbergFunction::new(
            vec![3, 5, 4],
            crate::lowerideal::HessFlavor::BC,
        );
        let ideal = crate::lowerideal::ideal_from_hessenberg(&h, &r).unwrap();
        let gens = crate::derivbasis::ideal_generators(&r, &h).unwrap();
        let q = hilbert_series(&gens).unwrap();
        let expect = GradedQuotient::product_formula(&ideal.exponents(&r));
        assert_eq!(q.graded_dims, expect);
        assert_eq!(q.socle, ideal.len());
    }

    #[test]
    fn hilbert_sweeps_match_product_formula() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::G, 2)] {
            let r = rs(f, n);
            for ideal in enumerate_lower_ideals(&r, 30).unwrap() {
                let gens = ideal_generators_for_ideal(&r, &ideal).unwrap();
                let q = hilbert_series(&gens).unwrap();
                assert_eq!(
                    q.graded_dims,
                    GradedQuotient::product_formula(&ideal.exponents(&r)),
                    "{:?} {:?}",
                    f,
                    ideal.root_indices()
                );
                assert!(q.is_palindromic());
                assert_eq!(q.socle, ideal.len());
            }
        }
    }

    #[test]
    fn colon_steps_a2() {
        let r = rs(Family::A, 2);
        // I = {simple roots}, alpha = highest root
        let delta = LowerIdeal::from_root_indices(&r, rs_simple(&r)).unwrap();
        let alpha = 1; // x1 - x3 is the highest root (tableau (1,3))
        let gens = ideal_generators_for_ideal(&r, &delta).unwrap();
        let bigger = ideal_generators_for_ideal(&r, &delta.with_root(&r, alpha).unwrap()).unwrap();
        let report = colon_check(&r, &delta, alpha, &gens, &bigger).unwrap();
        assert!(report.holds(), "{:?}", report);
    }

    fn rs_simple(r: &RootSystem) -> &[usize] {
        r.simple_indices()
    }

    #[test]
    fn pd_pairing_small_sweeps() {
        for (f, n) in [(Family::A, 2), (Family::B, 2), (Family::G, 2)] {
            let r = rs(f, n);
            for ideal in enumerate_lower_ideals(&r, 30).unwrap() {
                let gens = ideal_generators_for_ideal(&r, &ideal).unwrap();
                let q = hilbert_series(&gens).unwrap();
                let v = crate::volume::volume_polynomial(&r, &ideal).unwrap();
                assert!(pd_pairing_check(&r, &q, &v.polynomial).unwrap());
            }
        }
    }

    #[test]
    fn lefschetz_trivial_for_empty_ideal() {
        let r = rs(Family::B, 2);
        let empty = LowerIdeal::empty(&r);
        let gens = ideal_generators_for_ideal(&r, &empty).unwrap();
        let q = hilbert_series(&gens).unwrap();
        let v = crate::volume::volume_polynomial(&r, &empty).unwrap();
        let rho = r.reduce(&r.rho());
        let report = lefschetz_check(&r, &q, &rho, &v.polynomial).unwrap();
        assert!(report.trivial && report.holds());
    }

    #[test]
    fn lefschetz_b2_peterson() {
        let r = rs(Family::B, 2);
        let delta = LowerIdeal::from_root_indices(&r, rs_simple(&r)).unwrap();
        let gens = ideal_generators_for_ideal(&r, &delta).unwrap();
        let q = hilbert_series(&gens).unwrap();
        let v = crate::volume::volume_polynomial(&r, &delta).unwrap();
        let rho = r.reduce(&r.rho());
        let report = lefschetz_check(&r, &q, &rho, &v.polynomial).unwrap();
        assert!(report.holds(), "{:?}", report);
    }

    #[test]
    fn lefschetz_small_sweeps() {
        for (f, n) in [(Family::A, 2), (Family::C, 2), (Family::G, 2)] {
            let r = rs(f, n);
            let rho = r.reduce(&r.rho());
            for ideal in enumerate_lower_ideals(&r, 30).unwrap() {
                if ideal.is_empty() {
                    continue;
                }
                let gens = ideal_generators_for_ideal(&r, &ideal).unwrap();
                let q = hilbert_series(&gens).unwrap();
                let v = crate::volume::volume_polynomial(&r, &ideal).unwrap();
                let report = lefschetz_check(&r, &q, &rho, &v.polynomial).unwrap();
                assert!(
                    report.holds(),
                    "{:?} {:?}: {:?}",
                    f,
                    ideal.root_indices(),
                    report
                );
            }
        }
    }

    #[test]
    fn a2_full_lefschetz_rank_two_in_middle() {
        let r = rs(Family::A, 2);
        let full = LowerIdeal::full(&r);
        let gens = ideal_generators_for_ideal(&r, &full).unwrap();
        let q = hilbert_series(&gens).unwrap();
        let v = crate::volume::volume_polynomial(&r, &full).unwrap();
        let rho = r.reduce(&r.rho());
        let report = lefschetz_check(&r, &q, &rho, &v.polynomial).unwrap();
        // q = 1: multiplication A_1 -> A_2 has full rank 2
        let deg1 = report.per_degree.iter().find(|d| d.q == 1).unwrap();
        assert!(deg1.hl_full_rank);
        assert_eq!(q.graded_dims[1], 2);
        assert!(report.holds());
    }
}
