//! Volume polynomials: `P_I` is the image of the product of all positive
//! roots under the differential operator of the product over the complement
//! of the ideal, and its apolar annihilator recovers `a(I)` exactly.

use num_traits::{Signed, Zero};

use crate::derivbasis::IdealGenerators;
use crate::error::{Error, Result};
use crate::gradedring::ideal_graded_dim;
use crate::lowerideal::LowerIdeal;
use crate::polyalg::{
    apply_diff_operator, coefficient_rows, monomials_of_degree, Polynomial, Rational,
    RationalMatrix,
};
use crate::rootsystem::RootSystem;

/// The product of all positive roots, in ambient coordinates.
pub fn weyl_product(rs: &RootSystem) -> Polynomial {
    let mut p = Polynomial::one(rs.ambient_dim());
    for root in rs.roots() {
        p = &p * &root.form;
    }
    p
}

/// The volume polynomial of an ideal, sign-normalized so that applying
/// `rho^{|I|}` as a differential operator gives a positive number.
#[derive(Clone, Debug)]
pub struct VolumePolynomial {
    /// Ambient, homogeneous of degree `|I|`, trace-free coordinates for
    /// types A and G2.
    pub polynomial: Polynomial,
    pub sign_flipped: bool,
    /// The positive rational `rho^{|I|}` evaluates to under the pairing.
    pub rho_pairing: Rational,
}

/// `P_I = d_{beta_I}(P)` with `beta_I` the product over the complement.
pub fn volume_polynomial(rs: &RootSystem, ideal: &LowerIdeal) -> Result<VolumePolynomial> {
    let mut beta = Polynomial::one(rs.ambient_dim());
    for (i, root) in rs.roots().iter().enumerate() {
        if !ideal.contains(i) {
            beta = &beta * &root.form;
        }
    }
    let p = apply_diff_operator(&beta, &weyl_product(rs))?;
    if p.is_zero() {
        return Err(Error::ConsistencyFailure(
            "volume polynomial vanished".into(),
        ));
    }
    debug_assert!(p.is_homogeneous_of_degree(ideal.len()));
    let rho_power = rs.rho().pow(ideal.len());
    let value = apply_diff_operator(&rho_power, &p)?.constant_term();
    if value.is_zero() {
        return Err(Error::ConsistencyFailure(
            "volume polynomial pairs to zero against rho".into(),
        ));
    }
    let flip = value.is_negative();
    Ok(VolumePolynomial {
        polynomial: if flip { -&p } else { p },
        sign_flipped: flip,
        rho_pairing: if flip { -value } else { value },
    })
}

/// Annihilator comparison: the generators of `a(I)` must kill `P_I`, and
/// the annihilator must have the same graded dimensions as the ideal.
#[derive(Clone, Debug)]
pub struct AnnihilatorReport {
    pub generators_kill: bool,
    /// `(degree, dim Ann_d, dim a(I)_d)` for every degree up to `|I|`.
    pub per_degree: Vec<(usize, usize, usize)>,
}

impl AnnihilatorReport {
    pub fn holds(&self) -> bool {
        self.generators_kill && self.per_degree.iter().all(|&(_, a, b)| a == b)
    }
}

pub fn annihilator_check(
    rs: &RootSystem,
    ideal: &LowerIdeal,
    gens: &IdealGenerators,
    volume: &VolumePolynomial,
) -> Result<AnnihilatorReport> {
    let p = &volume.polynomial;
    let mut generators_kill = true;
    for f in &gens.gens {
        if !apply_diff_operator(&rs.lift(f), p)?.is_zero() {
            generators_kill = false;
        }
    }
    let nvars = rs.rank();
    let degree = ideal.len();
    let mut per_degree = Vec::new();
    for d in 0..=degree {
        let monos = monomials_of_degree(nvars, d);
        // rows: the operator image of each reduced monomial on P_I
        let images: Vec<Polynomial> = monos
            .iter()
            .map(|m| {
                let mono = Polynomial::from_terms(
                    nvars,
                    [(m.clone(), Rational::from_integer(1.into()))],
                );
                apply_diff_operator(&rs.lift(&mono), p)
            })
            .collect::<Result<_>>()?;
        let nonzero: Vec<Polynomial> = images.iter().filter(|p| !p.is_zero()).cloned().collect();
        let rank = if nonzero.is_empty() {
            0
        } else {
            RationalMatrix::from_rows(coefficient_rows(&nonzero, degree - d)?).rank()
        };
        let ann_dim = monos.len() - rank;
        let ideal_dim = ideal_graded_dim(&gens.gens, d)?;
        per_degree.push((d, ann_dim, ideal_dim));
    }
    Ok(AnnihilatorReport {
        generators_kill,
        per_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivbasis::ideal_generators_for_ideal;
    use crate::lowerideal::enumerate_lower_ideals;
    use crate::polyalg::parse_polynomial;
    use crate::rootsystem::{enumerate_weyl_group, Family, RootSystemType, DEFAULT_WEYL_BOUND};

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::build(RootSystemType::new(f, n)).unwrap()
    }

    #[test]
    fn weyl_product_examples() {
        let a2 = rs(Family::A, 2);
        let expect = &(&parse_polynomial("x1 - x2", 3).unwrap()
            * &parse_polynomial("x2 - x3", 3).unwrap())
            * &parse_polynomial("x1 - x3", 3).unwrap();
        assert_eq!(weyl_product(&a2), expect);
        let a1 = rs(Family::A, 1);
        assert_eq!(weyl_product(&a1), parse_polynomial("x1 - x2", 2).unwrap());
        let b2 = rs(Family::B, 2);
        let expect = &(&(&parse_polynomial("x1 - x2", 2).unwrap()
            * &parse_polynomial("x1 + x2", 2).unwrap())
            * &parse_polynomial("x1", 2).unwrap())
            * &parse_polynomial("x2", 2).unwrap();
        assert_eq!(weyl_product(&b2), expect);
    }

    #[test]
    fn a2_simple_root_ideal_golden() {
        let r = rs(Family::A, 2);
        // I = {alpha_1, alpha_2}
        let ideal = LowerIdeal::from_root_indices(&r, r.simple_indices()).unwrap();
        let v = volume_polynomial(&r, &ideal).unwrap();
        let a1 = parse_polynomial("x1 - x2", 3).unwrap();
        let a2 = parse_polynomial("x2 - x3", 3).unwrap();
        let expect = &(&a1.pow(2) + &a2.pow(2)) + &(&a1 * &a2).scale(&crate::polyalg::rat(4));
        assert_eq!(v.polynomial, expect);
        assert!(!v.sign_flipped);
        // Ann(P_I) = (a1^2 - a2^2, 2 a1^2 + a1 a2): both kill P_I
        let g1 = &a1.pow(2) - &a2.pow(2);
        let g2 = &a1.pow(2).scale(&crate::polyalg::rat(2)) + &(&a1 * &a2);
        assert!(apply_diff_operator(&g1, &v.polynomial).unwrap().is_zero());
        assert!(apply_diff_operator(&g2, &v.polynomial).unwrap().is_zero());
    }

    #[test]
    fn full_ideal_gives_weyl_product() {
        let r = rs(Family::B, 2);
        let v = volume_polynomial(&r, &LowerIdeal::full(&r)).unwrap();
        let p = weyl_product(&r);
        assert!(v.polynomial == p || v.polynomial == -&p);
    }

    #[test]
    fn empty_ideal_gives_positive_constant() {
        for (f, n) in [(Family::A, 2), (Family::B, 2), (Family::G, 2)] {
            let r = rs(f, n);
            let v = volume_polynomial(&r, &LowerIdeal::empty(&r)).unwrap();
            assert_eq!(v.polynomial.degree(), Some(0));
            assert!(v.polynomial.constant_term().is_positive());
        }
    }

    #[test]
    fn stepwise_consistency() {
        for (f, n) in [(Family::A, 2), (Family::B, 2), (Family::G, 2), (Family::B, 3)] {
            let r = rs(f, n);
            for ideal in enumerate_lower_ideals(&r, 30).unwrap() {
                for alpha in ideal.addable_roots(&r) {
                    let bigger = ideal.with_root(&r, alpha).unwrap();
                    let p_small = volume_polynomial(&r, &ideal).unwrap();
                    let p_big = volume_polynomial(&r, &bigger).unwrap();
                    let stepped =
                        apply_diff_operator(&r.roots()[alpha].form, &p_big.polynomial).unwrap();
                    // equality up to the two sign normalizations
                    assert!(
                        stepped == p_small.polynomial || stepped == -&p_small.polynomial,
                        "{:?} {:?} + {}",
                        f,
                        ideal.root_indices(),
                        alpha
                    );
                }
            }
        }
    }

    #[test]
    fn weyl_antisymmetry_of_p() {
        for (f, n) in [(Family::A, 2), (Family::B, 2), (Family::C, 3), (Family::G, 2)] {
            let r = rs(f, n);
            let wg = enumerate_weyl_group(&r, DEFAULT_WEYL_BOUND).unwrap();
            let p = weyl_product(&r);
            for w in 0..wg.len() {
                let image = wg.act(w, &p);
                let det = wg.element(w).determinant();
                let expect = if det < 0 { -&p } else { p.clone() };
                // compare as classes: reduce both
                assert_eq!(r.reduce(&image), r.reduce(&expect));
            }
        }
    }

    #[test]
    fn annihilator_matches_ideal_dims_small() {
        for (f, n) in [(Family::A, 2), (Family::B, 2), (Family::G, 2)] {
            let r = rs(f, n);
            for ideal in enumerate_lower_ideals(&r, 30).unwrap() {
                let gens = ideal_generators_for_ideal(&r, &ideal).unwrap();
                let v = volume_polynomial(&r, &ideal).unwrap();
                let report = annihilator_check(&r, &ideal, &gens, &v).unwrap();
                assert!(report.holds(), "{:?} {:?}: {:?}", f, ideal.root_indices(), report);
            }
        }
    }

    #[test]
    fn rho_pairing_equals_weyl_pairing_for_alpha_i() {
        // d_{alpha_I}(P_I) = d_P(P) > 0
        let r = rs(Family::B, 2);
        let p = weyl_product(&r);
        let total = apply_diff_operator(&p, &p).unwrap().constant_term();
        assert!(total.is_positive());
        for ideal in enumerate_lower_ideals(&r, 30).unwrap() {
            let v = volume_polynomial(&r, &ideal).unwrap();
            let mut alpha_prod = Polynomial::one(r.ambient_dim());
            for i in ideal.root_indices() {
                alpha_prod = &alpha_prod * &r.roots()[i].form;
            }
            let value = apply_diff_operator(&alpha_prod, &v.polynomial)
                .unwrap()
                .constant_term();
            let expect = if v.sign_flipped { -&total } else { total.clone() };
            assert_eq!(value, expect);
        }
    }
}
