use std::collections::HashMap;

use super::{Monomial, Polynomial, Rational, RationalMatrix};
use crate::error::{Error, Result};

/// All monomials of the given total degree, in descending graded-lex order.
/// This fixes the column order of every coefficient matrix in the crate.
pub fn monomials_of_degree(nvars: usize, degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fill(&mut out, &mut exps, 0, degree);
    out
}

fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, var: usize, remaining: usize) {
    if var + 1 == exps.len() {
        exps[var] = remaining as u32;
        out.push(Monomial::new(exps.clone()));
        exps[var] = 0;
        return;
    }
    if exps.is_empty() {
        if remaining == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    for e in (0..=remaining).rev() {
        exps[var] = e as u32;
        fill(out, exps, var + 1, remaining - e);
        exps[var] = 0;
    }
}

/// Monomial basis of a fixed degree with index lookup.
pub struct DegreeBasis {
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn new(nvars: usize, degree: usize) -> Self {
        let monomials = monomials_of_degree(nvars, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        DegreeBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> usize {
        self.index[m]
    }

    /// Coefficient vector of a homogeneous polynomial of this degree.
    pub fn coeff_row(&self, p: &Polynomial) -> Vec<Rational> {
        let mut row = vec![Rational::from_integer(0.into()); self.len()];
        for (m, c) in p.terms() {
            row[self.index[m]] = c.clone();
        }
        row
    }
}

/// Dimension of the span of homogeneous polynomials of one degree, computed
/// as the rank of their coefficient matrix in the monomial basis.
pub fn graded_span_rank(polys: &[Polynomial], degree: usize) -> Result<usize> {
    let rows = coefficient_rows(polys, degree)?;
    Ok(RationalMatrix::from_rows(rows).rank())
}

/// Coefficient rows of homogeneous polynomials in the degree basis; rejects
/// inhomogeneous input. Zero polynomials are skipped.
pub fn coefficient_rows(polys: &[Polynomial], degree: usize) -> Result<Vec<Vec<Rational>>> {
    let Some(first) = polys.first() else {
        return Ok(Vec::new());
    };
    let basis = DegreeBasis::new(first.nvars(), degree);
    let mut rows = Vec::new();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        if !p.is_homogeneous_of_degree(degree) {
            return Err(Error::Inhomogeneous {
                expected: degree,
                poly: p.to_string(),
            });
        }
        rows.push(basis.coeff_row(p));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat;

    fn x(i: usize, n: usize) -> Polynomial {
        Polynomial::var(i, n)
    }

    #[test]
    fn monomial_order_descending() {
        let ms = monomials_of_degree(2, 2);
        let strs: Vec<String> = ms.iter().map(|m| format!("{:?}", m.exponents())).collect();
        assert_eq!(strs, vec!["[2, 0]", "[1, 1]", "[0, 2]"]);
        assert_eq!(monomials_of_degree(3, 0).len(), 1);
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
    }

    #[test]
    fn span_rank_examples() {
        // {x1, x2} in degree 1 has rank 2
        assert_eq!(graded_span_rank(&[x(0, 2), x(1, 2)], 1).unwrap(), 2);
        // dependent pair has rank 1
        let s = &x(0, 2) + &x(1, 2);
        assert_eq!(graded_span_rank(&[s.clone(), s.scale(&rat(2))], 1).unwrap(), 1);
        // degree-2 multiples of {x1, x2} span all of degree 2
        let mults = vec![
            &x(0, 2) * &x(0, 2),
            &x(1, 2) * &x(0, 2),
            &x(0, 2) * &x(1, 2),
            &x(1, 2) * &x(1, 2),
        ];
        assert_eq!(graded_span_rank(&mults, 2).unwrap(), 3);
    }

    #[test]
    fn span_rank_rejects_inhomogeneous() {
        let p = &x(0, 2) + &x(0, 2).pow(2);
        assert!(graded_span_rank(&[p], 2).is_err());
    }
}
