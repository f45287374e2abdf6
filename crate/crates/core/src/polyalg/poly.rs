use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Integer, Rational};
use crate::error::{Error, Result};

/// Exponent vector of fixed length (the ambient variable count).
///
/// The total order is graded lexicographic: degree first, then lex on the
/// exponents with `x1` largest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise quotient, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial over the rationals in a canonical form: a sorted
/// term map with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Rational::one(), nvars)
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::constant(nvars), c);
        p
    }

    /// The variable `x_{index+1}` as a polynomial.
    pub fn var(index: usize, nvars: usize) -> Self {
        assert!(index < nvars);
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, index), Rational::one());
        p
    }

    /// Degree-one form with the given coefficient vector.
    pub fn linear_form(coeffs: &[Rational]) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(nvars, i), c.clone());
        }
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::constant(self.nvars))
    }

    /// Leading coefficient in graded-lex order, or zero.
    pub fn leading_coefficient(&self) -> Rational {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// True when every term has total degree `d` (vacuously for zero).
    pub fn is_homogeneous_of_degree(&self, d: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// The common degree of all terms; `Ok(0)` for zero.
    pub fn homogeneous_degree(&self) -> Result<usize> {
        let d = self.degree().unwrap_or(0);
        if self.is_homogeneous_of_degree(d) {
            Ok(d)
        } else {
            Err(Error::Inhomogeneous {
                expected: d,
                poly: self.to_string(),
            })
        }
    }

    /// The homogeneous piece of degree `d`.
    pub fn homogeneous_part(&self, d: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn check_nvars(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    /// Exact substitution `x_{var_index+1} -> replacement`.
    pub fn substitute(&self, var_index: usize, replacement: &Polynomial) -> Result<Polynomial> {
        if var_index >= self.nvars {
            return Err(Error::VarIndexOutOfRange {
                index: var_index,
                nvars: self.nvars,
            });
        }
        self.check_nvars(replacement)?;
        let mut out = Polynomial::zero(self.nvars);
        // Cache powers of the replacement across terms.
        let mut powers: Vec<Polynomial> = vec![Polynomial::one(self.nvars)];
        for (m, c) in &self.terms {
            let e = m.exponents()[var_index] as usize;
            while powers.len() <= e {
                let next = &powers[powers.len() - 1] * replacement;
                powers.push(next);
            }
            let mut rest = m.exponents().to_vec();
            rest[var_index] = 0;
            let rest = Monomial::new(rest);
            for (pm, pc) in powers[e].terms() {
                out.add_term(rest.mul(pm), c * pc);
            }
        }
        Ok(out)
    }

    /// Simultaneous substitution `x_i -> replacements[i]` for every
    /// variable; the replacements fix the variable count of the result.
    pub fn substitute_all(&self, replacements: &[Polynomial]) -> Result<Polynomial> {
        if replacements.len() != self.nvars {
            return Err(Error::NvarsMismatch(self.nvars, replacements.len()));
        }
        let out_vars = replacements.first().map_or(0, |r| r.nvars());
        if replacements.iter().any(|r| r.nvars() != out_vars) {
            return Err(Error::NvarsMismatch(self.nvars, out_vars));
        }
        let mut powers: Vec<Vec<Polynomial>> = replacements
            .iter()
            .map(|_| vec![Polynomial::one(out_vars)])
            .collect();
        let mut out = Polynomial::zero(out_vars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone(), out_vars);
            for (i, &e) in m.exponents().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &replacements[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to `x_{var_index+1}`.
    pub fn partial_derivative(&self, var_index: usize) -> Result<Polynomial> {
        if var_index >= self.nvars {
            return Err(Error::VarIndexOutOfRange {
                index: var_index,
                nvars: self.nvars,
            });
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[var_index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var_index] = e - 1;
            out.add_term(Monomial::new(exps), c * rat_u32(e));
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::NvarsMismatch(self.nvars, point.len()));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Drops the trailing variable, which must not occur in any term.
    pub fn drop_last_var(&self) -> Polynomial {
        let n = self.nvars - 1;
        Polynomial {
            nvars: n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    assert_eq!(m.exponents()[n], 0, "variable still in use");
                    (Monomial::new(m.exponents()[..n].to_vec()), c.clone())
                })
                .collect(),
        }
    }

    /// Reinterprets an `n`-variable polynomial in `n+1` variables.
    pub fn extend_one_var(&self) -> Polynomial {
        let n = self.nvars + 1;
        Polynomial {
            nvars: n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exponents().to_vec();
                    e.push(0);
                    (Monomial::new(e), c.clone())
                })
                .collect(),
        }
    }

    /// Exact quotient by a degree-one form, or `None` when not divisible.
    pub fn divide_by_linear(&self, linear: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.nvars, linear.nvars);
        assert!(linear.is_homogeneous_of_degree(1) && !linear.is_zero());
        // Long division in the pivot variable: the variable of the leading
        // graded-lex term of the divisor.
        let pivot = linear
            .terms
            .keys()
            .next_back()
            .and_then(|m| m.exponents().iter().position(|&e| e == 1))
            .expect("linear form has a pivot variable");
        let pivot_coeff = linear.coefficient(&Monomial::var(self.nvars, pivot));
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        loop {
            // Highest term containing the pivot variable.
            let lead = rem
                .terms
                .iter()
                .rev()
                .find(|(m, _)| m.exponents()[pivot] > 0)
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = lead else { break };
            let mut e = m.exponents().to_vec();
            e[pivot] -= 1;
            let qm = Monomial::new(e);
            let qc = &c / &pivot_coeff;
            let mut qterm = Polynomial::zero(self.nvars);
            qterm.add_term(qm, qc);
            rem = &rem - &(&qterm * linear);
            quot = &quot + &qterm;
        }
        if rem.is_zero() {
            Some(quot)
        } else {
            None
        }
    }

    /// True when `linear` divides `self` exactly.
    pub fn is_divisible_by_linear(&self, linear: &Polynomial) -> bool {
        // Vanishing on the kernel of the form is equivalent to divisibility
        // and avoids building the quotient.
        assert_eq!(self.nvars, linear.nvars);
        let pivot = linear
            .terms
            .keys()
            .next_back()
            .and_then(|m| m.exponents().iter().position(|&e| e == 1))
            .expect("nonzero linear form");
        let pivot_coeff = linear.coefficient(&Monomial::var(self.nvars, pivot));
        let mut replacement = Polynomial::zero(self.nvars);
        for (m, c) in linear.terms() {
            let var = m.exponents().iter().position(|&e| e == 1).unwrap();
            if var != pivot {
                replacement.add_term(m.clone(), -(c / &pivot_coeff));
            }
        }
        self.substitute(pivot, &replacement)
            .expect("pivot in range")
            .is_zero()
    }
}

fn rat_u32(n: u32) -> Rational {
    Rational::from_integer(Integer::from(n))
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

/// Applies `f`, read as a constant-coefficient differential operator in
/// orthonormal coordinates, to `g`: the result is `f(d/dx1,...,d/dxm)(g)`.
pub fn apply_diff_operator(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.nvars() != g.nvars() {
        return Err(Error::NvarsMismatch(f.nvars(), g.nvars()));
    }
    let nvars = f.nvars();
    let mut out = Polynomial::zero(nvars);
    for (fm, fc) in f.terms() {
        for (gm, gc) in g.terms() {
            let Some(q) = gm.checked_div(fm) else { continue };
            // d^a(x^b) = b!/(b-a)! x^(b-a) componentwise.
            let mut factor = Integer::one();
            for (i, &a) in fm.exponents().iter().enumerate() {
                let b = gm.exponents()[i];
                for k in (b - a + 1)..=b {
                    factor *= Integer::from(k);
                }
            }
            out.add_term(q, fc * gc * Rational::from_integer(factor));
        }
    }
    Ok(out)
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let is_const = m.degree() == 0;
            if is_const {
                write!(f, "{}", mag)?;
            } else {
                let mut lead = true;
                if !mag.is_one() {
                    write!(f, "{}", mag)?;
                    lead = false;
                }
                for (v, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !lead {
                        write!(f, "*")?;
                    }
                    lead = false;
                    write!(f, "x{}", v + 1)?;
                    if e > 1 {
                        write!(f, "^{}", e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat;

    fn x(i: usize, n: usize) -> Polynomial {
        Polynomial::var(i, n)
    }

    #[test]
    fn substitute_cancellation() {
        // x1 + x2 with x2 -> -x1 collapses to zero
        let p = &x(0, 2) + &x(1, 2);
        let r = p.substitute(1, &-&x(0, 2)).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn substitute_square() {
        let p = &x(0, 2) * &x(1, 2);
        let r = p.substitute(1, &x(0, 2)).unwrap();
        assert_eq!(r, x(0, 2).pow(2));
    }

    #[test]
    fn substitute_index_out_of_range() {
        let p = x(0, 2);
        assert!(matches!(
            p.substitute(2, &x(0, 2)),
            Err(Error::VarIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn derivative_basics() {
        let p = x(0, 2).pow(2);
        assert_eq!(
            p.partial_derivative(0).unwrap(),
            x(0, 2).scale(&rat(2))
        );
        assert!(p.partial_derivative(1).unwrap().is_zero());
    }

    #[test]
    fn diff_operator_basics() {
        // f = x1 applied to x1^2 gives 2 x1
        let f = x(0, 2);
        let g = x(0, 2).pow(2);
        assert_eq!(
            apply_diff_operator(&f, &g).unwrap(),
            x(0, 2).scale(&rat(2))
        );
        // f = x1 x2 applied to x1 x2 gives 1
        let h = &x(0, 2) * &x(1, 2);
        assert_eq!(
            apply_diff_operator(&h, &h).unwrap(),
            Polynomial::one(2)
        );
    }

    #[test]
    fn divide_by_linear_exact() {
        let n = 3;
        let a = &x(0, n) - &x(1, n);
        let b = &x(0, n) - &x(2, n);
        let prod = &(&a * &b) * &x(0, n);
        let q = prod.divide_by_linear(&a).unwrap();
        assert_eq!(q, &b * &x(0, n));
        assert!(prod.is_divisible_by_linear(&b));
        assert!(!prod.is_divisible_by_linear(&(&a + &b)));
        assert!(prod.divide_by_linear(&(&a + &b)).is_none());
    }

    #[test]
    fn homogeneous_degree_checks() {
        let p = &x(0, 2).pow(2) + &x(1, 2);
        assert!(p.homogeneous_degree().is_err());
        assert_eq!(x(0, 2).pow(3).homogeneous_degree().unwrap(), 3);
        assert!(Polynomial::zero(2).is_homogeneous_of_degree(5));
    }

    #[test]
    fn display_canonical() {
        let p = &(&x(0, 3).pow(2) - &(&x(0, 3) * &x(1, 3)).scale(&rat(2)))
            + &Polynomial::constant(rat(-1) / rat(2), 3);
        assert_eq!(p.to_string(), "x1^2 - 2*x1*x2 - 1/2");
    }
}
