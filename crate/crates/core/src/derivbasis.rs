//! Logarithmic derivation modules of ideal arrangements: membership tests,
//! the explicit psi bases for types A, B, C and G2, Saito's criterion as an
//! executable certificate, and the generators of the ideal `a(I)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lowerideal::{hessenberg_from_ideal, HessFlavor, HessenbergFunction, LowerIdeal};
use crate::polyalg::{rat, Polynomial, Rational, RationalMatrix};
use crate::rootsystem::{Family, RootSystem};

/// A polynomial vector field `theta = sum_k coeffs[k] d/dx_k` in ambient
/// coordinates. For types A and G2 the coefficients sum to zero, so the
/// derivation descends to the trace-zero quotient.
#[derive(Clone, Debug)]
pub struct Derivation {
    coeffs: Vec<Polynomial>,
    trace_zero: bool,
}

impl Derivation {
    pub fn new(coeffs: Vec<Polynomial>, trace_zero: bool) -> Derivation {
        assert!(!coeffs.is_empty());
        let nvars = coeffs[0].nvars();
        assert!(coeffs.iter().all(|c| c.nvars() == nvars));
        if trace_zero {
            let mut sum = Polynomial::zero(nvars);
            for c in &coeffs {
                sum = &sum + c;
            }
            assert!(sum.is_zero(), "trace constraint violated");
        }
        Derivation { coeffs, trace_zero }
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs[0].nvars()
    }

    pub fn is_trace_zero(&self) -> bool {
        self.trace_zero
    }

    /// Common homogeneous degree of the nonzero coefficients.
    pub fn degree(&self) -> Result<usize> {
        let mut degree: Option<usize> = None;
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree()?;
            match degree {
                None => degree = Some(d),
                Some(existing) if existing == d => {}
                Some(existing) => {
                    return Err(Error::Inhomogeneous {
                        expected: existing,
                        poly: c.to_string(),
                    })
                }
            }
        }
        Ok(degree.unwrap_or(0))
    }

    /// `theta(p) = sum_k coeffs[k] * dp/dx_k`.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.nvars() != self.nvars() {
            return Err(Error::NvarsMismatch(p.nvars(), self.nvars()));
        }
        let mut out = Polynomial::zero(self.nvars());
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = &out + &(c * &p.partial_derivative(k)?);
        }
        Ok(out)
    }
}

/// The Euler field `sum_k x_k d/dx_k`, logarithmic for every arrangement.
pub fn euler_derivation(rs: &RootSystem) -> Derivation {
    let m = rs.ambient_dim();
    Derivation::new((0..m).map(|k| Polynomial::var(k, m)).collect(), false)
}

/// The coordinate fields `d/dx_k`; a basis of `D(A_empty)` for B/C/D.
pub fn coordinate_derivations(rs: &RootSystem) -> Vec<Derivation> {
    let m = rs.ambient_dim();
    (0..m)
        .map(|k| {
            Derivation::new(
                (0..m)
                    .map(|i| {
                        if i == k {
                            Polynomial::one(m)
                        } else {
                            Polynomial::zero(m)
                        }
                    })
                    .collect(),
                false,
            )
        })
        .collect()
}

/// Membership in the logarithmic module `D(A_I)`: `theta(alpha)` must be
/// divisible by `alpha` for every root of the ideal, in the reduced ring.
pub fn is_logarithmic(rs: &RootSystem, theta: &Derivation, ideal: &LowerIdeal) -> Result<bool> {
    if theta.nvars() != rs.ambient_dim() {
        return Err(Error::NvarsMismatch(theta.nvars(), rs.ambient_dim()));
    }
    for r in ideal.root_indices() {
        let alpha = &rs.roots()[r].form;
        let image = rs.reduce(&theta.apply(alpha)?);
        if image.is_zero() {
            continue;
        }
        let divisor = rs.reduce(alpha);
        if !image.is_divisible_by_linear(&divisor) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The derivation `psi_{i,j}` of the type's tableau, by its closed form.
/// 1-based tableau coordinates; `j = i` gives the initial derivations.
pub fn psi_tableau(rs: &RootSystem, i: usize, j: usize) -> Result<Derivation> {
    let n = rs.rank();
    match rs.family() {
        Family::A => {
            let m = n + 1;
            if !(1 <= i && i <= n && i <= j && j <= m) {
                return Err(Error::UnsupportedRootSystem(format!(
                    "psi position ({}, {}) outside the type A tableau",
                    i, j
                )));
            }
            // sum_{k<=i} (prod_{l=i+1..j} (x_k - x_l)) (d_k - (1/m) dbar)
            let mut g = vec![Polynomial::zero(m); m];
            for k in 1..=i {
                let mut prod = Polynomial::one(m);
                for l in (i + 1)..=j {
                    prod = &prod * &(&Polynomial::var(k - 1, m) - &Polynomial::var(l - 1, m));
                }
                g[k - 1] = prod;
            }
            let mut total = Polynomial::zero(m);
            for gk in &g {
                total = &total + gk;
            }
            let correction = total.scale(&(-Rational::one() / rat(m as i64)));
            let coeffs: Vec<Polynomial> = g.iter().map(|gk| gk + &correction).collect();
            Ok(Derivation::new(coeffs, true))
        }
        Family::B | Family::C => {
            if !(1 <= i && i <= n && i <= j && j <= 2 * n + 1 - i) {
                return Err(Error::UnsupportedRootSystem(format!(
                    "psi position ({}, {}) outside the tableau",
                    i, j
                )));
            }
            let m = n;
            let mut coeffs = vec![Polynomial::zero(m); m];
            if rs.family() == Family::C && j == 2 * n + 1 - i && j > i {
                // psi^C at the top slot coincides with psi^B there:
                // sum_k (prod_{l>i} (x_k - x_l)(x_k + x_l)) x_k d_k
                for k in 1..=i {
                    let xk = Polynomial::var(k - 1, m);
                    let mut prod = Polynomial::one(m);
                    for l in (i + 1)..=n {
                        let xl = Polynomial::var(l - 1, m);
                        prod = &prod * &(&(&xk - &xl) * &(&xk + &xl));
                    }
                    coeffs[k - 1] = &prod * &xk;
                }
            } else {
                for k in 1..=i {
                    let mut prod = Polynomial::one(m);
                    for l in (i + 1)..=j {
                        prod = &prod * &tableau_entry(rs, k, l)?;
                    }
                    coeffs[k - 1] = prod;
                }
            }
            Ok(Derivation::new(coeffs, false))
        }
        Family::G => {
            let m = 3;
            match (i, j) {
                (1, j) if (1..=6).contains(&j) => {
                    let mut prod = Polynomial::one(m);
                    for l in 2..=j {
                        prod = &prod * &tableau_entry(rs, 1, l)?;
                    }
                    let coeffs = vec![Polynomial::zero(m), -&prod, prod];
                    Ok(Derivation::new(coeffs, true))
                }
                (2, 2) => {
                    let third = Rational::one() / rat(3);
                    Ok(Derivation::new(
                        vec![
                            Polynomial::constant(-third.clone(), m),
                            Polynomial::constant(-third.clone(), m),
                            Polynomial::constant(rat(2) / rat(3), m),
                        ],
                        true,
                    ))
                }
                (2, 3) => {
                    // Euler field corrected to trace zero
                    let mut sum = Polynomial::zero(m);
                    for k in 0..m {
                        sum = &sum + &Polynomial::var(k, m);
                    }
                    let correction = sum.scale(&(-Rational::one() / rat(3)));
                    let coeffs: Vec<Polynomial> = (0..m)
                        .map(|k| &Polynomial::var(k, m) + &correction)
                        .collect();
                    Ok(Derivation::new(coeffs, true))
                }
                _ => Err(Error::UnsupportedRootSystem(format!(
                    "psi position ({}, {}) outside the G2 tableau",
                    i, j
                ))),
            }
        }
        Family::D => Err(Error::UnsupportedRootSystem(
            "no explicit derivation basis for type D".into(),
        )),
    }
}

fn tableau_entry(rs: &RootSystem, i: usize, j: usize) -> Result<Polynomial> {
    rs.roots()
        .iter()
        .find(|r| r.tableau == (i, j))
        .map(|r| r.tableau_form.clone())
        .ok_or_else(|| {
            Error::UnsupportedRootSystem(format!("no tableau entry at ({}, {})", i, j))
        })
}

/// The basis `psi_{1,h(1)}, ..., psi_{r,h(r)}` of `D(A_I)` for the
/// Hessenberg function of the ideal. Fails for type D.
pub fn psi_basis(rs: &RootSystem, h: &HessenbergFunction) -> Result<Vec<Derivation>> {
    h.validate(rs)?;
    let generators = match h.flavor {
        HessFlavor::A => rs.rank(),
        HessFlavor::BC => rs.rank(),
        HessFlavor::G2 => 2,
    };
    (1..=generators)
        .map(|i| {
            let theta = psi_tableau(rs, i, h.values[i - 1])?;
            debug_assert_eq!(theta.degree()?, h.values[i - 1] - i);
            Ok(theta)
        })
        .collect()
}

/// Convenience: derive the Hessenberg function from the ideal first.
pub fn psi_basis_for_ideal(rs: &RootSystem, ideal: &LowerIdeal) -> Result<Vec<Derivation>> {
    let h = hessenberg_from_ideal(rs, ideal)?;
    psi_basis(rs, &h)
}

/// Result of running Saito's criterion on a candidate basis.
#[derive(Clone, Debug)]
pub struct SaitoCertificate {
    /// All derivations lie in `D(A_I)`.
    pub logarithmic: bool,
    /// Polynomial degrees of the candidates.
    pub degrees: Vec<usize>,
    pub degree_sum: usize,
    pub expected_degree_sum: usize,
    /// Constant `c` with `det = c * prod_{alpha in I} alpha`, when the
    /// division succeeds.
    pub constant: Option<Rational>,
    /// `det - c * prod` recomputed and identically zero.
    pub residual_zero: bool,
    /// The symbolic determinant re-verified by rational evaluation.
    pub evaluation_agrees: bool,
}

impl SaitoCertificate {
    pub fn holds(&self) -> bool {
        self.logarithmic
            && self.degree_sum == self.expected_degree_sum
            && self
                .constant
                .as_ref()
                .is_some_and(|c| !c.is_zero())
            && self.residual_zero
            && self.evaluation_agrees
    }
}

/// Saito's criterion: `n` logarithmic derivations form a basis of `D(A_I)`
/// iff their coefficient determinant is a nonzero constant multiple of the
/// product of the defining forms (degree sum then matches `|I|`).
pub fn saito_certificate(
    rs: &RootSystem,
    thetas: &[Derivation],
    ideal: &LowerIdeal,
) -> Result<SaitoCertificate> {
    let n = rs.rank();
    if thetas.len() != n {
        return Err(Error::ConsistencyFailure(format!(
            "expected {} derivations, got {}",
            n,
            thetas.len()
        )));
    }
    let mut logarithmic = true;
    for theta in thetas {
        if !is_logarithmic(rs, theta, ideal)? {
            logarithmic = false;
        }
    }
    let degrees: Vec<usize> = thetas
        .iter()
        .map(|t| t.degree())
        .collect::<Result<_>>()?;
    let degree_sum: usize = degrees.iter().sum();

    // Saito matrix over the reduced ring: row i, column k is theta_i(x_k).
    let matrix: Vec<Vec<Polynomial>> = thetas
        .iter()
        .map(|t| (0..n).map(|k| rs.reduce(&t.coeffs()[k])).collect())
        .collect();
    let det = poly_det(&matrix, n);

    // Divide by each defining form; a nonzero constant must remain.
    let mut quotient = det.clone();
    let mut constant = None;
    let mut product = Polynomial::one(n);
    let mut divisible = true;
    for r in ideal.root_indices() {
        let form = rs.reduce(&rs.roots()[r].form);
        product = &product * &form;
        if divisible {
            match quotient.divide_by_linear(&form) {
                Some(q) => quotient = q,
                None => divisible = false,
            }
        }
    }
    if divisible && !quotient.is_zero() && quotient.degree() == Some(0) {
        constant = Some(quotient.constant_term());
    } else if divisible && quotient.is_zero() {
        constant = Some(Rational::zero());
    }
    let residual_zero = match &constant {
        Some(c) => (&det - &product.scale(c)).is_zero(),
        None => false,
    };

    // Independent numeric path: evaluate the matrix at a fixed rational
    // point and compare determinants.
    let point: Vec<Rational> = (0..n).map(|k| rat(PRIMES[k % PRIMES.len()])).collect();
    let numeric = RationalMatrix::from_rows(
        matrix
            .iter()
            .map(|row| row.iter().map(|p| p.eval(&point).expect("arity")).collect())
            .collect(),
    )
    .det();
    let evaluation_agrees = numeric == det.eval(&point).expect("arity");

    Ok(SaitoCertificate {
        logarithmic,
        degrees,
        degree_sum,
        expected_degree_sum: ideal.len(),
        constant,
        residual_zero,
        evaluation_agrees,
    })
}

const PRIMES: [i64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

/// Cofactor expansion with memoization over column subsets.
fn poly_det(matrix: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let n = matrix.len();
    if n == 0 {
        return Polynomial::one(nvars);
    }
    let full: u32 = (1 << n) - 1;
    let mut memo: Vec<Option<Polynomial>> = vec![None; 1 << n];
    memo[0] = Some(Polynomial::one(nvars));
    fn minor(
        matrix: &[Vec<Polynomial>],
        mask: u32,
        memo: &mut Vec<Option<Polynomial>>,
        nvars: usize,
    ) -> Polynomial {
        if let Some(p) = &memo[mask as usize] {
            return p.clone();
        }
        let row = mask.count_ones() as usize - 1;
        let mut acc = Polynomial::zero(nvars);
        // cofactor sign (-1)^(row + position of col among present columns)
        let mut sign = row % 2 == 1;
        for col in 0..matrix.len() {
            if mask >> col & 1 == 0 {
                continue;
            }
            let sub = minor(matrix, mask & !(1 << col), memo, nvars);
            let term = &matrix[row][col] * &sub;
            acc = if sign { &acc - &term } else { &acc + &term };
            sign = !sign;
        }
        memo[mask as usize] = Some(acc.clone());
        acc
    }
    minor(matrix, full, &mut memo, nvars)
}

/// Generators `f_i = (1/2) psi_{i,h(i)}(Q)` of the ideal `a(I)`, reduced.
#[derive(Clone, Debug)]
pub struct IdealGenerators {
    /// Canonical reduced generators, one per rank.
    pub gens: Vec<Polynomial>,
    /// `deg f_i = h(i) - i + 1`.
    pub degrees: Vec<usize>,
}

pub fn ideal_generators(rs: &RootSystem, h: &HessenbergFunction) -> Result<IdealGenerators> {
    let thetas = psi_basis(rs, h)?;
    let q = rs.invariant_quadratic();
    let half = Rational::one() / rat(2);
    let mut gens = Vec::with_capacity(thetas.len());
    let mut degrees = Vec::with_capacity(thetas.len());
    for (i, theta) in thetas.iter().enumerate() {
        let f = rs.reduce(&theta.apply(&q)?.scale(&half));
        if f.is_zero() {
            return Err(Error::ConsistencyFailure(format!(
                "generator {} of a(I) vanished",
                i + 1
            )));
        }
        let expected = h.values[i] - (i + 1) + 1;
        let degree = f.homogeneous_degree()?;
        if degree != expected {
            return Err(Error::ConsistencyFailure(format!(
                "generator {} has degree {}, expected {}",
                i + 1,
                degree,
                expected
            )));
        }
        degrees.push(degree);
        gens.push(f);
    }
    Ok(IdealGenerators { gens, degrees })
}

pub fn ideal_generators_for_ideal(rs: &RootSystem, ideal: &LowerIdeal) -> Result<IdealGenerators> {
    let h = hessenberg_from_ideal(rs, ideal)?;
    ideal_generators(rs, &h)
}

/// Verifies that the closed forms satisfy the defining recursions across
/// the whole tableau: `f/psi_{i,j} = f/psi_{i-1,j-1} + alpha_{i,j} *
/// f/psi_{i,j-1}` with `f/psi_{0,*} = 0`.
pub fn check_recursion(rs: &RootSystem) -> Result<bool> {
    match rs.family() {
        Family::A => {
            let n = rs.rank() + 1;
            let m = n;
            let f = |i: usize, j: usize| -> Polynomial {
                if i == 0 {
                    return Polynomial::zero(m);
                }
                let mut acc = Polynomial::zero(m);
                for k in 1..=i {
                    let mut prod = Polynomial::var(k - 1, m);
                    for l in (i + 1)..=j {
                        prod = &prod * &(&Polynomial::var(k - 1, m) - &Polynomial::var(l - 1, m));
                    }
                    acc = &acc + &prod;
                }
                acc
            };
            for i in 1..=n {
                let mut expect = Polynomial::zero(m);
                for k in 1..=i {
                    expect = &expect + &Polynomial::var(k - 1, m);
                }
                if f(i, i) != expect {
                    return Ok(false);
                }
            }
            for i in 1..n {
                for j in (i + 1)..=n {
                    let step = &(&Polynomial::var(i - 1, m) - &Polynomial::var(j - 1, m))
                        * &f(i, j - 1);
                    if f(i, j) != &f(i - 1, j - 1) + &step {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        Family::B | Family::C | Family::G => {
            let positions: Vec<(usize, usize)> = rs
                .roots()
                .iter()
                .map(|r| r.tableau)
                .collect();
            for &(i, j) in &positions {
                let lhs = psi_tableau(rs, i, j)?;
                let prev = if i == 1 {
                    None
                } else {
                    Some(psi_tableau(rs, i - 1, j - 1)?)
                };
                let west = psi_tableau(rs, i, j - 1)?;
                let entry = tableau_entry(rs, i, j)?;
                let m = rs.ambient_dim();
                for k in 0..m {
                    let mut rhs = &entry * &west.coeffs()[k];
                    if let Some(p) = &prev {
                        rhs = &rhs + &p.coeffs()[k];
                    }
                    if rs.reduce(&lhs.coeffs()[k]) != rs.reduce(&rhs) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        Family::D => Err(Error::UnsupportedRootSystem(
            "no recursion to check for type D".into(),
        )),
    }
}
