//! Positive roots, simple roots, heights, the root partial order, and Weyl
//! groups for types A, B, C, D and G2, all in concrete coordinates.
//!
//! Types A and G2 live in one more ambient coordinate than their rank, modulo
//! the relation `x1 + ... + xm = 0`; canonical reduced forms eliminate the
//! last variable. Types B, C, D use the rank itself as ambient dimension.

mod weyl;

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyalg::{rat, Monomial, Polynomial, Rational, RationalMatrix};

pub use weyl::{enumerate_weyl_group, WeylElement, WeylGroup, DEFAULT_WEYL_BOUND};

/// `(root form, tableau entry, tableau position)` triple used while
/// constructing a root system.
type RawRoot = (Polynomial, Polynomial, (usize, usize));

/// Maximum number of positive roots representable in the bitsets used
/// throughout the crate.
pub const MAX_POSITIVE_ROOTS: usize = 128;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G => "G",
        };
        write!(f, "{}", s)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::UnsupportedRootSystem(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Self {
        RootSystemType { family, rank }
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A positive root with its tableau position and simple-root coordinates.
#[derive(Clone, Debug)]
pub struct Root {
    /// Ambient linear form (trace-free representative for types A and G2).
    pub form: Polynomial,
    /// Tableau entry used in the psi/f formulas. Differs from `form` only at
    /// the type-C slots `j = 2n+1-i`, where the entry is `x_i` while the root
    /// itself is `2x_i`.
    pub tableau_form: Polynomial,
    /// Coefficients over the simple roots.
    pub simple_coords: Vec<u32>,
    /// Sum of the simple-root coefficients.
    pub height: usize,
    /// 1-based tableau position `(i, j)`.
    pub tableau: (usize, usize),
}

/// A root system in concrete coordinates, with lookup tables for root
/// actions and the partial order. Immutable after construction.
pub struct RootSystem {
    kind: RootSystemType,
    ambient: usize,
    roots: Vec<Root>,
    simple: Vec<usize>,
    below: Vec<u128>,
    lookup: HashMap<Polynomial, (usize, bool)>,
}

impl RootSystem {
    /// Builds the root system, enumerating positive roots in tableau order.
    pub fn build(kind: RootSystemType) -> Result<RootSystem> {
        let n = kind.rank;
        let (ambient, raw): (usize, Vec<RawRoot>) =
            match kind.family {
                Family::A => {
                    if n < 1 {
                        return Err(Error::UnsupportedRootSystem(format!("{}", kind)));
                    }
                    (n + 1, roots_a(n))
                }
                Family::B => {
                    if n < 1 {
                        return Err(Error::UnsupportedRootSystem(format!("{}", kind)));
                    }
                    (n, roots_bc(n, false))
                }
                Family::C => {
                    if n < 1 {
                        return Err(Error::UnsupportedRootSystem(format!("{}", kind)));
                    }
                    (n, roots_bc(n, true))
                }
                Family::D => {
                    if n < 2 {
                        return Err(Error::UnsupportedRootSystem(format!("{}", kind)));
                    }
                    (n, roots_d(n))
                }
                Family::G => {
                    if n != 2 {
                        return Err(Error::UnsupportedRootSystem(format!("{}", kind)));
                    }
                    (3, roots_g2())
                }
            };
        if raw.len() > MAX_POSITIVE_ROOTS {
            return Err(Error::BoundExceeded {
                what: "number of positive roots",
                actual: raw.len(),
                max: MAX_POSITIVE_ROOTS,
            });
        }

        // Simple roots sit at j = i+1 (first column of each row); type D has
        // the extra fork root x_{n-1} + x_n at the end of row n-1.
        let mut simple: Vec<usize> = raw
            .iter()
            .enumerate()
            .filter(|(_, (_, _, (i, j)))| *j == *i + 1)
            .map(|(idx, _)| idx)
            .collect();
        if kind.family == Family::D {
            let fork = raw
                .iter()
                .position(|(_, _, t)| *t == (n - 1, n + 1))
                .expect("fork root present");
            simple.push(fork);
        }
        debug_assert_eq!(simple.len(), n);

        // Simple-root coordinates by exact linear solve.
        let simple_vecs: Vec<Vec<Rational>> = simple
            .iter()
            .map(|&s| form_coeffs(&raw[s].0, ambient))
            .collect();
        let mut roots = Vec::with_capacity(raw.len());
        for (form, tableau_form, tableau) in &raw {
            let coords = simple_root_coordinates(&form_coeffs(form, ambient), &simple_vecs)?;
            let height = coords.iter().map(|&c| c as usize).sum();
            roots.push(Root {
                form: form.clone(),
                tableau_form: tableau_form.clone(),
                simple_coords: coords,
                height,
                tableau: *tableau,
            });
        }

        let mut below = vec![0u128; roots.len()];
        for (i, a) in roots.iter().enumerate() {
            for (j, b) in roots.iter().enumerate() {
                let le = a
                    .simple_coords
                    .iter()
                    .zip(&b.simple_coords)
                    .all(|(x, y)| x <= y);
                if le {
                    below[j] |= 1u128 << i;
                }
            }
        }

        let mut rs = RootSystem {
            kind,
            ambient,
            roots,
            simple,
            below,
            lookup: HashMap::new(),
        };
        let mut lookup = HashMap::new();
        for (i, r) in rs.roots.iter().enumerate() {
            lookup.insert(rs.reduce(&r.form), (i, false));
            lookup.insert(rs.reduce(&-&r.form), (i, true));
        }
        rs.lookup = lookup;
        Ok(rs)
    }

    pub fn kind(&self) -> RootSystemType {
        self.kind
    }

    pub fn family(&self) -> Family {
        self.kind.family
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    /// Ambient variable count: rank+1 for A and G2, rank otherwise.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    /// Indices of the simple roots in enumeration order.
    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    /// `a <= b` in the root order: `b - a` has non-negative simple coords.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b] & (1u128 << a) != 0
    }

    /// Mask of all roots `<=` root `i`, including `i` itself.
    pub fn below_mask(&self, i: usize) -> u128 {
        self.below[i]
    }

    /// Classifies an ambient linear form as `+root` or `-root`.
    pub fn classify_form(&self, form: &Polynomial) -> Option<(usize, bool)> {
        self.lookup.get(&self.reduce(form)).copied()
    }

    /// Looks up a positive root given in ambient coordinates.
    pub fn root_index_of(&self, form: &Polynomial) -> Result<usize> {
        match self.classify_form(form) {
            Some((i, false)) => Ok(i),
            _ => Err(Error::NotARoot(form.to_string())),
        }
    }

    /// Canonical form in the reduced polynomial ring: for A/G2 substitutes
    /// `xm -> -(x1+...+x_{m-1})` and drops the last variable.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.ambient);
        if self.ambient == self.kind.rank {
            return p.clone();
        }
        let m = self.ambient;
        let mut repl = Polynomial::zero(m);
        for i in 0..m - 1 {
            repl = &repl - &Polynomial::var(i, m);
        }
        p.substitute(m - 1, &repl)
            .expect("index in range")
            .drop_last_var()
    }

    /// Section of `reduce`: the trace-free representative, obtained by
    /// substituting `xi -> xi - (x1+...+xm)/m`. Identity for B/C/D.
    pub fn lift(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.kind.rank);
        if self.ambient == self.kind.rank {
            return p.clone();
        }
        let m = self.ambient;
        let mut sum = Polynomial::zero(m);
        for i in 0..m {
            sum = &sum + &Polynomial::var(i, m);
        }
        let avg = sum.scale(&(-Rational::one() / rat(m as i64)));
        let replacements: Vec<Polynomial> = (0..m - 1)
            .map(|i| &Polynomial::var(i, m) + &avg)
            .collect();
        p.substitute_all(&replacements).expect("consistent arity")
    }

    /// The invariant quadratic form `x1^2 + ... + xm^2`.
    pub fn invariant_quadratic(&self) -> Polynomial {
        let m = self.ambient;
        let mut q = Polynomial::zero(m);
        for i in 0..m {
            q = &q + &Polynomial::var(i, m).pow(2);
        }
        q
    }

    /// Half the sum of the positive roots, in ambient coordinates.
    pub fn rho(&self) -> Polynomial {
        let mut s = Polynomial::zero(self.ambient);
        for r in &self.roots {
            s = &s + &r.form;
        }
        s.scale(&(Rational::one() / rat(2)))
    }

    /// A rational point where every simple root evaluates to 1; regular for
    /// the whole Weyl arrangement.
    pub fn dominant_point(&self) -> Vec<Rational> {
        let n = self.kind.rank;
        match self.kind.family {
            Family::A => (0..=n).rev().map(|i| rat(i as i64)).collect(),
            Family::B => (1..=n).rev().map(|i| rat(i as i64)).collect(),
            Family::C => (1..=n)
                .rev()
                .map(|i| rat(2 * i as i64 - 1) / rat(2))
                .collect(),
            Family::D => (0..n).rev().map(|i| rat(i as i64)).collect(),
            Family::G => vec![rat(0), rat(-1), rat(2)],
        }
    }

    /// Classical order of the Weyl group.
    pub fn weyl_order(&self) -> usize {
        let n = self.kind.rank;
        let fact = |k: usize| (1..=k).product::<usize>();
        match self.kind.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1 << n) * fact(n),
            Family::D => (1 << (n - 1)) * fact(n),
            Family::G => 12,
        }
    }

    /// Hasse diagram (cover relations) of the root order, as index pairs.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let nr = self.roots.len();
        let mut edges = Vec::new();
        for a in 0..nr {
            for b in 0..nr {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let strictly_between = (0..nr).any(|c| {
                    c != a && c != b && self.leq(a, c) && self.leq(c, b)
                });
                if !strictly_between {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    /// JSON dump: ordered positive roots, heights, Hasse edges, Weyl order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "family": self.kind.family.to_string(),
            "rank": self.kind.rank,
            "ambient_vars": self.ambient,
            "positive_roots": self.roots.iter().enumerate().map(|(i, r)| {
                serde_json::json!({
                    "index": i,
                    "tableau": [r.tableau.0, r.tableau.1],
                    "form": r.form.to_string(),
                    "simple_coords": r.simple_coords,
                    "height": r.height,
                })
            }).collect::<Vec<_>>(),
            "simple_root_indices": self.simple,
            "hasse_edges": self.hasse_edges().iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>(),
            "weyl_group_order": self.weyl_order(),
        })
    }
}

fn form_coeffs(p: &Polynomial, nvars: usize) -> Vec<Rational> {
    (0..nvars)
        .map(|i| p.coefficient(&Monomial::var(nvars, i)))
        .collect()
}

/// Solves `sum_k c_k alpha_k = root` for non-negative integer `c`.
fn simple_root_coordinates(root: &[Rational], simple: &[Vec<Rational>]) -> Result<Vec<u32>> {
    let m = root.len();
    let n = simple.len();
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<Rational> = simple.iter().map(|s| s[i].clone()).collect();
        row.push(root[i].clone());
        rows.push(row);
    }
    let mut mat = RationalMatrix::from_rows(rows);
    let pivots = mat.rref();
    let mut coords = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        if c == n {
            return Err(Error::ConsistencyFailure(
                "root outside the simple-root span".into(),
            ));
        }
        coords[c] = mat.get(r, n).clone();
    }
    coords
        .iter()
        .map(|c| {
            if c.is_integer() && !c.is_negative() {
                Ok(u32::try_from(c.to_integer()).expect("small coordinate"))
            } else {
                Err(Error::ConsistencyFailure(format!(
                    "non-integral simple coordinate {}",
                    c
                )))
            }
        })
        .collect()
}

fn xvar(i: usize, m: usize) -> Polynomial {
    Polynomial::var(i, m)
}

/// Type A rank n: roots `x_i - x_j` in n+1 ambient variables, row-major over
/// the strict upper triangle.
fn roots_a(n: usize) -> Vec<RawRoot> {
    let m = n + 1;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=m {
            let f = &xvar(i - 1, m) - &xvar(j - 1, m);
            out.push((f.clone(), f, (i, j)));
        }
    }
    out
}

/// Types B (long = false rows of `x_i`) and C: rows of the triangular region
/// `i+1 <= j <= 2n+1-i`. For C the slot `j = 2n+1-i` holds the root `2x_i`
/// with tableau entry `x_i`.
fn roots_bc(n: usize, is_c: bool) -> Vec<RawRoot> {
    let m = n;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=(2 * n + 1 - i) {
            let (form, entry) = if j <= n {
                let f = &xvar(i - 1, m) - &xvar(j - 1, m);
                (f.clone(), f)
            } else if !is_c {
                if j == n + 1 {
                    let f = xvar(i - 1, m);
                    (f.clone(), f)
                } else {
                    let jp = 2 * n + 2 - j;
                    let f = &xvar(i - 1, m) + &xvar(jp - 1, m);
                    (f.clone(), f)
                }
            } else if j == 2 * n + 1 - i {
                (xvar(i - 1, m).scale(&rat(2)), xvar(i - 1, m))
            } else {
                let jp = 2 * n + 1 - j;
                let f = &xvar(i - 1, m) + &xvar(jp - 1, m);
                (f.clone(), f)
            };
            out.push((form, entry, (i, j)));
        }
    }
    out
}

/// Type D rank n: rows `x_i - x_{i+1}, ..., x_i - x_n, x_i + x_n, ...,
/// x_i + x_{i+1}`; no Hessenberg tableau is attached to this type.
fn roots_d(n: usize) -> Vec<RawRoot> {
    let m = n;
    let mut out = Vec::new();
    for i in 1..=(n - 1) {
        let mut j = i + 1;
        for k in (i + 1)..=n {
            let f = &xvar(i - 1, m) - &xvar(k - 1, m);
            out.push((f.clone(), f, (i, j)));
            j += 1;
        }
        for k in ((i + 1)..=n).rev() {
            let f = &xvar(i - 1, m) + &xvar(k - 1, m);
            out.push((f.clone(), f, (i, j)));
            j += 1;
        }
    }
    out
}

/// Type G2 in three trace-zero ambient coordinates.
fn roots_g2() -> Vec<RawRoot> {
    let lf = |a: i64, b: i64, c: i64| Polynomial::linear_form(&[rat(a), rat(b), rat(c)]);
    let data = [
        (lf(1, -1, 0), (1, 2)),
        (lf(-1, 0, 1), (1, 3)),
        (lf(0, -1, 1), (1, 4)),
        (lf(1, -2, 1), (1, 5)),
        (lf(-1, -1, 2), (1, 6)),
        (lf(-2, 1, 1), (2, 3)),
    ];
    data.into_iter().map(|(f, t)| (f.clone(), f, t)).collect()
}
