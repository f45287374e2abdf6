use std::collections::{HashMap, VecDeque};

use num_traits::Zero;

use super::{Family, RootSystem};
use crate::error::{Error, Result};
use crate::polyalg::{Monomial, Polynomial, Rational};

/// Default cap on the Weyl group size for full enumeration.
pub const DEFAULT_WEYL_BOUND: usize = 1_000_000;

/// One element of a Weyl group, realized as a signed coordinate permutation
/// `x_i -> signs[i] * x_{perm[i]}` of the ambient variables.
///
/// Type A uses trivial signs, types B/C/D arbitrary and even sign vectors,
/// and G2 a global sign (its Weyl group is exactly the signed permutation
/// group {+-sigma} on the three trace-zero coordinates).
#[derive(Clone, Debug)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
    inversions: u128,
    word: Vec<usize>,
    det: i8,
}

impl WeylElement {
    fn raw(perm: Vec<usize>, signs: Vec<i8>) -> WeylElement {
        WeylElement {
            perm,
            signs,
            inversions: 0,
            word: Vec::new(),
            det: 0,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    /// `N(w)` as a bitset over the positive-root indices.
    pub fn inversion_mask(&self) -> u128 {
        self.inversions
    }

    /// `|N(w)|`, which equals the length in simple reflections.
    pub fn length(&self) -> usize {
        self.inversions.count_ones() as usize
    }

    /// A reduced word in simple-reflection indices (0-based).
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Compact display form of the reduced word, `e` for the identity.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word
                .iter()
                .map(|k| format!("s{}", k + 1))
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// Determinant of the action on the reflection representation. For the
    /// trace-zero models (A, G2) this divides out the sign on the line
    /// `x1 + ... + xm`, which the group fixes only up to sign.
    pub fn determinant(&self) -> i8 {
        self.det
    }

    fn ambient_determinant(&self) -> i8 {
        let mut seen = vec![false; self.perm.len()];
        let mut sign = 1i8;
        for start in 0..self.perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        for &s in &self.signs {
            sign *= s;
        }
        sign
    }

    /// Induced action on ambient polynomials by coordinate substitution.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.perm.len());
        let nvars = p.nvars();
        let mut out = Polynomial::zero(nvars);
        for (m, c) in p.terms() {
            let mut exps = vec![0u32; nvars];
            let mut coeff = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[self.perm[i]] += e;
                if self.signs[i] < 0 && e % 2 == 1 {
                    coeff = -coeff;
                }
            }
            out.add_term(Monomial::new(exps), coeff);
        }
        out
    }

    fn key(&self) -> Vec<i32> {
        self.perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| (p as i32 + 1) * s as i32)
            .collect()
    }
}

/// A fully enumerated Weyl group with cached root actions, inverses,
/// reflections and reduced words.
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i32>, usize>,
    inverse: Vec<usize>,
    simple_refl: Vec<usize>,
    refl_of_root: Vec<usize>,
    /// `root_action[w][r] = (index of the root +-w(alpha_r), negated?)`
    root_action: Vec<Vec<(u16, bool)>>,
}

/// Enumerates the full Weyl group. Fails when the classical order exceeds
/// `max_order`.
pub fn enumerate_weyl_group(rs: &RootSystem, max_order: usize) -> Result<WeylGroup> {
    let order = rs.weyl_order();
    if order > max_order {
        return Err(Error::BoundExceeded {
            what: "Weyl group order",
            actual: order,
            max: max_order,
        });
    }
    let m = rs.ambient_dim();
    let mut elements: Vec<WeylElement> = Vec::with_capacity(order);
    match rs.family() {
        Family::A => {
            for perm in permutations(m) {
                elements.push(WeylElement::raw(perm, vec![1; m]));
            }
        }
        Family::B | Family::C | Family::D => {
            let even_only = rs.family() == Family::D;
            for perm in permutations(m) {
                for bits in 0..(1usize << m) {
                    if even_only && bits.count_ones() % 2 == 1 {
                        continue;
                    }
                    let signs: Vec<i8> = (0..m)
                        .map(|i| if bits >> i & 1 == 1 { -1 } else { 1 })
                        .collect();
                    elements.push(WeylElement::raw(perm.clone(), signs));
                }
            }
        }
        Family::G => {
            for perm in permutations(3) {
                for &sign in &[1i8, -1] {
                    elements.push(WeylElement::raw(perm.clone(), vec![sign; 3]));
                }
            }
        }
    }
    if elements.len() != order {
        return Err(Error::ConsistencyFailure(format!(
            "enumerated {} Weyl elements, expected {}",
            elements.len(),
            order
        )));
    }
    assert!(elements[0].is_identity());

    let index: HashMap<Vec<i32>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.key(), i))
        .collect();

    // Root actions, inversion sets, and reflection-representation
    // determinants (the trace-zero models carry an extra fixed-up-to-sign
    // line whose sign must be divided out).
    let quotient_line = rs.ambient_dim() != rs.rank();
    let mut root_action = Vec::with_capacity(order);
    for el in &mut elements {
        el.det = el.ambient_determinant() * if quotient_line { el.signs[0] } else { 1 };
        let mut actions = Vec::with_capacity(rs.num_positive_roots());
        let mut inv = 0u128;
        for (r, root) in rs.roots().iter().enumerate() {
            let image = el.apply(&root.form);
            let (idx, neg) = rs.classify_form(&image).ok_or_else(|| {
                Error::ConsistencyFailure(format!(
                    "Weyl image {} of {} is not a root",
                    image, root.form
                ))
            })?;
            if neg {
                inv |= 1u128 << r;
            }
            actions.push((idx as u16, neg));
        }
        el.inversions = inv;
        root_action.push(actions);
    }

    let inverse: Vec<usize> = elements
        .iter()
        .map(|el| {
            let mut perm = vec![0usize; m];
            let mut signs = vec![1i8; m];
            for i in 0..m {
                perm[el.perm[i]] = i;
                signs[el.perm[i]] = el.signs[i];
            }
            index[&WeylElement::raw(perm, signs)
            .key()]
        })
        .collect();

    let mut group = WeylGroup {
        elements,
        index,
        inverse,
        simple_refl: Vec::new(),
        refl_of_root: Vec::new(),
        root_action,
    };

    group.refl_of_root = (0..rs.num_positive_roots())
        .map(|r| group.find_reflection(rs, r))
        .collect::<Result<Vec<_>>>()?;
    group.simple_refl = rs
        .simple_indices()
        .iter()
        .map(|&s| group.refl_of_root[s])
        .collect();
    group.assign_words();
    Ok(group)
}

impl WeylGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    /// Index of the identity element (always 0).
    pub fn identity(&self) -> usize {
        0
    }

    /// Group product: `(a * b)(p) = a(b(p))`.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let (ea, eb) = (&self.elements[a], &self.elements[b]);
        let m = ea.perm.len();
        let mut perm = vec![0usize; m];
        let mut signs = vec![1i8; m];
        for i in 0..m {
            perm[i] = ea.perm[eb.perm[i]];
            signs[i] = eb.signs[i] * ea.signs[eb.perm[i]];
        }
        self.index[&WeylElement::raw(perm, signs)
        .key()]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Index of the simple reflection `s_{alpha_{k+1}}`.
    pub fn simple_reflection(&self, k: usize) -> usize {
        self.simple_refl[k]
    }

    /// Index of the reflection through `ker alpha` for a positive root.
    pub fn reflection(&self, root_index: usize) -> usize {
        self.refl_of_root[root_index]
    }

    /// Image data of positive root `r` under element `w`.
    pub fn root_image(&self, w: usize, r: usize) -> (usize, bool) {
        let (idx, neg) = self.root_action[w][r];
        (idx as usize, neg)
    }

    /// Action on ambient polynomials.
    pub fn act(&self, w: usize, p: &Polynomial) -> Polynomial {
        self.elements[w].apply(p)
    }

    /// Action on reduced polynomials, well-defined because the coordinate
    /// action preserves the relation ideal.
    pub fn act_reduced(&self, rs: &RootSystem, w: usize, p: &Polynomial) -> Polynomial {
        if rs.ambient_dim() == rs.rank() {
            return self.act(w, p);
        }
        let ambient = p.extend_one_var();
        rs.reduce(&self.act(w, &ambient))
    }

    /// Coefficients of the length generating function `sum_w t^{|N(w)|}`.
    pub fn length_distribution(&self) -> Vec<usize> {
        let max = self
            .elements
            .iter()
            .map(|e| e.length())
            .max()
            .unwrap_or(0);
        let mut out = vec![0usize; max + 1];
        for e in &self.elements {
            out[e.length()] += 1;
        }
        out
    }

    /// The orthogonal action of a G2 element on the trace-zero plane as an
    /// exact 2x2 rational matrix in the basis {x-y, x+y-2z}.
    pub fn g2_matrix(&self, rs: &RootSystem, w: usize) -> [[Rational; 2]; 2] {
        assert_eq!(rs.family(), Family::G);
        let u = crate::polyalg::parse_polynomial("x1 - x2", 3).unwrap();
        let v = crate::polyalg::parse_polynomial("x1 + x2 - 2*x3", 3).unwrap();
        let cols: Vec<[Rational; 2]> = [&u, &v]
            .iter()
            .map(|f| {
                let img = self.act(w, f);
                // a trace-free form a*x + b*y + c*z equals p*u + q*v with
                // p = (a-b)/2, q = -c/2
                let a = img.coefficient(&Monomial::var(3, 0));
                let b = img.coefficient(&Monomial::var(3, 1));
                let c = img.coefficient(&Monomial::var(3, 2));
                let two = Rational::from_integer(2.into());
                [(&a - &b) / &two, -&c / &two]
            })
            .collect();
        [
            [cols[0][0].clone(), cols[1][0].clone()],
            [cols[0][1].clone(), cols[1][1].clone()],
        ]
    }

    fn find_reflection(&self, rs: &RootSystem, root_index: usize) -> Result<usize> {
        let root = &rs.roots()[root_index];
        let m = rs.ambient_dim();
        let repr = match rs.family() {
            Family::A | Family::B | Family::C | Family::D => {
                let coeffs: Vec<(usize, Rational)> = (0..m)
                    .map(|i| (i, root.form.coefficient(&Monomial::var(m, i))))
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                let mut perm: Vec<usize> = (0..m).collect();
                let mut signs = vec![1i8; m];
                match coeffs.as_slice() {
                    [(i, _)] => {
                        // x_i or 2x_i: sign flip
                        signs[*i] = -1;
                    }
                    [(i, ci), (j, cj)] => {
                        perm.swap(*i, *j);
                        if ci == cj {
                            // x_i + x_j: swap with both signs flipped
                            signs[*i] = -1;
                            signs[*j] = -1;
                        }
                    }
                    _ => {
                        return Err(Error::ConsistencyFailure(format!(
                            "unexpected root shape {}",
                            root.form
                        )))
                    }
                }
                WeylElement::raw(perm, signs)
                .key()
            }
            Family::G => {
                // the reflection negates alpha and fixes the mirror line
                let a = root.form.coefficient(&Monomial::var(3, 0));
                let b = root.form.coefficient(&Monomial::var(3, 1));
                let c = root.form.coefficient(&Monomial::var(3, 2));
                let kappa = Polynomial::linear_form(&[&b - &c, &c - &a, &a - &b]);
                let neg = -&root.form;
                let found = (0..self.elements.len()).find(|&w| {
                    self.act(w, &root.form) == neg && self.act(w, &kappa) == kappa
                });
                return found.ok_or_else(|| {
                    Error::ConsistencyFailure(format!("no reflection for {}", root.form))
                });
            }
        };
        self.index.get(&repr).copied().ok_or_else(|| {
            Error::ConsistencyFailure(format!("reflection of {} not in group", root.form))
        })
    }

    /// Breadth-first search from the identity assigns every element a
    /// reduced word in the simple reflections.
    fn assign_words(&mut self) {
        let mut visited = vec![false; self.elements.len()];
        let mut queue = VecDeque::new();
        visited[0] = true;
        queue.push_back(0usize);
        while let Some(w) = queue.pop_front() {
            for k in 0..self.simple_refl.len() {
                let v = self.multiply(w, self.simple_refl[k]);
                if !visited[v] {
                    visited[v] = true;
                    let mut word = self.elements[w].word.clone();
                    word.push(k);
                    self.elements[v].word = word;
                    queue.push_back(v);
                }
            }
        }
        debug_assert!(visited.iter().all(|&v| v));
    }
}

/// All permutations of `0..m` in lexicographic order (identity first).
fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    let mut used = vec![false; m];
    fn step(m: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        for i in 0..m {
            if !used[i] {
                used[i] = true;
                current.push(i);
                step(m, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    step(m, &mut current, &mut used, &mut out);
    out
}
