//! Lower ideals of the positive roots: validation, enumeration via
//! antichains, Hessenberg-function encodings, and exponents via the dual
//! partition of the height distribution.

use crate::error::{Error, Result};
use crate::rootsystem::{Family, RootSystem, RootSystemType};

/// Default cap on `|Phi+|` for full lower-ideal enumeration.
pub const DEFAULT_IDEAL_ENUM_BOUND: usize = 30;

/// A downward-closed set of positive roots, stored as a bitset over the
/// root enumeration order of its root system.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LowerIdeal {
    kind: RootSystemType,
    num_roots: usize,
    members: u128,
}

impl LowerIdeal {
    /// Validates downward closure; on failure reports a witnessing pair
    /// `alpha <= beta` with `beta` in the set and `alpha` missing.
    pub fn validate(rs: &RootSystem, members: u128) -> Result<LowerIdeal> {
        let n = rs.num_positive_roots();
        assert!(members >> n == 0, "members outside the root range");
        for b in 0..n {
            if members >> b & 1 == 0 {
                continue;
            }
            let missing = rs.below_mask(b) & !members;
            if missing != 0 {
                let a = missing.trailing_zeros() as usize;
                return Err(Error::NotDownwardClosed {
                    alpha: rs.roots()[a].form.to_string(),
                    beta: rs.roots()[b].form.to_string(),
                });
            }
        }
        Ok(LowerIdeal {
            kind: rs.kind(),
            num_roots: n,
            members,
        })
    }

    pub fn from_root_indices(rs: &RootSystem, indices: &[usize]) -> Result<LowerIdeal> {
        let mut mask = 0u128;
        for &i in indices {
            assert!(i < rs.num_positive_roots());
            mask |= 1u128 << i;
        }
        Self::validate(rs, mask)
    }

    pub fn empty(rs: &RootSystem) -> LowerIdeal {
        LowerIdeal {
            kind: rs.kind(),
            num_roots: rs.num_positive_roots(),
            members: 0,
        }
    }

    pub fn full(rs: &RootSystem) -> LowerIdeal {
        let n = rs.num_positive_roots();
        LowerIdeal {
            kind: rs.kind(),
            num_roots: n,
            members: if n == 128 { !0 } else { (1u128 << n) - 1 },
        }
    }

    pub fn kind(&self) -> RootSystemType {
        self.kind
    }

    pub fn mask(&self) -> u128 {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.num_roots
    }

    pub fn contains(&self, root_index: usize) -> bool {
        self.members >> root_index & 1 == 1
    }

    /// Member indices in root enumeration (tableau) order.
    pub fn root_indices(&self) -> Vec<usize> {
        (0..self.num_roots).filter(|&i| self.contains(i)).collect()
    }

    /// Adjoins one root, revalidating.
    pub fn with_root(&self, rs: &RootSystem, root_index: usize) -> Result<LowerIdeal> {
        Self::validate(rs, self.members | 1u128 << root_index)
    }

    /// Roots `alpha` not in the ideal with `I + {alpha}` again a lower ideal.
    pub fn addable_roots(&self, rs: &RootSystem) -> Vec<usize> {
        (0..self.num_roots)
            .filter(|&r| !self.contains(r) && (rs.below_mask(r) & !self.members) == 1u128 << r)
            .collect()
    }

    /// Number of members of each height, indexed from height 1.
    pub fn height_distribution(&self, rs: &RootSystem) -> Vec<usize> {
        let max = self
            .root_indices()
            .iter()
            .map(|&i| rs.roots()[i].height)
            .max()
            .unwrap_or(0);
        let mut out = vec![0usize; max];
        for i in self.root_indices() {
            out[rs.roots()[i].height - 1] += 1;
        }
        out
    }

    /// Exponents of the ideal arrangement: the dual partition of the height
    /// distribution, ascending. Always `rank` many entries summing to `|I|`.
    pub fn exponents(&self, rs: &RootSystem) -> Vec<usize> {
        let dist = self.height_distribution(rs);
        let n = rs.rank();
        let mut counts = Vec::with_capacity(dist.len() + 1);
        counts.push(n);
        counts.extend(dist.iter().copied());
        let mut out = Vec::with_capacity(n);
        for k in 0..counts.len() {
            let next = counts.get(k + 1).copied().unwrap_or(0);
            assert!(
                counts[k] >= next,
                "height distribution of a lower ideal is non-increasing"
            );
            for _ in 0..counts[k] - next {
                out.push(k);
            }
        }
        debug_assert_eq!(out.len(), n);
        debug_assert_eq!(out.iter().sum::<usize>(), self.len());
        out
    }

    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "family": rs.family().to_string(),
            "rank": rs.rank(),
            "size": self.len(),
            "members": self
                .root_indices()
                .iter()
                .map(|&i| rs.roots()[i].form.to_string())
                .collect::<Vec<_>>(),
            "hessenberg": hessenberg_from_ideal(rs, self).ok().map(|h| h.values),
        })
    }
}

/// Enumerates every lower ideal exactly once by iterating antichains of the
/// root poset (each ideal is the down-closure of its maximal elements).
/// Results are sorted by size, then by bitset value.
pub fn enumerate_lower_ideals(rs: &RootSystem, max_roots: usize) -> Result<Vec<LowerIdeal>> {
    let n = rs.num_positive_roots();
    if n > max_roots {
        return Err(Error::BoundExceeded {
            what: "number of positive roots",
            actual: n,
            max: max_roots,
        });
    }
    let below: Vec<u128> = (0..n).map(|i| rs.below_mask(i)).collect();
    let mut masks = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    dfs_antichains(rs, &below, 0, &mut chosen, 0, &mut masks);
    masks.sort_by_key(|&m| (m.count_ones(), m));
    Ok(masks
        .into_iter()
        .map(|members| LowerIdeal {
            kind: rs.kind(),
            num_roots: n,
            members,
        })
        .collect())
}

fn dfs_antichains(
    rs: &RootSystem,
    below: &[u128],
    start: usize,
    chosen: &mut Vec<usize>,
    ideal: u128,
    out: &mut Vec<u128>,
) {
    out.push(ideal);
    for r in start..below.len() {
        let incomparable = chosen.iter().all(|&c| !rs.leq(c, r) && !rs.leq(r, c));
        if incomparable {
            chosen.push(r);
            dfs_antichains(rs, below, r + 1, chosen, ideal | below[r], out);
            chosen.pop();
        }
    }
}

/// Which Hessenberg encoding a root system carries. Type D has none.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HessFlavor {
    A,
    BC,
    G2,
}

impl HessFlavor {
    pub fn of(family: Family) -> Option<HessFlavor> {
        match family {
            Family::A => Some(HessFlavor::A),
            Family::B | Family::C => Some(HessFlavor::BC),
            Family::G => Some(HessFlavor::G2),
            Family::D => None,
        }
    }
}

/// A Hessenberg function: the step-function encoding of a lower ideal.
/// Values are 1-based, one per tableau row (type A carries one per
/// coordinate, with the last forced).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HessenbergFunction {
    pub values: Vec<usize>,
    pub flavor: HessFlavor,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>, flavor: HessFlavor) -> Self {
        HessenbergFunction { values, flavor }
    }

    /// Checks the defining conditions of the flavor.
    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        let h = &self.values;
        let fail = |msg: String| Err(Error::InvalidHessenberg(msg));
        match self.flavor {
            HessFlavor::A => {
                let n = rs.rank() + 1;
                if h.len() != n {
                    return fail(format!("expected {} values, got {}", n, h.len()));
                }
                for (i, &v) in h.iter().enumerate() {
                    let i1 = i + 1;
                    if v < i1 || v > n {
                        return fail(format!("h({}) = {} out of range [{}, {}]", i1, v, i1, n));
                    }
                }
                if h.windows(2).any(|w| w[0] > w[1]) {
                    return fail("values must be non-decreasing".into());
                }
            }
            HessFlavor::BC => {
                let n = rs.rank();
                if h.len() != n {
                    return fail(format!("expected {} values, got {}", n, h.len()));
                }
                for (i, &v) in h.iter().enumerate() {
                    let i1 = i + 1;
                    if v < i1 || v > 2 * n + 1 - i1 {
                        return fail(format!(
                            "h({}) = {} out of range [{}, {}]",
                            i1,
                            v,
                            i1,
                            2 * n + 1 - i1
                        ));
                    }
                }
                for i in 0..n {
                    let i1 = i + 1;
                    if h[i] == 2 * n + 1 - i1 {
                        for (k, &hk) in h.iter().enumerate().skip(i + 1) {
                            if hk != 2 * n + 1 - (k + 1) {
                                return fail(format!(
                                    "h({}) is maximal so h({}) must be {}",
                                    i1,
                                    k + 1,
                                    2 * n + 1 - (k + 1)
                                ));
                            }
                        }
                    } else if i + 1 < n && h[i] > h[i + 1] {
                        return fail(format!("h({}) > h({})", i1, i1 + 1));
                    }
                }
            }
            HessFlavor::G2 => {
                if h.len() != 2 {
                    return fail(format!("expected 2 values, got {}", h.len()));
                }
                if h[0] < 1 || h[0] > 6 || h[1] < 2 || h[1] > 3 {
                    return fail(format!("values ({}, {}) out of range", h[0], h[1]));
                }
                if h[0] >= 3 && h[1] != 3 {
                    return fail("h(1) >= 3 forces h(2) = 3".into());
                }
            }
        }
        Ok(())
    }
}

/// The lower ideal `{alpha_{i,j} : i < j <= h(i)}` of a valid Hessenberg
/// function.
pub fn ideal_from_hessenberg(h: &HessenbergFunction, rs: &RootSystem) -> Result<LowerIdeal> {
    match HessFlavor::of(rs.family()) {
        Some(f) if f == h.flavor => {}
        _ => {
            return Err(Error::InvalidHessenberg(format!(
                "flavor {:?} does not match root system {}",
                h.flavor,
                rs.kind()
            )))
        }
    }
    h.validate(rs)?;
    let mut mask = 0u128;
    for (idx, root) in rs.roots().iter().enumerate() {
        let (i, j) = root.tableau;
        if i <= h.values.len() && j <= h.values[i - 1] {
            mask |= 1u128 << idx;
        }
    }
    LowerIdeal::validate(rs, mask)
}

/// Inverse of `ideal_from_hessenberg`: reads the row lengths back off.
pub fn hessenberg_from_ideal(rs: &RootSystem, ideal: &LowerIdeal) -> Result<HessenbergFunction> {
    let Some(flavor) = HessFlavor::of(rs.family()) else {
        return Err(Error::InvalidHessenberg(format!(
            "{} has no Hessenberg encoding",
            rs.kind()
        )));
    };
    let rows = match flavor {
        HessFlavor::A => rs.rank() + 1,
        HessFlavor::BC => rs.rank(),
        HessFlavor::G2 => 2,
    };
    let mut values: Vec<usize> = (1..=rows).collect();
    for idx in ideal.root_indices() {
        let (i, j) = rs.roots()[idx].tableau;
        if j > values[i - 1] {
            values[i - 1] = j;
        }
    }
    let h = HessenbergFunction::new(values, flavor);
    h.validate(rs)?;
    Ok(h)
}
